#include "rankforge/attack_support.hpp"

#include <chrono>
#include <cmath>

#include "rankforge/parallel.hpp"

namespace rankforge {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_seconds(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::uint64_t default_max_trials(double predicted) {
    double cap = 64.0 * std::max(predicted, 1.0);
    if (cap > 1e12) return static_cast<std::uint64_t>(1e12);
    return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::ceil(cap)));
}

/// Walks the affine set particular + GF(q)-combinations of the kernel vectors
/// in odometer order, calling visit(e) until it returns true or the cap runs out.
template <typename Visit>
void scan_affine_set(const Field& ext, const SupportSolveSet& set, bool skip_zero_combo,
                     std::uint64_t cap, Visit&& visit) {
    if (!set.consistent) return;
    std::uint64_t q = ext.q();
    std::size_t d = set.kernel.size();
    std::vector<std::uint32_t> combo(d, 0);
    std::vector<Field::Elt> e = set.particular;
    std::uint64_t seen = 0;
    while (seen < cap) {
        if (!(skip_zero_combo && seen == 0)) {
            if (visit(e)) return;
        }
        ++seen;
        // odometer increment; recompute e from scratch (desk-scale sizes)
        std::size_t pos = 0;
        while (pos < d) {
            if (++combo[pos] < q) break;
            combo[pos] = 0;
            ++pos;
        }
        if (pos == d) return;
        e = set.particular;
        for (std::size_t t = 0; t < d; ++t) {
            if (combo[t] == 0) continue;
            for (std::size_t j = 0; j < e.size(); ++j)
                e[j] = ext.add(e[j], ext.scale(set.kernel[t][j], combo[t]));
        }
    }
}

std::optional<std::vector<Field::Elt>> recover_message(const RsdInstance& inst,
                                                       std::span<const Field::Elt> e) {
    const Field& f = *inst.ext;
    std::vector<Field::Elt> b(inst.params.n);
    for (unsigned j = 0; j < inst.params.n; ++j) b[j] = f.sub(inst.y[j], e[j]);
    auto sol = solve(inst.G.transposed(), b);
    if (!sol.consistent) return std::nullopt;
    return sol.particular;
}

}  // namespace

SupportSolveSet solve_in_support(const Matrix& H, std::span<const Field::Elt> s,
                                 std::span<const Field::Elt> E_basis) {
    const FieldRef& extref = H.field();
    const Field& ext = *extref;
    FieldRef base = make_field(ext.q(), 1);
    std::size_t rows_ext = H.rows();
    std::size_t n = H.cols();
    std::size_t rp = E_basis.size();
    unsigned m = ext.m();
    if (s.size() != rows_ext) throw std::invalid_argument("solve_in_support: syndrome length");

    Matrix A(base, rows_ext * m, n * rp);
    std::vector<Field::Elt> b(rows_ext * m);
    for (std::size_t t = 0; t < rows_ext; ++t) {
        auto sc = ext.coords(s[t]);
        for (unsigned l = 0; l < m; ++l) b[t * m + l] = sc[l];
        for (std::size_t i = 0; i < n; ++i) {
            Field::Elt h = H.at(t, i);
            if (h == 0) continue;
            for (std::size_t j = 0; j < rp; ++j) {
                auto c = ext.coords(ext.mul(h, E_basis[j]));
                for (unsigned l = 0; l < m; ++l) A.at(t * m + l, i * rp + j) = c[l];
            }
        }
    }
    auto sol = solve(A, b);
    SupportSolveSet out;
    out.consistent = sol.consistent;
    if (!sol.consistent) return out;

    auto to_error = [&](std::span<const Field::Elt> coeffs) {
        std::vector<Field::Elt> e(n, 0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < rp; ++j)
                if (coeffs[i * rp + j] != 0)
                    e[i] = ext.add(e[i], ext.scale(E_basis[j],
                                                   static_cast<std::uint32_t>(coeffs[i * rp + j])));
        return e;
    };
    out.particular = to_error(sol.particular);
    for (std::size_t t = 0; t < sol.kernel.rows(); ++t)
        out.kernel.push_back(to_error(sol.kernel.row(t)));
    return out;
}

unsigned es_v1_default_r_prime(const CodeParams& p) {
    return static_cast<unsigned>(static_cast<std::uint64_t>(p.n - p.k) * p.m / p.n);
}

unsigned es_v2_default_r_prime(const CodeParams& p) {
    return static_cast<unsigned>(static_cast<std::uint64_t>(p.n - p.k - 1) * p.m / p.n);
}

std::optional<RsdSolution> es_v1_try_support(const RsdInstance& inst, const Subspace& E_prime,
                                             std::uint64_t candidate_cap) {
    const Field& ext = *inst.ext;
    auto basis = E_prime.basis_elements(ext);
    auto set = solve_in_support(inst.H, syndrome(inst.H, inst.y), basis);
    std::optional<RsdSolution> found;
    scan_affine_set(ext, set, false, candidate_cap, [&](const std::vector<Field::Elt>& e) {
        if (rank_weight(ext, inst.base, e) != inst.params.r) return false;
        auto x = recover_message(inst, e);
        if (!x) return false;
        RsdSolution sol{std::move(*x), e};
        if (!verify_solution(inst, sol).accepted) return false;
        found = std::move(sol);
        return true;
    });
    return found;
}

Matrix extended_parity(const RsdInstance& inst) {
    Matrix G_ext(inst.ext, inst.params.k + 1, inst.params.n);
    for (unsigned i = 0; i < inst.params.k; ++i)
        for (unsigned j = 0; j < inst.params.n; ++j) G_ext.at(i, j) = inst.G.at(i, j);
    for (unsigned j = 0; j < inst.params.n; ++j) G_ext.at(inst.params.k, j) = inst.y[j];
    return kernel(G_ext);
}

std::optional<RsdSolution> es_v2_try_support(const RsdInstance& inst, const Matrix& H_ext,
                                             const Subspace& E_prime,
                                             std::uint64_t candidate_cap) {
    const Field& ext = *inst.ext;
    const unsigned n = inst.params.n;
    const unsigned k = inst.params.k;
    auto basis = E_prime.basis_elements(ext);
    std::vector<Field::Elt> zero_syndrome(H_ext.rows(), 0);
    auto set = solve_in_support(H_ext, zero_syndrome, basis);

    std::optional<RsdSolution> found;
    scan_affine_set(ext, set, true, candidate_cap, [&](const std::vector<Field::Elt>& z) {
        if (rank_weight(ext, inst.base, z) != inst.params.r) return false;
        // y = x G + gamma z: n equations in k+1 unknowns over GF(q^m)
        Matrix A(inst.ext, n, k + 1);
        for (unsigned j = 0; j < n; ++j) {
            for (unsigned i = 0; i < k; ++i) A.at(j, i) = inst.G.at(i, j);
            A.at(j, k) = z[j];
        }
        auto lin = solve(A, inst.y);
        if (!lin.consistent) return false;
        Field::Elt gamma = lin.particular[k];
        if (gamma == 0) return false;
        RsdSolution sol;
        sol.x.assign(lin.particular.begin(), lin.particular.begin() + k);
        sol.e.resize(n);
        for (unsigned j = 0; j < n; ++j) sol.e[j] = ext.mul(gamma, z[j]);
        if (!verify_solution(inst, sol).accepted) return false;
        found = std::move(sol);
        return true;
    });
    return found;
}

AttackReport es_attack_v1(const RsdInstance& inst, const SupportGuessConfig& config) {
    auto start = Clock::now();
    const CodeParams& p = inst.params;
    unsigned rp = config.r_prime.value_or(es_v1_default_r_prime(p));
    AttackReport rep;
    rep.predicted_trials = std::pow(static_cast<double>(p.q),
                                    static_cast<double>(p.m - rp) * p.r);
    rep.predicted_trials_floor_form =
        std::pow(static_cast<double>(p.q),
                 static_cast<double>(p.r) * (static_cast<std::uint64_t>(p.k) * p.m / p.n));
    if (p.r > rp || static_cast<std::uint64_t>(p.n) * rp >
                        static_cast<std::uint64_t>(p.n - p.k) * p.m) {
        rep.infeasible = true;
        rep.detail = "v1 requires r <= r' and n r' <= (n-k) m";
        rep.seconds = elapsed_seconds(start);
        return rep;
    }
    if (p.r == 0) {
        std::vector<Field::Elt> e(p.n, 0);
        if (auto x = recover_message(inst, e)) {
            rep.solved = true;
            rep.solution = RsdSolution{std::move(*x), std::move(e)};
            rep.trials = 1;
        } else {
            rep.detail = "r = 0 but y is not a codeword";
        }
        rep.seconds = elapsed_seconds(start);
        return rep;
    }
    std::uint64_t max_trials =
        config.max_trials ? config.max_trials : default_max_trials(rep.predicted_trials);
    auto outcome = run_trials(max_trials, config.seed, config.workers,
                              [&](std::uint64_t, std::mt19937_64& rng) {
                                  Subspace Ep = sample_subspace(inst.base, p.m, rp, rng);
                                  return es_v1_try_support(inst, Ep, config.candidate_cap);
                              });
    rep.trials = outcome.trials;
    if (outcome.result) {
        rep.solved = true;
        rep.solution = std::move(outcome.result);
    } else {
        rep.detail = "max_trials exhausted";
    }
    rep.seconds = elapsed_seconds(start);
    return rep;
}

AttackReport es_attack_v2(const RsdInstance& inst, const SupportGuessConfig& config) {
    auto start = Clock::now();
    const CodeParams& p = inst.params;
    unsigned rp = config.r_prime.value_or(es_v2_default_r_prime(p));
    AttackReport rep;
    rep.predicted_trials =
        p.r >= 1 ? std::pow(static_cast<double>(p.q), static_cast<double>(p.m - rp) * (p.r - 1))
                 : 1.0;
    rep.predicted_trials_floor_form =
        p.r >= 1 ? std::pow(static_cast<double>(p.q),
                            static_cast<double>(p.r - 1) *
                                (static_cast<std::uint64_t>(p.k + 1) * p.m / p.n))
                 : 1.0;
    if (p.n < p.k + 2 || p.r < 1) {
        rep.infeasible = true;
        rep.detail = "v2 requires n-k-1 >= 1 and r >= 1";
        rep.seconds = elapsed_seconds(start);
        return rep;
    }
    if (p.r > rp || static_cast<std::uint64_t>(p.n) * rp >
                        static_cast<std::uint64_t>(p.n - p.k - 1) * p.m) {
        rep.infeasible = true;
        rep.detail = "v2 requires r <= r' and n r' <= (n-k-1) m";
        rep.seconds = elapsed_seconds(start);
        return rep;
    }
    Matrix H_ext = extended_parity(inst);
    if (H_ext.rows() != p.n - p.k - 1) {
        rep.infeasible = true;
        rep.detail = "y lies in the code; there is no nonzero error to normalize";
        rep.seconds = elapsed_seconds(start);
        return rep;
    }
    std::vector<Field::Elt> one_vec(p.m, 0);
    one_vec[0] = 1;
    std::uint64_t max_trials =
        config.max_trials ? config.max_trials : default_max_trials(rep.predicted_trials);
    auto outcome = run_trials(
        max_trials, config.seed, config.workers, [&](std::uint64_t, std::mt19937_64& rng) {
            Subspace Ep = sample_subspace_containing(inst.base, p.m, rp, one_vec, rng);
            return es_v2_try_support(inst, H_ext, Ep, config.candidate_cap);
        });
    rep.trials = outcome.trials;
    if (outcome.result) {
        rep.solved = true;
        rep.solution = std::move(outcome.result);
    } else {
        rep.detail = "max_trials exhausted";
    }
    rep.seconds = elapsed_seconds(start);
    return rep;
}

}  // namespace rankforge
