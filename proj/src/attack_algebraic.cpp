#include "rankforge/attack_algebraic.hpp"

#include <chrono>
#include <cmath>
#include <ostream>

#include "rankforge/parallel.hpp"

namespace rankforge {

namespace {

using Clock = std::chrono::steady_clock;
using Elt = Field::Elt;

double elapsed_seconds(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct LinSolveResult {
    bool solved = false;
    std::vector<Elt> c;
    std::vector<Elt> p;
    std::string detail;
};

/// Solve the linearized system and undo the linearization: c_i comes out of
/// the CR block by inverse Frobenius, and the PC block must agree with the
/// products p_a c_i^{q^a} for the solution to count.
LinSolveResult lin_solve(const FieldRef& extref, const Matrix& G, std::span<const Elt> y,
                         unsigned r, std::uint64_t kernel_enum_cap = 4096) {
    const Field& f = *extref;
    unsigned k = static_cast<unsigned>(G.rows());
    auto sys = build_linearized_system(G, y, r);
    auto lin = solve(sys.mat, sys.rhs);
    LinSolveResult out;
    if (!lin.consistent) {
        out.detail = "linearized system inconsistent";
        return out;
    }

    auto extract = [&](std::span<const Elt> v) -> std::optional<std::pair<std::vector<Elt>, std::vector<Elt>>> {
        std::vector<Elt> c(k), p(r);
        for (unsigned i = 1; i <= k; ++i)
            c[i - 1] = f.frobenius(v[sys.cr_index(i)], f.m() - (r % f.m()));
        for (unsigned a = 0; a < r; ++a) p[a] = v[sys.p_index(a)];
        for (unsigned a = 0; a < r; ++a)
            for (unsigned i = 1; i <= k; ++i)
                if (v[sys.pc_index(a, i)] != f.mul(p[a], f.frobenius(c[i - 1], a)))
                    return std::nullopt;
        return std::make_pair(std::move(c), std::move(p));
    };

    if (lin.kernel.rows() == 0) {
        if (auto cp = extract(lin.particular)) {
            out.solved = true;
            out.c = std::move(cp->first);
            out.p = std::move(cp->second);
        } else {
            out.detail = "unique linearized solution violates the multiplicative structure";
        }
        return out;
    }
    if (lin.kernel.rows() == 1 && f.order() <= kernel_enum_cap) {
        // rank-deficient linearization: scan the one-dimensional affine set for
        // a structure-consistent point
        std::vector<Elt> v(lin.particular.size());
        for (Elt mu = 0; mu < f.order(); ++mu) {
            for (std::size_t j = 0; j < v.size(); ++j)
                v[j] = f.add(lin.particular[j], f.mul(mu, lin.kernel.at(0, j)));
            if (auto cp = extract(v)) {
                out.solved = true;
                out.c = std::move(cp->first);
                out.p = std::move(cp->second);
                return out;
            }
        }
    }
    out.detail = "linearized system underdetermined (kernel dimension " +
                 std::to_string(lin.kernel.rows()) + ")";
    return out;
}

std::vector<Elt> error_from_message(const Field& f, const Matrix& G, std::span<const Elt> y,
                                    std::span<const Elt> c) {
    std::vector<Elt> cg = G.vec_mul(c);
    std::vector<Elt> e(y.size());
    for (std::size_t j = 0; j < y.size(); ++j) e[j] = f.sub(y[j], cg[j]);
    return e;
}

}  // namespace

std::vector<Elt> LinearizedSystem::monomial_values(std::span<const Elt> c,
                                                   std::span<const Elt> p) const {
    if (c.size() != k || p.size() != r)
        throw std::invalid_argument("monomial_values: wrong lengths");
    const Field& f = *mat.field();
    std::vector<Elt> v(columns());
    for (unsigned a = 0; a < r; ++a)
        for (unsigned i = 1; i <= k; ++i)
            v[pc_index(a, i)] = f.mul(p[a], f.frobenius(c[i - 1], a));
    for (unsigned i = 1; i <= k; ++i) v[cr_index(i)] = f.frobenius(c[i - 1], r);
    for (unsigned a = 0; a < r; ++a) v[p_index(a)] = p[a];
    return v;
}

LinearizedSystem build_linearized_system(const Matrix& G, std::span<const Elt> y,
                                         unsigned r) {
    const FieldRef& extref = G.field();
    const Field& f = *extref;
    unsigned k = static_cast<unsigned>(G.rows());
    unsigned n = static_cast<unsigned>(G.cols());
    if (y.size() != n) throw std::invalid_argument("build_linearized_system: y length");
    LinearizedSystem sys{r, k, n, Matrix(extref, n, static_cast<std::size_t>(r + 1) * (k + 1) - 1),
                         std::vector<Elt>(n)};
    for (unsigned j = 0; j < n; ++j) {
        Elt yq = y[j];
        for (unsigned a = 0; a <= r; ++a) {
            if (a > 0) yq = f.pow(yq, f.q());
            if (a < r) sys.mat.at(j, sys.p_index(a)) = yq;
        }
        sys.rhs[j] = f.neg(yq);  // -y_j^{q^r}
        for (unsigned i = 1; i <= k; ++i) {
            Elt gq = G.at(i - 1, j);
            for (unsigned a = 0; a <= r; ++a) {
                if (a > 0) gq = f.pow(gq, f.q());
                if (a < r)
                    sys.mat.at(j, sys.pc_index(a, i)) = f.neg(gq);
                else
                    sys.mat.at(j, sys.cr_index(i)) = f.neg(gq);
            }
        }
    }
    return sys;
}

AttackReport lin_attack(const RsdInstance& inst) {
    auto start = Clock::now();
    const CodeParams& p = inst.params;
    AttackReport rep;
    rep.predicted_trials = 1.0;
    rep.predicted_trials_floor_form = 1.0;
    std::uint64_t terms = static_cast<std::uint64_t>(p.r + 1) * (p.k + 1) - 1;
    if (p.n < terms) {
        rep.infeasible = true;
        rep.detail = "linearization requires n >= (r+1)(k+1)-1 = " + std::to_string(terms);
        rep.seconds = elapsed_seconds(start);
        return rep;
    }
    auto res = lin_solve(inst.ext, inst.G, inst.y, p.r);
    rep.trials = 1;
    if (res.solved) {
        RsdSolution sol{res.c, error_from_message(*inst.ext, inst.G, inst.y, res.c)};
        if (rank_weight(*inst.ext, inst.base, sol.e) == p.r &&
            verify_solution(inst, sol).accepted) {
            rep.solved = true;
            rep.solution = std::move(sol);
        } else {
            rep.detail = "linearized solution does not yield a rank-r error";
        }
    } else {
        rep.detail = res.detail;
    }
    rep.seconds = elapsed_seconds(start);
    return rep;
}

unsigned default_hybrid_t(const CodeParams& p) {
    if (p.r == 0) return 0;
    std::int64_t num = static_cast<std::int64_t>(p.r + 1) * (p.k + 1) -
                       (static_cast<std::int64_t>(p.n) + 1);
    if (num <= 0) return 0;
    return static_cast<unsigned>((num + p.r - 1) / p.r);
}

AttackReport hybrid_attack(const RsdInstance& inst, const HybridConfig& config) {
    auto start = Clock::now();
    const CodeParams& p = inst.params;
    const Field& f = *inst.ext;
    unsigned t = config.t.value_or(default_hybrid_t(p));
    AttackReport rep;
    rep.predicted_trials = std::pow(static_cast<double>(p.q),
                                    static_cast<double>(p.r) * t);
    rep.predicted_trials_floor_form = rep.predicted_trials;
    if (t > p.k ||
        static_cast<std::int64_t>(p.n) - t <
            static_cast<std::int64_t>(p.r + 1) * (p.k + 1 - t) - 1) {
        rep.infeasible = true;
        rep.detail = "hybrid requires t <= k and n-t >= (r+1)(k+1-t)-1";
        rep.seconds = elapsed_seconds(start);
        return rep;
    }
    if (t == 0) {
        rep = lin_attack(inst);
        rep.predicted_trials = 1.0;
        rep.predicted_trials_floor_form = 1.0;
        return rep;
    }

    auto round_fn = [&](std::uint64_t, std::mt19937_64& rng) -> std::optional<RsdSolution> {
        // t random nonzero GF(q)-combinations of the affine relations, assumed
        // to hit zero combined error; resample until the guess matrix has rank t
        Matrix Lambda(inst.ext, t, p.k);
        std::vector<Elt> b(t);
        std::uniform_int_distribution<std::uint32_t> coef(0, static_cast<std::uint32_t>(p.q - 1));
        for (int attempt = 0; attempt < 64; ++attempt) {
            for (unsigned l = 0; l < t; ++l) {
                std::vector<std::uint32_t> lambda(p.n, 0);
                bool nonzero = false;
                while (!nonzero) {
                    for (auto& lj : lambda) {
                        lj = coef(rng);
                        nonzero |= lj != 0;
                    }
                }
                for (unsigned i = 0; i < p.k; ++i) {
                    Elt acc = 0;
                    for (unsigned j = 0; j < p.n; ++j)
                        if (lambda[j] != 0)
                            acc = f.add(acc, f.scale(inst.G.at(i, j), lambda[j]));
                    Lambda.at(l, i) = acc;
                }
                Elt acc = 0;
                for (unsigned j = 0; j < p.n; ++j)
                    if (lambda[j] != 0) acc = f.add(acc, f.scale(inst.y[j], lambda[j]));
                b[l] = acc;
            }
            if (rank(Lambda) == t) break;
            if (attempt == 63) return std::nullopt;
        }
        auto guess = solve(Lambda, b);
        if (!guess.consistent) return std::nullopt;  // wrong guess, detected early
        const Matrix& N = guess.kernel;  // (k-t) x k
        Matrix G_red = N * inst.G;       // (k-t) x n
        std::vector<Elt> y_red = error_from_message(f, inst.G, inst.y, guess.particular);
        auto res = lin_solve(inst.ext, G_red, y_red, p.r);
        if (!res.solved) return std::nullopt;
        // back-substitute c = c0 + f N
        std::vector<Elt> c = guess.particular;
        for (std::size_t l = 0; l < N.rows(); ++l)
            for (unsigned i = 0; i < p.k; ++i)
                c[i] = f.add(c[i], f.mul(res.c[l], N.at(l, i)));
        RsdSolution sol{std::move(c), {}};
        sol.e = error_from_message(f, inst.G, inst.y, sol.x);
        if (rank_weight(f, inst.base, sol.e) != p.r) return std::nullopt;
        if (!verify_solution(inst, sol).accepted) return std::nullopt;
        return sol;
    };

    std::uint64_t max_rounds = config.max_rounds
                                   ? config.max_rounds
                                   : std::max<std::uint64_t>(
                                         1, static_cast<std::uint64_t>(
                                                std::ceil(64.0 * rep.predicted_trials)));
    auto outcome = run_trials(max_rounds, config.seed, config.workers, round_fn);
    rep.trials = outcome.trials;
    if (outcome.result) {
        rep.solved = true;
        rep.solution = std::move(outcome.result);
    } else {
        rep.detail = "max_rounds exhausted";
    }
    rep.seconds = elapsed_seconds(start);
    return rep;
}

void export_polynomial_system(std::ostream& os, const RsdInstance& inst,
                              const std::map<unsigned, Field::Elt>& guesses) {
    const Field& f = *inst.ext;
    const CodeParams& p = inst.params;
    for (const auto& [i, v] : guesses) {
        if (i < 1 || i > p.k) throw std::invalid_argument("export: guess index out of range");
        f.check_element(v);
    }
    os << "POLYSYS 1\n";
    os << "field q " << p.q << " m " << p.m << " modulus";
    for (auto c : f.modulus()) os << " " << c;
    os << "\n";
    os << "vars p 0.." << static_cast<int>(p.r) - 1 << " c 1.." << p.k << "\n";
    for (const auto& [i, v] : guesses) os << "# guessed c" << i << " = " << v << "\n";

    std::vector<std::uint64_t> qa(p.r + 1);  // literal exponents q^a
    qa[0] = 1;
    for (unsigned a = 1; a <= p.r; ++a) qa[a] = qa[a - 1] * p.q;

    for (unsigned j = 0; j < p.n; ++j) {
        std::vector<std::string> terms;
        auto push = [&](Elt coef, const std::string& mono) {
            if (coef == 0) return;
            terms.push_back(mono.empty() ? std::to_string(coef)
                                         : std::to_string(coef) + "*" + mono);
        };
        Elt constant = 0;
        // PC block, then CR, then P, then the constant (the linearization order)
        for (unsigned a = 0; a < p.r; ++a) {
            for (unsigned i = 1; i <= p.k; ++i) {
                if (guesses.count(i)) continue;
                Elt coef = f.neg(f.frobenius(inst.G.at(i - 1, j), a));
                push(coef, "p" + std::to_string(a) + "*c" + std::to_string(i) + "^" +
                               std::to_string(qa[a]));
            }
        }
        for (unsigned i = 1; i <= p.k; ++i) {
            if (guesses.count(i)) continue;
            Elt coef = f.neg(f.frobenius(inst.G.at(i - 1, j), p.r));
            push(coef, "c" + std::to_string(i) + "^" + std::to_string(qa[p.r]));
        }
        for (unsigned a = 0; a < p.r; ++a) {
            Elt coef = f.frobenius(inst.y[j], a);
            for (const auto& [i, v] : guesses)
                coef = f.sub(coef, f.mul(f.frobenius(inst.G.at(i - 1, j), a), f.frobenius(v, a)));
            push(coef, "p" + std::to_string(a));
        }
        constant = f.frobenius(inst.y[j], p.r);
        for (const auto& [i, v] : guesses)
            constant = f.sub(constant,
                             f.mul(f.frobenius(inst.G.at(i - 1, j), p.r), f.frobenius(v, p.r)));
        push(constant, "");
        os << "eq " << j + 1 << ": ";
        if (terms.empty()) {
            os << "0";
        } else {
            for (std::size_t s = 0; s < terms.size(); ++s)
                os << (s ? " + " : "") << terms[s];
        }
        os << " = 0\n";
    }
}

}  // namespace rankforge
