#include "rankforge/oracle.hpp"

#include <algorithm>

#include "rankforge/attack_support.hpp"
#include "rankforge/estimator.hpp"

namespace rankforge {

SubspaceIterator::SubspaceIterator(FieldRef base, unsigned m, unsigned r)
    : base_(std::move(base)), m_(m), r_(r), done_(r > m) {
    if (!done_) {
        pivots_.resize(r_);
        for (unsigned i = 0; i < r_; ++i) pivots_[i] = i;
        load_profile();
    }
}

bool SubspaceIterator::load_profile() {
    free_pos_.clear();
    std::vector<bool> is_pivot(m_, false);
    for (unsigned p : pivots_) is_pivot[p] = true;
    for (unsigned i = 0; i < r_; ++i)
        for (unsigned j = pivots_[i] + 1; j < m_; ++j)
            if (!is_pivot[j]) free_pos_.emplace_back(i, j);
    free_vals_.assign(free_pos_.size(), 0);
    return true;
}

bool SubspaceIterator::advance_profile() {
    // next r-combination of {0..m-1} in lexicographic order
    if (r_ == 0) return false;
    int i = static_cast<int>(r_) - 1;
    while (i >= 0 && pivots_[i] == m_ - r_ + i) --i;
    if (i < 0) return false;
    ++pivots_[i];
    for (unsigned j = i + 1; j < r_; ++j) pivots_[j] = pivots_[j - 1] + 1;
    return load_profile();
}

std::optional<Subspace> SubspaceIterator::next() {
    if (done_) return std::nullopt;
    Matrix basis(base_, r_, m_);
    for (unsigned i = 0; i < r_; ++i) basis.at(i, pivots_[i]) = 1;
    for (std::size_t t = 0; t < free_pos_.size(); ++t)
        basis.at(free_pos_[t].first, free_pos_[t].second) = free_vals_[t];
    Subspace out = Subspace::from_rows(basis);

    // odometer over the free entries, then the next pivot profile
    std::uint64_t q = base_->q();
    std::size_t pos = 0;
    while (pos < free_vals_.size()) {
        if (++free_vals_[pos] < q) break;
        free_vals_[pos] = 0;
        ++pos;
    }
    if (pos == free_vals_.size() && !advance_profile()) done_ = true;
    return out;
}

std::uint64_t guarded_subspace_count(std::uint64_t q, unsigned m, unsigned r) {
    if (r > m) return 0;
    BigInt count = gaussian_binomial(m, r, q);
    if (count > kEnumerationGuard)
        throw EnumerationGuard("enumeration guard exceeded: " + count.str() +
                               " subspaces needed, guard is " +
                               std::to_string(kEnumerationGuard));
    return count.convert_to<std::uint64_t>();
}

std::vector<RsdSolution> brute_force(const RsdInstance& inst) {
    const CodeParams& p = inst.params;
    const Field& ext = *inst.ext;
    guarded_subspace_count(p.q, p.m, p.r);

    auto s = syndrome(inst.H, inst.y);
    std::vector<RsdSolution> found;
    auto consider = [&](const std::vector<Field::Elt>& e) {
        if (rank_weight(ext, inst.base, e) != p.r) return;
        std::vector<Field::Elt> b(p.n);
        for (unsigned j = 0; j < p.n; ++j) b[j] = ext.sub(inst.y[j], e[j]);
        auto lin = solve(inst.G.transposed(), b);
        if (!lin.consistent) return;
        RsdSolution sol{std::move(lin.particular), e};
        if (verify_solution(inst, sol).accepted) found.push_back(std::move(sol));
    };

    SubspaceIterator it(inst.base, p.m, p.r);
    while (auto E = it.next()) {
        auto set = solve_in_support(inst.H, s, E->basis_elements(ext));
        if (!set.consistent) continue;
        // full odometer walk of the affine solution set
        std::size_t d = set.kernel.size();
        std::vector<std::uint32_t> combo(d, 0);
        while (true) {
            std::vector<Field::Elt> e = set.particular;
            for (std::size_t t = 0; t < d; ++t) {
                if (combo[t] == 0) continue;
                for (std::size_t j = 0; j < e.size(); ++j)
                    e[j] = ext.add(e[j], ext.scale(set.kernel[t][j], combo[t]));
            }
            consider(e);
            std::size_t pos = 0;
            while (pos < d) {
                if (++combo[pos] < p.q) break;
                combo[pos] = 0;
                ++pos;
            }
            if (pos == d) break;
        }
    }

    auto key = [](const RsdSolution& a, const RsdSolution& b) {
        return std::tie(a.x, a.e) < std::tie(b.x, b.e);
    };
    std::sort(found.begin(), found.end(), key);
    found.erase(std::unique(found.begin(), found.end()), found.end());
    return found;
}

}  // namespace rankforge
