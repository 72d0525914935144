#pragma once

#include "rankforge/rsd.hpp"

namespace rankforge {

/// Thrown when an exhaustive enumeration would exceed the guard; carries the
/// count that would have been needed.
struct EnumerationGuard : std::runtime_error {
    explicit EnumerationGuard(const std::string& msg) : std::runtime_error(msg) {}
};

inline constexpr std::uint64_t kEnumerationGuard = 10'000'000;

/// Streams every r-dimensional GF(q)-subspace of GF(q)^m exactly once, by
/// canonical RREF profile: choose the pivot column set, then odometer over the
/// free entries. No dedup memory is needed.
class SubspaceIterator {
public:
    SubspaceIterator(FieldRef base, unsigned m, unsigned r);

    /// Next subspace, or nullopt when exhausted.
    std::optional<Subspace> next();

private:
    bool load_profile();  // recompute free positions for the current pivot set
    bool advance_profile();

    FieldRef base_;
    unsigned m_, r_;
    bool done_;
    std::vector<unsigned> pivots_;
    std::vector<std::pair<unsigned, unsigned>> free_pos_;  // (row, col)
    std::vector<std::uint32_t> free_vals_;
};

/// Exact number of r-dimensional subspaces (Gaussian binomial), as a double-safe
/// check is not enough this throws EnumerationGuard when above the guard.
std::uint64_t guarded_subspace_count(std::uint64_t q, unsigned m, unsigned r);

/// Exhaustive ground truth: enumerate every support of dimension exactly r,
/// solve within it, collect all (x, e) with rank(e) = r. The returned set is
/// deduplicated and canonically sorted.
std::vector<RsdSolution> brute_force(const RsdInstance& inst);

}  // namespace rankforge
