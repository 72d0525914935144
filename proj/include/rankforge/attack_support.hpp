#pragma once

#include "rankforge/rsd.hpp"

namespace rankforge {

/// Error-support attack configuration. Defaults follow the feasibility bound:
/// r' = floor((n-k)m/n) for v1 and floor((n-k-1)m/n) for v2.
struct SupportGuessConfig {
    std::optional<unsigned> r_prime;
    std::uint64_t max_trials = 0;  // 0: 64x the predicted trial count
    std::uint64_t seed = 0;
    unsigned workers = 1;
    std::uint64_t candidate_cap = 4096;  // affine-set scan limit per trial
};

struct SupportSolveSet {
    bool consistent = false;
    std::vector<Field::Elt> particular;          // one error vector, length n
    std::vector<std::vector<Field::Elt>> kernel; // homogeneous error vectors
};

/// Solves H e^T = s over GF(q) with every coordinate of e constrained to the
/// span of E_basis: the (n-k)m x (n r') small-field system. The affine solution
/// set is mapped back to error vectors; inconsistency is a normal outcome.
SupportSolveSet solve_in_support(const Matrix& H, std::span<const Field::Elt> s,
                                 std::span<const Field::Elt> E_basis);

unsigned es_v1_default_r_prime(const CodeParams& p);
unsigned es_v2_default_r_prime(const CodeParams& p);

/// One v1 trial against a fixed support guess: scan the affine solution set
/// for an error of rank exactly r, then recover x from x G = y - e.
std::optional<RsdSolution> es_v1_try_support(const RsdInstance& inst, const Subspace& E_prime,
                                             std::uint64_t candidate_cap = 4096);

/// Parity check of the extended code spanned by the rows of G and y.
Matrix extended_parity(const RsdInstance& inst);

/// One v2 trial: scan nonzero kernel vectors z with coordinates in E_prime and
/// rank r, and solve y = x G + gamma z over GF(q^m) for (x, gamma).
std::optional<RsdSolution> es_v2_try_support(const RsdInstance& inst, const Matrix& H_ext,
                                             const Subspace& E_prime,
                                             std::uint64_t candidate_cap = 4096);

AttackReport es_attack_v1(const RsdInstance& inst, const SupportGuessConfig& config);
AttackReport es_attack_v2(const RsdInstance& inst, const SupportGuessConfig& config);

}  // namespace rankforge
