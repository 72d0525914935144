#pragma once

#include <iosfwd>
#include <map>

#include "rankforge/rsd.hpp"

namespace rankforge {

/// Linearization of the annihilator equations P(y_j - sum_i c_i g_ij) = 0 with
/// P monic of q-degree r. Monomial order is fixed so exports and tests are
/// byte-stable: PC(a,i) block by (a,i) lexicographic, then CR(i), then P(a).
struct LinearizedSystem {
    unsigned r, k, n;
    Matrix mat;                    // n x ((r+1)(k+1)-1) over GF(q^m)
    std::vector<Field::Elt> rhs;   // -y_j^{q^r}

    std::size_t columns() const { return static_cast<std::size_t>(r + 1) * (k + 1) - 1; }
    /// p_a c_i^{q^a}, a in [0,r), i in [1,k]
    std::size_t pc_index(unsigned a, unsigned i) const { return a * k + (i - 1); }
    /// c_i^{q^r}, i in [1,k]
    std::size_t cr_index(unsigned i) const { return static_cast<std::size_t>(r) * k + (i - 1); }
    /// p_a, a in [0,r)
    std::size_t p_index(unsigned a) const { return static_cast<std::size_t>(r) * k + k + a; }

    /// Monomial values of a candidate (c, p) in column order; the hidden
    /// solution always satisfies mat * v = rhs.
    std::vector<Field::Elt> monomial_values(std::span<const Field::Elt> c,
                                            std::span<const Field::Elt> p) const;
};

LinearizedSystem build_linearized_system(const Matrix& G, std::span<const Field::Elt> y,
                                         unsigned r);

/// Deterministic linearization attack; requires n >= (r+1)(k+1)-1.
AttackReport lin_attack(const RsdInstance& inst);

struct HybridConfig {
    std::optional<unsigned> t;     // default: ceil(((r+1)(k+1)-(n+1))/r), clamped at 0
    std::uint64_t max_rounds = 0;  // 0: 64x the predicted round count
    std::uint64_t seed = 0;
    unsigned workers = 1;
};

unsigned default_hybrid_t(const CodeParams& p);

/// Guess t zero-error GF(q)-combinations of the affine relations y = c G + e,
/// shrink c by the kernel parametrization c = c0 + N f, and run the
/// linearization attack on the reduced code.
AttackReport hybrid_attack(const RsdInstance& inst, const HybridConfig& config);

/// Writes the POLYSYS text form of the n annihilator equations in the
/// variables p_0..p_{r-1}, c_1..c_k, with any guessed c_i substituted.
void export_polynomial_system(std::ostream& os, const RsdInstance& inst,
                              const std::map<unsigned, Field::Elt>& guesses = {});

}  // namespace rankforge
