#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace rankforge {

/// Arithmetic in GF(q^m), q prime, over the polynomial basis 1, x, ..., x^{m-1}.
///
/// Elements are carried around as their canonical integer encoding
/// value = sum coords[i] * q^i in [0, q^m); this encoding is also the
/// normative serialization used by all file formats.
class Field {
public:
    using Elt = std::uint64_t;

    /// Lexicographically smallest monic irreducible polynomial of degree m
    /// over GF(q), ascending degree order, m+1 coefficients.
    /// Candidates are ordered by their constant-to-top coefficient tuple
    /// read as a base-q integer, so the result is deterministic.
    static std::vector<std::uint32_t> find_modulus(std::uint64_t q, unsigned m);

    static bool is_prime(std::uint64_t q);
    static bool is_irreducible(std::uint64_t q, std::span<const std::uint32_t> poly);

    /// GF(q^m) with the deterministic modulus from find_modulus.
    Field(std::uint64_t q, unsigned m);
    /// GF(q^m) with an explicit modulus; rejects non-monic or reducible input.
    Field(std::uint64_t q, unsigned m, std::vector<std::uint32_t> modulus);

    std::uint64_t q() const { return q_; }
    unsigned m() const { return m_; }
    std::uint64_t order() const { return order_; }
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    Elt zero() const { return 0; }
    Elt one() const { return 1; }

    Elt add(Elt a, Elt b) const;
    Elt sub(Elt a, Elt b) const;
    Elt neg(Elt a) const;
    Elt mul(Elt a, Elt b) const;
    /// Multiply by a GF(q) scalar s in [0, q).
    Elt scale(Elt a, std::uint32_t s) const;
    /// Extended Euclid on the coordinate polynomials; throws std::domain_error on 0.
    Elt inv(Elt a) const;
    Elt pow(Elt a, std::uint64_t e) const;
    /// a^{q^i}; i is reduced mod m.
    Elt frobenius(Elt a, unsigned i) const;

    std::vector<std::uint32_t> coords(Elt a) const;
    Elt from_coords(std::span<const std::uint32_t> c) const;

    void check_element(Elt a) const;

    bool operator==(const Field& other) const {
        return q_ == other.q_ && m_ == other.m_ && modulus_ == other.modulus_;
    }

private:
    std::uint64_t q_;
    unsigned m_;
    std::uint64_t order_;
    std::vector<std::uint32_t> modulus_;
    std::uint64_t gf2_mod_bits_ = 0;  // modulus as a bitmask when q == 2
};

using FieldRef = std::shared_ptr<const Field>;

inline FieldRef make_field(std::uint64_t q, unsigned m) {
    return std::make_shared<Field>(q, m);
}
inline FieldRef make_field(std::uint64_t q, unsigned m, std::vector<std::uint32_t> modulus) {
    return std::make_shared<Field>(q, m, std::move(modulus));
}

}  // namespace rankforge
