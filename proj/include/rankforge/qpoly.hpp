#pragma once

#include "rankforge/linalg.hpp"

namespace rankforge {

/// Ore q-polynomial P(x) = sum p_i x^{q^i} over GF(q^m), a GF(q)-linear map.
class QPolynomial {
public:
    using Elt = Field::Elt;

    /// The zero polynomial.
    explicit QPolynomial(FieldRef ext) : f_(std::move(ext)) {}
    /// Coefficients p_0, ..., p_r ascending; leading zeros are trimmed.
    QPolynomial(FieldRef ext, std::vector<Elt> coeffs);

    /// The identity map x (q-degree 0).
    static QPolynomial identity(FieldRef ext) { return QPolynomial(std::move(ext), {1}); }

    const FieldRef& field() const { return f_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// q-degree; only meaningful for nonzero polynomials.
    unsigned qdeg() const;
    const std::vector<Elt>& coeffs() const { return coeffs_; }
    Elt coeff(unsigned i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

    Elt evaluate(Elt x) const;

    QPolynomial operator+(const QPolynomial& rhs) const;
    /// (P o Q)(x) = P(Q(x)); q-degrees add.
    QPolynomial compose(const QPolynomial& rhs) const;

    bool operator==(const QPolynomial& o) const { return coeffs_ == o.coeffs_; }

private:
    FieldRef f_;
    std::vector<Elt> coeffs_;
};

/// Unique monic q-polynomial of q-degree = #basis vanishing on their GF(q)-span,
/// built by Ore's induction P_{i+1}(x) = P_i(x)^q - P_i(g_{i+1})^{q-1} P_i(x).
/// Throws std::invalid_argument when the elements are GF(q)-dependent.
QPolynomial annihilator(FieldRef ext, std::span<const Field::Elt> basis);

/// Annihilator of a subspace given in coordinates.
QPolynomial annihilator(FieldRef ext, const Subspace& E);

/// Root space of a nonzero q-polynomial: kernel of its m x m matrix over GF(q).
/// Dimension is at most qdeg(P).
Subspace root_space(const QPolynomial& P, FieldRef base);

}  // namespace rankforge
