#include "rankforge/qpoly.hpp"

namespace rankforge {

QPolynomial::QPolynomial(FieldRef ext, std::vector<Elt> coeffs)
    : f_(std::move(ext)), coeffs_(std::move(coeffs)) {
    for (Elt c : coeffs_) f_->check_element(c);
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

unsigned QPolynomial::qdeg() const {
    if (coeffs_.empty()) throw std::logic_error("qdeg of the zero polynomial");
    return static_cast<unsigned>(coeffs_.size() - 1);
}

QPolynomial::Elt QPolynomial::evaluate(Elt x) const {
    const Field& f = *f_;
    Elt acc = 0;
    Elt xq = x;  // x^{q^i}
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i > 0) xq = f.pow(xq, f.q());
        if (coeffs_[i] != 0) acc = f.add(acc, f.mul(coeffs_[i], xq));
    }
    return acc;
}

QPolynomial QPolynomial::operator+(const QPolynomial& rhs) const {
    const Field& f = *f_;
    std::vector<Elt> out(std::max(coeffs_.size(), rhs.coeffs_.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = f.add(i < coeffs_.size() ? coeffs_[i] : 0,
                       i < rhs.coeffs_.size() ? rhs.coeffs_[i] : 0);
    return QPolynomial(f_, std::move(out));
}

QPolynomial QPolynomial::compose(const QPolynomial& rhs) const {
    const Field& f = *f_;
    if (coeffs_.empty() || rhs.coeffs_.empty()) return QPolynomial(f_);
    // (P o Q)_t = sum_{i+j=t} p_i * q_j^{q^i}
    std::vector<Elt> out(coeffs_.size() + rhs.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            Elt term = f.mul(coeffs_[i], f.frobenius(rhs.coeffs_[j], static_cast<unsigned>(i)));
            out[i + j] = f.add(out[i + j], term);
        }
    }
    return QPolynomial(f_, std::move(out));
}

QPolynomial annihilator(FieldRef ext, std::span<const Field::Elt> basis) {
    const Field& f = *ext;
    QPolynomial P = QPolynomial::identity(ext);
    for (Field::Elt g : basis) {
        Field::Elt t = P.evaluate(g);
        if (t == 0)
            throw std::invalid_argument("annihilator: basis elements are GF(q)-dependent");
        // P(x)^q - P(g)^{q-1} P(x)
        Field::Elt factor = f.pow(t, f.q() - 1);
        std::vector<Field::Elt> next(P.coeffs().size() + 1, 0);
        for (std::size_t i = 0; i < P.coeffs().size(); ++i) {
            next[i + 1] = f.add(next[i + 1], f.pow(P.coeffs()[i], f.q()));
            next[i] = f.sub(next[i], f.mul(factor, P.coeffs()[i]));
        }
        P = QPolynomial(ext, std::move(next));
    }
    return P;
}

QPolynomial annihilator(FieldRef ext, const Subspace& E) {
    auto elems = E.basis_elements(*ext);
    return annihilator(std::move(ext), elems);
}

Subspace root_space(const QPolynomial& P, FieldRef base) {
    if (P.is_zero()) throw std::invalid_argument("root_space: zero polynomial");
    const Field& f = *P.field();
    unsigned m = f.m();
    // column j = coords of P(x^j) for the polynomial basis element x^j
    Matrix M(base, m, m);
    for (unsigned j = 0; j < m; ++j) {
        Field::Elt bj = 1;
        for (unsigned s = 0; s < j; ++s) bj *= f.q();  // encoding of x^j is q^j
        auto c = f.coords(P.evaluate(bj));
        for (unsigned i = 0; i < m; ++i) M.at(i, j) = c[i];
    }
    Matrix K = kernel(M);
    return Subspace::from_rows(K);
}

}  // namespace rankforge
