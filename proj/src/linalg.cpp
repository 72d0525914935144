#include "rankforge/linalg.hpp"

#include <algorithm>

namespace rankforge {

Matrix Matrix::identity(FieldRef f, std::size_t n) {
    Matrix I(std::move(f), n, n);
    for (std::size_t i = 0; i < n; ++i) I.at(i, i) = 1;
    return I;
}

Matrix Matrix::transposed() const {
    Matrix T(f_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) T.at(c, r) = at(r, c);
    return T;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("Matrix::operator*: dimension mismatch");
    const Field& f = *f_;
    Matrix out(f_, rows_, rhs.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t i = 0; i < cols_; ++i) {
            Elt a = at(r, i);
            if (a == 0) continue;
            for (std::size_t c = 0; c < rhs.cols_; ++c)
                out.at(r, c) = f.add(out.at(r, c), f.mul(a, rhs.at(i, c)));
        }
    return out;
}

std::vector<Matrix::Elt> Matrix::mul_vec(std::span<const Elt> x) const {
    if (x.size() != cols_) throw std::invalid_argument("mul_vec: dimension mismatch");
    const Field& f = *f_;
    std::vector<Elt> out(rows_, 0);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (at(r, c) != 0 && x[c] != 0) out[r] = f.add(out[r], f.mul(at(r, c), x[c]));
    return out;
}

std::vector<Matrix::Elt> Matrix::vec_mul(std::span<const Elt> x) const {
    if (x.size() != rows_) throw std::invalid_argument("vec_mul: dimension mismatch");
    const Field& f = *f_;
    std::vector<Elt> out(cols_, 0);
    for (std::size_t r = 0; r < rows_; ++r) {
        if (x[r] == 0) continue;
        for (std::size_t c = 0; c < cols_; ++c)
            if (at(r, c) != 0) out[c] = f.add(out[c], f.mul(x[r], at(r, c)));
    }
    return out;
}

RrefResult rref(Matrix M) {
    const Field& f = *M.field();
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < M.cols() && lead < M.rows(); ++col) {
        std::size_t pivot = lead;
        while (pivot < M.rows() && M.at(pivot, col) == 0) ++pivot;
        if (pivot == M.rows()) continue;
        if (pivot != lead)
            for (std::size_t c = 0; c < M.cols(); ++c) std::swap(M.at(pivot, c), M.at(lead, c));
        Field::Elt inv = f.inv(M.at(lead, col));
        if (inv != 1)
            for (std::size_t c = col; c < M.cols(); ++c) M.at(lead, c) = f.mul(inv, M.at(lead, c));
        for (std::size_t r = 0; r < M.rows(); ++r) {
            if (r == lead) continue;
            Field::Elt factor = M.at(r, col);
            if (factor == 0) continue;
            for (std::size_t c = col; c < M.cols(); ++c)
                M.at(r, c) = f.sub(M.at(r, c), f.mul(factor, M.at(lead, c)));
        }
        pivots.push_back(col);
        ++lead;
    }
    std::size_t rk = pivots.size();
    return {std::move(M), rk, std::move(pivots)};
}

std::size_t rank(const Matrix& M) { return rref(M).rank; }

Matrix kernel(const Matrix& M) {
    auto R = rref(M);
    const Field& f = *M.field();
    std::size_t n = M.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto p : R.pivots) is_pivot[p] = true;
    Matrix K(M.field(), n - R.rank, n);
    std::size_t row = 0;
    for (std::size_t free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[free_col]) continue;
        K.at(row, free_col) = 1;
        for (std::size_t i = 0; i < R.pivots.size(); ++i)
            K.at(row, R.pivots[i]) = f.neg(R.reduced.at(i, free_col));
        ++row;
    }
    return K;
}

LinearSolution solve(const Matrix& A, std::span<const Matrix::Elt> b) {
    if (b.size() != A.rows()) throw std::invalid_argument("solve: dimension mismatch");
    const Field& f = *A.field();
    Matrix aug(A.field(), A.rows(), A.cols() + 1);
    for (std::size_t r = 0; r < A.rows(); ++r) {
        for (std::size_t c = 0; c < A.cols(); ++c) aug.at(r, c) = A.at(r, c);
        aug.at(r, A.cols()) = b[r];
    }
    auto R = rref(std::move(aug));
    if (!R.pivots.empty() && R.pivots.back() == A.cols())
        return {false, {}, Matrix(A.field(), 0, A.cols())};
    std::vector<Matrix::Elt> particular(A.cols(), 0);
    for (std::size_t i = 0; i < R.pivots.size(); ++i)
        particular[R.pivots[i]] = R.reduced.at(i, A.cols());
    // kernel from the same elimination: free columns of the coefficient part
    std::vector<bool> is_pivot(A.cols(), false);
    for (auto p : R.pivots) is_pivot[p] = true;
    Matrix K(A.field(), A.cols() - R.rank, A.cols());
    std::size_t row = 0;
    for (std::size_t free_col = 0; free_col < A.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        K.at(row, free_col) = 1;
        for (std::size_t i = 0; i < R.pivots.size(); ++i)
            K.at(row, R.pivots[i]) = f.neg(R.reduced.at(i, free_col));
        ++row;
    }
    return {true, std::move(particular), std::move(K)};
}

Subspace::Subspace(FieldRef base, unsigned ambient)
    : ambient_(ambient), basis_(std::move(base), 0, ambient) {
    if (basis_.field()->m() != 1)
        throw std::invalid_argument("Subspace: base field must be prime (m = 1)");
}

Subspace Subspace::from_rows(const Matrix& rows) {
    if (rows.field()->m() != 1)
        throw std::invalid_argument("Subspace: base field must be prime (m = 1)");
    auto R = rref(rows);
    Matrix basis(rows.field(), R.rank, rows.cols());
    for (std::size_t r = 0; r < R.rank; ++r)
        for (std::size_t c = 0; c < rows.cols(); ++c) basis.at(r, c) = R.reduced.at(r, c);
    return Subspace(static_cast<unsigned>(rows.cols()), std::move(basis));
}

bool Subspace::contains_vector(std::span<const Matrix::Elt> v) const {
    if (v.size() != ambient_) throw std::invalid_argument("contains_vector: wrong length");
    const Field& f = *basis_.field();
    // reduce v against the RREF basis; contained iff the residue is zero
    std::vector<Matrix::Elt> res(v.begin(), v.end());
    for (std::size_t r = 0; r < basis_.rows(); ++r) {
        std::size_t piv = 0;
        while (piv < ambient_ && basis_.at(r, piv) == 0) ++piv;
        if (piv == ambient_ || res[piv] == 0) continue;
        Matrix::Elt factor = res[piv];  // pivot entry is 1
        for (std::size_t c = piv; c < ambient_; ++c)
            res[c] = f.sub(res[c], f.mul(factor, basis_.at(r, c)));
    }
    return std::all_of(res.begin(), res.end(), [](Matrix::Elt x) { return x == 0; });
}

bool Subspace::contains(const Subspace& inner) const {
    if (inner.ambient_ != ambient_) throw std::invalid_argument("contains: ambient mismatch");
    for (std::size_t r = 0; r < inner.basis_.rows(); ++r)
        if (!contains_vector(inner.basis_.row(r))) return false;
    return true;
}

std::vector<Field::Elt> Subspace::basis_elements(const Field& ext) const {
    if (ext.m() != ambient_ || ext.q() != basis_.field()->q())
        throw std::invalid_argument("basis_elements: field does not match ambient space");
    std::vector<Field::Elt> out;
    out.reserve(basis_.rows());
    for (std::size_t r = 0; r < basis_.rows(); ++r) {
        std::vector<std::uint32_t> c(ambient_);
        for (unsigned j = 0; j < ambient_; ++j)
            c[j] = static_cast<std::uint32_t>(basis_.at(r, j));
        out.push_back(ext.from_coords(c));
    }
    return out;
}

Field::Elt random_element(const Field& f, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint64_t> dist(0, f.order() - 1);
    return dist(rng);
}

Matrix random_matrix(FieldRef f, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
    Matrix M(f, rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) M.at(r, c) = random_element(*f, rng);
    return M;
}

Matrix random_full_rank_matrix(FieldRef f, std::size_t rows, std::size_t cols,
                               std::mt19937_64& rng) {
    std::size_t want = std::min(rows, cols);
    while (true) {
        Matrix M = random_matrix(f, rows, cols, rng);
        if (rank(M) == want) return M;
    }
}

Subspace sample_subspace(FieldRef base, unsigned m, unsigned d, std::mt19937_64& rng) {
    if (d > m) throw std::invalid_argument("sample_subspace: d > m");
    if (d == 0) return Subspace(std::move(base), m);
    Matrix rows = random_full_rank_matrix(std::move(base), d, m, rng);
    return Subspace::from_rows(rows);
}

Subspace sample_subspace_containing(FieldRef base, unsigned m, unsigned d,
                                    std::span<const Matrix::Elt> fixed, std::mt19937_64& rng) {
    if (d < 1 || d > m) throw std::invalid_argument("sample_subspace_containing: bad dimension");
    if (fixed.size() != m) throw std::invalid_argument("sample_subspace_containing: bad vector");
    if (std::all_of(fixed.begin(), fixed.end(), [](Matrix::Elt x) { return x == 0; }))
        throw std::invalid_argument("sample_subspace_containing: fixed vector is zero");
    while (true) {
        Matrix rows(base, d, m);
        for (unsigned c = 0; c < m; ++c) rows.at(0, c) = fixed[c];
        for (unsigned r = 1; r < d; ++r)
            for (unsigned c = 0; c < m; ++c) rows.at(r, c) = random_element(*base, rng);
        if (rank(rows) == d) return Subspace::from_rows(rows);
    }
}

Matrix expand(const Field& ext, FieldRef base, std::span<const Field::Elt> v) {
    if (base->q() != ext.q() || base->m() != 1)
        throw std::invalid_argument("expand: base field mismatch");
    Matrix M(std::move(base), ext.m(), v.size());
    for (std::size_t j = 0; j < v.size(); ++j) {
        auto c = ext.coords(v[j]);
        for (unsigned i = 0; i < ext.m(); ++i) M.at(i, j) = c[i];
    }
    return M;
}

std::vector<Field::Elt> collapse(const Field& ext, const Matrix& M) {
    if (M.rows() != ext.m()) throw std::invalid_argument("collapse: wrong row count");
    std::vector<Field::Elt> v(M.cols());
    for (std::size_t j = 0; j < M.cols(); ++j) {
        std::vector<std::uint32_t> c(ext.m());
        for (unsigned i = 0; i < ext.m(); ++i) c[i] = static_cast<std::uint32_t>(M.at(i, j));
        v[j] = ext.from_coords(c);
    }
    return v;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    // splitmix64 over (seed, index)
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace rankforge
