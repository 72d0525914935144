#pragma once

#include <optional>
#include <random>

#include "rankforge/gfqm.hpp"

namespace rankforge {

/// Dense row-major matrix over an arbitrary Field (GF(q) or GF(q^m)).
class Matrix {
public:
    using Elt = Field::Elt;

    Matrix(FieldRef f, std::size_t rows, std::size_t cols)
        : f_(std::move(f)), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    static Matrix identity(FieldRef f, std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const FieldRef& field() const { return f_; }

    Elt at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    Elt& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }

    std::span<const Elt> row(std::size_t r) const { return {a_.data() + r * cols_, cols_}; }
    std::span<Elt> row(std::size_t r) { return {a_.data() + r * cols_, cols_}; }

    Matrix transposed() const;
    Matrix operator*(const Matrix& rhs) const;
    /// A * x
    std::vector<Elt> mul_vec(std::span<const Elt> x) const;
    /// x^T * A (row vector times matrix)
    std::vector<Elt> vec_mul(std::span<const Elt> x) const;

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

private:
    FieldRef f_;
    std::size_t rows_, cols_;
    std::vector<Elt> a_;
};

struct RrefResult {
    Matrix reduced;
    std::size_t rank;
    std::vector<std::size_t> pivots;
};

/// Gauss-Jordan canonical form; pivots on the first nonzero entry in column order.
RrefResult rref(Matrix M);

std::size_t rank(const Matrix& M);

/// Basis of { v : M v = 0 }, returned as rows of a (cols - rank) x cols matrix.
Matrix kernel(const Matrix& M);

struct LinearSolution {
    bool consistent;
    std::vector<Matrix::Elt> particular;  // empty when inconsistent
    Matrix kernel;                        // homogeneous basis, rows
};

/// One solution of A x = b plus the homogeneous kernel; inconsistency is a
/// normal outcome, not an error.
LinearSolution solve(const Matrix& A, std::span<const Matrix::Elt> b);

/// An r'-dimensional GF(q)-subspace of GF(q)^m in canonical RREF form,
/// so equal subspaces have identical representations.
class Subspace {
public:
    /// Zero subspace of GF(q)^m; base must be a prime field (m = 1).
    Subspace(FieldRef base, unsigned ambient);
    /// Canonicalizes arbitrary spanning rows (RREF, zero rows dropped).
    static Subspace from_rows(const Matrix& rows);

    unsigned ambient() const { return ambient_; }
    unsigned dim() const { return static_cast<unsigned>(basis_.rows()); }
    const Matrix& basis() const { return basis_; }
    const FieldRef& base_field() const { return basis_.field(); }

    bool contains_vector(std::span<const Matrix::Elt> v) const;
    bool contains(const Subspace& inner) const;

    /// Basis rows read as GF(q^m) elements via the integer encoding.
    std::vector<Field::Elt> basis_elements(const Field& ext) const;

    bool operator==(const Subspace& o) const {
        return ambient_ == o.ambient_ && basis_ == o.basis_;
    }

private:
    Subspace(unsigned ambient, Matrix basis) : ambient_(ambient), basis_(std::move(basis)) {}
    unsigned ambient_;
    Matrix basis_;
};

/// Uniform over d-dimensional subspaces of GF(q)^m (rejection until full rank).
Subspace sample_subspace(FieldRef base, unsigned m, unsigned d, std::mt19937_64& rng);

/// Uniform over d-dimensional subspaces containing the fixed nonzero vector.
Subspace sample_subspace_containing(FieldRef base, unsigned m, unsigned d,
                                    std::span<const Matrix::Elt> fixed, std::mt19937_64& rng);

/// Coordinate expansion: column j of the m x n result over GF(q) is coords(v_j).
Matrix expand(const Field& ext, FieldRef base, std::span<const Field::Elt> v);

/// Inverse of expand.
std::vector<Field::Elt> collapse(const Field& ext, const Matrix& M);

/// Uniform field element / uniform full-rank matrix helpers.
Field::Elt random_element(const Field& f, std::mt19937_64& rng);
Matrix random_matrix(FieldRef f, std::size_t rows, std::size_t cols, std::mt19937_64& rng);
Matrix random_full_rank_matrix(FieldRef f, std::size_t rows, std::size_t cols,
                               std::mt19937_64& rng);

/// Deterministic stream split for worker/trial seeds.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace rankforge
