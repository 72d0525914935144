#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>

#include "rankforge/linalg.hpp"

using namespace rankforge;

namespace {

Matrix from_rows(FieldRef f, std::vector<std::vector<Field::Elt>> rows) {
    Matrix m(f, rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
    return m;
}

}  // namespace

TEST_CASE("rref canonical forms") {
    auto f2 = make_field(2, 1);
    auto id = Matrix::identity(f2, 4);
    auto r = rref(id);
    CHECK(r.reduced == id);
    CHECK(r.rank == 4);

    Matrix z(f2, 3, 5);
    auto rz = rref(z);
    CHECK(rz.rank == 0);
    CHECK(rz.reduced == z);

    auto m = from_rows(f2, {{1, 1}, {1, 1}});
    auto rm = rref(m);
    CHECK(rm.rank == 1);
    CHECK(rm.reduced == from_rows(f2, {{1, 1}, {0, 0}}));
    CHECK(rm.pivots == std::vector<std::size_t>{0});
}

TEST_CASE("rref is idempotent and rank is transpose-invariant") {
    std::mt19937_64 rng(11);
    auto f = make_field(3, 2);
    for (int it = 0; it < 100; ++it) {
        Matrix A = random_matrix(f, 4, 6, rng);
        auto r1 = rref(A);
        auto r2 = rref(r1.reduced);
        CHECK(r1.reduced == r2.reduced);
        CHECK(r1.rank == r2.rank);
        CHECK(rank(A) == rank(A.transposed()));
    }
}

TEST_CASE("solve: identity, inconsistent, and planted systems") {
    auto f = make_field(2, 4);
    std::mt19937_64 rng(21);
    auto I = Matrix::identity(f, 3);
    std::vector<Field::Elt> b{5, 7, 9};
    auto s = solve(I, b);
    CHECK(s.consistent);
    CHECK(s.particular == b);
    CHECK(s.kernel.rows() == 0);

    Matrix z(f, 2, 3);
    std::vector<Field::Elt> bz{1, 0};
    CHECK_FALSE(solve(z, bz).consistent);
    std::vector<Field::Elt> b0{0, 0};
    auto s0 = solve(z, b0);
    CHECK(s0.consistent);
    CHECK(s0.kernel.rows() == 3);

    for (int it = 0; it < 50; ++it) {
        Matrix A = random_full_rank_matrix(f, 6, 4, rng);  // full column rank
        std::vector<Field::Elt> x0(4);
        for (auto& v : x0) v = random_element(*f, rng);
        auto bb = A.mul_vec(x0);
        auto sol = solve(A, bb);
        REQUIRE(sol.consistent);
        CHECK(sol.kernel.rows() == 0);
        CHECK(sol.particular == x0);
    }
}

TEST_CASE("solve: particular plus kernel combinations all satisfy the system") {
    auto f = make_field(2, 1);
    std::mt19937_64 rng(31);
    for (int it = 0; it < 50; ++it) {
        Matrix A = random_matrix(f, 3, 6, rng);
        std::vector<Field::Elt> x0(6);
        for (auto& v : x0) v = random_element(*f, rng);
        auto b = A.mul_vec(x0);
        auto sol = solve(A, b);
        REQUIRE(sol.consistent);
        CHECK(A.mul_vec(sol.particular) == b);
        for (std::size_t t = 0; t < sol.kernel.rows(); ++t) {
            std::vector<Field::Elt> x = sol.particular;
            for (std::size_t j = 0; j < 6; ++j)
                x[j] = f->add(x[j], sol.kernel.at(t, j));
            CHECK(A.mul_vec(x) == b);
        }
    }
}

TEST_CASE("kernel basics") {
    auto f = make_field(5, 1);
    std::mt19937_64 rng(41);
    CHECK(kernel(Matrix::identity(f, 4)).rows() == 0);
    CHECK(kernel(Matrix(f, 4, 4)).rows() == 4);
    for (int it = 0; it < 50; ++it) {
        Matrix A = random_matrix(f, 3, 7, rng);
        Matrix K = kernel(A);
        CHECK(K.rows() == 7 - rank(A));
        CHECK(rank(K) == K.rows());
        std::vector<Field::Elt> zero(3, 0);
        for (std::size_t t = 0; t < K.rows(); ++t) CHECK(A.mul_vec(K.row(t)) == zero);
    }
}

TEST_CASE("subspace canonical form is basis-independent") {
    auto f2 = make_field(2, 1);
    std::mt19937_64 rng(51);
    for (int it = 0; it < 100; ++it) {
        Subspace S = sample_subspace(f2, 6, 3, rng);
        // re-span with random invertible combinations of the basis rows
        Matrix T = random_full_rank_matrix(f2, 3, 3, rng);
        Subspace S2 = Subspace::from_rows(T * S.basis());
        CHECK(S == S2);
        CHECK(S.contains(S2));
        for (std::size_t i = 0; i < 3; ++i) CHECK(S.contains_vector(S.basis().row(i)));
    }
}

TEST_CASE("sample_subspace edge dimensions") {
    auto f2 = make_field(2, 1);
    std::mt19937_64 rng(61);
    Subspace z = sample_subspace(f2, 5, 0, rng);
    CHECK(z.dim() == 0);
    Subspace full = sample_subspace(f2, 5, 5, rng);
    CHECK(full.dim() == 5);
    CHECK(full.basis() == Matrix::identity(f2, 5));
}

TEST_CASE("sample_subspace is uniform over the 35 planes of GF(2)^4") {
    auto f2 = make_field(2, 1);
    std::mt19937_64 rng(71);
    std::map<std::vector<Field::Elt>, int> counts;
    const int N = 35000;
    for (int it = 0; it < N; ++it) {
        Subspace S = sample_subspace(f2, 4, 2, rng);
        std::vector<Field::Elt> key;
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 4; ++j) key.push_back(S.basis().at(i, j));
        counts[key]++;
    }
    CHECK(counts.size() == 35);
    double p = 1.0 / 35, sigma = std::sqrt(N * p * (1 - p));
    for (const auto& [k, c] : counts) CHECK(std::abs(c - N * p) <= 3 * sigma);
}

TEST_CASE("sample_subspace_containing keeps the fixed vector and is uniform") {
    auto f2 = make_field(2, 1);
    std::mt19937_64 rng(81);
    std::vector<Field::Elt> e1{1, 0, 0, 0};

    Subspace line = sample_subspace_containing(f2, 4, 1, e1, rng);
    CHECK(line.dim() == 1);
    CHECK(line.contains_vector(e1));

    for (int it = 0; it < 1000; ++it) {
        Subspace S = sample_subspace_containing(f2, 4, 2, e1, rng);
        CHECK(S.dim() == 2);
        CHECK(S.contains_vector(e1));
    }

    // exactly 7 planes of GF(2)^4 contain e1; empirical distribution uniform
    std::map<std::vector<Field::Elt>, int> counts;
    const int N = 7000;
    for (int it = 0; it < N; ++it) {
        Subspace S = sample_subspace_containing(f2, 4, 2, e1, rng);
        std::vector<Field::Elt> key;
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 4; ++j) key.push_back(S.basis().at(i, j));
        counts[key]++;
    }
    CHECK(counts.size() == 7);
    double p = 1.0 / 7, sigma = std::sqrt(N * p * (1 - p));
    for (const auto& [k, c] : counts) CHECK(std::abs(c - N * p) <= 3 * sigma);
}

TEST_CASE("contains basics and empirical inclusion probability") {
    auto f2 = make_field(2, 1);
    std::mt19937_64 rng(18);
    Subspace S = sample_subspace(f2, 6, 3, rng);
    CHECK(S.contains(S));
    Subspace zero(f2, 6);
    CHECK(S.contains(zero));
    CHECK_FALSE(zero.contains(S));

    // P(E in E') for fixed dim-2 E and uniform dim-4 E' in GF(2)^6 is about
    // 2^{-(6-4)*2} = 1/16 (the exact value is 35/651)
    rng.seed(18);
    Subspace E = sample_subspace(f2, 6, 2, rng);
    int hits = 0;
    const int N = 10000;
    for (int it = 0; it < N; ++it)
        if (sample_subspace(f2, 6, 4, rng).contains(E)) ++hits;
    double rate = static_cast<double>(hits) / N;
    double sigma = std::sqrt((1.0 / 16) * (15.0 / 16) / N);
    CHECK(std::abs(rate - 1.0 / 16) <= 3 * sigma);
}

TEST_CASE("expand and collapse round trip") {
    auto ext = make_field(2, 3);
    auto base = make_field(2, 1);
    std::mt19937_64 rng(101);

    std::vector<Field::Elt> zero(4, 0);
    Matrix ez = expand(*ext, base, zero);
    CHECK(ez == Matrix(base, 3, 4));

    std::vector<Field::Elt> v{3, 4};  // 3 = 1+x, 4 = x^2
    Matrix M = expand(*ext, base, v);
    CHECK(M.at(0, 0) == 1);
    CHECK(M.at(1, 0) == 1);
    CHECK(M.at(2, 0) == 0);
    CHECK(M.at(0, 1) == 0);
    CHECK(M.at(1, 1) == 0);
    CHECK(M.at(2, 1) == 1);

    for (int it = 0; it < 100; ++it) {
        std::vector<Field::Elt> w(6);
        for (auto& x : w) x = random_element(*ext, rng);
        CHECK(collapse(*ext, expand(*ext, base, w)) == w);
    }
}

TEST_CASE("derive_seed splits deterministically and without collisions") {
    CHECK(derive_seed(42, 0) == derive_seed(42, 0));
    std::map<std::uint64_t, int> seen;
    for (std::uint64_t i = 0; i < 10000; ++i) CHECK(seen[derive_seed(7, i)]++ == 0);
    CHECK(derive_seed(1, 0) != derive_seed(2, 0));
}
