#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "rankforge/gfqm.hpp"

using namespace rankforge;

namespace {

// Reference multiplication straight from the definition: multiply the
// coordinate polynomials, then reduce modulo the field polynomial by repeated
// subtraction of shifted multiples.
Field::Elt naive_mul(const Field& f, Field::Elt a, Field::Elt b) {
    unsigned m = f.m();
    std::uint64_t q = f.q();
    auto ca = f.coords(a), cb = f.coords(b);
    std::vector<std::uint64_t> prod(2 * m - 1, 0);
    for (unsigned i = 0; i < m; ++i)
        for (unsigned j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % q;
    const auto& mod = f.modulus();
    for (int d = static_cast<int>(prod.size()) - 1; d >= static_cast<int>(m); --d) {
        std::uint64_t top = prod[d];
        if (top == 0) continue;
        prod[d] = 0;
        for (unsigned i = 0; i < m; ++i)
            prod[d - m + i] = (prod[d - m + i] + (q - top % q) * mod[i]) % q;
    }
    std::vector<std::uint32_t> out(m);
    for (unsigned i = 0; i < m; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
    return f.from_coords(out);
}

Field::Elt rand_elt(const Field& f, std::mt19937_64& rng) {
    return std::uniform_int_distribution<Field::Elt>(0, f.order() - 1)(rng);
}

}  // namespace

TEST_CASE("find_modulus picks the lexicographically smallest irreducible") {
    CHECK(Field::find_modulus(2, 1) == std::vector<std::uint32_t>{0, 1});
    CHECK(Field::find_modulus(2, 3) == std::vector<std::uint32_t>{1, 1, 0, 1});
    CHECK(Field::find_modulus(3, 2) == std::vector<std::uint32_t>{1, 0, 1});
}

TEST_CASE("non-prime q is rejected") {
    CHECK_THROWS(Field(4, 2));
    CHECK_THROWS(Field(1, 3));
    CHECK_FALSE(Field::is_prime(9));
    CHECK(Field::is_prime(2));
    CHECK(Field::is_prime(13));
}

TEST_CASE("explicit modulus must be monic and irreducible") {
    CHECK_NOTHROW(Field(2, 3, {1, 1, 0, 1}));
    CHECK_THROWS(Field(2, 3, {1, 1, 0, 0}));  // not monic
    CHECK_THROWS(Field(2, 2, {1, 0, 1}));     // x^2+1 = (x+1)^2 over GF(2)
}

TEST_CASE("GF(2^3) hand-checked arithmetic") {
    Field f(2, 3);  // x^3 + x + 1
    CHECK(f.mul(2, 4) == 3);  // x * x^2 = x^3 = x + 1
    CHECK(f.inv(2) == 5);     // x * (x^2+1) = 1
    CHECK(f.frobenius(2, 1) == 4);  // x^2
    for (Field::Elt a = 0; a < 8; ++a) {
        CHECK(f.mul(a, 1) == a);
        CHECK(f.add(a, 0) == a);
        if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
    }
    CHECK_THROWS(f.inv(0));
}

TEST_CASE("field axioms hold on random triples") {
    std::mt19937_64 rng(12345);
    for (auto [q, m] : {std::pair<std::uint64_t, unsigned>{2, 6}, {3, 3}, {5, 2}, {7, 1}}) {
        Field f(q, m);
        for (int it = 0; it < 1000; ++it) {
            Field::Elt a = rand_elt(f, rng), b = rand_elt(f, rng), c = rand_elt(f, rng);
            CHECK(f.add(a, b) == f.add(b, a));
            CHECK(f.mul(a, b) == f.mul(b, a));
            CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
            CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
            CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
            CHECK(f.sub(f.add(a, b), b) == a);
            CHECK(f.add(a, f.neg(a)) == 0);
            if (a != 0) CHECK(f.mul(f.inv(a), a) == 1);
        }
    }
}

TEST_CASE("multiplication matches the naive polynomial reference") {
    std::mt19937_64 rng(99);
    for (auto [q, m] : {std::pair<std::uint64_t, unsigned>{2, 4}, {2, 8}, {3, 3}, {5, 2}}) {
        Field f(q, m);
        for (int it = 0; it < 500; ++it) {
            Field::Elt a = rand_elt(f, rng), b = rand_elt(f, rng);
            CHECK(f.mul(a, b) == naive_mul(f, a, b));
        }
    }
}

TEST_CASE("frobenius is a field automorphism of order dividing m") {
    std::mt19937_64 rng(7);
    Field f(2, 6);
    Field g(3, 3);
    for (const Field* fp : {&f, &g}) {
        for (int it = 0; it < 300; ++it) {
            Field::Elt a = rand_elt(*fp, rng), b = rand_elt(*fp, rng);
            CHECK(fp->frobenius(a, 0) == a);
            CHECK(fp->frobenius(a, fp->m()) == a);
            CHECK(fp->frobenius(fp->add(a, b), 1) ==
                  fp->add(fp->frobenius(a, 1), fp->frobenius(b, 1)));
            CHECK(fp->frobenius(fp->mul(a, b), 1) ==
                  fp->mul(fp->frobenius(a, 1), fp->frobenius(b, 1)));
            CHECK(fp->frobenius(a, 1) == fp->pow(a, fp->q()));
        }
        // frobenius fixes the base field GF(q)
        for (std::uint32_t c = 0; c < fp->q(); ++c) {
            std::vector<std::uint32_t> coords(fp->m(), 0);
            coords[0] = c;
            Field::Elt a = fp->from_coords(coords);
            for (unsigned i = 0; i < 2 * fp->m(); ++i) CHECK(fp->frobenius(a, i) == a);
        }
    }
}

TEST_CASE("integer encoding is a bijection with coordinate vectors") {
    Field f(3, 3);
    for (Field::Elt a = 0; a < f.order(); ++a) {
        auto c = f.coords(a);
        REQUIRE(c.size() == 3);
        Field::Elt back = f.from_coords(c);
        CHECK(back == a);
        // encoding definition: value = sum coords[i] q^i
        Field::Elt v = 0, p = 1;
        for (auto ci : c) {
            v += ci * p;
            p *= 3;
        }
        CHECK(v == a);
    }
    CHECK_THROWS(f.check_element(f.order()));
    CHECK_NOTHROW(f.check_element(f.order() - 1));
}

TEST_CASE("pow agrees with repeated multiplication") {
    Field f(2, 5);
    std::mt19937_64 rng(5);
    for (int it = 0; it < 100; ++it) {
        Field::Elt a = rand_elt(f, rng);
        Field::Elt acc = 1;
        for (unsigned e = 0; e < 10; ++e) {
            CHECK(f.pow(a, e) == acc);
            acc = f.mul(acc, a);
        }
        if (a != 0) CHECK(f.pow(a, f.order() - 1) == 1);  // Lagrange
    }
}
