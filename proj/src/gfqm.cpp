#include "rankforge/gfqm.hpp"

#include <algorithm>

namespace rankforge {

namespace {

using Poly = std::vector<std::uint32_t>;  // ascending degree, coefficients in [0, q)

int degree(const Poly& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (p[static_cast<size_t>(i)] != 0) return i;
    return -1;
}

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

std::uint32_t inv_mod_q(std::uint32_t a, std::uint64_t q) {
    // q is prime, a != 0
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(q), new_r = a;
    while (new_r != 0) {
        std::int64_t quot = r / new_r;
        std::swap(t -= quot * new_t, new_t);
        std::swap(r -= quot * new_r, new_r);
    }
    if (t < 0) t += static_cast<std::int64_t>(q);
    return static_cast<std::uint32_t>(t);
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint64_t q) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::uint64_t> acc(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            acc[i + j] = (acc[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % q;
    }
    Poly out(acc.size());
    for (size_t i = 0; i < acc.size(); ++i) out[i] = static_cast<std::uint32_t>(acc[i]);
    trim(out);
    return out;
}

Poly poly_mod(Poly a, const Poly& f, std::uint64_t q) {
    int df = degree(f);
    int da = degree(a);
    std::uint32_t lead_inv =
        df >= 0 ? inv_mod_q(f[static_cast<size_t>(df)], q) : 0;
    while (da >= df && df >= 0) {
        std::uint32_t c = static_cast<std::uint32_t>(
            static_cast<std::uint64_t>(a[static_cast<size_t>(da)]) * lead_inv % q);
        if (c != 0) {
            for (int j = 0; j <= df; ++j) {
                std::uint64_t sub = static_cast<std::uint64_t>(c) * f[static_cast<size_t>(j)] % q;
                std::uint64_t cur = a[static_cast<size_t>(da - df + j)];
                a[static_cast<size_t>(da - df + j)] =
                    static_cast<std::uint32_t>((cur + q - sub) % q);
            }
        }
        --da;
    }
    trim(a);
    return a;
}

Poly poly_powmod(const Poly& base, std::uint64_t e, const Poly& f, std::uint64_t q) {
    Poly result{1};
    Poly b = poly_mod(base, f, q);
    while (e > 0) {
        if (e & 1) result = poly_mod(poly_mul(result, b, q), f, q);
        b = poly_mod(poly_mul(b, b, q), f, q);
        e >>= 1;
    }
    return result;
}

Poly poly_sub(Poly a, const Poly& b, std::uint64_t q) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i)
        a[i] = static_cast<std::uint32_t>((a[i] + q - b[i]) % q);
    trim(a);
    return a;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t q) {
    while (degree(b) >= 0) {
        Poly r = poly_mod(a, b, q);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

std::vector<unsigned> prime_divisors(unsigned n) {
    std::vector<unsigned> out;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

bool Field::is_prime(std::uint64_t q) {
    if (q < 2) return false;
    for (std::uint64_t d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

bool Field::is_irreducible(std::uint64_t q, std::span<const std::uint32_t> poly) {
    Poly f(poly.begin(), poly.end());
    trim(f);
    int m = degree(f);
    if (m < 1) return false;
    if (f[static_cast<size_t>(m)] != 1) return false;  // monic only
    if (m == 1) return true;
    // Rabin: x^{q^m} == x mod f, and gcd(x^{q^{m/p}} - x, f) = 1 for prime p | m
    Poly x{0, 1};
    Poly u = poly_mod(x, f, q);
    std::vector<unsigned> checkpoints;
    for (unsigned p : prime_divisors(static_cast<unsigned>(m)))
        checkpoints.push_back(static_cast<unsigned>(m) / p);
    for (unsigned step = 1; step <= static_cast<unsigned>(m); ++step) {
        u = poly_powmod(u, q, f, q);
        if (std::find(checkpoints.begin(), checkpoints.end(), step) != checkpoints.end()) {
            Poly g = poly_gcd(f, poly_sub(u, x, q), q);
            if (degree(g) != 0) return false;
        }
    }
    return u == poly_mod(x, f, q);
}

std::vector<std::uint32_t> Field::find_modulus(std::uint64_t q, unsigned m) {
    if (!is_prime(q)) throw std::invalid_argument("find_modulus: q must be prime");
    if (m < 1) throw std::invalid_argument("find_modulus: m must be >= 1");
    Poly f(m + 1, 0);
    f[m] = 1;
    // low-coefficient tuples (c_0,...,c_{m-1}) in base-q counter order
    while (true) {
        if (is_irreducible(q, f)) return f;
        unsigned i = 0;
        while (i < m) {
            if (++f[i] < q) break;
            f[i] = 0;
            ++i;
        }
        if (i == m) throw std::logic_error("find_modulus: exhausted candidates");
    }
}

Field::Field(std::uint64_t q, unsigned m) : Field(q, m, find_modulus(q, m)) {}

Field::Field(std::uint64_t q, unsigned m, std::vector<std::uint32_t> modulus)
    : q_(q), m_(m), modulus_(std::move(modulus)) {
    if (!is_prime(q_)) throw std::invalid_argument("Field: q must be prime");
    if (m_ < 1) throw std::invalid_argument("Field: m must be >= 1");
    if (modulus_.size() != m_ + 1 || modulus_[m_] != 1)
        throw std::invalid_argument("Field: modulus must be monic of degree m");
    for (auto c : modulus_)
        if (c >= q_) throw std::invalid_argument("Field: modulus coefficient out of range");
    if (!is_irreducible(q_, modulus_))
        throw std::invalid_argument("Field: modulus is reducible over GF(q)");
    order_ = 1;
    for (unsigned i = 0; i < m_; ++i) {
        if (order_ > (std::uint64_t{1} << 62) / q_)
            throw std::invalid_argument("Field: q^m does not fit in 62 bits");
        order_ *= q_;
    }
    if (q_ == 2) {
        for (unsigned i = 0; i <= m_; ++i)
            if (modulus_[i]) gf2_mod_bits_ |= std::uint64_t{1} << i;
    }
}

void Field::check_element(Elt a) const {
    if (a >= order_) throw std::out_of_range("Field: element encoding out of range");
}

std::vector<std::uint32_t> Field::coords(Elt a) const {
    check_element(a);
    std::vector<std::uint32_t> c(m_);
    for (unsigned i = 0; i < m_; ++i) {
        c[i] = static_cast<std::uint32_t>(a % q_);
        a /= q_;
    }
    return c;
}

Field::Elt Field::from_coords(std::span<const std::uint32_t> c) const {
    if (c.size() != m_) throw std::invalid_argument("from_coords: wrong length");
    Elt a = 0;
    for (unsigned i = m_; i-- > 0;) {
        if (c[i] >= q_) throw std::out_of_range("from_coords: coordinate out of range");
        a = a * q_ + c[i];
    }
    return a;
}

Field::Elt Field::add(Elt a, Elt b) const {
    if (q_ == 2) return a ^ b;
    check_element(a);
    check_element(b);
    Elt out = 0, base = 1;
    for (unsigned i = 0; i < m_; ++i) {
        out += (a % q_ + b % q_) % q_ * base;
        a /= q_;
        b /= q_;
        base *= q_;
    }
    return out;
}

Field::Elt Field::neg(Elt a) const {
    if (q_ == 2) return a;
    check_element(a);
    Elt out = 0, base = 1;
    for (unsigned i = 0; i < m_; ++i) {
        out += (q_ - a % q_) % q_ * base;
        a /= q_;
        base *= q_;
    }
    return out;
}

Field::Elt Field::sub(Elt a, Elt b) const { return add(a, neg(b)); }

Field::Elt Field::scale(Elt a, std::uint32_t s) const {
    if (s >= q_) throw std::out_of_range("scale: scalar out of range");
    if (q_ == 2) return s ? a : 0;
    check_element(a);
    Elt out = 0, base = 1;
    for (unsigned i = 0; i < m_; ++i) {
        out += a % q_ * s % q_ * base;
        a /= q_;
        base *= q_;
    }
    return out;
}

Field::Elt Field::mul(Elt a, Elt b) const {
    check_element(a);
    check_element(b);
    if (q_ == 2) {
        // carryless multiply, then reduce by the modulus bitmask
        std::uint64_t lo = 0, hi = 0;
        for (unsigned i = 0; i < m_; ++i) {
            if ((a >> i) & 1) {
                lo ^= b << i;
                if (i > 0) hi ^= b >> (64 - i);
            }
        }
        for (int bit = static_cast<int>(2 * m_ - 2); bit >= static_cast<int>(m_); --bit) {
            bool set = bit < 64 ? ((lo >> bit) & 1) : ((hi >> (bit - 64)) & 1);
            if (!set) continue;
            int shift = bit - static_cast<int>(m_);
            std::uint64_t mask = gf2_mod_bits_;
            // xor modulus << shift into (hi:lo)
            if (shift < 64) lo ^= mask << shift;
            if (shift > 0 && shift <= 64) hi ^= mask >> (64 - shift);
            else if (shift > 64) hi ^= mask << (shift - 64);
        }
        return lo & (order_ - 1);
    }
    auto ca = coords(a), cb = coords(b);
    std::vector<std::uint64_t> acc(2 * m_ - 1, 0);
    for (unsigned i = 0; i < m_; ++i) {
        if (ca[i] == 0) continue;
        for (unsigned j = 0; j < m_; ++j)
            acc[i + j] = (acc[i + j] + static_cast<std::uint64_t>(ca[i]) * cb[j]) % q_;
    }
    for (unsigned i = 2 * m_ - 2; i >= m_; --i) {
        std::uint64_t c = acc[i];
        if (c == 0) continue;
        acc[i] = 0;
        for (unsigned j = 0; j < m_; ++j)
            acc[i - m_ + j] = (acc[i - m_ + j] + q_ - c * modulus_[j] % q_) % q_;
        if (i == m_) break;
    }
    Elt out = 0;
    for (unsigned i = m_; i-- > 0;) out = out * q_ + acc[i];
    return out;
}

Field::Elt Field::inv(Elt a) const {
    check_element(a);
    if (a == 0) throw std::domain_error("Field::inv: zero has no inverse");
    // extended Euclid on (a as polynomial, modulus)
    Poly r0 = modulus_;
    Poly r1(m_);
    {
        Elt t = a;
        for (unsigned i = 0; i < m_; ++i) {
            r1[i] = static_cast<std::uint32_t>(t % q_);
            t /= q_;
        }
        trim(r1);
    }
    Poly s0;        // coefficient of a in r0
    Poly s1{1};     // coefficient of a in r1
    while (degree(r1) > 0) {
        // r0 = quot*r1 + rem, tracked through s
        Poly rem = r0;
        Poly quot;
        int d1 = degree(r1);
        std::uint32_t lead_inv = inv_mod_q(r1[static_cast<size_t>(d1)], q_);
        while (degree(rem) >= d1) {
            int d = degree(rem);
            std::uint32_t c = static_cast<std::uint32_t>(
                static_cast<std::uint64_t>(rem[static_cast<size_t>(d)]) * lead_inv % q_);
            if (quot.size() < static_cast<size_t>(d - d1 + 1)) quot.resize(d - d1 + 1, 0);
            quot[static_cast<size_t>(d - d1)] = c;
            for (int j = 0; j <= d1; ++j) {
                std::uint64_t sub = static_cast<std::uint64_t>(c) * r1[static_cast<size_t>(j)] % q_;
                std::uint64_t cur = rem[static_cast<size_t>(d - d1 + j)];
                rem[static_cast<size_t>(d - d1 + j)] =
                    static_cast<std::uint32_t>((cur + q_ - sub) % q_);
            }
        }
        trim(rem);
        Poly snew = poly_sub(s0, poly_mul(quot, s1, q_), q_);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(snew);
    }
    if (degree(r1) != 0) throw std::logic_error("Field::inv: gcd not constant");
    std::uint32_t c_inv = inv_mod_q(r1[0], q_);
    Poly result(m_, 0);
    for (size_t i = 0; i < s1.size() && i < m_; ++i)
        result[i] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(s1[i]) * c_inv % q_);
    return from_coords(result);
}

Field::Elt Field::pow(Elt a, std::uint64_t e) const {
    check_element(a);
    Elt result = 1, b = a;
    while (e > 0) {
        if (e & 1) result = mul(result, b);
        b = mul(b, b);
        e >>= 1;
    }
    return result;
}

Field::Elt Field::frobenius(Elt a, unsigned i) const {
    check_element(a);
    i %= m_;
    Elt out = a;
    for (unsigned s = 0; s < i; ++s) out = pow(out, q_);
    return out;
}

}  // namespace rankforge
