#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace rankforge {

using BigInt = boost::multiprecision::cpp_int;

/// Bit-complexity figure for one attack formula. Units follow the source
/// statement (the published tables only reproduce under the as-stated
/// formulas), so GF(q)-op and GF(q^m)-op figures are tagged, not converted.
struct CostEstimate {
    double log2_ops = 0.0;
    double polynomial_part = 0.0;
    double exponent_part = 0.0;
    bool feasible = true;
    std::string unit;    // "GF(q)" or "GF(q^m)"
    std::string branch;  // which branch won, for min-of-two formulas
};

/// (nr+m)^3 q^{(m-r)(r-1)}
CostEstimate cost_chabaud_stern(unsigned n, unsigned k, unsigned r, unsigned m,
                                std::uint64_t q);
/// (k+r)^3 q^{(m-r)(r-1)+2}
CostEstimate cost_oj_basis(unsigned n, unsigned k, unsigned r, unsigned m, std::uint64_t q);
/// (k+r)^3 r^3 q^{(r-1)(k+1)}
CostEstimate cost_oj_coords(unsigned n, unsigned k, unsigned r, unsigned m, std::uint64_t q);

/// Error-support attack variants, floor-form exponents.
CostEstimate cost_es_v1(unsigned n, unsigned k, unsigned r, unsigned m, std::uint64_t q);
CostEstimate cost_es_v2(unsigned n, unsigned k, unsigned r, unsigned m, std::uint64_t q);
/// min of both branches, tagged with the winner.
CostEstimate cost_es(unsigned n, unsigned k, unsigned r, unsigned m, std::uint64_t q);

/// Plain linearization: feasible iff n >= (r+1)(k+1)-1, then ((r+1)(k+1)-1)^3.
CostEstimate cost_linearization(unsigned n, unsigned k, unsigned r, unsigned m,
                                std::uint64_t q);

/// t = max(0, ceil(((r+1)(k+1)-(n+1))/r)); infeasible when t > k (or r = 0 with
/// the plain attack infeasible).
unsigned hybrid_t(unsigned n, unsigned k, unsigned r);
/// r^3 k^3 q^{r t}
CostEstimate cost_hybrid(unsigned n, unsigned k, unsigned r, unsigned m, std::uint64_t q);

/// Number of d-dimensional subspaces of GF(q)^m, exact.
BigInt gaussian_binomial(unsigned m, unsigned d, std::uint64_t q);

BigInt binomial(std::uint64_t n, std::uint64_t k);
/// #M_d(u) = C(u+d-1, d)
BigInt monomial_count(unsigned d, unsigned u);

/// First index with a non-positive coefficient in (1-z^deg)^{n_eq} / (1-z)^{n_var},
/// exact big-integer expansion; -1 if none below max_degree.
int degree_of_regularity(unsigned n_eq, unsigned n_var, unsigned eq_degree,
                         unsigned max_degree = 2048);
/// Same for the reduced series (sum_{i<=q^r} z^i) (1-z)^{kr-n}.
int degree_of_regularity_reduced(std::uint64_t q, unsigned r, unsigned k, unsigned n,
                                 unsigned max_degree = 2048);

/// F5 cost n_eq * C(n_var + d_reg - 1, d_reg)^omega; informational only.
CostEstimate f5_cost(unsigned n_eq, unsigned n_var, unsigned d_reg, double omega = 3.0);

double log2_bigint(const BigInt& v);

/// One row of the published cryptanalysis tables: computed columns next to the
/// printed figures (Overbeck is reference data only, never computed).
struct TableRow {
    unsigned n, k, r, m;
    bool has_oj;  // the second table omits the OJ columns
    double oj1, oj2, es, lh;          // computed log2
    bool lin_feasible;
    double paper_oj1, paper_oj2, paper_over, paper_es, paper_lh;
};

std::vector<TableRow> paper_tables();
std::string render_tables();

}  // namespace rankforge
