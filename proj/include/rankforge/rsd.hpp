#pragma once

#include <iosfwd>
#include <optional>

#include "rankforge/linalg.hpp"

namespace rankforge {

struct CodeParams {
    std::uint64_t q;
    unsigned m;
    unsigned n;
    unsigned k;
    unsigned r;

    void validate() const;
};

struct RsdSolution {
    std::vector<Field::Elt> x;  // message, length k
    std::vector<Field::Elt> e;  // error, length n

    bool operator==(const RsdSolution&) const = default;
};

enum class CodeKind { Random, Gabidulin };

/// An RSD instance: y = x G + e with rank(e) = r. H is the parity check of G
/// (recomputed on load; the file format stores only G and y).
struct RsdInstance {
    CodeParams params;
    FieldRef ext;   // GF(q^m)
    FieldRef base;  // GF(q)
    Matrix G;       // k x n over GF(q^m), rank k
    Matrix H;       // (n-k) x n over GF(q^m), G H^T = 0
    std::vector<Field::Elt> y;
    std::optional<RsdSolution> hidden;  // test mode only
};

/// Rank over GF(q) of the coordinate-expansion matrix of v.
unsigned rank_weight(const Field& ext, FieldRef base, std::span<const Field::Elt> v);

/// Uniform full-rank generator plus its parity check (kernel basis of G).
std::pair<Matrix, Matrix> random_code(FieldRef ext, unsigned n, unsigned k,
                                      std::mt19937_64& rng);

/// Moore-matrix generator G_{i,j} = g_j^{q^i}; g must have rank weight n (needs n <= m).
Matrix gabidulin_code(FieldRef ext, FieldRef base, unsigned k,
                      std::span<const Field::Elt> g);

/// Error of rank exactly r: support E of dimension r times a full-rank r x n
/// GF(q) coefficient matrix. Also returns the support.
std::pair<std::vector<Field::Elt>, Subspace> sample_error(FieldRef ext, FieldRef base,
                                                          unsigned n, unsigned r,
                                                          std::mt19937_64& rng);

RsdInstance make_instance(const CodeParams& params, std::mt19937_64& rng,
                          CodeKind kind = CodeKind::Random, bool with_solution = true);

/// H v^T over GF(q^m), length n-k.
std::vector<Field::Elt> syndrome(const Matrix& H, std::span<const Field::Elt> v);

struct VerifyResult {
    bool accepted;
    std::string reason;  // empty on accept
};

/// Accepts iff y = x G + e and rank_weight(e) <= r (== r when strict_rank).
VerifyResult verify_solution(const RsdInstance& inst, const RsdSolution& sol,
                             bool strict_rank = false);

/// Heuristic uniqueness warning: true when r exceeds half the rank
/// Gilbert-Varshamov-style bound and multiple solutions are plausible.
bool uniqueness_warning(const CodeParams& params);

struct ParseError : std::runtime_error {
    ParseError(unsigned line, const std::string& msg);
    unsigned line;
};

void write_instance(std::ostream& os, const RsdInstance& inst);
RsdInstance read_instance(std::istream& is);
void write_instance_file(const std::string& path, const RsdInstance& inst);
RsdInstance read_instance_file(const std::string& path);

/// Common attack outcome record.
struct AttackReport {
    bool solved = false;
    bool infeasible = false;
    std::optional<RsdSolution> solution;
    std::uint64_t trials = 0;  // trials or hybrid rounds
    double seconds = 0.0;
    double predicted_trials = 0.0;             // proof-form exponent
    double predicted_trials_floor_form = 0.0;  // proposition floor-form exponent
    std::string detail;
};

}  // namespace rankforge
