#include "rankforge/rsd.hpp"

#include <fstream>
#include <sstream>

namespace rankforge {

void CodeParams::validate() const {
    if (!Field::is_prime(q)) throw std::invalid_argument("CodeParams: q must be prime");
    if (m < 1) throw std::invalid_argument("CodeParams: m must be >= 1");
    if (k < 1 || k >= n) throw std::invalid_argument("CodeParams: need 0 < k < n");
    if (r > n - k || r > m)
        throw std::invalid_argument("CodeParams: need r <= min(n-k, m)");
}

unsigned rank_weight(const Field& ext, FieldRef base, std::span<const Field::Elt> v) {
    return static_cast<unsigned>(rank(expand(ext, std::move(base), v)));
}

std::pair<Matrix, Matrix> random_code(FieldRef ext, unsigned n, unsigned k,
                                      std::mt19937_64& rng) {
    Matrix G = random_full_rank_matrix(ext, k, n, rng);
    Matrix H = kernel(G);
    return {std::move(G), std::move(H)};
}

Matrix gabidulin_code(FieldRef ext, FieldRef base, unsigned k,
                      std::span<const Field::Elt> g) {
    unsigned n = static_cast<unsigned>(g.size());
    if (n > ext->m()) throw std::invalid_argument("gabidulin_code: needs n <= m");
    if (k > n) throw std::invalid_argument("gabidulin_code: needs k <= n");
    if (rank_weight(*ext, std::move(base), g) != n)
        throw std::invalid_argument("gabidulin_code: g must have rank weight n");
    Matrix G(ext, k, n);
    for (unsigned j = 0; j < n; ++j) G.at(0, j) = g[j];
    for (unsigned i = 1; i < k; ++i)
        for (unsigned j = 0; j < n; ++j)
            G.at(i, j) = ext->pow(G.at(i - 1, j), ext->q());
    return G;
}

std::pair<std::vector<Field::Elt>, Subspace> sample_error(FieldRef ext, FieldRef base,
                                                          unsigned n, unsigned r,
                                                          std::mt19937_64& rng) {
    Subspace E = sample_subspace(base, ext->m(), r, rng);
    std::vector<Field::Elt> e(n, 0);
    if (r == 0) return {std::move(e), std::move(E)};
    Matrix coeff = random_full_rank_matrix(base, r, n, rng);
    auto E_elems = E.basis_elements(*ext);
    for (unsigned i = 0; i < n; ++i) {
        Field::Elt acc = 0;
        for (unsigned j = 0; j < r; ++j)
            acc = ext->add(acc, ext->scale(E_elems[j],
                                           static_cast<std::uint32_t>(coeff.at(j, i))));
        e[i] = acc;
    }
    return {std::move(e), std::move(E)};
}

RsdInstance make_instance(const CodeParams& params, std::mt19937_64& rng, CodeKind kind,
                          bool with_solution) {
    params.validate();
    FieldRef ext = make_field(params.q, params.m);
    FieldRef base = make_field(params.q, 1);
    Matrix G(ext, 0, 0);
    if (kind == CodeKind::Gabidulin) {
        Matrix rows = random_full_rank_matrix(base, params.n, params.m, rng);
        std::vector<Field::Elt> g(params.n);
        for (unsigned j = 0; j < params.n; ++j) {
            std::vector<std::uint32_t> c(params.m);
            for (unsigned i = 0; i < params.m; ++i)
                c[i] = static_cast<std::uint32_t>(rows.at(j, i));
            g[j] = ext->from_coords(c);
        }
        G = gabidulin_code(ext, base, params.k, g);
    } else {
        G = random_full_rank_matrix(ext, params.k, params.n, rng);
    }
    Matrix H = kernel(G);

    std::vector<Field::Elt> x(params.k);
    for (auto& xi : x) xi = random_element(*ext, rng);
    auto [e, support] = sample_error(ext, base, params.n, params.r, rng);
    std::vector<Field::Elt> y = G.vec_mul(x);
    for (unsigned j = 0; j < params.n; ++j) y[j] = ext->add(y[j], e[j]);

    RsdInstance inst{params, ext, base, std::move(G), std::move(H), std::move(y), std::nullopt};
    if (with_solution) inst.hidden = RsdSolution{std::move(x), std::move(e)};
    return inst;
}

std::vector<Field::Elt> syndrome(const Matrix& H, std::span<const Field::Elt> v) {
    return H.mul_vec(v);
}

VerifyResult verify_solution(const RsdInstance& inst, const RsdSolution& sol,
                             bool strict_rank) {
    if (sol.x.size() != inst.params.k || sol.e.size() != inst.params.n)
        return {false, "dimension mismatch"};
    const Field& f = *inst.ext;
    std::vector<Field::Elt> xg = inst.G.vec_mul(sol.x);
    for (unsigned j = 0; j < inst.params.n; ++j)
        if (f.add(xg[j], sol.e[j]) != inst.y[j]) return {false, "y != x G + e"};
    unsigned w = rank_weight(f, inst.base, sol.e);
    if (strict_rank ? (w != inst.params.r) : (w > inst.params.r))
        return {false, "error rank weight " + std::to_string(w)};
    return {true, ""};
}

bool uniqueness_warning(const CodeParams& p) {
    // smallest d with q^{(m+n)d - d^2} >= q^{m(n-k)}: typical minimum distance of
    // a random code; multiple solutions plausible once 2r exceeds it
    unsigned d_gv = 0;
    while (d_gv < std::min(p.m, p.n) &&
           static_cast<long long>(p.m + p.n) * d_gv - static_cast<long long>(d_gv) * d_gv <
               static_cast<long long>(p.m) * (p.n - p.k))
        ++d_gv;
    return 2 * p.r > d_gv;
}

ParseError::ParseError(unsigned line_no, const std::string& msg)
    : std::runtime_error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}

namespace {

void write_row(std::ostream& os, std::span<const Field::Elt> row) {
    for (std::size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << row[j];
    os << "\n";
}

class LineReader {
public:
    explicit LineReader(std::istream& is) : is_(is) {}

    // next non-empty line with comments stripped; false on EOF
    bool next(std::string& out) {
        std::string raw;
        while (std::getline(is_, raw)) {
            ++line_;
            auto hash = raw.find('#');
            if (hash != std::string::npos) raw.erase(hash);
            std::size_t a = raw.find_first_not_of(" \t\r");
            if (a == std::string::npos) continue;
            std::size_t b = raw.find_last_not_of(" \t\r");
            out = raw.substr(a, b - a + 1);
            return true;
        }
        return false;
    }

    std::string require(const std::string& what) {
        std::string s;
        if (!next(s)) throw ParseError(line_, "unexpected end of file, expected " + what);
        return s;
    }

    unsigned line() const { return line_; }

private:
    std::istream& is_;
    unsigned line_ = 0;
};

std::vector<std::uint64_t> parse_ints(const std::string& s, std::size_t expect,
                                      unsigned line, const std::string& what) {
    std::istringstream iss(s);
    std::vector<std::uint64_t> out;
    std::uint64_t v;
    while (iss >> v) out.push_back(v);
    std::string rest;
    if (iss.clear(), iss >> rest)
        throw ParseError(line, "non-integer token in " + what);
    if (out.size() != expect)
        throw ParseError(line, what + ": expected " + std::to_string(expect) +
                                   " integers, got " + std::to_string(out.size()));
    return out;
}

std::vector<Field::Elt> parse_elements(const Field& f, const std::string& s,
                                       std::size_t expect, unsigned line,
                                       const std::string& what) {
    auto ints = parse_ints(s, expect, line, what);
    for (auto v : ints)
        if (v >= f.order())
            throw ParseError(line, what + ": element encoding " + std::to_string(v) +
                                       " out of range");
    return ints;
}

}  // namespace

void write_instance(std::ostream& os, const RsdInstance& inst) {
    const CodeParams& p = inst.params;
    os << "RSD 1\n";
    os << "q " << p.q << " m " << p.m << " n " << p.n << " k " << p.k << " r " << p.r << "\n";
    os << "modulus";
    for (auto c : inst.ext->modulus()) os << " " << c;
    os << "\n";
    os << "G\n";
    for (unsigned i = 0; i < p.k; ++i) write_row(os, inst.G.row(i));
    os << "y ";
    for (unsigned j = 0; j < p.n; ++j) os << (j ? " " : "") << inst.y[j];
    os << "\n";
    if (inst.hidden) {
        os << "solution_x ";
        for (unsigned i = 0; i < p.k; ++i) os << (i ? " " : "") << inst.hidden->x[i];
        os << "\nsolution_e ";
        for (unsigned j = 0; j < p.n; ++j) os << (j ? " " : "") << inst.hidden->e[j];
        os << "\n";
    }
}

RsdInstance read_instance(std::istream& is) {
    LineReader rd(is);
    std::string s = rd.require("RSD header");
    if (s != "RSD 1") throw ParseError(rd.line(), "malformed header, expected 'RSD 1'");

    s = rd.require("parameter line");
    CodeParams p{};
    {
        std::istringstream iss(s);
        std::string kq, km, kn, kk, kr;
        if (!(iss >> kq >> p.q >> km >> p.m >> kn >> p.n >> kk >> p.k >> kr >> p.r) ||
            kq != "q" || km != "m" || kn != "n" || kk != "k" || kr != "r")
            throw ParseError(rd.line(), "malformed parameter line");
    }
    if (!Field::is_prime(p.q)) throw ParseError(rd.line(), "q is not prime");

    s = rd.require("modulus line");
    if (s.rfind("modulus", 0) != 0) throw ParseError(rd.line(), "expected modulus line");
    auto mod_ints = parse_ints(s.substr(7), p.m + 1, rd.line(), "modulus");
    std::vector<std::uint32_t> modulus(mod_ints.begin(), mod_ints.end());
    for (auto c : modulus)
        if (c >= p.q) throw ParseError(rd.line(), "modulus coefficient out of range");
    if (!Field::is_irreducible(p.q, modulus))
        throw ParseError(rd.line(), "modulus is not irreducible over GF(q)");

    FieldRef ext = make_field(p.q, p.m, modulus);
    FieldRef base = make_field(p.q, 1);

    s = rd.require("G marker");
    if (s != "G") throw ParseError(rd.line(), "expected 'G'");
    Matrix G(ext, p.k, p.n);
    for (unsigned i = 0; i < p.k; ++i) {
        std::string row_text = rd.require("G row");
        auto row = parse_elements(*ext, row_text, p.n, rd.line(), "G row");
        for (unsigned j = 0; j < p.n; ++j) G.at(i, j) = row[j];
    }
    if (rank(G) != p.k) throw ParseError(rd.line(), "G does not have full rank k");

    s = rd.require("y line");
    if (s.rfind("y", 0) != 0) throw ParseError(rd.line(), "expected y line");
    auto y = parse_elements(*ext, s.substr(1), p.n, rd.line(), "y");

    std::optional<RsdSolution> hidden;
    if (rd.next(s)) {
        if (s.rfind("solution_x", 0) != 0)
            throw ParseError(rd.line(), "expected solution_x line");
        auto x = parse_elements(*ext, s.substr(10), p.k, rd.line(), "solution_x");
        s = rd.require("solution_e line");
        if (s.rfind("solution_e", 0) != 0)
            throw ParseError(rd.line(), "expected solution_e line");
        auto e = parse_elements(*ext, s.substr(10), p.n, rd.line(), "solution_e");
        hidden = RsdSolution{std::move(x), std::move(e)};
    }

    Matrix H = kernel(G);
    return RsdInstance{p, ext, base, std::move(G), std::move(H), std::move(y),
                       std::move(hidden)};
}

void write_instance_file(const std::string& path, const RsdInstance& inst) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open " + path + " for writing");
    write_instance(os, inst);
}

RsdInstance read_instance_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open " + path);
    return read_instance(is);
}

}  // namespace rankforge
