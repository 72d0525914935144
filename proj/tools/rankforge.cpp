#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "rankforge/attack_algebraic.hpp"
#include "rankforge/attack_support.hpp"
#include "rankforge/estimator.hpp"
#include "rankforge/oracle.hpp"
#include "rankforge/rsd.hpp"

namespace {

using namespace rankforge;

std::uint64_t env_seed() {
    if (const char* s = std::getenv("RANKFORGE_SEED")) {
        char* end = nullptr;
        std::uint64_t v = std::strtoull(s, &end, 10);
        if (end && *end == '\0') return v;
    }
    return 0;
}

std::string join(std::span<const Field::Elt> v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
    return os.str();
}

void print_params(const CodeParams& p) {
    std::cout << "q: " << p.q << "\nm: " << p.m << "\nn: " << p.n << "\nk: " << p.k
              << "\nr: " << p.r << "\n";
}

int report_and_exit_code(const RsdInstance& inst, const AttackReport& rep) {
    if (rep.infeasible) {
        std::cout << "outcome: infeasible\ndetail: " << rep.detail << "\n";
        return 2;
    }
    std::cout << "trials: " << rep.trials << "\n";
    std::cout << "predicted_trials: " << rep.predicted_trials << "\n";
    std::cout << "seconds: " << rep.seconds << "\n";
    if (rep.solved && rep.solution &&
        verify_solution(inst, *rep.solution).accepted) {  // re-verify before printing
        std::cout << "outcome: solved\n";
        std::cout << "solution_x: " << join(rep.solution->x) << "\n";
        std::cout << "solution_e: " << join(rep.solution->e) << "\n";
        return 0;
    }
    std::cout << "outcome: failed\n";
    if (!rep.detail.empty()) std::cout << "detail: " << rep.detail << "\n";
    return 1;
}

int cmd_gen(const CodeParams& p, const std::string& mode, std::uint64_t seed,
            bool with_solution, const std::string& out) {
    p.validate();
    std::mt19937_64 rng(seed);
    CodeKind kind = mode == "gabidulin" ? CodeKind::Gabidulin : CodeKind::Random;
    RsdInstance inst = make_instance(p, rng, kind, with_solution);
    write_instance_file(out, inst);
    print_params(p);
    std::cout << "mode: " << mode << "\nseed: " << seed << "\nout: " << out << "\n";
    if (uniqueness_warning(p))
        std::cout << "warning: r exceeds half the rank Gilbert-Varshamov bound; "
                     "multiple solutions are plausible\n";
    return 0;
}

int cmd_solve(const std::string& in, const std::string& attack,
              std::optional<unsigned> t, std::optional<unsigned> r_prime,
              std::uint64_t max_trials, unsigned workers, std::uint64_t seed) {
    RsdInstance inst = read_instance_file(in);
    print_params(inst.params);
    std::cout << "attack: " << attack << "\nseed: " << seed << "\nworkers: " << workers
              << "\n";
    if (attack == "brute") {
        try {
            auto start = std::chrono::steady_clock::now();
            auto sols = brute_force(inst);
            double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                                        start)
                              .count();
            std::cout << "seconds: " << secs << "\n";
            std::cout << "solutions: " << sols.size() << "\n";
            for (std::size_t i = 0; i < sols.size(); ++i) {
                std::cout << "solution_x: " << join(sols[i].x) << "\n";
                std::cout << "solution_e: " << join(sols[i].e) << "\n";
            }
            std::cout << "outcome: " << (sols.empty() ? "failed" : "solved") << "\n";
            return sols.empty() ? 1 : 0;
        } catch (const EnumerationGuard& g) {
            std::cout << "outcome: infeasible\ndetail: " << g.what() << "\n";
            return 2;
        }
    }
    AttackReport rep;
    if (attack == "es1" || attack == "es2") {
        SupportGuessConfig cfg;
        cfg.r_prime = r_prime;
        cfg.max_trials = max_trials;
        cfg.seed = seed;
        cfg.workers = workers;
        rep = attack == "es1" ? es_attack_v1(inst, cfg) : es_attack_v2(inst, cfg);
    } else if (attack == "lin") {
        rep = lin_attack(inst);
    } else if (attack == "hybrid") {
        HybridConfig cfg;
        cfg.t = t;
        cfg.max_rounds = max_trials;
        cfg.seed = seed;
        cfg.workers = workers;
        rep = hybrid_attack(inst, cfg);
    } else {
        std::cerr << "unknown attack: " << attack << "\n";
        return 2;
    }
    return report_and_exit_code(inst, rep);
}

void print_estimate(const char* name, const CostEstimate& c) {
    std::cout << name << "_feasible: " << (c.feasible ? "yes" : "no") << "\n";
    if (c.feasible) {
        std::cout << name << "_log2: " << c.log2_ops << "\n";
        std::cout << name << "_unit: " << c.unit << "\n";
        if (!c.branch.empty()) std::cout << name << "_branch: " << c.branch << "\n";
    }
}

int cmd_estimate(unsigned n, unsigned k, unsigned r, unsigned m, std::uint64_t q,
                 double omega) {
    std::cout << "q: " << q << "\nm: " << m << "\nn: " << n << "\nk: " << k << "\nr: " << r
              << "\nomega: " << omega << "\n";
    print_estimate("chabaud_stern", cost_chabaud_stern(n, k, r, m, q));
    print_estimate("oj_basis", cost_oj_basis(n, k, r, m, q));
    print_estimate("oj_coords", cost_oj_coords(n, k, r, m, q));
    print_estimate("es_v1", cost_es_v1(n, k, r, m, q));
    print_estimate("es_v2", cost_es_v2(n, k, r, m, q));
    print_estimate("es", cost_es(n, k, r, m, q));
    print_estimate("linearization", cost_linearization(n, k, r, m, q));
    std::cout << "hybrid_t: " << hybrid_t(n, k, r) << "\n";
    print_estimate("hybrid", cost_hybrid(n, k, r, m, q));
    int dreg = degree_of_regularity(k * r, n, 2);
    std::cout << "d_reg_generic_quadratic: " << dreg << "\n";
    return 0;
}

int cmd_export(const std::string& in, const std::vector<std::string>& guess_args,
               const std::string& out) {
    RsdInstance inst = read_instance_file(in);
    std::map<unsigned, Field::Elt> guesses;
    for (const auto& g : guess_args) {
        // form c<i>=<value>
        auto eq = g.find('=');
        if (g.size() < 4 || g[0] != 'c' || eq == std::string::npos)
            throw CLI::ValidationError("--guess", "expected c<i>=<value>, got " + g);
        unsigned i = static_cast<unsigned>(std::stoul(g.substr(1, eq - 1)));
        Field::Elt v = std::stoull(g.substr(eq + 1));
        guesses[i] = v;
    }
    std::ofstream os(out);
    if (!os) throw std::runtime_error("cannot open " + out);
    export_polynomial_system(os, inst, guesses);
    std::cout << "out: " << out << "\nequations: " << inst.params.n
              << "\nguesses: " << guesses.size() << "\n";
    return 0;
}

int cmd_bench(const std::string& suite, std::uint64_t seed) {
    int failures = 0;
    auto check = [&](const std::string& name, bool ok, double secs) {
        std::cout << (ok ? "PASS" : "FAIL") << " " << name << " (" << secs << " s)\n";
        if (!ok) ++failures;
    };
    auto timed = [](auto&& fn) {
        auto start = std::chrono::steady_clock::now();
        bool ok = fn();
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return std::pair<bool, double>(ok, secs);
    };

    {
        auto [ok, secs] = timed([] {
            auto rows = paper_tables();
            for (const auto& row : rows) {
                if (row.has_oj && (std::abs(row.oj1 - row.paper_oj1) > 2 ||
                                   std::abs(row.oj2 - row.paper_oj2) > 2))
                    return false;
                if (std::abs(row.es - row.paper_es) > 2 ||
                    std::abs(row.lh - row.paper_lh) > 2 || row.lin_feasible)
                    return false;
            }
            return rows.size() == 6;
        });
        check("table-regression", ok, secs);
    }
    {
        auto [ok, secs] = timed([&] {
            std::mt19937_64 rng(derive_seed(seed, 1));
            RsdInstance inst = make_instance({2, 10, 12, 2, 3}, rng);
            auto rep = lin_attack(inst);
            return rep.solved && rep.solution == inst.hidden;
        });
        check("linearization-smoke", ok, secs);
    }
    {
        auto [ok, secs] = timed([&] {
            std::mt19937_64 rng(derive_seed(seed, 2));
            RsdInstance inst = make_instance({2, 10, 9, 2, 3}, rng);
            HybridConfig cfg;
            cfg.seed = derive_seed(seed, 3);
            auto rep = hybrid_attack(inst, cfg);
            return rep.solved;
        });
        check("hybrid-smoke", ok, secs);
    }
    if (suite == "paper-desk") {
        {
            auto [ok, secs] = timed([&] {
                for (unsigned i = 0; i < 20; ++i) {
                    std::mt19937_64 rng(derive_seed(seed, 100 + i));
                    RsdInstance inst = make_instance({2, 6, 8, 2, 2}, rng);
                    SupportGuessConfig cfg;
                    cfg.seed = derive_seed(seed, 200 + i);
                    if (!es_attack_v1(inst, cfg).solved) return false;
                }
                return true;
            });
            check("es-v1-desk", ok, secs);
        }
        {
            auto [ok, secs] = timed([&] {
                for (unsigned i = 0; i < 20; ++i) {
                    std::mt19937_64 rng(derive_seed(seed, 300 + i));
                    RsdInstance inst = make_instance({2, 6, 9, 2, 2}, rng);
                    SupportGuessConfig cfg;
                    cfg.seed = derive_seed(seed, 400 + i);
                    if (!es_attack_v2(inst, cfg).solved) return false;
                }
                return true;
            });
            check("es-v2-desk", ok, secs);
        }
        {
            auto [ok, secs] = timed([&] {
                for (unsigned i = 0; i < 10; ++i) {
                    std::mt19937_64 rng(derive_seed(seed, 500 + i));
                    RsdInstance inst = make_instance({2, 5, 6, 1, 2}, rng);
                    auto sols = brute_force(inst);
                    bool planted = false;
                    for (const auto& s : sols) planted |= inst.hidden && s == *inst.hidden;
                    if (!planted) return false;
                }
                return true;
            });
            check("oracle-desk", ok, secs);
        }
    }
    std::cout << (failures == 0 ? "suite: pass" : "suite: fail") << "\n";
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rankforge: rank-metric syndrome decoding attack toolkit"};
    app.require_subcommand(1);

    // gen
    CodeParams gp{2, 0, 0, 0, 0};
    std::string gen_mode = "random", gen_out;
    std::uint64_t gen_seed = env_seed();
    bool with_solution = false;
    auto* gen = app.add_subcommand("gen", "generate an RSD instance file");
    gen->add_option("--q", gp.q)->required();
    gen->add_option("--m", gp.m)->required();
    gen->add_option("--n", gp.n)->required();
    gen->add_option("--k", gp.k)->required();
    gen->add_option("--r", gp.r)->required();
    gen->add_option("--mode", gen_mode)->check(CLI::IsMember({"random", "gabidulin"}));
    gen->add_option("--seed", gen_seed);
    gen->add_flag("--with-solution", with_solution, "store the planted solution (test mode)");
    gen->add_option("--out", gen_out)->required();

    // solve
    std::string solve_in, attack;
    std::optional<unsigned> opt_t, opt_rp;
    std::uint64_t max_trials = 0, solve_seed = env_seed();
    unsigned workers = 1;
    auto* solve = app.add_subcommand("solve", "run an attack on an instance file");
    solve->add_option("--in", solve_in)->required();
    solve->add_option("--attack", attack)
        ->required()
        ->check(CLI::IsMember({"es1", "es2", "lin", "hybrid", "brute"}));
    solve->add_option("--t", opt_t, "hybrid guess count");
    solve->add_option("--r-prime", opt_rp, "support guess dimension");
    solve->add_option("--max-trials", max_trials);
    solve->add_option("--workers", workers);
    solve->add_option("--seed", solve_seed);

    // estimate
    unsigned en = 0, ek = 0, er = 0, em = 0;
    std::uint64_t eq = 2;
    double omega = 3.0;
    bool tables = false;
    auto* est = app.add_subcommand("estimate", "attack complexity estimates");
    est->add_option("--n", en);
    est->add_option("--k", ek);
    est->add_option("--r", er);
    est->add_option("--m", em);
    est->add_option("--q", eq);
    est->add_option("--omega", omega);
    est->add_flag("--paper-tables", tables, "emit the published-table regression report");

    // export
    std::string exp_in, exp_out;
    std::vector<std::string> guesses;
    auto* exp = app.add_subcommand("export", "write the POLYSYS polynomial system");
    exp->add_option("--in", exp_in)->required();
    exp->add_option("--guess", guesses, "substitute c<i>=<value>");
    exp->add_option("--out", exp_out)->required();

    // bench
    std::string suite = "smoke";
    std::uint64_t bench_seed = env_seed();
    auto* bench = app.add_subcommand("bench", "run the desk-scale check suites");
    bench->add_option("--suite", suite)->check(CLI::IsMember({"smoke", "paper-desk"}));
    bench->add_option("--seed", bench_seed);

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) return cmd_gen(gp, gen_mode, gen_seed, with_solution, gen_out);
        if (solve->parsed())
            return cmd_solve(solve_in, attack, opt_t, opt_rp, max_trials, workers,
                             solve_seed);
        if (est->parsed()) {
            if (tables) {
                std::cout << rankforge::render_tables();
                return 0;
            }
            if (en == 0 || em == 0) {
                std::cerr << "estimate needs --n --k --r --m --q or --paper-tables\n";
                return 2;
            }
            return cmd_estimate(en, ek, er, em, eq, omega);
        }
        if (exp->parsed()) return cmd_export(exp_in, guesses, exp_out);
        if (bench->parsed()) return cmd_bench(suite, bench_seed);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
