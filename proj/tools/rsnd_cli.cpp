#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rsnd/json_io.hpp"
#include "rsnd/ratio.hpp"

// Command line front end. Exit codes:
//   0  success
//   1  unreadable input or JSON that does not match the expected format
//   2  well-formed input the requested operation cannot accept
//   3  verification found a violated demand
//   4  a configured resource budget was exceeded
//   5  internal error (a bug, not an input problem)

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw rsnd::parse_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw rsnd::parse_error("cannot write " + path);
    out << text;
}

rsnd::Instance load_instance(const std::string& path) {
    return rsnd::instance_from_json(rsnd::parse_json_text(read_file(path)));
}

rsnd::SolverKind parse_alg(const std::string& name) {
    auto kind = rsnd::solver_from_name(name);
    if (!kind)
        throw rsnd::structural_error("unknown algorithm \"" + name +
                                     "\" (use kefts-weighted, kefts-unweighted, rsnd2 or rsnd3-single)");
    return *kind;
}

int require_uniform(const rsnd::Instance& inst) {
    auto k = rsnd::uniform_all_pairs_k(inst);
    if (!k)
        throw rsnd::structural_error(
            "this solver needs --k or one demand per node pair with a common k");
    return *k;
}

struct SolveConfig {
    std::string in;
    std::string alg;
    std::string out = "-";
    int k = 0;
    bool k_given = false;
};

int run_solve(const SolveConfig& cfg) {
    rsnd::Instance inst = load_instance(cfg.in);
    rsnd::SolverKind kind = parse_alg(cfg.alg);
    auto uniform_k = [&] { return cfg.k_given ? cfg.k : require_uniform(inst); };
    rsnd::EdgeSet sol;
    nlohmann::json trace;
    switch (kind) {
        case rsnd::SolverKind::kefts_weighted: {
            rsnd::RoundingTrace tr;
            sol = rsnd::kefts_weighted(inst.graph, uniform_k(), &tr);
            trace = {{"rounds", tr.rounds},
                     {"cut_iterations", tr.cut_iterations},
                     {"promoted", tr.promoted},
                     {"lp_value", rsnd::detail::rational_json(tr.first_lp_value)}};
            break;
        }
        case rsnd::SolverKind::kefts_unweighted: {
            auto res = rsnd::kefts_unweighted(inst.graph, uniform_k());
            sol = res.edges;
            trace = {{"fractional_edges", res.fractional_edges},
                     {"high_degree_nodes", res.high_degree_nodes},
                     {"lp_value", rsnd::detail::rational_json(res.lp_value)}};
            break;
        }
        case rsnd::SolverKind::rsnd2: {
            rsnd::RoundingTrace tr;
            sol = rsnd::rsnd2(inst.graph, inst.demands, &tr);
            trace = {{"rounds", tr.rounds},
                     {"cut_iterations", tr.cut_iterations},
                     {"promoted", tr.promoted}};
            break;
        }
        case rsnd::SolverKind::rsnd3: {
            rsnd::Rsnd3Trace tr;
            sol = rsnd::rsnd3_single(inst.graph, inst.demands, &tr);
            trace = {{"components", tr.components},
                     {"regions", tr.regions},
                     {"separator_cost", rsnd::detail::rational_json(tr.separator_cost)},
                     {"flow_cost", rsnd::detail::rational_json(tr.flow_cost)},
                     {"relative_cost", rsnd::detail::rational_json(tr.relative_cost)},
                     {"steiner_cost", rsnd::detail::rational_json(tr.steiner_cost)}};
            break;
        }
    }
    write_output(cfg.out, rsnd::solution_to_json(inst.graph, sol, trace).dump(2) + "\n");
    return 0;
}

struct VerifyConfig {
    std::string in;
    std::string solution;
    std::string mode = "fault-enum";
    long long budget = 10000000;
};

int run_verify(const VerifyConfig& cfg) {
    rsnd::Instance inst = load_instance(cfg.in);
    rsnd::SolutionFile sol = rsnd::solution_from_json(rsnd::parse_json_text(read_file(cfg.solution)));
    for (int id : sol.edges)
        if (!inst.graph.has_edge(id))
            throw rsnd::structural_error("solution references unknown edge " + std::to_string(id));
    if (sol.cost && *sol.cost != inst.graph.total_weight(sol.edges))
        throw rsnd::structural_error("declared cost does not match the edge set");

    nlohmann::json out;
    std::optional<rsnd::Violation> violation;
    auto uniform = rsnd::uniform_all_pairs_k(inst);
    if (cfg.mode == "cut-oracle") {
        if (!uniform)
            throw rsnd::structural_error(
                "cut-oracle mode needs one demand per node pair with a common k");
        bool ok = rsnd::kefts_feasible(inst.graph, *uniform, sol.edges);
        out["feasible"] = ok;
        write_output("-", out.dump(2) + "\n");
        return ok ? 0 : 3;
    }
    if (cfg.mode != "fault-enum")
        throw rsnd::structural_error("unknown verify mode \"" + cfg.mode +
                                     "\" (use fault-enum or cut-oracle)");
    if (uniform)
        violation = rsnd::verify_kefts(inst.graph, sol.edges, *uniform, cfg.budget);
    else
        violation = rsnd::verify_rsnd(inst.graph, sol.edges, inst.demands, cfg.budget);
    out["feasible"] = !violation;
    if (violation) {
        nlohmann::json v;
        v["demand_index"] = violation->demand_index;
        v["s"] = violation->s;
        v["t"] = violation->t;
        v["faults"] = nlohmann::json::array();
        for (int id : violation->faults) v["faults"].push_back(id);
        out["violation"] = v;
    }
    write_output("-", out.dump(2) + "\n");
    return violation ? 3 : 0;
}

struct OracleConfig {
    std::string in;
    std::string out = "-";
    std::uint64_t budget = 1ull << 18;
};

int run_oracle(const OracleConfig& cfg) {
    rsnd::Instance inst = load_instance(cfg.in);
    auto opt = rsnd::exact_opt(inst.graph, inst.demands, cfg.budget);
    nlohmann::json trace = {{"mode", "exact"}};
    write_output(cfg.out, rsnd::solution_to_json(inst.graph, opt.edges, trace).dump(2) + "\n");
    return 0;
}

struct GenConfig {
    rsnd::GenSpec spec;
    std::string demand_spec = "kefts:2";
    std::string out = "-";
};

// Demand specs: "kefts:K" (every node pair, common k = K), "single:K" (one
// random pair) and "pairs:COUNT:MAXK" (COUNT random pairs, k uniform in
// 1..MAXK).
void apply_demand_spec(const std::string& text, rsnd::GenSpec& spec) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        auto colon = text.find(':', start);
        parts.push_back(text.substr(start, colon - start));
        if (colon == std::string::npos) break;
        start = colon + 1;
    }
    auto fail = [&] {
        throw rsnd::structural_error("unknown demand spec \"" + text +
                                     "\" (use kefts:K, single:K or pairs:COUNT:MAXK)");
    };
    auto num = [&](const std::string& part) {
        try {
            std::size_t used = 0;
            int value = std::stoi(part, &used);
            if (used != part.size()) fail();
            return value;
        } catch (const std::logic_error&) {
            fail();
            return 0;
        }
    };
    if (parts[0] == "kefts" && parts.size() == 2) {
        spec.kind = rsnd::GenSpec::DemandKind::all_pairs;
        spec.k = num(parts[1]);
    } else if (parts[0] == "single" && parts.size() == 2) {
        spec.kind = rsnd::GenSpec::DemandKind::single_pair;
        spec.k = num(parts[1]);
    } else if (parts[0] == "pairs" && parts.size() == 3) {
        spec.kind = rsnd::GenSpec::DemandKind::random_pairs;
        spec.pair_count = num(parts[1]);
        spec.max_k = num(parts[2]);
    } else {
        fail();
    }
}

int run_gen(GenConfig& cfg) {
    apply_demand_spec(cfg.demand_spec, cfg.spec);
    rsnd::Instance inst = rsnd::gen_random(cfg.spec);
    write_output(cfg.out, rsnd::instance_to_json(inst).dump(2) + "\n");
    return 0;
}

struct BenchConfig {
    std::string suite;
    int count = 5;
    std::uint64_t seed = 1;
};

rsnd::Instance bench_instance(rsnd::SolverKind kind, std::uint64_t seed) {
    rsnd::GenSpec spec;
    spec.seed = seed;
    spec.n = 6;
    spec.edge_percent = 60;
    switch (kind) {
        case rsnd::SolverKind::kefts_weighted:
            spec.weight_hi = 4;
            spec.weight_max_den = 2;
            spec.k = 2;
            break;
        case rsnd::SolverKind::kefts_unweighted:
            spec.k = 2;
            break;
        case rsnd::SolverKind::rsnd2:
            spec.kind = rsnd::GenSpec::DemandKind::random_pairs;
            spec.pair_count = 3;
            spec.max_k = 2;
            break;
        case rsnd::SolverKind::rsnd3:
            spec.kind = rsnd::GenSpec::DemandKind::single_pair;
            spec.plant_two_cut = true;
            spec.k = 3;
            break;
    }
    return rsnd::gen_random(spec);
}

// Runs every solver over a batch of generated instances, compares each output
// to the exhaustive optimum and prints the worst observed ratio. Infeasible
// output or a broken ratio bound is a bug, so those abort with exit code 5.
int run_bench(const BenchConfig& cfg) {
    if (cfg.suite != "ratios")
        throw rsnd::structural_error("unknown suite \"" + cfg.suite + "\" (use ratios)");
    if (cfg.count < 1) throw rsnd::structural_error("count must be >= 1");
    std::cout << "suite: ratios, " << cfg.count << " instances per algorithm\n";
    std::cout << std::left << std::setw(18) << "algorithm" << std::setw(12) << "max_ratio"
              << "bound\n";
    for (auto kind : {rsnd::SolverKind::kefts_weighted, rsnd::SolverKind::kefts_unweighted,
                      rsnd::SolverKind::rsnd2, rsnd::SolverKind::rsnd3}) {
        rsnd::Rational max_ratio = 0;
        std::uint64_t seed = cfg.seed;
        for (int i = 0; i < cfg.count; ++i) {
            rsnd::Instance inst = bench_instance(kind, seed++);
            while (inst.graph.edge_count() > 16) inst = bench_instance(kind, seed++);
            auto rep = rsnd::run_and_compare(kind, inst);
            if (!rep.feasible)
                throw rsnd::internal_error(std::string(rsnd::solver_name(kind)) +
                                           " produced an infeasible solution");
            if (!rep.within)
                throw rsnd::internal_error(std::string(rsnd::solver_name(kind)) +
                                           " exceeded its approximation bound");
            if (rep.opt_cost && *rep.opt_cost > 0)
                max_ratio = std::max(max_ratio, rsnd::Rational(rep.alg_cost / *rep.opt_cost));
        }
        std::cout << std::left << std::setw(18) << rsnd::solver_name(kind) << std::setw(12)
                  << rsnd::format_rational(max_ratio)
                  << rsnd::format_rational(rsnd::ratio_bound(kind, 2)) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"relative fault tolerant network design toolkit"};
    app.require_subcommand(1);

    SolveConfig solve_cfg;
    auto* solve = app.add_subcommand("solve", "run an approximation solver on an instance");
    solve->add_option("--in", solve_cfg.in, "instance JSON file")->required();
    solve->add_option("--alg", solve_cfg.alg,
                      "kefts-weighted | kefts-unweighted | rsnd2 | rsnd3-single")
        ->required();
    auto* solve_k = solve->add_option("--k", solve_cfg.k,
                                      "fault parameter for the kefts solvers (otherwise taken "
                                      "from an all-pairs demand list)");
    solve->add_option("--out", solve_cfg.out, "output file, - for stdout");

    VerifyConfig verify_cfg;
    auto* verify = app.add_subcommand("verify", "check a solution file against an instance");
    verify->add_option("--in", verify_cfg.in, "instance JSON file")->required();
    verify->add_option("--solution", verify_cfg.solution, "solution JSON file")->required();
    verify->add_option("--mode", verify_cfg.mode, "fault-enum (default) or cut-oracle");
    verify->add_option("--budget", verify_cfg.budget, "operation budget for fault enumeration");

    OracleConfig oracle_cfg;
    auto* oracle = app.add_subcommand("oracle", "exact optimum by exhaustive search");
    oracle->add_option("--in", oracle_cfg.in, "instance JSON file")->required();
    oracle->add_option("--budget", oracle_cfg.budget, "subset budget (default 2^18)");
    oracle->add_option("--out", oracle_cfg.out, "output file, - for stdout");

    GenConfig gen_cfg;
    auto* gen = app.add_subcommand("gen", "generate a random instance deterministically");
    gen->add_option("--n", gen_cfg.spec.n, "node count");
    gen->add_option("--p", gen_cfg.spec.edge_percent, "edge probability in percent");
    gen->add_option("--parallel", gen_cfg.spec.parallel_percent, "parallel edge probability in percent");
    gen->add_option("--wlo", gen_cfg.spec.weight_lo, "smallest weight numerator");
    gen->add_option("--whi", gen_cfg.spec.weight_hi, "largest weight numerator");
    gen->add_option("--wden", gen_cfg.spec.weight_max_den, "largest weight denominator");
    gen->add_option("--demand-spec", gen_cfg.demand_spec,
                    "kefts:K | single:K | pairs:COUNT:MAXK (default kefts:2)");
    gen->add_option("--seed", gen_cfg.spec.seed, "random seed");
    gen->add_flag("--plant2", gen_cfg.spec.plant_two_cut, "plant a 2-edge cut between two blocks");
    gen->add_option("--out", gen_cfg.out, "output file, - for stdout");

    BenchConfig bench_cfg;
    auto* bench = app.add_subcommand("bench", "run a generated suite and print ratio tables");
    bench->add_option("--suite", bench_cfg.suite, "suite name (ratios)")->required();
    bench->add_option("--count", bench_cfg.count, "instances per algorithm");
    bench->add_option("--seed", bench_cfg.seed, "base random seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }
    solve_cfg.k_given = solve_k->count() > 0;

    try {
        if (solve->parsed()) return run_solve(solve_cfg);
        if (verify->parsed()) return run_verify(verify_cfg);
        if (oracle->parsed()) return run_oracle(oracle_cfg);
        if (gen->parsed()) return run_gen(gen_cfg);
        if (bench->parsed()) return run_bench(bench_cfg);
        throw rsnd::internal_error("no subcommand dispatched");
    } catch (const rsnd::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const rsnd::structural_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const rsnd::infeasible_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const rsnd::resource_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 5;
    }
}
