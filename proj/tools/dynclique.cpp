// Copyright (c) dynclique contributors.
// SPDX-License-Identifier: Apache-2.0
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "dynclique/conformance.hpp"
#include "dynclique/engine.hpp"
#include "dynclique/generate.hpp"
#include "dynclique/lowerbounds.hpp"

using namespace dynclique;

namespace {

ChangeSet parse_changes(const std::string& list) {
    ChangeSet out;
    std::stringstream in(list);
    std::string part;
    while (std::getline(in, part, ','))
        if (!part.empty()) out.insert(parse_change_kind(part));
    return out;
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw BadParams("cannot write '" + path + "'");
    f << text;
}

struct RunOptions {
    std::string scenario;
    std::string algo;
    int budget = -1;
    std::string format = "human";
    uint64_t seed = 0;
};

int cmd_run(const RunOptions& o) {
    DynamicScenario sc = load_scenario_file(o.scenario);
    const Algorithm& alg = find_algorithm(o.algo);
    int computed = alg.budget(sc.n, sc.problem.r, std::max(1, scenario_max_degree(sc)));
    int b = o.budget >= 0 ? o.budget : computed;
    SimulationReport rep = run(sc, alg, b);
    if (o.budget >= 0 && o.budget != computed)
        rep.tags.push_back("budget-override(computed=" + std::to_string(computed) + ")");
    std::cout << (o.format == "machine" ? format_machine(rep) : format_human(rep));
    return rep.passed ? 0 : 1;
}

struct RandomOptions {
    RandomScenarioParams p;
    std::string task = "memlist";
    std::string changes = "edge-insert";
    std::string output;
};

int cmd_generate_random(RandomOptions o) {
    o.p.problem.task = parse_task(o.task);
    o.p.problem.allowed = parse_changes(o.changes);
    write_output(o.output, save_scenario(generate_random(o.p)));
    return 0;
}

struct AdversaryOptions {
    AdversarySpec spec;
    std::string family = "TriEdgeIns";
    std::string bipartite = "complete";
    std::string output;
};

int cmd_generate_adversary(AdversaryOptions o) {
    o.spec.family = parse_family(o.family);
    if (o.bipartite == "complete") {
        // Node families keep L in w_side and R in u_side, so the sizes read the same way.
        AdversaryLayout lay;
        gen_adversary(o.spec, &lay);
        const int left = static_cast<int>(lay.w_side.size()), right = static_cast<int>(lay.u_side.size());
        BipartiteGraph c{left, right, {}};
        for (int l = 0; l < left; ++l)
            for (int r = 0; r < right; ++r) c.edges.emplace_back(l, r);
        o.spec.c = c;
    }
    write_output(o.output, save_scenario(gen_adversary(o.spec)));
    return 0;
}

int cmd_oracle(const std::string& path, int round) {
    DynamicScenario sc = load_scenario_file(path);
    if (round < 0 || round > static_cast<int>(sc.events.size()))
        throw BadParams("round must be in [0, " + std::to_string(sc.events.size()) + "]");
    Graph g = sc.initial;
    for (int i = 0; i < round; ++i) apply_change_in_place(g, sc.events[i]);
    ExpectedOutputs exp = expected_outputs(g, sc.problem);
    std::cout << "round " << round << "\n";
    std::cout << "cliques s=" << sc.problem.s << " count " << exp.cliques().size() << "\n";
    for (const Clique& c : exp.cliques()) std::cout << "  " << to_string(c) << "\n";
    std::cout << "task " << to_string(sc.problem.task) << "\n";
    switch (sc.problem.task) {
    case Task::MemList:
    case Task::MemDetect:
        g.present().for_each(
            [&](NodeId v) { std::cout << "node " << v << " " << to_string(exp.expected_for(v)) << "\n"; });
        break;
    case Task::List:
        std::cout << "expect: every listed tuple is a clique and the union of lists equals the clique set\n";
        break;
    case Task::Detect:
        std::cout << "expect: " << (exp.cliques().empty() ? "no node outputs true" : "at least one node outputs true")
                  << "\n";
        break;
    }
    return 0;
}

int cmd_algos() {
    std::cout << std::left << std::setw(28) << "name" << std::setw(11) << "task" << std::setw(5) << "s"
              << std::setw(48) << "changes" << std::setw(8) << "r" << "budget\n";
    for (const Algorithm& a : catalog())
        std::cout << std::left << std::setw(28) << a.name << std::setw(11) << to_string(a.task) << std::setw(5)
                  << (a.s == 0 ? "any" : std::to_string(a.s)) << std::setw(48) << format_change_set(a.allowed)
                  << std::setw(8) << (a.r == 0 ? "param" : std::to_string(a.r)) << a.budget_formula << "\n";
    return 0;
}

int cmd_bounds(double eps, const std::vector<int>& ns, int r) {
    std::cout << "epsilon " << eps << ", r " << r << "\n";
    std::cout << std::left << std::setw(10) << "n" << std::setw(22) << "MLIST edge-ins LB" << std::setw(20)
              << "sqrt-lister budget" << std::setw(22) << "MLIST node-ins LB" << std::setw(20) << "block budget"
              << "MDTCT node-ins LB (one round)\n";
    for (int n : ns) {
        auto show = [](double v) {
            std::ostringstream s;
            s << std::fixed << std::setprecision(3) << v;
            return s.str();
        };
        std::cout << std::left << std::setw(10) << n << std::setw(22)
                  << show(eval_bound(BoundProblem::MLIST, ChangeKind::EdgeInsert, n, eps)) << std::setw(20)
                  << budget("tri-mlist-edgeins-sqrt", n, 1, 1) << std::setw(22)
                  << show(eval_bound(BoundProblem::MLIST, ChangeKind::NodeInsert, n, eps, r)) << std::setw(20)
                  << budget("mlist-rround-blocks", n, r, 1) 
                  << show(eval_bound(BoundProblem::MDTCT, ChangeKind::NodeInsert, n, eps)) << "\n";
    }
    std::cout << "edge-insertion bound constant is specific to the construction (|W1| at its guaranteed minimum)\n";
    return 0;
}

int cmd_suite(const std::string& scale, bool verbose) {
    Progress progress = [verbose](const std::string& line) {
        if (verbose) std::cerr << line << "\n";
    };
    std::vector<MatrixRow> rows = suite_matrix(scale == "full", progress);
    std::cout << format_matrix(rows);
    bool ok = true;
    for (const MatrixRow& r : rows) ok = ok && r.passed;
    std::cout << (ok ? "suite passed" : "suite FAILED") << "\n";
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dynamic-network clique detection and listing simulator"};
    app.require_subcommand(1);

    RunOptions run_opts;
    auto* run_cmd = app.add_subcommand("run", "Simulate an algorithm on a scenario and check every deadline round");
    run_cmd->add_option("-s,--scenario", run_opts.scenario, "Scenario file")->required();
    run_cmd->add_option("-a,--algo", run_opts.algo, "Catalog entry")->required();
    run_cmd->add_option("-b,--budget", run_opts.budget, "Budget override in bits (default: the entry's budget)");
    run_cmd->add_option("-f,--format", run_opts.format, "Report format")
        ->check(CLI::IsMember({"human", "machine"}))
        ->capture_default_str();
    run_cmd->add_option("--seed", run_opts.seed, "Recorded for reproducibility; simulations are deterministic");

    auto* gen_cmd = app.add_subcommand("generate", "Write a scenario file");
    gen_cmd->require_subcommand(1);
    RandomOptions rnd;
    rnd.p.edge_density = 0.3;
    auto* gen_random = gen_cmd->add_subcommand("random", "Random change sequence");
    gen_random->add_option("--n", rnd.p.n, "ID universe size")->capture_default_str();
    gen_random->add_option("--events", rnd.p.events, "Number of rounds")->capture_default_str();
    gen_random->add_option("--changes", rnd.changes, "Comma-separated change kinds")->capture_default_str();
    gen_random->add_option("--task", rnd.task, "memlist, memdetect, list or detect")->capture_default_str();
    gen_random->add_option("--s", rnd.p.problem.s, "Clique size")->capture_default_str();
    gen_random->add_option("--r", rnd.p.problem.r, "Rounds to converge")->capture_default_str();
    gen_random->add_option("--quiet", rnd.p.quiet, "Probability of a NoOp round")->capture_default_str();
    gen_random->add_option("--density", rnd.p.edge_density, "Initial edge probability")->capture_default_str();
    gen_random->add_option("--presence", rnd.p.presence, "Initial node presence probability")->capture_default_str();
    gen_random->add_option("--seed", rnd.p.seed, "Seed")->capture_default_str();
    gen_random->add_option("-o,--output", rnd.output, "Output file (default stdout)");

    AdversaryOptions adv;
    adv.spec.n = 8;
    adv.spec.t = 3;
    auto add_adversary_options = [&](CLI::App* cmd) {
        cmd->add_option("--family", adv.family, "TriEdgeIns, KsEdgeIns, TriNodeIns, TriMdtctNodeIns, KsNodeIns, KsMdtctNodeIns")
            ->capture_default_str();
        cmd->add_option("--n", adv.spec.n, "ID universe size")->capture_default_str();
        cmd->add_option("--t", adv.spec.t, "Size of U (edge families)")->capture_default_str();
        cmd->add_option("--s", adv.spec.s, "Clique size")->capture_default_str();
        cmd->add_option("--seed", adv.spec.seed, "Seed for the bipartite graph")->capture_default_str();
        cmd->add_option("--bipartite", adv.bipartite, "complete, or random (drawn from --seed)")
            ->check(CLI::IsMember({"complete", "random"}))
            ->capture_default_str();
        cmd->add_option("--w", adv.spec.w, "Index of the target node in W")->capture_default_str();
        cmd->add_option("--u", adv.spec.u, "Index of u in L (detection families)")->capture_default_str();
        cmd->add_option("--v", adv.spec.v, "Index of v in R (detection families)")->capture_default_str();
        cmd->add_option("--r", adv.spec.r, "Quiet rounds appended are r - 1")->capture_default_str();
        cmd->add_option("-o,--output", adv.output, "Output file (default stdout)");
    };
    auto* gen_adv = gen_cmd->add_subcommand("adversary", "Lower-bound construction");
    add_adversary_options(gen_adv);
    auto* adv_cmd = app.add_subcommand("adversary", "Same as 'generate adversary'");
    add_adversary_options(adv_cmd);

    std::string oracle_path;
    int oracle_round = 0;
    auto* oracle_cmd = app.add_subcommand("oracle", "Print the clique set and expected outputs at a round");
    oracle_cmd->add_option("-s,--scenario", oracle_path, "Scenario file")->required();
    oracle_cmd->add_option("--round", oracle_round, "Round index, 0 for the initial graph")->capture_default_str();

    auto* algos_cmd = app.add_subcommand("algos", "List the algorithm catalog");

    double eps = 1.0 / 3;
    std::vector<int> bound_ns{100, 1000, 10000, 100000};
    int bound_r = 1;
    auto* bounds_cmd = app.add_subcommand("bounds", "Evaluate lower bounds next to the catalog budgets");
    bounds_cmd->add_option("--eps", eps, "Error probability")->capture_default_str();
    bounds_cmd->add_option("--n", bound_ns, "Universe sizes")->capture_default_str();
    bounds_cmd->add_option("--r", bound_r, "Rounds for the node-insertion bound")->capture_default_str();

    std::string scale;
    bool verbose = false;
    auto* suite_cmd = app.add_subcommand("suite", "Run the conformance matrix");
    suite_cmd->add_option("scale", scale, "small or full")->required()->check(CLI::IsMember({"small", "full"}));
    suite_cmd->add_flag("-v,--verbose", verbose, "Print per-entry statistics to stderr");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run_cmd) return cmd_run(run_opts);
        if (*gen_random) return cmd_generate_random(rnd);
        if (*gen_adv || *adv_cmd) return cmd_generate_adversary(adv);
        if (*oracle_cmd) return cmd_oracle(oracle_path, oracle_round);
        if (*algos_cmd) return cmd_algos();
        if (*bounds_cmd) return cmd_bounds(eps, bound_ns, bound_r);
        if (*suite_cmd) return cmd_suite(scale, verbose);
    } catch (const ParseError& e) {
        std::cerr << "ParseError: " << e.what() << "\n";
        return 2;
    } catch (const PreconditionViolation& e) {
        std::cerr << "PreconditionViolation: " << e.what() << "\n";
        return 2;
    } catch (const UnsupportedProblem& e) {
        std::cerr << "UnsupportedProblem: " << e.what() << "\n";
        return 2;
    } catch (const UnknownAlgorithm& e) {
        std::cerr << "UnknownAlgorithm: " << e.what() << "\n";
        return 2;
    } catch (const BadParams& e) {
        std::cerr << "BadParams: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
