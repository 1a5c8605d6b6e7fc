// Copyright (c) dynclique contributors.
// SPDX-License-Identifier: Apache-2.0
#include "dynclique/engine.hpp"

#include <algorithm>
#include <stdexcept>

namespace dynclique {

std::set<int> deadline_rounds(const DynamicScenario& sc) {
    std::set<int> out;
    int r = sc.problem.r;
    int quiet = r; // rounds before the first one count as quiet
    for (size_t i = 0; i < sc.events.size(); ++i) {
        quiet = sc.events[i].kind == ChangeKind::NoOp ? quiet + 1 : 0;
        if (quiet >= r - 1) out.insert(static_cast<int>(i) + 1);
    }
    return out;
}

std::pair<int, long long> meter(const RoundTrace& trace) {
    int mx = 0;
    long long total = 0;
    for (const auto& [key, msg] : trace.sent) {
        mx = std::max(mx, msg.length());
        total += msg.length();
    }
    return {mx, total};
}

Simulation::Simulation(const Graph& initial, const ProblemSpec& problem, const Algorithm& alg, int budget,
                       int delta)
    : alg_(&alg), problem_(problem), budget_(budget), initial_(std::make_shared<const Graph>(initial)),
      graph_(initial), quiet_run_(problem.r), nodes_(initial.n()) {
    params_.n = initial.n();
    params_.r = problem.r;
    params_.s = problem.s;
    params_.delta = std::max(1, delta);
    initial.present().for_each([&](NodeId v) { nodes_[v] = init_node(alg, v, initial_, 0, params_); });
}

Simulation::Simulation(const Simulation& o)
    : alg_(o.alg_), problem_(o.problem_), params_(o.params_), budget_(o.budget_), initial_(o.initial_),
      graph_(o.graph_), round_(o.round_), quiet_run_(o.quiet_run_), nodes_(o.nodes_.size()) {
    for (size_t i = 0; i < nodes_.size(); ++i)
        if (o.nodes_[i]) nodes_[i] = o.nodes_[i]->clone();
}

StepResult Simulation::step(const TopologyChange& change, RoundTrace* trace) {
    StepResult res;
    Graph prev = graph_;
    apply_change_in_place(graph_, change);
    ++round_;
    if (change.kind == ChangeKind::NodeDelete) nodes_[change.u].reset();
    if (change.kind == ChangeKind::NodeInsert) nodes_[change.u] = init_node(*alg_, change.u, nullptr, round_, params_);

    const int n = graph_.n();
    std::vector<Mailbox> inbox(n);
    NodeSet empty(n);
    graph_.present().for_each([&](NodeId v) {
        const NodeSet& before = prev.is_present(v) ? prev.row(v) : empty;
        Mailbox out = nodes_[v]->send(round_, before, graph_.row(v));
        NodeId expect = graph_.row(v).first();
        for (auto& [to, msg] : out) {
            if (to != expect) throw std::logic_error("outbox of node " + std::to_string(v) + " does not match its neighbors");
            expect = graph_.row(v).next(expect);
            res.max_bits = std::max(res.max_bits, msg.length());
            res.total_bits += msg.length();
            if (msg.length() > budget_)
                res.violations.push_back({round_, ViolationKind::BudgetExceeded,
                                          std::to_string(v) + "->" + std::to_string(to) + " sent " +
                                              std::to_string(msg.length()) + " bits, budget " +
                                              std::to_string(budget_)});
            if (trace) trace->sent[{v, to}] = msg;
            inbox[to].emplace_back(v, std::move(msg));
        }
        if (expect != -1) throw std::logic_error("outbox of node " + std::to_string(v) + " misses neighbors");
    });

    std::map<NodeId, NodeOutput> outputs;
    graph_.present().for_each([&](NodeId v) { outputs[v] = nodes_[v]->receive(round_, inbox[v]); });

    quiet_run_ = change.kind == ChangeKind::NoOp ? quiet_run_ + 1 : 0;
    res.deadline = quiet_run_ >= problem_.r - 1;
    if (res.deadline) {
        for (std::string& why : ExpectedOutputs(graph_, problem_).check(outputs))
            res.violations.push_back({round_, ViolationKind::OutputWrong, std::move(why)});
    }
    if (trace) {
        trace->round = round_;
        trace->change = change;
        trace->outputs = std::move(outputs);
        trace->deadline = res.deadline;
    }
    return res;
}

int scenario_max_degree(const DynamicScenario& sc) {
    int d = sc.initial.max_degree();
    Graph g = sc.initial;
    for (const TopologyChange& c : sc.events) {
        apply_change_in_place(g, c);
        d = std::max(d, g.max_degree());
    }
    return d;
}

SimulationReport run(const DynamicScenario& sc, const Algorithm& alg, int budget, std::vector<RoundTrace>* traces) {
    validate(sc);
    if (!alg.supports(sc.problem))
        throw UnsupportedProblem(alg.name + " does not support " + to_string(sc.problem.task) +
                                 " s=" + std::to_string(sc.problem.s) + " r=" + std::to_string(sc.problem.r) +
                                 " changes=" + format_change_set(sc.problem.allowed));
    SimulationReport rep;
    rep.scenario = sc.name;
    rep.algorithm = alg.name;
    rep.budget = budget;
    rep.n = sc.n;
    rep.r = sc.problem.r;
    if (uses_reinsertion(sc)) rep.tags.push_back("extension");

    Simulation sim(sc.initial, sc.problem, alg, budget, scenario_max_degree(sc));
    for (const TopologyChange& c : sc.events) {
        RoundTrace trace;
        StepResult st = sim.step(c, traces ? &trace : nullptr);
        RoundSummary row;
        row.round = sim.round();
        row.change = c;
        row.max_bits = st.max_bits;
        row.total_bits = st.total_bits;
        row.deadline = st.deadline;
        row.ok = st.violations.empty();
        rep.rounds.push_back(row);
        rep.max_bits = std::max(rep.max_bits, st.max_bits);
        for (Violation& v : st.violations) rep.violations.push_back(std::move(v));
        if (traces) traces->push_back(std::move(trace));
    }
    rep.passed = rep.violations.empty();
    return rep;
}

SimulationReport run(const DynamicScenario& sc, const std::string& algorithm, int budget) {
    return run(sc, find_algorithm(algorithm), budget);
}

SimulationReport run(const DynamicScenario& sc, const Algorithm& alg) {
    return run(sc, alg, alg.budget(sc.n, sc.problem.r, std::max(1, scenario_max_degree(sc))));
}

} // namespace dynclique
