// Copyright (c) dynclique contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dynclique/algorithms.hpp"
#include "dynclique/scenario.hpp"

namespace dynclique {

struct RoundTrace {
    int round = 0;
    TopologyChange change;
    std::map<std::pair<NodeId, NodeId>, BitMessage> sent;
    std::map<NodeId, NodeOutput> outputs;
    bool deadline = false;
};

enum class ViolationKind { OutputWrong, BudgetExceeded };

struct Violation {
    int round = 0;
    ViolationKind kind = ViolationKind::OutputWrong;
    std::string details;
};

struct RoundSummary {
    int round = 0;
    TopologyChange change;
    int max_bits = 0;
    long long total_bits = 0;
    bool deadline = false;
    bool ok = true;
};

struct SimulationReport {
    std::string scenario;
    std::string algorithm;
    int budget = 0;
    int n = 0;
    int r = 1;
    std::vector<std::string> tags;
    std::vector<RoundSummary> rounds;
    std::vector<Violation> violations;
    int max_bits = 0;
    bool passed = true;
};

std::set<int> deadline_rounds(const DynamicScenario& sc);
std::pair<int, long long> meter(const RoundTrace& trace);

struct StepResult {
    int max_bits = 0;
    long long total_bits = 0;
    bool deadline = false;
    std::vector<Violation> violations;
};

// Incremental simulation; copies are deep, so a prefix can be branched.
class Simulation {
  public:
    Simulation(const Graph& initial, const ProblemSpec& problem, const Algorithm& alg, int budget,
               int delta);
    Simulation(const Simulation& o);
    Simulation& operator=(const Simulation&) = delete;

    const Graph& graph() const { return graph_; }
    int round() const { return round_; }
    // Runs one round. When `trace` is non-null it receives messages and outputs.
    StepResult step(const TopologyChange& change, RoundTrace* trace = nullptr);

  private:
    const Algorithm* alg_;
    ProblemSpec problem_;
    NodeParams params_;
    int budget_;
    std::shared_ptr<const Graph> initial_;
    Graph graph_;
    int round_ = 0;
    int quiet_run_;
    std::vector<std::unique_ptr<NodeAutomaton>> nodes_;
};

int scenario_max_degree(const DynamicScenario& sc);

SimulationReport run(const DynamicScenario& sc, const Algorithm& alg, int budget,
                     std::vector<RoundTrace>* traces = nullptr);
SimulationReport run(const DynamicScenario& sc, const std::string& algorithm, int budget);
// Uses the algorithm's own budget at the scenario's parameters.
SimulationReport run(const DynamicScenario& sc, const Algorithm& alg);

std::string format_human(const SimulationReport& rep);
std::string format_machine(const SimulationReport& rep);

} // namespace dynclique
