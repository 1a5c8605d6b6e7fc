// Copyright (c) dynclique contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "dynclique/automaton.hpp"
#include "dynclique/scenario.hpp"

namespace dynclique {

// Builds a node. `initial` is null for nodes inserted after round 0; `birth` is the insertion round.
using AutomatonFactory = std::function<std::unique_ptr<NodeAutomaton>(
    NodeId self, std::shared_ptr<const Graph> initial, int birth, const NodeParams& params)>;

struct Algorithm {
    std::string name;
    Task task = Task::MemList;
    int s = 3;            // 0 means any s >= 3
    ChangeSet allowed;
    int r = 1;            // 0 means the round count is a parameter
    std::string budget_formula;
    std::function<int(const NodeParams&)> budget_fn;
    AutomatonFactory factory;

    bool supports(const ProblemSpec& p) const;
    int budget(int n, int r_param, int delta) const;
};

const std::vector<Algorithm>& catalog();
const Algorithm& find_algorithm(const std::string& name);
std::unique_ptr<NodeAutomaton> init_node(const Algorithm& alg, NodeId self,
                                         std::shared_ptr<const Graph> initial, int birth,
                                         const NodeParams& params);
int budget(const std::string& name, int n, int r, int delta);

// LAST-mask window of the square-root digest lister shortened to `window` rounds.
Algorithm digest_memlist_with_window(int window);

} // namespace dynclique
