// Copyright (c) dynclique contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "dynclique/graph.hpp"

namespace dynclique {

struct ProblemSpec {
    Task task = Task::MemList;
    int s = 3;
    ChangeSet allowed;
    int r = 1;

    bool allows(ChangeKind k) const { return k == ChangeKind::NoOp || allowed.count(k) > 0; }
};

struct DynamicScenario {
    std::string name = "anonymous";
    int n = 0;
    Graph initial;
    std::vector<TopologyChange> events;
    ProblemSpec problem;
};

// Throws PreconditionViolation with the first offending event index.
void validate(const DynamicScenario& sc);
// Graph after each event; element i is the graph of round i+1.
std::vector<Graph> replay(const DynamicScenario& sc);
// True when some event inserts an ID that was present earlier and then deleted.
bool uses_reinsertion(const DynamicScenario& sc);

DynamicScenario load_scenario(const std::string& text);
DynamicScenario load_scenario_file(const std::string& path);
std::string save_scenario(const DynamicScenario& sc);

} // namespace dynclique
