// Copyright (c) dynclique contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <random>

#include "dynclique/scenario.hpp"

namespace dynclique {

struct RandomScenarioParams {
    int n = 8;
    int events = 20;
    ProblemSpec problem;
    double quiet = 0.0;        // probability of a NoOp round
    double edge_density = 0.3; // initial graph
    double presence = 1.0;     // probability an ID is present initially
    uint64_t seed = 1;
};

Graph random_graph(int n, double presence, double density, std::mt19937_64& rng);
// Uniform over applicable kinds of `allowed`, then uniform instance. Throws BadParams when none applies.
TopologyChange random_change(const Graph& g, const ChangeSet& allowed, std::mt19937_64& rng);
bool change_applicable(const Graph& g, ChangeKind kind);
// Random instance of one kind; requires change_applicable.
TopologyChange random_instance(const Graph& g, ChangeKind kind, std::mt19937_64& rng);
DynamicScenario generate_random(const RandomScenarioParams& p);

} // namespace dynclique
