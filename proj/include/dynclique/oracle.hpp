// Copyright (c) dynclique contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "dynclique/graph.hpp"
#include "dynclique/scenario.hpp"

namespace dynclique {

using Clique = std::vector<NodeId>; // strictly increasing
using CliqueSet = std::set<Clique>;

struct NodeOutput {
    Task task = Task::MemList;
    bool flag = false;  // MemDetect, Detect
    CliqueSet cliques;  // MemList, List

    bool operator==(const NodeOutput& o) const = default;
};

std::string to_string(const NodeOutput& out);
std::string to_string(const Clique& c);

CliqueSet enumerate_cliques(const Graph& g, int s);
// Cliques of g that contain v.
CliqueSet cliques_containing(const Graph& g, int s, NodeId v);

class ExpectedOutputs {
  public:
    ExpectedOutputs(const Graph& g, const ProblemSpec& problem);

    Task task() const { return problem_.task; }
    const CliqueSet& cliques() const { return cliques_; }
    // Exact per-node value for MemList / MemDetect.
    NodeOutput expected_for(NodeId v) const;
    // Human-readable discrepancies; empty when the outputs are acceptable.
    std::vector<std::string> check(const std::map<NodeId, NodeOutput>& outputs) const;

  private:
    Graph g_;
    ProblemSpec problem_;
    CliqueSet cliques_;
};

ExpectedOutputs expected_outputs(const Graph& g, const ProblemSpec& problem);

} // namespace dynclique
