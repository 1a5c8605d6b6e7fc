// Copyright (c) dynclique contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dynclique/scenario.hpp"

namespace dynclique {

enum class AdversaryFamily { TriEdgeIns, KsEdgeIns, TriNodeIns, TriMdtctNodeIns, KsNodeIns, KsMdtctNodeIns };

std::string to_string(AdversaryFamily f);
AdversaryFamily parse_family(const std::string& s);

struct BipartiteGraph {
    int left = 0;
    int right = 0;
    std::vector<std::pair<int, int>> edges; // (l, r), 0-based within each side
};

struct AdversarySpec {
    AdversaryFamily family = AdversaryFamily::TriEdgeIns;
    int n = 0;
    int t = 0;
    int s = 3;
    uint64_t seed = 1;
    std::optional<BipartiteGraph> c; // drawn from the seed when absent
    int w = 0;                        // target index inside W (edge families)
    int u = 0, v = 1;                 // target indices inside the node-family split
    int r = 1;                        // trailing quiet rounds appended for r >= 2
};

// Node roles of the generated scenario.
struct AdversaryLayout {
    std::vector<NodeId> w_side;
    std::vector<NodeId> u_side;
    std::vector<NodeId> k_side;
    NodeId v = -1; // the probed node (v for edge families, final inserted node otherwise)
    NodeId target_w = -1;
    NodeId target_u = -1;
    NodeId target_v = -1;
};

DynamicScenario gen_adversary(const AdversarySpec& spec, AdversaryLayout* layout = nullptr);

enum class BoundProblem { MLIST, MDTCT };

double eval_bound(BoundProblem problem, ChangeKind change, int n, double eps, int r = 1, int s = 3);

struct BipartiteWitness {
    std::vector<int> a;
    std::vector<int> b;
    double alpha = 0, beta = 0, gamma = 0;
};

struct LemmaConstants {
    double alpha, beta, gamma;
};
LemmaConstants lemma_constants(double eps);

// Empty when the guaranteed sizes are not met.
std::optional<BipartiteWitness> densebip_witness(const BipartiteGraph& g, double eps);

} // namespace dynclique
