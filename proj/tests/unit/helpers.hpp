// Copyright (c) dynclique contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once
#include <initializer_list>

#include "dynclique/graph.hpp"
#include "dynclique/oracle.hpp"

namespace testutil {

inline dynclique::Graph make_graph(int n, std::initializer_list<std::pair<int, int>> edges) {
    dynclique::Graph g = dynclique::Graph::complete_universe(n);
    for (auto [a, b] : edges) g.add_edge(a, b);
    return g;
}

inline std::vector<int> ids(const dynclique::NodeSet& s) { return s.to_vector(); }

} // namespace testutil
