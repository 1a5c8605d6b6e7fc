// Copyright (c) dynclique contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dynclique/node_set.hpp"
#include "dynclique/types.hpp"

namespace dynclique {

class Graph {
  public:
    Graph() = default;
    // All IDs absent.
    explicit Graph(int n);
    static Graph complete_universe(int n); // every ID present, no edges

    int n() const { return n_; }
    const NodeSet& present() const { return present_; }
    bool is_present(NodeId v) const { return v >= 0 && v < n_ && present_.contains(v); }
    bool has_edge(NodeId u, NodeId v) const { return adj_[u].contains(v); }
    const NodeSet& row(NodeId v) const { return adj_[v]; }
    int degree(NodeId v) const { return adj_[v].size(); }
    int max_degree() const;
    int edge_count() const;
    std::vector<std::pair<NodeId, NodeId>> edges() const;

    void add_node(NodeId v);
    void remove_node(NodeId v);
    void add_edge(NodeId u, NodeId v);
    void remove_edge(NodeId u, NodeId v);

    bool operator==(const Graph& o) const = default;

  private:
    int n_ = 0;
    NodeSet present_;
    std::vector<NodeSet> adj_;
};

struct TopologyChange {
    ChangeKind kind = ChangeKind::NoOp;
    NodeId u = -1;
    NodeId v = -1;
    std::vector<NodeId> attach; // NodeInsert only, sorted

    static TopologyChange noop() { return {}; }
    static TopologyChange edge_insert(NodeId a, NodeId b);
    static TopologyChange edge_delete(NodeId a, NodeId b);
    static TopologyChange node_insert(NodeId x, std::vector<NodeId> attach);
    static TopologyChange node_delete(NodeId x);

    bool operator==(const TopologyChange& o) const = default;
};

std::string to_string(const TopologyChange& c);

// Empty string when applicable, otherwise the reason.
std::string check_change(const Graph& g, const TopologyChange& c);
Graph apply_change(const Graph& g, const TopologyChange& c);
void apply_change_in_place(Graph& g, const TopologyChange& c);
NodeSet neighbor_view(const Graph& g, NodeId v);

} // namespace dynclique
