// Copyright (c) dynclique contributors.
// SPDX-License-Identifier: Apache-2.0
#include "dynclique/graph.hpp"

#include <algorithm>

namespace dynclique {

Graph::Graph(int n) : n_(n), present_(n), adj_(n, NodeSet(n)) {}

Graph Graph::complete_universe(int n) {
    Graph g(n);
    for (NodeId v = 0; v < n; ++v) g.add_node(v);
    return g;
}

int Graph::max_degree() const {
    int d = 0;
    present_.for_each([&](NodeId v) { d = std::max(d, adj_[v].size()); });
    return d;
}

int Graph::edge_count() const {
    int c = 0;
    for (const NodeSet& r : adj_) c += r.size();
    return c / 2;
}

std::vector<std::pair<NodeId, NodeId>> Graph::edges() const {
    std::vector<std::pair<NodeId, NodeId>> out;
    for (NodeId u = 0; u < n_; ++u)
        for (NodeId v = adj_[u].next(u); v >= 0; v = adj_[u].next(v)) out.emplace_back(u, v);
    return out;
}

void Graph::add_node(NodeId v) { present_.insert(v); }

void Graph::remove_node(NodeId v) {
    adj_[v].for_each([&](NodeId x) { adj_[x].erase(v); });
    adj_[v].clear();
    present_.erase(v);
}

void Graph::add_edge(NodeId u, NodeId v) {
    adj_[u].insert(v);
    adj_[v].insert(u);
}

void Graph::remove_edge(NodeId u, NodeId v) {
    adj_[u].erase(v);
    adj_[v].erase(u);
}

TopologyChange TopologyChange::edge_insert(NodeId a, NodeId b) {
    TopologyChange c;
    c.kind = ChangeKind::EdgeInsert;
    c.u = std::min(a, b);
    c.v = std::max(a, b);
    return c;
}

TopologyChange TopologyChange::edge_delete(NodeId a, NodeId b) {
    TopologyChange c = edge_insert(a, b);
    c.kind = ChangeKind::EdgeDelete;
    return c;
}

TopologyChange TopologyChange::node_insert(NodeId x, std::vector<NodeId> attach) {
    TopologyChange c;
    c.kind = ChangeKind::NodeInsert;
    c.u = x;
    std::sort(attach.begin(), attach.end());
    attach.erase(std::unique(attach.begin(), attach.end()), attach.end());
    c.attach = std::move(attach);
    return c;
}

TopologyChange TopologyChange::node_delete(NodeId x) {
    TopologyChange c;
    c.kind = ChangeKind::NodeDelete;
    c.u = x;
    return c;
}

std::string to_string(const TopologyChange& c) {
    std::string out = to_string(c.kind);
    switch (c.kind) {
    case ChangeKind::NoOp: break;
    case ChangeKind::EdgeInsert:
    case ChangeKind::EdgeDelete: out += " " + std::to_string(c.u) + " " + std::to_string(c.v); break;
    case ChangeKind::NodeInsert:
        out += " " + std::to_string(c.u);
        for (NodeId a : c.attach) out += " " + std::to_string(a);
        break;
    case ChangeKind::NodeDelete: out += " " + std::to_string(c.u); break;
    }
    return out;
}

namespace {
bool in_range(const Graph& g, NodeId v) { return v >= 0 && v < g.n(); }
} // namespace

std::string check_change(const Graph& g, const TopologyChange& c) {
    switch (c.kind) {
    case ChangeKind::NoOp: return {};
    case ChangeKind::EdgeInsert:
    case ChangeKind::EdgeDelete: {
        if (!in_range(g, c.u) || !in_range(g, c.v)) return "endpoint out of range";
        if (c.u == c.v) return "self-loop";
        if (!g.is_present(c.u) || !g.is_present(c.v)) return "endpoint not present";
        bool has = g.has_edge(c.u, c.v);
        if (c.kind == ChangeKind::EdgeInsert && has) return "edge already present";
        if (c.kind == ChangeKind::EdgeDelete && !has) return "edge not present";
        return {};
    }
    case ChangeKind::NodeInsert:
        if (!in_range(g, c.u)) return "node out of range";
        if (g.is_present(c.u)) return "node already present";
        for (NodeId a : c.attach) {
            if (!in_range(g, a) || a == c.u) return "bad attachment " + std::to_string(a);
            if (!g.is_present(a)) return "attachment " + std::to_string(a) + " not present";
        }
        return {};
    case ChangeKind::NodeDelete:
        if (!in_range(g, c.u)) return "node out of range";
        if (!g.is_present(c.u)) return "node not present";
        return {};
    }
    return "unknown change";
}

void apply_change_in_place(Graph& g, const TopologyChange& c) {
    std::string why = check_change(g, c);
    if (!why.empty()) throw PreconditionViolation(to_string(c) + ": " + why);
    switch (c.kind) {
    case ChangeKind::NoOp: break;
    case ChangeKind::EdgeInsert: g.add_edge(c.u, c.v); break;
    case ChangeKind::EdgeDelete: g.remove_edge(c.u, c.v); break;
    case ChangeKind::NodeInsert:
        g.add_node(c.u);
        for (NodeId a : c.attach) g.add_edge(c.u, a);
        break;
    case ChangeKind::NodeDelete: g.remove_node(c.u); break;
    }
}

Graph apply_change(const Graph& g, const TopologyChange& c) {
    Graph out = g;
    apply_change_in_place(out, c);
    return out;
}

NodeSet neighbor_view(const Graph& g, NodeId v) {
    if (!g.is_present(v)) throw AbsentNode("node " + std::to_string(v) + " is not present");
    return g.row(v);
}

} // namespace dynclique
