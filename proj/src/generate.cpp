// Copyright (c) dynclique contributors.
// SPDX-License-Identifier: Apache-2.0
#include "dynclique/generate.hpp"

namespace dynclique {

namespace {

template <typename T>
const T& pick(const std::vector<T>& v, std::mt19937_64& rng) {
    return v[std::uniform_int_distribution<size_t>(0, v.size() - 1)(rng)];
}

bool coin(double p, std::mt19937_64& rng) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p; }

} // namespace

Graph random_graph(int n, double presence, double density, std::mt19937_64& rng) {
    Graph g(n);
    for (NodeId v = 0; v < n; ++v)
        if (presence >= 1.0 || coin(presence, rng)) g.add_node(v);
    for (NodeId a = 0; a < n; ++a)
        for (NodeId b = a + 1; b < n; ++b)
            if (g.is_present(a) && g.is_present(b) && coin(density, rng)) g.add_edge(a, b);
    return g;
}

bool change_applicable(const Graph& g, ChangeKind kind) {
    int present = g.present().size();
    switch (kind) {
    case ChangeKind::NoOp: return true;
    case ChangeKind::EdgeInsert: return g.edge_count() < present * (present - 1) / 2;
    case ChangeKind::EdgeDelete: return g.edge_count() > 0;
    case ChangeKind::NodeInsert: return present < g.n();
    case ChangeKind::NodeDelete: return present > 0;
    }
    return false;
}

TopologyChange random_instance(const Graph& g, ChangeKind kind, std::mt19937_64& rng) {
    switch (kind) {
    case ChangeKind::NoOp: return TopologyChange::noop();
    case ChangeKind::EdgeInsert: {
        std::vector<std::pair<NodeId, NodeId>> free;
        g.present().for_each([&](NodeId a) {
            (g.present() - g.row(a)).for_each([&](NodeId b) {
                if (a < b) free.emplace_back(a, b);
            });
        });
        auto [a, b] = pick(free, rng);
        return TopologyChange::edge_insert(a, b);
    }
    case ChangeKind::EdgeDelete: {
        auto [a, b] = pick(g.edges(), rng);
        return TopologyChange::edge_delete(a, b);
    }
    case ChangeKind::NodeInsert: {
        NodeSet absent(g.n());
        for (NodeId v = 0; v < g.n(); ++v)
            if (!g.is_present(v)) absent.insert(v);
        NodeId x = pick(absent.to_vector(), rng);
        std::vector<NodeId> attach;
        g.present().for_each([&](NodeId a) {
            if (coin(0.5, rng)) attach.push_back(a);
        });
        return TopologyChange::node_insert(x, attach);
    }
    case ChangeKind::NodeDelete: return TopologyChange::node_delete(pick(g.present().to_vector(), rng));
    }
    return TopologyChange::noop();
}

TopologyChange random_change(const Graph& g, const ChangeSet& allowed, std::mt19937_64& rng) {
    std::vector<ChangeKind> kinds;
    for (ChangeKind k : allowed)
        if (k != ChangeKind::NoOp && change_applicable(g, k)) kinds.push_back(k);
    if (kinds.empty()) throw BadParams("no applicable change in {" + format_change_set(allowed) + "}");
    return random_instance(g, pick(kinds, rng), rng);
}

DynamicScenario generate_random(const RandomScenarioParams& p) {
    if (p.n < 1 || p.events < 0) throw BadParams("n must be positive and events non-negative");
    if (p.problem.s < 3 || p.problem.r < 1) throw BadParams("need s >= 3 and r >= 1");
    std::mt19937_64 rng(p.seed);
    DynamicScenario sc;
    sc.name = "random-n" + std::to_string(p.n) + "-seed" + std::to_string(p.seed);
    sc.n = p.n;
    sc.problem = p.problem;
    sc.initial = random_graph(p.n, p.presence, p.edge_density, rng);
    Graph g = sc.initial;
    for (int i = 0; i < p.events; ++i) {
        TopologyChange c = p.quiet > 0 && coin(p.quiet, rng) ? TopologyChange::noop()
                                                              : random_change(g, p.problem.allowed, rng);
        apply_change_in_place(g, c);
        sc.events.push_back(std::move(c));
    }
    return sc;
}

} // namespace dynclique
