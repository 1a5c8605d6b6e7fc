// Copyright (c) dynclique contributors.
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "dynclique/algorithms.hpp"
#include "dynclique/engine.hpp"
#include "dynclique/lowerbounds.hpp"
#include "dynclique/reduction.hpp"
#include "dynclique/scenario.hpp"
#include "helpers.hpp"

using namespace dynclique;
using testutil::make_graph;

namespace {

// Reference: test every s-subset of the present IDs.
CliqueSet brute_cliques(const Graph& g, int s) {
    CliqueSet out;
    const int n = g.n();
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) != s) continue;
        Clique c;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1) c.push_back(i);
        bool ok = true;
        for (size_t i = 0; i < c.size() && ok; ++i) {
            ok = g.is_present(c[i]);
            for (size_t j = i + 1; j < c.size() && ok; ++j) ok = g.has_edge(c[i], c[j]);
        }
        if (ok) out.insert(c);
    }
    return out;
}

ProblemSpec problem(Task t, int s = 3) {
    ProblemSpec p;
    p.task = t;
    p.s = s;
    p.allowed = {ChangeKind::EdgeInsert};
    return p;
}

} // namespace

TEST_CASE("enumerate_cliques basics") {
    Graph tri = make_graph(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(enumerate_cliques(tri, 3) == CliqueSet{{0, 1, 2}});
    Graph k5 = Graph::complete_universe(5);
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b) k5.add_edge(a, b);
    CHECK(enumerate_cliques(k5, 4).size() == 5);
    CHECK(enumerate_cliques(k5, 5).size() == 1);
}

TEST_CASE("enumerate_cliques agrees with brute force on every graph up to six nodes") {
    for (int n = 3; n <= 6; ++n) {
        std::vector<std::pair<int, int>> pairs;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) pairs.push_back({a, b});
        for (unsigned mask = 0; mask < (1u << pairs.size()); ++mask) {
            Graph g = Graph::complete_universe(n);
            for (size_t i = 0; i < pairs.size(); ++i)
                if (mask >> i & 1) g.add_edge(pairs[i].first, pairs[i].second);
            for (int s = 3; s <= 4; ++s) {
                CliqueSet c = enumerate_cliques(g, s);
                REQUIRE(c == brute_cliques(g, s));
                for (NodeId v = 0; v < n; ++v) {
                    CliqueSet mine;
                    for (const Clique& q : c)
                        if (std::find(q.begin(), q.end(), v) != q.end()) mine.insert(q);
                    REQUIRE(cliques_containing(g, s, v) == mine);
                }
            }
        }
    }
}

TEST_CASE("adding an edge never removes a clique") {
    Graph g = make_graph(6, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
    for (auto [a, b] : std::vector<std::pair<int, int>>{{0, 3}, {1, 4}, {4, 5}, {0, 4}}) {
        Graph h = apply_change(g, TopologyChange::edge_insert(a, b));
        CliqueSet before = enumerate_cliques(g, 3), after = enumerate_cliques(h, 3);
        CHECK(std::includes(after.begin(), after.end(), before.begin(), before.end()));
        g = h;
    }
}

TEST_CASE("triangles through v in the adversarial edge-insertion graph") {
    AdversarySpec spec;
    spec.n = 8;
    spec.t = 3;
    spec.c = BipartiteGraph{4, 3, {}};
    for (int l = 0; l < 4; ++l)
        for (int r = 0; r < 3; ++r) spec.c->edges.push_back({l, r});
    AdversaryLayout lay;
    DynamicScenario sc = gen_adversary(spec, &lay);
    Graph final_graph = replay(sc).back();
    CliqueSet want;
    for (NodeId u : lay.u_side)
        if (final_graph.has_edge(u, lay.target_w)) {
            Clique c{lay.v, u, lay.target_w};
            std::sort(c.begin(), c.end());
            want.insert(c);
        }
    CHECK(want.size() == 3);
    CHECK(cliques_containing(final_graph, 3, lay.v) == want);
}

TEST_CASE("expected outputs per task") {
    Graph tri = make_graph(3, {{0, 1}, {1, 2}, {0, 2}});
    ExpectedOutputs md = expected_outputs(tri, problem(Task::MemDetect));
    for (NodeId v = 0; v < 3; ++v) CHECK(md.expected_for(v).flag);
    std::map<NodeId, NodeOutput> outs;
    for (NodeId v = 0; v < 3; ++v) outs[v] = NodeOutput{Task::MemDetect, v != 1, {}};
    CHECK_FALSE(md.check(outs).empty());

    Graph empty = Graph::complete_universe(4);
    ExpectedOutputs det = expected_outputs(empty, problem(Task::Detect));
    std::map<NodeId, NodeOutput> quiet, loud;
    for (NodeId v = 0; v < 4; ++v) {
        quiet[v] = NodeOutput{Task::Detect, false, {}};
        loud[v] = NodeOutput{Task::Detect, v == 2, {}};
    }
    CHECK(det.check(quiet).empty());
    CHECK_FALSE(det.check(loud).empty());

    // K4 minus {1,3}: node 0 lies opposite the missing edge.
    Graph k4m = make_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}});
    ExpectedOutputs ml = expected_outputs(k4m, problem(Task::MemList));
    CHECK(ml.expected_for(0).cliques == CliqueSet{{0, 1, 2}, {0, 2, 3}});
    CHECK(ml.expected_for(1).cliques == CliqueSet{{0, 1, 2}});
}

TEST_CASE("List acceptance needs soundness and full coverage") {
    Graph k4m = make_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}});
    ExpectedOutputs ex = expected_outputs(k4m, problem(Task::List));
    std::map<NodeId, NodeOutput> outs;
    for (NodeId v = 0; v < 4; ++v) outs[v] = NodeOutput{Task::List, false, {}};
    outs[1].cliques = {{0, 1, 2}};
    CHECK_FALSE(ex.check(outs).empty()); // (0,2,3) missing
    outs[3].cliques = {{0, 2, 3}};
    CHECK(ex.check(outs).empty());
    outs[0].cliques = {{0, 1, 3}}; // not a triangle
    CHECK_FALSE(ex.check(outs).empty());
}

TEST_CASE("reductions") {
    CHECK(is_reduction(Task::MemList, Task::MemDetect));
    CHECK(is_reduction(Task::MemList, Task::List));
    CHECK(is_reduction(Task::MemDetect, Task::Detect));
    CHECK(is_reduction(Task::List, Task::Detect));
    CHECK_FALSE(is_reduction(Task::List, Task::MemList));
    CHECK_FALSE(is_reduction(Task::Detect, Task::List));

    const Algorithm& base = find_algorithm("tri-mlist-edgeins-sqrt");
    CHECK_THROWS_AS(reduce_solver(Task::List, Task::MemList, find_algorithm("tri-list-edgeins-1bit")),
                    InvalidReduction);

    NodeOutput empty_list{Task::MemList, false, {}};
    CHECK(reduce_output(Task::MemDetect, empty_list).flag == false);

    DynamicScenario sc = load_scenario("name triangle\nn 3\nproblem list s=3 r=1 changes=edge-insert\nnodes all\n"
                                       "edge 0 1\nedge 1 2\nevent edge-insert 0 2\n");
    Algorithm lister = reduce_solver(Task::MemList, Task::List, base);
    std::vector<RoundTrace> traces;
    SimulationReport rep = run(sc, lister, lister.budget(3, 1, 2), &traces);
    CHECK(rep.passed);
    CliqueSet all;
    for (auto& [v, out] : traces.back().outputs) all.insert(out.cliques.begin(), out.cliques.end());
    CHECK(all == CliqueSet{{0, 1, 2}});
    CHECK(rep.max_bits <= base.budget(3, 1, 2));

    // Node 3 is isolated, so its MemDetect answer must be false.
    DynamicScenario md = load_scenario("n 4\nproblem memdetect s=3 r=1 changes=edge-insert\nnodes all\n"
                                       "edge 0 1\nedge 1 2\nevent edge-insert 0 2\n");
    Algorithm detector = reduce_solver(Task::MemList, Task::MemDetect, base);
    traces.clear();
    CHECK(run(md, detector, detector.budget(4, 1, 2), &traces).passed);
    CHECK(traces.back().outputs.at(3).flag == false);
    CHECK(traces.back().outputs.at(0).flag == true);
}
