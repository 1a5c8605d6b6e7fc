// Copyright (c) dynclique contributors.
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <random>

#include "dynclique/engine.hpp"
#include "dynclique/generate.hpp"
#include "dynclique/lowerbounds.hpp"
#include "dynclique/scenario.hpp"
#include "helpers.hpp"

using namespace dynclique;
using testutil::ids;
using testutil::make_graph;

TEST_CASE("apply_change on small graphs") {
    Graph empty(4);
    Graph g = apply_change(empty, TopologyChange::node_insert(0, {}));
    CHECK(ids(g.present()) == std::vector<int>{0});
    CHECK(g.edge_count() == 0);

    Graph tri = make_graph(3, {{0, 1}, {1, 2}, {0, 2}});
    Graph d = apply_change(tri, TopologyChange::node_delete(2));
    CHECK(ids(d.present()) == std::vector<int>{0, 1});
    CHECK(d.edges() == std::vector<std::pair<NodeId, NodeId>>{{0, 1}});

    Graph path = make_graph(3, {{0, 1}, {1, 2}});
    CHECK(apply_change(path, TopologyChange::edge_insert(0, 2)) == tri);
}

TEST_CASE("apply_change rejects changes whose precondition fails") {
    Graph path = make_graph(3, {{0, 1}, {1, 2}});
    CHECK_THROWS_AS(apply_change(path, TopologyChange::edge_insert(0, 1)), PreconditionViolation);
    CHECK_THROWS_AS(apply_change(path, TopologyChange::edge_delete(0, 2)), PreconditionViolation);
    CHECK_THROWS_AS(apply_change(path, TopologyChange::node_insert(1, {})), PreconditionViolation);
    Graph g = apply_change(path, TopologyChange::node_delete(1));
    CHECK_THROWS_AS(apply_change(g, TopologyChange::node_delete(1)), PreconditionViolation);
    CHECK_THROWS_AS(apply_change(g, TopologyChange::node_insert(1, {1})), PreconditionViolation);
    CHECK_THROWS_AS(apply_change(g, TopologyChange::edge_insert(0, 1)), PreconditionViolation);
    CHECK(apply_change(path, TopologyChange::noop()) == path);
}

TEST_CASE("neighbor_view") {
    Graph tri = make_graph(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(ids(neighbor_view(tri, 0)) == std::vector<int>{1, 2});
    Graph star = make_graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    CHECK(ids(neighbor_view(star, 3)) == std::vector<int>{0});
    Graph single(1);
    single.add_node(0);
    CHECK(neighbor_view(single, 0).empty());
    CHECK_THROWS_AS(neighbor_view(apply_change(tri, TopologyChange::node_delete(2)), 2), AbsentNode);
}

TEST_CASE("edge insertion then deletion restores the graph") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        Graph g = random_graph(7, 0.8, 0.4, rng);
        if (!change_applicable(g, ChangeKind::EdgeInsert)) continue;
        TopologyChange ins = random_instance(g, ChangeKind::EdgeInsert, rng);
        Graph h = apply_change(g, ins);
        CHECK(apply_change(h, TopologyChange::edge_delete(ins.u, ins.v)) == g);
    }
}

TEST_CASE("load_scenario minimal document") {
    DynamicScenario sc = load_scenario("n 3\nproblem memlist s=3 r=1 changes=edge-insert\nnodes all\n"
                                       "event edge-insert 0 1\n");
    CHECK(sc.n == 3);
    CHECK(sc.events.size() == 1);
    CHECK(sc.initial.edge_count() == 0);
}

TEST_CASE("load_scenario reports the failing event index") {
    const std::string text = "n 3\nproblem memlist s=3 r=1 changes=edge-insert,edge-delete\nnodes all\n"
                             "event edge-insert 0 1\nevent edge-delete 1 2\n";
    try {
        load_scenario(text);
        FAIL("expected PreconditionViolation");
    } catch (const PreconditionViolation& e) {
        CHECK(e.event_index == 1);
    }
}

TEST_CASE("load_scenario syntax errors carry the line number") {
    try {
        load_scenario("n 3\nnodes all\nevent teleport 0 1\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
    }
    CHECK_THROWS_AS(load_scenario_file("/nonexistent/file.scn"), ParseError);
    CHECK_THROWS_AS(load_scenario("n 3\nproblem memlist s=3 r=1 changes=edge-insert\nnodes all\nevent edge-delete 0 1\n"),
                    PreconditionViolation);
}

TEST_CASE("adversarial edge-insertion sequence survives a save/load round trip") {
    AdversarySpec spec;
    spec.n = 8;
    spec.t = 3;
    spec.c = BipartiteGraph{4, 3, {}};
    for (int l = 0; l < 4; ++l)
        for (int r = 0; r < 3; ++r) spec.c->edges.push_back({l, r});
    DynamicScenario sc = gen_adversary(spec);
    DynamicScenario back = load_scenario(save_scenario(sc));
    CHECK(back.events.size() == 16);
    CHECK(back.events == sc.events);
    CHECK(back.initial == sc.initial);
    CHECK(back.problem.task == Task::MemList);
}

TEST_CASE("replay is deterministic and matches step-by-step application") {
    RandomScenarioParams p;
    p.n = 9;
    p.events = 30;
    p.problem.allowed = {ChangeKind::EdgeInsert, ChangeKind::EdgeDelete, ChangeKind::NodeInsert, ChangeKind::NodeDelete};
    p.presence = 0.6;
    p.seed = 5;
    DynamicScenario sc = generate_random(p);
    auto a = replay(sc);
    auto b = replay(sc);
    CHECK(a == b);
    REQUIRE(a.size() == sc.events.size());
    Graph g = sc.initial;
    for (size_t i = 0; i < sc.events.size(); ++i) {
        apply_change_in_place(g, sc.events[i]);
        CHECK(g == a[i]);
    }
}

TEST_CASE("random generation is deterministic per seed") {
    RandomScenarioParams p;
    p.n = 10;
    p.events = 20;
    p.problem.allowed = {ChangeKind::EdgeInsert, ChangeKind::EdgeDelete};
    p.seed = 7;
    CHECK(save_scenario(generate_random(p)) == save_scenario(generate_random(p)));
    p.seed = 8;
    RandomScenarioParams q = p;
    q.seed = 7;
    CHECK(save_scenario(generate_random(p)) != save_scenario(generate_random(q)));
}

TEST_CASE("random generation without an applicable change is rejected") {
    RandomScenarioParams p;
    p.n = 2;
    p.events = 5;
    p.presence = 0.0;
    p.problem.allowed = {ChangeKind::NodeDelete};
    CHECK_THROWS_AS(generate_random(p), BadParams);
}
