// Copyright (c) dynclique contributors.
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>

#include "dynclique/lowerbounds.hpp"
#include "dynclique/scenario.hpp"
#include "helpers.hpp"

using namespace dynclique;

namespace {

BipartiteGraph complete(int l, int r) {
    BipartiteGraph g{l, r, {}};
    for (int a = 0; a < l; ++a)
        for (int b = 0; b < r; ++b) g.edges.push_back({a, b});
    return g;
}

} // namespace

TEST_CASE("edge-insertion construction at n=8, t=3") {
    AdversarySpec spec;
    spec.n = 8;
    spec.t = 3;
    spec.c = complete(4, 3);
    AdversaryLayout lay;
    DynamicScenario sc = gen_adversary(spec, &lay);
    CHECK(sc.events.size() == 12 + 3 + 1);
    CHECK(lay.v == 7);
    CHECK(lay.target_w == lay.w_side.front());
    CHECK(sc.events.back() == TopologyChange::edge_insert(7, lay.target_w));
    CHECK(sc.initial.edge_count() == 0);

    AdversarySpec seeded;
    seeded.n = 8;
    seeded.t = 3;
    seeded.seed = 1;
    DynamicScenario a = gen_adversary(seeded);
    CHECK(save_scenario(a) == save_scenario(gen_adversary(seeded)));
    CHECK(a.events.back() == TopologyChange::edge_insert(0, 7));
}

TEST_CASE("node-insertion construction on a path") {
    AdversarySpec spec;
    spec.family = AdversaryFamily::TriNodeIns;
    spec.n = 5;
    // L = {0,1}, R = {2,3}; edges 2-0, 2-1, 3-1 form the path 0-2-1-3.
    spec.c = BipartiteGraph{2, 2, {{0, 0}, {1, 0}, {1, 1}}};
    DynamicScenario sc = gen_adversary(spec);
    REQUIRE(sc.events.size() == 5);
    for (const TopologyChange& c : sc.events) CHECK(c.kind == ChangeKind::NodeInsert);
    Graph g = replay(sc).back();
    CHECK(g.edge_count() == 3 + 4);
    CHECK(g.has_edge(0, 2));
    CHECK(g.has_edge(1, 2));
    CHECK(g.has_edge(1, 3));
    for (NodeId x = 0; x < 4; ++x) CHECK(g.has_edge(4, x));
}

TEST_CASE("K_s edge-insertion construction adds an (s-3)-clique") {
    AdversarySpec spec;
    spec.family = AdversaryFamily::KsEdgeIns;
    spec.n = 10;
    spec.t = 2;
    spec.s = 4;
    AdversaryLayout lay;
    DynamicScenario sc = gen_adversary(spec, &lay);
    REQUIRE(lay.k_side.size() == 1);
    NodeId k = lay.k_side.front();
    for (NodeId x = 0; x < 10; ++x) {
        if (x == k) continue;
        CHECK(sc.initial.has_edge(k, x) == (x != lay.v));
    }
    CHECK(sc.problem.s == 4);
}

TEST_CASE("generator parameter errors") {
    AdversarySpec spec;
    spec.n = 4;
    spec.t = 3;
    CHECK_THROWS_AS(gen_adversary(spec), BadParams);
    spec.n = 8;
    spec.c = complete(3, 3);
    CHECK_THROWS_AS(gen_adversary(spec), BadParams);
}

TEST_CASE("bound evaluators") {
    CHECK(eval_bound(BoundProblem::MDTCT, ChangeKind::NodeInsert, 100, 0.0) == doctest::Approx(49.0));
    CHECK(eval_bound(BoundProblem::MLIST, ChangeKind::NodeInsert, 100, 1.0 / 3, 1) ==
          doctest::Approx(50 + std::log2(2.0 / 3) / 99).epsilon(1e-9));
    CHECK(eval_bound(BoundProblem::MLIST, ChangeKind::NodeInsert, 100, 1.0 / 3, 2) ==
          doctest::Approx((50 + std::log2(2.0 / 3) / 99) / 2).epsilon(1e-9));
    double e4 = eval_bound(BoundProblem::MLIST, ChangeKind::EdgeInsert, 10000, 1.0 / 3);
    double e6 = eval_bound(BoundProblem::MLIST, ChangeKind::EdgeInsert, 1000000, 1.0 / 3);
    CHECK(e4 > 0);
    // Grows like sqrt(n) once n is large.
    CHECK(e6 / e4 == doctest::Approx(10.0).epsilon(0.15));
}

TEST_CASE("dense bipartite witness") {
    auto w = densebip_witness(complete(2, 3), 0.5);
    REQUIRE(w.has_value());
    CHECK(w->a.size() == 1);
    CHECK(w->b == std::vector<int>{0, 1, 2});

    BipartiteGraph g = complete(4, 4);
    g.edges.pop_back();
    auto w2 = densebip_witness(g, 0.25);
    REQUIRE(w2.has_value());
    LemmaConstants k = lemma_constants(0.25);
    CHECK(k.beta == doctest::Approx(0.75 / 5.25));
    CHECK(w2->b.size() >= k.beta * std::pow(k.gamma, 4) * 4 - 1e-9);
    CHECK(w2->a.size() >= std::ceil(k.alpha * 4 - 1e-9));
    for (int a : w2->a)
        for (int b : w2->b)
            CHECK(std::find(g.edges.begin(), g.edges.end(), std::pair<int, int>{a, b}) != g.edges.end());

    BipartiteGraph sparse{3, 3, {{0, 0}, {1, 1}, {2, 2}, {0, 1}}};
    CHECK_THROWS_AS(densebip_witness(sparse, 0.25), PreconditionViolation);
}
