// Copyright (c) dynclique contributors.
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "dynclique/algorithms.hpp"
#include "dynclique/engine.hpp"
#include "dynclique/lowerbounds.hpp"
#include "dynclique/scenario.hpp"
#include "helpers.hpp"

using namespace dynclique;

namespace {

DynamicScenario with_events(int r, std::vector<TopologyChange> events) {
    DynamicScenario sc;
    sc.n = 4;
    sc.initial = Graph::complete_universe(4);
    sc.problem.r = r;
    sc.problem.allowed = {ChangeKind::EdgeInsert};
    sc.events = std::move(events);
    return sc;
}

const char* kTriangle = "name triangle\nn 3\nproblem list s=3 r=1 changes=edge-insert\nnodes all\n"
                        "edge 0 1\nedge 1 2\nevent edge-insert 0 2\n";

BitMessage bits(int count) {
    BitWriter w;
    for (int i = 0; i < count; ++i) w.flag(i % 2 == 0);
    return w.finish();
}

} // namespace

TEST_CASE("deadline rounds") {
    auto ei = [](int a, int b) { return TopologyChange::edge_insert(a, b); };
    auto nop = TopologyChange::noop();
    CHECK(deadline_rounds(with_events(1, {ei(0, 1), ei(1, 2), ei(2, 3), ei(0, 2), ei(0, 3)})) ==
          std::set<int>{1, 2, 3, 4, 5});
    CHECK(deadline_rounds(with_events(2, {ei(0, 1), nop})) == std::set<int>{2});
    CHECK(deadline_rounds(with_events(3, {ei(0, 1), nop, nop, ei(1, 2), nop})) == std::set<int>{3});
    // Quiet rounds keep counting after a deadline.
    CHECK(deadline_rounds(with_events(2, {ei(0, 1), nop, nop})) == std::set<int>{2, 3});
}

TEST_CASE("meter") {
    RoundTrace empty;
    CHECK(meter(empty) == std::pair<int, long long>{0, 0});
    RoundTrace two;
    two.sent[{0, 1}] = bits(3);
    two.sent[{1, 0}] = bits(5);
    CHECK(meter(two) == std::pair<int, long long>{5, 8});
}

TEST_CASE("one-bit lister on a closing triangle") {
    DynamicScenario sc = load_scenario(kTriangle);
    SimulationReport ok = run(sc, "tri-list-edgeins-1bit", 2);
    CHECK(ok.passed);
    CHECK(ok.max_bits == 2);
    CHECK(ok.violations.empty());

    SimulationReport starved = run(sc, "tri-list-edgeins-1bit", 0);
    CHECK_FALSE(starved.passed);
    REQUIRE_FALSE(starved.violations.empty());
    CHECK(starved.violations.front().kind == ViolationKind::BudgetExceeded);
    CHECK(starved.violations.front().round == 1);
}

TEST_CASE("run rejects problems outside the algorithm's contract") {
    DynamicScenario sc = load_scenario(kTriangle);
    CHECK_THROWS_AS(run(sc, "tri-mlist-edgedel-1bit", 1), UnsupportedProblem);
    CHECK_THROWS_AS(run(sc, "no-such-algorithm", 1), UnknownAlgorithm);
}

TEST_CASE("square-root lister on the adversarial sequence at n=16") {
    const Algorithm& alg = find_algorithm("tri-mlist-edgeins-sqrt");
    const int b = alg.budget(16, 1, 15);
    CHECK(b == 4 + 4 + 1);
    for (int w = 0; w < 12; ++w) {
        AdversarySpec spec;
        spec.n = 16;
        spec.t = 3;
        spec.w = w;
        spec.seed = 3;
        DynamicScenario sc = gen_adversary(spec);
        SimulationReport rep = run(sc, alg, b);
        CHECK_MESSAGE(rep.passed, "w=" << w);
    }
}

TEST_CASE("square-root lister fills its budget on an insertion round at n=16") {
    // Star around 0 so every node has fresh news to echo; the last insertion closes triangles.
    DynamicScenario sc;
    sc.n = 16;
    sc.initial = Graph::complete_universe(16);
    sc.problem.allowed = {ChangeKind::EdgeInsert};
    for (int x = 1; x < 16; ++x) sc.events.push_back(TopologyChange::edge_insert(0, x));
    for (int x = 2; x < 16; ++x) sc.events.push_back(TopologyChange::edge_insert(1, x));
    const Algorithm& alg = find_algorithm("tri-mlist-edgeins-sqrt");
    std::vector<RoundTrace> traces;
    SimulationReport rep = run(sc, alg, alg.budget(16, 1, 15), &traces);
    CHECK(rep.passed);
    int best = 0;
    for (const RoundTrace& t : traces) best = std::max(best, meter(t).first);
    CHECK(best == 9);
}

TEST_CASE("simulation copies branch independently") {
    DynamicScenario sc = load_scenario(kTriangle);
    const Algorithm& alg = find_algorithm("tri-list-edgeins-1bit");
    Simulation a(sc.initial, sc.problem, alg, 2, 2);
    Simulation b(a);
    CHECK(a.step(TopologyChange::edge_insert(0, 2)).violations.empty());
    CHECK(b.step(TopologyChange::noop()).violations.empty());
    CHECK(a.graph().has_edge(0, 2));
    CHECK_FALSE(b.graph().has_edge(0, 2));
    CHECK_THROWS_AS(a.step(TopologyChange::edge_insert(0, 2)), PreconditionViolation);
}

TEST_CASE("machine report is line-delimited JSON") {
    DynamicScenario sc = load_scenario(kTriangle);
    SimulationReport rep = run(sc, "tri-list-edgeins-1bit", 2);
    std::istringstream in(format_machine(rep));
    std::string line;
    std::vector<nlohmann::json> recs;
    while (std::getline(in, line))
        if (!line.empty()) recs.push_back(nlohmann::json::parse(line));
    REQUIRE(recs.size() == 3);
    CHECK(recs[0]["record"] == "header");
    CHECK(recs[0]["algorithm"] == "tri-list-edgeins-1bit");
    CHECK(recs[1]["record"] == "round");
    CHECK(recs[1]["max_bits"] == 2);
    CHECK(recs[2]["passed"] == true);
    CHECK(format_human(rep).find("passed true") != std::string::npos);
}
