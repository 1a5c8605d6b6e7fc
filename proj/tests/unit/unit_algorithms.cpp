// Copyright (c) dynclique contributors.
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "dynclique/algorithms.hpp"
#include "dynclique/engine.hpp"
#include "dynclique/scenario.hpp"
#include "helpers.hpp"

using namespace dynclique;
using testutil::make_graph;

namespace {

NodeSet set_of(int n, std::initializer_list<int> xs) {
    NodeSet s(n);
    for (int x : xs) s.insert(x);
    return s;
}

BitMessage flags(std::initializer_list<bool> bs) {
    BitWriter w;
    for (bool b : bs) w.flag(b);
    return w.finish();
}

} // namespace

TEST_CASE("catalog entries are unique and resolvable") {
    std::set<std::string> names;
    for (const Algorithm& a : catalog()) {
        CHECK(names.insert(a.name).second);
        CHECK(&find_algorithm(a.name) == &a);
        CHECK(a.budget(64, a.r == 0 ? 4 : a.r, 8) >= 0);
    }
    CHECK(names.size() == 27);
    CHECK_THROWS_AS(find_algorithm("tri-mlist-magic"), UnknownAlgorithm);
}

TEST_CASE("budget examples") {
    CHECK(budget("tri-mlist-edgedel-1bit", 7, 1, 3) == 1);
    CHECK(budget("tri-mlist-edgedel-1bit", 1000, 1, 3) == 1);
    CHECK(budget("mlist-rround-blocks", 12, 3, 5) == 5);
    CHECK(budget("tri-mdtct-edgeins-log", 256, 1, 5) == 10);
    CHECK(budget("tri-mlist-edgeins-sqrt", 16, 1, 5) == 9);
    CHECK(budget("tri-mlist-nodedel-0bit", 100, 1, 5) == 0);
    CHECK(id_bits(1) == 1);
    CHECK(id_bits(2) == 1);
    CHECK(id_bits(5) == 3);
    CHECK(id_bits(256) == 8);
    CHECK(ceil_sqrt(16) == 4);
    CHECK(ceil_sqrt(17) == 5);
}

TEST_CASE("zero-bit deletion tracker starts from the initial triangles") {
    auto g = std::make_shared<const Graph>(make_graph(3, {{0, 1}, {1, 2}, {0, 2}}));
    const Algorithm& alg = find_algorithm("tri-mlist-nodedel-0bit");
    auto node = init_node(alg, 0, g, 0, NodeParams{3, 1, 3, 2});
    NodeSet nb = set_of(3, {1, 2});
    Mailbox out = node->send(1, nb, nb);
    for (auto& [to, msg] : out) CHECK(msg.length() == 0);
    Mailbox inbox;
    for (auto& [to, msg] : out) inbox.push_back({to, msg});
    CHECK(node->receive(1, inbox).cliques == CliqueSet{{0, 1, 2}});
}

TEST_CASE("block streamer uses ceil(n/r)-bit blocks") {
    auto g = std::make_shared<const Graph>(make_graph(12, {{0, 1}}));
    auto node = init_node(find_algorithm("mlist-rround-blocks"), 0, g, 0, NodeParams{12, 3, 3, 1});
    Mailbox out = node->send(1, set_of(12, {1}), set_of(12, {1}));
    REQUIRE(out.size() == 1);
    CHECK(out[0].second.length() <= 5);
}

TEST_CASE("one-bit lister: the third endpoint hears two NEW bits") {
    // Path 0-2-1, then edge {0,1} appears; node 2 is w.
    auto g = std::make_shared<const Graph>(make_graph(3, {{0, 2}, {1, 2}}));
    auto w = init_node(find_algorithm("tri-list-edgeins-1bit"), 2, g, 0, NodeParams{3, 1, 3, 2});
    NodeSet nb = set_of(3, {0, 1});
    Mailbox out = w->send(1, nb, nb);
    CHECK(out.size() == 2);
    Mailbox inbox{{0, flags({true, false})}, {1, flags({true, false})}};
    CHECK(w->receive(1, inbox).cliques == CliqueSet{{0, 1, 2}});

    auto w2 = init_node(find_algorithm("tri-list-edgeins-1bit"), 2, g, 0, NodeParams{3, 1, 3, 2});
    w2->send(1, nb, nb);
    Mailbox one{{0, flags({true, false})}, {1, flags({false, false})}};
    CHECK(w2->receive(1, one).cliques.empty());
}

TEST_CASE("malformed inboxes are rejected") {
    auto g = std::make_shared<const Graph>(make_graph(3, {{0, 2}, {1, 2}}));
    auto w = init_node(find_algorithm("tri-list-edgeins-1bit"), 2, g, 0, NodeParams{3, 1, 3, 2});
    NodeSet nb = set_of(3, {0, 1});
    w->send(1, nb, nb);
    Mailbox bad{{0, flags({true, false, true})}, {1, flags({true, false})}};
    CHECK_THROWS_AS(w->receive(1, bad), MalformedInbox);
}

TEST_CASE("one-bit edge-deletion tracker drops the broken triangle") {
    // Triangle 0,1,2; u = 0, and edge {1,2} disappears.
    auto g = std::make_shared<const Graph>(make_graph(3, {{0, 1}, {1, 2}, {0, 2}}));
    auto u = init_node(find_algorithm("tri-mlist-edgedel-1bit"), 0, g, 0, NodeParams{3, 1, 3, 2});
    NodeSet nb = set_of(3, {1, 2});
    u->send(1, nb, nb);
    Mailbox inbox{{1, flags({true})}, {2, flags({true})}};
    CHECK(u->receive(1, inbox).cliques.empty());

    auto keep = init_node(find_algorithm("tri-mlist-edgedel-1bit"), 0, g, 0, NodeParams{3, 1, 3, 2});
    keep->send(1, nb, nb);
    Mailbox calm{{1, flags({false})}, {2, flags({false})}};
    CHECK(keep->receive(1, calm).cliques == CliqueSet{{0, 1, 2}});
}

TEST_CASE("two-round node-insertion detector confirms through LAST echoes") {
    DynamicScenario sc = load_scenario("n 3\nproblem memdetect s=3 r=2 changes=node-insert\nnodes 0 1\nedge 0 1\n"
                                       "event node-insert 2 0 1\nevent noop\n");
    std::vector<RoundTrace> traces;
    SimulationReport rep = run(sc, find_algorithm("tri-mdtct-2round-nodeins"), 2, &traces);
    CHECK(rep.passed);
    REQUIRE(traces.size() == 2);
    // Round 2: both old endpoints raise LAST (second bit) towards the new node.
    for (NodeId x : {0, 1}) {
        const BitMessage& m = traces[1].sent.at({x, 2});
        REQUIRE(m.length() == 2);
        CHECK(m.bit(1));
    }
    CHECK(traces[1].outputs.at(2).flag);
    CHECK(traces[1].outputs.at(0).flag);
}

TEST_CASE("bit messages round-trip") {
    NodeSet s(20);
    for (int x : {1, 4, 9, 17}) s.insert(x);
    BitMessage m = BitWriter().flag(true).uint(5, 3).id_field(true, 13, 5).id_field(false, 0, 5).set_slice(s, 4, 10).finish();
    CHECK(m.length() == 1 + 3 + 6 + 6 + 10);
    BitReader rd(m);
    CHECK(rd.flag());
    CHECK(rd.uint(3) == 5);
    CHECK(rd.id_field(5) == 13);
    CHECK(rd.id_field(5) == -1);
    NodeSet back(20);
    rd.set_slice(back, 4, 10);
    CHECK(back.to_vector() == std::vector<int>{4, 9});
    CHECK_NOTHROW(rd.expect_end());
    BitReader short_rd(m);
    short_rd.flag();
    CHECK_THROWS_AS(short_rd.expect_end(), MalformedInbox);
}
