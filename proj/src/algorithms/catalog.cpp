// Copyright (c) dynclique contributors.
// SPDX-License-Identifier: Apache-2.0
#include <algorithm>

#include "common.hpp"

namespace dynclique {

using detail::TrackerFeatures;

bool Algorithm::supports(const ProblemSpec& p) const {
    if (p.task != task) return false;
    if (s != 0 && p.s != s) return false;
    if (p.s < 3) return false;
    for (ChangeKind k : p.allowed)
        if (k != ChangeKind::NoOp && !allowed.count(k)) return false;
    return r == 0 || p.r >= r;
}

int Algorithm::budget(int n, int r_param, int delta) const {
    NodeParams p;
    p.n = n;
    p.r = r_param;
    p.delta = std::max(1, delta);
    return budget_fn(p);
}

namespace {

constexpr ChangeKind EI = ChangeKind::EdgeInsert;
constexpr ChangeKind ED = ChangeKind::EdgeDelete;
constexpr ChangeKind NI = ChangeKind::NodeInsert;
constexpr ChangeKind ND = ChangeKind::NodeDelete;

std::function<int(const NodeParams&)> constant(int b) {
    return [b](const NodeParams&) { return b; };
}

int sqrt_budget(const NodeParams& p) { return ceil_sqrt(p.n) + id_bits(p.n) + 1; }
int sqrt_del_budget(const NodeParams& p) { return ceil_sqrt(p.n) + 2 * id_bits(p.n) + 2; }

std::vector<Algorithm> build() {
    std::vector<Algorithm> c;
    auto add = [&](std::string name, Task task, int s, ChangeSet allowed, int r, std::string formula,
                   std::function<int(const NodeParams&)> fn, AutomatonFactory factory) {
        c.push_back(Algorithm{std::move(name), task, s, std::move(allowed), r, std::move(formula), std::move(fn),
                              std::move(factory)});
    };
    using detail::DeletionMode;
    const std::string sqrt_formula = "ceil(sqrt n) + ceil(log2 n) + 1";
    const std::string sqrt_del_formula = "ceil(sqrt n) + 2 ceil(log2 n) + 2";

    // Membership listing; the ks- forms run the same protocols with clique assembly for any s.
    for (int s : {3, 0}) {
        std::string pre = s == 3 ? "tri-mlist-" : "ks-mlist-";
        add(pre + "nodedel-0bit", Task::MemList, s, {ND}, 1, "0", constant(0),
            detail::deletion_tracker(DeletionMode::InitialOnly, Task::MemList));
        add(pre + "edgedel-1bit", Task::MemList, s, {ED}, 1, "1", constant(1),
            detail::deletion_tracker(DeletionMode::AnyLoss, Task::MemList));
        add(pre + "del-combined", Task::MemList, s, {ND, ED}, 1, "1", constant(1),
            detail::deletion_tracker(DeletionMode::SharedLoss, Task::MemList));
        add(pre + "edgeins-sqrt", Task::MemList, s, {EI}, 1, sqrt_formula, sqrt_budget,
            detail::digest_lister(false, 0, Task::MemList));
        add(pre + "insdel-sqrt", Task::MemList, s, {EI, ED, ND}, 1, sqrt_del_formula, sqrt_del_budget,
            detail::digest_lister(true, 0, Task::MemList));
        add(pre + "2round-const", Task::MemList, s, {EI}, 2, "2", constant(2),
            detail::change_tracker(TrackerFeatures{true, false, false}, Task::MemList));
        add(pre + "2round-combined", Task::MemList, s, {EI, ED, ND}, 2, "4", constant(4),
            detail::change_tracker(TrackerFeatures{true, false, true}, Task::MemList));
    }
    add("mlist-rround-blocks", Task::MemList, 0, {EI, ED, NI, ND}, 0, "ceil(n/r) + 1",
        [](const NodeParams& p) { return (p.n + p.r - 1) / p.r + 1; }, detail::block_streamer(Task::MemList));

    add("tri-mdtct-edgeins-log", Task::MemDetect, 3, {EI}, 1, "ceil(log2 n) + 2",
        [](const NodeParams& p) { return id_bits(p.n) + 2; }, detail::id_detector(false));
    add("tri-mdtct-combined-log", Task::MemDetect, 3, {EI, ED, ND}, 1, "2 ceil(log2 n) + 4",
        [](const NodeParams& p) { return 2 * id_bits(p.n) + 4; }, detail::id_detector(true));
    add("tri-mdtct-edgeins-deg", Task::MemDetect, 3, {EI}, 1, "2 ceil(sqrt((D+1)(ceil(log2 n)+1))) + 2",
        [](const NodeParams& p) { return 2 * detail::degree_window(p.n, p.delta) + 2; }, detail::degree_detector());
    add("tri-mdtct-2round-nodeins", Task::MemDetect, 3, {NI}, 2, "2", constant(2),
        detail::change_tracker(TrackerFeatures{false, true, false}, Task::MemDetect));
    add("tri-mdtct-2round-all", Task::MemDetect, 3, {EI, ED, NI, ND}, 2, "7", constant(7),
        detail::change_tracker(TrackerFeatures{true, true, true}, Task::MemDetect));

    add("tri-list-edgeins-1bit", Task::List, 3, {EI}, 1, "2", constant(2),
        detail::change_tracker(TrackerFeatures{true, false, false}, Task::List));
    add("tri-list-insdel", Task::List, 3, {EI, ED, ND}, 1, "4", constant(4),
        detail::change_tracker(TrackerFeatures{true, false, true}, Task::List));
    add("tri-list-nodeins-1bit", Task::List, 3, {NI}, 1, "1", constant(1),
        detail::change_tracker(TrackerFeatures{false, true, false}, Task::List));
    add("tri-list-all-const", Task::List, 3, {NI, ND, ED}, 1, "3", constant(3),
        detail::change_tracker(TrackerFeatures{false, true, true}, Task::List));
    add("tri-list-allfour-log", Task::List, 3, {EI, ED, NI, ND}, 1, "2 ceil(log2 n) + 2",
        [](const NodeParams& p) { return 2 * id_bits(p.n) + 2; }, detail::id_lister());

    add("ks-list-edgeins", Task::List, 0, {EI}, 1, "2", constant(2),
        detail::change_tracker(TrackerFeatures{true, false, false}, Task::List));
    add("ks-list-nodeins", Task::List, 0, {NI}, 1, "1", constant(1),
        detail::change_tracker(TrackerFeatures{false, true, false}, Task::List));
    return c;
}

} // namespace

const std::vector<Algorithm>& catalog() {
    static const std::vector<Algorithm> entries = build();
    return entries;
}

const Algorithm& find_algorithm(const std::string& name) {
    for (const Algorithm& a : catalog())
        if (a.name == name) return a;
    throw UnknownAlgorithm("unknown algorithm '" + name + "'");
}

std::unique_ptr<NodeAutomaton> init_node(const Algorithm& alg, NodeId self, std::shared_ptr<const Graph> initial,
                                         int birth, const NodeParams& params) {
    if (!alg.factory) throw UnknownAlgorithm("algorithm '" + alg.name + "' has no implementation");
    return alg.factory(self, std::move(initial), birth, params);
}

int budget(const std::string& name, int n, int r, int delta) { return find_algorithm(name).budget(n, r, delta); }

Algorithm digest_memlist_with_window(int window) {
    Algorithm a = find_algorithm("tri-mlist-edgeins-sqrt");
    a.name += "-window" + std::to_string(window);
    a.factory = detail::digest_lister(false, window, Task::MemList);
    return a;
}

} // namespace dynclique
