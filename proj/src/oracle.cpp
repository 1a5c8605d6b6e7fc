// Copyright (c) dynclique contributors.
// SPDX-License-Identifier: Apache-2.0
#include "dynclique/oracle.hpp"

#include <sstream>

namespace dynclique {

std::string to_string(const Clique& c) {
    std::string out = "(";
    for (size_t i = 0; i < c.size(); ++i) out += (i ? "," : "") + std::to_string(c[i]);
    return out + ")";
}

std::string to_string(const NodeOutput& out) {
    if (out.task == Task::MemDetect || out.task == Task::Detect) return out.flag ? "true" : "false";
    std::string s = "{";
    bool first = true;
    for (const Clique& c : out.cliques) {
        s += (first ? "" : " ") + to_string(c);
        first = false;
    }
    return s + "}";
}

namespace {

void extend(const Graph& g, int s, Clique& cur, const NodeSet& cand, CliqueSet& out) {
    if (static_cast<int>(cur.size()) == s) {
        out.insert(cur);
        return;
    }
    int need = s - static_cast<int>(cur.size());
    if (cand.size() < need) return;
    for (NodeId v = cand.first(); v >= 0; v = cand.next(v)) {
        NodeSet next = cand & g.row(v);
        // keep only larger IDs so each clique is produced once, in increasing order
        for (NodeId x = next.first(); x >= 0 && x <= v; x = next.next(x)) next.erase(x);
        cur.push_back(v);
        extend(g, s, cur, next, out);
        cur.pop_back();
    }
}

} // namespace

CliqueSet enumerate_cliques(const Graph& g, int s) {
    CliqueSet out;
    Clique cur;
    extend(g, s, cur, g.present(), out);
    return out;
}

CliqueSet cliques_containing(const Graph& g, int s, NodeId v) {
    CliqueSet out;
    if (!g.is_present(v)) return out;
    Graph local(g.n());
    NodeSet keep = g.row(v);
    keep.insert(v);
    keep.for_each([&](NodeId a) { local.add_node(a); });
    keep.for_each([&](NodeId a) { (g.row(a) & keep).for_each([&](NodeId b) { if (a < b) local.add_edge(a, b); }); });
    for (const Clique& c : enumerate_cliques(local, s))
        for (NodeId x : c)
            if (x == v) {
                out.insert(c);
                break;
            }
    return out;
}

ExpectedOutputs::ExpectedOutputs(const Graph& g, const ProblemSpec& problem)
    : g_(g), problem_(problem), cliques_(enumerate_cliques(g, problem.s)) {}

NodeOutput ExpectedOutputs::expected_for(NodeId v) const {
    NodeOutput out;
    out.task = problem_.task;
    for (const Clique& c : cliques_)
        for (NodeId x : c)
            if (x == v) out.cliques.insert(c);
    out.flag = !out.cliques.empty();
    if (out.task != Task::MemList) out.cliques.clear();
    return out;
}

std::vector<std::string> ExpectedOutputs::check(const std::map<NodeId, NodeOutput>& outputs) const {
    std::vector<std::string> bad;
    auto missing = [&](NodeId v) {
        if (!outputs.count(v)) bad.push_back("node " + std::to_string(v) + ": no output");
    };
    switch (problem_.task) {
    case Task::MemList:
    case Task::MemDetect:
        g_.present().for_each([&](NodeId v) {
            auto it = outputs.find(v);
            if (it == outputs.end()) {
                missing(v);
                return;
            }
            NodeOutput want = expected_for(v);
            const NodeOutput& got = it->second;
            bool same = problem_.task == Task::MemList ? got.cliques == want.cliques : got.flag == want.flag;
            if (!same)
                bad.push_back("node " + std::to_string(v) + ": output " + to_string(got) + ", expected " +
                              to_string(want));
        });
        break;
    case Task::List: {
        CliqueSet listed;
        for (const auto& [v, out] : outputs) {
            if (!g_.is_present(v)) continue;
            for (const Clique& c : out.cliques) {
                if (!cliques_.count(c))
                    bad.push_back("node " + std::to_string(v) + ": listed " + to_string(c) + " which is not a clique");
                listed.insert(c);
            }
        }
        for (const Clique& c : cliques_)
            if (!listed.count(c)) bad.push_back("clique " + to_string(c) + " listed by no node");
        break;
    }
    case Task::Detect: {
        bool any = false;
        for (const auto& [v, out] : outputs)
            if (g_.is_present(v) && out.flag) any = true;
        if (any && cliques_.empty()) bad.push_back("some node detects a clique but none exists");
        if (!any && !cliques_.empty()) bad.push_back("no node detects the existing cliques");
        break;
    }
    }
    return bad;
}

ExpectedOutputs expected_outputs(const Graph& g, const ProblemSpec& problem) { return ExpectedOutputs(g, problem); }

} // namespace dynclique
