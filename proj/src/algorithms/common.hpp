// Copyright (c) dynclique contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <climits>
#include <memory>
#include <optional>
#include <unordered_map>

#include "dynclique/algorithms.hpp"

namespace dynclique::detail {

template <typename Derived>
class AutomatonBase : public NodeAutomaton {
  public:
    std::unique_ptr<NodeAutomaton> clone() const override {
        return std::make_unique<Derived>(static_cast<const Derived&>(*this));
    }
};

struct Fact {
    bool exists = false;
    int as_of = 0;
};

// Timestamped knowledge of pairs among (former) neighbors.
class PairKnowledge {
  public:
    // EitherEndpoint: a change of ab is reported by whichever endpoint u is adjacent to.
    // BothEndpoints: a change of ab is only observable while u is adjacent to both.
    enum class Validity { EitherEndpoint, BothEndpoints };

    PairKnowledge(NodeId self, int n, std::shared_ptr<const Graph> initial, Validity mode);

    void observe(int round, const NodeSet& prev, const NodeSet& now);
    void learn(NodeId a, NodeId b, bool exists, int as_of);
    std::optional<Fact> fact(NodeId a, NodeId b) const;
    std::optional<bool> current(NodeId a, NodeId b) const;
    bool certain(NodeId a, NodeId b) const {
        auto c = current(a, b);
        return c && *c;
    }
    int since(NodeId x) const { return since_[x]; }
    const NodeSet& neighbors() const { return neighbors_; }
    NodeId self() const { return self_; }
    int n() const { return n_; }

  private:
    uint32_t key(NodeId a, NodeId b) const {
        return a < b ? static_cast<uint32_t>(a * n_ + b) : static_cast<uint32_t>(b * n_ + a);
    }
    NodeId self_;
    int n_;
    std::shared_ptr<const Graph> initial_;
    Validity mode_;
    std::unordered_map<uint32_t, Fact> facts_;
    std::vector<int> since_;
    NodeSet neighbors_;
};

constexpr int kNever = INT_MAX;

// Cliques of size s containing `self` whose other members lie in `members` and are pairwise adjacent per `adj`.
template <typename Adj>
CliqueSet assemble_cliques(NodeId self, const NodeSet& members, int s, Adj&& adj) {
    CliqueSet out;
    std::vector<NodeId> nodes = members.to_vector();
    const int m = static_cast<int>(nodes.size());
    if (m < s - 1) return out;
    std::vector<NodeSet> row(m, NodeSet(m));
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (adj(nodes[i], nodes[j])) {
                row[i].insert(j);
                row[j].insert(i);
            }
    std::vector<int> cur;
    auto rec = [&](auto&& self_rec, const NodeSet& cand) -> void {
        if (static_cast<int>(cur.size()) == s - 1) {
            Clique c{self};
            for (int i : cur) c.push_back(nodes[i]);
            std::sort(c.begin(), c.end());
            out.insert(std::move(c));
            return;
        }
        if (cand.size() < s - 1 - static_cast<int>(cur.size())) return;
        for (int i = cand.first(); i >= 0; i = cand.next(i)) {
            NodeSet next = cand & row[i];
            for (int x = next.first(); x >= 0 && x <= i; x = next.next(x)) next.erase(x);
            cur.push_back(i);
            self_rec(self_rec, next);
            cur.pop_back();
        }
    };
    NodeSet all(m);
    for (int i = 0; i < m; ++i) all.insert(i);
    rec(rec, all);
    return out;
}

inline NodeOutput make_output(Task task, CliqueSet cliques) {
    NodeOutput out;
    out.task = task;
    out.flag = !cliques.empty();
    if (task == Task::MemList || task == Task::List) out.cliques = std::move(cliques);
    return out;
}

inline NodeOutput flag_output(Task task, bool flag) {
    NodeOutput out;
    out.task = task;
    out.flag = flag;
    return out;
}

// Outgoing messages to every member of `now`, built by `make(x)`.
template <typename Make>
Mailbox broadcast(const NodeSet& now, Make&& make) {
    Mailbox out;
    out.reserve(now.size());
    now.for_each([&](NodeId x) { out.emplace_back(x, make(x)); });
    return out;
}

inline NodeId single(const NodeSet& s) { return s.size() == 1 ? s.first() : -1; }

// Factories for the protocol families.
enum class DeletionMode { InitialOnly, AnyLoss, SharedLoss };
AutomatonFactory deletion_tracker(DeletionMode mode, Task task);
AutomatonFactory digest_lister(bool with_deletions, int window_override, Task task);
AutomatonFactory block_streamer(Task task);

struct TrackerFeatures {
    bool edge_insert = false;
    bool node_insert = false;
    bool deletions = false;
};
AutomatonFactory change_tracker(TrackerFeatures f, Task task);
AutomatonFactory id_detector(bool combined);
AutomatonFactory degree_detector();
AutomatonFactory id_lister();

int degree_window(int n, int delta);

} // namespace dynclique::detail
