// Copyright (c) dynclique contributors.
// SPDX-License-Identifier: Apache-2.0
#include "common.hpp"

#include <algorithm>

namespace dynclique::detail {

PairKnowledge::PairKnowledge(NodeId self, int n, std::shared_ptr<const Graph> initial, Validity mode)
    : self_(self), n_(n), initial_(std::move(initial)), mode_(mode), since_(n, kNever), neighbors_(n) {
    if (initial_ && initial_->is_present(self)) {
        neighbors_ = initial_->row(self);
        neighbors_.for_each([&](NodeId x) { since_[x] = 0; });
    }
}

void PairKnowledge::observe(int round, const NodeSet& prev, const NodeSet& now) {
    (prev - now).for_each([&](NodeId x) { since_[x] = kNever; });
    (now - prev).for_each([&](NodeId x) { since_[x] = round; });
    neighbors_ = now;
}

void PairKnowledge::learn(NodeId a, NodeId b, bool exists, int as_of) {
    if (a == b || a == self_ || b == self_) return;
    auto [it, fresh] = facts_.try_emplace(key(a, b), Fact{exists, as_of});
    if (!fresh && it->second.as_of <= as_of) it->second = Fact{exists, as_of};
}

std::optional<Fact> PairKnowledge::fact(NodeId a, NodeId b) const {
    if (auto it = facts_.find(key(a, b)); it != facts_.end()) return it->second;
    if (initial_) return Fact{initial_->has_edge(a, b), 0};
    return std::nullopt;
}

std::optional<bool> PairKnowledge::current(NodeId a, NodeId b) const {
    auto f = fact(a, b);
    if (!f) return std::nullopt;
    int need = mode_ == Validity::EitherEndpoint ? std::min(since_[a], since_[b]) : std::max(since_[a], since_[b]);
    if (need == kNever || f->as_of < need) return std::nullopt;
    return f->exists;
}

} // namespace dynclique::detail
