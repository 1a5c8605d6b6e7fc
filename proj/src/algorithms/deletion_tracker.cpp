// Copyright (c) dynclique contributors.
// SPDX-License-Identifier: Apache-2.0
#include "common.hpp"

namespace dynclique::detail {

namespace {

// Deletion-only listers: knowledge starts from the initial graph and only ever loses pairs.
class DeletionTracker : public AutomatonBase<DeletionTracker> {
  public:
    DeletionTracker(NodeId self, std::shared_ptr<const Graph> initial, const NodeParams& p, DeletionMode mode,
                    Task task)
        : k_(self, p.n, std::move(initial), PairKnowledge::Validity::EitherEndpoint), mode_(mode), task_(task),
          s_(p.s), lost_(p.n) {}

    Mailbox send(int round, const NodeSet& prev, const NodeSet& now) override {
        lost_ = prev - now;
        k_.observe(round, prev, now);
        return broadcast(now, [&](NodeId x) {
            BitWriter w;
            if (mode_ == DeletionMode::AnyLoss) w.flag(!lost_.empty());
            if (mode_ == DeletionMode::SharedLoss) {
                bool shared = false;
                lost_.for_each([&](NodeId y) {
                    auto f = k_.fact(x, y);
                    shared = shared || (f && f->exists);
                });
                w.flag(shared);
            }
            return w.finish();
        });
    }

    NodeOutput receive(int round, const Mailbox& inbox) override {
        NodeId a = -1, b = -1;
        int count = 0;
        for (const auto& [x, msg] : inbox) {
            BitReader rd(msg);
            if (mode_ != DeletionMode::InitialOnly && rd.flag()) {
                ++count;
                (a < 0 ? a : b) = x;
            }
            rd.expect_end();
        }
        if (count == 2 && lost_.empty()) k_.learn(a, b, false, round);
        return make_output(task_, assemble_cliques(k_.self(), k_.neighbors(), s_,
                                                   [&](NodeId p, NodeId q) { return k_.certain(p, q); }));
    }

  private:
    PairKnowledge k_;
    DeletionMode mode_;
    Task task_;
    int s_;
    NodeSet lost_;
};

} // namespace

AutomatonFactory deletion_tracker(DeletionMode mode, Task task) {
    return [mode, task](NodeId self, std::shared_ptr<const Graph> initial, int, const NodeParams& p) {
        return std::make_unique<DeletionTracker>(self, std::move(initial), p, mode, task);
    };
}

} // namespace dynclique::detail
