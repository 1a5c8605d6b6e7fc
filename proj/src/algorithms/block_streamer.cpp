// Copyright (c) dynclique contributors.
// SPDX-License-Identifier: Apache-2.0
#include "common.hpp"

namespace dynclique::detail {

namespace {

// Every node streams its neighbor bit-string in blocks, restarting whenever its neighborhood changes.
class BlockStreamer : public AutomatonBase<BlockStreamer> {
  public:
    BlockStreamer(NodeId self, const std::shared_ptr<const Graph>& initial, int birth, const NodeParams& p,
                  Task task)
        : self_(self), n_(p.n), s_(p.s), task_(task), birth_(birth), snap_(p.n), copies_(p.n) {
        block_ = (p.n + p.r - 1) / p.r;
        blocks_ = (p.n + block_ - 1) / block_;
        if (initial && initial->is_present(self)) {
            snap_ = initial->row(self);
            reset_ = 1;
            snap_.for_each([&](NodeId x) { copies_[x] = Copy{1, initial->row(x), blocks_}; });
        }
    }

    Mailbox send(int round, const NodeSet& prev, const NodeSet& now) override {
        bool dirty = prev != now || round == birth_;
        if (dirty) {
            reset_ = round;
            snap_ = now;
        }
        (prev - now).for_each([&](NodeId x) { copies_[x] = Copy{}; });
        neighbors_ = now;
        int idx = (round - reset_) % blocks_;
        return broadcast(now, [&](NodeId) {
            BitWriter w;
            w.flag(dirty).set_slice(snap_, idx * block_, block_);
            return w.finish();
        });
    }

    NodeOutput receive(int round, const Mailbox& inbox) override {
        for (const auto& [x, msg] : inbox) {
            BitReader rd(msg);
            Copy& c = copies_[x];
            if (rd.flag() || c.reset < 0) c = Copy{round, NodeSet(n_), 0};
            rd.set_slice(c.bits, ((round - c.reset) % blocks_) * block_, block_);
            rd.expect_end();
            ++c.received;
        }
        auto adjacent = [&](NodeId a, NodeId b) {
            if (complete(a)) return copies_[a].bits.contains(b);
            if (complete(b)) return copies_[b].bits.contains(a);
            return false;
        };
        return make_output(task_, assemble_cliques(self_, neighbors_, s_, adjacent));
    }

  private:
    struct Copy {
        int reset = -1;
        NodeSet bits;
        int received = 0;
    };
    bool complete(NodeId x) const { return copies_[x].reset >= 0 && copies_[x].received >= blocks_; }

    NodeId self_;
    int n_, s_;
    Task task_;
    int birth_;
    int block_ = 1, blocks_ = 1;
    int reset_ = 0;
    NodeSet snap_;
    NodeSet neighbors_;
    std::vector<Copy> copies_;
};

} // namespace

AutomatonFactory block_streamer(Task task) {
    return [task](NodeId self, std::shared_ptr<const Graph> initial, int birth, const NodeParams& p) {
        return std::make_unique<BlockStreamer>(self, initial, birth, p, task);
    };
}

} // namespace dynclique::detail
