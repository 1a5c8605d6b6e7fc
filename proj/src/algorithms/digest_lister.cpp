// Copyright (c) dynclique contributors.
// SPDX-License-Identifier: Apache-2.0
#include <deque>

#include "common.hpp"

namespace dynclique::detail {

namespace {

// NEWID announcements plus, per new edge, a recent-activity mask followed by the full
// neighbor string of the sender in sqrt(n)-bit chunks.
class DigestLister : public AutomatonBase<DigestLister> {
  public:
    DigestLister(NodeId self, std::shared_ptr<const Graph> initial, const NodeParams& p, bool deletions,
                 int window, Task task)
        : k_(self, p.n, std::move(initial), PairKnowledge::Validity::EitherEndpoint), n_(p.n), s_(p.s),
          task_(task), deletions_(deletions), id_bits_(id_bits(p.n)), chunk_(ceil_sqrt(p.n)),
          window_(window > 0 ? window : chunk_), chunks_((p.n + chunk_ - 1) / chunk_), channels_(p.n) {}

    Mailbox send(int round, const NodeSet& prev, const NodeSet& now) override {
        k_.observe(round, prev, now);
        NodeSet added = now - prev, lost = prev - now;
        lost.for_each([&](NodeId x) { channels_[x] = Channel{}; });
        added.for_each([&](NodeId x) { channels_[x] = Channel{round, now, NodeSet(n_)}; });
        NodeId newid = single(added), delid = single(lost);
        while (!recent_.empty() && recent_.front().first < round - window_) recent_.pop_front();
        return broadcast(now, [&](NodeId x) {
            BitWriter w;
            w.id_field(newid >= 0, newid, id_bits_);
            if (deletions_) w.id_field(delid >= 0, delid, id_bits_);
            const Channel& ch = channels_[x];
            int j = round - ch.start;
            if (ch.start == round) {
                for (int d = 1; d <= window_; ++d) w.flag(reported_to_me(round - d, x));
            } else if (ch.start >= 0 && j <= chunks_) {
                w.set_slice(ch.snapshot, (j - 1) * chunk_, chunk_);
            }
            return w.finish();
        });
    }

    NodeOutput receive(int round, const Mailbox& inbox) override {
        NodeSet senders(n_);
        for (const auto& [x, msg] : inbox) {
            BitReader rd(msg);
            NodeId newid = rd.id_field(id_bits_);
            NodeId delid = deletions_ ? rd.id_field(id_bits_) : -1;
            if (newid >= 0) {
                senders.insert(x);
                k_.learn(x, newid, true, round);
            }
            if (delid >= 0) k_.learn(x, delid, false, round);
            Channel& ch = channels_[x];
            int j = round - ch.start;
            if (ch.start == round) {
                std::vector<bool> mask(window_ + 1);
                for (int d = 1; d <= window_; ++d) mask[d] = rd.flag();
                k_.neighbors().for_each([&](NodeId v) {
                    int sv = k_.since(v);
                    int d = round - sv;
                    if (v != x && sv >= 1 && d >= 1 && d <= window_) k_.learn(x, v, mask[d], sv);
                });
            } else if (ch.start >= 0 && j <= chunks_) {
                rd.set_slice(ch.received, (j - 1) * chunk_, chunk_);
                if (j == chunks_)
                    for (NodeId y = 0; y < n_; ++y)
                        if (y != x) k_.learn(x, y, ch.received.contains(y), ch.start);
            }
            rd.expect_end();
        }
        if (!senders.empty()) recent_.emplace_back(round, std::move(senders));
        return make_output(task_, assemble_cliques(k_.self(), k_.neighbors(), s_,
                                                   [&](NodeId a, NodeId b) { return k_.certain(a, b); }));
    }

  private:
    struct Channel {
        int start = -1;
        NodeSet snapshot;
        NodeSet received;
    };

    // Whether some neighbor other than `to` sent me a NEWID in round `r`.
    bool reported_to_me(int r, NodeId to) const {
        for (const auto& [when, who] : recent_)
            if (when == r) {
                NodeSet others = who;
                others.erase(to);
                return !others.empty();
            }
        return false;
    }

    PairKnowledge k_;
    int n_, s_;
    Task task_;
    bool deletions_;
    int id_bits_, chunk_, window_, chunks_;
    std::vector<Channel> channels_;
    std::deque<std::pair<int, NodeSet>> recent_;
};

} // namespace

AutomatonFactory digest_lister(bool with_deletions, int window_override, Task task) {
    return [=](NodeId self, std::shared_ptr<const Graph> initial, int, const NodeParams& p) {
        return std::make_unique<DigestLister>(self, std::move(initial), p, with_deletions, window_override, task);
    };
}

} // namespace dynclique::detail
