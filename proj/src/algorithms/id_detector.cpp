// Copyright (c) dynclique contributors.
// SPDX-License-Identifier: Apache-2.0
#include "common.hpp"

namespace dynclique::detail {

namespace {

bool has_certain_pair(const PairKnowledge& k) {
    return !assemble_cliques(k.self(), k.neighbors(), 3, [&](NodeId a, NodeId b) { return k.certain(a, b); })
                .empty();
}

// NEWID announcements with a per-edge ACCEPT bit; the combined form adds DELID and a
// LAST bit echoing who announced the receiver in the previous round.
class IdDetector : public AutomatonBase<IdDetector> {
  public:
    IdDetector(NodeId self, std::shared_ptr<const Graph> initial, const NodeParams& p, bool combined)
        : k_(self, p.n, std::move(initial), PairKnowledge::Validity::EitherEndpoint), n_(p.n),
          id_bits_(id_bits(p.n)), combined_(combined), added_(p.n), reports_(p.n, -1) {}

    Mailbox send(int round, const NodeSet& prev, const NodeSet& now) override {
        k_.observe(round, prev, now);
        added_ = now - prev;
        NodeSet lost = prev - now;
        NodeId newid = single(added_), delid = single(lost);
        return broadcast(now, [&](NodeId x) {
            BitWriter w;
            w.id_field(newid >= 0, newid, id_bits_);
            if (combined_) w.id_field(delid >= 0, delid, id_bits_);
            bool accept = false;
            if (added_.contains(x))
                now.for_each([&](NodeId z) { accept = accept || (z != x && k_.certain(z, x)); });
            w.flag(accept);
            if (combined_) {
                bool last = false;
                if (reports_round_ == round - 1)
                    for (NodeId s = 0; s < n_; ++s) last = last || (s != x && reports_[s] == x);
                w.flag(last);
            }
            return w.finish();
        });
    }

    NodeOutput receive(int round, const Mailbox& inbox) override {
        bool accepted = false;
        NodeId echoed = last_new_round_ == round - 1 ? last_new_ : -1;
        std::fill(reports_.begin(), reports_.end(), -1);
        reports_round_ = round;
        for (const auto& [x, msg] : inbox) {
            BitReader rd(msg);
            NodeId newid = rd.id_field(id_bits_);
            NodeId delid = combined_ ? rd.id_field(id_bits_) : -1;
            accepted = rd.flag() || accepted;
            bool last = combined_ && rd.flag();
            rd.expect_end();
            if (echoed >= 0 && x != echoed && k_.neighbors().contains(echoed)) k_.learn(x, echoed, last, round - 1);
            if (newid >= 0) {
                k_.learn(x, newid, true, round);
                reports_[x] = newid;
            }
            if (delid >= 0) k_.learn(x, delid, false, round);
        }
        last_new_ = single(added_);
        last_new_round_ = round;
        bool member = accepted || has_certain_pair(k_);
        if (!combined_) {
            detected_ = detected_ || member;
            member = detected_;
        }
        return flag_output(Task::MemDetect, member);
    }

  private:
    PairKnowledge k_;
    int n_, id_bits_;
    bool combined_;
    NodeSet added_;
    std::vector<NodeId> reports_;
    int reports_round_ = -1;
    NodeId last_new_ = -1;
    int last_new_round_ = -1;
    bool detected_ = false;
};

// Bounded-degree variant: per-edge activity masks on the insertion round, then the sender's
// neighbor ID list in chunks.
class DegreeDetector : public AutomatonBase<DegreeDetector> {
  public:
    DegreeDetector(NodeId self, std::shared_ptr<const Graph> initial, const NodeParams& p)
        : k_(self, p.n, std::move(initial), PairKnowledge::Validity::EitherEndpoint), n_(p.n),
          id_bits_(id_bits(p.n)), width_(degree_window(p.n, p.delta)), added_(p.n), out_(p.n), in_(p.n),
          my_new_(width_ + 1, -1), got_new_(width_ + 1, NodeSet(p.n)), got_round_(width_ + 1, -1) {}

    Mailbox send(int round, const NodeSet& prev, const NodeSet& now) override {
        k_.observe(round, prev, now);
        added_ = now - prev;
        (prev - now).for_each([&](NodeId x) {
            out_[x] = Outgoing{};
            in_[x] = Incoming{};
        });
        added_.for_each([&](NodeId x) {
            Outgoing o{round, {}};
            push_uint(o.bits, static_cast<uint64_t>(now.size()), id_bits_ + 1);
            now.for_each([&](NodeId y) { push_uint(o.bits, static_cast<uint64_t>(y), id_bits_); });
            out_[x] = std::move(o);
            in_[x] = Incoming{round, {}, -1};
        });
        return broadcast(now, [&](NodeId x) {
            BitWriter w;
            w.flag(!added_.empty());
            const Outgoing& o = out_[x];
            int j = round - o.start;
            if (o.start == round) {
                bool accept = false;
                now.for_each([&](NodeId z) { accept = accept || (z != x && k_.certain(z, x)); });
                w.flag(accept);
                for (int d = 1; d <= width_; ++d) w.flag(had_new(round - d) >= 0);
                for (int d = 1; d <= width_; ++d) w.flag(!got_new(round - d).empty());
            } else if (o.start >= 0 && static_cast<size_t>((j - 1) * width_) < o.bits.size()) {
                for (int i = 0; i < width_; ++i) {
                    size_t at = static_cast<size_t>((j - 1) * width_ + i);
                    w.flag(at < o.bits.size() && o.bits[at]);
                }
            }
            return w.finish();
        });
    }

    NodeOutput receive(int round, const Mailbox& inbox) override {
        bool accepted = false;
        NodeSet senders(n_);
        for (const auto& [x, msg] : inbox) {
            BitReader rd(msg);
            if (rd.flag()) senders.insert(x);
            Incoming& in = in_[x];
            if (in.start == round) {
                accepted = rd.flag() || accepted;
                for (int d = 1; d <= width_; ++d) {
                    // x gained an edge d rounds ago; the only other announcer I heard then is its far end
                    if (!rd.flag()) continue;
                    NodeSet heard = got_new(round - d);
                    heard.erase(x);
                    if (heard.size() == 1) k_.learn(heard.first(), x, true, round - d);
                }
                for (int d = 1; d <= width_; ++d) {
                    // a neighbor of x announced d rounds ago; if that was my own new neighbor, it is adjacent to x
                    bool bit = rd.flag();
                    NodeId mine = had_new(round - d);
                    if (bit && mine >= 0 && mine != x) k_.learn(mine, x, true, round - d);
                }
            } else if (in.start >= 0 && !in.done()) {
                for (int i = 0; i < width_; ++i) in.bits.push_back(rd.flag());
                if (in.expected < 0 && static_cast<int>(in.bits.size()) >= id_bits_ + 1)
                    in.expected = id_bits_ + 1 + static_cast<int>(read_uint(in.bits, 0, id_bits_ + 1)) * id_bits_;
                if (in.done()) {
                    int count = static_cast<int>(read_uint(in.bits, 0, id_bits_ + 1));
                    for (int i = 0; i < count; ++i) {
                        auto y = static_cast<NodeId>(read_uint(in.bits, id_bits_ + 1 + i * id_bits_, id_bits_));
                        if (y >= 0 && y < n_) k_.learn(x, y, true, in.start);
                    }
                }
            }
            rd.expect_end();
        }
        // Third-node case: exactly two announcers and no change of my own.
        if (added_.empty() && senders.size() == 2) {
            NodeId a = senders.first();
            k_.learn(a, senders.next(a), true, round);
        }
        int slot = round % (width_ + 1);
        my_new_[slot] = single(added_);
        got_new_[slot] = senders;
        got_round_[slot] = round;
        detected_ = detected_ || accepted || has_certain_pair(k_);
        return flag_output(Task::MemDetect, detected_);
    }

  private:
    struct Outgoing {
        int start = -1;
        std::vector<bool> bits;
    };
    struct Incoming {
        int start = -1;
        std::vector<bool> bits;
        int expected = -1;
        bool done() const { return expected >= 0 && static_cast<int>(bits.size()) >= expected; }
    };

    static void push_uint(std::vector<bool>& bits, uint64_t v, int width) {
        for (int i = 0; i < width; ++i) bits.push_back((v >> i) & 1U);
    }
    static uint64_t read_uint(const std::vector<bool>& bits, int at, int width) {
        uint64_t v = 0;
        for (int i = 0; i < width; ++i)
            if (bits[at + i]) v |= uint64_t{1} << i;
        return v;
    }
    NodeId had_new(int r) const {
        if (r < 1) return -1;
        int slot = r % (width_ + 1);
        return got_round_[slot] == r ? my_new_[slot] : -1;
    }
    NodeSet got_new(int r) const {
        if (r < 1) return NodeSet(n_);
        int slot = r % (width_ + 1);
        return got_round_[slot] == r ? got_new_[slot] : NodeSet(n_);
    }

    PairKnowledge k_;
    int n_, id_bits_, width_;
    NodeSet added_;
    std::vector<Outgoing> out_;
    std::vector<Incoming> in_;
    std::vector<NodeId> my_new_;
    std::vector<NodeSet> got_new_;
    std::vector<int> got_round_;
    bool detected_ = false;
};

} // namespace

int degree_window(int n, int delta) {
    return ceil_sqrt(static_cast<long long>(delta + 1) * (id_bits(n) + 1));
}

AutomatonFactory id_detector(bool combined) {
    return [combined](NodeId self, std::shared_ptr<const Graph> initial, int, const NodeParams& p) {
        return std::make_unique<IdDetector>(self, std::move(initial), p, combined);
    };
}

AutomatonFactory degree_detector() {
    return [](NodeId self, std::shared_ptr<const Graph> initial, int, const NodeParams& p) {
        return std::make_unique<DegreeDetector>(self, std::move(initial), p);
    };
}

} // namespace dynclique::detail
