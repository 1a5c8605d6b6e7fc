// Copyright (c) dynclique contributors.
// SPDX-License-Identifier: Apache-2.0
#include "common.hpp"

namespace dynclique::detail {

namespace {

struct Flags {
    bool is_new = false, last = false, node_flag = false, deleted = false, dlast = false, common = false;
    bool fresh = false;
};

// Constant-size change indications (NEW/DELETED and their one-round echoes), from which
// pairs among neighbors are reconstructed one round late at the latest.
class ChangeTracker : public AutomatonBase<ChangeTracker> {
  public:
    ChangeTracker(NodeId self, std::shared_ptr<const Graph> initial, int birth, const NodeParams& p,
                  TrackerFeatures f, Task task)
        : k_(self, p.n, std::move(initial), PairKnowledge::Validity::BothEndpoints), n_(p.n), s_(p.s), task_(task),
          f_(f), birth_(birth), added_(p.n), lost_(p.n), new_senders_(p.n), del_senders_(p.n) {
        both_ = f.edge_insert && f.node_insert;
        has_last_ = f.edge_insert || (f.node_insert && task == Task::MemDetect);
        sticky_ = task == Task::MemDetect && !f.deletions;
    }

    Mailbox send(int round, const NodeSet& prev, const NodeSet& now) override {
        k_.observe(round, prev, now);
        added_ = now - prev;
        lost_ = prev - now;
        const bool fresh = round == birth_;
        const bool send_new = !fresh && !added_.empty();
        const bool node_flag = last_new_.round == round - 1 && last_new_.node;
        const bool deleted = !lost_.empty();
        return broadcast(now, [&](NodeId x) {
            BitWriter w;
            w.flag(send_new);
            if (both_) w.flag(fresh);
            if (has_last_) w.flag(echo(new_senders_, new_round_, round, x));
            if (both_) w.flag(node_flag);
            if (f_.deletions) w.flag(deleted).flag(echo(del_senders_, del_round_, round, x));
            if (both_) w.flag(knows_common(x, round));
            return w.finish();
        });
    }

    NodeOutput receive(int round, const Mailbox& inbox) override {
        const bool fresh = round == birth_;
        std::vector<std::pair<NodeId, Flags>> msgs;
        msgs.reserve(inbox.size());
        NodeSet new_from(n_), del_from(n_);
        bool common = false;
        for (const auto& [x, msg] : inbox) {
            BitReader rd(msg);
            Flags fl;
            if (rd.flag()) new_from.insert(x);
            if (both_) fl.is_new = rd.flag();
            if (has_last_) fl.last = rd.flag();
            if (both_) fl.node_flag = rd.flag();
            if (f_.deletions) {
                if (rd.flag()) del_from.insert(x);
                fl.dlast = rd.flag();
            }
            if (both_) fl.common = rd.flag();
            rd.expect_end();
            common = common || fl.common;
            msgs.emplace_back(x, fl);
        }
        auto flags_of = [&](NodeId x) -> const Flags* {
            for (const auto& [y, fl] : msgs)
                if (y == x) return &fl;
            return nullptr;
        };

        // Echo of my own new edge from the previous round.
        if (f_.edge_insert && last_new_.round == round - 1 && !last_new_.node &&
            k_.neighbors().contains(last_new_.id)) {
            for (const auto& [x, fl] : msgs)
                if (x != last_new_.id) k_.learn(x, last_new_.id, fl.last, round - 1);
        }
        if (sticky_ && !f_.edge_insert && birth_ == round - 1)
            for (const auto& [x, fl] : msgs) detected_ = detected_ || fl.last;

        if (pending_ins_.round == round - 1) {
            const Flags* fl = flags_of(pending_ins_.a);
            if (!fl) fl = flags_of(pending_ins_.b);
            if (fl && !fl->node_flag) k_.learn(pending_ins_.a, pending_ins_.b, true, round - 1);
        }
        if (pending_del_.round == round - 1) {
            const Flags* fl = flags_of(pending_del_.a);
            if (!fl) fl = flags_of(pending_del_.b);
            if (fl && !fl->dlast) k_.learn(pending_del_.a, pending_del_.b, false, round - 1);
        }

        NodeId b = fresh ? -1 : single(added_);
        if (b >= 0) {
            const Flags* fb = flags_of(b);
            bool node = f_.node_insert && (!f_.edge_insert || (fb && fb->is_new));
            last_new_ = {round, b, node};
            if (node)
                for (const auto& [z, fl] : msgs)
                    if (z != b) k_.learn(z, b, new_from.contains(z), round);
        }
        if (!fresh && added_.empty() && new_from.size() == 2) {
            NodeId a = new_from.first(), c = new_from.next(a);
            if (both_)
                pending_ins_ = {round, a, c};
            else if (f_.edge_insert)
                k_.learn(a, c, true, round);
        }
        new_senders_ = new_from;
        new_round_ = round;
        if (f_.deletions) {
            if (!fresh && lost_.empty() && del_from.size() == 2) {
                NodeId a = del_from.first();
                pending_del_ = {round, a, del_from.next(a)};
            }
            del_senders_ = del_from;
            del_round_ = round;
        }

        auto certain = [&](NodeId a, NodeId c) {
            if (pending_del_.round == round && ((pending_del_.a == a && pending_del_.b == c) ||
                                                (pending_del_.a == c && pending_del_.b == a)))
                return false;
            return k_.certain(a, c);
        };
        if (task_ == Task::MemDetect) {
            bool member = common || !assemble_cliques(k_.self(), k_.neighbors(), 3, certain).empty();
            if (sticky_) {
                detected_ = detected_ || member;
                member = detected_;
            }
            return flag_output(task_, member);
        }
        return make_output(task_, assemble_cliques(k_.self(), k_.neighbors(), s_, certain));
    }

  private:
    struct NewNeighbor {
        int round = -1;
        NodeId id = -1;
        bool node = false;
    };
    struct Candidate {
        int round = -1;
        NodeId a = -1, b = -1;
    };

    static bool echo(const NodeSet& senders, int when, int round, NodeId to) {
        if (when != round - 1) return false;
        NodeSet others = senders;
        others.erase(to);
        return !others.empty();
    }

    bool knows_common(NodeId x, int round) const {
        bool found = false;
        k_.neighbors().for_each([&](NodeId z) {
            if (found || z == x) return;
            if (pending_del_.round == round - 1 && ((pending_del_.a == x && pending_del_.b == z) ||
                                                    (pending_del_.a == z && pending_del_.b == x)))
                return;
            found = k_.certain(x, z);
        });
        return found;
    }

    PairKnowledge k_;
    int n_, s_;
    Task task_;
    TrackerFeatures f_;
    int birth_;
    bool both_ = false, has_last_ = false, sticky_ = false, detected_ = false;
    NodeSet added_, lost_;
    NodeSet new_senders_, del_senders_;
    int new_round_ = -1, del_round_ = -1;
    NewNeighbor last_new_;
    Candidate pending_ins_, pending_del_;
};

} // namespace

AutomatonFactory change_tracker(TrackerFeatures f, Task task) {
    return [=](NodeId self, std::shared_ptr<const Graph> initial, int birth, const NodeParams& p) {
        return std::make_unique<ChangeTracker>(self, std::move(initial), birth, p, f, task);
    };
}

} // namespace dynclique::detail
