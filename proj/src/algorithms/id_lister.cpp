// Copyright (c) dynclique contributors.
// SPDX-License-Identifier: Apache-2.0
#include "common.hpp"

namespace dynclique::detail {

namespace {

// NEWID/DELID announcements only; a node lists the triangles whose pairs it can vouch for.
class IdLister : public AutomatonBase<IdLister> {
  public:
    IdLister(NodeId self, std::shared_ptr<const Graph> initial, int birth, const NodeParams& p)
        : k_(self, p.n, std::move(initial), PairKnowledge::Validity::EitherEndpoint), id_bits_(id_bits(p.n)),
          birth_(birth) {}

    Mailbox send(int round, const NodeSet& prev, const NodeSet& now) override {
        k_.observe(round, prev, now);
        bool fresh = round == birth_;
        NodeId newid = fresh ? -1 : single(now - prev);
        NodeId delid = fresh ? -1 : single(prev - now);
        return broadcast(now, [&](NodeId) {
            BitWriter w;
            w.id_field(newid >= 0, newid, id_bits_).id_field(delid >= 0, delid, id_bits_);
            return w.finish();
        });
    }

    NodeOutput receive(int round, const Mailbox& inbox) override {
        for (const auto& [x, msg] : inbox) {
            BitReader rd(msg);
            NodeId newid = rd.id_field(id_bits_);
            NodeId delid = rd.id_field(id_bits_);
            rd.expect_end();
            if (newid >= 0) k_.learn(x, newid, true, round);
            if (delid >= 0) k_.learn(x, delid, false, round);
        }
        return make_output(Task::List, assemble_cliques(k_.self(), k_.neighbors(), 3,
                                                        [&](NodeId a, NodeId b) { return k_.certain(a, b); }));
    }

  private:
    PairKnowledge k_;
    int id_bits_;
    int birth_;
};

} // namespace

AutomatonFactory id_lister() {
    return [](NodeId self, std::shared_ptr<const Graph> initial, int birth, const NodeParams& p) {
        return std::make_unique<IdLister>(self, std::move(initial), birth, p);
    };
}

} // namespace dynclique::detail
