// Copyright (c) dynclique contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "dynclique/bit_message.hpp"
#include "dynclique/graph.hpp"
#include "dynclique/oracle.hpp"

namespace dynclique {

// Sorted by peer ID.
using Mailbox = std::vector<std::pair<NodeId, BitMessage>>;

struct NodeParams {
    int n = 0;
    int r = 1;
    int s = 3;
    int delta = 1;
};

// One round is send() followed by receive(); together they form the node's step.
class NodeAutomaton {
  public:
    virtual ~NodeAutomaton() = default;
    virtual std::unique_ptr<NodeAutomaton> clone() const = 0;
    // One message per node of `now`, in increasing ID order.
    virtual Mailbox send(int round, const NodeSet& prev, const NodeSet& now) = 0;
    virtual NodeOutput receive(int round, const Mailbox& inbox) = 0;
};

} // namespace dynclique
