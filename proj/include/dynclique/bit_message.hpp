// Copyright (c) dynclique contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dynclique/node_set.hpp"
#include "dynclique/types.hpp"

namespace dynclique {

class BitMessage {
  public:
    int length() const { return length_; }
    bool bit(int i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
    std::string to_string() const;
    bool operator==(const BitMessage& o) const = default;

  private:
    friend class BitWriter;
    int length_ = 0;
    std::vector<uint64_t> words_;
};

class BitWriter {
  public:
    BitWriter& flag(bool b);
    // Little-endian field of the given width.
    BitWriter& uint(uint64_t value, int width);
    BitWriter& id_field(bool present, NodeId id, int id_width);
    // Bits [offset, offset + width) of the set; missing IDs are zero.
    BitWriter& set_slice(const NodeSet& s, int offset, int width);
    BitMessage finish() { return std::move(msg_); }

  private:
    void push(bool b);
    BitMessage msg_;
};

class BitReader {
  public:
    explicit BitReader(const BitMessage& m) : m_(m) {}
    bool flag();
    uint64_t uint(int width);
    // Returns -1 when the presence flag is clear.
    NodeId id_field(int id_width);
    void set_slice(NodeSet& s, int offset, int width);
    int remaining() const { return m_.length() - pos_; }
    // Throws MalformedInbox if bits remain.
    void expect_end() const;

  private:
    void need(int width) const;
    const BitMessage& m_;
    int pos_ = 0;
};

} // namespace dynclique
