// Copyright (c) dynclique contributors.
// SPDX-License-Identifier: Apache-2.0
#include "dynclique/bit_message.hpp"

namespace dynclique {

std::string BitMessage::to_string() const {
    std::string out;
    out.reserve(length_);
    for (int i = 0; i < length_; ++i) out += bit(i) ? '1' : '0';
    return out;
}

void BitWriter::push(bool b) {
    int i = msg_.length_++;
    if ((i >> 6) >= static_cast<int>(msg_.words_.size())) msg_.words_.push_back(0);
    if (b) msg_.words_[i >> 6] |= uint64_t{1} << (i & 63);
}

BitWriter& BitWriter::flag(bool b) {
    push(b);
    return *this;
}

BitWriter& BitWriter::uint(uint64_t value, int width) {
    for (int i = 0; i < width; ++i) push((value >> i) & 1U);
    return *this;
}

BitWriter& BitWriter::id_field(bool present, NodeId id, int id_width) {
    push(present);
    return uint(present ? static_cast<uint64_t>(id) : 0, id_width);
}

BitWriter& BitWriter::set_slice(const NodeSet& s, int offset, int width) {
    for (int i = 0; i < width; ++i) {
        int v = offset + i;
        push(v < s.universe() && s.contains(v));
    }
    return *this;
}

void BitReader::need(int width) const {
    if (pos_ + width > m_.length())
        throw MalformedInbox("message of " + std::to_string(m_.length()) + " bits is too short");
}

bool BitReader::flag() {
    need(1);
    return m_.bit(pos_++);
}

uint64_t BitReader::uint(int width) {
    need(width);
    uint64_t v = 0;
    for (int i = 0; i < width; ++i)
        if (m_.bit(pos_++)) v |= uint64_t{1} << i;
    return v;
}

NodeId BitReader::id_field(int id_width) {
    bool present = flag();
    auto id = static_cast<NodeId>(uint(id_width));
    return present ? id : -1;
}

void BitReader::set_slice(NodeSet& s, int offset, int width) {
    need(width);
    for (int i = 0; i < width; ++i) {
        bool b = m_.bit(pos_++);
        int v = offset + i;
        if (v < s.universe()) s.set(v, b);
    }
}

void BitReader::expect_end() const {
    if (pos_ != m_.length())
        throw MalformedInbox("message of " + std::to_string(m_.length()) + " bits, layout consumed " +
                             std::to_string(pos_));
}

} // namespace dynclique
