// Copyright (c) dynclique contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "dynclique/types.hpp"

namespace dynclique {

// Fixed-universe bitset over [0, n).
class NodeSet {
  public:
    NodeSet() = default;
    explicit NodeSet(int n) : n_(n), words_((n + 63) / 64, 0) {}
    NodeSet(int n, std::initializer_list<NodeId> ids) : NodeSet(n) {
        for (NodeId v : ids) insert(v);
    }

    int universe() const { return n_; }

    bool contains(NodeId v) const { return (words_[v >> 6] >> (v & 63)) & 1U; }
    void insert(NodeId v) { words_[v >> 6] |= uint64_t{1} << (v & 63); }
    void erase(NodeId v) { words_[v >> 6] &= ~(uint64_t{1} << (v & 63)); }
    void set(NodeId v, bool on) { on ? insert(v) : erase(v); }
    void clear() { std::fill(words_.begin(), words_.end(), 0); }

    int size() const {
        int c = 0;
        for (uint64_t w : words_) c += std::popcount(w);
        return c;
    }
    bool empty() const {
        for (uint64_t w : words_)
            if (w) return false;
        return true;
    }

    NodeSet& operator&=(const NodeSet& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    NodeSet& operator|=(const NodeSet& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    // Set difference.
    NodeSet& operator-=(const NodeSet& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }
    friend NodeSet operator&(NodeSet a, const NodeSet& b) { return a &= b; }
    friend NodeSet operator|(NodeSet a, const NodeSet& b) { return a |= b; }
    friend NodeSet operator-(NodeSet a, const NodeSet& b) { return a -= b; }
    bool operator==(const NodeSet& o) const = default;

    // Smallest element > v, or -1.
    NodeId next(NodeId v) const {
        ++v;
        if (v >= n_) return -1;
        size_t wi = v >> 6;
        uint64_t w = words_[wi] & (~uint64_t{0} << (v & 63));
        while (true) {
            if (w) return static_cast<NodeId>(wi * 64 + std::countr_zero(w));
            if (++wi >= words_.size()) return -1;
            w = words_[wi];
        }
    }
    NodeId first() const { return next(-1); }

    std::vector<NodeId> to_vector() const {
        std::vector<NodeId> out;
        for (NodeId v = first(); v >= 0; v = next(v)) out.push_back(v);
        return out;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (NodeId v = first(); v >= 0; v = next(v)) f(v);
    }

  private:
    int n_ = 0;
    std::vector<uint64_t> words_;
};

} // namespace dynclique
