// Copyright (c) dynclique contributors.
// SPDX-License-Identifier: Apache-2.0
#include "dynclique/types.hpp"

#include <cmath>

namespace dynclique {

std::string to_string(Task t) {
    switch (t) {
    case Task::MemList: return "memlist";
    case Task::MemDetect: return "memdetect";
    case Task::List: return "list";
    case Task::Detect: return "detect";
    }
    return "?";
}

std::string to_string(ChangeKind k) {
    switch (k) {
    case ChangeKind::NoOp: return "noop";
    case ChangeKind::EdgeInsert: return "edge-insert";
    case ChangeKind::EdgeDelete: return "edge-delete";
    case ChangeKind::NodeInsert: return "node-insert";
    case ChangeKind::NodeDelete: return "node-delete";
    }
    return "?";
}

Task parse_task(std::string_view s) {
    if (s == "memlist") return Task::MemList;
    if (s == "memdetect") return Task::MemDetect;
    if (s == "list") return Task::List;
    if (s == "detect") return Task::Detect;
    throw BadParams("unknown task '" + std::string(s) + "'");
}

ChangeKind parse_change_kind(std::string_view s) {
    if (s == "noop") return ChangeKind::NoOp;
    if (s == "edge-insert") return ChangeKind::EdgeInsert;
    if (s == "edge-delete") return ChangeKind::EdgeDelete;
    if (s == "node-insert") return ChangeKind::NodeInsert;
    if (s == "node-delete") return ChangeKind::NodeDelete;
    throw BadParams("unknown change kind '" + std::string(s) + "'");
}

std::string format_change_set(const ChangeSet& set) {
    std::string out;
    for (ChangeKind k : set) {
        if (!out.empty()) out += ',';
        out += to_string(k);
    }
    return out.empty() ? "none" : out;
}

int id_bits(int n) {
    int l = 0;
    while ((1LL << l) < n) ++l;
    return l < 1 ? 1 : l;
}

int ceil_sqrt(long long n) {
    long long r = static_cast<long long>(std::sqrt(static_cast<double>(n)));
    while (r * r < n) ++r;
    while (r > 0 && (r - 1) * (r - 1) >= n) --r;
    return static_cast<int>(r);
}

} // namespace dynclique
