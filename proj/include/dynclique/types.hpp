// Copyright (c) dynclique contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dynclique {

using NodeId = int;

enum class Task { MemList, MemDetect, List, Detect };

enum class ChangeKind { NoOp, EdgeInsert, EdgeDelete, NodeInsert, NodeDelete };

using ChangeSet = std::set<ChangeKind>;

std::string to_string(Task t);
std::string to_string(ChangeKind k);
Task parse_task(std::string_view s);
ChangeKind parse_change_kind(std::string_view s);
std::string format_change_set(const ChangeSet& set);

// Smallest L with 2^L >= n, at least 1.
int id_bits(int n);
int ceil_sqrt(long long n);

struct PreconditionViolation : std::runtime_error {
    int event_index;
    PreconditionViolation(const std::string& what, int index = -1)
        : std::runtime_error(what), event_index(index) {}
};

struct AbsentNode : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_no, const std::string& reason)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + reason), line(line_no) {}
};

struct UnsupportedProblem : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnknownAlgorithm : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MalformedInbox : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidReduction : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BadParams : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace dynclique
