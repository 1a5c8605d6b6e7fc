// Copyright (c) dynclique contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "dynclique/algorithms.hpp"
#include "dynclique/lowerbounds.hpp"

namespace dynclique {

struct SuiteTarget {
    Algorithm alg;
    ProblemSpec problem;
    std::string label;
};

// Every catalog entry at the parameters it is exercised with.
std::vector<SuiteTarget> catalog_targets();
// Every reduced solver derived from the catalog targets.
std::vector<SuiteTarget> reduction_targets();

struct SuiteStats {
    long long scenarios = 0;
    long long rounds = 0;
    long long violations = 0;
    int max_bits = 0;
    int budget = 0;
    std::vector<std::string> samples; // first few violations
    bool passed() const { return violations == 0; }
    void merge(const SuiteStats& o);
};

// All variant sequences of length <= depth over allowed kinds and NoOp, from `graphs` random initial graphs.
SuiteStats exhaustive_suite(const SuiteTarget& target, int n, int depth, int graphs, uint64_t seed);
SuiteStats random_suite(const SuiteTarget& target, int n, int count, int events, uint64_t seed);
SuiteStats adversarial_suite(const SuiteTarget& target, AdversaryFamily family, int n, int t, int seeds,
                             uint64_t seed);

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    std::vector<std::string> details;
    double seconds = 0;
};

using Progress = std::function<void(const std::string&)>;

CriterionResult criterion_exhaustive(const Progress& progress);
CriterionResult criterion_random(const Progress& progress);
CriterionResult criterion_bandwidth(const Progress& progress);
CriterionResult criterion_adversarial(const Progress& progress);
CriterionResult criterion_lemma(const Progress& progress);
CriterionResult criterion_bounds(const Progress& progress);
CriterionResult criterion_reductions(const Progress& progress);
CriterionResult criterion_negative_control(const Progress& progress);

std::string format_criterion(const CriterionResult& r);

// Pass/fail matrix over the catalog: task rows, change-set columns.
struct MatrixRow {
    std::string entry;
    std::string task;
    std::string changes;
    int r = 1;
    int s = 3;
    int budget = 0;
    int max_bits = 0;
    bool passed = false;
};
std::vector<MatrixRow> suite_matrix(bool full, const Progress& progress);
std::string format_matrix(const std::vector<MatrixRow>& rows);

} // namespace dynclique
