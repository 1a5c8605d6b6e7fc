// Copyright (c) dynclique contributors.
// SPDX-License-Identifier: Apache-2.0
#include <cstring>
#include <iostream>
#include <vector>

#include "dynclique/conformance.hpp"

using namespace dynclique;

int main(int argc, char** argv) {
    bool verbose = argc > 1 && std::strcmp(argv[1], "-v") == 0;
    Progress progress = [verbose](const std::string& line) {
        if (verbose) std::cerr << "  " << line << std::endl;
    };
    std::vector<CriterionResult (*)(const Progress&)> criteria = {
        criterion_exhaustive, criterion_random,      criterion_bandwidth,  criterion_adversarial,
        criterion_lemma,      criterion_bounds,      criterion_reductions, criterion_negative_control,
    };
    bool all = true;
    for (auto fn : criteria) {
        CriterionResult r = fn(progress);
        std::cout << format_criterion(r) << std::endl;
        if (!r.passed)
            for (const std::string& d : r.details) std::cout << "    " << d << "\n";
        all = all && r.passed;
    }
    std::cout << (all ? "all criteria passed" : "some criteria failed") << std::endl;
    return all ? 0 : 1;
}
