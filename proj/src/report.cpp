// Copyright (c) dynclique contributors.
// SPDX-License-Identifier: Apache-2.0
#include <sstream>

#include <json.hpp>

#include "dynclique/engine.hpp"

namespace dynclique {

namespace {

const char* kind_name(ViolationKind k) { return k == ViolationKind::OutputWrong ? "OutputWrong" : "BudgetExceeded"; }

std::string join_tags(const std::vector<std::string>& tags) {
    std::string out;
    for (const std::string& t : tags) out += (out.empty() ? "" : ",") + t;
    return out.empty() ? "none" : out;
}

} // namespace

std::string format_human(const SimulationReport& rep) {
    std::ostringstream out;
    out << "scenario " << rep.scenario << "\n"
        << "algorithm " << rep.algorithm << "\n"
        << "budget " << rep.budget << "\n"
        << "n " << rep.n << "\n"
        << "r " << rep.r << "\n"
        << "tags " << join_tags(rep.tags) << "\n";
    for (const RoundSummary& row : rep.rounds) {
        out << "round " << row.round << " change " << to_string(row.change) << " max_bits " << row.max_bits
            << " total_bits " << row.total_bits << " deadline " << (row.deadline ? "yes" : "no") << " verdict "
            << (row.ok ? "ok" : "fail") << "\n";
    }
    out << "max_bits " << rep.max_bits << "\n";
    out << "passed " << (rep.passed ? "true" : "false") << "\n";
    out << "violations " << rep.violations.size() << "\n";
    for (const Violation& v : rep.violations)
        out << "violation round " << v.round << " " << kind_name(v.kind) << " " << v.details << "\n";
    return out.str();
}

std::string format_machine(const SimulationReport& rep) {
    using nlohmann::ordered_json;
    std::ostringstream out;
    ordered_json header = {{"record", "header"}, {"scenario", rep.scenario}, {"algorithm", rep.algorithm},
                           {"budget", rep.budget}, {"n", rep.n},            {"r", rep.r},
                           {"tags", rep.tags}};
    out << header.dump() << "\n";
    for (const RoundSummary& row : rep.rounds) {
        ordered_json j = {{"record", "round"},          {"round", row.round},
                          {"change", to_string(row.change)}, {"max_bits", row.max_bits},
                          {"total_bits", row.total_bits}, {"deadline", row.deadline},
                          {"verdict", row.ok ? "ok" : "fail"}};
        out << j.dump() << "\n";
    }
    ordered_json viol = ordered_json::array();
    for (const Violation& v : rep.violations)
        viol.push_back({{"round", v.round}, {"kind", kind_name(v.kind)}, {"details", v.details}});
    ordered_json footer = {{"record", "footer"}, {"passed", rep.passed}, {"max_bits", rep.max_bits},
                           {"violations", viol}};
    out << footer.dump() << "\n";
    return out.str();
}

} // namespace dynclique
