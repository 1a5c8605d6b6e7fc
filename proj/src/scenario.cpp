// Copyright (c) dynclique contributors.
// SPDX-License-Identifier: Apache-2.0
#include "dynclique/scenario.hpp"

#include <fstream>
#include <sstream>

namespace dynclique {

void validate(const DynamicScenario& sc) {
    const ProblemSpec& p = sc.problem;
    if (p.s < 3) throw BadParams("clique size must be at least 3");
    if (p.r < 1) throw BadParams("round count must be at least 1");
    if (sc.initial.n() != sc.n) throw BadParams("initial graph universe differs from n");
    Graph g = sc.initial;
    for (size_t i = 0; i < sc.events.size(); ++i) {
        const TopologyChange& c = sc.events[i];
        if (!p.allows(c.kind))
            throw PreconditionViolation("event " + std::to_string(i) + " (" + to_string(c) +
                                            "): change kind not allowed by the problem",
                                        static_cast<int>(i));
        std::string why = check_change(g, c);
        if (!why.empty())
            throw PreconditionViolation("event " + std::to_string(i) + " (" + to_string(c) + "): " + why,
                                        static_cast<int>(i));
        apply_change_in_place(g, c);
    }
}

std::vector<Graph> replay(const DynamicScenario& sc) {
    std::vector<Graph> out;
    out.reserve(sc.events.size());
    Graph g = sc.initial;
    for (const TopologyChange& c : sc.events) {
        apply_change_in_place(g, c);
        out.push_back(g);
    }
    return out;
}

bool uses_reinsertion(const DynamicScenario& sc) {
    NodeSet seen = sc.initial.present();
    for (const TopologyChange& c : sc.events) {
        if (c.kind != ChangeKind::NodeInsert) continue;
        if (seen.contains(c.u)) return true;
        seen.insert(c.u);
    }
    return false;
}

namespace {

std::vector<std::string> split_words(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string w;
    while (in >> w) out.push_back(w);
    return out;
}

int to_int(const std::string& s, int line) {
    try {
        size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ParseError(line, "expected an integer, got '" + s + "'");
    }
}

NodeId to_node(const std::string& s, int n, int line) {
    int v = to_int(s, line);
    if (v < 0 || v >= n) throw ParseError(line, "node " + s + " outside [0, n)");
    return v;
}

} // namespace

DynamicScenario load_scenario(const std::string& text) {
    DynamicScenario sc;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    bool have_n = false, have_problem = false, have_nodes = false;
    std::vector<std::pair<std::pair<NodeId, NodeId>, int>> edges;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        auto words = split_words(line);
        if (words.empty()) continue;
        const std::string& key = words[0];
        if (key == "name") {
            if (words.size() != 2) throw ParseError(line_no, "name takes one word");
            sc.name = words[1];
        } else if (key == "n") {
            if (words.size() != 2 || have_n) throw ParseError(line_no, "n must appear once with one value");
            sc.n = to_int(words[1], line_no);
            if (sc.n < 1) throw ParseError(line_no, "n must be positive");
            sc.initial = Graph::complete_universe(sc.n);
            have_n = true;
        } else if (key == "problem") {
            if (words.size() < 2) throw ParseError(line_no, "problem needs a task");
            try {
                sc.problem.task = parse_task(words[1]);
                for (size_t i = 2; i < words.size(); ++i) {
                    auto eq = words[i].find('=');
                    if (eq == std::string::npos) throw ParseError(line_no, "expected key=value");
                    std::string k = words[i].substr(0, eq), v = words[i].substr(eq + 1);
                    if (k == "s") {
                        sc.problem.s = to_int(v, line_no);
                    } else if (k == "r") {
                        sc.problem.r = to_int(v, line_no);
                    } else if (k == "changes") {
                        std::istringstream parts(v);
                        std::string part;
                        while (std::getline(parts, part, ','))
                            if (!part.empty() && part != "none") sc.problem.allowed.insert(parse_change_kind(part));
                    } else {
                        throw ParseError(line_no, "unknown problem field '" + k + "'");
                    }
                }
            } catch (const BadParams& e) {
                throw ParseError(line_no, e.what());
            }
            if (sc.problem.s < 3) throw ParseError(line_no, "s must be at least 3");
            if (sc.problem.r < 1) throw ParseError(line_no, "r must be at least 1");
            have_problem = true;
        } else if (key == "nodes") {
            if (!have_n) throw ParseError(line_no, "n must precede nodes");
            if (have_nodes) throw ParseError(line_no, "nodes given twice");
            have_nodes = true;
            if (words.size() == 2 && words[1] == "all") continue;
            sc.initial = Graph(sc.n);
            for (size_t i = 1; i < words.size(); ++i) sc.initial.add_node(to_node(words[i], sc.n, line_no));
        } else if (key == "edge") {
            if (!have_n) throw ParseError(line_no, "n must precede edges");
            if (words.size() != 3) throw ParseError(line_no, "edge takes two nodes");
            NodeId a = to_node(words[1], sc.n, line_no), b = to_node(words[2], sc.n, line_no);
            if (a == b) throw ParseError(line_no, "self-loop");
            edges.push_back({{a, b}, line_no});
        } else if (key == "event") {
            if (!have_n) throw ParseError(line_no, "n must precede events");
            if (words.size() < 2) throw ParseError(line_no, "event needs a kind");
            ChangeKind kind;
            try {
                kind = parse_change_kind(words[1]);
            } catch (const BadParams& e) {
                throw ParseError(line_no, e.what());
            }
            auto arg = [&](size_t i) { return to_node(words[i], sc.n, line_no); };
            switch (kind) {
            case ChangeKind::NoOp:
                if (words.size() != 2) throw ParseError(line_no, "noop takes no arguments");
                sc.events.push_back(TopologyChange::noop());
                break;
            case ChangeKind::EdgeInsert:
            case ChangeKind::EdgeDelete:
                if (words.size() != 4) throw ParseError(line_no, "edge event takes two nodes");
                sc.events.push_back(kind == ChangeKind::EdgeInsert ? TopologyChange::edge_insert(arg(2), arg(3))
                                                                   : TopologyChange::edge_delete(arg(2), arg(3)));
                break;
            case ChangeKind::NodeInsert: {
                if (words.size() < 3) throw ParseError(line_no, "node-insert takes a node and attachments");
                std::vector<NodeId> attach;
                for (size_t i = 3; i < words.size(); ++i) attach.push_back(arg(i));
                sc.events.push_back(TopologyChange::node_insert(arg(2), attach));
                break;
            }
            case ChangeKind::NodeDelete:
                if (words.size() != 3) throw ParseError(line_no, "node-delete takes one node");
                sc.events.push_back(TopologyChange::node_delete(arg(2)));
                break;
            }
        } else {
            throw ParseError(line_no, "unknown field '" + key + "'");
        }
    }
    if (!have_n) throw ParseError(line_no, "missing n");
    if (!have_problem) throw ParseError(line_no, "missing problem");
    for (auto& [e, ln] : edges) {
        if (!sc.initial.is_present(e.first) || !sc.initial.is_present(e.second))
            throw ParseError(ln, "edge endpoint not present");
        if (sc.initial.has_edge(e.first, e.second)) throw ParseError(ln, "duplicate edge");
        sc.initial.add_edge(e.first, e.second);
    }
    validate(sc);
    return sc;
}

DynamicScenario load_scenario_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError(0, "cannot open '" + path + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    DynamicScenario sc = load_scenario(ss.str());
    if (sc.name == "anonymous") {
        auto slash = path.find_last_of('/');
        std::string stem = slash == std::string::npos ? path : path.substr(slash + 1);
        if (auto dot = stem.rfind('.'); dot != std::string::npos && dot > 0) stem.erase(dot);
        sc.name = stem;
    }
    return sc;
}

std::string save_scenario(const DynamicScenario& sc) {
    std::ostringstream out;
    out << "name " << sc.name << "\n";
    out << "n " << sc.n << "\n";
    out << "problem " << to_string(sc.problem.task) << " s=" << sc.problem.s << " r=" << sc.problem.r
        << " changes=" << format_change_set(sc.problem.allowed) << "\n";
    if (sc.initial.present().size() == sc.n) {
        out << "nodes all\n";
    } else {
        out << "nodes";
        sc.initial.present().for_each([&](NodeId v) { out << " " << v; });
        out << "\n";
    }
    for (auto [a, b] : sc.initial.edges()) out << "edge " << a << " " << b << "\n";
    for (const TopologyChange& c : sc.events) out << "event " << to_string(c) << "\n";
    return out.str();
}

} // namespace dynclique
