// Copyright (c) dynclique contributors.
// SPDX-License-Identifier: Apache-2.0
#include "dynclique/conformance.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <random>
#include <sstream>

#include "dynclique/engine.hpp"
#include "dynclique/generate.hpp"
#include "dynclique/reduction.hpp"

namespace dynclique {

namespace {

uint64_t mix(uint64_t a, uint64_t b) {
    uint64_t z = a * 0x9E3779B97F4A7C15ULL + b + 0x632BE59BD9B4E019ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

constexpr size_t kSamples = 5;

std::string label_of(const Algorithm& alg, const ProblemSpec& p) {
    std::string l = alg.name + " s=" + std::to_string(p.s) + " r=" + std::to_string(p.r);
    return l;
}

SuiteTarget make_target(const Algorithm& alg, int s, int r) {
    ProblemSpec p;
    p.task = alg.task;
    p.s = s;
    p.r = r;
    p.allowed = alg.allowed;
    return SuiteTarget{alg, p, label_of(alg, p)};
}

double presence_for(const ProblemSpec& p) { return p.allowed.count(ChangeKind::NodeInsert) ? 0.6 : 1.0; }

double density_for(int n) { return n <= 16 ? 0.3 : 8.0 / n; }

void absorb(SuiteStats& st, const std::vector<Violation>& vs, const std::string& where) {
    for (const Violation& v : vs) {
        ++st.violations;
        if (st.samples.size() < kSamples)
            st.samples.push_back(where + " round " + std::to_string(v.round) + " " +
                                 (v.kind == ViolationKind::OutputWrong ? "OutputWrong " : "BudgetExceeded ") +
                                 v.details);
    }
}

class Timer {
  public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

  private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string stats_line(const std::string& label, const SuiteStats& st) {
    std::ostringstream out;
    out << label << ": " << st.scenarios << " scenarios, " << st.rounds << " rounds, " << st.violations
        << " violations, max bits " << st.max_bits << " (budget " << st.budget << ")";
    for (const std::string& s : st.samples) out << "\n      " << s;
    return out.str();
}

} // namespace

void SuiteStats::merge(const SuiteStats& o) {
    scenarios += o.scenarios;
    rounds += o.rounds;
    violations += o.violations;
    max_bits = std::max(max_bits, o.max_bits);
    budget = std::max(budget, o.budget);
    for (const std::string& s : o.samples)
        if (samples.size() < kSamples) samples.push_back(s);
}

std::vector<SuiteTarget> catalog_targets() {
    std::vector<SuiteTarget> out;
    for (const Algorithm& alg : catalog()) {
        if (alg.r == 0) {
            for (auto [s, r] : {std::pair{3, 1}, {3, 2}, {3, 3}, {4, 2}}) out.push_back(make_target(alg, s, r));
        } else {
            out.push_back(make_target(alg, alg.s == 0 ? 4 : alg.s, alg.r));
        }
    }
    return out;
}

std::vector<SuiteTarget> reduction_targets() {
    std::vector<SuiteTarget> out;
    for (const SuiteTarget& t : catalog_targets())
        for (Task to : {Task::MemDetect, Task::List, Task::Detect}) {
            if (!is_reduction(t.problem.task, to)) continue;
            Algorithm red = reduce_solver(t.problem.task, to, t.alg);
            ProblemSpec p = t.problem;
            p.task = to;
            out.push_back(SuiteTarget{red, p, label_of(red, p)});
        }
    return out;
}

SuiteStats exhaustive_suite(const SuiteTarget& target, int n, int depth, int graphs, uint64_t seed) {
    SuiteStats st;
    const int delta = n - 1;
    st.budget = target.alg.budget(n, target.problem.r, delta);
    std::vector<ChangeKind> kinds{ChangeKind::NoOp};
    for (ChangeKind k : target.problem.allowed)
        if (k != ChangeKind::NoOp) kinds.push_back(k);
    std::vector<TopologyChange> path;

    for (int gi = 0; gi < graphs; ++gi) {
        uint64_t root_key = mix(seed, static_cast<uint64_t>(gi));
        std::mt19937_64 rng(root_key);
        Graph init = random_graph(n, presence_for(target.problem), 0.5, rng);
        Simulation root(init, target.problem, target.alg, st.budget, delta);
        auto dfs = [&](auto&& self, const Simulation& sim, int level, uint64_t key) -> void {
            for (ChangeKind k : kinds) {
                if (!change_applicable(sim.graph(), k)) continue;
                uint64_t child_key = mix(key, static_cast<uint64_t>(k) + 1);
                std::mt19937_64 pick(child_key);
                TopologyChange c = random_instance(sim.graph(), k, pick);
                Simulation child(sim);
                StepResult res = child.step(c);
                ++st.rounds;
                st.max_bits = std::max(st.max_bits, res.max_bits);
                path.push_back(c);
                if (!res.violations.empty()) {
                    std::string where = target.label + " graph " + std::to_string(gi) + " path [";
                    for (size_t i = 0; i < path.size(); ++i) where += (i ? "; " : "") + to_string(path[i]);
                    absorb(st, res.violations, where + "]");
                }
                if (level + 1 < depth)
                    self(self, child, level + 1, child_key);
                else
                    ++st.scenarios;
                path.pop_back();
            }
        };
        dfs(dfs, root, 0, root_key);
    }
    return st;
}

SuiteStats random_suite(const SuiteTarget& target, int n, int count, int events, uint64_t seed) {
    SuiteStats st;
    const double quiet = target.problem.r >= 2 ? 0.4 : 0.15;
    for (int i = 0; i < count; ++i) {
        std::mt19937_64 rng(mix(seed, static_cast<uint64_t>(i)));
        DynamicScenario sc;
        sc.n = n;
        sc.name = "random-" + std::to_string(i);
        sc.problem = target.problem;
        sc.initial = random_graph(n, presence_for(target.problem), density_for(n), rng);
        Graph g = sc.initial;
        std::bernoulli_distribution quiet_round(quiet);
        for (int e = 0; e < events; ++e) {
            TopologyChange c;
            if (!quiet_round(rng)) {
                try {
                    c = random_change(g, target.problem.allowed, rng);
                } catch (const BadParams&) {
                    c = TopologyChange::noop();
                }
            }
            apply_change_in_place(g, c);
            sc.events.push_back(std::move(c));
        }
        SimulationReport rep = run(sc, target.alg);
        ++st.scenarios;
        st.rounds += static_cast<long long>(rep.rounds.size());
        st.max_bits = std::max(st.max_bits, rep.max_bits);
        st.budget = std::max(st.budget, rep.budget);
        absorb(st, rep.violations, target.label + " n=" + std::to_string(n) + " scenario " + std::to_string(i));
    }
    return st;
}

SuiteStats adversarial_suite(const SuiteTarget& target, AdversaryFamily family, int n, int t, int seeds,
                             uint64_t seed) {
    SuiteStats st;
    auto one = [&](AdversarySpec spec, const std::string& where) {
        DynamicScenario sc = gen_adversary(spec);
        sc.problem.task = target.problem.task;
        SimulationReport rep = run(sc, target.alg);
        ++st.scenarios;
        st.rounds += static_cast<long long>(rep.rounds.size());
        st.max_bits = std::max(st.max_bits, rep.max_bits);
        st.budget = std::max(st.budget, rep.budget);
        absorb(st, rep.violations, where);
    };
    for (int i = 0; i < seeds; ++i) {
        AdversarySpec spec;
        spec.family = family;
        spec.n = n;
        spec.t = t;
        spec.s = target.problem.s;
        spec.seed = mix(seed, static_cast<uint64_t>(i));
        spec.r = target.problem.r;
        std::string where = target.label + " " + to_string(family) + " seed " + std::to_string(spec.seed);
        if (family == AdversaryFamily::TriEdgeIns || family == AdversaryFamily::KsEdgeIns) {
            AdversaryLayout lay;
            gen_adversary(spec, &lay);
            for (size_t w = 0; w < lay.w_side.size(); ++w) {
                spec.w = static_cast<int>(w);
                one(spec, where + " w " + std::to_string(w));
            }
        } else if (family == AdversaryFamily::TriMdtctNodeIns || family == AdversaryFamily::KsMdtctNodeIns) {
            AdversaryLayout lay;
            gen_adversary(spec, &lay);
            for (size_t u = 0; u < lay.w_side.size(); ++u)
                for (size_t v = 0; v < lay.u_side.size(); ++v) {
                    spec.u = static_cast<int>(u);
                    spec.v = static_cast<int>(v);
                    one(spec, where + " u " + std::to_string(u) + " v " + std::to_string(v));
                }
        } else {
            one(spec, where);
        }
    }
    return st;
}

CriterionResult criterion_exhaustive(const Progress& progress) {
    Timer timer;
    CriterionResult res{1, "oracle equivalence, exhaustive variant sequences at n=5 (depth 6, 50 initial graphs)", false, {}, 0};
    res.passed = true;
    for (const SuiteTarget& t : catalog_targets()) {
        SuiteStats st = exhaustive_suite(t, 5, 6, 50, 20261016);
        res.passed = res.passed && st.passed();
        res.details.push_back(stats_line(t.label, st));
        if (progress) progress(res.details.back());
    }
    res.seconds = timer.seconds();
    return res;
}

CriterionResult criterion_random(const Progress& progress) {
    Timer timer;
    CriterionResult res{2, "oracle equivalence, 200 random scenarios of 40 events at n=12", false, {}, 0};
    res.passed = true;
    for (const SuiteTarget& t : catalog_targets()) {
        SuiteStats st = random_suite(t, 12, 200, 40, 7);
        res.passed = res.passed && st.passed();
        res.details.push_back(stats_line(t.label, st));
        if (progress) progress(res.details.back());
    }
    res.seconds = timer.seconds();
    return res;
}

CriterionResult criterion_bandwidth(const Progress& progress) {
    Timer timer;
    CriterionResult res{3, "bandwidth within the closed-form budgets", false, {}, 0};
    res.passed = true;
    struct Check {
        std::string name;
        int n, r;
        int bound;
        std::string formula;
    };
    auto lg = [](int n) { return id_bits(n); };
    std::vector<Check> checks = {
        {"tri-mlist-edgedel-1bit", 12, 1, 1, "1"},
        {"tri-mlist-2round-const", 12, 2, 2, "2"},
        {"tri-mdtct-edgeins-log", 12, 1, lg(12) + 2, "ceil(log2 n) + 2"},
        {"tri-list-nodeins-1bit", 12, 1, 1, "1"},
        {"mlist-rround-blocks", 12, 2, 12 / 2 + 1, "ceil(n/r) + 1"},
        {"mlist-rround-blocks", 12, 3, 12 / 3 + 1, "ceil(n/r) + 1"},
        {"mlist-rround-blocks", 64, 8, 64 / 8 + 1, "ceil(n/r) + 1"},
    };
    for (int n : {16, 64, 256})
        checks.push_back({"tri-mlist-edgeins-sqrt", n, 1, ceil_sqrt(n) + lg(n) + 3, "ceil(sqrt n) + ceil(log2 n) + 3"});
    for (const Check& c : checks) {
        const Algorithm& alg = find_algorithm(c.name);
        SuiteTarget t = make_target(alg, alg.s == 0 ? 3 : alg.s, c.r);
        int count = c.n <= 16 ? 200 : c.n <= 64 ? 50 : 10;
        SuiteStats st = random_suite(t, c.n, count, 40, 7);
        bool ok = st.passed() && st.max_bits <= c.bound;
        res.passed = res.passed && ok;
        std::ostringstream line;
        line << (ok ? "ok   " : "FAIL ") << c.name << " n=" << c.n << " r=" << c.r << ": max " << st.max_bits
             << " bits <= " << c.bound << " [" << c.formula << "] over " << st.scenarios << " scenarios, "
             << st.violations << " violations";
        for (const std::string& s : st.samples) line << "\n      " << s;
        res.details.push_back(line.str());
        if (progress) progress(res.details.back());
    }
    res.seconds = timer.seconds();
    return res;
}

CriterionResult criterion_adversarial(const Progress& progress) {
    Timer timer;
    CriterionResult res{4, "adversarial lower-bound sequences", false, {}, 0};
    res.passed = true;
    auto record = [&](const std::string& label, const SuiteStats& st) {
        res.passed = res.passed && st.passed();
        res.details.push_back(stats_line(label, st));
        if (progress) progress(res.details.back());
    };
    {
        const Algorithm& alg = find_algorithm("tri-mlist-edgeins-sqrt");
        SuiteTarget t = make_target(alg, 3, 1);
        record(t.label + " TriEdgeIns n=16 t=4 x100 seeds, every w",
               adversarial_suite(t, AdversaryFamily::TriEdgeIns, 16, 4, 100, 1));
    }
    for (const SuiteTarget& t : catalog_targets()) {
        bool ks = t.alg.name.rfind("ks-", 0) == 0 || (t.alg.name == "mlist-rround-blocks" && t.problem.s == 4);
        bool ei = t.problem.allowed.count(ChangeKind::EdgeInsert) > 0;
        bool ni = t.problem.allowed.count(ChangeKind::NodeInsert) > 0;
        if (ks) {
            if (ei) record(t.label + " KsEdgeIns n=12", adversarial_suite(t, AdversaryFamily::KsEdgeIns, 12, 4, 20, 2));
            if (ni) record(t.label + " KsNodeIns n=12", adversarial_suite(t, AdversaryFamily::KsNodeIns, 12, 0, 20, 3));
            if (!ei && !ni) res.details.push_back(t.label + ": deletion-only change set, no insertion generator applies");
        } else if (t.problem.s == 3) {
            if (ei && t.alg.name != "tri-mlist-edgeins-sqrt")
                record(t.label + " TriEdgeIns n=12", adversarial_suite(t, AdversaryFamily::TriEdgeIns, 12, 4, 20, 4));
            if (ni && t.problem.task != Task::MemDetect)
                record(t.label + " TriNodeIns n=12", adversarial_suite(t, AdversaryFamily::TriNodeIns, 12, 0, 20, 5));
            if (ni)
                record(t.label + " TriMdtctNodeIns n=10",
                       adversarial_suite(t, AdversaryFamily::TriMdtctNodeIns, 10, 0, 5, 6));
        }
    }
    res.seconds = timer.seconds();
    return res;
}

CriterionResult criterion_lemma(const Progress& progress) {
    Timer timer;
    CriterionResult res{5, "dense bipartite witness on every graph with |L| <= 4, |R| <= 5", false, {}, 0};
    res.passed = true;
    for (double eps : {0.25, 0.5}) {
        long long checked = 0, failed = 0;
        std::string first_failure;
        LemmaConstants k = lemma_constants(eps);
        for (int left = 1; left <= 4; ++left)
            for (int right = 1; right <= 5; ++right) {
                const int cells = left * right;
                for (uint32_t mask = 0; mask < (1U << cells); ++mask) {
                    if (std::popcount(mask) < (1 - eps) * cells - 1e-9) continue;
                    BipartiteGraph g{left, right, {}};
                    for (int i = 0; i < cells; ++i)
                        if ((mask >> i) & 1U) g.edges.emplace_back(i / right, i % right);
                    ++checked;
                    auto w = densebip_witness(g, eps);
                    bool ok = w.has_value();
                    if (ok) {
                        ok = w->a.size() >= k.alpha * left - 1e-9 &&
                             w->b.size() >= k.beta * std::pow(k.gamma, left) * right - 1e-9;
                        for (int a : w->a)
                            for (int b : w->b) ok = ok && ((mask >> (a * right + b)) & 1U);
                    }
                    if (!ok) {
                        ++failed;
                        if (first_failure.empty())
                            first_failure = " first failure L=" + std::to_string(left) + " R=" +
                                            std::to_string(right) + " mask=" + std::to_string(mask);
                    }
                }
            }
        res.passed = res.passed && failed == 0;
        std::ostringstream line;
        line << "eps=" << eps << ": " << checked << " dense graphs, " << failed << " without a valid witness"
             << first_failure;
        res.details.push_back(line.str());
        if (progress) progress(line.str());
    }
    res.seconds = timer.seconds();
    return res;
}

CriterionResult criterion_bounds(const Progress& progress) {
    Timer timer;
    CriterionResult res{6, "lower-bound evaluators", false, {}, 0};
    res.passed = true;
    auto check = [&](bool ok, const std::string& line) {
        res.passed = res.passed && ok;
        res.details.push_back(std::string(ok ? "ok   " : "FAIL ") + line);
        if (progress) progress(res.details.back());
    };
    double mdtct = eval_bound(BoundProblem::MDTCT, ChangeKind::NodeInsert, 100, 0.0);
    check(mdtct == 49.0, "MDTCT node-insert n=100 eps=0: " + std::to_string(mdtct) + " == 49");
    for (int r : {1, 2, 4})
        for (int n : {50, 100, 200, 400}) {
            double v = eval_bound(BoundProblem::MLIST, ChangeKind::NodeInsert, n, 1.0 / 3, r) * r;
            double ratio = v / (n / 2.0);
            std::ostringstream line;
            line << "MLIST node-insert n=" << n << " r=" << r << ": B*r = " << v << ", ratio to n/2 " << ratio;
            check(std::abs(ratio - 1) <= 0.05, line.str());
        }
    double lo = 1e300, hi = 0;
    std::ostringstream line;
    line << "MLIST edge-insert eps=1/3, B/sqrt(n):";
    for (int n : {1000, 10000, 100000}) {
        double v = eval_bound(BoundProblem::MLIST, ChangeKind::EdgeInsert, n, 1.0 / 3) / std::sqrt(n);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
        line << " n=" << n << " " << v;
    }
    line << " (spread " << hi / lo << " <= 2)";
    check(lo > 0 && hi / lo <= 2, line.str());
    res.seconds = timer.seconds();
    return res;
}

CriterionResult criterion_reductions(const Progress& progress) {
    Timer timer;
    CriterionResult res{7, "reduced solvers pass the exhaustive and random suites with unchanged bandwidth", false, {}, 0};
    res.passed = true;
    std::vector<SuiteTarget> bases = catalog_targets();
    for (const SuiteTarget& base : bases) {
        std::vector<Task> arrows;
        for (Task to : {Task::MemDetect, Task::List, Task::Detect})
            if (is_reduction(base.problem.task, to)) arrows.push_back(to);
        if (arrows.empty()) continue;
        SuiteStats base_ex = exhaustive_suite(base, 5, 6, 50, 20261016);
        SuiteStats base_rnd = random_suite(base, 12, 200, 40, 7);
        for (Task to : arrows) {
            Algorithm red = reduce_solver(base.problem.task, to, base.alg);
            ProblemSpec p = base.problem;
            p.task = to;
            SuiteTarget t{red, p, label_of(red, p)};
            SuiteStats ex = exhaustive_suite(t, 5, 6, 50, 20261016);
            SuiteStats rnd = random_suite(t, 12, 200, 40, 7);
            bool same_bits = ex.max_bits == base_ex.max_bits && rnd.max_bits == base_rnd.max_bits;
            bool ok = ex.passed() && rnd.passed() && same_bits;
            res.passed = res.passed && ok;
            std::ostringstream line;
            line << (ok ? "ok   " : "FAIL ") << t.label << ": exhaustive " << ex.violations << " violations, random "
                 << rnd.violations << " violations, max bits " << ex.max_bits << "/" << rnd.max_bits << " (base "
                 << base_ex.max_bits << "/" << base_rnd.max_bits << ")";
            for (const std::string& s : ex.samples) line << "\n      " << s;
            for (const std::string& s : rnd.samples) line << "\n      " << s;
            res.details.push_back(line.str());
            if (progress) progress(res.details.back());
        }
    }
    res.seconds = timer.seconds();
    return res;
}

CriterionResult criterion_negative_control(const Progress& progress) {
    Timer timer;
    CriterionResult res{8, "checker rejects the square-root lister with a one-round activity window", false, {}, 0};
    Algorithm crippled = digest_memlist_with_window(1);
    SuiteTarget t = make_target(crippled, 3, 1);
    SuiteStats st = adversarial_suite(t, AdversaryFamily::TriEdgeIns, 16, 4, 100, 1);
    long long failing = st.violations;
    res.passed = failing > 0;
    res.details.push_back(stats_line(t.label + " TriEdgeIns n=16 t=4", st));
    if (progress) progress(res.details.back());
    res.seconds = timer.seconds();
    return res;
}

std::string format_criterion(const CriterionResult& r) {
    std::ostringstream out;
    out << "criterion " << r.id << " " << (r.passed ? "PASS" : "FAIL") << ": " << r.title << " (" << std::fixed
        << std::setprecision(1) << r.seconds << "s)";
    return out.str();
}

std::vector<MatrixRow> suite_matrix(bool full, const Progress& progress) {
    std::vector<MatrixRow> rows;
    for (const SuiteTarget& t : catalog_targets()) {
        SuiteStats st = random_suite(t, 12, full ? 200 : 30, full ? 40 : 30, 7);
        if (full) st.merge(exhaustive_suite(t, 5, 6, 50, 20261016));
        MatrixRow row{t.alg.name, to_string(t.problem.task), format_change_set(t.problem.allowed), t.problem.r,
                      t.problem.s, t.alg.budget(12, t.problem.r, 11), st.max_bits, st.passed()};
        rows.push_back(row);
        if (progress) progress(stats_line(t.label, st));
    }
    if (full) {
        for (auto [name, n, r] : {std::tuple{"tri-mlist-edgeins-sqrt", 64, 1}, {"tri-mlist-edgeins-sqrt", 256, 1},
                                  {"mlist-rround-blocks", 64, 8}}) {
            const Algorithm& alg = find_algorithm(name);
            SuiteTarget t = make_target(alg, 3, r);
            SuiteStats st = random_suite(t, n, n <= 64 ? 50 : 10, 40, 7);
            MatrixRow row{alg.name + " n=" + std::to_string(n), to_string(t.problem.task),
                          format_change_set(t.problem.allowed), r, 3, alg.budget(n, r, n - 1), st.max_bits,
                          st.passed() && st.max_bits <= alg.budget(n, r, n - 1)};
            rows.push_back(row);
            if (progress) progress(stats_line(t.label + " n=" + std::to_string(n), st));
        }
    }
    return rows;
}

std::string format_matrix(const std::vector<MatrixRow>& rows) {
    std::ostringstream out;
    out << std::left << std::setw(34) << "entry" << std::setw(10) << "task" << std::setw(48) << "changes"
        << std::setw(4) << "s" << std::setw(4) << "r" << std::setw(8) << "budget" << std::setw(8) << "maxbits"
        << "verdict\n";
    for (Task task : {Task::MemList, Task::MemDetect, Task::List, Task::Detect})
        for (const MatrixRow& r : rows) {
            if (r.task != to_string(task)) continue;
            out << std::left << std::setw(34) << r.entry << std::setw(10) << r.task << std::setw(48) << r.changes
                << std::setw(4) << r.s << std::setw(4) << r.r << std::setw(8) << r.budget << std::setw(8)
                << r.max_bits << (r.passed ? "pass" : "FAIL") << "\n";
        }
    return out.str();
}

} // namespace dynclique
