// Copyright (c) dynclique contributors.
// SPDX-License-Identifier: Apache-2.0
#include "dynclique/lowerbounds.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <set>

namespace dynclique {

std::string to_string(AdversaryFamily f) {
    switch (f) {
    case AdversaryFamily::TriEdgeIns: return "TriEdgeIns";
    case AdversaryFamily::KsEdgeIns: return "KsEdgeIns";
    case AdversaryFamily::TriNodeIns: return "TriNodeIns";
    case AdversaryFamily::TriMdtctNodeIns: return "TriMdtctNodeIns";
    case AdversaryFamily::KsNodeIns: return "KsNodeIns";
    case AdversaryFamily::KsMdtctNodeIns: return "KsMdtctNodeIns";
    }
    return "?";
}

AdversaryFamily parse_family(const std::string& s) {
    for (auto f : {AdversaryFamily::TriEdgeIns, AdversaryFamily::KsEdgeIns, AdversaryFamily::TriNodeIns,
                   AdversaryFamily::TriMdtctNodeIns, AdversaryFamily::KsNodeIns, AdversaryFamily::KsMdtctNodeIns})
        if (to_string(f) == s) return f;
    throw BadParams("unknown adversary family '" + s + "'");
}

namespace {

BipartiteGraph random_bipartite(int left, int right, std::mt19937_64& rng) {
    BipartiteGraph c{left, right, {}};
    std::bernoulli_distribution half(0.5);
    for (int l = 0; l < left; ++l)
        for (int r = 0; r < right; ++r)
            if (half(rng)) c.edges.emplace_back(l, r);
    return c;
}

BipartiteGraph resolve_c(const AdversarySpec& spec, int left, int right) {
    std::mt19937_64 rng(spec.seed);
    BipartiteGraph c = spec.c ? *spec.c : random_bipartite(left, right, rng);
    if (c.left != left || c.right != right)
        throw BadParams("bipartite graph must be " + std::to_string(left) + "x" + std::to_string(right));
    std::set<std::pair<int, int>> seen;
    for (auto [l, r] : c.edges)
        if (l < 0 || l >= left || r < 0 || r >= right || !seen.insert({l, r}).second)
            throw BadParams("bad bipartite edge (" + std::to_string(l) + "," + std::to_string(r) + ")");
    std::sort(c.edges.begin(), c.edges.end());
    return c;
}

std::vector<NodeId> range(NodeId from, int count) {
    std::vector<NodeId> out(count);
    for (int i = 0; i < count; ++i) out[i] = from + i;
    return out;
}

} // namespace

DynamicScenario gen_adversary(const AdversarySpec& spec, AdversaryLayout* layout_out) {
    const int n = spec.n, t = spec.t, s = spec.s;
    if (s < 3) throw BadParams("s must be at least 3");
    if (spec.r < 1) throw BadParams("r must be at least 1");
    const bool ks = spec.family == AdversaryFamily::KsEdgeIns || spec.family == AdversaryFamily::KsNodeIns ||
                    spec.family == AdversaryFamily::KsMdtctNodeIns;
    const int kcount = ks ? s - 3 : 0;
    if (!ks && s != 3) throw BadParams(to_string(spec.family) + " needs s = 3");

    DynamicScenario sc;
    sc.n = n;
    sc.name = to_string(spec.family) + "-n" + std::to_string(n) + "-seed" + std::to_string(spec.seed);
    sc.problem.s = s;
    sc.problem.r = spec.r;
    AdversaryLayout lay;

    if (spec.family == AdversaryFamily::TriEdgeIns || spec.family == AdversaryFamily::KsEdgeIns) {
        const int m = n - t - kcount - 1;
        if (t < 1 || m < 1) throw BadParams("edge-insertion construction needs t >= 1 and n >= t + s - 1");
        if (spec.w < 0 || spec.w >= m) throw BadParams("target w outside W");
        BipartiteGraph c = resolve_c(spec, m, t);
        lay.w_side = range(0, m);
        lay.u_side = range(m, t);
        lay.k_side = range(m + t, kcount);
        lay.v = n - 1;
        lay.target_w = lay.w_side[spec.w];
        sc.initial = Graph::complete_universe(n);
        for (NodeId a : lay.k_side) {
            for (NodeId b : lay.k_side)
                if (a < b) sc.initial.add_edge(a, b);
            for (NodeId b : lay.w_side) sc.initial.add_edge(a, b);
            for (NodeId b : lay.u_side) sc.initial.add_edge(a, b);
        }
        for (auto [l, r] : c.edges) sc.events.push_back(TopologyChange::edge_insert(lay.w_side[l], lay.u_side[r]));
        for (NodeId u : lay.u_side) sc.events.push_back(TopologyChange::edge_insert(lay.v, u));
        for (NodeId k : lay.k_side) sc.events.push_back(TopologyChange::edge_insert(lay.v, k));
        sc.events.push_back(TopologyChange::edge_insert(lay.v, lay.target_w));
        sc.problem.task = Task::MemList;
        sc.problem.allowed = {ChangeKind::EdgeInsert};
    } else {
        const int csize = n - 1 - kcount;
        if (csize < 2) throw BadParams("node-insertion construction needs n >= s");
        const int left = (csize + 1) / 2, right = csize - left;
        BipartiteGraph c = resolve_c(spec, left, right);
        lay.w_side = range(0, left);      // L
        lay.u_side = range(left, right);  // R
        lay.k_side = range(csize, kcount);
        lay.v = n - 1;
        sc.initial = Graph(n);
        std::vector<std::vector<NodeId>> attach(csize);
        for (auto [l, r] : c.edges) attach[left + r].push_back(l); // R nodes come later
        for (NodeId x = 0; x < csize; ++x) sc.events.push_back(TopologyChange::node_insert(x, attach[x]));
        std::vector<NodeId> so_far = range(0, csize);
        for (NodeId k : lay.k_side) {
            sc.events.push_back(TopologyChange::node_insert(k, so_far));
            so_far.push_back(k);
        }
        const bool detect = spec.family == AdversaryFamily::TriMdtctNodeIns ||
                            spec.family == AdversaryFamily::KsMdtctNodeIns;
        if (detect) {
            if (spec.u < 0 || spec.u >= left || spec.v < 0 || spec.v >= right) throw BadParams("targets outside L/R");
            lay.target_u = lay.w_side[spec.u];
            lay.target_v = lay.u_side[spec.v];
            std::vector<NodeId> to = lay.k_side;
            to.push_back(lay.target_u);
            to.push_back(lay.target_v);
            sc.events.push_back(TopologyChange::node_insert(lay.v, to));
            sc.problem.task = Task::MemDetect;
        } else {
            sc.events.push_back(TopologyChange::node_insert(lay.v, so_far));
            sc.problem.task = Task::MemList;
        }
        sc.problem.allowed = {ChangeKind::NodeInsert};
    }
    for (int i = 1; i < spec.r; ++i) sc.events.push_back(TopologyChange::noop());
    validate(sc);
    if (layout_out) *layout_out = lay;
    return sc;
}

LemmaConstants lemma_constants(double eps) {
    double alpha = (1 - eps) / 6;
    double beta = (1 - eps) / (5 + eps);
    double gamma = std::min(1 - eps, std::pow(beta, alpha));
    return {alpha, beta, gamma};
}

double eval_bound(BoundProblem problem, ChangeKind change, int n, double eps, int r, int s) {
    if (!(eps >= 0 && eps < 1)) throw BadParams("epsilon must lie in [0, 1)");
    if (r < 1) throw BadParams("r must be at least 1");
    if (problem == BoundProblem::MDTCT && change == ChangeKind::NodeInsert) {
        if (n < 3) throw BadParams("n must be at least 3");
        return std::log2(2 - 2 * eps) * (n - 2) / 2.0;
    }
    if (problem == BoundProblem::MLIST && change == ChangeKind::NodeInsert) {
        if (n < 3) throw BadParams("n must be at least 3");
        return (n / 2.0 + std::log2(1 - eps) / (n - 1)) / r;
    }
    if (problem == BoundProblem::MLIST && change == ChangeKind::EdgeInsert) {
        if (eps <= 0) throw BadParams("epsilon must be positive");
        const double t = ceil_sqrt(n);
        const double m = n - t - s + 2;
        if (m < 1) throw BadParams("n too small for the construction");
        LemmaConstants k = lemma_constants(eps);
        const double w1 = k.alpha * m;
        const double msgs = s == 3 ? t * (t + 3) / 2.0 : (t + s) * (t + s + 3) / 2.0;
        // log2(beta) + m log2(gamma) + t m - B msgs <= (B - t) w1 + t m, solved for B
        double b = (t * w1 + std::log2(k.beta) + m * std::log2(k.gamma)) / (w1 + msgs);
        return std::max(0.0, b);
    }
    throw BadParams("no bound for this problem and change type");
}

std::optional<BipartiteWitness> densebip_witness(const BipartiteGraph& g, double eps) {
    if (g.left < 1 || g.right < 1 || g.right > 64) throw BadParams("sides must be in [1, 64]");
    std::vector<uint64_t> row(g.left, 0);
    for (auto [l, r] : g.edges) {
        if (l < 0 || l >= g.left || r < 0 || r >= g.right) throw BadParams("edge outside the sides");
        row[l] |= uint64_t{1} << r;
    }
    int edges = 0;
    for (uint64_t w : row) edges += std::popcount(w);
    if (edges < (1 - eps) * g.left * g.right - 1e-9)
        throw PreconditionViolation("density " + std::to_string(edges) + "/" + std::to_string(g.left * g.right) +
                                    " below 1 - epsilon");
    LemmaConstants k = lemma_constants(eps);
    int a_size = std::max(1, static_cast<int>(std::ceil(k.alpha * g.left - 1e-9)));
    uint64_t all = g.right == 64 ? ~uint64_t{0} : (uint64_t{1} << g.right) - 1;

    std::vector<int> pick(a_size), best;
    for (int i = 0; i < a_size; ++i) pick[i] = i;
    uint64_t best_common = 0;
    int best_size = -1;
    while (true) {
        uint64_t common = all;
        for (int i : pick) common &= row[i];
        if (std::popcount(common) > best_size) {
            best_size = std::popcount(common);
            best_common = common;
            best = pick;
        }
        int i = a_size - 1;
        while (i >= 0 && pick[i] == g.left - a_size + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < a_size; ++j) pick[j] = pick[j - 1] + 1;
    }
    double need = k.beta * std::pow(k.gamma, g.left) * g.right;
    if (best_size < need - 1e-9) return std::nullopt;
    BipartiteWitness w;
    w.a = best;
    for (int r = 0; r < g.right; ++r)
        if ((best_common >> r) & 1U) w.b.push_back(r);
    w.alpha = k.alpha;
    w.beta = k.beta;
    w.gamma = k.gamma;
    return w;
}

} // namespace dynclique
