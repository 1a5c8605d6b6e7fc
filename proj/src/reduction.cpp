// Copyright (c) dynclique contributors.
// SPDX-License-Identifier: Apache-2.0
#include "dynclique/reduction.hpp"

namespace dynclique {

namespace {

class ReducedAutomaton : public NodeAutomaton {
  public:
    ReducedAutomaton(std::unique_ptr<NodeAutomaton> base, Task to) : base_(std::move(base)), to_(to) {}
    std::unique_ptr<NodeAutomaton> clone() const override {
        return std::make_unique<ReducedAutomaton>(base_->clone(), to_);
    }
    Mailbox send(int round, const NodeSet& prev, const NodeSet& now) override { return base_->send(round, prev, now); }
    NodeOutput receive(int round, const Mailbox& inbox) override { return reduce_output(to_, base_->receive(round, inbox)); }

  private:
    std::unique_ptr<NodeAutomaton> base_;
    Task to_;
};

} // namespace

bool is_reduction(Task from, Task to) {
    switch (from) {
    case Task::MemList: return to == Task::MemDetect || to == Task::List || to == Task::Detect;
    case Task::MemDetect:
    case Task::List: return to == Task::Detect;
    case Task::Detect: return false;
    }
    return false;
}

NodeOutput reduce_output(Task to, const NodeOutput& out) {
    NodeOutput r;
    r.task = to;
    bool nonempty = out.task == Task::MemList || out.task == Task::List ? !out.cliques.empty() : out.flag;
    if (to == Task::List) r.cliques = out.cliques;
    r.flag = nonempty;
    return r;
}

Algorithm reduce_solver(Task from, Task to, const Algorithm& solver) {
    if (!is_reduction(from, to))
        throw InvalidReduction("no reduction from " + to_string(from) + " to " + to_string(to));
    if (solver.task != from)
        throw InvalidReduction(solver.name + " solves " + to_string(solver.task) + ", not " + to_string(from));
    Algorithm a = solver;
    a.name = solver.name + ">" + to_string(to);
    a.task = to;
    AutomatonFactory base = solver.factory;
    a.factory = [base, to](NodeId self, std::shared_ptr<const Graph> initial, int birth, const NodeParams& p) {
        return std::make_unique<ReducedAutomaton>(base(self, std::move(initial), birth, p), to);
    };
    return a;
}

} // namespace dynclique
