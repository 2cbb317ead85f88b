#include "fairdiv/solver.hpp"

#include <algorithm>

#include "fairdiv/errors.hpp"
#include "fairdiv/valuation.hpp"

namespace fairdiv {
namespace {

void check_solver_inputs(const Instance& inst, const WelfareFunction& rule) {
    if (!rule.concave())
        throw ValidationError("the incremental solver requires a concave rule; use the oracle");
    if (rule.domain_max() >= 0 && rule.domain_max() < inst.num_goods())
        throw CapacityError("welfare table too short for " + std::to_string(inst.num_goods()) +
                            " goods");
    for (int i = 0; i < inst.num_agents(); ++i) {
        if (!inst.agent(i).valuation.is_matroid_family())
            throw UnsupportedKindError(
                "agent " + std::to_string(i + 1) +
                " has a valuation kind outside the matroid families (" +
                to_string(inst.agent(i).valuation.kind()) + ")");
    }
}

std::string validate_profile(const Instance& inst) {
    if (inst.num_goods() > 16)
        return "instance too large for exhaustive matroid validation; valuations trusted";
    for (int i = 0; i < inst.num_agents(); ++i) {
        const auto report = validate_matroid_rank(inst.agent(i).valuation);
        if (!report.valid)
            throw ValidationError("agent " + std::to_string(i + 1) + " violates the " +
                                  report.violations.front().axiom + " axiom");
    }
    return {};
}

}  // namespace

std::pair<Allocation, IterationRecord> add_one_good(const Instance& inst, const Allocation& alloc,
                                                    int good, const WelfareFunction& rule) {
    check_allocation(inst, alloc);
    if (good < 0 || good >= inst.num_goods()) throw InputError("good index out of range");
    if (alloc.owner_map(inst.num_goods())[good] != -1)
        throw PreconditionError("the new good is already allocated");
    if (!is_non_redundant(inst, alloc))
        throw PreconditionError("the held allocation must be non-redundant");

    const int n = inst.num_agents();
    IterationRecord record;
    record.good = good;

    // A dummy holder of `good` would contribute no out-edges (it values only
    // that good), so the graph of the current allocation already matches the
    // one-extra-agent construction.
    const ExchangeGraph graph = ExchangeGraph::build(inst, alloc);
    record.graph_edges = graph.num_edges();

    const UtilityVector current = utility_vector(inst, alloc);
    const int targets[1] = {good};

    for (int i = 0; i < n; ++i) {
        auto slots = inst.agent(i).valuation.f_set(alloc.bundle(i));
        const bool direct = std::binary_search(slots.begin(), slots.end(), good);
        UtilityVector projected = current;
        ++projected[i];
        if (direct) {
            record.candidates.push_back({i, Path{good}, projected});
            slots.erase(std::remove(slots.begin(), slots.end(), good), slots.end());
        }
        // `good` has no out-edges, so any path found here is nondegenerate.
        if (auto path = shortest_path(graph, slots, targets))
            record.candidates.push_back({i, std::move(*path), std::move(projected)});
    }

    if (record.candidates.empty()) {
        record.utilities_after = current;
        return {alloc, std::move(record)};
    }

    // Earlier candidates win ties, so an agent's degenerate tuple is
    // preferred to her path tuple with the same projected vector.
    const CandidateTuple* best = &record.candidates.front();
    for (size_t c = 1; c < record.candidates.size(); ++c) {
        if (compare_outcomes(inst, rule, record.candidates[c].projected, best->projected) ==
            Ordering::FirstPreferred)
            best = &record.candidates[c];
    }

    Allocation next = augment(alloc, best->path);
    next.add(best->agent, best->path.front());
    record.selected = *best;
    record.utilities_after = utility_vector(inst, next);
    return {std::move(next), std::move(record)};
}

SolveResult solve(const Instance& inst, const WelfareFunction& rule) {
    check_solver_inputs(inst, rule);

    SolveResult result;
    if (auto warning = validate_profile(inst); !warning.empty())
        result.trace.warnings.push_back(std::move(warning));

    Allocation alloc(inst.num_agents());
    for (int t = 1; t <= inst.num_goods(); ++t) {
        const Instance step = inst.prefix(t);
        auto [next, record] = add_one_good(step, alloc, t - 1, rule);
        alloc = std::move(next);
        result.trace.iterations.push_back(std::move(record));
    }

    result.allocation = std::move(alloc);
    result.utilities = utility_vector(inst, result.allocation);
    return result;
}

}  // namespace fairdiv
