#ifndef FAIRDIV_SOLVER_HPP_
#define FAIRDIV_SOLVER_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fairdiv/exchange.hpp"
#include "fairdiv/instance.hpp"
#include "fairdiv/welfare.hpp"

namespace fairdiv {

struct CandidateTuple {
    int agent = -1;          // 0-based
    Path path;               // ends at the new good; size 1 == degenerate
    UtilityVector projected;  // current utilities with the agent's entry +1
};

struct IterationRecord {
    int good = -1;
    long long graph_edges = 0;
    std::vector<CandidateTuple> candidates;
    std::optional<CandidateTuple> selected;  // nullopt == good left unallocated
    UtilityVector utilities_after;
};

struct SolverTrace {
    std::vector<IterationRecord> iterations;
    std::vector<std::string> warnings;
};

struct SolveResult {
    Allocation allocation;
    UtilityVector utilities;
    SolverTrace trace;
};

// One incremental step. `inst` must contain exactly the goods held by `alloc`
// plus the unallocated `good`; `alloc` must be optimal for the rule on the
// goods without `good`. A dummy holder of `good` shapes the exchange graph;
// candidate paths per agent are scored with the full preference order.
std::pair<Allocation, IterationRecord> add_one_good(const Instance& inst, const Allocation& alloc,
                                                    int good, const WelfareFunction& rule);

// Adds goods one at a time in canonical order starting from the empty
// allocation. Requires matroid-family valuations and a concave rule.
// Valuations are validated exhaustively up to 16 goods, trusted (with a
// trace warning) above that.
SolveResult solve(const Instance& inst, const WelfareFunction& rule);

}  // namespace fairdiv

#endif  // FAIRDIV_SOLVER_HPP_
