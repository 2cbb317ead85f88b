#ifndef FAIRDIV_ORACLE_HPP_
#define FAIRDIV_ORACLE_HPP_

#include <functional>
#include <vector>

#include "fairdiv/instance.hpp"
#include "fairdiv/welfare.hpp"

namespace fairdiv {

inline constexpr long long kDefaultEnumerationBudget = 100'000'000;

// (n+1)^m, the full search space size; CapacityError when it exceeds `budget`.
long long enumeration_count(const Instance& inst, long long budget = kDefaultEnumerationBudget);

// Visits every assignment of goods to agents-or-unallocated exactly once, in
// mixed-radix order (good 0 is the fastest digit).
void for_each_allocation(const Instance& inst, long long budget,
                         const std::function<void(const Allocation&)>& visit);

struct OracleResult {
    UtilityVector vector;
    Allocation witness;        // non-redundant for matroid-family instances
    long long optimal_count;   // allocations tied at the optimal welfare tier
    long long enumerated;
};

// Exhaustive ground truth: folds the full preference order over every
// allocation's utility vector.
OracleResult brute_force_opt(const Instance& inst, const WelfareFunction& rule,
                             long long budget = kDefaultEnumerationBudget);

struct MnwOptimum {
    int support_size = 0;  // number of agents with positive utility
    BigInt product = 0;    // product of the positive utilities
};

struct MnwEntry {
    UtilityVector vector;
    Allocation witness;
};

struct MnwResult {
    MnwOptimum optimum;
    std::vector<MnwEntry> optima;  // every optimal utility vector, one witness each
    long long enumerated = 0;
};

// Unweighted Nash welfare over any valuation kinds, maximizing the number of
// positive-utility agents first and the product over them second.
MnwResult brute_force_mnw(const Instance& inst, long long budget = kDefaultEnumerationBudget);

// Visits every allocation attaining the optimum of brute_force_mnw.
void for_each_mnw_optimal(const Instance& inst, long long budget,
                          const std::function<void(const Allocation&, const UtilityVector&)>& visit);
// Same, against an already-computed optimum.
void for_each_mnw_optimal(const Instance& inst, long long budget, const MnwOptimum& optimum,
                          const std::function<void(const Allocation&, const UtilityVector&)>& visit);

}  // namespace fairdiv

#endif  // FAIRDIV_ORACLE_HPP_
