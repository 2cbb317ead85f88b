#include "fairdiv/oracle.hpp"

#include <algorithm>

#include "fairdiv/errors.hpp"

namespace fairdiv {

long long enumeration_count(const Instance& inst, long long budget) {
    const long long base = inst.num_agents() + 1;
    long long total = 1;
    for (int g = 0; g < inst.num_goods(); ++g) {
        if (total > budget / base)
            throw CapacityError("enumeration budget exceeded: (n+1)^m > " + std::to_string(budget));
        total *= base;
    }
    return total;
}

void for_each_allocation(const Instance& inst, long long budget,
                         const std::function<void(const Allocation&)>& visit) {
    enumeration_count(inst, budget);
    const int n = inst.num_agents();
    const int m = inst.num_goods();
    std::vector<int> digit(m, 0);  // 0 = unallocated, k = agent k-1
    while (true) {
        std::vector<std::vector<int>> bundles(n);
        for (int g = 0; g < m; ++g)
            if (digit[g] > 0) bundles[digit[g] - 1].push_back(g);
        visit(Allocation(n, std::move(bundles)));

        int g = 0;
        while (g < m && digit[g] == n) digit[g++] = 0;
        if (g == m) break;
        ++digit[g];
    }
}

OracleResult brute_force_opt(const Instance& inst, const WelfareFunction& rule, long long budget) {
    if (rule.domain_max() >= 0) {
        long long worst = 0;
        std::vector<int> all(inst.num_goods());
        for (int g = 0; g < inst.num_goods(); ++g) all[g] = g;
        for (int i = 0; i < inst.num_agents(); ++i)
            worst = std::max(worst, inst.agent(i).valuation.value(all));
        if (worst > rule.domain_max())
            throw CapacityError("welfare table too short for the attainable utilities");
    }

    bool matroid = true;
    for (int i = 0; i < inst.num_agents(); ++i)
        matroid = matroid && inst.agent(i).valuation.is_matroid_family();

    OracleResult result;
    result.enumerated = 0;
    result.optimal_count = 0;
    bool have_best = false;

    for_each_allocation(inst, budget, [&](const Allocation& alloc) {
        ++result.enumerated;
        UtilityVector u = utility_vector(inst, alloc);
        if (!have_best) {
            result.vector = std::move(u);
            result.witness = alloc;
            result.optimal_count = 1;
            have_best = true;
            return;
        }
        switch (compare_welfare(inst, rule, u, result.vector)) {
            case Ordering::FirstPreferred:
                result.vector = std::move(u);
                result.witness = alloc;
                result.optimal_count = 1;
                return;
            case Ordering::SecondPreferred:
                return;
            case Ordering::Equal:
                ++result.optimal_count;
                // Same welfare tier; the lexicographic layer decides.
                if (compare_outcomes(inst, rule, u, result.vector) == Ordering::FirstPreferred) {
                    result.vector = std::move(u);
                    result.witness = alloc;
                }
                return;
        }
    });

    if (matroid) result.witness = reduce_non_redundant(inst, result.witness);
    return result;
}

namespace {

MnwOptimum mnw_score(const UtilityVector& u) {
    MnwOptimum score;
    score.product = 1;
    for (long long x : u) {
        if (x <= 0) continue;
        ++score.support_size;
        score.product *= x;
    }
    return score;
}

// Positive-support count first, then the product over the support.
int mnw_compare(const MnwOptimum& a, const MnwOptimum& b) {
    if (a.support_size != b.support_size) return a.support_size > b.support_size ? 1 : -1;
    if (a.product != b.product) return a.product > b.product ? 1 : -1;
    return 0;
}

}  // namespace

MnwResult brute_force_mnw(const Instance& inst, long long budget) {
    MnwResult result;
    bool have_best = false;
    for_each_allocation(inst, budget, [&](const Allocation& alloc) {
        ++result.enumerated;
        const UtilityVector u = utility_vector(inst, alloc);
        const MnwOptimum score = mnw_score(u);
        const int c = have_best ? mnw_compare(score, result.optimum) : 1;
        if (c > 0) {
            result.optimum = score;
            result.optima.clear();
            result.optima.push_back({u, alloc});
            have_best = true;
        } else if (c == 0) {
            const bool seen = std::any_of(result.optima.begin(), result.optima.end(),
                                          [&](const MnwEntry& e) { return e.vector == u; });
            if (!seen) result.optima.push_back({u, alloc});
        }
    });
    return result;
}

void for_each_mnw_optimal(const Instance& inst, long long budget,
                          const std::function<void(const Allocation&, const UtilityVector&)>& visit) {
    for_each_mnw_optimal(inst, budget, brute_force_mnw(inst, budget).optimum, visit);
}

void for_each_mnw_optimal(const Instance& inst, long long budget, const MnwOptimum& optimum,
                          const std::function<void(const Allocation&, const UtilityVector&)>& visit) {
    for_each_allocation(inst, budget, [&](const Allocation& alloc) {
        const UtilityVector u = utility_vector(inst, alloc);
        if (mnw_compare(mnw_score(u), optimum) == 0) visit(alloc, u);
    });
}

}  // namespace fairdiv
