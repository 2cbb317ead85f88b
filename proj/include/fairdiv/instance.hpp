#ifndef FAIRDIV_INSTANCE_HPP_
#define FAIRDIV_INSTANCE_HPP_

#include <string>
#include <utility>
#include <vector>

#include "fairdiv/rational.hpp"
#include "fairdiv/valuation.hpp"

namespace fairdiv {

struct Agent {
    int id = 0;  // 1-based; equals position + 1 and defines the priority order
    Rational weight;
    Valuation valuation;
};

// Agents with positive rational weights plus the shared ordered good set.
// Immutable value type; the with_*/without_* helpers return modified copies.
class Instance {
  public:
    Instance(std::vector<std::string> good_labels, std::vector<Agent> agents);

    int num_agents() const { return static_cast<int>(agents_.size()); }
    int num_goods() const { return static_cast<int>(goods_.size()); }

    const std::vector<std::string>& good_labels() const { return goods_; }
    const std::string& good_label(int index) const;
    int good_index(const std::string& label) const;

    const Agent& agent(int position) const;  // 0-based
    const std::vector<Agent>& agents() const { return agents_; }

    // Weights scaled by the common denominator; used for exact product comparison.
    const std::vector<BigInt>& cleared_weights() const { return cleared_weights_; }

    Instance prefix(int num_goods) const;
    Instance without_good(int good) const;
    Instance without_agent(int agent) const;
    Instance with_weight(int agent, const Rational& weight) const;
    Instance with_valuation(int agent, Valuation v) const;

  private:
    std::vector<std::string> goods_;
    std::vector<Agent> agents_;
    std::vector<BigInt> cleared_weights_;
};

// Pairwise-disjoint bundles, one per agent; goods may stay unallocated.
class Allocation {
  public:
    Allocation() = default;
    explicit Allocation(int num_agents) : bundles_(num_agents) {}
    Allocation(int num_agents, std::vector<std::vector<int>> bundles);

    int num_agents() const { return static_cast<int>(bundles_.size()); }
    const std::vector<int>& bundle(int agent) const { return bundles_[agent]; }
    const std::vector<std::vector<int>>& bundles() const { return bundles_; }

    bool contains(int agent, int good) const;
    void add(int agent, int good);
    void remove(int agent, int good);

    // owner[g] = agent position holding g, or -1.
    std::vector<int> owner_map(int num_goods) const;
    std::vector<int> unallocated(int num_goods) const;

    bool operator==(const Allocation&) const = default;

  private:
    std::vector<std::vector<int>> bundles_;  // each ascending
};

using UtilityVector = std::vector<long long>;

// Throws InputError when bundles overlap or reference out-of-range goods.
void check_allocation(const Instance& inst, const Allocation& alloc);

UtilityVector utility_vector(const Instance& inst, const Allocation& alloc);

// v_i(A_i) == |A_i| for every agent. Matroid-family valuations only.
bool is_non_redundant(const Instance& inst, const Allocation& alloc);

// Drops goods whose removal keeps the owner's utility, scanning agents and
// goods in canonical order, until none remain. Utilities are preserved.
Allocation reduce_non_redundant(const Instance& inst, const Allocation& alloc);

bool pareto_dominates(const Instance& inst, const Allocation& a, const Allocation& b);

struct SizeDiff {
    std::vector<int> lower;   // agents with a strictly smaller bundle in `a`
    std::vector<int> higher;  // agents with a strictly larger bundle in `a`
};

SizeDiff size_diff_sets(const Allocation& a, const Allocation& b);

// Sub-instance over the agents in `keep` (ascending positions, re-ranked in
// order) and exactly the goods appearing in their bundles.
std::pair<Instance, Allocation> restrict_agents(const Instance& inst, const Allocation& alloc,
                                                const std::vector<int>& keep);

}  // namespace fairdiv

#endif  // FAIRDIV_INSTANCE_HPP_
