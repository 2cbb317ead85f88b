#include "fairdiv/instance.hpp"

#include <algorithm>
#include <unordered_map>

#include "fairdiv/errors.hpp"

namespace fairdiv {
namespace {

std::vector<BigInt> clear_weights(const std::vector<Agent>& agents) {
    BigInt common = 1;
    for (const auto& a : agents) common = lcm(common, BigInt(denominator(a.weight)));
    std::vector<BigInt> cleared;
    cleared.reserve(agents.size());
    for (const auto& a : agents)
        cleared.push_back(numerator(a.weight) * (common / denominator(a.weight)));
    return cleared;
}

}  // namespace

Instance::Instance(std::vector<std::string> good_labels, std::vector<Agent> agents)
    : goods_(std::move(good_labels)), agents_(std::move(agents)) {
    std::unordered_map<std::string, int> seen;
    for (size_t i = 0; i < goods_.size(); ++i) {
        if (!seen.emplace(goods_[i], static_cast<int>(i)).second)
            throw InputError("duplicate good label: " + goods_[i]);
    }
    for (size_t i = 0; i < agents_.size(); ++i) {
        if (agents_[i].id != static_cast<int>(i) + 1)
            throw InputError("agent ids must be 1..n in order");
        if (agents_[i].weight <= 0) throw InputError("agent weights must be strictly positive");
        if (agents_[i].valuation.num_goods() != num_goods())
            throw InputError("valuation ground set does not match the instance goods");
    }
    cleared_weights_ = clear_weights(agents_);
}

const std::string& Instance::good_label(int index) const {
    if (index < 0 || index >= num_goods()) throw InputError("good index out of range");
    return goods_[index];
}

int Instance::good_index(const std::string& label) const {
    for (int i = 0; i < num_goods(); ++i)
        if (goods_[i] == label) return i;
    throw InputError("unknown good label: " + label);
}

const Agent& Instance::agent(int position) const {
    if (position < 0 || position >= num_agents()) throw InputError("agent position out of range");
    return agents_[position];
}

Instance Instance::prefix(int num) const {
    if (num < 0 || num > num_goods()) throw InputError("prefix length out of range");
    std::vector<int> kept(num);
    for (int i = 0; i < num; ++i) kept[i] = i;
    std::vector<std::string> labels(goods_.begin(), goods_.begin() + num);
    std::vector<Agent> agents = agents_;
    for (auto& a : agents) a.valuation = a.valuation.restricted(kept);
    return Instance(std::move(labels), std::move(agents));
}

Instance Instance::without_good(int good) const {
    if (good < 0 || good >= num_goods()) throw InputError("good index out of range");
    std::vector<int> kept;
    std::vector<std::string> labels;
    for (int g = 0; g < num_goods(); ++g) {
        if (g == good) continue;
        kept.push_back(g);
        labels.push_back(goods_[g]);
    }
    std::vector<Agent> agents = agents_;
    for (auto& a : agents) a.valuation = a.valuation.restricted(kept);
    return Instance(std::move(labels), std::move(agents));
}

Instance Instance::without_agent(int agent) const {
    if (agent < 0 || agent >= num_agents()) throw InputError("agent position out of range");
    std::vector<Agent> agents;
    for (int i = 0; i < num_agents(); ++i) {
        if (i == agent) continue;
        Agent a = agents_[i];
        a.id = static_cast<int>(agents.size()) + 1;
        agents.push_back(std::move(a));
    }
    return Instance(goods_, std::move(agents));
}

Instance Instance::with_weight(int agent, const Rational& weight) const {
    if (agent < 0 || agent >= num_agents()) throw InputError("agent position out of range");
    std::vector<Agent> agents = agents_;
    agents[agent].weight = weight;
    return Instance(goods_, std::move(agents));
}

Instance Instance::with_valuation(int agent, Valuation v) const {
    if (agent < 0 || agent >= num_agents()) throw InputError("agent position out of range");
    if (v.num_goods() != num_goods())
        throw InputError("replacement valuation must share the ground set");
    std::vector<Agent> agents = agents_;
    agents[agent].valuation = std::move(v);
    return Instance(goods_, std::move(agents));
}

Allocation::Allocation(int num_agents, std::vector<std::vector<int>> bundles)
    : bundles_(std::move(bundles)) {
    if (static_cast<int>(bundles_.size()) != num_agents)
        throw InputError("allocation must have one bundle per agent");
    for (auto& b : bundles_) std::sort(b.begin(), b.end());
}

bool Allocation::contains(int agent, int good) const {
    const auto& b = bundles_[agent];
    return std::binary_search(b.begin(), b.end(), good);
}

void Allocation::add(int agent, int good) {
    auto& b = bundles_[agent];
    auto it = std::lower_bound(b.begin(), b.end(), good);
    if (it != b.end() && *it == good) throw InputError("good already in the bundle");
    b.insert(it, good);
}

void Allocation::remove(int agent, int good) {
    auto& b = bundles_[agent];
    auto it = std::lower_bound(b.begin(), b.end(), good);
    if (it == b.end() || *it != good) throw InputError("good not in the bundle");
    b.erase(it);
}

std::vector<int> Allocation::owner_map(int num_goods) const {
    std::vector<int> owner(num_goods, -1);
    for (int i = 0; i < num_agents(); ++i) {
        for (int g : bundles_[i]) {
            if (g < 0 || g >= num_goods) throw InputError("bundle good out of range");
            if (owner[g] != -1) throw InputError("bundles overlap on good " + std::to_string(g));
            owner[g] = i;
        }
    }
    return owner;
}

std::vector<int> Allocation::unallocated(int num_goods) const {
    const auto owner = owner_map(num_goods);
    std::vector<int> free;
    for (int g = 0; g < num_goods; ++g)
        if (owner[g] == -1) free.push_back(g);
    return free;
}

void check_allocation(const Instance& inst, const Allocation& alloc) {
    if (alloc.num_agents() != inst.num_agents())
        throw InputError("allocation agent count does not match the instance");
    (void)alloc.owner_map(inst.num_goods());  // validates ranges and disjointness
}

UtilityVector utility_vector(const Instance& inst, const Allocation& alloc) {
    UtilityVector u(inst.num_agents());
    for (int i = 0; i < inst.num_agents(); ++i)
        u[i] = inst.agent(i).valuation.value(alloc.bundle(i));
    return u;
}

bool is_non_redundant(const Instance& inst, const Allocation& alloc) {
    for (int i = 0; i < inst.num_agents(); ++i) {
        const auto& v = inst.agent(i).valuation;
        if (!v.is_matroid_family())
            throw UnsupportedKindError("non-redundancy is defined for matroid-rank valuations only");
        if (v.value(alloc.bundle(i)) != static_cast<long long>(alloc.bundle(i).size())) return false;
    }
    return true;
}

Allocation reduce_non_redundant(const Instance& inst, const Allocation& alloc) {
    Allocation result = alloc;
    for (int i = 0; i < inst.num_agents(); ++i) {
        const auto& v = inst.agent(i).valuation;
        if (!v.is_matroid_family())
            throw UnsupportedKindError("non-redundancy is defined for matroid-rank valuations only");
        // Remove the first redundant good in canonical order, then rescan.
        bool removed = true;
        while (removed) {
            removed = false;
            const auto& bundle = result.bundle(i);
            const long long current = v.value(bundle);
            for (int g : bundle) {
                std::vector<int> without;
                without.reserve(bundle.size() - 1);
                for (int x : bundle)
                    if (x != g) without.push_back(x);
                if (v.value(without) == current) {
                    result.remove(i, g);
                    removed = true;
                    break;
                }
            }
        }
    }
    return result;
}

bool pareto_dominates(const Instance& inst, const Allocation& a, const Allocation& b) {
    const auto ua = utility_vector(inst, a);
    const auto ub = utility_vector(inst, b);
    bool strict = false;
    for (int i = 0; i < inst.num_agents(); ++i) {
        if (ua[i] < ub[i]) return false;
        if (ua[i] > ub[i]) strict = true;
    }
    return strict;
}

SizeDiff size_diff_sets(const Allocation& a, const Allocation& b) {
    if (a.num_agents() != b.num_agents()) throw InputError("allocations disagree on agent count");
    SizeDiff diff;
    for (int i = 0; i < a.num_agents(); ++i) {
        if (a.bundle(i).size() < b.bundle(i).size()) diff.lower.push_back(i);
        if (a.bundle(i).size() > b.bundle(i).size()) diff.higher.push_back(i);
    }
    return diff;
}

std::pair<Instance, Allocation> restrict_agents(const Instance& inst, const Allocation& alloc,
                                                const std::vector<int>& keep) {
    if (keep.empty()) throw InputError("agent restriction set must be nonempty");
    for (size_t i = 0; i < keep.size(); ++i) {
        if (keep[i] < 0 || keep[i] >= inst.num_agents())
            throw InputError("agent position out of range");
        if (i > 0 && keep[i] <= keep[i - 1])
            throw InputError("agent restriction set must be strictly ascending");
    }
    std::vector<char> in_bundles(inst.num_goods(), 0);
    for (int i : keep)
        for (int g : alloc.bundle(i)) in_bundles[g] = 1;
    std::vector<int> kept_goods;
    std::vector<int> old_to_new(inst.num_goods(), -1);
    for (int g = 0; g < inst.num_goods(); ++g) {
        if (!in_bundles[g]) continue;
        old_to_new[g] = static_cast<int>(kept_goods.size());
        kept_goods.push_back(g);
    }
    std::vector<std::string> labels;
    for (int g : kept_goods) labels.push_back(inst.good_label(g));
    std::vector<Agent> agents;
    std::vector<std::vector<int>> bundles;
    for (int i : keep) {
        Agent a = inst.agent(i);
        a.id = static_cast<int>(agents.size()) + 1;
        a.valuation = a.valuation.restricted(kept_goods);
        agents.push_back(std::move(a));
        std::vector<int> bundle;
        for (int g : alloc.bundle(i)) bundle.push_back(old_to_new[g]);
        bundles.push_back(std::move(bundle));
    }
    Instance sub(std::move(labels), std::move(agents));
    Allocation sub_alloc(sub.num_agents(), std::move(bundles));
    return {std::move(sub), std::move(sub_alloc)};
}

}  // namespace fairdiv
