#include "fairdiv/audit.hpp"

#include <algorithm>
#include <sstream>

#include "fairdiv/catalog.hpp"
#include "fairdiv/errors.hpp"
#include "fairdiv/fixtures.hpp"
#include "fairdiv/oracle.hpp"
#include "fairdiv/solver.hpp"

namespace fairdiv {
namespace {

struct EngineRun {
    UtilityVector utilities;
    Allocation allocation;
};

EngineRun run_engine_full(const Instance& inst, const WelfareFunction& rule, Engine engine) {
    if (engine == Engine::Solver) {
        auto result = solve(inst, rule);
        return {std::move(result.utilities), std::move(result.allocation)};
    }
    auto result = brute_force_opt(inst, rule);
    return {std::move(result.vector), std::move(result.witness)};
}

UtilityVector run_engine(const Instance& inst, const WelfareFunction& rule, Engine engine) {
    return run_engine_full(inst, rule, engine).utilities;
}

// splitmix64; chosen over <random> distributions so that seeded runs are
// reproducible bit-for-bit on any platform.
struct Rng {
    std::uint64_t state;
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    int below(int bound) { return static_cast<int>(next() % static_cast<std::uint64_t>(bound)); }
    int range(int lo, int hi) { return lo + below(hi - lo + 1); }  // inclusive
};

std::string describe_vectors(const UtilityVector& a, const UtilityVector& b) {
    std::ostringstream out;
    out << "[";
    for (size_t i = 0; i < a.size(); ++i) out << (i ? "," : "") << a[i];
    out << "] vs [";
    for (size_t i = 0; i < b.size(); ++i) out << (i ? "," : "") << b[i];
    out << "]";
    return out.str();
}

}  // namespace

const char* to_string(Engine engine) {
    return engine == Engine::Solver ? "solver" : "oracle";
}

AuditVerdict check_resource_monotonicity(const Instance& inst, int extra_good,
                                         const WelfareFunction& rule, Engine engine) {
    if (extra_good < 0 || extra_good >= inst.num_goods())
        throw InputError("extra good out of range");
    AuditVerdict verdict{"resource_monotonicity"};
    const Instance base = inst.without_good(extra_good);
    const EngineRun small = run_engine_full(base, rule, engine);
    const EngineRun big = run_engine_full(inst, rule, engine);
    verdict.tried = 1;
    std::vector<int> losers;
    for (int i = 0; i < inst.num_agents(); ++i)
        if (small.utilities[i] > big.utilities[i]) losers.push_back(i);
    if (!losers.empty()) {
        verdict.violations.push_back({"agent utility dropped when a good was added: " +
                                          describe_vectors(small.utilities, big.utilities),
                                      losers, base, inst, small.allocation, big.allocation});
    }
    return verdict;
}

AuditVerdict check_population_monotonicity(const Instance& inst, int removed_agent,
                                           const WelfareFunction& rule, Engine engine) {
    if (inst.num_agents() < 2) throw InputError("population audit needs at least two agents");
    if (removed_agent < 0 || removed_agent >= inst.num_agents())
        throw InputError("agent position out of range");
    AuditVerdict verdict{"population_monotonicity"};
    const Instance small_inst = inst.without_agent(removed_agent);
    const EngineRun small = run_engine_full(small_inst, rule, engine);
    const EngineRun big = run_engine_full(inst, rule, engine);
    verdict.tried = 1;
    std::vector<int> losers;
    for (int i = 0, j = 0; i < inst.num_agents(); ++i) {
        if (i == removed_agent) continue;
        if (small.utilities[j] < big.utilities[i]) losers.push_back(i);
        ++j;
    }
    if (!losers.empty()) {
        verdict.violations.push_back({"surviving agent does worse without the extra agent: " +
                                          describe_vectors(small.utilities, big.utilities),
                                      losers, small_inst, inst, small.allocation, big.allocation});
    }
    return verdict;
}

AuditVerdict check_weight_monotonicity(const Instance& inst, int agent, const Rational& new_weight,
                                       const WelfareFunction& rule, Engine engine) {
    if (agent < 0 || agent >= inst.num_agents()) throw InputError("agent position out of range");
    if (new_weight <= inst.agent(agent).weight)
        throw InputError("the new weight must exceed the current one");
    if (engine == Engine::Solver && !rule.concave())
        throw ValidationError("non-concave rules must be audited through the oracle engine");
    AuditVerdict verdict{"weight_monotonicity"};
    const Instance boosted = inst.with_weight(agent, new_weight);
    const EngineRun before = run_engine_full(inst, rule, engine);
    const EngineRun after = run_engine_full(boosted, rule, engine);
    verdict.tried = 1;
    if (after.utilities[agent] < before.utilities[agent]) {
        verdict.violations.push_back({"agent lost utility after a weight increase: " +
                                          describe_vectors(before.utilities, after.utilities),
                                      {agent}, inst, boosted, before.allocation, after.allocation});
    }
    return verdict;
}

DeviationOutcome evaluate_group_deviation(const Instance& truth, const WelfareFunction& rule,
                                          const std::vector<int>& coalition,
                                          const std::vector<Valuation>& reports, Engine engine) {
    if (coalition.empty()) throw InputError("coalition must be nonempty");
    if (coalition.size() != reports.size())
        throw InputError("one report per coalition member required");

    Instance lied = truth;
    for (size_t k = 0; k < coalition.size(); ++k)
        lied = lied.with_valuation(coalition[k], reports[k]);

    DeviationOutcome outcome;
    outcome.truthful = run_engine(truth, rule, engine);

    const Allocation lie_alloc = engine == Engine::Solver
                                     ? solve(lied, rule).allocation
                                     : brute_force_opt(lied, rule).witness;
    outcome.deviated = utility_vector(truth, lie_alloc);  // true valuations on the lie outcome

    outcome.all_gain = true;
    for (int i : coalition)
        outcome.all_gain = outcome.all_gain && outcome.deviated[i] > outcome.truthful[i];
    return outcome;
}

AuditVerdict check_group_strategyproofness(const Instance& inst, const WelfareFunction& rule,
                                           MisreportSpace space, Engine engine) {
    const int n = inst.num_agents();
    const int m = inst.num_goods();
    if (space == MisreportSpace::BinaryAdditiveAll && m > 6)
        throw CapacityError("binary-additive misreport space is capped at 6 goods (" +
                            std::to_string(1ll << m) + " reports per agent)");
    if (space == MisreportSpace::MatroidAll && (m > 4 || n > 3))
        throw CapacityError("matroid misreport space is capped at 4 goods and 3 agents");

    const std::vector<Valuation> reports = space == MisreportSpace::BinaryAdditiveAll
                                               ? all_binary_additive_valuations(m)
                                               : all_matroid_rank_valuations(m);

    AuditVerdict verdict{"group_strategyproofness"};
    const EngineRun truth_run = run_engine_full(inst, rule, engine);
    const UtilityVector& truthful = truth_run.utilities;

    const int subsets = 1 << n;
    for (int mask = 1; mask < subsets; ++mask) {
        std::vector<int> coalition;
        for (int i = 0; i < n; ++i)
            if (mask & (1 << i)) coalition.push_back(i);

        std::vector<size_t> pick(coalition.size(), 0);
        while (true) {
            Instance lied = inst;
            for (size_t k = 0; k < coalition.size(); ++k)
                lied = lied.with_valuation(coalition[k], reports[pick[k]]);
            const Allocation lie_alloc = engine == Engine::Solver
                                             ? solve(lied, rule).allocation
                                             : brute_force_opt(lied, rule).witness;
            const UtilityVector deviated = utility_vector(inst, lie_alloc);
            ++verdict.tried;

            bool all_gain = true;
            for (int i : coalition) all_gain = all_gain && deviated[i] > truthful[i];
            if (all_gain) {
                verdict.violations.push_back({"profitable joint misreport found: " +
                                                  describe_vectors(truthful, deviated),
                                              coalition, inst, lied, truth_run.allocation,
                                              lie_alloc});
            }

            size_t k = 0;
            while (k < pick.size() && pick[k] + 1 == reports.size()) pick[k++] = 0;
            if (k == pick.size()) break;
            ++pick[k];
        }
    }
    return verdict;
}

Instance random_instance(const GeneratorConfig& config) {
    if (config.n_min < 1 || config.n_max < config.n_min || config.m_min < 0 ||
        config.m_max < config.m_min)
        throw InputError("bad generator ranges");
    if (config.kinds.empty() || config.weight_pool.empty())
        throw InputError("generator needs at least one kind and one weight");

    Rng rng{config.seed * 0x9e3779b97f4a7c15ull + 0x243f6a8885a308d3ull};
    const int n = rng.range(config.n_min, config.n_max);
    const int m = rng.range(config.m_min, config.m_max);

    std::vector<std::string> labels;
    for (int g = 0; g < m; ++g) labels.push_back("g" + std::to_string(g + 1));

    std::vector<Agent> agents;
    for (int i = 0; i < n; ++i) {
        const ValuationKind kind = config.kinds[rng.below(static_cast<int>(config.kinds.size()))];
        Valuation v = Valuation::binary_additive(m, {});
        switch (kind) {
            case ValuationKind::BinaryAdditive: {
                std::vector<int> approved;
                for (int g = 0; g < m; ++g)
                    if (rng.below(2)) approved.push_back(g);
                v = Valuation::binary_additive(m, std::move(approved));
                break;
            }
            case ValuationKind::PartitionMatroid: {
                const int num_parts = rng.range(1, std::max(1, std::min(m, 3)));
                std::vector<PartitionPart> parts(num_parts);
                for (auto& part : parts) part.capacity = rng.range(1, 2);
                for (int g = 0; g < m; ++g) {
                    const int slot = rng.below(num_parts + 1);  // one extra = outside all parts
                    if (slot < num_parts) parts[slot].goods.push_back(g);
                }
                v = Valuation::partition_matroid(m, std::move(parts));
                break;
            }
            case ValuationKind::GraphicMatroid: {
                const int num_vertices = rng.range(2, 4);
                std::vector<std::string> vertices;
                for (int x = 0; x < num_vertices; ++x) vertices.push_back("v" + std::to_string(x));
                std::vector<std::pair<int, int>> edges;
                for (int g = 0; g < m; ++g)
                    edges.emplace_back(rng.below(num_vertices), rng.below(num_vertices));
                v = Valuation::graphic_matroid(m, std::move(edges), std::move(vertices));
                break;
            }
            default:
                throw InputError("generator supports the constructive matroid kinds only");
        }
        const Rational w = config.weight_pool[rng.below(static_cast<int>(config.weight_pool.size()))];
        agents.push_back({i + 1, w, std::move(v)});
    }
    return Instance(std::move(labels), std::move(agents));
}

namespace {

struct ExpectedOptimum {
    int support = 0;
    long long product = 0;
};

struct UtilityClaim {
    long long expected = 0;
    bool at_least = false;  // misreport cases only bound the true utility below
};

// Checks the agent's utility on EVERY optimal allocation of `inst`, measured
// with the valuation from `measure_with` (the truthful one in lie scenarios).
bool check_all_optima_utility(const Instance& inst, const MnwOptimum& optimum,
                              const Instance& measure_with, int agent, const UtilityClaim& claim,
                              std::string* why) {
    bool ok = true;
    long long seen = -1;
    for_each_mnw_optimal(inst, kDefaultEnumerationBudget, optimum,
                         [&](const Allocation& alloc, const UtilityVector&) {
                             const long long u =
                                 measure_with.agent(agent).valuation.value(alloc.bundle(agent));
                             seen = u;
                             if (claim.at_least ? (u < claim.expected) : (u != claim.expected))
                                 ok = false;
                         });
    if (!ok && why) {
        std::ostringstream out;
        out << "agent " << agent + 1 << " got " << seen << ", expected "
            << (claim.at_least ? ">= " : "") << claim.expected;
        *why = out.str();
    }
    return ok;
}

struct GoldenCase {
    std::string name;
    Instance base;
    Instance modified;
    ExpectedOptimum base_optimum;
    ExpectedOptimum modified_optimum;
    int agent = 0;           // whose utility flips on every optimal allocation
    UtilityClaim before;     // in the base instance
    UtilityClaim after;      // in the modified instance
    // Lie scenarios optimize reported valuations but measure true ones.
    bool measure_after_with_base = false;
};

CounterexampleReport run_golden(const GoldenCase& g) {
    CounterexampleReport report{g.name, true, ""};
    std::ostringstream detail;

    const MnwResult base = brute_force_mnw(g.base);
    const MnwResult mod = brute_force_mnw(g.modified);
    if (base.optimum.support_size != g.base_optimum.support ||
        base.optimum.product != g.base_optimum.product) {
        report.reproduced = false;
        detail << "base optimum " << base.optimum.product << " (support "
               << base.optimum.support_size << "), expected " << g.base_optimum.product
               << " (support " << g.base_optimum.support << "); ";
    }
    if (mod.optimum.support_size != g.modified_optimum.support ||
        mod.optimum.product != g.modified_optimum.product) {
        report.reproduced = false;
        detail << "modified optimum " << mod.optimum.product << " (support "
               << mod.optimum.support_size << "), expected " << g.modified_optimum.product
               << " (support " << g.modified_optimum.support << "); ";
    }

    std::string why;
    if (!check_all_optima_utility(g.base, base.optimum, g.base, g.agent, g.before, &why)) {
        report.reproduced = false;
        detail << "base: " << why << "; ";
    }
    const Instance& measure = g.measure_after_with_base ? g.base : g.modified;
    if (!check_all_optima_utility(g.modified, mod.optimum, measure, g.agent, g.after, &why)) {
        report.reproduced = false;
        detail << "modified: " << why << "; ";
    }

    if (report.reproduced) {
        detail << "optimum " << base.optimum.product << " -> " << mod.optimum.product << ", agent "
               << g.agent + 1 << ": " << g.before.expected << " -> "
               << (g.after.at_least ? ">= " : "") << g.after.expected
               << " on every optimal allocation";
    }
    report.detail = detail.str();
    return report;
}

}  // namespace

std::vector<CounterexampleReport> run_counterexamples() {
    std::vector<CounterexampleReport> reports;

    // Binary XOS trio: agent 2's cap binds unless she holds both g6 and g10,
    // so the extra good flips agent 1 between utilities 5 and 6.
    reports.push_back(run_golden({.name = "xos_resource",
                                  .base = fixtures::xos_pair().without_good(9),
                                  .modified = fixtures::xos_pair(),
                                  .base_optimum = {2, 18},
                                  .modified_optimum = {2, 20},
                                  .agent = 0,
                                  .before = {6},
                                  .after = {5}}));
    reports.push_back(run_golden({.name = "xos_population",
                                  .base = fixtures::xos_pair(),
                                  .modified = fixtures::xos_pair_with_third_agent(),
                                  .base_optimum = {2, 20},
                                  .modified_optimum = {3, 18},
                                  .agent = 0,
                                  .before = {5},
                                  .after = {6}}));
    reports.push_back(run_golden({.name = "xos_strategyproofness",
                                  .base = fixtures::xos_pair(),
                                  .modified = fixtures::xos_pair_misreport(),
                                  .base_optimum = {2, 20},
                                  .modified_optimum = {2, 21},
                                  .agent = 0,
                                  .before = {5},
                                  .after = {6},
                                  .measure_after_with_base = true}));

    // Restricted additive trio.
    reports.push_back(run_golden({.name = "restricted_resource",
                                  .base = fixtures::restricted_resource_base(),
                                  .modified = fixtures::restricted_resource_extended(),
                                  .base_optimum = {3, 40},
                                  .modified_optimum = {3, 168},
                                  .agent = 1,
                                  .before = {5},
                                  .after = {4}}));
    reports.push_back(run_golden({.name = "restricted_population",
                                  .base = fixtures::restricted_population_base(),
                                  .modified = fixtures::restricted_population_extended(),
                                  .base_optimum = {2, 88},
                                  .modified_optimum = {3, 189},
                                  .agent = 1,
                                  .before = {8},
                                  .after = {9}}));
    reports.push_back(run_golden({.name = "restricted_strategyproofness",
                                  .base = fixtures::restricted_sp_truth(),
                                  .modified = fixtures::restricted_sp_lie(),
                                  .base_optimum = {2, 20},
                                  .modified_optimum = {2, 10},
                                  .agent = 0,
                                  .before = {4},
                                  .after = {5, true},
                                  .measure_after_with_base = true}));

    return reports;
}

}  // namespace fairdiv
