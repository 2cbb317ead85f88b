#ifndef FAIRDIV_AUDIT_HPP_
#define FAIRDIV_AUDIT_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "fairdiv/instance.hpp"
#include "fairdiv/welfare.hpp"

namespace fairdiv {

enum class Engine { Solver, Oracle };

const char* to_string(Engine engine);

struct AuditViolation {
    std::string note;
    std::vector<int> agents;  // offending agent positions
    Instance base_instance;
    Instance modified_instance;
    Allocation base_allocation;
    Allocation modified_allocation;
};

struct AuditVerdict {
    std::string property;
    long long tried = 0;
    std::vector<AuditViolation> violations;
    bool pass() const { return violations.empty(); }
};

// Runs the rule with and without `extra_good` (the base instance removes it)
// and flags any agent whose utility drops when the good is present.
AuditVerdict check_resource_monotonicity(const Instance& inst, int extra_good,
                                         const WelfareFunction& rule, Engine engine);

// Compares the full instance against the one with `removed_agent` dropped and
// flags any survivor whose utility is lower in the smaller instance.
AuditVerdict check_population_monotonicity(const Instance& inst, int removed_agent,
                                           const WelfareFunction& rule, Engine engine);

// Raises `agent`'s weight to `new_weight` and flags her if her utility drops.
// Works for any strictly increasing rule via the oracle engine; the solver
// engine additionally needs concavity.
AuditVerdict check_weight_monotonicity(const Instance& inst, int agent, const Rational& new_weight,
                                       const WelfareFunction& rule, Engine engine);

enum class MisreportSpace { BinaryAdditiveAll, MatroidAll };

// Enumerates every nonempty coalition and every joint misreport from the
// space; flags profiles where each member strictly gains under her true
// valuation.
AuditVerdict check_group_strategyproofness(const Instance& inst, const WelfareFunction& rule,
                                           MisreportSpace space, Engine engine);

struct DeviationOutcome {
    bool all_gain = false;
    UtilityVector truthful;   // true utilities under honest reports
    UtilityVector deviated;   // true utilities when the coalition misreports
};

// One specific coalition deviation. `reports` holds the coalition members'
// claimed valuations, aligned with `coalition` (ascending agent positions).
DeviationOutcome evaluate_group_deviation(const Instance& truth, const WelfareFunction& rule,
                                          const std::vector<int>& coalition,
                                          const std::vector<Valuation>& reports, Engine engine);

struct GeneratorConfig {
    std::uint64_t seed = 1;
    int n_min = 2, n_max = 3;
    int m_min = 3, m_max = 5;
    std::vector<ValuationKind> kinds = {ValuationKind::BinaryAdditive,
                                        ValuationKind::PartitionMatroid,
                                        ValuationKind::GraphicMatroid};
    std::vector<Rational> weight_pool = {Rational(1), Rational(1, 2), Rational(2), Rational(3)};
};

// Seeded and reproducible bit-for-bit; always yields matroid-rank valuations.
Instance random_instance(const GeneratorConfig& config);

struct CounterexampleReport {
    std::string name;
    bool reproduced = false;
    std::string detail;
};

// Replays the six bundled counterexample propositions against the exhaustive
// Nash-welfare oracle, checking the expected numbers on every optimal
// allocation.
std::vector<CounterexampleReport> run_counterexamples();

}  // namespace fairdiv

#endif  // FAIRDIV_AUDIT_HPP_
