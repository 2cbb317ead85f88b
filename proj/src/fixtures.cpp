#include "fairdiv/fixtures.hpp"

namespace fairdiv::fixtures {
namespace {

std::vector<std::string> labels(int m) {
    std::vector<std::string> out;
    for (int g = 0; g < m; ++g) out.push_back("g" + std::to_string(g + 1));
    return out;
}

// Binary XOS function capped at 3 unless the bundle holds both g6 and g10:
// one additive clause per 3-subset, plus clauses {x, y, g6, g10} for pairs
// x < y outside {g6, g10}.
Valuation capped_xos_agent() {
    const int m = 10;
    std::vector<std::vector<long long>> clauses;
    for (int x = 0; x < m; ++x)
        for (int y = x + 1; y < m; ++y)
            for (int z = y + 1; z < m; ++z) {
                std::vector<long long> clause(m, 0);
                clause[x] = clause[y] = clause[z] = 1;
                clauses.push_back(std::move(clause));
            }
    for (int x = 0; x < m; ++x) {
        if (x == 5 || x == 9) continue;
        for (int y = x + 1; y < m; ++y) {
            if (y == 5 || y == 9) continue;
            std::vector<long long> clause(m, 0);
            clause[x] = clause[y] = clause[5] = clause[9] = 1;
            clauses.push_back(std::move(clause));
        }
    }
    return Valuation::xos(m, std::move(clauses));
}

Instance additive_instance(int m, const std::vector<std::vector<long long>>& rows) {
    std::vector<Agent> agents;
    for (size_t i = 0; i < rows.size(); ++i)
        agents.push_back({static_cast<int>(i) + 1, Rational(1), Valuation::additive(m, rows[i])});
    return Instance(labels(m), std::move(agents));
}

}  // namespace

Instance xos_pair() {
    std::vector<Agent> agents;
    agents.push_back({1, Rational(1), Valuation::binary_additive(10, {0, 1, 2, 3, 4, 5})});
    agents.push_back({2, Rational(1), capped_xos_agent()});
    return Instance(labels(10), std::move(agents));
}

Instance xos_pair_with_third_agent() {
    std::vector<Agent> agents;
    agents.push_back({1, Rational(1), Valuation::binary_additive(10, {0, 1, 2, 3, 4, 5})});
    agents.push_back({2, Rational(1), capped_xos_agent()});
    agents.push_back({3, Rational(1), Valuation::binary_additive(10, {9})});
    return Instance(labels(10), std::move(agents));
}

Instance xos_pair_misreport() {
    std::vector<Agent> agents;
    agents.push_back({1, Rational(1), Valuation::binary_additive(10, {0, 1, 2, 3, 4, 5, 9})});
    agents.push_back({2, Rational(1), capped_xos_agent()});
    return Instance(labels(10), std::move(agents));
}

Instance restricted_resource_base() {
    return additive_instance(4, {{0, 1, 0, 3},
                                 {5, 1, 0, 3},
                                 {5, 0, 2, 0}});
}

Instance restricted_resource_extended() {
    return additive_instance(5, {{0, 1, 0, 3, 6},
                                 {5, 1, 0, 3, 0},
                                 {5, 0, 2, 0, 0}});
}

Instance restricted_population_base() {
    return additive_instance(4, {{5, 0, 2, 9},
                                 {5, 3, 0, 9}});
}

Instance restricted_population_extended() {
    return additive_instance(4, {{5, 0, 2, 9},
                                 {5, 3, 0, 9},
                                 {5, 3, 0, 0}});
}

Instance restricted_sp_truth() {
    return additive_instance(3, {{5, 2, 2},
                                 {5, 0, 2}});
}

Instance restricted_sp_lie() {
    return additive_instance(3, {{5, 0, 0},
                                 {5, 0, 2}});
}

Instance apportionment_four_goods() {
    std::vector<Agent> agents;
    agents.push_back({1, Rational(1), Valuation::binary_additive(4, {0, 1, 2, 3})});
    agents.push_back({2, Rational(1), Valuation::binary_additive(4, {0, 1, 2, 3})});
    return Instance(labels(4), std::move(agents));
}

Instance weighted_pair() {
    std::vector<Agent> agents;
    agents.push_back({1, Rational(1), Valuation::binary_additive(2, {0, 1})});
    agents.push_back({2, Rational(2), Valuation::binary_additive(2, {0, 1})});
    return Instance(labels(2), std::move(agents));
}

Instance weak_benefit_demo() {
    std::vector<Agent> agents;
    agents.push_back({1, Rational(1), Valuation::binary_additive(2, {0, 1})});
    agents.push_back({2, Rational(1), Valuation::binary_additive(2, {0})});
    agents.push_back({3, Rational(1), Valuation::binary_additive(2, {1})});
    return Instance(labels(2), std::move(agents));
}

std::vector<std::pair<std::string, Instance>> all() {
    return {
        {"xos_pair", xos_pair()},
        {"xos_pair_with_third_agent", xos_pair_with_third_agent()},
        {"xos_pair_misreport", xos_pair_misreport()},
        {"restricted_resource_base", restricted_resource_base()},
        {"restricted_resource_extended", restricted_resource_extended()},
        {"restricted_population_base", restricted_population_base()},
        {"restricted_population_extended", restricted_population_extended()},
        {"restricted_sp_truth", restricted_sp_truth()},
        {"restricted_sp_lie", restricted_sp_lie()},
        {"apportionment_four_goods", apportionment_four_goods()},
        {"weighted_pair", weighted_pair()},
        {"weak_benefit_demo", weak_benefit_demo()},
    };
}

}  // namespace fairdiv::fixtures
