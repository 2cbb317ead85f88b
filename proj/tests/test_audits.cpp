#include <doctest.h>

#include "fairdiv/audit.hpp"
#include "fairdiv/catalog.hpp"
#include "fairdiv/fixtures.hpp"
#include "fairdiv/json_io.hpp"
#include "test_helpers.hpp"

using namespace fairdiv;
using test::make_instance;

TEST_CASE("resource monotonicity audit") {
    // The capped-agent instance drops agent 1 from 6 to 5 when g10 arrives.
    const auto verdict = check_resource_monotonicity(fixtures::xos_pair(), 9,
                                                     WelfareFunction::mwnw(), Engine::Oracle);
    REQUIRE(verdict.violations.size() == 1);
    CHECK(verdict.violations.front().agents == std::vector<int>{0});

    // Concave rules on matroid-rank instances never trip it.
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        const auto inst = random_instance(test::small_config(seed));
        const auto clean = check_resource_monotonicity(inst, static_cast<int>(seed) % inst.num_goods(),
                                                       WelfareFunction::mwnw(), Engine::Solver);
        CHECK(clean.pass());
    }

    // A good nobody values leaves the vector unchanged.
    const auto inert = make_instance({Valuation::binary_additive(3, {0}),
                                      Valuation::binary_additive(3, {1})});
    CHECK(check_resource_monotonicity(inert, 2, WelfareFunction::mwhw(3), Engine::Solver).pass());
}

TEST_CASE("population monotonicity audit") {
    const auto verdict = check_population_monotonicity(
        fixtures::xos_pair_with_third_agent(), 2, WelfareFunction::mwnw(), Engine::Oracle);
    REQUIRE(verdict.violations.size() == 1);
    CHECK(verdict.violations.front().agents == std::vector<int>{0});

    for (std::uint64_t seed = 41; seed <= 80; ++seed) {
        const auto inst = random_instance(test::small_config(seed));
        const auto clean = check_population_monotonicity(
            inst, static_cast<int>(seed) % inst.num_agents(), WelfareFunction::mwhw(8),
            Engine::Solver);
        CHECK(clean.pass());
    }

    const auto indifferent = make_instance({Valuation::binary_additive(2, {0, 1}),
                                            Valuation::binary_additive(2, {})});
    CHECK(check_population_monotonicity(indifferent, 1, WelfareFunction::mwnw(), Engine::Solver)
              .pass());
}

TEST_CASE("weight monotonicity audit") {
    for (std::uint64_t seed = 81; seed <= 120; ++seed) {
        const auto inst = random_instance(test::small_config(seed));
        const int agent = static_cast<int>(seed) % inst.num_agents();
        const auto verdict = check_weight_monotonicity(
            inst, agent, inst.agent(agent).weight * 3, WelfareFunction::mwnw(), Engine::Solver);
        CHECK(verdict.pass());
    }

    const auto lazy = make_instance({Valuation::binary_additive(2, {0, 1}),
                                     Valuation::binary_additive(2, {})});
    const auto before = solve(lazy, WelfareFunction::mwnw()).utilities;
    CHECK(check_weight_monotonicity(lazy, 1, Rational(5), WelfareFunction::mwnw(), Engine::Solver)
              .pass());
    CHECK(solve(lazy.with_weight(1, Rational(5)), WelfareFunction::mwnw()).utilities == before);

    // Weight monotonicity only needs a strictly increasing f; audit the
    // non-concave staircase through the oracle.
    const auto staircase =
        WelfareFunction::custom({Rational(0), Rational(1), Rational(3), Rational(4), Rational(5),
                                 Rational(6), Rational(7), Rational(8), Rational(9)});
    for (std::uint64_t seed = 121; seed <= 150; ++seed) {
        const auto inst = random_instance(test::small_config(seed, 2, 3));
        const int agent = static_cast<int>(seed) % inst.num_agents();
        const auto verdict = check_weight_monotonicity(inst, agent,
                                                       inst.agent(agent).weight * 2, staircase,
                                                       Engine::Oracle);
        CHECK(verdict.pass());
    }
    CHECK_THROWS_AS(check_weight_monotonicity(lazy, 0, Rational(2), staircase, Engine::Solver),
                    ValidationError);
    CHECK_THROWS_AS(check_weight_monotonicity(lazy, 0, Rational(1), WelfareFunction::mwnw(),
                                              Engine::Solver),
                    InputError);
}

TEST_CASE("a single coalition deviation is measured under true valuations") {
    // Claiming the tenth good pays off for agent 1 in the capped instance.
    std::vector<Valuation> lie = {Valuation::binary_additive(10, {0, 1, 2, 3, 4, 5, 9})};
    const auto outcome = evaluate_group_deviation(fixtures::xos_pair(), WelfareFunction::mwnw(),
                                                  {0}, lie, Engine::Oracle);
    CHECK(outcome.all_gain);
    CHECK(outcome.truthful[0] == 5);
    CHECK(outcome.deviated[0] == 6);

    // Reporting the truth is never a strict improvement.
    const auto pair = fixtures::weighted_pair();
    std::vector<Valuation> honest = {pair.agent(0).valuation, pair.agent(1).valuation};
    const auto same = evaluate_group_deviation(pair, WelfareFunction::mwnw(), {0, 1}, honest,
                                               Engine::Solver);
    CHECK_FALSE(same.all_gain);
    CHECK(same.truthful == same.deviated);
}

TEST_CASE("the weak-benefit variant fails on the demonstration fixture") {
    // Agents 1 and 3 jointly deviate: agent 1 hands over her duplicate claim,
    // agent 3 picks up a unit. Agent 1 is no worse, agent 3 strictly gains,
    // so the weak-benefit version of group-strategyproofness cannot hold.
    // No member gains STRICTLY across the board, so the audited theorem is
    // untouched.
    const auto truth = fixtures::weak_benefit_demo();
    std::vector<Valuation> reports = {Valuation::binary_additive(2, {0}),
                                      Valuation::binary_additive(2, {0, 1})};
    const auto outcome = evaluate_group_deviation(truth, WelfareFunction::mwnw(), {0, 2}, reports,
                                                  Engine::Solver);
    CHECK(outcome.truthful == UtilityVector{1, 1, 0});
    CHECK(outcome.deviated[0] == outcome.truthful[0]);  // weakly better
    CHECK(outcome.deviated[2] > outcome.truthful[2]);   // strictly better
    CHECK_FALSE(outcome.all_gain);

    // And indeed the strict audit over all binary-additive misreports of this
    // instance stays clean.
    const auto verdict = check_group_strategyproofness(truth, WelfareFunction::mwnw(),
                                                       MisreportSpace::BinaryAdditiveAll,
                                                       Engine::Solver);
    CHECK(verdict.pass());
}

TEST_CASE("exhaustive binary-additive misreports on a small instance") {
    const auto inst = make_instance({Valuation::binary_additive(2, {0, 1}),
                                     Valuation::binary_additive(2, {0})},
                                    {Rational(1), Rational(2)});
    const auto verdict = check_group_strategyproofness(inst, WelfareFunction::mwnw(),
                                                       MisreportSpace::BinaryAdditiveAll,
                                                       Engine::Solver);
    CHECK(verdict.pass());
    // S={1}: 4, S={2}: 4, S={1,2}: 16 joint profiles.
    CHECK(verdict.tried == 24);

    CHECK_THROWS_AS(check_group_strategyproofness(fixtures::xos_pair(), WelfareFunction::mwnw(),
                                                  MisreportSpace::BinaryAdditiveAll, Engine::Oracle),
                    CapacityError);
}

TEST_CASE("misreport catalogs") {
    CHECK(all_binary_additive_valuations(3).size() == 8);

    // Two independent routes to the rank-function catalog: constrained
    // enumeration plus submodularity filter, and a full scan of bounded
    // tables filtered through the axiom validator.
    for (int m = 1; m <= 3; ++m) {
        const auto catalog = all_matroid_rank_valuations(m);
        for (const auto& v : catalog) CHECK(validate_matroid_rank(v).valid);

        long long by_scan = 0;
        const unsigned full = 1u << m;
        std::vector<long long> table(full, 0);
        const long long cells = full - 1;
        long long combos = 1;
        for (long long c = 0; c < cells; ++c) combos *= m + 1;
        for (long long code = 0; code < combos; ++code) {
            long long rest = code;
            for (unsigned mask = 1; mask < full; ++mask) {
                table[mask] = rest % (m + 1);
                rest /= m + 1;
            }
            bool ok = true;
            for (unsigned mask = 1; mask < full && ok; ++mask)
                for (int g = 0; g < m && ok; ++g)
                    if (mask & (1u << g)) {
                        const long long d = table[mask] - table[mask & ~(1u << g)];
                        ok = d == 0 || d == 1;
                    }
            if (!ok) continue;
            if (validate_matroid_rank(Valuation::explicit_table(m, table)).valid) ++by_scan;
        }
        CHECK(static_cast<long long>(catalog.size()) == by_scan);
    }

    // Frozen sizes from the scan above.
    CHECK(all_matroid_rank_valuations(1).size() == 2);
    CHECK(all_matroid_rank_valuations(2).size() == 5);
    CHECK(all_matroid_rank_valuations(3).size() == 16);
}

TEST_CASE("scaling every weight leaves the solver unchanged") {
    const std::vector<Rational> scales = {Rational(3), Rational(2, 7)};
    for (std::uint64_t seed = 200; seed <= 230; ++seed) {
        const auto inst = random_instance(test::small_config(seed));
        const auto rule = seed % 2 ? WelfareFunction::mwnw() : WelfareFunction::mwhw(8);
        const auto base = solve(inst, rule).utilities;
        for (const auto& scale : scales) {
            Instance scaled = inst;
            for (int i = 0; i < inst.num_agents(); ++i)
                scaled = scaled.with_weight(i, inst.agent(i).weight * scale);
            CHECK(solve(scaled, rule).utilities == base);
        }
    }
}

TEST_CASE("seeded generation is reproducible and valid") {
    const auto config = test::small_config(7);
    const auto a = random_instance(config);
    const auto b = random_instance(config);
    CHECK(instance_to_json(a) == instance_to_json(b));

    int distinct = 0;
    Json previous;
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        auto cfg = test::small_config(seed);
        const auto inst = random_instance(cfg);
        for (int i = 0; i < inst.num_agents(); ++i)
            CHECK(validate_matroid_rank(inst.agent(i).valuation).valid);
        Json now = instance_to_json(inst);
        if (now != previous) ++distinct;
        previous = std::move(now);
    }
    CHECK(distinct >= 24);
}

TEST_CASE("the restricted-additive counterexamples reproduce") {
    const auto reports = run_counterexamples();
    REQUIRE(reports.size() == 6);
    for (const auto& r : reports) {
        if (r.name.rfind("restricted_", 0) == 0) {
            INFO(r.name, ": ", r.detail);
            CHECK(r.reproduced);
        }
    }
}
