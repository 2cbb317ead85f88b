#include <doctest.h>

#include "fairdiv/fixtures.hpp"
#include "fairdiv/oracle.hpp"
#include "fairdiv/solver.hpp"
#include "test_helpers.hpp"

using namespace fairdiv;
using test::make_instance;

TEST_CASE("one incremental step") {
    // Agent 1 wants both goods, agent 2 only the first; adding b reroutes a.
    const auto inst = make_instance({Valuation::binary_additive(2, {0, 1}),
                                     Valuation::binary_additive(2, {0})});
    const Allocation holding(2, {{0}, {}});
    auto [next, record] = add_one_good(inst, holding, 1, WelfareFunction::mwnw());

    REQUIRE(record.candidates.size() == 2);
    CHECK(record.candidates[0].agent == 0);
    CHECK(record.candidates[0].path == Path{1});
    CHECK(record.candidates[0].projected == UtilityVector{2, 0});
    CHECK(record.candidates[1].agent == 1);
    CHECK(record.candidates[1].path == Path{0, 1});
    CHECK(record.candidates[1].projected == UtilityVector{1, 1});

    REQUIRE(record.selected.has_value());
    CHECK(record.selected->agent == 1);
    CHECK(next.bundle(0) == std::vector<int>{1});
    CHECK(next.bundle(1) == std::vector<int>{0});
    CHECK(brute_force_opt(inst, WelfareFunction::mwnw()).vector == UtilityVector{1, 1});

    // Nobody values the new good: it stays unallocated.
    const auto narrow = make_instance({Valuation::binary_additive(2, {0}),
                                       Valuation::binary_additive(2, {0})});
    auto [same, rec2] = add_one_good(narrow, Allocation(2, {{0}, {}}), 1, WelfareFunction::mwnw());
    CHECK_FALSE(rec2.selected.has_value());
    CHECK(same.bundle(0) == std::vector<int>{0});
    CHECK(same.unallocated(2) == std::vector<int>{1});

    // A welfare tie between (2,1) and (1,2) goes to the lower index.
    const auto wide = make_instance({Valuation::binary_additive(4, {0, 1, 2, 3}),
                                     Valuation::binary_additive(4, {0, 1, 2, 3})});
    auto [after, rec3] =
        add_one_good(wide.prefix(3), Allocation(2, {{0}, {1}}), 2, WelfareFunction::mwnw());
    REQUIRE(rec3.selected.has_value());
    CHECK(rec3.selected->agent == 0);
    CHECK(utility_vector(wide.prefix(3), after) == UtilityVector{2, 1});
    CHECK(brute_force_opt(wide.prefix(3), WelfareFunction::mwnw()).vector == UtilityVector{2, 1});

    CHECK_THROWS_AS(add_one_good(inst, Allocation(2, {{0, 1}, {}}), 1, WelfareFunction::mwnw()),
                    PreconditionError);
}

TEST_CASE("full solve on the bundled fixtures") {
    // Four identical goods, equal weights: split as evenly as possible.
    const auto split = solve(fixtures::apportionment_four_goods(), WelfareFunction::mwnw());
    CHECK(split.utilities == UtilityVector{2, 2});

    // Weights 1 and 2 over two universally liked goods: the -inf screen
    // forces one good each under mwnw.
    const auto pair = fixtures::weighted_pair();
    CHECK(solve(pair, WelfareFunction::mwnw()).utilities == UtilityVector{1, 1});
    // Under mwhw the welfare ties at 3 and the lexicographic layer keeps (1,1).
    CHECK(solve(pair, WelfareFunction::mwhw(2)).utilities == UtilityVector{1, 1});

    // A lone agent simply takes every good with marginal value.
    const auto solo = make_instance({Valuation::partition_matroid(3, {{{0, 1}, 1}, {{2}, 1}})});
    const auto result = solve(solo, WelfareFunction::mwhw(3));
    CHECK(result.utilities == UtilityVector{2});
    CHECK(result.allocation.bundle(0).size() == 2);
}

TEST_CASE("solver rejects what it cannot handle") {
    const auto pair = fixtures::weighted_pair();
    CHECK_THROWS_AS(solve(pair, WelfareFunction::custom({Rational(0), Rational(1), Rational(3)})),
                    ValidationError);  // not concave
    CHECK_THROWS_AS(solve(fixtures::restricted_sp_truth(), WelfareFunction::mwnw()),
                    UnsupportedKindError);  // additive valuations
    CHECK_THROWS_AS(solve(pair, WelfareFunction::mwhw(1)), CapacityError);  // table too short

    // A broken explicit table is caught by the up-front validation.
    const auto broken = make_instance({Valuation::explicit_table(2, {0, 2, 1, 2})});
    CHECK_THROWS_AS(solve(broken, WelfareFunction::mwnw()), ValidationError);
}

TEST_CASE("the held allocation stays optimal after every step") {
    const std::vector<WelfareFunction> rules = {WelfareFunction::mwnw(), WelfareFunction::mwhw(8)};
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        const auto inst = random_instance(test::small_config(seed));
        for (const auto& rule : rules) {
            const auto result = solve(inst, rule);
            for (int t = 1; t <= inst.num_goods(); ++t) {
                const auto prefix = inst.prefix(t);
                const auto expected = brute_force_opt(prefix, rule).vector;
                CHECK(result.trace.iterations[t - 1].utilities_after == expected);
            }
        }
    }
}

TEST_CASE("per-step structure of a run") {
    for (std::uint64_t seed = 30; seed <= 60; ++seed) {
        const auto inst = random_instance(test::small_config(seed, 3, 7));
        const auto result = solve(inst, WelfareFunction::mwnw());

        UtilityVector previous(inst.num_agents(), 0);
        for (const auto& record : result.trace.iterations) {
            // Either nothing changes or exactly one agent gains one unit.
            long long gained = 0;
            for (size_t i = 0; i < previous.size(); ++i) {
                const long long delta = record.utilities_after[i] - previous[i];
                CHECK(delta >= 0);  // utilities never regress across steps
                gained += delta;
            }
            CHECK(gained == (record.selected.has_value() ? 1 : 0));
            previous = record.utilities_after;
        }

        // The final allocation is non-redundant and no marginal-1 good is
        // left unallocated.
        CHECK(is_non_redundant(inst, result.allocation));
        for (int i = 0; i < inst.num_agents(); ++i) {
            const auto wanted = inst.agent(i).valuation.f_set(result.allocation.bundle(i));
            for (int g : result.allocation.unallocated(inst.num_goods())) {
                CHECK(!std::binary_search(wanted.begin(), wanted.end(), g));
            }
        }
    }
}
