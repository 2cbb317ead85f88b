#include <doctest.h>

#include <algorithm>

#include "fairdiv/fixtures.hpp"
#include "fairdiv/valuation.hpp"
#include "test_helpers.hpp"

using namespace fairdiv;
using test::bundle_from_mask;

namespace {

Valuation two_part_matroid() {
    // parts {g1,g2}/cap 1 and {g3}/cap 1
    return Valuation::partition_matroid(3, {{{0, 1}, 1}, {{2}, 1}});
}

Valuation triangle_graphic() {
    // e1=(u,v), e2=(v,w), e3=(w,u)
    return Valuation::graphic_matroid(3, {{0, 1}, {1, 2}, {2, 0}}, {"u", "v", "w"});
}

}  // namespace

TEST_CASE("bundle values per kind") {
    const auto binary = Valuation::binary_additive(3, {0, 1});
    CHECK(binary.value(std::vector<int>{0, 2}) == 1);
    CHECK(binary.value(std::vector<int>{}) == 0);

    // Agent 2 of the xos fixture on {g1,g2,g3,g6,g10}: above the cap with
    // both special goods present.
    const auto pair = fixtures::xos_pair();
    const auto& v2 = pair.agent(1).valuation;
    CHECK(v2.value(std::vector<int>{0, 1, 2, 5, 9}) == 4);
    CHECK(v2.value(std::vector<int>{0, 1, 2, 5}) == 3);
    CHECK(v2.value(std::vector<int>{5, 9}) == 2);

    const auto partition = two_part_matroid();
    // Independent check: sum of min(|bundle ∩ part|, capacity) per part.
    const std::vector<int> bundle{0, 1, 2};
    long long expected = std::min<long long>(2, 1) + std::min<long long>(1, 1);
    CHECK(expected == 2);
    CHECK(partition.value(bundle) == expected);

    const auto triangle = triangle_graphic();
    CHECK(triangle.value(std::vector<int>{0, 1, 2}) == 2);  // one cycle
    CHECK(triangle.value(std::vector<int>{0, 1}) == 2);

    const auto add = Valuation::additive(2, {5, 0});
    CHECK(add.value(std::vector<int>{0, 1}) == 5);

    CHECK_THROWS_AS(binary.value(std::vector<int>{7}), InputError);
}

TEST_CASE("marginal-1 sets") {
    const auto binary = Valuation::binary_additive(2, {0, 1});
    CHECK(binary.f_set(std::vector<int>{}) == std::vector<int>{0, 1});
    CHECK(binary.f_set(std::vector<int>{0}) == std::vector<int>{1});

    const auto partition = two_part_matroid();
    // Brute-force marginals as the reference.
    std::vector<int> expected;
    for (int g = 1; g < 3; ++g)
        if (partition.marginal(std::vector<int>{0}, g) == 1) expected.push_back(g);
    CHECK(expected == std::vector<int>{2});
    CHECK(partition.f_set(std::vector<int>{0}) == expected);
}

TEST_CASE("f_set is empty exactly when no marginal-1 good exists") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        const auto inst = random_instance(test::small_config(seed));
        const auto& v = inst.agent(0).valuation;
        const int m = v.num_goods();
        for (unsigned mask = 0; mask < (1u << m); mask += 3) {
            const auto bundle = bundle_from_mask(mask, m);
            bool any = false;
            for (int g = 0; g < m; ++g)
                if (!(mask & (1u << g)) && v.marginal(bundle, g) == 1) any = true;
            CHECK(v.f_set(bundle).empty() == !any);
        }
    }
}

TEST_CASE("restriction agrees pointwise on kept subsets") {
    const auto binary = Valuation::binary_additive(2, {0, 1});
    const auto restricted = binary.restricted(std::vector<int>{0});
    CHECK(restricted.kind() == ValuationKind::BinaryAdditive);
    CHECK(restricted.approved_goods() == std::vector<int>{0});

    // A triangle with one edge removed is acyclic: rank == size.
    const auto path_graph = triangle_graphic().restricted(std::vector<int>{0, 1});
    for (unsigned mask = 0; mask < 4; ++mask)
        CHECK(path_graph.value(bundle_from_mask(mask, 2)) == __builtin_popcount(mask));

    const auto table = Valuation::explicit_table(2, {0, 1, 1, 2});
    const auto same = table.restricted(std::vector<int>{0, 1});
    CHECK(same.explicit_values() == table.explicit_values());

    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const auto inst = random_instance(test::small_config(seed, 2, 6));
        const auto& v = inst.agent(1).valuation;
        const int m = v.num_goods();
        std::vector<int> kept;
        for (int g = 0; g < m; g += 2) kept.push_back(g);
        const auto r = v.restricted(kept);
        const int k = static_cast<int>(kept.size());
        for (unsigned mask = 0; mask < (1u << k); ++mask) {
            std::vector<int> original;
            for (int i = 0; i < k; ++i)
                if (mask & (1u << i)) original.push_back(kept[i]);
            CHECK(r.value(bundle_from_mask(mask, k)) == v.value(original));
        }
    }
}

TEST_CASE("matroid axioms hold for the constructive kinds") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        const auto inst = random_instance(test::small_config(seed, 3, 8));
        for (int i = 0; i < inst.num_agents(); ++i) {
            const auto report = validate_matroid_rank(inst.agent(i).valuation);
            CHECK(report.valid);
        }
    }
}

TEST_CASE("validation pinpoints the broken axiom") {
    CHECK(validate_matroid_rank(Valuation::binary_additive(4, {1, 2})).valid);

    // The capped fixture function is binary and monotone but not submodular;
    // the first witness lands on {g1,g2,g3} with g6 against g10.
    const auto pair = fixtures::xos_pair();
    const auto report = validate_matroid_rank(pair.agent(1).valuation);
    CHECK_FALSE(report.valid);
    REQUIRE(report.violations.size() == 1);
    const auto& w = report.violations.front();
    CHECK(w.axiom == "submodular");
    CHECK(w.set_a == std::vector<int>{0, 1, 2});
    CHECK(w.good == 5);
    CHECK(w.set_b == std::vector<int>{0, 1, 2, 9});

    const auto binary_broken = validate_matroid_rank(Valuation::explicit_table(1, {0, 2}));
    CHECK_FALSE(binary_broken.valid);
    REQUIRE(!binary_broken.violations.empty());
    CHECK(binary_broken.violations.front().axiom == "binary");

    const auto monotone_broken = validate_matroid_rank(Valuation::explicit_table(2, {0, 1, 1, 0}));
    CHECK_FALSE(monotone_broken.valid);
    bool found_monotone = false;
    for (const auto& v : monotone_broken.violations) found_monotone |= v.axiom == "monotone";
    CHECK(found_monotone);

    const auto unnormalized = validate_matroid_rank(Valuation::explicit_table(1, {1, 2}));
    CHECK_FALSE(unnormalized.valid);
    CHECK(unnormalized.violations.front().axiom == "normalized");

    CHECK_THROWS_AS(validate_matroid_rank(Valuation::binary_additive(17, {})), CapacityError);
}

TEST_CASE("explicit table built from the capped case formula") {
    std::vector<long long> table(1u << 10);
    for (unsigned mask = 0; mask < table.size(); ++mask) table[mask] = test::capped_case_value(mask);
    const auto direct = Valuation::explicit_table(10, table);

    // The xos encoding realizes the same function on every subset.
    const auto pair = fixtures::xos_pair();
    const auto& encoded = pair.agent(1).valuation;
    for (unsigned mask = 0; mask < table.size(); ++mask) {
        const auto bundle = bundle_from_mask(mask, 10);
        CHECK(encoded.value(bundle) == table[mask]);
    }

    const auto report = validate_matroid_rank(direct);
    CHECK_FALSE(report.valid);
    REQUIRE(report.violations.size() == 1);
    CHECK(report.violations.front().axiom == "submodular");
}

TEST_CASE("restricted additive detection") {
    std::vector<Valuation> base;
    base.push_back(Valuation::additive(4, {0, 1, 0, 3}));
    base.push_back(Valuation::additive(4, {5, 1, 0, 3}));
    base.push_back(Valuation::additive(4, {5, 0, 2, 0}));
    CHECK(validate_restricted_additive(base).ok);

    std::vector<Valuation> clash;
    clash.push_back(Valuation::additive(1, {2}));
    clash.push_back(Valuation::additive(1, {3}));
    const auto report = validate_restricted_additive(clash);
    CHECK_FALSE(report.ok);
    CHECK(report.witness_good == 0);
    CHECK(report.clashing_values == std::vector<long long>{2, 3});

    CHECK(validate_restricted_additive({Valuation::additive(3, {7, 0, 9})}).ok);

    std::vector<Valuation> wrong_kind;
    wrong_kind.push_back(Valuation::binary_additive(2, {0}));
    CHECK_THROWS_AS(validate_restricted_additive(wrong_kind), InputError);
}

TEST_CASE("construction guards") {
    CHECK_THROWS_AS(Valuation::explicit_table(13, std::vector<long long>(1ull << 13, 0)),
                    CapacityError);
    CHECK_THROWS_AS(Valuation::partition_matroid(2, {{{0}, 1}, {{0}, 1}}), InputError);
    CHECK_THROWS_AS(Valuation::additive(2, {1}), InputError);
    CHECK_THROWS_AS(Valuation::xos(2, {{1, -1}}), InputError);
}
