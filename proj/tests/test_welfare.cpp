#include <doctest.h>

#include <cmath>

#include "fairdiv/welfare.hpp"
#include "test_helpers.hpp"

using namespace fairdiv;
using test::make_instance;

namespace {

Instance two_agents(Rational w1, Rational w2, int m = 4) {
    std::vector<int> all;
    for (int g = 0; g < m; ++g) all.push_back(g);
    return make_instance({Valuation::binary_additive(m, all), Valuation::binary_additive(m, all)},
                         {w1, w2});
}

std::vector<UtilityVector> all_vectors(int n, long long max_entry) {
    std::vector<UtilityVector> out;
    UtilityVector u(n, 0);
    while (true) {
        out.push_back(u);
        int i = 0;
        while (i < n && u[i] == max_entry) u[i++] = 0;
        if (i == n) break;
        ++u[i];
    }
    return out;
}

}  // namespace

TEST_CASE("rule construction") {
    const auto harmonic = WelfareFunction::mwhw(3);
    CHECK(harmonic.f_finite(0) == Rational(0));
    CHECK(harmonic.f_finite(1) == Rational(1));
    CHECK(harmonic.f_finite(2) == Rational(3, 2));
    CHECK(harmonic.f_finite(3) == Rational(11, 6));
    CHECK(harmonic.concave());
    CHECK_FALSE(harmonic.f0_neg_inf());

    const auto nash = WelfareFunction::mwnw();
    CHECK(nash.f0_neg_inf());
    CHECK(nash.concave());
    CHECK(nash.domain_max() == -1);

    CHECK_THROWS_AS(WelfareFunction::custom({Rational(0), Rational(1), Rational(1)}),
                    ValidationError);
    CHECK_THROWS_AS(WelfareFunction::custom({Rational(0), std::nullopt, Rational(2)}),
                    ValidationError);

    const auto staircase = WelfareFunction::custom({Rational(0), Rational(1), Rational(3), Rational(4)});
    CHECK_FALSE(staircase.concave());
    CHECK(staircase.domain_max() == 3);
    CHECK_THROWS_AS(staircase.f_finite(4), InputError);

    const auto log_like =
        WelfareFunction::custom({std::nullopt, Rational(0), Rational(1, 2), Rational(3, 4)});
    CHECK(log_like.f0_neg_inf());
    CHECK(log_like.concave());
}

TEST_CASE("welfare evaluation") {
    const auto even = two_agents(1, 1);
    CHECK(evaluate(even, {1, 1}, WelfareFunction::mwhw(4)).rational() == Rational(2));

    const auto skewed = two_agents(1, 2);
    CHECK(evaluate(skewed, {0, 2}, WelfareFunction::mwnw()).kind() ==
          WelfareValue::Kind::NegInfinity);

    // Unweighted product comparison: 4*5*2 = 40 against 6*5*2 = 60.
    const auto trio = make_instance({Valuation::binary_additive(8, {0, 1, 2, 3, 4, 5, 6, 7}),
                                     Valuation::binary_additive(8, {0, 1, 2, 3, 4, 5, 6, 7}),
                                     Valuation::binary_additive(8, {0, 1, 2, 3, 4, 5, 6, 7})});
    const auto a = evaluate(trio, {4, 5, 2}, WelfareFunction::mwnw());
    const auto b = evaluate(trio, {6, 5, 2}, WelfareFunction::mwnw());
    CHECK(WelfareValue::compare(a, b) < 0);

    CHECK_THROWS_AS(evaluate(even, {5, 0}, WelfareFunction::mwhw(4)), InputError);
}

TEST_CASE("outcome comparison covers every tier") {
    const auto skewed = two_agents(1, 2);

    // A positive vector beats a -inf one outright under mwnw.
    CHECK(compare_outcomes(skewed, WelfareFunction::mwnw(), {1, 1}, {0, 2}) ==
          Ordering::FirstPreferred);

    // Under mwhw the welfare ties at 3; the lexicographic layer decides.
    const auto harmonic = WelfareFunction::mwhw(4);
    CHECK(evaluate(skewed, {1, 1}, harmonic).rational() == Rational(3));
    CHECK(evaluate(skewed, {0, 2}, harmonic).rational() == Rational(3));
    CHECK(compare_outcomes(skewed, harmonic, {1, 1}, {0, 2}) == Ordering::FirstPreferred);

    // Both -inf with one positive agent each: the lower-index support wins.
    const auto single = two_agents(1, 1, 1);
    CHECK(compare_outcomes(single, WelfareFunction::mwnw(), {1, 0}, {0, 1}) ==
          Ordering::FirstPreferred);

    // Equal same-size supports fall through to the support-restricted welfare.
    const auto trio = make_instance({Valuation::binary_additive(6, {0, 1, 2, 3, 4, 5}),
                                     Valuation::binary_additive(6, {0, 1, 2, 3, 4, 5}),
                                     Valuation::binary_additive(6, {})});
    CHECK(compare_outcomes(trio, WelfareFunction::mwnw(), {2, 3, 0}, {2, 2, 0}) ==
          Ordering::FirstPreferred);
    // Larger support beats a richer smaller one.
    CHECK(compare_outcomes(trio, WelfareFunction::mwnw(), {1, 1, 0}, {6, 0, 0}) ==
          Ordering::FirstPreferred);
}

TEST_CASE("the order is total, antisymmetric, and transitive on small domains") {
    const std::vector<WelfareFunction> rules = {
        WelfareFunction::mwnw(), WelfareFunction::mwhw(4),
        WelfareFunction::custom({std::nullopt, Rational(0), Rational(2), Rational(3), Rational(7, 2)})};

    const auto pair = two_agents(1, Rational(1, 2));
    const auto pair_vectors = all_vectors(2, 4);
    for (const auto& rule : rules) {
        for (const auto& u : pair_vectors) {
            for (const auto& v : pair_vectors) {
                const auto uv = compare_outcomes(pair, rule, u, v);
                const auto vu = compare_outcomes(pair, rule, v, u);
                if (u == v) {
                    CHECK(uv == Ordering::Equal);
                } else {
                    CHECK(uv != Ordering::Equal);
                    CHECK(vu != uv);
                }
            }
        }
    }

    const auto trio = make_instance({Valuation::binary_additive(2, {0, 1}),
                                     Valuation::binary_additive(2, {0, 1}),
                                     Valuation::binary_additive(2, {0, 1})},
                                    {Rational(1), Rational(1, 2), Rational(2)});
    const auto trio_vectors = all_vectors(3, 2);
    for (const auto& rule : rules) {
        auto rank_less = [&](const UtilityVector& x, const UtilityVector& y) {
            return compare_outcomes(trio, rule, x, y) == Ordering::SecondPreferred;
        };
        for (const auto& a : trio_vectors)
            for (const auto& b : trio_vectors)
                for (const auto& c : trio_vectors)
                    if (rank_less(a, b) && rank_less(b, c)) CHECK(rank_less(a, c));
    }
}

TEST_CASE("exact products agree with high-precision floating comparison") {
    const std::vector<Rational> weights = {Rational(1), Rational(1, 2), Rational(2), Rational(3)};
    std::uint64_t x = 99;
    for (int round = 0; round < 300; ++round) {
        x = x * 6364136223846793005ull + 1442695040888963407ull;
        const int n = 2 + static_cast<int>((x >> 40) % 3);
        std::vector<Valuation> vals;
        std::vector<Rational> w;
        UtilityVector u(n), v(n);
        for (int i = 0; i < n; ++i) {
            x = x * 6364136223846793005ull + 1442695040888963407ull;
            w.push_back(weights[(x >> 35) % weights.size()]);
            u[i] = 1 + static_cast<long long>((x >> 20) % 9);
            v[i] = 1 + static_cast<long long>((x >> 50) % 9);
            vals.push_back(Valuation::binary_additive(9, {0, 1, 2, 3, 4, 5, 6, 7, 8}));
        }
        const auto inst = make_instance(std::move(vals), w);
        const auto lhs = evaluate(inst, u, WelfareFunction::mwnw());
        const auto rhs = evaluate(inst, v, WelfareFunction::mwnw());
        long double su = 0, sv = 0;
        for (int i = 0; i < n; ++i) {
            const long double wi = static_cast<long double>(numerator(w[i]).convert_to<double>()) /
                                   static_cast<long double>(denominator(w[i]).convert_to<double>());
            su += wi * std::log(static_cast<long double>(u[i]));
            sv += wi * std::log(static_cast<long double>(v[i]));
        }
        if (std::abs(static_cast<double>(su - sv)) > 1e-9) {
            const int sign = su > sv ? 1 : -1;
            CHECK(WelfareValue::compare(lhs, rhs) == sign);
        }
    }
}

TEST_CASE("scaling all weights never changes the order") {
    const std::vector<Rational> scales = {Rational(2), Rational(1, 3), Rational(7, 5)};
    const auto rules = {WelfareFunction::mwnw(), WelfareFunction::mwhw(4)};
    const auto base = two_agents(1, Rational(3, 2));
    const auto vectors = all_vectors(2, 4);
    for (const auto& scale : scales) {
        const auto scaled = two_agents(scale, Rational(3, 2) * scale);
        for (const auto& rule : rules)
            for (const auto& u : vectors)
                for (const auto& v : vectors)
                    CHECK(compare_outcomes(base, rule, u, v) ==
                          compare_outcomes(scaled, rule, u, v));
    }
}

TEST_CASE("harmonic sums are order independent") {
    const auto inst = make_instance({Valuation::binary_additive(4, {0, 1, 2, 3}),
                                     Valuation::binary_additive(4, {0, 1, 2, 3}),
                                     Valuation::binary_additive(4, {0, 1, 2, 3})},
                                    {Rational(1, 3), Rational(5, 7), Rational(2)});
    const auto rule = WelfareFunction::mwhw(4);
    const UtilityVector u = {3, 1, 4};
    const auto forward = evaluate(inst, u, rule);
    const int reversed[] = {2, 1, 0};
    const auto backward = evaluate_subset(inst, u, rule, reversed);
    CHECK(WelfareValue::compare(forward, backward) == 0);
}
