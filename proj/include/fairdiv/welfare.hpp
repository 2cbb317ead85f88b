#ifndef FAIRDIV_WELFARE_HPP_
#define FAIRDIV_WELFARE_HPP_

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fairdiv/instance.hpp"
#include "fairdiv/rational.hpp"

namespace fairdiv {

enum class RuleKind { Mwnw, Mwhw, Custom };

// A strictly increasing f on {0..domain_max}, optionally with f(0) = -inf.
// The weighted welfare of a utility vector u is sum_i w_i * f(u_i).
class WelfareFunction {
  public:
    // f(k) = log k, f(0) = -inf. Compared via exact weighted products.
    static WelfareFunction mwnw();
    // f(k) = H_k (harmonic numbers), evaluated as exact rationals.
    static WelfareFunction mwhw(int max_utility);
    // table[k] = f(k); only table[0] may be absent, meaning f(0) = -inf.
    static WelfareFunction custom(std::vector<std::optional<Rational>> table);

    RuleKind kind() const { return kind_; }
    std::string name() const;
    bool f0_neg_inf() const { return f0_neg_inf_; }
    bool concave() const { return concave_; }

    // Largest utility the finite table covers; -1 means unbounded (mwnw).
    int domain_max() const;
    // Finite part of f; requires k >= 1 when f(0) = -inf.
    Rational f_finite(long long k) const;

  private:
    WelfareFunction(RuleKind kind, bool f0_neg_inf, bool concave, std::vector<Rational> table);

    RuleKind kind_;
    bool f0_neg_inf_;
    bool concave_;
    std::vector<Rational> table_;  // f(k) for k >= table_offset_
    int table_offset_ = 0;         // 1 when f(0) = -inf and the table starts at k = 1
};

// Extended totally ordered welfare score supporting exact comparison.
class WelfareValue {
  public:
    enum class Kind { NegInfinity, FiniteRational, LogProduct };

    static WelfareValue neg_infinity();
    static WelfareValue finite(Rational value);
    // Terms (W_i, u_i) with integer W_i > 0 and u_i >= 1; stands for sum W_i log u_i.
    static WelfareValue log_product(std::vector<std::pair<BigInt, long long>> terms);

    Kind kind() const { return kind_; }
    const Rational& rational() const;
    const std::vector<std::pair<BigInt, long long>>& terms() const;

    // -1, 0, +1. Finite values of mixed representations cannot be compared.
    static int compare(const WelfareValue& a, const WelfareValue& b);

  private:
    Kind kind_ = Kind::NegInfinity;
    Rational rational_;
    std::vector<std::pair<BigInt, long long>> terms_;
};

WelfareValue evaluate(const Instance& inst, const UtilityVector& u, const WelfareFunction& f);
// Same, restricted to the given agent positions.
WelfareValue evaluate_subset(const Instance& inst, const UtilityVector& u, const WelfareFunction& f,
                             std::span<const int> agents);

enum class Ordering { FirstPreferred, SecondPreferred, Equal };

// The full preference order used to pick among allocations: exact weighted
// welfare, the positive-support tiers when f(0) = -inf, and finally
// lexicographic dominance of utility vectors. Equal only for identical vectors.
Ordering compare_outcomes(const Instance& inst, const WelfareFunction& f, const UtilityVector& first,
                          const UtilityVector& second);

// The welfare tiers alone, without the final lexicographic tie-break.
Ordering compare_welfare(const Instance& inst, const WelfareFunction& f, const UtilityVector& first,
                         const UtilityVector& second);

}  // namespace fairdiv

#endif  // FAIRDIV_WELFARE_HPP_
