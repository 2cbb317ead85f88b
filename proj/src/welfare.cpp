#include "fairdiv/welfare.hpp"

#include <algorithm>

#include "fairdiv/errors.hpp"

namespace fairdiv {
namespace {

bool table_concave(const std::vector<Rational>& table) {
    for (size_t k = 0; k + 2 < table.size(); ++k)
        if (table[k + 1] - table[k] < table[k + 2] - table[k + 1]) return false;
    return true;
}

}  // namespace

WelfareFunction::WelfareFunction(RuleKind kind, bool f0_neg_inf, bool concave,
                                 std::vector<Rational> table)
    : kind_(kind), f0_neg_inf_(f0_neg_inf), concave_(concave), table_(std::move(table)),
      table_offset_(f0_neg_inf ? 1 : 0) {}

WelfareFunction WelfareFunction::mwnw() {
    return WelfareFunction(RuleKind::Mwnw, true, true, {});
}

WelfareFunction WelfareFunction::mwhw(int max_utility) {
    if (max_utility < 0) throw InputError("mwhw needs a nonnegative domain");
    std::vector<Rational> table;
    table.reserve(max_utility + 1);
    Rational h = 0;
    table.push_back(h);
    for (int k = 1; k <= max_utility; ++k) {
        h += Rational(1, k);
        table.push_back(h);
    }
    return WelfareFunction(RuleKind::Mwhw, false, true, std::move(table));
}

WelfareFunction WelfareFunction::custom(std::vector<std::optional<Rational>> table) {
    if (table.empty()) throw ValidationError("empty welfare table");
    const bool f0_neg_inf = !table[0].has_value();
    std::vector<Rational> finite;
    for (size_t k = f0_neg_inf ? 1 : 0; k < table.size(); ++k) {
        if (!table[k].has_value())
            throw ValidationError("-inf is only allowed at f(0)");
        finite.push_back(*table[k]);
    }
    for (size_t k = 0; k + 1 < finite.size(); ++k) {
        if (finite[k] >= finite[k + 1])
            throw ValidationError("welfare table must be strictly increasing");
    }
    // With f(0) = -inf the first step has infinite slope, so concavity only
    // constrains the finite part.
    const bool concave = table_concave(finite);
    return WelfareFunction(RuleKind::Custom, f0_neg_inf, concave, std::move(finite));
}

std::string WelfareFunction::name() const {
    switch (kind_) {
        case RuleKind::Mwnw: return "mwnw";
        case RuleKind::Mwhw: return "mwhw";
        case RuleKind::Custom: return "custom";
    }
    return "?";
}

int WelfareFunction::domain_max() const {
    if (kind_ == RuleKind::Mwnw) return -1;
    return static_cast<int>(table_.size()) - 1 + table_offset_;
}

Rational WelfareFunction::f_finite(long long k) const {
    if (kind_ == RuleKind::Mwnw)
        throw UnsupportedKindError("mwnw has no finite table; compare via products");
    if (k < table_offset_)
        throw InputError("f is -inf at 0");
    const long long idx = k - table_offset_;
    if (idx >= static_cast<long long>(table_.size()))
        throw InputError("utility " + std::to_string(k) + " exceeds the welfare table domain");
    return table_[idx];
}

WelfareValue WelfareValue::neg_infinity() {
    return WelfareValue{};
}

WelfareValue WelfareValue::finite(Rational value) {
    WelfareValue v;
    v.kind_ = Kind::FiniteRational;
    v.rational_ = std::move(value);
    return v;
}

WelfareValue WelfareValue::log_product(std::vector<std::pair<BigInt, long long>> terms) {
    for (const auto& [w, u] : terms) {
        if (w <= 0) throw InputError("log-product weights must be positive");
        if (u < 1) throw InputError("log-product utilities must be at least 1");
    }
    WelfareValue v;
    v.kind_ = Kind::LogProduct;
    v.terms_ = std::move(terms);
    return v;
}

const Rational& WelfareValue::rational() const {
    if (kind_ != Kind::FiniteRational) throw UnsupportedKindError("not a finite rational");
    return rational_;
}

const std::vector<std::pair<BigInt, long long>>& WelfareValue::terms() const {
    if (kind_ != Kind::LogProduct) throw UnsupportedKindError("not a log product");
    return terms_;
}

namespace {

BigInt product_of(const std::vector<std::pair<BigInt, long long>>& terms) {
    BigInt result = 1;
    for (const auto& [w, u] : terms) {
        if (u == 1) continue;
        if (w > 1'000'000)
            throw CapacityError("cleared weight too large for exact product comparison");
        result *= pow(BigInt(u), w.convert_to<unsigned>());
    }
    return result;
}

}  // namespace

int WelfareValue::compare(const WelfareValue& a, const WelfareValue& b) {
    if (a.kind_ == Kind::NegInfinity || b.kind_ == Kind::NegInfinity) {
        if (a.kind_ == b.kind_) return 0;
        return a.kind_ == Kind::NegInfinity ? -1 : 1;
    }
    if (a.kind_ != b.kind_)
        throw InputError("cannot compare welfare values of mixed finite representations");
    if (a.kind_ == Kind::FiniteRational) {
        if (a.rational_ < b.rational_) return -1;
        if (a.rational_ > b.rational_) return 1;
        return 0;
    }
    const BigInt pa = product_of(a.terms_);
    const BigInt pb = product_of(b.terms_);
    if (pa < pb) return -1;
    if (pa > pb) return 1;
    return 0;
}

namespace {

void check_vector(const Instance& inst, const UtilityVector& u, const WelfareFunction& f) {
    if (static_cast<int>(u.size()) != inst.num_agents())
        throw InputError("utility vector length does not match the agent count");
    for (long long x : u) {
        if (x < 0) throw InputError("utilities must be nonnegative");
        if (f.domain_max() >= 0 && x > f.domain_max())
            throw InputError("utility " + std::to_string(x) + " exceeds the welfare table domain");
    }
}

WelfareValue evaluate_over(const Instance& inst, const UtilityVector& u, const WelfareFunction& f,
                           std::span<const int> agents) {
    if (f.f0_neg_inf()) {
        for (int i : agents)
            if (u[i] == 0) return WelfareValue::neg_infinity();
    }
    if (f.kind() == RuleKind::Mwnw) {
        std::vector<std::pair<BigInt, long long>> terms;
        terms.reserve(agents.size());
        for (int i : agents) terms.emplace_back(inst.cleared_weights()[i], u[i]);
        return WelfareValue::log_product(std::move(terms));
    }
    Rational total = 0;
    for (int i : agents) total += inst.agent(i).weight * f.f_finite(u[i]);
    return WelfareValue::finite(std::move(total));
}

std::vector<int> all_agents(const Instance& inst) {
    std::vector<int> ids(inst.num_agents());
    for (int i = 0; i < inst.num_agents(); ++i) ids[i] = i;
    return ids;
}

std::vector<int> positive_support(const UtilityVector& u) {
    std::vector<int> support;
    for (size_t i = 0; i < u.size(); ++i)
        if (u[i] > 0) support.push_back(static_cast<int>(i));
    return support;
}

int lex_compare(const UtilityVector& a, const UtilityVector& b) {
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    }
    return 0;
}

// The welfare tiers only: exact weighted welfare, with the positive-support
// count, the index-lexicographic support order, and the support-restricted
// welfare taking over when both scores are -inf.
int welfare_tier_compare(const Instance& inst, const WelfareFunction& f, const UtilityVector& a,
                         const UtilityVector& b) {
    const auto agents = all_agents(inst);
    const WelfareValue wa = evaluate_over(inst, a, f, agents);
    const WelfareValue wb = evaluate_over(inst, b, f, agents);
    const bool a_inf = wa.kind() == WelfareValue::Kind::NegInfinity;
    const bool b_inf = wb.kind() == WelfareValue::Kind::NegInfinity;
    if (!a_inf || !b_inf) return WelfareValue::compare(wa, wb);

    const auto sa = positive_support(a);
    const auto sb = positive_support(b);
    if (sa.size() != sb.size()) return sa.size() > sb.size() ? 1 : -1;
    // Ascending index sequences; the lexicographically smaller set wins.
    for (size_t i = 0; i < sa.size(); ++i) {
        if (sa[i] != sb[i]) return sa[i] < sb[i] ? 1 : -1;
    }
    return WelfareValue::compare(evaluate_over(inst, a, f, sa), evaluate_over(inst, b, f, sb));
}

}  // namespace

WelfareValue evaluate(const Instance& inst, const UtilityVector& u, const WelfareFunction& f) {
    check_vector(inst, u, f);
    return evaluate_over(inst, u, f, all_agents(inst));
}

WelfareValue evaluate_subset(const Instance& inst, const UtilityVector& u, const WelfareFunction& f,
                             std::span<const int> agents) {
    check_vector(inst, u, f);
    return evaluate_over(inst, u, f, agents);
}

Ordering compare_welfare(const Instance& inst, const WelfareFunction& f, const UtilityVector& first,
                         const UtilityVector& second) {
    check_vector(inst, first, f);
    check_vector(inst, second, f);
    const int c = welfare_tier_compare(inst, f, first, second);
    if (c > 0) return Ordering::FirstPreferred;
    if (c < 0) return Ordering::SecondPreferred;
    return Ordering::Equal;
}

Ordering compare_outcomes(const Instance& inst, const WelfareFunction& f, const UtilityVector& first,
                          const UtilityVector& second) {
    check_vector(inst, first, f);
    check_vector(inst, second, f);
    int c = welfare_tier_compare(inst, f, first, second);
    if (c == 0) c = lex_compare(first, second);
    if (c > 0) return Ordering::FirstPreferred;
    if (c < 0) return Ordering::SecondPreferred;
    return Ordering::Equal;
}

}  // namespace fairdiv
