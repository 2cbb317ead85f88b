#ifndef FAIRDIV_VALUATION_HPP_
#define FAIRDIV_VALUATION_HPP_

#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fairdiv/errors.hpp"

namespace fairdiv {

enum class ValuationKind {
    BinaryAdditive,
    PartitionMatroid,
    GraphicMatroid,
    Explicit,
    Xos,
    Additive,
};

const char* to_string(ValuationKind kind);
ValuationKind valuation_kind_from_string(const std::string& name);

// One capacity-bounded block of a partition matroid.
struct PartitionPart {
    std::vector<int> goods;
    int capacity = 0;
};

// Bundle-value oracle over goods indexed 0..m-1.
//
// A Valuation is immutable after construction; queries are pure and safe to
// run from any number of threads. Values are nonnegative integers and
// value({}) == 0 for every kind.
class Valuation {
  public:
    static Valuation binary_additive(int num_goods, std::vector<int> approved);
    static Valuation partition_matroid(int num_goods, std::vector<PartitionPart> parts);
    // One undirected edge (u, v) per good; vertex labels are kept for round-tripping.
    static Valuation graphic_matroid(int num_goods, std::vector<std::pair<int, int>> edges,
                                     std::vector<std::string> vertex_labels);
    // Table over all subsets; index = bit mask over good indices. Capped at 12 goods.
    static Valuation explicit_table(int num_goods, std::vector<long long> value_by_mask);
    // Each clause is a nonnegative additive function; value = max over clause sums.
    static Valuation xos(int num_goods, std::vector<std::vector<long long>> clauses);
    static Valuation additive(int num_goods, std::vector<long long> values);

    ValuationKind kind() const { return kind_; }
    int num_goods() const { return num_goods_; }

    // Bundle elements must be distinct good indices (order irrelevant).
    long long value(std::span<const int> bundle) const;
    long long marginal(std::span<const int> bundle, int good) const;

    // Goods outside `bundle` whose marginal over it is exactly 1, ascending.
    std::vector<int> f_set(std::span<const int> bundle) const;

    // Matroid deletion: ground set becomes `kept` (ascending good indices),
    // re-indexed 0..|kept|-1; values agree on all subsets of `kept`.
    Valuation restricted(std::span<const int> kept) const;

    // True for the kinds that can back the exact solver path. Explicit tables
    // are included; they are checked axiom-by-axiom before solving.
    bool is_matroid_family() const;

    // Kind-specific accessors (throw UnsupportedKindError on mismatch).
    const std::vector<int>& approved_goods() const;
    const std::vector<PartitionPart>& parts() const;
    const std::vector<std::pair<int, int>>& graphic_edges() const;
    const std::vector<std::string>& graphic_vertex_labels() const;
    const std::vector<long long>& explicit_values() const;
    const std::vector<std::vector<long long>>& xos_clauses() const;
    const std::vector<long long>& additive_values() const;

  private:
    struct Impl;
    Valuation(ValuationKind kind, int num_goods, std::shared_ptr<const Impl> impl);

    ValuationKind kind_;
    int num_goods_;
    std::shared_ptr<const Impl> impl_;
};

struct AxiomWitness {
    std::string axiom;       // "normalized" | "binary" | "monotone" | "submodular"
    std::vector<int> set_a;  // inner subset
    std::vector<int> set_b;  // outer subset, empty when the axiom needs only one
    int good = -1;
    long long lhs = 0;
    long long rhs = 0;
};

struct MatroidValidationReport {
    bool valid = true;
    std::vector<AxiomWitness> violations;  // one witness per violated axiom
};

// Exhaustive axiom check over all subsets; capped at 16 goods.
MatroidValidationReport validate_matroid_rank(const Valuation& v);

struct RestrictedAdditiveReport {
    bool ok = true;
    int witness_good = -1;
    std::vector<long long> clashing_values;
};

// True iff some h : goods -> values puts every agent's per-good value in {0, h(g)}.
RestrictedAdditiveReport validate_restricted_additive(const std::vector<Valuation>& profile);

}  // namespace fairdiv

#endif  // FAIRDIV_VALUATION_HPP_
