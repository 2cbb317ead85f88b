#include "fairdiv/valuation.hpp"

#include <algorithm>
#include <numeric>

namespace fairdiv {
namespace {

void check_good_range(int good, int num_goods) {
    if (good < 0 || good >= num_goods)
        throw InputError("good index " + std::to_string(good) + " out of range");
}

std::vector<int> mask_to_bundle(unsigned mask, int num_goods) {
    std::vector<int> bundle;
    for (int g = 0; g < num_goods; ++g)
        if (mask & (1u << g)) bundle.push_back(g);
    return bundle;
}

}  // namespace

const char* to_string(ValuationKind kind) {
    switch (kind) {
        case ValuationKind::BinaryAdditive: return "binary_additive";
        case ValuationKind::PartitionMatroid: return "partition_matroid";
        case ValuationKind::GraphicMatroid: return "graphic_matroid";
        case ValuationKind::Explicit: return "explicit";
        case ValuationKind::Xos: return "xos";
        case ValuationKind::Additive: return "additive";
    }
    return "?";
}

ValuationKind valuation_kind_from_string(const std::string& name) {
    if (name == "binary_additive") return ValuationKind::BinaryAdditive;
    if (name == "partition_matroid") return ValuationKind::PartitionMatroid;
    if (name == "graphic_matroid") return ValuationKind::GraphicMatroid;
    if (name == "explicit") return ValuationKind::Explicit;
    if (name == "xos") return ValuationKind::Xos;
    if (name == "additive") return ValuationKind::Additive;
    throw InputError("unknown valuation kind: " + name);
}

struct Valuation::Impl {
    // binary additive
    std::vector<int> approved;
    std::vector<char> approved_mask;
    // partition matroid
    std::vector<PartitionPart> parts;
    std::vector<int> part_of;  // -1 outside all parts
    // graphic matroid
    std::vector<std::pair<int, int>> edges;
    std::vector<std::string> vertex_labels;
    // explicit table
    std::vector<long long> by_mask;
    // xos
    std::vector<std::vector<long long>> clauses;
    // additive
    std::vector<long long> values;
};

Valuation::Valuation(ValuationKind kind, int num_goods, std::shared_ptr<const Impl> impl)
    : kind_(kind), num_goods_(num_goods), impl_(std::move(impl)) {}

Valuation Valuation::binary_additive(int num_goods, std::vector<int> approved) {
    auto impl = std::make_shared<Impl>();
    impl->approved_mask.assign(num_goods, 0);
    for (int g : approved) {
        check_good_range(g, num_goods);
        impl->approved_mask[g] = 1;
    }
    impl->approved.clear();
    for (int g = 0; g < num_goods; ++g)
        if (impl->approved_mask[g]) impl->approved.push_back(g);
    return Valuation(ValuationKind::BinaryAdditive, num_goods, std::move(impl));
}

Valuation Valuation::partition_matroid(int num_goods, std::vector<PartitionPart> parts) {
    auto impl = std::make_shared<Impl>();
    impl->part_of.assign(num_goods, -1);
    for (size_t p = 0; p < parts.size(); ++p) {
        if (parts[p].capacity < 0) throw InputError("partition capacity must be nonnegative");
        for (int g : parts[p].goods) {
            check_good_range(g, num_goods);
            if (impl->part_of[g] != -1) throw InputError("good appears in two partition parts");
            impl->part_of[g] = static_cast<int>(p);
        }
        std::sort(parts[p].goods.begin(), parts[p].goods.end());
    }
    impl->parts = std::move(parts);
    return Valuation(ValuationKind::PartitionMatroid, num_goods, std::move(impl));
}

Valuation Valuation::graphic_matroid(int num_goods, std::vector<std::pair<int, int>> edges,
                                     std::vector<std::string> vertex_labels) {
    if (static_cast<int>(edges.size()) != num_goods)
        throw InputError("graphic matroid needs one edge per good");
    const int num_vertices = static_cast<int>(vertex_labels.size());
    for (auto& [u, v] : edges) {
        if (u < 0 || u >= num_vertices || v < 0 || v >= num_vertices)
            throw InputError("graphic matroid edge endpoint out of range");
    }
    auto impl = std::make_shared<Impl>();
    impl->edges = std::move(edges);
    impl->vertex_labels = std::move(vertex_labels);
    return Valuation(ValuationKind::GraphicMatroid, num_goods, std::move(impl));
}

Valuation Valuation::explicit_table(int num_goods, std::vector<long long> value_by_mask) {
    if (num_goods > 12) throw CapacityError("explicit tables are capped at 12 goods");
    if (value_by_mask.size() != (1ull << num_goods))
        throw InputError("explicit table must cover all subsets");
    auto impl = std::make_shared<Impl>();
    impl->by_mask = std::move(value_by_mask);
    return Valuation(ValuationKind::Explicit, num_goods, std::move(impl));
}

Valuation Valuation::xos(int num_goods, std::vector<std::vector<long long>> clauses) {
    for (const auto& clause : clauses) {
        if (static_cast<int>(clause.size()) != num_goods)
            throw InputError("xos clause length must equal the number of goods");
        for (long long c : clause)
            if (c < 0) throw InputError("xos clause coefficients must be nonnegative");
    }
    auto impl = std::make_shared<Impl>();
    impl->clauses = std::move(clauses);
    return Valuation(ValuationKind::Xos, num_goods, std::move(impl));
}

Valuation Valuation::additive(int num_goods, std::vector<long long> values) {
    if (static_cast<int>(values.size()) != num_goods)
        throw InputError("additive values must cover every good");
    for (long long v : values)
        if (v < 0) throw InputError("additive values must be nonnegative");
    auto impl = std::make_shared<Impl>();
    impl->values = std::move(values);
    return Valuation(ValuationKind::Additive, num_goods, std::move(impl));
}

bool Valuation::is_matroid_family() const {
    switch (kind_) {
        case ValuationKind::BinaryAdditive:
        case ValuationKind::PartitionMatroid:
        case ValuationKind::GraphicMatroid:
        case ValuationKind::Explicit:
            return true;
        default:
            return false;
    }
}

long long Valuation::value(std::span<const int> bundle) const {
    for (int g : bundle) check_good_range(g, num_goods_);
    const Impl& impl = *impl_;
    switch (kind_) {
        case ValuationKind::BinaryAdditive: {
            long long total = 0;
            for (int g : bundle) total += impl.approved_mask[g];
            return total;
        }
        case ValuationKind::PartitionMatroid: {
            // Count per-part membership without extra allocation: the first
            // occurrence of a part counts all of its members in the bundle.
            long long total = 0;
            for (size_t i = 0; i < bundle.size(); ++i) {
                const int p = impl.part_of[bundle[i]];
                if (p < 0) continue;
                bool first = true;
                for (size_t j = 0; j < i; ++j)
                    if (impl.part_of[bundle[j]] == p) { first = false; break; }
                if (!first) continue;
                int count = 0;
                for (size_t j = i; j < bundle.size(); ++j)
                    if (impl.part_of[bundle[j]] == p) ++count;
                total += std::min<long long>(count, impl.parts[p].capacity);
            }
            return total;
        }
        case ValuationKind::GraphicMatroid: {
            // Rank = edges that join two previously separate components.
            const int num_vertices = static_cast<int>(impl.vertex_labels.size());
            std::vector<int> root(num_vertices);
            std::iota(root.begin(), root.end(), 0);
            auto find = [&](int x) {
                while (root[x] != x) {
                    root[x] = root[root[x]];
                    x = root[x];
                }
                return x;
            };
            long long rank = 0;
            for (int g : bundle) {
                const auto [u, v] = impl.edges[g];
                const int ru = find(u), rv = find(v);
                if (ru != rv) {
                    root[ru] = rv;
                    ++rank;
                }
            }
            return rank;
        }
        case ValuationKind::Explicit: {
            unsigned mask = 0;
            for (int g : bundle) mask |= 1u << g;
            return impl.by_mask[mask];
        }
        case ValuationKind::Xos: {
            long long best = 0;
            for (const auto& clause : impl.clauses) {
                long long sum = 0;
                for (int g : bundle) sum += clause[g];
                best = std::max(best, sum);
            }
            return best;
        }
        case ValuationKind::Additive: {
            long long total = 0;
            for (int g : bundle) total += impl.values[g];
            return total;
        }
    }
    return 0;
}

long long Valuation::marginal(std::span<const int> bundle, int good) const {
    check_good_range(good, num_goods_);
    std::vector<int> extended(bundle.begin(), bundle.end());
    extended.push_back(good);
    return value(extended) - value(bundle);
}

std::vector<int> Valuation::f_set(std::span<const int> bundle) const {
    std::vector<char> inside(num_goods_, 0);
    for (int g : bundle) {
        check_good_range(g, num_goods_);
        inside[g] = 1;
    }
    const long long base = value(bundle);
    std::vector<int> extended(bundle.begin(), bundle.end());
    extended.push_back(0);
    std::vector<int> result;
    for (int g = 0; g < num_goods_; ++g) {
        if (inside[g]) continue;
        extended.back() = g;
        if (value(extended) - base == 1) result.push_back(g);
    }
    return result;
}

Valuation Valuation::restricted(std::span<const int> kept) const {
    std::vector<int> old_to_new(num_goods_, -1);
    for (size_t i = 0; i < kept.size(); ++i) {
        check_good_range(kept[i], num_goods_);
        if (i > 0 && kept[i] <= kept[i - 1])
            throw InputError("restriction set must be strictly ascending");
        old_to_new[kept[i]] = static_cast<int>(i);
    }
    const int new_m = static_cast<int>(kept.size());
    const Impl& impl = *impl_;
    switch (kind_) {
        case ValuationKind::BinaryAdditive: {
            std::vector<int> approved;
            for (int g : impl.approved)
                if (old_to_new[g] != -1) approved.push_back(old_to_new[g]);
            return binary_additive(new_m, std::move(approved));
        }
        case ValuationKind::PartitionMatroid: {
            std::vector<PartitionPart> parts;
            for (const auto& part : impl.parts) {
                PartitionPart next{{}, part.capacity};
                for (int g : part.goods)
                    if (old_to_new[g] != -1) next.goods.push_back(old_to_new[g]);
                parts.push_back(std::move(next));
            }
            return partition_matroid(new_m, std::move(parts));
        }
        case ValuationKind::GraphicMatroid: {
            std::vector<std::pair<int, int>> edges;
            for (int g : kept) edges.push_back(impl.edges[g]);
            return graphic_matroid(new_m, std::move(edges), impl.vertex_labels);
        }
        case ValuationKind::Explicit: {
            std::vector<long long> table(1ull << new_m);
            for (unsigned mask = 0; mask < table.size(); ++mask) {
                unsigned old_mask = 0;
                for (int i = 0; i < new_m; ++i)
                    if (mask & (1u << i)) old_mask |= 1u << kept[i];
                table[mask] = impl.by_mask[old_mask];
            }
            return explicit_table(new_m, std::move(table));
        }
        case ValuationKind::Xos: {
            std::vector<std::vector<long long>> clauses;
            for (const auto& clause : impl.clauses) {
                std::vector<long long> next(new_m);
                for (int i = 0; i < new_m; ++i) next[i] = clause[kept[i]];
                clauses.push_back(std::move(next));
            }
            return xos(new_m, std::move(clauses));
        }
        case ValuationKind::Additive: {
            std::vector<long long> values(new_m);
            for (int i = 0; i < new_m; ++i) values[i] = impl.values[kept[i]];
            return additive(new_m, std::move(values));
        }
    }
    throw Error("unreachable");
}

const std::vector<int>& Valuation::approved_goods() const {
    if (kind_ != ValuationKind::BinaryAdditive) throw UnsupportedKindError("not binary additive");
    return impl_->approved;
}

const std::vector<PartitionPart>& Valuation::parts() const {
    if (kind_ != ValuationKind::PartitionMatroid) throw UnsupportedKindError("not a partition matroid");
    return impl_->parts;
}

const std::vector<std::pair<int, int>>& Valuation::graphic_edges() const {
    if (kind_ != ValuationKind::GraphicMatroid) throw UnsupportedKindError("not a graphic matroid");
    return impl_->edges;
}

const std::vector<std::string>& Valuation::graphic_vertex_labels() const {
    if (kind_ != ValuationKind::GraphicMatroid) throw UnsupportedKindError("not a graphic matroid");
    return impl_->vertex_labels;
}

const std::vector<long long>& Valuation::explicit_values() const {
    if (kind_ != ValuationKind::Explicit) throw UnsupportedKindError("not an explicit table");
    return impl_->by_mask;
}

const std::vector<std::vector<long long>>& Valuation::xos_clauses() const {
    if (kind_ != ValuationKind::Xos) throw UnsupportedKindError("not xos");
    return impl_->clauses;
}

const std::vector<long long>& Valuation::additive_values() const {
    if (kind_ != ValuationKind::Additive) throw UnsupportedKindError("not additive");
    return impl_->values;
}

MatroidValidationReport validate_matroid_rank(const Valuation& v) {
    const int m = v.num_goods();
    if (m > 16) throw CapacityError("exhaustive matroid validation is capped at 16 goods");

    // One oracle query per subset, then every axiom becomes a table lookup.
    const unsigned full = 1u << m;
    std::vector<long long> table(full);
    for (unsigned mask = 0; mask < full; ++mask)
        table[mask] = v.value(mask_to_bundle(mask, m));

    MatroidValidationReport report;
    auto record = [&](AxiomWitness w) {
        report.valid = false;
        report.violations.push_back(std::move(w));
    };

    if (table[0] != 0)
        record({"normalized", {}, {}, -1, table[0], 0});

    bool binary_done = false, monotone_done = false;
    for (unsigned mask = 0; mask < full && !(binary_done && monotone_done); ++mask) {
        for (int g = 0; g < m; ++g) {
            if (mask & (1u << g)) continue;
            const long long delta = table[mask | (1u << g)] - table[mask];
            if (!monotone_done && delta < 0) {
                record({"monotone", mask_to_bundle(mask, m), mask_to_bundle(mask | (1u << g), m), g,
                        table[mask], table[mask | (1u << g)]});
                monotone_done = true;
            }
            if (!binary_done && (delta < 0 || delta > 1)) {
                record({"binary", mask_to_bundle(mask, m), {}, g, delta, 1});
                binary_done = true;
            }
            if (binary_done && monotone_done) break;
        }
    }

    // Local characterization: v(S+g) + v(S+h) >= v(S+g+h) + v(S).
    for (unsigned mask = 0; mask < full; ++mask) {
        for (int g = 0; g < m; ++g) {
            if (mask & (1u << g)) continue;
            for (int h = g + 1; h < m; ++h) {
                if (mask & (1u << h)) continue;
                const long long lhs = table[mask | (1u << g)] + table[mask | (1u << h)];
                const long long rhs = table[mask | (1u << g) | (1u << h)] + table[mask];
                if (lhs < rhs) {
                    record({"submodular", mask_to_bundle(mask, m),
                            mask_to_bundle(mask | (1u << h), m), g, lhs, rhs});
                    return report;
                }
            }
        }
    }
    return report;
}

RestrictedAdditiveReport validate_restricted_additive(const std::vector<Valuation>& profile) {
    if (profile.empty()) return {};
    const int m = profile.front().num_goods();
    for (const auto& v : profile) {
        if (v.kind() != ValuationKind::Additive)
            throw InputError("restricted additive check needs additive valuations");
        if (v.num_goods() != m) throw InputError("profile valuations disagree on the ground set");
    }
    for (int g = 0; g < m; ++g) {
        long long h = 0;
        for (const auto& v : profile) {
            const long long x = v.additive_values()[g];
            if (x == 0) continue;
            if (h == 0) {
                h = x;
            } else if (x != h) {
                return {false, g, {h, x}};
            }
        }
    }
    return {};
}

}  // namespace fairdiv
