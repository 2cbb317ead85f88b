#include "fairdiv/catalog.hpp"

#include <algorithm>

#include "fairdiv/errors.hpp"

namespace fairdiv {

std::vector<Valuation> all_binary_additive_valuations(int num_goods) {
    if (num_goods > 20) throw CapacityError("binary-additive catalog capped at 20 goods");
    std::vector<Valuation> out;
    out.reserve(1ull << num_goods);
    for (unsigned mask = 0; mask < (1u << num_goods); ++mask) {
        std::vector<int> approved;
        for (int g = 0; g < num_goods; ++g)
            if (mask & (1u << g)) approved.push_back(g);
        out.push_back(Valuation::binary_additive(num_goods, std::move(approved)));
    }
    return out;
}

namespace {

// Depth-first assignment in subset-mask order. Masks 1..2^m-1 are filled so
// that every one-element-smaller subset precedes its supersets, which holds
// for plain ascending mask order.
void extend_tables(int num_goods, std::vector<long long>& table, unsigned next,
                   std::vector<std::vector<long long>>& out) {
    const unsigned full = 1u << num_goods;
    if (next == full) {
        out.push_back(table);
        return;
    }
    long long lo = 0, hi = static_cast<long long>(num_goods);
    for (int g = 0; g < num_goods; ++g) {
        if (!(next & (1u << g))) continue;
        const long long below = table[next & ~(1u << g)];
        lo = std::max(lo, below);       // monotone
        hi = std::min(hi, below + 1);   // binary marginal
    }
    for (long long v = lo; v <= hi; ++v) {
        table[next] = v;
        extend_tables(num_goods, table, next + 1, out);
    }
}

bool locally_submodular(int num_goods, const std::vector<long long>& table) {
    const unsigned full = 1u << num_goods;
    for (unsigned mask = 0; mask < full; ++mask)
        for (int g = 0; g < num_goods; ++g) {
            if (mask & (1u << g)) continue;
            for (int h = g + 1; h < num_goods; ++h) {
                if (mask & (1u << h)) continue;
                if (table[mask | (1u << g)] + table[mask | (1u << h)] <
                    table[mask | (1u << g) | (1u << h)] + table[mask])
                    return false;
            }
        }
    return true;
}

}  // namespace

std::vector<std::vector<long long>> all_binary_monotone_normalized_tables(int num_goods) {
    if (num_goods > 4) throw CapacityError("set-function catalog capped at 4 goods");
    std::vector<std::vector<long long>> out;
    std::vector<long long> table(1u << num_goods, 0);
    extend_tables(num_goods, table, 1, out);
    return out;
}

std::vector<Valuation> all_matroid_rank_valuations(int num_goods) {
    std::vector<Valuation> out;
    for (auto& table : all_binary_monotone_normalized_tables(num_goods)) {
        if (locally_submodular(num_goods, table))
            out.push_back(Valuation::explicit_table(num_goods, std::move(table)));
    }
    return out;
}

}  // namespace fairdiv
