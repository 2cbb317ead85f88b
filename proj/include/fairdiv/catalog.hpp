#ifndef FAIRDIV_CATALOG_HPP_
#define FAIRDIV_CATALOG_HPP_

#include <vector>

#include "fairdiv/valuation.hpp"

namespace fairdiv {

// All 2^m binary additive valuations on m goods, by approval-set mask.
std::vector<Valuation> all_binary_additive_valuations(int num_goods);

// Every normalized, monotone set function with binary marginals, as a value
// table indexed by subset mask. Capped at 4 goods.
std::vector<std::vector<long long>> all_binary_monotone_normalized_tables(int num_goods);

// The tables above filtered through the submodularity check, wrapped as
// explicit valuations: exactly the matroid rank functions on m goods.
std::vector<Valuation> all_matroid_rank_valuations(int num_goods);

}  // namespace fairdiv

#endif  // FAIRDIV_CATALOG_HPP_
