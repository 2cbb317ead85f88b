#ifndef FAIRDIV_EXCHANGE_HPP_
#define FAIRDIV_EXCHANGE_HPP_

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "fairdiv/instance.hpp"

namespace fairdiv {

// Directed graph on goods induced by an allocation: edge (g, g') present iff
// the owner i of g has g' outside her bundle and swapping g for g' keeps
// v_i(A_i) unchanged. Unallocated goods are vertices with no out-edges.
class ExchangeGraph {
  public:
    // Requires a non-redundant allocation (PreconditionError otherwise).
    static ExchangeGraph build(const Instance& inst, const Allocation& alloc);

    int num_vertices() const { return static_cast<int>(adj_.size()); }
    const std::vector<int>& out_edges(int good) const { return adj_[good]; }
    bool has_edge(int from, int to) const;
    long long num_edges() const;
    std::vector<std::pair<int, int>> edge_list() const;

  private:
    std::vector<std::vector<int>> adj_;  // ascending neighbor lists
};

// Simple directed path, stored first to last. Size 1 == degenerate.
using Path = std::vector<int>;

// Minimum-length path from `sources` to `targets`; BFS expands goods in
// canonical index order, so tie-breaking is deterministic. A shared good
// yields the degenerate path. nullopt when no connection exists.
std::optional<Path> shortest_path(const ExchangeGraph& graph, std::span<const int> sources,
                                  std::span<const int> targets);

// Bundle rewrite along a path: each bundle replaces its path goods by their
// successors (membership tested against the original bundles). The path's
// last good lands in the bundle that held the second-to-last good.
Allocation augment(const Allocation& alloc, const Path& path);

// Moves one unit of utility from `loser` to `gainer` along a shortest path
// from the gainer's marginal-1 goods to the loser's bundle. Returns nullopt
// when no path exists. The result is non-redundant with utility deltas
// exactly (+1 gainer, -1 loser, 0 elsewhere).
std::optional<Allocation> transfer(const Instance& inst, const Allocation& alloc, int gainer,
                                   int loser);

}  // namespace fairdiv

#endif  // FAIRDIV_EXCHANGE_HPP_
