#include "fairdiv/exchange.hpp"

#include <algorithm>
#include <deque>

#include "fairdiv/errors.hpp"

namespace fairdiv {

ExchangeGraph ExchangeGraph::build(const Instance& inst, const Allocation& alloc) {
    check_allocation(inst, alloc);
    if (!is_non_redundant(inst, alloc))
        throw PreconditionError("exchange graph requires a non-redundant allocation");

    const int m = inst.num_goods();
    ExchangeGraph graph;
    graph.adj_.assign(m, {});

    std::vector<int> swapped;
    for (int i = 0; i < inst.num_agents(); ++i) {
        const auto& v = inst.agent(i).valuation;
        const auto& bundle = alloc.bundle(i);
        const long long base = static_cast<long long>(bundle.size());
        for (int g : bundle) {
            auto& out = graph.adj_[g];
            for (int h = 0; h < m; ++h) {
                if (alloc.contains(i, h)) continue;
                swapped.clear();
                for (int x : bundle)
                    if (x != g) swapped.push_back(x);
                swapped.push_back(h);
                if (v.value(swapped) == base) out.push_back(h);  // ascending by construction
            }
        }
    }
    return graph;
}

bool ExchangeGraph::has_edge(int from, int to) const {
    const auto& out = adj_[from];
    return std::binary_search(out.begin(), out.end(), to);
}

long long ExchangeGraph::num_edges() const {
    long long total = 0;
    for (const auto& out : adj_) total += static_cast<long long>(out.size());
    return total;
}

std::vector<std::pair<int, int>> ExchangeGraph::edge_list() const {
    std::vector<std::pair<int, int>> edges;
    for (int g = 0; g < num_vertices(); ++g)
        for (int h : adj_[g]) edges.emplace_back(g, h);
    return edges;
}

std::optional<Path> shortest_path(const ExchangeGraph& graph, std::span<const int> sources,
                                  std::span<const int> targets) {
    const int m = graph.num_vertices();
    std::vector<char> is_target(m, 0);
    for (int t : targets) {
        if (t < 0 || t >= m) throw InputError("target vertex out of range");
        is_target[t] = 1;
    }

    std::vector<int> sorted_sources(sources.begin(), sources.end());
    std::sort(sorted_sources.begin(), sorted_sources.end());
    sorted_sources.erase(std::unique(sorted_sources.begin(), sorted_sources.end()),
                         sorted_sources.end());

    std::vector<int> parent(m, -2);  // -2 unvisited, -1 source
    std::deque<int> queue;
    for (int s : sorted_sources) {
        if (s < 0 || s >= m) throw InputError("source vertex out of range");
        if (is_target[s]) return Path{s};  // degenerate, smallest shared good
        parent[s] = -1;
        queue.push_back(s);
    }

    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        for (int v : graph.out_edges(u)) {
            if (parent[v] != -2) continue;
            parent[v] = u;
            if (is_target[v]) {
                Path path;
                for (int x = v; x != -1; x = parent[x]) path.push_back(x);
                std::reverse(path.begin(), path.end());
                return path;
            }
            queue.push_back(v);
        }
    }
    return std::nullopt;
}

Allocation augment(const Allocation& alloc, const Path& path) {
    if (path.empty()) throw InputError("empty path");
    {
        std::vector<int> sorted = path;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw InputError("path vertices must be distinct");
    }
    Allocation result = alloc;
    for (int i = 0; i < alloc.num_agents(); ++i) {
        for (size_t j = 0; j + 1 < path.size(); ++j) {
            if (alloc.contains(i, path[j])) {
                result.remove(i, path[j]);
                result.add(i, path[j + 1]);
            }
        }
    }
    return result;
}

std::optional<Allocation> transfer(const Instance& inst, const Allocation& alloc, int gainer,
                                   int loser) {
    if (gainer < 0 || gainer >= inst.num_agents() || loser < 0 || loser >= inst.num_agents() ||
        gainer == loser)
        throw InputError("transfer needs two distinct agents");

    const ExchangeGraph graph = ExchangeGraph::build(inst, alloc);
    const auto sources = inst.agent(gainer).valuation.f_set(alloc.bundle(gainer));
    const auto path = shortest_path(graph, sources, alloc.bundle(loser));
    if (!path) return std::nullopt;

    Allocation result = augment(alloc, *path);
    // The last good was re-inserted into its predecessor's bundle (or, for a
    // degenerate path, never moved); the loser gives it up either way.
    result.remove(loser, path->back());
    result.add(gainer, path->front());
    return result;
}

}  // namespace fairdiv
