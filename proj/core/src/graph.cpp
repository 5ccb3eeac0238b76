#include "ctoric/graph.hpp"

#include <algorithm>

namespace ctoric {

Graph Graph::from_edges(int n, std::vector<std::pair<int, int>> edge_list) {
    if (n < 0 || n > 30) throw SizeLimitExceeded("graph size out of range: " + std::to_string(n));
    Graph g;
    g.n = n;
    g.adj.assign(n, 0);
    for (auto& [u, v] : edge_list) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw IndexOutOfRange("edge endpoint out of range");
        if (u == v) throw PreconditionViolated("loops are not allowed in a simple graph");
        if (u > v) std::swap(u, v);
        g.adj[u] |= 1u << v;
        g.adj[v] |= 1u << u;
    }
    std::sort(edge_list.begin(), edge_list.end());
    edge_list.erase(std::unique(edge_list.begin(), edge_list.end()), edge_list.end());
    g.edges = std::move(edge_list);
    return g;
}

bool VertexOrdering::is_permutation_of(int n) const {
    if (static_cast<int>(perm.size()) != n) return false;
    std::uint32_t seen = 0;
    for (int v : perm) {
        if (v < 0 || v >= n || ((seen >> v) & 1u)) return false;
        seen |= 1u << v;
    }
    return true;
}

Graph sun_graph(int ell, const std::vector<std::pair<int, int>>& inner_edges) {
    if (ell < 3) throw PreconditionViolated("sun graph needs ell >= 3");
    const int n = 2 * ell;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    for (auto [u, v] : inner_edges) {
        if (u < 0 || u >= n || v < 0 || v >= n || u == v || u % 2 == 0 || v % 2 == 0)
            throw InvalidInnerEdge("inner sun edges must join even-position vertices");
        edges.emplace_back(u, v);
    }
    return Graph::from_edges(n, std::move(edges));
}

Graph complete_sun(int ell) {
    std::vector<std::pair<int, int>> inner;
    for (int i = 1; i < 2 * ell; i += 2)
        for (int j = i + 2; j < 2 * ell; j += 2) inner.emplace_back(i, j);
    return sun_graph(ell, inner);
}

} // namespace ctoric
