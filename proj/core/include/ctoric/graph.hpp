#ifndef CTORIC_GRAPH_HPP
#define CTORIC_GRAPH_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "ctoric/errors.hpp"

namespace ctoric {

/// Finite simple graph on vertices 0..n-1 with bitmask adjacency rows.
struct Graph {
    int n = 0;
    std::vector<std::uint32_t> adj;          // adj[v]: neighbour mask, zero diagonal
    std::vector<std::pair<int, int>> edges;  // u < v, sorted lexicographically

    static Graph from_edges(int n, std::vector<std::pair<int, int>> edge_list);

    bool has_edge(int u, int v) const { return (adj[u] >> v) & 1u; }
    int degree(int v) const { return __builtin_popcount(adj[v]); }
    int edge_count() const { return static_cast<int>(edges.size()); }
};

/// A permutation of the vertices; perm[t] is the vertex at position t.
struct VertexOrdering {
    std::vector<int> perm;

    bool is_permutation_of(int n) const;
};

/// Sun graph S_ell on 2*ell vertices: the outer cycle v_1 v_2 ... v_{2ell}
/// together with arbitrary extra edges among the even-indexed vertices.
/// `inner_edges` uses 0-based vertex ids and may only touch odd positions
/// (vertices 1, 3, ..., i.e. v_2, v_4, ... in 1-based naming).
Graph sun_graph(int ell, const std::vector<std::pair<int, int>>& inner_edges);

/// The complete sun: inner vertices pairwise adjacent.
Graph complete_sun(int ell);

} // namespace ctoric

#endif
