#ifndef CTORIC_CHORDAL_HPP
#define CTORIC_CHORDAL_HPP

#include <optional>
#include <vector>

#include "ctoric/graph.hpp"

namespace ctoric {

struct ChordalityCertificate {
    bool chordal = false;
    std::optional<VertexOrdering> peo;
    std::optional<std::vector<int>> hole;  // induced cycle of length >= 4, in cycle order
};

struct SunObstruction {
    /// Vertices of an induced sun in cycle order v_1 v_2 ... v_{2l};
    /// even positions (0-based) are the independent vertices.
    std::vector<int> cycle;
};

struct StrongChordalityCertificate {
    bool strongly_chordal = false;
    std::optional<VertexOrdering> speo;
    std::optional<std::vector<int>> hole;
    std::optional<SunObstruction> sun;
    bool sun_search_skipped = false;  // graph too large for the exhaustive search
};

/// True iff for each position the later neighbours of the vertex form a clique.
bool verify_peo(const Graph& g, const VertexOrdering& ord);

/// PEO plus the quadruple condition: positions i<j<k<l with v_i~v_k,
/// v_i~v_l, v_j~v_k adjacent force v_j~v_l.
bool verify_strong_peo(const Graph& g, const VertexOrdering& ord);

/// The second, equivalent formulation (i<j and k<l, indices may interleave).
/// Kept separate so the equivalence itself can be tested.
bool verify_strong_peo_cond2(const Graph& g, const VertexOrdering& ord);

/// Greedy simplicial elimination; returns a PEO or an induced long cycle.
ChordalityCertificate find_peo(const Graph& g);

/// Simple-vertex elimination decides the verdict; a backtracking search over
/// simple vertices with incremental quadruple checks produces the ordering.
/// Obstructions: a hole when not chordal, otherwise an induced sun found by
/// exhaustive subset search (skipped with a flag above the size guard).
StrongChordalityCertificate find_strong_peo(const Graph& g);

/// A vertex whose neighbours' closed neighbourhoods form an inclusion chain
/// within the induced subgraph on `mask`.
bool is_simple_vertex(const Graph& g, int v, std::uint32_t mask);

/// All induced cycles of length >= 4, each in canonical cycle order
/// (smallest vertex first, then its smaller neighbour).
std::vector<std::vector<int>> induced_long_cycles(const Graph& g);

} // namespace ctoric

#endif
