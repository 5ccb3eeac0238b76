#ifndef CTORIC_POSET_HPP
#define CTORIC_POSET_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ctoric/graph.hpp"

namespace ctoric {

/// Finite poset on elements x_1..x_n (stored 0-based).  The full strict
/// order is kept as bitmask rows; covers are the canonical covering pairs
/// recomputed from the closure.
struct Poset {
    int n = 0;
    std::vector<std::string> labels;
    std::vector<std::uint32_t> above;  // above[i]: mask of j with x_i < x_j
    std::vector<std::uint32_t> below;  // below[i]: mask of j with x_j < x_i
    std::vector<std::pair<int, int>> covers;  // (i, j) meaning x_i < x_j is a cover

    bool less(int i, int j) const { return (above[i] >> j) & 1u; }
    bool leq(int i, int j) const { return i == j || less(i, j); }
    bool comparable(int i, int j) const { return i != j && (less(i, j) || less(j, i)); }
};

/// Builds a poset from covering (or any generating) relations; computes the
/// transitive closure and rejects cyclic input.
Poset poset_from_covers(int n, const std::vector<std::pair<int, int>>& covers);

/// Renames elements: position t of `ord` becomes the new element x_{t+1}.
Poset relabel(const Poset& p, const VertexOrdering& ord);

/// G_P: an edge for every comparable pair.
Graph comparability_graph(const Poset& p);

bool is_connected(const Graph& g);

/// A multichain x_{i_1} <= ... <= x_{i_d}, stored weakly increasing in the
/// poset order, together with its exponent vector rho.
struct Multichain {
    std::vector<int> elems;
    std::vector<int> rho;

    int length() const { return static_cast<int>(elems.size()); }
    bool operator==(const Multichain& o) const { return rho == o.rho; }
};

Multichain make_multichain(const Poset& p, std::vector<int> elems);

/// The family M_d(P) (or the strict-chain variant), sorted so that for
/// i < j the first nonzero entry of rho(C_i) - rho(C_j) is positive.
struct MultichainFamily {
    Poset poset;
    int d = 0;
    std::vector<Multichain> members;

    int size() const { return static_cast<int>(members.size()); }
    /// Position of the multichain with the given rho, or -1.
    int index_of_rho(const std::vector<int>& rho) const;
};

MultichainFamily enumerate_multichains(const Poset& p, int d,
                                       const std::optional<VertexOrdering>& order_hint = std::nullopt);
MultichainFamily enumerate_strict_chains(const Poset& p, int d);

/// Number of multichains of length d counted by dynamic programming over
/// the order relation (independent of the enumerator).
long long count_multichains_dp(const Poset& p, int d);

/// Every labeled poset on n elements, in a fixed deterministic order.
std::vector<Poset> enumerate_posets(int n);

/// Minimum over all relabelings of the strict-order bit matrix, packed
/// row-major into a 64-bit code.  Two posets are isomorphic iff equal codes.
std::uint64_t canonical_code(const Poset& p);

} // namespace ctoric

#endif
