#ifndef CTORIC_GROEBNER_HPP
#define CTORIC_GROEBNER_HPP

#include <optional>
#include <vector>

#include "ctoric/monomial.hpp"

namespace ctoric {

/// S-pair selection; both strategies must land on the same reduced basis.
enum class SPairStrategy { MinDegree, Fifo };

struct BuchbergerOptions {
    SPairStrategy strategy = SPairStrategy::MinDegree;
    /// Ignore S-pairs whose lcm degree exceeds this bound (-1 = none).
    /// Only meaningful for homogeneous input, where the result is exact on
    /// every element of degree within the bound.
    int truncate_degree = -1;
};

struct ReducedGB {
    std::vector<PureBinomial> basis;  // oriented plus=lead, sorted canonically
    MonomialOrder order;

    int size() const { return static_cast<int>(basis.size()); }
    int max_degree() const;
};

/// Fully reduces a monomial modulo the designated initial sides.
Monomial normal_form(Monomial u, const std::vector<PureBinomial>& gb, const MonomialOrder& order);

/// Binomial division: both sides are reduced; equal sides collapse to zero
/// (nullopt).  The result is re-oriented under the order.
std::optional<PureBinomial> normal_form(const PureBinomial& f, const std::vector<PureBinomial>& gb,
                                        const MonomialOrder& order);

/// Buchberger completion specialised to pure-difference binomials, with
/// Gebauer-Moeller pair pruning; returns the unique reduced Groebner basis.
ReducedGB buchberger(std::vector<PureBinomial> gens, const MonomialOrder& order,
                     const BuchbergerOptions& options = {});

/// Minimal generators of the initial ideal (= initial monomials of the
/// reduced basis).
std::vector<Monomial> initial_ideal_generators(const ReducedGB& gb);

bool is_squarefree(const std::vector<Monomial>& mons);

} // namespace ctoric

#endif
