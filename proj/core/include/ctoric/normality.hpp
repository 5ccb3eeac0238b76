#ifndef CTORIC_NORMALITY_HPP
#define CTORIC_NORMALITY_HPP

#include <vector>

#include "ctoric/configuration.hpp"
#include "ctoric/intlin.hpp"

namespace ctoric {

/// A lattice point of the cone that lies in the column lattice but not in
/// the column monoid.
struct MonoidHole {
    int degree = 0;
    std::vector<long long> z;
};

/// Lattice, cone and monoid membership oracles for a configuration with a
/// uniform grading (every column sums to d).
class GradedMonoidView {
public:
    explicit GradedMonoidView(Configuration cfg);

    const Configuration& config() const { return cfg_; }
    int d() const { return d_; }

    /// z in the lattice generated by the columns (exact Hermite reduction).
    bool in_lattice(const std::vector<long long>& z) const;
    /// q a nonnegative rational combination of columns (exact feasibility).
    bool in_cone(const RatVec& q) const;
    bool in_cone(const std::vector<long long>& z) const;
    /// z a nonnegative integer combination (dynamic programming over
    /// columns; the grading bounds the number of summands).
    bool in_monoid(const std::vector<long long>& z) const;

    /// All holes of grading degree <= t_max, per degree in ascending
    /// lexicographic order.
    std::vector<MonoidHole> holes_up_to(int t_max) const;

private:
    Configuration cfg_;
    ColumnLattice lattice_;
    int d_ = 0;
    bool cone_is_orthant_ = false;
};

/// Every connected component of the comparability graph is a clique, i.e.
/// pairwise comparable.
bool is_disjoint_union_of_chains(const Poset& p);

/// Truncated check that the lattice points of the cone at each degree
/// t <= t_max are exactly the degree-t part of the full Veronese monoid
/// {z >= 0 : sum z_i = t d}.  Requires a connected comparability graph.
bool normalization_equals_veronese(const GradedMonoidView& view, const Poset& p, int t_max);

} // namespace ctoric

#endif
