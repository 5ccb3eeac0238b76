#ifndef CTORIC_INTLIN_HPP
#define CTORIC_INTLIN_HPP

#include <optional>
#include <vector>

#include "ctoric/exact.hpp"

namespace ctoric {

/// Row-style Hermite normal form.  `h = u * input` with `u` unimodular,
/// pivots positive, pivot columns strictly increasing, entries above each
/// pivot reduced into [0, pivot).  Zero rows are collected at the bottom.
struct RowHermite {
    IntMat h;
    IntMat u;
    int rank = 0;
};

RowHermite row_hermite(IntMat m);

/// Basis of the right integer kernel {x in Z^m : A x = 0} of an n x m
/// matrix, returned as rows of length m in Hermite-canonical form.
IntMat integer_kernel(const IntMat& a);

int rational_rank(const IntMat& a);

/// Membership oracle for the lattice generated by the columns of an
/// integer matrix.
class ColumnLattice {
public:
    explicit ColumnLattice(const IntMat& a);
    bool contains(const IntVec& z) const;
    int rank() const { return rank_; }

private:
    IntMat rows_; // Hermite basis of the lattice, one generator per row
    std::vector<int> pivot_;
    int n_ = 0;
    int rank_ = 0;
};

/// Exact solution of A x = b over the rationals (any solution), or nullopt
/// when the system is inconsistent.
std::optional<RatVec> solve_rational(const std::vector<RatVec>& a, const RatVec& b);

/// Does A x = b, x >= 0 admit a rational solution?  Phase-one simplex with
/// Bland's rule; everything exact.
bool feasible_nonnegative(const std::vector<RatVec>& a, const RatVec& b);

} // namespace ctoric

#endif
