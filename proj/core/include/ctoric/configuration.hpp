#ifndef CTORIC_CONFIGURATION_HPP
#define CTORIC_CONFIGURATION_HPP

#include <optional>
#include <vector>

#include "ctoric/exact.hpp"
#include "ctoric/monomial.hpp"
#include "ctoric/poset.hpp"

namespace ctoric {

/// Integer matrix whose columns all have dot product 1 with a fixed
/// rational grading vector; guarantees the toric ideal is homogeneous.
struct Configuration {
    int n = 0;  // rows
    int m = 0;  // columns
    std::vector<std::vector<long long>> cols;  // cols[j] has length n
    RatVec grading;                            // c with a_j . c = 1 for all j

    static Configuration from_columns(std::vector<std::vector<long long>> cols);

    std::vector<long long> image(const Monomial& u) const;
    /// Grading degree of an image vector; equals the total degree of any
    /// preimage monomial.
    Rat image_degree(const std::vector<long long>& z) const;
};

/// Exact rational c with a_j . c = 1 for every column, or nullopt.
std::optional<RatVec> grading_witness(const std::vector<std::vector<long long>>& cols);

/// Columns are the rho vectors in family order; grading (1/d, ..., 1/d).
Configuration configuration_from_family(const MultichainFamily& fam);

struct KernelLattice {
    std::vector<std::vector<long long>> basis;  // rows spanning ker_Z(A)

    int rank() const { return static_cast<int>(basis.size()); }
};

/// Lattice basis of {b : A b = 0} via Hermite elimination in exact
/// arithmetic.
KernelLattice kernel_lattice(const Configuration& a);

/// The pure-difference binomial y^{b+} - y^{b-} of a kernel vector.
PureBinomial binomial_from_kernel_vector(const std::vector<long long>& b);

} // namespace ctoric

#endif
