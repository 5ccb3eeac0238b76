#ifndef CTORIC_MARKOV_HPP
#define CTORIC_MARKOV_HPP

#include <optional>
#include <vector>

#include "ctoric/configuration.hpp"
#include "ctoric/groebner.hpp"

namespace ctoric {

struct MarkovBasis {
    std::vector<PureBinomial> gens;
    int max_degree = 0;
};

/// Generating set of the toric ideal I_A: kernel-lattice binomials saturated
/// by every variable in turn, each step via a Groebner computation under a
/// reverse lexicographic order with that variable cheapest.
MarkovBasis markov_basis(const Configuration& a);

/// Degrees of a minimal homogeneous generating set, found degree by degree:
/// an element is redundant iff it reduces to zero against a (truncated)
/// basis of the ideal generated by everything kept so far.
std::vector<int> minimal_degrees(const MarkovBasis& mb, const Configuration& a);

/// All monomials with the given A-image, plus quadratic-move connectivity.
struct Fiber {
    std::vector<long long> image;
    std::vector<Monomial> members;

    int size() const { return static_cast<int>(members.size()); }
    int index_of(const Monomial& u) const;
    /// Component id per member under moves of positive-part degree <= k.
    std::vector<int> components(int k) const;
    int component_count(int k) const;
};

Fiber fiber(const Configuration& a, const std::vector<long long>& image,
            std::size_t cap = 1000000);

/// Every nonzero quadratic binomial of I_A, via exhaustive hashing of the
/// degree-two monomial images.
std::vector<PureBinomial> all_quadratic_binomials(const Configuration& a);

struct QuadraticGeneration {
    bool generated = false;
    int verify_bound = 0;
    /// A Markov generator outside the quadratic subideal, when not generated.
    std::optional<PureBinomial> offending;
    /// Image of a fiber that quadratic moves fail to connect.
    std::optional<std::vector<long long>> disconnected_image;
};

/// Decides whether I_A is generated by quadratic binomials.  Two independent
/// routes must agree: reduction of every Markov generator against a basis of
/// the quadratic subideal, and connectivity of every fiber of degree up to
/// the bound under quadratic moves.
QuadraticGeneration generated_in_degree_two(const Configuration& a, int verify_bound = -1,
                                            const MarkovBasis* precomputed = nullptr);

/// Lemma hypothesis check: sum(left columns) = sum(right columns) with
/// disjoint supports, and for every pair from `left` the only degree-two
/// representation of its column sum is the pair itself.  A positive answer
/// certifies that I_A is not generated by quadratic binomials.
bool lemma1_check(const Configuration& a, const std::vector<int>& left,
                  const std::vector<int>& right);

} // namespace ctoric

#endif
