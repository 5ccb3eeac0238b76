#ifndef CTORIC_THEOREMS_HPP
#define CTORIC_THEOREMS_HPP

#include <optional>
#include <vector>

#include "ctoric/chordal.hpp"
#include "ctoric/markov.hpp"

namespace ctoric {

/// The variable order used throughout: relabel the poset by a strong
/// perfect elimination ordering of its comparability graph, list the
/// multichains in decreasing lexicographic order of rho, and take the
/// reverse lexicographic order induced by y_1 < ... < y_m.
struct PaperOrder {
    VertexOrdering speo;       // position t holds the original element
    Poset relabeled;
    MultichainFamily family;   // over the relabeled poset
    MonomialOrder order;
};

PaperOrder paper_variable_order(const Poset& p, int d);

/// Witness that an induced even cycle obstructs quadratic generation: the
/// 2l+2 multichains of the cycle construction split into two disjoint index
/// multisets with equal column sums that pass the Lemma hypothesis.
struct EvenCycleWitness {
    std::vector<int> left, right;   // indices into the family
    std::vector<long long> image;   // the common column sum
};

EvenCycleWitness even_cycle_witness(const Poset& p, const std::vector<int>& cycle, int d,
                                    const MultichainFamily& family);

/// The seven relation families over a strong-PEO-labeled poset, instantiated
/// for every valid index tuple and interreduced (when four indices form a
/// chain the first exchange relation is the difference of the other two and
/// is skipped).  Initial monomial is the first one of each relation.
std::vector<PureBinomial> example_d2_basis(const Poset& p, const MultichainFamily& m2);

/// Loop columns 2e_v for every vertex followed by edge columns e_u + e_v;
/// grading (1/2, ..., 1/2).
Configuration abar_configuration(const Graph& g);

struct TheoremMainPerD {
    int d = 0;
    int m = 0;
    bool quadratic_generation = false;
    bool quadratic_groebner = false;
    /// True when the Groebner verdict was derived from the generation
    /// failure rather than computed under the constructed order.
    bool groebner_derived = false;
    std::vector<int> minimal_degrees;
    int gb_size = 0;
    int gb_max_degree = 0;
    std::optional<PureBinomial> offending;
    std::optional<EvenCycleWitness> witness;
    bool witness_valid = false;
};

struct TheoremMainReport {
    Poset poset;
    std::vector<int> d_list;
    bool chordal = false;
    std::optional<VertexOrdering> speo;
    std::optional<std::vector<int>> hole;
    std::vector<TheoremMainPerD> per_d;

    bool cond_i() const { return chordal; }
    bool cond_ii() const;   // generated in degree two for some d
    bool cond_iii() const;  // quadratic Groebner basis for some d
    bool cond_iv() const;   // generated in degree two for all d
    bool cond_v() const;    // quadratic Groebner basis for all d
    bool verdicts_agree() const;
};

TheoremMainReport verify_theorem_main(const Poset& p, const std::vector<int>& d_list);

/// Column index multisets into a configuration (for the graph theorem these
/// point into abar_configuration of the input graph).
struct ColumnWitness {
    std::vector<int> left, right;
};

struct TheoremSCReport {
    Graph graph;
    bool strongly_chordal = false;
    bool quadratic_groebner = false;
    bool quadratic_generation = false;
    bool groebner_derived = false;
    std::optional<VertexOrdering> speo;
    std::optional<std::vector<int>> hole;
    std::optional<SunObstruction> sun;
    std::optional<ColumnWitness> witness;
    bool witness_valid = false;
    int m = 0;
    int gb_size = 0;
    int gb_max_degree = 0;
    std::vector<int> minimal_degrees;

    bool verdicts_agree() const {
        return strongly_chordal == quadratic_groebner &&
               strongly_chordal == quadratic_generation;
    }
};

TheoremSCReport verify_theorem_sc(const Graph& g);

/// Proof identities for the graph theorem, as column witnesses.
ColumnWitness sun_witness_columns(const Graph& g, const std::vector<int>& sun_cycle);
ColumnWitness odd_cycle_witness_columns(const Graph& g, const std::vector<int>& cycle);
ColumnWitness even_cycle_witness_columns(const Graph& g, const std::vector<int>& cycle);

} // namespace ctoric

#endif
