#ifndef CTORIC_MONOMIAL_HPP
#define CTORIC_MONOMIAL_HPP

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "ctoric/errors.hpp"

namespace ctoric {

/// Exponent vector over y_1..y_m.  Exponents stay tiny at desk scale;
/// arithmetic guards against overflow anyway.
using Monomial = std::vector<int>;

inline int total_degree(const Monomial& a) {
    return std::accumulate(a.begin(), a.end(), 0);
}

inline bool mono_divides(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Monomial mono_mul(const Monomial& a, const Monomial& b);
Monomial mono_div(const Monomial& a, const Monomial& b);  // exact, pre: b | a
Monomial mono_lcm(const Monomial& a, const Monomial& b);
Monomial mono_gcd(const Monomial& a, const Monomial& b);

/// Bit per occurring variable; cheap necessary test for divisibility.
inline std::uint64_t support_mask(const Monomial& a) {
    std::uint64_t m = 0;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0) m |= 1ull << (i & 63);
    return m;
}

enum class Cmp { Less, Equal, Greater };

/// Total orders on monomials.
///   Lex      perm lists variables from most to least significant.
///   GrevLex  degree first, ties by the standard reverse scan of perm.
///   RevLex   the paper's order: perm lists variables increasing,
///            y_{perm[0]} < y_{perm[1]} < ...; only defined on monomials of
///            equal total degree, and among those the one with the larger
///            exponent at the first differing listed variable is smaller.
/// A nonempty weight vector is compared first (weight_then semantics).
struct MonomialOrder {
    enum class Kind { Lex, GrevLex, RevLex };
    Kind kind = Kind::GrevLex;
    std::vector<int> perm;
    std::vector<long long> weights;

    static MonomialOrder lex(int m);
    static MonomialOrder grevlex(int m);
    /// y_1 < y_2 < ... < y_m.
    static MonomialOrder revlex_increasing(int m);
    /// Reverse lexicographic with the given variable cheapest.
    static MonomialOrder revlex_cheapest(int m, int cheap);

    MonomialOrder with_weights(std::vector<long long> w) const;
};

Cmp compare(const MonomialOrder& order, const Monomial& a, const Monomial& b);

/// y^plus - y^minus with a designated initial side.
struct PureBinomial {
    Monomial plus, minus;
    bool initial_is_plus = true;

    const Monomial& lead() const { return initial_is_plus ? plus : minus; }
    const Monomial& trail() const { return initial_is_plus ? minus : plus; }
    bool is_zero() const { return plus == minus; }
    int degree() const { return std::max(total_degree(plus), total_degree(minus)); }

    /// Oriented equality: same initial and same trailing monomial.
    bool same_oriented(const PureBinomial& o) const {
        return lead() == o.lead() && trail() == o.trail();
    }
};

/// Orients a difference of monomials by the order; a zero difference keeps
/// initial_is_plus = true.
PureBinomial oriented(Monomial a, Monomial b, const MonomialOrder& order);

std::string monomial_to_string(const Monomial& a);
std::string binomial_to_string(const PureBinomial& f);

} // namespace ctoric

#endif
