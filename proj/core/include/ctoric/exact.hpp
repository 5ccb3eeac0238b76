#ifndef CTORIC_EXACT_HPP
#define CTORIC_EXACT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

#include "ctoric/errors.hpp"

namespace ctoric {

// All lattice and feasibility computations run in exact arithmetic; machine
// integers appear only where the values are provably tiny (exponents, column
// entries of desk-scale configurations).
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IntVec = std::vector<Int>;
using IntMat = std::vector<IntVec>;
using RatVec = std::vector<Rat>;

inline long long checked_narrow(const Int& v, const char* what) {
    if (v > Int(std::numeric_limits<long long>::max()) ||
        v < Int(std::numeric_limits<long long>::min()))
        throw Error(std::string("integer overflow narrowing ") + what);
    return static_cast<long long>(v);
}

/// "p/q" (or "p" when integral), used in JSON output of gradings.
inline std::string rat_to_string(const Rat& r) {
    Int num = boost::multiprecision::numerator(r);
    Int den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

inline Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

} // namespace ctoric

#endif
