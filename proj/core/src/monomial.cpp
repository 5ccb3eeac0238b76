#include "ctoric/monomial.hpp"

#include <algorithm>

namespace ctoric {

namespace {
constexpr int kExponentCap = 1 << 24;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        r[i] = a[i] + b[i];
        if (r[i] > kExponentCap) throw Error("exponent overflow");
    }
    return r;
}

Monomial mono_div(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        r[i] = a[i] - b[i];
        if (r[i] < 0) throw Error("inexact monomial division");
    }
    return r;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

Monomial mono_gcd(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = std::min(a[i], b[i]);
    return r;
}

MonomialOrder MonomialOrder::lex(int m) {
    MonomialOrder o;
    o.kind = Kind::Lex;
    o.perm.resize(m);
    for (int i = 0; i < m; ++i) o.perm[i] = i;
    return o;
}

MonomialOrder MonomialOrder::grevlex(int m) {
    MonomialOrder o = lex(m);
    o.kind = Kind::GrevLex;
    return o;
}

MonomialOrder MonomialOrder::revlex_increasing(int m) {
    MonomialOrder o = lex(m);
    o.kind = Kind::RevLex;
    return o;
}

MonomialOrder MonomialOrder::revlex_cheapest(int m, int cheap) {
    MonomialOrder o;
    o.kind = Kind::RevLex;
    o.perm.reserve(m);
    o.perm.push_back(cheap);
    for (int i = 0; i < m; ++i)
        if (i != cheap) o.perm.push_back(i);
    return o;
}

MonomialOrder MonomialOrder::with_weights(std::vector<long long> w) const {
    MonomialOrder o = *this;
    o.weights = std::move(w);
    return o;
}

Cmp compare(const MonomialOrder& order, const Monomial& a, const Monomial& b) {
    if (!order.weights.empty()) {
        long long wa = 0, wb = 0;
        for (size_t i = 0; i < a.size(); ++i) {
            wa += order.weights[i] * a[i];
            wb += order.weights[i] * b[i];
        }
        if (wa != wb) return wa < wb ? Cmp::Less : Cmp::Greater;
    }
    switch (order.kind) {
    case MonomialOrder::Kind::Lex:
        for (int v : order.perm) {
            if (a[v] != b[v]) return a[v] > b[v] ? Cmp::Greater : Cmp::Less;
        }
        return Cmp::Equal;
    case MonomialOrder::Kind::GrevLex: {
        int da = total_degree(a), db = total_degree(b);
        if (da != db) return da > db ? Cmp::Greater : Cmp::Less;
        for (auto it = order.perm.rbegin(); it != order.perm.rend(); ++it) {
            if (a[*it] != b[*it]) return a[*it] < b[*it] ? Cmp::Greater : Cmp::Less;
        }
        return Cmp::Equal;
    }
    case MonomialOrder::Kind::RevLex: {
        int da = total_degree(a), db = total_degree(b);
        if (da != db)
            throw InhomogeneousRevlex("reverse lexicographic comparison of unequal degrees");
        for (int v : order.perm) {
            if (a[v] != b[v]) return a[v] > b[v] ? Cmp::Less : Cmp::Greater;
        }
        return Cmp::Equal;
    }
    }
    return Cmp::Equal;
}

PureBinomial oriented(Monomial a, Monomial b, const MonomialOrder& order) {
    PureBinomial f;
    f.initial_is_plus = compare(order, a, b) != Cmp::Less;
    f.plus = std::move(a);
    f.minus = std::move(b);
    return f;
}

std::string monomial_to_string(const Monomial& a) {
    if (total_degree(a) == 0) return "1";
    std::string s;
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += "y" + std::to_string(i + 1);
        if (a[i] > 1) s += "^" + std::to_string(a[i]);
    }
    return s;
}

std::string binomial_to_string(const PureBinomial& f) {
    return monomial_to_string(f.lead()) + " - " + monomial_to_string(f.trail());
}

} // namespace ctoric
