#include "ctoric/groebner.hpp"

#include <algorithm>
#include <deque>
#include <queue>
#include <unordered_map>

namespace ctoric {

int ReducedGB::max_degree() const {
    int d = 0;
    for (const auto& f : basis) d = std::max(d, f.degree());
    return d;
}

namespace {

struct MonoHash {
    size_t operator()(const Monomial& m) const {
        size_t h = 1469598103934665603ull;
        for (int e : m) {
            h ^= static_cast<size_t>(e) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

struct Entry {
    PureBinomial f;
    std::uint64_t lead_mask = 0;
    int lead_deg = 0;
};

Entry make_entry(PureBinomial f) {
    Entry e;
    e.lead_mask = support_mask(f.lead());
    e.lead_deg = total_degree(f.lead());
    e.f = std::move(f);
    return e;
}

/// Basis storage with a hash index over the (dominant) quadratic initial
/// monomials; higher-degree initials are scanned with a support-mask filter.
struct Basis {
    std::vector<Entry> entries;
    std::unordered_map<Monomial, int, MonoHash> quad_leads;
    std::vector<int> other_leads;

    int size() const { return static_cast<int>(entries.size()); }

    void push(Entry e) {
        const int idx = size();
        if (e.lead_deg == 2)
            quad_leads.emplace(e.f.lead(), idx);
        else
            other_leads.push_back(idx);
        entries.push_back(std::move(e));
    }

    int find_divisor(const Monomial& u, std::uint64_t u_mask, int u_deg, int skip = -1) const {
        if (u_deg >= 2 && !quad_leads.empty()) {
            Monomial key(u.size(), 0);
            for (size_t a = 0; a < u.size(); ++a) {
                if (u[a] == 0) continue;
                for (size_t b = a; b < u.size(); ++b) {
                    if (u[b] == 0) continue;
                    if (a == b && u[a] < 2) continue;
                    key[a] += 1;
                    key[b] += 1;
                    auto it = quad_leads.find(key);
                    key[a] = 0;
                    key[b] = 0;
                    if (it != quad_leads.end() && it->second != skip) return it->second;
                }
            }
        }
        for (int i : other_leads) {
            if (i == skip) continue;
            const Entry& e = entries[i];
            if (e.lead_deg > u_deg) continue;
            if (e.lead_mask & ~u_mask) continue;
            if (mono_divides(e.f.lead(), u)) return i;
        }
        return -1;
    }

    Monomial reduce_monomial(Monomial u, int skip = -1) const {
        std::uint64_t mask = support_mask(u);
        int deg = total_degree(u);
        while (true) {
            int i = find_divisor(u, mask, deg, skip);
            if (i < 0) return u;
            const Entry& e = entries[i];
            u = mono_mul(mono_div(u, e.f.lead()), e.f.trail());
            mask = support_mask(u);
        }
    }

    std::optional<PureBinomial> reduce_binomial(const PureBinomial& f, const MonomialOrder& order,
                                                int skip = -1) const {
        Monomial a = reduce_monomial(f.plus, skip);
        Monomial b = reduce_monomial(f.minus, skip);
        if (a == b) return std::nullopt;
        return oriented(std::move(a), std::move(b), order);
    }
};

struct Pair {
    int i, j;
    Monomial lcm;
    std::uint64_t lcm_mask;
    int deg;
    int born;  // basis size when created, for the lazy B criterion
    long long seq;
};

struct MinDegreeCmp {
    bool operator()(const Pair& a, const Pair& b) const {
        if (a.deg != b.deg) return a.deg > b.deg;
        if (a.lcm != b.lcm) return a.lcm > b.lcm;
        if (a.i != b.i) return a.i > b.i;
        return a.j > b.j;
    }
};

class PairQueue {
public:
    explicit PairQueue(SPairStrategy strategy) : strategy_(strategy) {}

    void push(Pair p) {
        if (strategy_ == SPairStrategy::MinDegree)
            heap_.push(std::move(p));
        else
            fifo_.push_back(std::move(p));
    }
    bool empty() const {
        return strategy_ == SPairStrategy::MinDegree ? heap_.empty() : fifo_.empty();
    }
    Pair pop() {
        if (strategy_ == SPairStrategy::MinDegree) {
            Pair p = heap_.top();
            heap_.pop();
            return p;
        }
        Pair p = std::move(fifo_.front());
        fifo_.pop_front();
        return p;
    }

private:
    SPairStrategy strategy_;
    std::priority_queue<Pair, std::vector<Pair>, MinDegreeCmp> heap_;
    std::deque<Pair> fifo_;
};

/// Gebauer-Moeller update: pairs of the new element against the basis are
/// pruned by the M criterion (lcm properly divisible by a kept lcm), the F
/// criterion (one representative per lcm class) and the T criterion (classes
/// containing a coprime pair vanish).  Old pairs are handled lazily at pop.
void update(Basis& basis, PairQueue& pairs, Entry&& h, long long& seq) {
    const int t = basis.size();
    const Monomial& lead_h = h.f.lead();

    std::vector<Pair> fresh;
    fresh.reserve(t);
    for (int k = 0; k < t; ++k) {
        Pair p;
        p.i = k;
        p.j = t;
        p.lcm = mono_lcm(basis.entries[k].f.lead(), lead_h);
        p.lcm_mask = support_mask(p.lcm);
        p.deg = total_degree(p.lcm);
        p.born = t + 1;
        p.seq = 0;
        fresh.push_back(std::move(p));
    }
    std::sort(fresh.begin(), fresh.end(), [](const Pair& a, const Pair& b) {
        if (a.deg != b.deg) return a.deg < b.deg;
        if (a.lcm != b.lcm) return a.lcm < b.lcm;
        return a.i < b.i;
    });

    std::vector<Pair> kept;
    size_t a = 0;
    while (a < fresh.size()) {
        size_t b = a;
        while (b < fresh.size() && fresh[b].lcm == fresh[a].lcm) ++b;  // lcm class [a, b)
        bool dominated = false;
        for (const Pair& q : kept)
            if (!(q.lcm_mask & ~fresh[a].lcm_mask) && mono_divides(q.lcm, fresh[a].lcm)) {
                dominated = true;
                break;
            }
        if (!dominated) {
            bool coprime_class = false;
            for (size_t c = a; c < b && !coprime_class; ++c)
                if (total_degree(mono_gcd(basis.entries[fresh[c].i].f.lead(), lead_h)) == 0)
                    coprime_class = true;
            if (!coprime_class) kept.push_back(fresh[a]);
        }
        a = b;
    }
    for (auto& p : kept) {
        p.seq = seq++;
        pairs.push(std::move(p));
    }
    basis.push(std::move(h));
}

// B criterion, checked lazily: a later element h with lead dividing the lcm
// strictly between both one-sided lcms makes the pair redundant.
bool pair_obsolete(const Basis& basis, const Pair& p) {
    for (int k = p.born; k < basis.size(); ++k) {
        const Entry& e = basis.entries[k];
        if (e.lead_mask & ~p.lcm_mask) continue;
        if (!mono_divides(e.f.lead(), p.lcm)) continue;
        if (mono_lcm(basis.entries[p.i].f.lead(), e.f.lead()) == p.lcm) continue;
        if (mono_lcm(basis.entries[p.j].f.lead(), e.f.lead()) == p.lcm) continue;
        return true;
    }
    return false;
}

void interreduce(Basis& basis, const MonomialOrder& order) {
    std::vector<char> dead(basis.size(), 0);
    for (int i = 0; i < basis.size(); ++i) {
        const Monomial& li = basis.entries[i].f.lead();
        for (int j = 0; j < basis.size(); ++j) {
            if (i == j || dead[j]) continue;
            const Monomial& lj = basis.entries[j].f.lead();
            if (basis.entries[j].lead_mask & ~basis.entries[i].lead_mask) continue;
            if (mono_divides(lj, li) && (li != lj || j < i)) {
                dead[i] = 1;
                break;
            }
        }
    }
    Basis kept;
    for (int i = 0; i < basis.size(); ++i)
        if (!dead[i]) kept.push(std::move(basis.entries[i]));

    for (int i = 0; i < kept.size(); ++i) {
        Monomial tail = kept.reduce_monomial(kept.entries[i].f.trail(), i);
        PureBinomial f;
        f.plus = kept.entries[i].f.lead();
        f.minus = std::move(tail);
        f.initial_is_plus = true;
        if (compare(order, f.plus, f.minus) != Cmp::Greater)
            throw InternalInconsistency("tail reduction broke the orientation");
        kept.entries[i].f = std::move(f);
    }
    basis = std::move(kept);
}

} // namespace

Monomial normal_form(Monomial u, const std::vector<PureBinomial>& gb, const MonomialOrder&) {
    Basis basis;
    for (const auto& f : gb) basis.push(make_entry(f));
    return basis.reduce_monomial(std::move(u));
}

std::optional<PureBinomial> normal_form(const PureBinomial& f, const std::vector<PureBinomial>& gb,
                                        const MonomialOrder& order) {
    Basis basis;
    for (const auto& g : gb) basis.push(make_entry(g));
    return basis.reduce_binomial(f, order);
}

ReducedGB buchberger(std::vector<PureBinomial> gens, const MonomialOrder& order,
                     const BuchbergerOptions& options) {
    Basis basis;
    PairQueue pairs(options.strategy);
    long long seq = 0;

    for (auto& g : gens) {
        if (g.is_zero()) continue;
        PureBinomial f = oriented(std::move(g.plus), std::move(g.minus), order);
        if (auto h = basis.reduce_binomial(f, order))
            update(basis, pairs, make_entry(std::move(*h)), seq);
    }

    while (!pairs.empty()) {
        Pair p = pairs.pop();
        if (options.truncate_degree >= 0 && p.deg > options.truncate_degree) continue;
        if (pair_obsolete(basis, p)) continue;
        const Entry &fi = basis.entries[p.i], &fj = basis.entries[p.j];
        if (total_degree(mono_gcd(fi.f.lead(), fj.f.lead())) == 0) continue;
        Monomial sp = mono_mul(mono_div(p.lcm, fi.f.lead()), fi.f.trail());
        Monomial sm = mono_mul(mono_div(p.lcm, fj.f.lead()), fj.f.trail());
        if (sp == sm) continue;
        if (auto h = basis.reduce_binomial(oriented(std::move(sp), std::move(sm), order), order))
            update(basis, pairs, make_entry(std::move(*h)), seq);
    }

    interreduce(basis, order);

    ReducedGB out;
    out.order = order;
    out.basis.reserve(basis.entries.size());
    for (auto& e : basis.entries) out.basis.push_back(std::move(e.f));
    std::sort(out.basis.begin(), out.basis.end(), [](const PureBinomial& a, const PureBinomial& b) {
        int da = total_degree(a.plus), db = total_degree(b.plus);
        if (da != db) return da < db;
        if (a.plus != b.plus) return a.plus < b.plus;
        return a.minus < b.minus;
    });
    return out;
}

std::vector<Monomial> initial_ideal_generators(const ReducedGB& gb) {
    std::vector<Monomial> out;
    out.reserve(gb.basis.size());
    for (const auto& f : gb.basis) out.push_back(f.lead());
    return out;
}

bool is_squarefree(const std::vector<Monomial>& mons) {
    for (const auto& u : mons)
        for (int e : u)
            if (e > 1) return false;
    return true;
}

} // namespace ctoric
