#include "ctoric/poset.hpp"

#include <algorithm>
#include <numeric>

namespace ctoric {

namespace {

std::vector<std::string> default_labels(int n) {
    std::vector<std::string> out(n);
    for (int i = 0; i < n; ++i) out[i] = "x" + std::to_string(i + 1);
    return out;
}

} // namespace

Poset poset_from_covers(int n, const std::vector<std::pair<int, int>>& covers) {
    if (n < 1 || n > 30) throw SizeLimitExceeded("poset size out of range: " + std::to_string(n));
    std::vector<std::uint32_t> above(n, 0);
    for (auto [i, j] : covers) {
        if (i < 0 || i >= n || j < 0 || j >= n)
            throw IndexOutOfRange("cover index out of range");
        if (i == j) throw CycleDetected("cover relates an element to itself");
        above[i] |= 1u << j;
    }
    // Warshall closure on bitmask rows.
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if ((above[i] >> k) & 1u) above[i] |= above[k];
    for (int i = 0; i < n; ++i) {
        if ((above[i] >> i) & 1u) throw CycleDetected("cover relation contains a directed cycle");
        for (int j = i + 1; j < n; ++j)
            if (((above[i] >> j) & 1u) && ((above[j] >> i) & 1u))
                throw CycleDetected("cover relation contains a directed cycle");
    }
    Poset p;
    p.n = n;
    p.labels = default_labels(n);
    p.above = std::move(above);
    p.below.assign(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (p.less(i, j)) p.below[j] |= 1u << i;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (!p.less(i, j)) continue;
            bool has_mid = (p.above[i] & p.below[j]) != 0;
            if (!has_mid) p.covers.emplace_back(i, j);
        }
    return p;
}

Poset relabel(const Poset& p, const VertexOrdering& ord) {
    if (!ord.is_permutation_of(p.n)) throw InvalidOrderHint("order hint is not a permutation");
    std::vector<std::pair<int, int>> covers;
    std::vector<int> pos(p.n);
    for (int t = 0; t < p.n; ++t) pos[ord.perm[t]] = t;
    for (auto [i, j] : p.covers) covers.emplace_back(pos[i], pos[j]);
    Poset out = poset_from_covers(p.n, covers);
    for (int t = 0; t < p.n; ++t) out.labels[t] = p.labels[ord.perm[t]];
    return out;
}

Graph comparability_graph(const Poset& p) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < p.n; ++i)
        for (int j = i + 1; j < p.n; ++j)
            if (p.comparable(i, j)) edges.emplace_back(i, j);
    return Graph::from_edges(p.n, std::move(edges));
}

bool is_connected(const Graph& g) {
    if (g.n == 0) return true;
    std::uint32_t seen = 1u, frontier = 1u;
    while (frontier) {
        std::uint32_t next = 0;
        for (int v = 0; v < g.n; ++v)
            if ((frontier >> v) & 1u) next |= g.adj[v];
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == (g.n == 32 ? ~0u : ((1u << g.n) - 1));
}

Multichain make_multichain(const Poset& p, std::vector<int> elems) {
    for (size_t a = 0; a < elems.size(); ++a)
        for (size_t b = a + 1; b < elems.size(); ++b)
            if (elems[a] != elems[b] && !p.comparable(elems[a], elems[b]))
                throw PreconditionViolated("multichain elements must be pairwise comparable");
    std::sort(elems.begin(), elems.end(),
              [&](int a, int b) { return a != b && p.less(a, b); });
    Multichain c;
    c.rho.assign(p.n, 0);
    for (int e : elems) ++c.rho[e];
    c.elems = std::move(elems);
    return c;
}

int MultichainFamily::index_of_rho(const std::vector<int>& rho) const {
    for (int i = 0; i < size(); ++i)
        if (members[i].rho == rho) return i;
    return -1;
}

namespace {

void sort_family(std::vector<Multichain>& members) {
    // Decreasing lexicographic order of rho: for i < j the first nonzero
    // entry of rho(C_i) - rho(C_j) is positive.
    std::sort(members.begin(), members.end(),
              [](const Multichain& a, const Multichain& b) { return a.rho > b.rho; });
}

void extend_multichains(const Poset& p, int d, bool strict, std::vector<int>& cur,
                        std::vector<Multichain>& out) {
    if (static_cast<int>(cur.size()) == d) {
        Multichain c;
        c.elems = cur;
        c.rho.assign(p.n, 0);
        for (int e : cur) ++c.rho[e];
        out.push_back(std::move(c));
        return;
    }
    int start = cur.empty() ? 0 : (strict ? cur.back() + 1 : cur.back());
    for (int v = start; v < p.n; ++v) {
        bool ok = true;
        for (int u : cur) {
            if (strict ? !p.less(u, v) : !(u == v || p.comparable(u, v))) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        cur.push_back(v);
        extend_multichains(p, d, strict, cur, out);
        cur.pop_back();
    }
}

} // namespace

MultichainFamily enumerate_multichains(const Poset& p, int d,
                                       const std::optional<VertexOrdering>& order_hint) {
    if (d < 2) throw PreconditionViolated("multichain length d must be at least 2");
    if (order_hint) {
        if (!order_hint->is_permutation_of(p.n))
            throw InvalidOrderHint("order hint is not a permutation");
        return enumerate_multichains(relabel(p, *order_hint), d);
    }
    MultichainFamily fam;
    fam.poset = p;
    fam.d = d;
    std::vector<int> cur;
    extend_multichains(p, d, false, cur, fam.members);
    // The DFS runs over index-sorted multisets; re-sort each into poset order.
    for (auto& c : fam.members) c = make_multichain(p, std::move(c.elems));
    sort_family(fam.members);
    return fam;
}

MultichainFamily enumerate_strict_chains(const Poset& p, int d) {
    if (d < 2) throw PreconditionViolated("chain length d must be at least 2");
    MultichainFamily fam;
    fam.poset = p;
    fam.d = d;
    std::vector<int> cur;
    extend_multichains(p, d, true, cur, fam.members);
    for (auto& c : fam.members) c = make_multichain(p, std::move(c.elems));
    sort_family(fam.members);
    return fam;
}

long long count_multichains_dp(const Poset& p, int d) {
    // f[t][j] = number of weakly increasing sequences of length t ending at j.
    std::vector<long long> f(p.n, 1);
    for (int t = 2; t <= d; ++t) {
        std::vector<long long> g(p.n, 0);
        for (int j = 0; j < p.n; ++j)
            for (int i = 0; i < p.n; ++i)
                if (p.leq(i, j)) g[j] += f[i];
        f = std::move(g);
    }
    return std::accumulate(f.begin(), f.end(), 0LL);
}

namespace {

void extend_posets(int n, std::vector<Poset>& out, const Poset& base) {
    if (base.n == n) {
        out.push_back(base);
        return;
    }
    const int k = base.n;
    const std::uint32_t full = (1u << k) - 1;
    for (std::uint32_t dmask = 0;; ++dmask) {
        if (dmask > full) break;
        bool down_closed = true;
        for (int d = 0; d < k && down_closed; ++d)
            if (((dmask >> d) & 1u) && (base.below[d] & ~dmask)) down_closed = false;
        if (down_closed) {
            std::uint32_t rest = full & ~dmask;
            for (std::uint32_t umask = 0;; umask = (umask - rest) & rest) {
                // iterate over submasks of rest, including 0
                bool ok = true;
                for (int u = 0; u < k && ok; ++u)
                    if (((umask >> u) & 1u) && (base.above[u] & ~umask)) ok = false;
                for (int d = 0; d < k && ok; ++d)
                    if (((dmask >> d) & 1u) && (umask & ~base.above[d])) ok = false;
                if (ok) {
                    std::vector<std::pair<int, int>> covers = base.covers;
                    for (int d = 0; d < k; ++d)
                        if ((dmask >> d) & 1u) covers.emplace_back(d, k);
                    for (int u = 0; u < k; ++u)
                        if ((umask >> u) & 1u) covers.emplace_back(k, u);
                    extend_posets(n, out, poset_from_covers(k + 1, covers));
                }
                if (umask == rest) break;
            }
        }
        if (dmask == full) break;
    }
}

} // namespace

std::vector<Poset> enumerate_posets(int n) {
    if (n < 1 || n > 6) throw SizeLimitExceeded("poset enumeration is guarded to n <= 6");
    std::vector<Poset> out;
    extend_posets(n, out, poset_from_covers(1, {}));
    return out;
}

std::uint64_t canonical_code(const Poset& p) {
    if (p.n > 8) throw SizeLimitExceeded("canonical code is limited to n <= 8");
    std::vector<int> perm(p.n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~0ull;
    do {
        std::uint64_t code = 0;
        for (int i = 0; i < p.n; ++i)
            for (int j = 0; j < p.n; ++j)
                code = (code << 1) | (p.less(perm[i], perm[j]) ? 1u : 0u);
        best = std::min(best, code);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

} // namespace ctoric
