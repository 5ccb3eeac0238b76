#include "ctoric/chordal.hpp"

#include <algorithm>
#include <queue>

namespace ctoric {

namespace {

inline std::uint32_t bit(int v) { return 1u << v; }

inline std::uint32_t full_mask(int n) { return n == 0 ? 0 : (bit(n - 1) << 1) - 1; }

// Positions-adjacency: pa[t] = mask of positions adjacent to position t.
std::vector<std::uint32_t> position_adjacency(const Graph& g, const VertexOrdering& ord) {
    const int n = g.n;
    std::vector<std::uint32_t> pa(n, 0);
    for (int s = 0; s < n; ++s)
        for (int t = s + 1; t < n; ++t)
            if (g.has_edge(ord.perm[s], ord.perm[t])) {
                pa[s] |= bit(t);
                pa[t] |= bit(s);
            }
    return pa;
}

} // namespace

bool verify_peo(const Graph& g, const VertexOrdering& ord) {
    if (!ord.is_permutation_of(g.n)) throw InvalidOrderHint("ordering is not a permutation");
    std::uint32_t later = full_mask(g.n);
    for (int t = 0; t < g.n; ++t) {
        const int v = ord.perm[t];
        later &= ~bit(v);
        std::uint32_t nbrs = g.adj[v] & later;
        for (int u = 0; u < g.n; ++u)
            if ((nbrs >> u) & 1u)
                if (nbrs & ~(g.adj[u] | bit(u))) return false;
    }
    return true;
}

bool verify_strong_peo(const Graph& g, const VertexOrdering& ord) {
    if (!verify_peo(g, ord)) return false;
    const int n = g.n;
    auto pa = position_adjacency(g, ord);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j + 1 < n; ++j) {
            std::uint32_t high = full_mask(n) & ~((bit(j) << 1) - 1);  // positions > j
            std::uint32_t K = pa[i] & pa[j] & high;
            std::uint32_t L = pa[i] & ~pa[j] & high;
            if (!K || !L) continue;
            int k0 = __builtin_ctz(K);
            if (L >> (k0 + 1)) return false;  // some l in L with l > min(K)
        }
    }
    return true;
}

bool verify_strong_peo_cond2(const Graph& g, const VertexOrdering& ord) {
    if (!verify_peo(g, ord)) return false;
    const int n = g.n;
    auto pa = position_adjacency(g, ord);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = k + 1; l < n; ++l) {
                    if (j == l) continue;
                    if (((pa[i] >> k) & 1u) && ((pa[i] >> l) & 1u) && ((pa[j] >> k) & 1u))
                        if (!((pa[j] >> l) & 1u)) return false;
                }
    return true;
}

namespace {

// Shortest induced-cycle certificate: v has nonadjacent neighbours a, b; a
// shortest a-b path avoiding N[v]\{a,b} closes to a chordless cycle with v.
std::optional<std::vector<int>> hole_through(const Graph& g, std::uint32_t mask, int v) {
    std::uint32_t nbrs = g.adj[v] & mask;
    for (int a = 0; a < g.n; ++a) {
        if (!((nbrs >> a) & 1u)) continue;
        for (int b = a + 1; b < g.n; ++b) {
            if (!((nbrs >> b) & 1u) || g.has_edge(a, b)) continue;
            std::uint32_t allowed = (mask & ~nbrs & ~bit(v)) | bit(a) | bit(b);
            std::vector<int> parent(g.n, -1);
            std::queue<int> q;
            q.push(a);
            parent[a] = a;
            while (!q.empty() && parent[b] < 0) {
                int u = q.front();
                q.pop();
                std::uint32_t next = g.adj[u] & allowed;
                for (int w = 0; w < g.n; ++w)
                    if (((next >> w) & 1u) && parent[w] < 0) {
                        parent[w] = u;
                        q.push(w);
                    }
            }
            if (parent[b] < 0) continue;
            std::vector<int> path;
            for (int w = b; w != a; w = parent[w]) path.push_back(w);
            path.push_back(a);
            path.push_back(v);  // cycle order: a .. b v
            std::reverse(path.begin(), path.end());
            return path;
        }
    }
    return std::nullopt;
}

std::vector<int> canonical_cycle(std::vector<int> cyc) {
    const int L = static_cast<int>(cyc.size());
    int mi = static_cast<int>(std::min_element(cyc.begin(), cyc.end()) - cyc.begin());
    std::vector<int> fwd(L), bwd(L);
    for (int i = 0; i < L; ++i) {
        fwd[i] = cyc[(mi + i) % L];
        bwd[i] = cyc[(mi - i + L) % L];
    }
    return fwd[1] < bwd[1] ? fwd : bwd;
}

std::vector<int> extract_hole(const Graph& g, std::uint32_t mask) {
    for (int v = 0; v < g.n; ++v) {
        if (!((mask >> v) & 1u)) continue;
        if (auto h = hole_through(g, mask, v)) return canonical_cycle(*h);
    }
    throw InternalInconsistency("no hole found in a non-chordal subgraph");
}

} // namespace

ChordalityCertificate find_peo(const Graph& g) {
    ChordalityCertificate cert;
    std::uint32_t mask = full_mask(g.n);
    VertexOrdering ord;
    while (mask) {
        int found = -1;
        for (int v = 0; v < g.n && found < 0; ++v) {
            if (!((mask >> v) & 1u)) continue;
            std::uint32_t nbrs = g.adj[v] & mask;
            bool clique = true;
            for (int u = 0; u < g.n && clique; ++u)
                if ((nbrs >> u) & 1u)
                    if (nbrs & ~(g.adj[u] | bit(u))) clique = false;
            if (clique) found = v;
        }
        if (found < 0) {
            cert.chordal = false;
            cert.hole = extract_hole(g, mask);
            return cert;
        }
        ord.perm.push_back(found);
        mask &= ~bit(found);
    }
    cert.chordal = true;
    cert.peo = std::move(ord);
    return cert;
}

bool is_simple_vertex(const Graph& g, int v, std::uint32_t mask) {
    std::uint32_t nbrs = g.adj[v] & mask;
    std::vector<std::uint32_t> cn;
    for (int u = 0; u < g.n; ++u)
        if ((nbrs >> u) & 1u) cn.push_back((g.adj[u] | bit(u)) & mask);
    for (size_t a = 0; a < cn.size(); ++a)
        for (size_t b = a + 1; b < cn.size(); ++b)
            if ((cn[a] & ~cn[b]) && (cn[b] & ~cn[a])) return false;
    return true;
}

namespace {

bool strong_order_dfs(const Graph& g, std::vector<int>& placed, std::uint32_t remaining) {
    if (!remaining) return true;
    const int t = static_cast<int>(placed.size());
    for (int v = 0; v < g.n; ++v) {
        if (!((remaining >> v) & 1u)) continue;
        if (!is_simple_vertex(g, v, remaining)) continue;
        // Quadruples ending at the new position t: positions i<j<k<t with
        // v_i~v_k, v_i~v, v_j~v_k must force v_j~v.
        bool ok = true;
        for (int j = 1; j < t && ok; ++j) {
            if (g.has_edge(placed[j], v)) continue;
            for (int i = 0; i < j && ok; ++i) {
                if (!g.has_edge(placed[i], v)) continue;
                for (int k = j + 1; k < t; ++k)
                    if (g.has_edge(placed[i], placed[k]) && g.has_edge(placed[j], placed[k])) {
                        ok = false;
                        break;
                    }
            }
        }
        if (!ok) continue;
        placed.push_back(v);
        if (strong_order_dfs(g, placed, remaining & ~bit(v))) return true;
        placed.pop_back();
    }
    return false;
}

struct PairWalk {
    std::vector<int> cycle;
};

// Does G[S] with independent candidate set U form a sun?  If so returns the
// cycle order u w u w ... starting at the smallest U vertex.
std::optional<std::vector<int>> sun_cycle(const Graph& g, std::uint32_t s_mask, std::uint32_t u_mask) {
    std::vector<int> us;
    for (int v = 0; v < g.n; ++v)
        if ((u_mask >> v) & 1u) us.push_back(v);
    for (int u : us) {
        if (g.adj[u] & u_mask) return std::nullopt;  // not independent
        if (__builtin_popcount(g.adj[u] & s_mask) != 2) return std::nullopt;
    }
    // The pairs {neighbours of u} must cover every W vertex exactly twice
    // and close into one cycle.
    std::uint32_t w_mask = s_mask & ~u_mask;
    std::vector<int> incident(g.n, 0);
    for (int u : us) {
        std::uint32_t pr = g.adj[u] & s_mask;
        for (int w = 0; w < g.n; ++w)
            if ((pr >> w) & 1u) ++incident[w];
    }
    for (int w = 0; w < g.n; ++w)
        if (((w_mask >> w) & 1u) && incident[w] != 2) return std::nullopt;

    const int ell = static_cast<int>(us.size());
    int u1 = us.front();
    std::uint32_t pr = g.adj[u1] & s_mask;
    int first = __builtin_ctz(pr);
    std::vector<int> cycle{u1, first};
    std::uint32_t used_u = bit(u1);
    int cur_w = first;
    for (int step = 1; step < ell; ++step) {
        int next_u = -1;
        for (int u : us)
            if (!((used_u >> u) & 1u) && ((g.adj[u] >> cur_w) & 1u)) {
                next_u = u;
                break;
            }
        if (next_u < 0) return std::nullopt;
        std::uint32_t p2 = (g.adj[next_u] & s_mask) & ~bit(cur_w);
        if (!p2) return std::nullopt;
        cur_w = __builtin_ctz(p2);
        cycle.push_back(next_u);
        cycle.push_back(cur_w);
        used_u |= bit(next_u);
    }
    // Closure: the last W vertex must be the other neighbour of u1.
    if (!((g.adj[u1] >> cur_w) & 1u) || cur_w == first) return std::nullopt;
    if (static_cast<int>(cycle.size()) != 2 * ell) return std::nullopt;
    return cycle;
}

std::optional<SunObstruction> find_induced_sun(const Graph& g) {
    const int n = g.n;
    for (int size = 6; size <= n; size += 2) {
        for (std::uint32_t s_mask = 0; s_mask < bit(n); ++s_mask) {
            if (__builtin_popcount(s_mask) != size) continue;
            // Candidate independent sets: submasks of size/2.
            for (std::uint32_t u_mask = s_mask;; u_mask = (u_mask - 1) & s_mask) {
                if (__builtin_popcount(u_mask) == size / 2)
                    if (auto cyc = sun_cycle(g, s_mask, u_mask))
                        return SunObstruction{*cyc};
                if (u_mask == 0) break;
            }
        }
    }
    return std::nullopt;
}

} // namespace

StrongChordalityCertificate find_strong_peo(const Graph& g) {
    StrongChordalityCertificate cert;
    ChordalityCertificate chord = find_peo(g);
    if (!chord.chordal) {
        cert.strongly_chordal = false;
        cert.hole = chord.hole;
        return cert;
    }
    // Verdict: repeated removal of simple vertices succeeds iff strongly chordal.
    std::uint32_t mask = full_mask(g.n);
    bool ok = true;
    while (mask && ok) {
        int v = -1;
        for (int u = 0; u < g.n && v < 0; ++u)
            if (((mask >> u) & 1u) && is_simple_vertex(g, u, mask)) v = u;
        if (v < 0)
            ok = false;
        else
            mask &= ~bit(v);
    }
    cert.strongly_chordal = ok;
    if (ok) {
        // Greedy simple orderings need not satisfy the quadruple condition;
        // search with incremental checks, restricted to simple vertices.
        std::vector<int> placed;
        if (!strong_order_dfs(g, placed, full_mask(g.n)))
            throw InternalInconsistency("simple elimination succeeded but no strong ordering found");
        cert.speo = VertexOrdering{std::move(placed)};
        if (!verify_strong_peo(g, *cert.speo))
            throw InternalInconsistency("constructed ordering fails the strong condition");
        return cert;
    }
    if (g.n <= 12)
        cert.sun = find_induced_sun(g);
    else
        cert.sun_search_skipped = true;
    return cert;
}

std::vector<std::vector<int>> induced_long_cycles(const Graph& g) {
    if (g.n > 16) throw SizeLimitExceeded("induced cycle enumeration is guarded to n <= 16");
    std::vector<std::vector<int>> out;
    for (std::uint32_t s = 0; s < bit(g.n); ++s) {
        const int size = __builtin_popcount(s);
        if (size < 4) continue;
        bool two_regular = true;
        for (int v = 0; v < g.n && two_regular; ++v)
            if ((s >> v) & 1u)
                if (__builtin_popcount(g.adj[v] & s) != 2) two_regular = false;
        if (!two_regular) continue;
        // Walk the cycle; connectedness makes it a single one.
        int start = __builtin_ctz(s);
        std::vector<int> cyc{start};
        int prev = -1, cur = start;
        while (true) {
            std::uint32_t nb = g.adj[cur] & s;
            if (prev >= 0) nb &= ~bit(prev);
            int nxt = __builtin_ctz(nb);
            if (nxt == start) break;
            cyc.push_back(nxt);
            prev = cur;
            cur = nxt;
        }
        if (static_cast<int>(cyc.size()) == size) out.push_back(canonical_cycle(cyc));
    }
    return out;
}

} // namespace ctoric
