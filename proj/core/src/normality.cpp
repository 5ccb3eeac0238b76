#include "ctoric/normality.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <unordered_map>

#include "ctoric/poset.hpp"

namespace ctoric {

namespace {

struct VecHash {
    size_t operator()(const std::vector<long long>& v) const {
        size_t h = 1469598103934665603ull;
        for (long long e : v) {
            h ^= static_cast<size_t>(e) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

} // namespace

GradedMonoidView::GradedMonoidView(Configuration cfg)
    : cfg_(std::move(cfg)), lattice_([&] {
          IntMat rows(cfg_.n, IntVec(cfg_.m));
          for (int i = 0; i < cfg_.n; ++i)
              for (int j = 0; j < cfg_.m; ++j) rows[i][j] = cfg_.cols[j][i];
          return rows;
      }()) {
    if (cfg_.n == 0) throw PreconditionViolated("empty configuration");
    for (const auto& c : cfg_.grading)
        if (c != cfg_.grading[0])
            throw PreconditionViolated("monoid view expects a uniform grading");
    Rat inv = cfg_.grading.empty() ? Rat(0) : cfg_.grading[0];
    if (inv <= 0) throw PreconditionViolated("monoid view expects a positive grading");
    Rat dq = 1 / inv;
    if (boost::multiprecision::denominator(dq) != 1)
        throw PreconditionViolated("grading denominator must be integral");
    d_ = static_cast<int>(boost::multiprecision::numerator(dq));

    // When every d*e_i is a column the cone is the whole orthant.
    std::vector<char> has(cfg_.n, 0);
    for (const auto& col : cfg_.cols) {
        int nonzero = -1;
        bool single = true;
        for (int i = 0; i < cfg_.n; ++i) {
            if (col[i] == 0) continue;
            if (nonzero >= 0) single = false;
            nonzero = i;
        }
        if (single && nonzero >= 0 && col[nonzero] == d_) has[nonzero] = 1;
    }
    cone_is_orthant_ = std::all_of(has.begin(), has.end(), [](char c) { return c != 0; });
}

bool GradedMonoidView::in_lattice(const std::vector<long long>& z) const {
    IntVec v(z.begin(), z.end());
    return lattice_.contains(v);
}

bool GradedMonoidView::in_cone(const RatVec& q) const {
    for (const auto& x : q)
        if (x < 0) return false;
    if (cone_is_orthant_) return true;
    std::vector<RatVec> rows(cfg_.n, RatVec(cfg_.m));
    for (int i = 0; i < cfg_.n; ++i)
        for (int j = 0; j < cfg_.m; ++j) rows[i][j] = Rat(cfg_.cols[j][i]);
    return feasible_nonnegative(rows, q);
}

bool GradedMonoidView::in_cone(const std::vector<long long>& z) const {
    RatVec q(z.size());
    for (size_t i = 0; i < z.size(); ++i) q[i] = Rat(z[i]);
    return in_cone(q);
}

bool GradedMonoidView::in_monoid(const std::vector<long long>& z) const {
    for (long long x : z)
        if (x < 0) return false;
    long long total = std::accumulate(z.begin(), z.end(), 0LL);
    if (total % d_ != 0) return false;

    std::unordered_map<std::vector<long long>, bool, VecHash> memo;
    // key: remaining vector with the current column index appended
    std::function<bool(int, std::vector<long long>&)> rec =
        [&](int col, std::vector<long long>& remaining) -> bool {
        if (std::all_of(remaining.begin(), remaining.end(), [](long long x) { return x == 0; }))
            return true;
        if (col == cfg_.m) return false;
        std::vector<long long> key = remaining;
        key.push_back(col);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        bool ok = false;
        int e = 0;
        while (!ok) {
            if (e > 0) {
                bool fits = true;
                for (int i = 0; i < cfg_.n && fits; ++i)
                    if (cfg_.cols[col][i] > remaining[i]) fits = false;
                if (!fits) break;
                for (int i = 0; i < cfg_.n; ++i) remaining[i] -= cfg_.cols[col][i];
            }
            ok = rec(col + 1, remaining);
            ++e;
        }
        for (int i = 0; i < cfg_.n; ++i) remaining[i] += static_cast<long long>(e - 1) * cfg_.cols[col][i];
        memo.emplace(std::move(key), ok);
        return ok;
    };
    std::vector<long long> remaining = z;
    return rec(0, remaining);
}

namespace {

void enumerate_degree(int n, long long total, std::vector<long long>& cur, int idx,
                      const std::function<void(const std::vector<long long>&)>& visit) {
    if (idx == n - 1) {
        cur[idx] = total;
        visit(cur);
        return;
    }
    for (long long v = 0; v <= total; ++v) {
        cur[idx] = v;
        enumerate_degree(n, total - v, cur, idx + 1, visit);
    }
}

} // namespace

std::vector<MonoidHole> GradedMonoidView::holes_up_to(int t_max) const {
    if (t_max < 1) throw PreconditionViolated("t_max must be at least 1");
    std::vector<MonoidHole> holes;
    std::vector<long long> cur(cfg_.n, 0);
    for (int t = 1; t <= t_max; ++t) {
        enumerate_degree(cfg_.n, static_cast<long long>(t) * d_, cur, 0,
                         [&](const std::vector<long long>& z) {
                             if (in_lattice(z) && in_cone(z) && !in_monoid(z))
                                 holes.push_back({t, z});
                         });
    }
    return holes;
}

bool is_disjoint_union_of_chains(const Poset& p) {
    Graph g = comparability_graph(p);
    std::vector<int> comp(p.n, -1);
    int c = 0;
    for (int v = 0; v < p.n; ++v) {
        if (comp[v] >= 0) continue;
        std::vector<int> stack{v};
        comp[v] = c;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w = 0; w < p.n; ++w)
                if (g.has_edge(u, w) && comp[w] < 0) {
                    comp[w] = c;
                    stack.push_back(w);
                }
        }
        ++c;
    }
    for (int a = 0; a < p.n; ++a)
        for (int b = a + 1; b < p.n; ++b)
            if (comp[a] == comp[b] && !p.comparable(a, b)) return false;
    return true;
}

bool normalization_equals_veronese(const GradedMonoidView& view, const Poset& p, int t_max) {
    if (!is_connected(comparability_graph(p)))
        throw NotConnected("normalization comparison expects a connected poset");
    const int n = view.config().n;
    bool equal = true;
    std::vector<long long> cur(n, 0);
    for (int t = 1; t <= t_max && equal; ++t) {
        enumerate_degree(n, static_cast<long long>(t) * view.d(), cur, 0,
                         [&](const std::vector<long long>& z) {
                             if (!equal) return;
                             if (!view.in_lattice(z) || !view.in_cone(z)) equal = false;
                         });
    }
    return equal;
}

} // namespace ctoric
