#include "ctoric/intlin.hpp"

#include <algorithm>
#include <cassert>

namespace ctoric {

namespace {

// Extended gcd: g = s*a + t*b, g >= 0.
Int xgcd(const Int& a, const Int& b, Int& s, Int& t) {
    if (b == 0) {
        s = a < 0 ? -1 : 1;
        t = 0;
        return abs(a);
    }
    Int s1, t1;
    Int g = xgcd(b, a % b, s1, t1);
    s = t1;
    t = s1 - (a / b) * t1;
    return g;
}

Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

void add_multiple(IntVec& dst, const IntVec& src, const Int& k) {
    if (k == 0) return;
    for (size_t j = 0; j < dst.size(); ++j) dst[j] += k * src[j];
}

} // namespace

RowHermite row_hermite(IntMat m) {
    const int rows = static_cast<int>(m.size());
    const int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());

    RowHermite out;
    out.u.assign(rows, IntVec(rows, 0));
    for (int i = 0; i < rows; ++i) out.u[i][i] = 1;

    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (m[i][c] != 0) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(m[piv], m[r]);
        std::swap(out.u[piv], out.u[r]);

        for (int i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            Int s, t;
            Int g = xgcd(m[r][c], m[i][c], s, t);
            Int ar = m[r][c] / g, ai = m[i][c] / g;
            IntVec new_r(cols), new_i(cols), new_ur(rows), new_ui(rows);
            for (int j = 0; j < cols; ++j) {
                new_r[j] = s * m[r][j] + t * m[i][j];
                new_i[j] = ar * m[i][j] - ai * m[r][j];
            }
            for (int j = 0; j < rows; ++j) {
                new_ur[j] = s * out.u[r][j] + t * out.u[i][j];
                new_ui[j] = ar * out.u[i][j] - ai * out.u[r][j];
            }
            m[r] = std::move(new_r);
            m[i] = std::move(new_i);
            out.u[r] = std::move(new_ur);
            out.u[i] = std::move(new_ui);
        }
        if (m[r][c] < 0) {
            for (auto& v : m[r]) v = -v;
            for (auto& v : out.u[r]) v = -v;
        }
        for (int i = 0; i < r; ++i) {
            Int q = floor_div(m[i][c], m[r][c]);
            if (q != 0) {
                add_multiple(m[i], m[r], -q);
                add_multiple(out.u[i], out.u[r], -q);
            }
        }
        ++r;
    }
    out.rank = r;
    out.h = std::move(m);
    return out;
}

IntMat integer_kernel(const IntMat& a) {
    const int n = static_cast<int>(a.size());
    const int m = n == 0 ? 0 : static_cast<int>(a[0].size());
    if (m == 0) return {};

    IntMat at(m, IntVec(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) at[j][i] = a[i][j];

    RowHermite rh = row_hermite(std::move(at));
    IntMat kernel;
    for (int i = rh.rank; i < m; ++i) kernel.push_back(rh.u[i]);
    if (kernel.empty()) return kernel;
    // Canonicalize the kernel basis itself.
    RowHermite canon = row_hermite(std::move(kernel));
    canon.h.resize(canon.rank);
    return canon.h;
}

int rational_rank(const IntMat& a) {
    return row_hermite(a).rank;
}

ColumnLattice::ColumnLattice(const IntMat& a) {
    n_ = static_cast<int>(a.size());
    const int m = n_ == 0 ? 0 : static_cast<int>(a[0].size());
    IntMat at(m, IntVec(n_, 0));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < m; ++j) at[j][i] = a[i][j];
    RowHermite rh = row_hermite(std::move(at));
    rank_ = rh.rank;
    rows_.assign(rh.h.begin(), rh.h.begin() + rh.rank);
    pivot_.resize(rank_);
    for (int i = 0; i < rank_; ++i) {
        int p = 0;
        while (p < n_ && rows_[i][p] == 0) ++p;
        pivot_[i] = p;
    }
}

bool ColumnLattice::contains(const IntVec& z) const {
    assert(static_cast<int>(z.size()) == n_);
    IntVec w = z;
    for (int i = 0; i < rank_; ++i) {
        const int p = pivot_[i];
        if (w[p] % rows_[i][p] != 0) return false;
        Int q = w[p] / rows_[i][p];
        if (q != 0)
            for (int j = 0; j < n_; ++j) w[j] -= q * rows_[i][j];
    }
    for (const auto& v : w)
        if (v != 0) return false;
    return true;
}

std::optional<RatVec> solve_rational(const std::vector<RatVec>& a, const RatVec& b) {
    const int n = static_cast<int>(a.size());
    const int m = n == 0 ? 0 : static_cast<int>(a[0].size());
    std::vector<RatVec> t(n, RatVec(m + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < m; ++j) t[i][j] = a[i][j];
        t[i][m] = b[i];
    }
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < m && r < n; ++c) {
        int piv = -1;
        for (int i = r; i < n; ++i)
            if (t[i][c] != 0) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(t[piv], t[r]);
        Rat inv = t[r][c];
        for (int j = c; j <= m; ++j) t[r][j] /= inv;
        for (int i = 0; i < n; ++i) {
            if (i == r || t[i][c] == 0) continue;
            Rat f = t[i][c];
            for (int j = c; j <= m; ++j) t[i][j] -= f * t[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (int i = r; i < n; ++i)
        if (t[i][m] != 0) return std::nullopt;
    RatVec x(m, Rat(0));
    for (int i = 0; i < r; ++i) x[pivot_col[i]] = t[i][m];
    return x;
}

bool feasible_nonnegative(const std::vector<RatVec>& a, const RatVec& b) {
    const int n = static_cast<int>(a.size());
    const int m = n == 0 ? 0 : static_cast<int>(a[0].size());

    // Tableau with one artificial variable per row; minimize their sum.
    const int total = m + n;
    std::vector<RatVec> t(n, RatVec(total + 1, Rat(0)));
    for (int i = 0; i < n; ++i) {
        bool neg = b[i] < 0;
        for (int j = 0; j < m; ++j) t[i][j] = neg ? -a[i][j] : a[i][j];
        t[i][m + i] = 1;
        t[i][total] = neg ? -b[i] : b[i];
    }
    std::vector<int> basis(n);
    for (int i = 0; i < n; ++i) basis[i] = m + i;

    // Reduced-cost row for objective = sum of artificials; cost[total]
    // holds the negated objective so pivots update it uniformly.
    RatVec cost(total + 1, Rat(0));
    for (int j = 0; j <= total; ++j) {
        Rat s(0);
        for (int i = 0; i < n; ++i) s += t[i][j];
        cost[j] = (j < m || j == total ? Rat(0) : Rat(1)) - s;
    }

    while (true) {
        int enter = -1; // Bland: smallest index with negative reduced cost
        for (int j = 0; j < total; ++j)
            if (cost[j] < 0) { enter = j; break; }
        if (enter < 0) break;
        int leave = -1;
        Rat best(0);
        for (int i = 0; i < n; ++i) {
            if (t[i][enter] <= 0) continue;
            Rat ratio = t[i][total] / t[i][enter];
            if (leave < 0 || ratio < best ||
                (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave < 0) break; // unbounded: cannot happen in phase one
        Rat p = t[leave][enter];
        for (int j = 0; j <= total; ++j) t[leave][j] /= p;
        for (int i = 0; i < n; ++i) {
            if (i == leave || t[i][enter] == 0) continue;
            Rat f = t[i][enter];
            for (int j = 0; j <= total; ++j) t[i][j] -= f * t[leave][j];
        }
        Rat f = cost[enter];
        if (f != 0)
            for (int j = 0; j <= total; ++j) cost[j] -= f * t[leave][j];
        basis[leave] = enter;
    }
    return cost[total] == 0;
}

} // namespace ctoric
