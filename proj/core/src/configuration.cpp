#include "ctoric/configuration.hpp"

#include "ctoric/intlin.hpp"

namespace ctoric {

Configuration Configuration::from_columns(std::vector<std::vector<long long>> columns) {
    Configuration a;
    a.m = static_cast<int>(columns.size());
    a.n = a.m == 0 ? 0 : static_cast<int>(columns[0].size());
    auto c = grading_witness(columns);
    if (!c) throw PreconditionViolated("matrix is not a configuration: no grading witness");
    a.cols = std::move(columns);
    a.grading = std::move(*c);
    return a;
}

std::vector<long long> Configuration::image(const Monomial& u) const {
    std::vector<long long> z(n, 0);
    for (int j = 0; j < m; ++j) {
        if (u[j] == 0) continue;
        for (int i = 0; i < n; ++i) z[i] += static_cast<long long>(u[j]) * cols[j][i];
    }
    return z;
}

Rat Configuration::image_degree(const std::vector<long long>& z) const {
    Rat d(0);
    for (int i = 0; i < n; ++i) d += grading[i] * Rat(z[i]);
    return d;
}

std::optional<RatVec> grading_witness(const std::vector<std::vector<long long>>& cols) {
    const int m = static_cast<int>(cols.size());
    if (m == 0) return RatVec{};
    const int n = static_cast<int>(cols[0].size());
    std::vector<RatVec> a(m, RatVec(n));
    RatVec b(m, Rat(1));
    for (int j = 0; j < m; ++j)
        for (int i = 0; i < n; ++i) a[j][i] = Rat(cols[j][i]);
    return solve_rational(a, b);
}

Configuration configuration_from_family(const MultichainFamily& fam) {
    Configuration a;
    a.n = fam.poset.n;
    a.m = fam.size();
    a.cols.reserve(a.m);
    for (const auto& c : fam.members)
        a.cols.emplace_back(c.rho.begin(), c.rho.end());
    a.grading.assign(a.n, Rat(1, fam.d));
    return a;
}

KernelLattice kernel_lattice(const Configuration& a) {
    IntMat rows(a.n, IntVec(a.m));
    for (int i = 0; i < a.n; ++i)
        for (int j = 0; j < a.m; ++j) rows[i][j] = a.cols[j][i];
    IntMat basis = integer_kernel(rows);
    KernelLattice out;
    for (const auto& row : basis) {
        std::vector<long long> v(a.m);
        for (int j = 0; j < a.m; ++j) v[j] = checked_narrow(row[j], "kernel basis entry");
        out.basis.push_back(std::move(v));
    }
    return out;
}

PureBinomial binomial_from_kernel_vector(const std::vector<long long>& b) {
    PureBinomial f;
    f.plus.assign(b.size(), 0);
    f.minus.assign(b.size(), 0);
    for (size_t j = 0; j < b.size(); ++j) {
        if (b[j] > 0) f.plus[j] = static_cast<int>(b[j]);
        if (b[j] < 0) f.minus[j] = static_cast<int>(-b[j]);
    }
    return f;
}

} // namespace ctoric
