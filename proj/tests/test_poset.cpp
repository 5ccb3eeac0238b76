#include <doctest.h>

#include <set>

#include "ctoric/poset.hpp"

using namespace ctoric;

namespace {

// The poset of the worked example: maximal chains x1 > x2 and x2 < x3.
Poset intro_poset() { return poset_from_covers(3, {{1, 0}, {1, 2}}); }

Poset chain(int n) {
    std::vector<std::pair<int, int>> covers;
    for (int i = 0; i + 1 < n; ++i) covers.emplace_back(i, i + 1);
    return poset_from_covers(n, covers);
}

long long binomial(int n, int k) {
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Independent count of strict orders on n elements by brute force over all
// relations (used as the oracle for the enumerator).
int brute_force_poset_count(int n) {
    const int pairs = n * n;
    int count = 0;
    for (int mask = 0; mask < (1 << pairs); ++mask) {
        auto rel = [&](int i, int j) { return (mask >> (i * n + j)) & 1; };
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            if (rel(i, i)) ok = false;
        for (int i = 0; i < n && ok; ++i)
            for (int j = 0; j < n && ok; ++j)
                if (i != j && rel(i, j) && rel(j, i)) ok = false;
        for (int i = 0; i < n && ok; ++i)
            for (int j = 0; j < n && ok; ++j)
                for (int k = 0; k < n && ok; ++k)
                    if (rel(i, j) && rel(j, k) && !rel(i, k)) ok = false;
        if (ok) ++count;
    }
    return count;
}

} // namespace

TEST_CASE("poset from covers computes the closure") {
    Poset p = poset_from_covers(3, {{0, 1}, {1, 2}});
    CHECK(p.less(0, 1));
    CHECK(p.less(1, 2));
    CHECK(p.less(0, 2));  // transitivity
    CHECK(!p.less(2, 0));
    CHECK(p.covers.size() == 2);  // (0,2) is not a cover
}

TEST_CASE("intro poset structure") {
    Poset p = intro_poset();
    CHECK(p.less(1, 0));
    CHECK(p.less(1, 2));
    CHECK(!p.comparable(0, 2));
    Graph g = comparability_graph(p);
    CHECK(g.edges == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
}

TEST_CASE("antichain has an edgeless comparability graph") {
    Poset p = poset_from_covers(2, {});
    CHECK(comparability_graph(p).edge_count() == 0);
}

TEST_CASE("chain gives a complete comparability graph") {
    CHECK(comparability_graph(chain(3)).edge_count() == 3);
}

TEST_CASE("cycles are rejected") {
    CHECK_THROWS_AS(poset_from_covers(3, {{0, 1}, {1, 2}, {2, 0}}), CycleDetected);
    CHECK_THROWS_AS(poset_from_covers(2, {{0, 0}}), CycleDetected);
    CHECK_THROWS_AS(poset_from_covers(2, {{0, 5}}), IndexOutOfRange);
}

TEST_CASE("intro poset multichains for d=3 match the printed columns") {
    MultichainFamily fam = enumerate_multichains(intro_poset(), 3);
    REQUIRE(fam.size() == 7);
    std::vector<std::vector<int>> expected{{3, 0, 0}, {2, 1, 0}, {1, 2, 0}, {0, 3, 0},
                                           {0, 2, 1}, {0, 1, 2}, {0, 0, 3}};
    for (int i = 0; i < 7; ++i) CHECK(fam.members[i].rho == expected[i]);
}

TEST_CASE("two-element chain multichains for d=2") {
    MultichainFamily fam = enumerate_multichains(chain(2), 2);
    REQUIRE(fam.size() == 3);
    CHECK(fam.members[0].rho == std::vector<int>{2, 0});
    CHECK(fam.members[1].rho == std::vector<int>{1, 1});
    CHECK(fam.members[2].rho == std::vector<int>{0, 2});
}

TEST_CASE("antichain multichains are the constant ones") {
    MultichainFamily fam = enumerate_multichains(poset_from_covers(2, {}), 2);
    REQUIRE(fam.size() == 2);
    CHECK(fam.members[0].rho == std::vector<int>{2, 0});
    CHECK(fam.members[1].rho == std::vector<int>{0, 2});
}

TEST_CASE("multichain elements are stored in poset order") {
    // x2 < x1: the multiset {x1, x2} lists x2 first
    Poset p = poset_from_covers(2, {{1, 0}});
    MultichainFamily fam = enumerate_multichains(p, 2);
    int idx = fam.index_of_rho({1, 1});
    REQUIRE(idx >= 0);
    CHECK(fam.members[idx].elems == std::vector<int>{1, 0});
}

TEST_CASE("strict chains") {
    MultichainFamily fam = enumerate_strict_chains(chain(3), 2);
    REQUIRE(fam.size() == 3);
    CHECK(enumerate_strict_chains(poset_from_covers(2, {}), 2).size() == 0);

    // maximal chains x1<x2<x3 and x1<x4<x5: the 2-chains are the six edges
    Poset p = poset_from_covers(5, {{0, 1}, {1, 2}, {0, 3}, {3, 4}});
    CHECK(enumerate_strict_chains(p, 2).size() == 6);
}

TEST_CASE("multichain counts agree with the dynamic programming oracle") {
    for (int n = 1; n <= 4; ++n)
        for (const Poset& p : enumerate_posets(n))
            for (int d = 2; d <= 3; ++d)
                CHECK(count_multichains_dp(p, d) == enumerate_multichains(p, d).size());
}

TEST_CASE("chain multichain count is binomial(n+d-1, d)") {
    for (int n = 1; n <= 5; ++n)
        for (int d = 2; d <= 3; ++d)
            CHECK(enumerate_multichains(chain(n), d).size() == binomial(n + d - 1, d));
}

TEST_CASE("family ordering invariant: decreasing lexicographic rho") {
    for (const Poset& p : enumerate_posets(4)) {
        MultichainFamily fam = enumerate_multichains(p, 2);
        for (int i = 0; i + 1 < fam.size(); ++i) CHECK(fam.members[i].rho > fam.members[i + 1].rho);
    }
}

TEST_CASE("poset enumeration counts") {
    CHECK(enumerate_posets(1).size() == 1);
    CHECK(enumerate_posets(2).size() == 3);
    CHECK(enumerate_posets(3).size() == 19);
    CHECK(enumerate_posets(4).size() == 219);
    CHECK_THROWS_AS(enumerate_posets(7), SizeLimitExceeded);
}

TEST_CASE("poset enumeration agrees with brute force over relations") {
    CHECK(brute_force_poset_count(1) == 1);
    CHECK(brute_force_poset_count(2) == 3);
    CHECK(brute_force_poset_count(3) == 19);
    CHECK(static_cast<int>(enumerate_posets(3).size()) == brute_force_poset_count(3));
}

TEST_CASE("enumerated posets are pairwise distinct") {
    std::set<std::vector<std::uint32_t>> seen;
    for (const Poset& p : enumerate_posets(4)) CHECK(seen.insert(p.above).second);
}

TEST_CASE("canonical code identifies isomorphic posets") {
    Poset a = poset_from_covers(3, {{0, 1}});
    Poset b = poset_from_covers(3, {{2, 0}});
    CHECK(canonical_code(a) == canonical_code(b));
    CHECK(canonical_code(a) != canonical_code(chain(3)));
}

TEST_CASE("relabeling by an order hint") {
    Poset p = intro_poset();
    VertexOrdering ord{{1, 0, 2}};  // x2 becomes the first element
    Poset q = relabel(p, ord);
    CHECK(q.less(0, 1));
    CHECK(q.less(0, 2));
    CHECK(!q.comparable(1, 2));
    CHECK_THROWS_AS(enumerate_multichains(p, 2, VertexOrdering{{0, 0, 2}}), InvalidOrderHint);
}

TEST_CASE("rejects d below 2") {
    CHECK_THROWS_AS(enumerate_multichains(chain(2), 1), PreconditionViolated);
}
