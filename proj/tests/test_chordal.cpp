#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "ctoric/chordal.hpp"
#include "ctoric/poset.hpp"

using namespace ctoric;

namespace {

Graph cycle_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, std::move(e));
}

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph::from_edges(n, std::move(e));
}

Graph graph_from_mask(int n, std::uint32_t mask) {
    std::vector<std::pair<int, int>> e;
    int b = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++b)
            if ((mask >> b) & 1) e.emplace_back(u, v);
    return Graph::from_edges(n, std::move(e));
}

bool brute_force_has_strong_peo(const Graph& g) {
    std::vector<int> perm(g.n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        if (verify_strong_peo(g, VertexOrdering{perm})) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// Exhaustive hole search over vertex subsets (the certificate oracle).
bool brute_force_has_hole(const Graph& g) { return !induced_long_cycles(g).empty(); }

} // namespace

TEST_CASE("verify_peo basics") {
    VertexOrdering id4{{0, 1, 2, 3}};
    CHECK(verify_peo(complete_graph(4), id4));

    Graph c4 = cycle_graph(4);
    std::vector<int> perm{0, 1, 2, 3};
    do {
        CHECK(!verify_peo(c4, VertexOrdering{perm}));
    } while (std::next_permutation(perm.begin(), perm.end()));

    Graph path = Graph::from_edges(3, {{0, 1}, {1, 2}});
    CHECK(verify_peo(path, VertexOrdering{{0, 2, 1}}));
}

TEST_CASE("verify_strong_peo basics") {
    for (int n = 2; n <= 5; ++n) {
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        CHECK(verify_strong_peo(complete_graph(n), VertexOrdering{perm}));
    }

    // No ordering of the sun S_3 is a strong elimination ordering.
    Graph s3 = complete_sun(3);
    std::vector<int> perm(6);
    std::iota(perm.begin(), perm.end(), 0);
    bool any = false;
    do {
        if (verify_strong_peo(s3, VertexOrdering{perm})) any = true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(!any);

    // Triangle plus pendant vertex, pendant first.
    Graph g = Graph::from_edges(4, {{1, 2}, {1, 3}, {2, 3}, {0, 1}});
    CHECK(verify_strong_peo(g, VertexOrdering{{0, 1, 2, 3}}));
}

TEST_CASE("simple elimination orderings need not be strong") {
    // a-c, a-d, b-c, c-d: (a,b,c,d) eliminates simple vertices in order but
    // fails the quadruple condition.
    Graph g = Graph::from_edges(4, {{0, 2}, {0, 3}, {1, 2}, {2, 3}});
    CHECK(is_simple_vertex(g, 0, 0xF));
    CHECK(verify_peo(g, VertexOrdering{{0, 1, 2, 3}}));
    CHECK(!verify_strong_peo(g, VertexOrdering{{0, 1, 2, 3}}));
    // find_strong_peo must still return a valid strong ordering.
    auto cert = find_strong_peo(g);
    CHECK(cert.strongly_chordal);
    CHECK(verify_strong_peo(g, *cert.speo));
}

TEST_CASE("find_peo certificates") {
    auto c4 = find_peo(cycle_graph(4));
    CHECK(!c4.chordal);
    REQUIRE(c4.hole.has_value());
    CHECK(c4.hole->size() == 4);

    CHECK(find_peo(complete_graph(3)).chordal);

    // two triangles sharing a vertex
    Poset p = poset_from_covers(5, {{0, 1}, {1, 2}, {0, 3}, {3, 4}});
    auto cert = find_peo(comparability_graph(p));
    CHECK(cert.chordal);
    CHECK(verify_peo(comparability_graph(p), *cert.peo));
}

TEST_CASE("find_strong_peo certificates") {
    auto s3 = find_strong_peo(complete_sun(3));
    CHECK(!s3.strongly_chordal);
    REQUIRE(s3.sun.has_value());
    CHECK(s3.sun->cycle.size() == 6);

    Graph edgeless = Graph::from_edges(3, {});
    auto e = find_strong_peo(edgeless);
    CHECK(e.strongly_chordal);
    CHECK(verify_strong_peo(edgeless, *e.speo));

    auto c5 = find_strong_peo(cycle_graph(5));
    CHECK(!c5.strongly_chordal);
    REQUIRE(c5.hole.has_value());
    CHECK(*c5.hole == std::vector<int>{0, 1, 2, 3, 4});
}

TEST_CASE("sun graph construction") {
    Graph s3 = complete_sun(3);
    CHECK(s3.edge_count() == 9);
    CHECK_THROWS_AS(sun_graph(3, {{0, 2}}), InvalidInnerEdge);
    CHECK_THROWS_AS(sun_graph(2, {}), PreconditionViolated);

    std::vector<std::pair<int, int>> inner_cycle{{1, 3}, {3, 5}, {5, 7}, {1, 7}};
    CHECK(sun_graph(4, inner_cycle).edge_count() == 12);

    // odd-position vertices form an independent set
    for (int i = 0; i < 6; i += 2)
        for (int j = i + 2; j < 6; j += 2) CHECK(!s3.has_edge(i, j));
}

TEST_CASE("strong condition variants agree on perfect elimination orderings") {
    for (int n = 2; n <= 5; ++n) {
        const int pairs = n * (n - 1) / 2;
        for (std::uint32_t mask = 0; mask < (1u << pairs); mask += (n == 5 ? 7 : 1)) {
            Graph g = graph_from_mask(n, mask);
            std::vector<int> perm(n);
            std::iota(perm.begin(), perm.end(), 0);
            do {
                VertexOrdering ord{perm};
                if (!verify_peo(g, ord)) continue;
                CHECK(verify_strong_peo(g, ord) == verify_strong_peo_cond2(g, ord));
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
    }
}

TEST_CASE("strong verdict equals brute force over all orderings, n <= 5") {
    for (int n = 1; n <= 5; ++n) {
        const int pairs = n * (n - 1) / 2;
        for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
            Graph g = graph_from_mask(n, mask);
            auto cert = find_strong_peo(g);
            CHECK(cert.strongly_chordal == brute_force_has_strong_peo(g));
            if (cert.speo) CHECK(verify_strong_peo(g, *cert.speo));
        }
    }
}

TEST_CASE("strong verdict equals brute force on six-vertex graphs (sampled)") {
    // a deterministic stride through the 2^15 graphs plus the known edge cases
    for (std::uint32_t mask = 0; mask < (1u << 15); mask += 97) {
        Graph g = graph_from_mask(6, mask);
        CHECK(find_strong_peo(g).strongly_chordal == brute_force_has_strong_peo(g));
    }
    CHECK(!find_strong_peo(complete_sun(3)).strongly_chordal);
    CHECK(brute_force_has_strong_peo(complete_graph(6)));
}

TEST_CASE("chordality verdict matches the exhaustive hole oracle") {
    for (int n = 1; n <= 5; ++n) {
        const int pairs = n * (n - 1) / 2;
        for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
            Graph g = graph_from_mask(n, mask);
            auto cert = find_peo(g);
            CHECK(cert.chordal == !brute_force_has_hole(g));
            if (cert.hole) {
                // returned hole is an induced cycle of length >= 4
                const auto& h = *cert.hole;
                CHECK(h.size() >= 4);
                for (size_t a = 0; a < h.size(); ++a)
                    for (size_t b = a + 1; b < h.size(); ++b) {
                        bool consecutive = (b == a + 1) || (a == 0 && b == h.size() - 1);
                        CHECK(g.has_edge(h[a], h[b]) == consecutive);
                    }
            }
        }
    }
}

TEST_CASE("strong implies perfect elimination") {
    for (std::uint32_t mask = 0; mask < (1u << 10); mask += 3) {
        Graph g = graph_from_mask(5, mask);
        std::vector<int> perm(5);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            VertexOrdering ord{perm};
            if (verify_strong_peo(g, ord)) CHECK(verify_peo(g, ord));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
}

TEST_CASE("chordal comparability graphs are strongly chordal (checked fact)") {
    for (int n = 1; n <= 5; ++n)
        for (const Poset& p : enumerate_posets(n)) {
            Graph g = comparability_graph(p);
            if (find_peo(g).chordal) CHECK(find_strong_peo(g).strongly_chordal);
        }
}
