#include <doctest.h>

#include <algorithm>
#include <random>

#include "ctoric/configuration.hpp"
#include "ctoric/groebner.hpp"
#include "ctoric/markov.hpp"

using namespace ctoric;

namespace {

Monomial mono(std::initializer_list<int> exps) { return Monomial(exps); }

PureBinomial binom(Monomial plus, Monomial minus) {
    PureBinomial f;
    f.plus = std::move(plus);
    f.minus = std::move(minus);
    return f;
}

Monomial random_monomial(std::mt19937_64& rng, int m, int max_exp) {
    std::uniform_int_distribution<int> dist(0, max_exp);
    Monomial u(m);
    for (int i = 0; i < m; ++i) u[i] = dist(rng);
    return u;
}

} // namespace

TEST_CASE("reverse lexicographic comparison calibration") {
    MonomialOrder rev = MonomialOrder::revlex_increasing(3);
    // y1*y3 vs y2^2: more of the smallest variable means smaller
    CHECK(compare(rev, mono({1, 0, 1}), mono({0, 2, 0})) == Cmp::Less);
    CHECK(compare(rev, mono({0, 2, 0}), mono({1, 0, 1})) == Cmp::Greater);
    CHECK(compare(rev, mono({1, 0, 1}), mono({1, 0, 1})) == Cmp::Equal);
    CHECK_THROWS_AS(compare(rev, mono({1, 0, 0}), mono({1, 1, 0})), InhomogeneousRevlex);
}

TEST_CASE("lex comparison convention y1 > y2") {
    MonomialOrder lex = MonomialOrder::lex(2);
    CHECK(compare(lex, mono({1, 0}), mono({0, 1})) == Cmp::Greater);
    CHECK(compare(lex, mono({0, 3}), mono({1, 0})) == Cmp::Less);
}

TEST_CASE("grevlex distinguishes itself from lex") {
    MonomialOrder o = MonomialOrder::grevlex(3);
    // classic: y1*y3 < y2^2 in grevlex, > in lex
    CHECK(compare(o, mono({1, 0, 1}), mono({0, 2, 0})) == Cmp::Less);
    CHECK(compare(MonomialOrder::lex(3), mono({1, 0, 1}), mono({0, 2, 0})) == Cmp::Greater);
    // degree dominates
    CHECK(compare(o, mono({3, 0, 0}), mono({0, 1, 1})) == Cmp::Greater);
}

TEST_CASE("order axioms on random monomials") {
    std::mt19937_64 rng(20240817);
    const int m = 5;
    std::vector<MonomialOrder> orders{MonomialOrder::lex(m), MonomialOrder::grevlex(m),
                                      MonomialOrder::revlex_cheapest(m, 2)};
    for (int iter = 0; iter < 2000; ++iter) {
        for (const auto& o : orders) {
            Monomial a = random_monomial(rng, m, 3);
            Monomial b = random_monomial(rng, m, 3);
            Monomial c = random_monomial(rng, m, 2);
            if (o.kind == MonomialOrder::Kind::RevLex &&
                total_degree(a) != total_degree(b))
                continue;
            Cmp ab = compare(o, a, b), ba = compare(o, b, a);
            CHECK((ab == Cmp::Equal) == (a == b));
            if (ab == Cmp::Less) CHECK(ba == Cmp::Greater);
            if (ab == Cmp::Greater) CHECK(ba == Cmp::Less);
            // multiplicativity
            CHECK(compare(o, mono_mul(a, c), mono_mul(b, c)) == ab);
        }
    }
    // transitivity on equal-degree triples for the paper order
    MonomialOrder rev = MonomialOrder::revlex_increasing(m);
    int done = 0;
    while (done < 500) {
        Monomial a = random_monomial(rng, m, 2);
        Monomial b = random_monomial(rng, m, 2);
        Monomial c = random_monomial(rng, m, 2);
        if (total_degree(a) != total_degree(b) || total_degree(b) != total_degree(c)) continue;
        ++done;
        if (compare(rev, a, b) != Cmp::Greater && compare(rev, b, c) != Cmp::Greater)
            CHECK(compare(rev, a, c) != Cmp::Greater);
    }
}

TEST_CASE("normal form examples") {
    MonomialOrder rev = MonomialOrder::revlex_increasing(3);
    // variables y1 = y11, y2 = y12, y3 = y22 for the 2-chain; the relation
    // y12^2 - y11*y22 reduces to zero against itself
    PureBinomial f = oriented(mono({0, 2, 0}), mono({1, 0, 1}), rev);
    CHECK(f.lead() == mono({0, 2, 0}));
    CHECK(!normal_form(f, {f}, rev).has_value());

    // untouched when nothing divides
    PureBinomial g = oriented(mono({0, 2, 0}), mono({1, 0, 1}), rev);
    auto nf = normal_form(g, {}, rev);
    REQUIRE(nf.has_value());
    CHECK(nf->same_oriented(g));

    // single division step on a monomial
    MonomialOrder grl = MonomialOrder::grevlex(5);
    PureBinomial r = oriented(mono({1, 1, 0, 0, 0}), mono({0, 0, 0, 1, 1}), grl);
    CHECK(normal_form(mono({1, 1, 1, 0, 0}), {r}, grl) == mono({0, 0, 1, 1, 1}));
}

TEST_CASE("buchberger on the twisted cubic lattice basis") {
    // the two lattice-basis quadrics alone: a two-element reduced basis
    // (their initials are coprime), strictly smaller than the toric ideal
    MonomialOrder o = MonomialOrder::grevlex(4);
    std::vector<PureBinomial> gens{binom(mono({0, 2, 0, 0}), mono({1, 0, 1, 0})),
                                   binom(mono({0, 0, 2, 0}), mono({0, 1, 0, 1}))};
    ReducedGB gb = buchberger(gens, o);
    CHECK(gb.size() == 2);

    // the full toric ideal needs the third quadric
    Configuration a = Configuration::from_columns({{3, 0}, {2, 1}, {1, 2}, {0, 3}});
    MarkovBasis mb = markov_basis(a);
    ReducedGB toric_gb = buchberger(mb.gens, o);
    CHECK(toric_gb.size() == 3);
    bool found = false;
    for (const auto& f : toric_gb.basis)
        if (f.lead() == mono({0, 1, 1, 0}) && f.trail() == mono({1, 0, 0, 1})) found = true;
    CHECK(found);

    auto inits = initial_ideal_generators(toric_gb);
    std::sort(inits.begin(), inits.end());
    CHECK(inits == std::vector<Monomial>{mono({0, 0, 2, 0}), mono({0, 1, 1, 0}),
                                         mono({0, 2, 0, 0})});
}

TEST_CASE("twisted cubic quadrics connect every small fiber (oracle)") {
    // Brute-force check that the three quadrics generate in degrees 2 and 3:
    // within each fiber, moves by those quadrics alone reach every monomial.
    Configuration a = Configuration::from_columns({{3, 0}, {2, 1}, {1, 2}, {0, 3}});
    MarkovBasis mb = markov_basis(a);
    REQUIRE(mb.max_degree == 2);
    for (int t = 2; t <= 3; ++t) {
        std::vector<Monomial> all;
        for (int e1 = 0; e1 <= t; ++e1)
            for (int e2 = 0; e2 + e1 <= t; ++e2)
                for (int e3 = 0; e3 + e2 + e1 <= t; ++e3)
                    all.push_back(mono({e1, e2, e3, t - e1 - e2 - e3}));
        for (size_t x = 0; x < all.size(); ++x)
            for (size_t y = x + 1; y < all.size(); ++y) {
                if (a.image(all[x]) != a.image(all[y])) continue;
                std::vector<Monomial> frontier{all[x]};
                std::vector<Monomial> seen{all[x]};
                bool reached = false;
                while (!frontier.empty() && !reached) {
                    Monomial u = frontier.back();
                    frontier.pop_back();
                    for (const auto& f : mb.gens)
                        for (int dir = 0; dir < 2; ++dir) {
                            const Monomial& from = dir ? f.plus : f.minus;
                            const Monomial& to = dir ? f.minus : f.plus;
                            if (!mono_divides(from, u)) continue;
                            Monomial v = mono_mul(mono_div(u, from), to);
                            if (v == all[y]) reached = true;
                            if (std::find(seen.begin(), seen.end(), v) == seen.end()) {
                                seen.push_back(v);
                                frontier.push_back(v);
                            }
                        }
                }
                CHECK(reached);
            }
    }
}

TEST_CASE("buchberger trivial inputs") {
    MonomialOrder o = MonomialOrder::grevlex(4);
    CHECK(buchberger({}, o).size() == 0);
    // a single binomial with coprime sides is its own reduced basis
    std::vector<PureBinomial> gens{binom(mono({1, 1, 0, 0}), mono({0, 0, 1, 1}))};
    ReducedGB gb = buchberger(gens, o);
    REQUIRE(gb.size() == 1);
    CHECK(gb.basis[0].lead() == mono({1, 1, 0, 0}));
}

TEST_CASE("reduced basis is independent of generator order and strategy") {
    Configuration a = Configuration::from_columns({{3, 0}, {2, 1}, {1, 2}, {0, 3}});
    MarkovBasis mb = markov_basis(a);
    std::mt19937_64 rng(7);
    for (const auto& order :
         {MonomialOrder::grevlex(4), MonomialOrder::lex(4), MonomialOrder::revlex_cheapest(4, 1)}) {
        ReducedGB reference = buchberger(mb.gens, order);
        for (int iter = 0; iter < 10; ++iter) {
            std::vector<PureBinomial> shuffled = mb.gens;
            std::shuffle(shuffled.begin(), shuffled.end(), rng);
            BuchbergerOptions opts;
            opts.strategy = iter % 2 ? SPairStrategy::Fifo : SPairStrategy::MinDegree;
            ReducedGB gb = buchberger(shuffled, order, opts);
            REQUIRE(gb.size() == reference.size());
            for (int i = 0; i < gb.size(); ++i)
                CHECK(gb.basis[i].same_oriented(reference.basis[i]));
        }
    }
}

TEST_CASE("homogeneity is preserved: equal images on both sides") {
    Configuration a =
        Configuration::from_columns({{2, 0, 0}, {0, 2, 0}, {1, 1, 0}, {1, 0, 1}, {0, 0, 2}});
    MarkovBasis mb = markov_basis(a);
    ReducedGB gb = buchberger(mb.gens, MonomialOrder::grevlex(a.m));
    for (const auto& f : gb.basis) {
        CHECK(a.image(f.plus) == a.image(f.minus));
        CHECK(total_degree(f.plus) == total_degree(f.minus));
    }
}

TEST_CASE("squarefree detection") {
    CHECK(is_squarefree({}));
    CHECK(is_squarefree({mono({1, 1, 0}), mono({0, 1, 1})}));
    CHECK(!is_squarefree({mono({0, 2, 0})}));
}

TEST_CASE("truncated completion matches full membership below the bound") {
    Configuration a = Configuration::from_columns({{3, 0}, {2, 1}, {1, 2}, {0, 3}});
    MarkovBasis mb = markov_basis(a);
    MonomialOrder o = MonomialOrder::grevlex(4);
    BuchbergerOptions opts;
    opts.truncate_degree = 2;
    ReducedGB partial = buchberger(mb.gens, o, opts);
    ReducedGB full = buchberger(mb.gens, o);
    for (const auto& f : full.basis)
        if (f.degree() <= 2) CHECK(!normal_form(f, partial.basis, o).has_value());
}
