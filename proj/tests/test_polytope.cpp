#include "demazure/polytope.hpp"

#include "demazure/lp.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace dmz;

namespace {

IntWeight w(std::initializer_list<int> v) {
    IntWeight out;
    for (int x : v) out.push_back(Int(x));
    return out;
}

RatWeight rw(std::initializer_list<int> v) {
    RatWeight out;
    for (int x : v) out.push_back(Rat(x));
    return out;
}

}  // namespace

TEST_CASE("vertex sets") {
    WeylGroup a2(RootDatum::build('A', 2));
    CHECK(vertex_set(a2, w({3, 1}), a2.identity()) == std::vector<IntWeight>{w({3, 1})});
    CHECK(vertex_set(a2, w({2, 2}), a2.from_word({0, 1, 0})).size() == 6);
    // singular weight: stabilizer collapses vertices
    CHECK(vertex_set(a2, w({1, 0}), a2.longest()).size() == 3);

    WeylGroup a3(RootDatum::build('A', 3));
    auto verts = vertex_set(a3, w({5, 4, 6}), a3.from_word({1, 0}));
    CHECK(verts.size() == 4);
    CHECK_THROWS_AS(vertex_set(a3, w({-1, 0, 0}), 0), std::invalid_argument);
}

TEST_CASE("inequality counts follow coset sizes") {
    WeylGroup a2(RootDatum::build('A', 2));
    CHECK(inequality_set(a2, w({2, 2}), a2.longest()).size() == 6);
    WeylGroup g2(RootDatum::build('G', 2));
    CHECK(inequality_set(g2, w({1, 1}), g2.longest()).size() == 12);
}

TEST_CASE("identity polytope pins the highest weight") {
    WeylGroup a2(RootDatum::build('A', 2));
    DemazurePolytope p = build_polytope(a2, w({2, 1}), a2.identity());
    CHECK(lattice_points(a2, p) == std::vector<IntWeight>{w({2, 1})});
    CHECK(contains(p, w({2, 1})));
    for (int i = 0; i < 2; ++i) {
        CHECK_FALSE(contains(p, add(w({2, 1}), a2.datum().simple_root(i))));
        CHECK_FALSE(contains(p, sub(w({2, 1}), a2.datum().simple_root(i))));
    }
}

TEST_CASE("membership at and beyond the vertices") {
    for (auto [t, r] : std::vector<std::pair<char, int>>{{'A', 2}, {'B', 2}, {'G', 2}}) {
        WeylGroup g(RootDatum::build(t, r));
        IntWeight lam(r, Int(2));
        for (size_t x = 0; x < g.order(); ++x) {
            DemazurePolytope p = build_polytope(g, lam, int(x));
            for (const auto& v : p.vertices) CHECK(contains(p, v));
            for (int i = 0; i < r; ++i) CHECK_FALSE(contains(p, add(lam, g.datum().simple_root(i))));
        }
    }
}

TEST_CASE("figure membership pair") {
    WeylGroup a3(RootDatum::build('A', 3));
    IntWeight lam = w({5, 4, 6});
    DemazurePolytope big = build_polytope(a3, lam, a3.from_word({1, 2, 1, 0}));
    DemazurePolytope small = build_polytope(a3, lam, a3.from_word({2, 1, 0}));
    IntWeight mu = w({10, -2, -9});
    CHECK(contains(big, mu));
    CHECK_FALSE(contains(small, mu));
}

TEST_CASE("hull oracle basics") {
    WeylGroup a2(RootDatum::build('A', 2));
    auto verts = vertex_set(a2, w({1, 0}), a2.longest());
    // centroid
    RatWeight centroid(2, Rat(0));
    for (const auto& v : verts)
        for (int k = 0; k < 2; ++k) centroid[k] += Rat(v[k], 3);
    CHECK(hull_membership_oracle(verts, centroid));
    // vertex plus a root leaves the hull
    RatWeight beyond = to_rat(add(verts.back(), a2.datum().simple_root(0)));
    CHECK_FALSE(hull_membership_oracle(verts, beyond));
    // edge midpoint
    RatWeight mid(2);
    for (int k = 0; k < 2; ++k) mid[k] = (Rat(verts[0][k]) + Rat(verts[1][k])) / 2;
    CHECK(hull_membership_oracle(verts, mid));
    CHECK_THROWS_AS(hull_membership_oracle({}, centroid), std::invalid_argument);
}

TEST_CASE("dual descriptions agree on boxes and random rational points") {
    std::mt19937_64 rng(31);
    for (auto [t, r] : std::vector<std::pair<char, int>>{{'A', 2}, {'B', 2}, {'G', 2}}) {
        WeylGroup g(RootDatum::build(t, r));
        const RootDatum& d = g.datum();
        for (int trial = 0; trial < 4; ++trial) {
            IntWeight lam(r);
            for (int k = 0; k < r; ++k) lam[k] = Int(rng() % 3);
            int x = int(rng() % g.order());
            DemazurePolytope p = build_polytope(g, lam, x);
            IntWeight lowest = g.apply(g.longest(), lam);
            IntVec box = to_int(d.root_lattice_coords(to_rat(sub(lam, lowest))));
            IntVec counter(r, Int(0));
            while (true) {
                IntWeight mu = lam;
                for (int k = 0; k < r; ++k)
                    for (int c = 0; c < r; ++c) mu[c] -= counter[k] * Int(d.cartan(c, k));
                CHECK(contains(p, mu) == hull_membership_oracle(p.vertices, to_rat(mu)));
                int pos = r - 1;
                while (pos >= 0) {
                    if (counter[pos] < box[pos]) { ++counter[pos]; break; }
                    counter[pos] = 0;
                    --pos;
                }
                if (pos < 0) break;
            }
            for (int k = 0; k < 100; ++k) {
                RatWeight mu(r);
                for (int c = 0; c < r; ++c)
                    mu[c] = Rat(int64_t(rng() % 25) - 12, 1 + int64_t(rng() % 4));
                CHECK(contains(p, mu) == hull_membership_oracle(p.vertices, mu));
            }
        }
    }
}

TEST_CASE("vertices sit below the highest weight in the root order") {
    for (auto [t, r] : std::vector<std::pair<char, int>>{{'A', 2}, {'B', 2}, {'G', 2}}) {
        WeylGroup g(RootDatum::build(t, r));
        const RootDatum& d = g.datum();
        IntWeight lam = w({2, 1});
        for (size_t x = 0; x < g.order(); ++x) {
            for (const auto& v : vertex_set(g, lam, int(x))) {
                RatVec c = d.root_lattice_coords(to_rat(sub(lam, v)));
                for (const auto& ck : c) {
                    CHECK(is_integer(ck));
                    CHECK(ck >= 0);
                }
            }
        }
    }
}

TEST_CASE("every vertex is tight for some inequality") {
    for (auto [t, r] : std::vector<std::pair<char, int>>{{'A', 2}, {'B', 2}, {'G', 2}}) {
        WeylGroup g(RootDatum::build(t, r));
        for (IntWeight lam : {w({2, 1}), w({1, 0}), w({0, 0})}) {
            for (size_t x = 0; x < g.order(); ++x) {
                DemazurePolytope p = build_polytope(g, lam, int(x));
                for (const auto& v : p.vertices) {
                    bool tight = false;
                    for (const auto& iq : p.inequalities)
                        if (dot(v, iq.normal_scaled) == iq.bound_scaled) tight = true;
                    CHECK(tight);
                }
            }
        }
    }
}

TEST_CASE("lattice point examples") {
    WeylGroup a1(RootDatum::build('A', 1));
    DemazurePolytope p1 = build_polytope(a1, w({2}), a1.from_word({0}));
    CHECK(lattice_points(a1, p1) == std::vector<IntWeight>{w({-2}), w({0}), w({2})});

    WeylGroup a2(RootDatum::build('A', 2));
    DemazurePolytope p2 = build_polytope(a2, w({1, 0}), a2.longest());
    auto pts = lattice_points(a2, p2);
    CHECK(pts.size() == 3);
    CharacterPoly full = freudenthal_character(a2, w({1, 0}));
    for (const auto& pt : pts) CHECK(multiplicity(full, pt) == 1);
}

TEST_CASE("segments reproduce the published caption values") {
    WeylGroup a3(RootDatum::build('A', 3));
    IntWeight lam = w({5, 4, 6});
    DemazurePolytope p21 = build_polytope(a3, lam, a3.from_word({1, 0}));

    auto fig3 = root_string_segment(a3, p21, rw({-6, 5, 9}), 0);
    REQUIRE(fig3.has_value());
    CHECK(fig3->lo == rw({-2, 3, 9}));
    CHECK(fig3->hi == rw({8, -2, 9}));

    auto fig4 = root_string_segment(a3, p21, rw({5, 7, -4}), 2);
    REQUIRE(fig4.has_value());
    CHECK(fig4->degenerate());
    CHECK(fig4->lo == rw({5, 1, 8}));

    DemazurePolytope p321 = build_polytope(a3, lam, a3.from_word({2, 1, 0}));
    auto fig5 = root_string_segment(a3, p321, rw({10, -6, -1}), 1);
    REQUIRE(fig5.has_value());
    CHECK(fig5->lo == rw({6, 2, -5}));
    CHECK(fig5->hi == rw({2, 10, -9}));

    auto fig5b = root_string_segment(a3, p321, rw({10, -2, -9}), 1);
    REQUIRE(fig5b.has_value());
    CHECK(fig5b->degenerate());
    CHECK(fig5b->lo == rw({6, 6, -13}));

    // a line far outside misses the polytope
    CHECK_FALSE(root_string_segment(a3, p21, rw({100, 100, 100}), 0).has_value());
}

TEST_CASE("segment symmetry under a stable reflection, and the base point lies inside") {
    std::mt19937_64 rng(41);
    for (auto [t, r] : std::vector<std::pair<char, int>>{{'A', 2}, {'B', 2}, {'G', 2}}) {
        WeylGroup g(RootDatum::build(t, r));
        const RootDatum& d = g.datum();
        IntWeight lam = w({2, 1});
        for (size_t x = 1; x < g.order(); ++x) {
            DemazurePolytope p = build_polytope(g, lam, int(x));
            for (int i = 0; i < r; ++i) {
                if (!g.left_descent(int(x), i)) continue;  // stability hypothesis
                for (int trial = 0; trial < 30; ++trial) {
                    RatWeight mu(r);
                    for (int c = 0; c < r; ++c) mu[c] = Rat(int64_t(rng() % 17) - 8, 1 + int64_t(rng() % 3));
                    auto seg = root_string_segment(g, p, mu, i);
                    if (!seg) continue;
                    CHECK(d.reflect_weight(i, seg->hi) == seg->lo);
                    if (seg->degenerate()) CHECK(d.reflect_weight(i, seg->hi) == seg->hi);
                }
                // through a point of the polytope the interval brackets zero
                for (const auto& mu : lattice_points(g, p)) {
                    auto seg = root_string_segment(g, p, to_rat(mu), i);
                    REQUIRE(seg.has_value());
                    CHECK(seg->t_lo <= 0);
                    CHECK(seg->t_hi >= 0);
                }
            }
        }
    }
}

TEST_CASE("alpha-maximal endpoints are stable when the polytope grows by a descent") {
    std::mt19937_64 rng(43);
    for (auto [t, r] : std::vector<std::pair<char, int>>{{'A', 2}, {'B', 2}, {'G', 2}}) {
        WeylGroup g(RootDatum::build(t, r));
        IntWeight lam = w({2, 2});
        for (size_t x = 1; x < g.order(); ++x) {
            int i = g.word(int(x)).front();
            int smaller = g.mul_gen_left(int(x), i);
            DemazurePolytope big = build_polytope(g, lam, int(x));
            DemazurePolytope small = build_polytope(g, lam, smaller);
            for (int trial = 0; trial < 40; ++trial) {
                RatWeight mu(r);
                for (int c = 0; c < r; ++c) mu[c] = Rat(int64_t(rng() % 17) - 8, 1 + int64_t(rng() % 3));
                auto seg_small = root_string_segment(g, small, mu, i);
                if (!seg_small) continue;
                auto seg_big = root_string_segment(g, big, mu, i);
                REQUIRE(seg_big.has_value());
                CHECK(seg_big->t_hi == seg_small->t_hi);
                CHECK(seg_big->hi == seg_small->hi);
            }
        }
    }
}

TEST_CASE("endpoint arithmetic by type") {
    auto endpoints_in = [](const RootDatum& d, const IntWeight& lam, const RatWeight& endpoint, int denom) {
        RatVec c = d.root_lattice_coords(endpoint);
        RatVec cl = d.root_lattice_coords(to_rat(lam));
        for (size_t k = 0; k < c.size(); ++k) {
            Rat scaled = (cl[k] - c[k]) * denom;
            if (!is_integer(scaled)) return false;
        }
        return true;
    };
    for (auto [t, r, denom] : std::vector<std::tuple<char, int, int>>{{'A', 2, 1}, {'A', 3, 1}, {'B', 2, 2},
                                                                      {'C', 3, 2}, {'D', 3, 2}}) {
        WeylGroup g(RootDatum::build(t, r));
        const RootDatum& d = g.datum();
        IntWeight lam(r);
        for (int k = 0; k < r; ++k) lam[k] = Int(1 + (k % 2));
        for (size_t x = 1; x < g.order(); ++x) {
            int i1 = g.word(int(x)).front();
            DemazurePolytope pw = build_polytope(g, lam, int(x));
            DemazurePolytope psub = build_polytope(g, lam, g.mul_gen_left(int(x), i1));
            for (const auto& mu : lattice_points(g, pw)) {
                auto seg = root_string_segment(g, psub, to_rat(mu), i1);
                REQUIRE(seg.has_value());  // nonempty whenever mu lies in the bigger polytope
                CHECK(endpoints_in(d, lam, seg->lo, denom));
                CHECK(endpoints_in(d, lam, seg->hi, denom));
            }
        }
    }
}

TEST_CASE("saturation reports") {
    WeylGroup a2(RootDatum::build('A', 2));
    SaturationReport triv = saturation_report(a2, w({3, 2}), {});
    CHECK(triv.saturated());
    CHECK(triv.num_lattice_points == 1);
    CHECK(triv.num_support == 1);
    CHECK(triv.multiplicities.size() == 1);

    WeylGroup g2(RootDatum::build('G', 2));
    for (size_t x = 0; x < g2.order(); ++x) {
        SaturationReport rep = saturation_report(g2, w({1, 1}), g2.word(int(x)));
        CHECK(rep.saturated());
    }
    WeylGroup b2(RootDatum::build('B', 2));
    for (size_t x = 0; x < b2.order(); ++x) {
        SaturationReport rep = saturation_report(b2, w({2, 1}), b2.word(int(x)));
        CHECK(rep.saturated());
    }
    CHECK_THROWS_AS(saturation_report(a2, w({1, 1}), {0, 0}), std::invalid_argument);
}
