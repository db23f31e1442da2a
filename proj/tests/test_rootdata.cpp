#include "demazure/root_datum.hpp"
#include "demazure/weyl.hpp"

#include <doctest.h>

#include <random>

using namespace dmz;

namespace {

IntWeight w(std::initializer_list<int> v) {
    IntWeight out;
    for (int x : v) out.push_back(Int(x));
    return out;
}

std::vector<std::pair<char, int>> all_types() {
    return {{'A', 1}, {'A', 2}, {'A', 3}, {'A', 5}, {'B', 2}, {'B', 3}, {'B', 4}, {'C', 2},
            {'C', 3}, {'C', 4}, {'D', 3}, {'D', 4}, {'D', 5}, {'E', 6}, {'E', 7}, {'E', 8},
            {'F', 4}, {'G', 2}};
}

}  // namespace

TEST_CASE("root counts and Cartan shape across all simple types") {
    for (auto [t, r] : all_types()) {
        CAPTURE(t);
        CAPTURE(r);
        RootDatum d = RootDatum::build(t, r);
        CHECK(d.num_positive_roots() == classical_positive_root_count(t, r));
        for (int i = 0; i < r; ++i) {
            CHECK(d.cartan(i, i) == 2);
            for (int j = 0; j < r; ++j)
                if (i != j) CHECK(d.cartan(i, j) <= 0);
        }
        // exact inverse
        RatMat c(r, r);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) c.at(i, j) = d.cartan(i, j);
        RatMat prod = mat_mul(c, d.inv_cartan());
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) CHECK(prod.at(i, j) == (i == j ? 1 : 0));
        // every positive root has nonnegative integer root coordinates
        for (const auto& beta : d.positive_roots())
            for (const auto& ck : beta) CHECK(ck >= 0);
    }
}

TEST_CASE("specific positive root counts") {
    CHECK(RootDatum::build('A', 2).num_positive_roots() == 3);
    CHECK(RootDatum::build('G', 2).num_positive_roots() == 6);
    CHECK(RootDatum::build('F', 4).num_positive_roots() == 24);
    RootDatum a2 = RootDatum::build('A', 2);
    CHECK(a2.cartan(0, 0) == 2);
    CHECK(a2.cartan(0, 1) == -1);
    CHECK(a2.cartan(1, 0) == -1);
}

TEST_CASE("invalid type and rank pairs are refused by name") {
    for (auto [t, r] : std::vector<std::pair<char, int>>{{'A', 0}, {'B', 1}, {'C', 1}, {'D', 2}, {'E', 5},
                                                         {'E', 9}, {'F', 3}, {'G', 3}, {'X', 2}}) {
        CHECK_THROWS_AS(RootDatum::build(t, r), std::invalid_argument);
    }
    try {
        RootDatum::build('D', 2);
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("D,2") != std::string::npos);
    }
}

TEST_CASE("pairing is the dual-basis dot product") {
    RootDatum a2 = RootDatum::build('A', 2);
    for (int j = 0; j < 2; ++j)
        for (int i = 0; i < 2; ++i) {
            IntWeight omega(2, Int(0));
            omega[j] = 1;
            CHECK(a2.pairing(to_rat(omega), a2.simple_coroot(i)) == (i == j ? 1 : 0));
            CHECK(a2.pairing(to_rat(a2.simple_root(j)), a2.fundamental_coweight(i)) == (i == j ? 1 : 0));
        }
    CHECK(a2.pairing(to_rat(a2.simple_root(0)), a2.simple_coroot(1)) == -1);
    CHECK_THROWS_AS(a2.pairing(RatWeight{Rat(1)}, a2.simple_coroot(0)), std::invalid_argument);
}

TEST_CASE("simple reflections") {
    RootDatum a2 = RootDatum::build('A', 2);
    CHECK(a2.reflect_weight(0, w({1, 0})) == w({-1, 1}));
    CHECK(a2.reflect_weight(0, w({0, 5})) == w({0, 5}));
    RootDatum a1 = RootDatum::build('A', 1);
    CHECK(a1.reflect_weight(0, w({2})) == w({-2}));
    CHECK_THROWS_AS(a2.reflect_weight(2, w({1, 0})), std::out_of_range);

    std::mt19937_64 rng(7);
    for (auto [t, r] : all_types()) {
        RootDatum d = RootDatum::build(t, r);
        for (int trial = 0; trial < 20; ++trial) {
            IntWeight v(r);
            for (int k = 0; k < r; ++k) v[k] = Int(int64_t(rng() % 21) - 10);
            for (int i = 0; i < r; ++i) {
                CHECK(d.reflect_weight(i, d.reflect_weight(i, v)) == v);
                // lambda - s_i lambda = <lambda, alpha_i_vee> alpha_i
                IntWeight diff = sub(v, d.reflect_weight(i, v));
                RatVec c = d.root_lattice_coords(to_rat(diff));
                for (int k = 0; k < r; ++k) CHECK(c[k] == (k == i ? Rat(v[i]) : Rat(0)));
                // adjointness under the pairing
                Coweight x(r);
                for (int k = 0; k < r; ++k) x[k] = Rat(int64_t(rng() % 7) - 3);
                CHECK(d.pairing(to_rat(d.reflect_weight(i, v)), x) == d.pairing(to_rat(v), d.reflect_coweight(i, x)));
            }
        }
    }
}

TEST_CASE("root lattice coordinates") {
    RootDatum a2 = RootDatum::build('A', 2);
    RatVec c = a2.root_lattice_coords(RatWeight{Rat(1), Rat(0)});
    CHECK(c[0] == Rat(2, 3));
    CHECK(c[1] == Rat(1, 3));
    CHECK_FALSE(a2.in_root_lattice(RatWeight{Rat(1), Rat(0)}));

    RootDatum g2 = RootDatum::build('G', 2);
    RatVec cg = g2.root_lattice_coords(RatWeight{Rat(1), Rat(0)});
    CHECK(cg[0] == 2);
    CHECK(cg[1] == 1);
    CHECK(g2.in_root_lattice(RatWeight{Rat(1), Rat(0)}));

    // round trip on random integral weights
    std::mt19937_64 rng(11);
    RootDatum b3 = RootDatum::build('B', 3);
    for (int trial = 0; trial < 1000; ++trial) {
        IntWeight v(3);
        for (int k = 0; k < 3; ++k) v[k] = Int(int64_t(rng() % 15) - 7);
        RatVec coords = b3.root_lattice_coords(to_rat(v));
        RatWeight rebuilt(3, Rat(0));
        for (int k = 0; k < 3; ++k) {
            IntWeight alpha = b3.simple_root(k);
            for (int c2 = 0; c2 < 3; ++c2) rebuilt[c2] += coords[k] * Rat(alpha[c2]);
        }
        CHECK(rebuilt == to_rat(v));
    }
}

TEST_CASE("sum of positive roots pairs to two with every simple coroot") {
    for (auto [t, r] : all_types()) {
        CAPTURE(t);
        CAPTURE(r);
        RootDatum d = RootDatum::build(t, r);
        IntWeight two_rho(r, Int(0));
        for (const auto& beta : d.positive_roots()) {
            IntWeight bw(r, Int(0));
            for (int j = 0; j < r; ++j)
                for (int k = 0; k < r; ++k) bw[j] += Int(d.cartan(j, k)) * beta[k];
            two_rho = add(two_rho, bw);
        }
        for (int i = 0; i < r; ++i) CHECK(two_rho[i] == 2);
    }
}

TEST_CASE("sub data, possibly decomposable") {
    RootDatum b3 = RootDatum::build('B', 3);
    RootDatum levi = b3.sub_datum({0, 2});  // two orthogonal nodes
    CHECK(levi.rank() == 2);
    CHECK(levi.cartan(0, 1) == 0);
    CHECK(levi.num_positive_roots() == 2);
    WeylGroup g(levi);
    CHECK(g.order() == 4);

    RootDatum bc = b3.sub_datum({1, 2});  // tail of the diagram: a rank-2 double bond
    CHECK(bc.num_positive_roots() == 4);
    CHECK(WeylGroup(bc).order() == 8);
}
