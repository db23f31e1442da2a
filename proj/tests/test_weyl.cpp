#include "demazure/weyl.hpp"

#include <doctest.h>
#include <omp.h>

#include <random>
#include <set>

using namespace dmz;

namespace {

// Subword criterion computed independently: the set of all subword products of
// one fixed reduced word of w.
std::set<int> subword_products(const WeylGroup& g, int w) {
    std::set<int> reachable{g.identity()};
    for (int j : g.word(w)) {
        std::set<int> next = reachable;
        for (int x : reachable) next.insert(g.mul_gen_right(x, j));
        reachable = std::move(next);
    }
    return reachable;
}

// Unique Bruhat maximum of a set of elements, verified against every member.
int bruhat_max(const WeylGroup& g, const std::set<int>& elems) {
    int best = *elems.begin();
    for (int x : elems)
        if (g.length(x) > g.length(best)) best = x;
    for (int x : elems) REQUIRE(g.bruhat_leq(x, best));
    return best;
}

}  // namespace

TEST_CASE("group orders") {
    CHECK(WeylGroup(RootDatum::build('A', 2)).order() == 6);
    CHECK(WeylGroup(RootDatum::build('B', 2)).order() == 8);
    CHECK(WeylGroup(RootDatum::build('A', 3)).order() == 24);
    CHECK(WeylGroup(RootDatum::build('D', 3)).order() == 24);
    CHECK(WeylGroup(RootDatum::build('B', 3)).order() == 48);
    CHECK(WeylGroup(RootDatum::build('G', 2)).order() == 12);
    CHECK(WeylGroup(RootDatum::build('F', 4)).order() == 1152);
}

TEST_CASE("order cap refusal names the order") {
    RootDatum e6 = RootDatum::build('E', 6);
    try {
        WeylGroup g(e6, 1000);
        FAIL("expected refusal");
    } catch (const std::runtime_error& e) {
        CHECK(std::string(e.what()).find("51840") != std::string::npos);
    }
}

TEST_CASE("length bookkeeping") {
    for (char t : {'A', 'B', 'G'}) {
        int r = t == 'G' ? 2 : 3;
        RootDatum d = RootDatum::build(t, r);
        WeylGroup g(d);
        CHECK(g.length(g.longest()) == d.num_positive_roots());
        for (size_t x = 0; x < g.order(); ++x) {
            int ww0 = g.mul(int(x), g.longest());
            CHECK(g.length(int(x)) + g.length(ww0) == g.length(g.longest()));
            CHECK(g.from_word(g.word(int(x))) == int(x));
            CHECK(g.mul(int(x), g.inverse(int(x))) == g.identity());
        }
    }
}

TEST_CASE("length counts the inversions of the root action") {
    for (auto [t, r] : std::vector<std::pair<char, int>>{{'A', 2}, {'B', 2}, {'G', 2}, {'A', 3}}) {
        RootDatum d = RootDatum::build(t, r);
        WeylGroup g(d);
        // positive roots in weight coordinates
        std::vector<IntWeight> roots_wt;
        for (const auto& beta : d.positive_roots()) {
            IntWeight bw(r, Int(0));
            for (int j = 0; j < r; ++j)
                for (int k = 0; k < r; ++k) bw[j] += Int(d.cartan(j, k)) * beta[k];
            roots_wt.push_back(bw);
        }
        for (size_t x = 0; x < g.order(); ++x) {
            int inversions = 0;
            for (const auto& bw : roots_wt) {
                RatVec c = d.root_lattice_coords(to_rat(g.apply(int(x), bw)));
                bool negative = true;
                for (const auto& ck : c)
                    if (ck > 0) negative = false;
                if (negative) ++inversions;
            }
            CHECK(inversions == g.length(int(x)));
        }
    }
}

TEST_CASE("stored words are lexicographically least") {
    WeylGroup g(RootDatum::build('B', 3));
    for (size_t x = 0; x < g.order(); ++x) {
        if (g.length(int(x)) > 8) continue;
        auto words = g.all_reduced_words(int(x), 9);
        CHECK(words.front() == g.word(int(x)));
    }
}

TEST_CASE("bruhat order matches the subword criterion on small groups") {
    for (auto [t, r] : std::vector<std::pair<char, int>>{{'A', 2}, {'B', 2}, {'G', 2}, {'A', 3}, {'B', 3}}) {
        WeylGroup g(RootDatum::build(t, r));
        REQUIRE(g.order() <= 48);
        for (size_t w = 0; w < g.order(); ++w) {
            auto below = subword_products(g, int(w));
            for (size_t u = 0; u < g.order(); ++u)
                CHECK(g.bruhat_leq(int(u), int(w)) == bool(below.count(int(u))));
        }
    }
}

TEST_CASE("bruhat basics") {
    WeylGroup g(RootDatum::build('A', 2));
    int s1 = g.from_word({0}), s2 = g.from_word({1}), s2s1 = g.from_word({1, 0});
    for (size_t w = 0; w < g.order(); ++w) CHECK(g.bruhat_leq(g.identity(), int(w)));
    CHECK(g.bruhat_leq(s1, s2s1));
    CHECK_FALSE(g.bruhat_leq(s1, s2));
}

TEST_CASE("descent sets permute lower intervals") {
    for (auto [t, r] : std::vector<std::pair<char, int>>{{'A', 3}, {'G', 2}}) {
        WeylGroup g(RootDatum::build(t, r));
        for (size_t w = 1; w < g.order(); ++w) {
            for (int i = 0; i < g.rank(); ++i) {
                if (!g.left_descent(int(w), i)) continue;
                std::set<int> interval;
                for (int u : g.lower_interval(int(w))) interval.insert(u);
                std::set<int> image;
                for (int u : interval) image.insert(g.mul_gen_left(u, i));
                CHECK(interval == image);
            }
        }
    }
}

TEST_CASE("demazure product unit laws and absorption") {
    for (auto [t, r] : std::vector<std::pair<char, int>>{{'A', 2}, {'B', 2}, {'G', 2}}) {
        WeylGroup g(RootDatum::build(t, r));
        for (int i = 0; i < g.rank(); ++i) {
            int s = g.from_word({i});
            CHECK(g.demazure_product(s, s) == s);
        }
        for (size_t v = 0; v < g.order(); ++v) {
            CHECK(g.demazure_product(g.longest(), int(v)) == g.longest());
            CHECK(g.demazure_product(int(v), g.longest()) == g.longest());
            CHECK(g.demazure_product(g.identity(), int(v)) == int(v));
        }
    }
}

TEST_CASE("demazure product equals the interval-product maximum on small groups") {
    for (auto [t, r] : std::vector<std::pair<char, int>>{{'A', 2}, {'B', 2}, {'G', 2}, {'A', 3}, {'B', 3}}) {
        WeylGroup g(RootDatum::build(t, r));
        for (size_t u = 0; u < g.order(); ++u) {
            auto below_u = g.lower_interval(int(u));
            for (size_t v = 0; v < g.order(); ++v) {
                std::set<int> products;
                for (int x : below_u)
                    for (int q : g.lower_interval(int(v))) products.insert(g.mul(x, q));
                int expected = bruhat_max(g, products);
                CHECK(g.demazure_product(int(u), int(v)) == expected);
                // single-interval form gives the same element
                std::set<int> one_sided;
                for (int x : below_u) one_sided.insert(g.mul(x, int(v)));
                CHECK(bruhat_max(g, one_sided) == expected);
            }
        }
    }
}

TEST_CASE("demazure product specific value") {
    WeylGroup g(RootDatum::build('A', 2));
    CHECK(g.demazure_product(g.from_word({0}), g.from_word({1, 0})) == g.longest());
}

TEST_CASE("demazure product associativity") {
    for (auto [t, r] : std::vector<std::pair<char, int>>{{'A', 2}, {'B', 2}, {'G', 2}}) {
        WeylGroup g(RootDatum::build(t, r));
        for (size_t a = 0; a < g.order(); ++a)
            for (size_t b = 0; b < g.order(); ++b)
                for (size_t c = 0; c < g.order(); ++c)
                    CHECK(g.demazure_product(g.demazure_product(int(a), int(b)), int(c)) ==
                          g.demazure_product(int(a), g.demazure_product(int(b), int(c))));
    }
    std::mt19937_64 rng(3);
    for (auto [t, r] : std::vector<std::pair<char, int>>{{'A', 3}, {'B', 3}, {'F', 4}}) {
        WeylGroup g(RootDatum::build(t, r));
        for (int trial = 0; trial < 10000; ++trial) {
            int a = int(rng() % g.order()), b = int(rng() % g.order()), c = int(rng() % g.order());
            CHECK(g.demazure_product(g.demazure_product(a, b), c) == g.demazure_product(a, g.demazure_product(b, c)));
        }
    }
}

TEST_CASE("minimal coset representatives") {
    WeylGroup g(RootDatum::build('A', 2));
    int w = g.from_word({0, 1});
    CHECK(g.min_coset_rep(w, {1}) == g.from_word({0}));
    CHECK(g.min_coset_rep(w, {}) == w);
    CHECK(g.min_coset_rep(g.identity(), {0, 1}) == g.identity());
    CHECK(g.parabolic_subgroup({1}).size() == 2);
    CHECK(g.parabolic_subgroup({0, 1}).size() == 6);
    // a minimal representative has no reduced word ending inside the parabolic
    WeylGroup b3(RootDatum::build('B', 3));
    for (size_t x = 0; x < b3.order(); ++x) {
        for (int i = 0; i < 3; ++i) {
            std::vector<int> S;
            for (int j = 0; j < 3; ++j)
                if (j != i) S.push_back(j);
            int rep = b3.min_coset_rep(int(x), S);
            for (int j : S) CHECK_FALSE(b3.right_descent(rep, j));
        }
    }
}

TEST_CASE("stabilizer data") {
    WeylGroup g(RootDatum::build('A', 2));
    IntWeight regular{Int(1), Int(2)};
    auto sd = g.stabilizer_data(regular, g.from_word({0, 1}));
    CHECK(sd.subgroup == std::vector<int>{g.identity()});
    CHECK(sd.w_max == g.from_word({0, 1}));

    IntWeight omega1{Int(1), Int(0)};
    auto sd1 = g.stabilizer_data(omega1, g.identity());
    CHECK(sd1.subgroup == std::vector<int>{g.identity(), g.from_word({1})});

    IntWeight zero{Int(0), Int(0)};
    auto sd0 = g.stabilizer_data(zero, g.from_word({0}));
    CHECK(sd0.subgroup.size() == g.order());
    CHECK(sd0.w_max == g.longest());

    CHECK_THROWS_AS(g.stabilizer_data(IntWeight{Int(-1), Int(0)}, 0), std::invalid_argument);

    // stabilizer equals the direct orbit computation
    WeylGroup b2(RootDatum::build('B', 2));
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; b <= 2; ++b) {
            IntWeight lam{Int(a), Int(b)};
            auto sd2 = b2.stabilizer_data(lam, 0);
            std::set<int> orbit_stab;
            for (size_t v = 0; v < b2.order(); ++v)
                if (b2.apply(int(v), lam) == lam) orbit_stab.insert(int(v));
            CHECK(orbit_stab == std::set<int>(sd2.subgroup.begin(), sd2.subgroup.end()));
        }
}

TEST_CASE("g map") {
    for (auto [t, r] : std::vector<std::pair<char, int>>{{'A', 2}, {'B', 2}, {'G', 2}}) {
        WeylGroup g(RootDatum::build(t, r));
        for (size_t w = 0; w < g.order(); ++w) {
            CHECK(g.g_map(int(w), g.identity()) == int(w));
            for (size_t v = 0; v < g.order(); ++v) {
                CHECK(g.bruhat_leq(g.g_map(int(w), int(v)), int(w)));
                if (g.bruhat_leq(int(v), int(w)))
                    CHECK(g.g_map(int(w), g.mul(int(v), g.longest())) == int(v));
            }
        }
    }
    WeylGroup a2(RootDatum::build('A', 2));
    int img = a2.g_map(a2.from_word({0}), a2.from_word({1}));
    CHECK(a2.bruhat_leq(img, a2.from_word({0})));
}

TEST_CASE("all reduced words") {
    WeylGroup a2(RootDatum::build('A', 2));
    auto words = a2.all_reduced_words(a2.longest());
    CHECK(words == std::vector<Word>{{0, 1, 0}, {1, 0, 1}});
    CHECK(a2.all_reduced_words(a2.identity()) == std::vector<Word>{Word{}});
    WeylGroup f4(RootDatum::build('F', 4));
    CHECK_THROWS_AS(f4.all_reduced_words(f4.longest()), std::invalid_argument);
}

TEST_CASE("memoized bruhat path is consistent and safe under concurrent use") {
    // E6 is above the bitmatrix threshold, so this exercises the lifting
    // recursion with the shared memo.
    RootDatum e6 = RootDatum::build('E', 6);
    WeylGroup g(e6);
    REQUIRE(g.order() == 51840);
    std::mt19937_64 rng(5);
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < 50; ++i) pairs.emplace_back(int(rng() % g.order()), int(rng() % g.order()));
    std::vector<char> expected(pairs.size());
    for (size_t i = 0; i < pairs.size(); ++i) {
        auto below = subword_products(g, pairs[i].second);
        expected[i] = below.count(pairs[i].first) ? 1 : 0;
    }
    std::vector<char> got(pairs.size());
#pragma omp parallel for
    for (size_t i = 0; i < pairs.size(); ++i) got[i] = g.bruhat_leq(pairs[i].first, pairs[i].second) ? 1 : 0;
    CHECK(got == expected);
}

TEST_CASE("coset representative counts in the big exceptional group") {
    WeylGroup g(RootDatum::build('F', 4));
    // |W| / |W_{P_i}| for the four maximal parabolics
    std::vector<size_t> expect{24, 96, 96, 24};
    for (int i = 0; i < 4; ++i) CHECK(g.min_coset_reps_maximal(i).size() == expect[i]);
}

TEST_CASE("bitmatrix bruhat spot-checked against subwords in the big group") {
    WeylGroup g(RootDatum::build('F', 4));
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 60; ++trial) {
        int w = int(rng() % g.order());
        auto below = subword_products(g, w);
        for (int k = 0; k < 20; ++k) {
            int u = int(rng() % g.order());
            CHECK(g.bruhat_leq(u, w) == bool(below.count(u)));
        }
    }
}

TEST_CASE("word serialization round trip") {
    CHECK(word_to_string({0, 1, 0}) == "1,2,1");
    CHECK(word_to_string({}) == "");
    CHECK(word_from_string("1,2,1", 2) == Word{0, 1, 0});
    CHECK(word_from_string("", 4) == Word{});
    CHECK_THROWS_AS(word_from_string("3", 2), std::invalid_argument);
}
