#pragma once

#include "demazure/root_datum.hpp"

#include <cstdint>
#include <memory>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

namespace dmz {

using Word = std::vector<int>;  // 0-based simple-reflection indices

// "1,2,1" <-> {0,1,0}; the empty word is "".
std::string word_to_string(const Word& w);
Word word_from_string(const std::string& s, int rank);

// One Weyl group element. The canonical identity is the integer matrix of its
// action on weight coordinates; the stored word is the lexicographically
// smallest reduced word.
struct WeylElement {
    std::vector<int64_t> action;  // rank x rank, row-major
    Word word;
    int length = 0;
    int inverse = 0;  // index of the inverse element
};

class WeylGroup {
public:
    // Enumerates the full group; refuses when the order would exceed
    // order_cap. Elements are indexed breadth-first by length, then
    // lexicographically by reduced word; index 0 is the identity. The datum
    // is copied in, so temporaries are fine.
    explicit WeylGroup(RootDatum datum, uint64_t order_cap = kDefaultOrderCap);

    // 2,000,000 covers everything through E6 comfortably; the constant is set
    // above |W(E7)| = 2,903,040 so E7 still builds without an override, while
    // E8 (696,729,600) always requires one.
    static constexpr uint64_t kDefaultOrderCap = 3'000'000;

    const RootDatum& datum() const { return datum_; }
    size_t order() const { return elements_.size(); }
    const WeylElement& element(int idx) const { return elements_[idx]; }
    int longest() const { return longest_; }
    int identity() const { return 0; }
    int rank() const { return datum_.rank(); }

    int length(int idx) const { return elements_[idx].length; }
    int inverse(int idx) const { return elements_[idx].inverse; }
    const Word& word(int idx) const { return elements_[idx].word; }

    // w * s_j and s_j * w by table lookup.
    int mul_gen_right(int w, int j) const { return right_[size_t(w) * rank() + j]; }
    int mul_gen_left(int w, int j) const { return left_[size_t(w) * rank() + j]; }
    int mul(int u, int v) const;  // group product, O(len(v)) lookups
    int from_word(const Word& w) const;

    bool right_descent(int w, int j) const { return length(mul_gen_right(w, j)) < length(w); }
    bool left_descent(int w, int j) const { return length(mul_gen_left(w, j)) < length(w); }

    IntWeight apply(int w, const IntWeight& v) const;
    RatWeight apply(int w, const RatWeight& v) const;
    // Coweight action in coroot coordinates (the contragredient matrix).
    Coweight apply_coweight(int w, const Coweight& x) const;

    // Bruhat order. Backed by an eagerly built bitmatrix for orders <= 4096,
    // otherwise by a memoized lifting recursion that is safe for concurrent
    // readers and writers.
    bool bruhat_leq(int u, int w) const;
    // All v with v <= w, in index order.
    std::vector<int> lower_interval(int w) const;

    // Associative monoid product with s*s = s: folds the right-multiplication
    // rule max{w, ws_j} over a reduced word of v.
    int demazure_product(int u, int v) const;

    // Minimal-length representative of w W_S (no right descents inside S).
    int min_coset_rep(int w, const std::vector<int>& S) const;
    // All elements of the standard parabolic subgroup W_S, in index order.
    std::vector<int> parabolic_subgroup(const std::vector<int>& S) const;
    // Longest element of W_S.
    int longest_parabolic(const std::vector<int>& S) const;
    // Members of W^{P_i}: no right descent at any j != i.
    std::vector<int> min_coset_reps_maximal(int i) const;

    // Stabilizer of a dominant weight (a standard parabolic) and the
    // maximal-length representative of w modulo it.
    struct StabilizerData {
        std::vector<int> generators;  // simple indices fixing lambda
        std::vector<int> subgroup;    // W_lambda, index order
        int w_max = 0;                // min-rep(w) * longest(W_lambda)
    };
    StabilizerData stabilizer_data(const IntWeight& lambda, int w) const;

    // v (v^{-1} * w); lands inside the lower interval of w.
    int g_map(int w, int v) const;

    // Every reduced word of w, lexicographically sorted. Guarded by a length
    // cap since the count grows quickly.
    std::vector<Word> all_reduced_words(int w, int max_length = 8) const;

private:
    void generate(uint64_t order_cap);
    void build_bruhat_bitmatrix();
    bool bruhat_lifting(int u, int w) const;

    RootDatum datum_;
    std::vector<WeylElement> elements_;
    std::vector<int> right_, left_;
    int longest_ = 0;

    static constexpr size_t kBitmatrixMaxOrder = 4096;
    std::vector<std::vector<uint64_t>> below_;  // below_[w] bit u <=> u <= w

    mutable std::unordered_map<uint64_t, bool> bruhat_memo_;
    mutable std::shared_mutex bruhat_mutex_;
};

}  // namespace dmz
