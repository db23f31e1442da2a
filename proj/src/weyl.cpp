#include "demazure/weyl.hpp"

#include <algorithm>
#include <limits>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace dmz {

namespace {

// Entries of Weyl action matrices stay small (the group is finite), but the
// bound is enforced rather than assumed. With inputs below 2^15 every
// intermediate sum fits an int64 with huge slack, so the post-check cannot be
// fooled by wraparound.
constexpr int64_t kEntryBound = int64_t(1) << 15;

std::vector<int64_t> checked_mat_mul(const std::vector<int64_t>& x, const std::vector<int64_t>& y, int n) {
    std::vector<int64_t> out(size_t(n) * n, 0);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            int64_t xv = x[size_t(i) * n + k];
            if (xv == 0) continue;
            for (int j = 0; j < n; ++j) {
                int64_t acc = out[size_t(i) * n + j] + xv * y[size_t(k) * n + j];
                out[size_t(i) * n + j] = acc;
            }
        }
    for (int64_t v : out)
        if (v >= kEntryBound || v <= -kEntryBound)
            throw std::overflow_error("Weyl action matrix entry out of range");
    return out;
}

struct MatHash {
    size_t operator()(const std::vector<int64_t>& m) const {
        uint64_t h = 1469598103934665603ull;
        for (int64_t v : m) {
            h ^= uint64_t(v);
            h *= 1099511628211ull;
        }
        return size_t(h);
    }
};

}  // namespace

std::string word_to_string(const Word& w) {
    std::ostringstream os;
    for (size_t k = 0; k < w.size(); ++k) os << (k ? "," : "") << (w[k] + 1);
    return os.str();
}

Word word_from_string(const std::string& s, int rank) {
    Word out;
    if (s.empty() || s == "e") return out;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        int v = std::stoi(tok);
        if (v < 1 || v > rank) throw std::invalid_argument("word letter out of range: " + tok);
        out.push_back(v - 1);
    }
    return out;
}

namespace {

// Saturating classical order; UINT64_MAX when it does not fit.
uint64_t classical_weyl_order(char t, int r) {
    auto fact = [](int n) {
        uint64_t f = 1;
        for (int i = 2; i <= n; ++i) {
            if (f > std::numeric_limits<uint64_t>::max() / uint64_t(i)) return std::numeric_limits<uint64_t>::max();
            f *= uint64_t(i);
        }
        return f;
    };
    auto shifted = [&](int pow, int n) {
        uint64_t f = fact(n);
        for (int i = 0; i < pow; ++i) {
            if (f > std::numeric_limits<uint64_t>::max() / 2) return std::numeric_limits<uint64_t>::max();
            f *= 2;
        }
        return f;
    };
    switch (t) {
        case 'A': return fact(r + 1);
        case 'B':
        case 'C': return shifted(r, r);
        case 'D': return shifted(r - 1, r);
        case 'E': return r == 6 ? 51840ull : (r == 7 ? 2903040ull : 696729600ull);
        case 'F': return 1152ull;
        case 'G': return 12ull;
        default: return 0;  // composite: unknown upfront
    }
}

}  // namespace

WeylGroup::WeylGroup(RootDatum datum, uint64_t order_cap) : datum_(std::move(datum)) {
    uint64_t known = classical_weyl_order(datum_.lie_type(), datum_.rank());
    if (known > order_cap) {
        std::ostringstream os;
        os << "Weyl group of " << datum_.label() << " has order " << known << ", above the cap " << order_cap
           << "; pass a larger cap to proceed";
        throw std::runtime_error(os.str());
    }
    generate(order_cap);
    if (order() <= kBitmatrixMaxOrder) build_bruhat_bitmatrix();
}

void WeylGroup::generate(uint64_t order_cap) {
    const int n = datum_.rank();
    std::vector<std::vector<int64_t>> gens(n);
    for (int i = 0; i < n; ++i) {
        // Column j of s_i is e_j - delta_ij alpha_i.
        std::vector<int64_t> m(size_t(n) * n, 0);
        for (int j = 0; j < n; ++j) m[size_t(j) * n + j] = 1;
        for (int k = 0; k < n; ++k) m[size_t(k) * n + i] -= datum_.cartan(k, i);
        gens[i] = std::move(m);
    }

    std::unordered_map<std::vector<int64_t>, int, MatHash> index;
    WeylElement id;
    id.action.assign(size_t(n) * n, 0);
    for (int j = 0; j < n; ++j) id.action[size_t(j) * n + j] = 1;
    id.length = 0;
    elements_.push_back(id);
    index.emplace(elements_[0].action, 0);

    // Layered construction by left multiplication; the first time an element
    // appears, the smallest prefix letter wins, which makes the stored word
    // the lexicographically least reduced word.
    std::vector<int> layer{0};
    while (!layer.empty()) {
        std::unordered_map<std::vector<int64_t>, std::pair<Word, int>, MatHash> next;
        for (int idx : layer) {
            for (int j = 0; j < n; ++j) {
                auto m = checked_mat_mul(gens[j], elements_[idx].action, n);
                if (index.count(m)) continue;
                Word cand;
                cand.reserve(elements_[idx].word.size() + 1);
                cand.push_back(j);
                cand.insert(cand.end(), elements_[idx].word.begin(), elements_[idx].word.end());
                auto it = next.find(m);
                if (it == next.end()) {
                    next.emplace(std::move(m), std::make_pair(std::move(cand), idx));
                } else if (std::lexicographical_compare(cand.begin(), cand.end(), it->second.first.begin(),
                                                        it->second.first.end())) {
                    it->second = std::make_pair(std::move(cand), idx);
                }
            }
        }
        std::vector<std::pair<Word, std::vector<int64_t>>> sorted;
        sorted.reserve(next.size());
        for (auto& [m, wp] : next) sorted.emplace_back(std::move(wp.first), m);
        std::sort(sorted.begin(), sorted.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        layer.clear();
        for (auto& [w, m] : sorted) {
            if (elements_.size() >= order_cap) {
                std::ostringstream os;
                os << "Weyl group of " << datum_.label() << " exceeds order cap " << order_cap;
                throw std::runtime_error(os.str());
            }
            WeylElement e;
            e.action = m;
            e.word = std::move(w);
            e.length = int(e.word.size());
            int idx = int(elements_.size());
            elements_.push_back(std::move(e));
            index.emplace(elements_.back().action, idx);
            layer.push_back(idx);
        }
    }

    longest_ = int(elements_.size()) - 1;

    right_.assign(elements_.size() * size_t(n), 0);
    left_.assign(elements_.size() * size_t(n), 0);
    for (size_t w = 0; w < elements_.size(); ++w) {
        for (int j = 0; j < n; ++j) {
            auto r = checked_mat_mul(elements_[w].action, gens[j], n);
            right_[w * n + j] = index.at(r);
            auto l = checked_mat_mul(gens[j], elements_[w].action, n);
            left_[w * n + j] = index.at(l);
        }
    }
    for (size_t w = 0; w < elements_.size(); ++w) {
        // The inverse reads the reduced word backwards.
        int inv = 0;
        const Word& word = elements_[w].word;
        for (auto it = word.rbegin(); it != word.rend(); ++it) inv = mul_gen_right(inv, *it);
        elements_[w].inverse = inv;
        if (elements_[inv].length != elements_[w].length)
            throw std::logic_error("inverse length mismatch");
    }
    if (elements_[longest_].length != datum_.num_positive_roots())
        throw std::logic_error("longest element length disagrees with positive root count");
}

int WeylGroup::mul(int u, int v) const {
    int out = u;
    for (int j : elements_[v].word) out = mul_gen_right(out, j);
    return out;
}

int WeylGroup::from_word(const Word& w) const {
    int out = 0;
    for (int j : w) {
        if (j < 0 || j >= rank()) throw std::out_of_range("word letter out of range");
        out = mul_gen_right(out, j);
    }
    return out;
}

IntWeight WeylGroup::apply(int w, const IntWeight& v) const {
    const int n = rank();
    const auto& m = elements_[w].action;
    IntWeight out(n, Int(0));
    for (int i = 0; i < n; ++i) {
        Int s = 0;
        for (int j = 0; j < n; ++j) s += Int(m[size_t(i) * n + j]) * v[j];
        out[i] = s;
    }
    return out;
}

RatWeight WeylGroup::apply(int w, const RatWeight& v) const {
    const int n = rank();
    const auto& m = elements_[w].action;
    RatWeight out(n, Rat(0));
    for (int i = 0; i < n; ++i) {
        Rat s = 0;
        for (int j = 0; j < n; ++j) s += Rat(m[size_t(i) * n + j]) * v[j];
        out[i] = s;
    }
    return out;
}

Coweight WeylGroup::apply_coweight(int w, const Coweight& x) const {
    // <lam, w x> = <w^{-1} lam, x> forces the coweight matrix to be the
    // transpose of the inverse's weight matrix.
    const int n = rank();
    const auto& m = elements_[inverse(w)].action;
    Coweight out(n, Rat(0));
    for (int i = 0; i < n; ++i) {
        Rat s = 0;
        for (int j = 0; j < n; ++j) s += Rat(m[size_t(j) * n + i]) * x[j];
        out[i] = s;
    }
    return out;
}

void WeylGroup::build_bruhat_bitmatrix() {
    const size_t words = (order() + 63) / 64;
    below_.assign(order(), std::vector<uint64_t>(words, 0));
    auto set_bit = [&](std::vector<uint64_t>& row, size_t u) { row[u / 64] |= uint64_t(1) << (u % 64); };
    set_bit(below_[0], 0);
    // In length order: pick a left descent j of w; then u <= w iff u or s_j u
    // lies below s_j w.
    for (size_t w = 1; w < order(); ++w) {
        int j = -1;
        for (int t = 0; t < rank(); ++t)
            if (left_descent(int(w), t)) { j = t; break; }
        int sw = mul_gen_left(int(w), j);
        auto& row = below_[w];
        row = below_[sw];
        const auto& base = below_[sw];
        for (size_t blk = 0; blk < words; ++blk) {
            uint64_t bits = base[blk];
            while (bits) {
                int b = __builtin_ctzll(bits);
                bits &= bits - 1;
                size_t u = blk * 64 + size_t(b);
                set_bit(row, size_t(mul_gen_left(int(u), j)));
            }
        }
    }
}

bool WeylGroup::bruhat_leq(int u, int w) const {
    if (!below_.empty()) return (below_[w][size_t(u) / 64] >> (size_t(u) % 64)) & 1;
    return bruhat_lifting(u, w);
}

bool WeylGroup::bruhat_lifting(int u, int w) const {
    if (u == 0) return true;
    if (length(u) > length(w)) return false;
    if (u == w) return true;
    uint64_t key = (uint64_t(uint32_t(u)) << 32) | uint32_t(w);
    {
        std::shared_lock lk(bruhat_mutex_);
        auto it = bruhat_memo_.find(key);
        if (it != bruhat_memo_.end()) return it->second;
    }
    int j = -1;
    for (int t = 0; t < rank(); ++t)
        if (left_descent(w, t)) { j = t; break; }
    int sw = mul_gen_left(w, j);
    int su = mul_gen_left(u, j);
    bool res = (length(su) < length(u)) ? bruhat_lifting(su, sw) : bruhat_lifting(u, sw);
    {
        std::unique_lock lk(bruhat_mutex_);
        bruhat_memo_.emplace(key, res);
    }
    return res;
}

std::vector<int> WeylGroup::lower_interval(int w) const {
    std::vector<int> out;
    for (size_t u = 0; u < order(); ++u)
        if (bruhat_leq(int(u), w)) out.push_back(int(u));
    return out;
}

int WeylGroup::demazure_product(int u, int v) const {
    int out = u;
    for (int j : elements_[v].word) {
        int next = mul_gen_right(out, j);
        if (length(next) > length(out)) out = next;
    }
    return out;
}

int WeylGroup::min_coset_rep(int w, const std::vector<int>& S) const {
    int out = w;
    bool moved = true;
    while (moved) {
        moved = false;
        for (int j : S) {
            if (right_descent(out, j)) {
                out = mul_gen_right(out, j);
                moved = true;
            }
        }
    }
    return out;
}

std::vector<int> WeylGroup::parabolic_subgroup(const std::vector<int>& S) const {
    std::vector<char> seen(order(), 0);
    std::vector<int> stack{0}, out;
    seen[0] = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        out.push_back(x);
        for (int j : S) {
            int y = mul_gen_right(x, j);
            if (!seen[y]) {
                seen[y] = 1;
                stack.push_back(y);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

int WeylGroup::longest_parabolic(const std::vector<int>& S) const {
    int x = 0;
    bool moved = true;
    while (moved) {
        moved = false;
        for (int j : S) {
            int y = mul_gen_right(x, j);
            if (length(y) > length(x)) {
                x = y;
                moved = true;
            }
        }
    }
    return x;
}

std::vector<int> WeylGroup::min_coset_reps_maximal(int i) const {
    std::vector<int> out;
    for (size_t v = 0; v < order(); ++v) {
        bool ok = true;
        for (int j = 0; j < rank() && ok; ++j)
            if (j != i && right_descent(int(v), j)) ok = false;
        if (ok) out.push_back(int(v));
    }
    return out;
}

WeylGroup::StabilizerData WeylGroup::stabilizer_data(const IntWeight& lambda, int w) const {
    if (!datum_.is_dominant(lambda)) throw std::invalid_argument("stabilizer_data: weight not dominant");
    StabilizerData out;
    for (int i = 0; i < rank(); ++i)
        if (lambda[i] == 0) out.generators.push_back(i);
    out.subgroup = parabolic_subgroup(out.generators);
    int wbar = min_coset_rep(w, out.generators);
    out.w_max = mul(wbar, longest_parabolic(out.generators));
    return out;
}

int WeylGroup::g_map(int w, int v) const {
    return mul(v, demazure_product(inverse(v), w));
}

std::vector<Word> WeylGroup::all_reduced_words(int w, int max_length) const {
    if (length(w) > max_length)
        throw std::invalid_argument("all_reduced_words: length cap exceeded; raise max_length explicitly");
    if (w == 0) return {Word{}};
    std::vector<Word> out;
    for (int j = 0; j < rank(); ++j) {
        if (!right_descent(w, j)) continue;
        for (auto& prefix : all_reduced_words(mul_gen_right(w, j), max_length)) {
            prefix.push_back(j);
            out.push_back(std::move(prefix));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace dmz
