#include "demazure/char_poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace dmz {

CharacterPoly monomial(const IntWeight& w) {
    CharacterPoly p;
    p.emplace(w, Int(1));
    return p;
}

CharacterPoly demazure_operator(const RootDatum& datum, int i, const CharacterPoly& p) {
    if (i < 0 || i >= datum.rank()) throw std::out_of_range("demazure_operator: bad index");
    const IntWeight alpha = datum.simple_root(i);
    CharacterPoly out;
    auto bump = [&out](IntWeight w, const Int& m) {
        auto [it, inserted] = out.emplace(std::move(w), m);
        if (!inserted) {
            it->second += m;
            if (it->second == 0) out.erase(it);
        }
    };
    for (const auto& [w, m] : p) {
        Int pairing = w[i];
        if (pairing >= 0) {
            IntWeight term = w;
            for (Int k = 0; k <= pairing; ++k) {
                bump(term, m);
                if (k < pairing) term = sub(term, alpha);
            }
        } else if (pairing == -1) {
            // contributes nothing
        } else {
            Int interior = -pairing - 1;
            IntWeight term = add(w, alpha);
            for (Int k = 1; k <= interior; ++k) {
                bump(term, -m);
                if (k < interior) term = add(term, alpha);
            }
        }
    }
    return out;
}

CharacterPoly demazure_character(const WeylGroup& group, const IntWeight& lambda, const Word& word) {
    const RootDatum& datum = group.datum();
    if (int(lambda.size()) != datum.rank()) throw std::invalid_argument("demazure_character: rank mismatch");
    if (!datum.is_dominant(lambda)) throw std::invalid_argument("demazure_character: weight not dominant");
    int w = group.from_word(word);
    if (group.length(w) != int(word.size()))
        throw std::invalid_argument("demazure_character: word '" + word_to_string(word) + "' is not reduced");
    CharacterPoly c = monomial(lambda);
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        c = demazure_operator(datum, *it, c);
        // Along a reduced word every intermediate stage is an honest character;
        // a negative coefficient here means the word validation above is broken.
        for (const auto& [wt, m] : c)
            if (m <= 0) throw std::logic_error("negative multiplicity along reduced word");
    }
    return c;
}

Int multiplicity(const CharacterPoly& c, const IntWeight& mu) {
    auto it = c.find(mu);
    return it == c.end() ? Int(0) : it->second;
}

Int total_dimension(const CharacterPoly& c) {
    Int d = 0;
    for (const auto& [w, m] : c) d += m;
    return d;
}

namespace {

// Dominant representative under the simple reflections.
IntWeight dominate(const RootDatum& datum, IntWeight w) {
    bool moved = true;
    while (moved) {
        moved = false;
        for (int i = 0; i < datum.rank(); ++i) {
            if (w[i] < 0) {
                w = datum.reflect_weight(i, w);
                moved = true;
            }
        }
    }
    return w;
}

}  // namespace

CharacterPoly freudenthal_character(const WeylGroup& group, const IntWeight& lambda, uint64_t max_box_points) {
    const RootDatum& datum = group.datum();
    const int n = datum.rank();
    if (!datum.is_dominant(lambda)) throw std::invalid_argument("freudenthal_character: weight not dominant");

    // Bounding box in root coordinates: lambda - w0 lambda spans the support.
    IntWeight lowest = group.apply(group.longest(), lambda);
    RatVec span = datum.root_lattice_coords(to_rat(sub(lambda, lowest)));
    IntVec box = to_int(span);
    uint64_t volume = 1;
    for (const auto& b : box) {
        volume *= uint64_t(b.convert_to<long long>() + 1);
        if (volume > max_box_points)
            throw std::runtime_error("freudenthal_character: dominant box exceeds size cap");
    }

    // All dominant weights lambda - sum n_i alpha_i inside the box, by height.
    std::vector<std::pair<long long, IntWeight>> dominant;
    IntVec counter(n, Int(0));
    while (true) {
        IntWeight mu = lambda;
        long long height = 0;
        for (int i = 0; i < n; ++i) {
            const IntWeight alpha = datum.simple_root(i);
            for (int k = 0; k < n; ++k) mu[k] -= counter[i] * alpha[k];
            height += counter[i].convert_to<long long>();
        }
        if (datum.is_dominant(mu)) dominant.emplace_back(height, mu);
        int pos = n - 1;
        while (pos >= 0) {
            if (counter[pos] < box[pos]) {
                ++counter[pos];
                break;
            }
            counter[pos] = 0;
            --pos;
        }
        if (pos < 0) break;
    }
    std::sort(dominant.begin(), dominant.end(),
              [](const auto& a, const auto& b) {
                  if (a.first != b.first) return a.first < b.first;
                  return LexLess{}(a.second, b.second);
              });

    const IntWeight rho = datum.rho();
    RatWeight lr = to_rat(add(lambda, rho));
    const Rat norm_top = datum.form(lr, lr);

    const auto& roots = datum.positive_roots();
    // Per-root tables: squared norm and weight-coordinate form.
    std::vector<Int> beta_norm(roots.size(), Int(0));
    std::vector<IntWeight> beta_wt(roots.size(), IntWeight(n, Int(0)));
    for (size_t b = 0; b < roots.size(); ++b) {
        const auto& beta = roots[b];
        for (int j = 0; j < n; ++j)
            for (int k2 = 0; k2 < n; ++k2) {
                beta_norm[b] += beta[j] * Int(datum.cartan(j, k2)) * beta[k2] * datum.symmetrizers()[j];
                beta_wt[b][j] += Int(datum.cartan(j, k2)) * beta[k2];
            }
    }

    std::map<IntWeight, Int, LexLess> mult;
    for (const auto& [height, mu] : dominant) {
        if (mu == lambda) {
            mult[mu] = 1;
            continue;
        }
        Rat acc = 0;
        for (size_t b = 0; b < roots.size(); ++b) {
            const auto& beta = roots[b];
            Int mu_beta = 0;  // (mu, beta) in the invariant form
            for (int j = 0; j < n; ++j) mu_beta += mu[j] * beta[j] * datum.symmetrizers()[j];
            IntWeight cur = mu;
            for (long long k = 1;; ++k) {
                cur = add(cur, beta_wt[b]);
                IntWeight rep = dominate(datum, cur);
                auto it = mult.find(rep);
                if (it == mult.end()) break;  // beyond the support
                acc += Rat(2) * Rat(mu_beta + Int(k) * beta_norm[b]) * Rat(it->second);
            }
        }
        RatWeight mr = to_rat(add(mu, rho));
        Rat denom = norm_top - datum.form(mr, mr);
        Rat value = acc / denom;
        if (!is_integer(value) || value < 0) throw std::logic_error("freudenthal recursion produced a non-multiplicity");
        if (value > 0) mult[mu] = num(value);
    }

    // Orbit expansion.
    CharacterPoly full;
    for (const auto& [mu, m] : mult) {
        for (size_t w = 0; w < group.order(); ++w) {
            full.emplace(group.apply(int(w), mu), m);
        }
    }
    return full;
}

Int weyl_dimension(const RootDatum& datum, const IntWeight& lambda) {
    if (!datum.is_dominant(lambda)) throw std::invalid_argument("weyl_dimension: weight not dominant");
    const int n = datum.rank();
    Rat dim = 1;
    const IntWeight rho = datum.rho();
    for (const auto& beta : datum.positive_roots()) {
        // <mu, beta_vee> = (mu, beta)/d_beta; the d_beta factors cancel in the
        // ratio, so plain (mu, beta) works.
        Rat top = 0, bot = 0;
        for (int j = 0; j < n; ++j) {
            top += Rat((lambda[j] + rho[j]) * beta[j] * datum.symmetrizers()[j]);
            bot += Rat(rho[j] * beta[j] * datum.symmetrizers()[j]);
        }
        dim *= top / bot;
    }
    if (!is_integer(dim)) throw std::logic_error("Weyl dimension not integral");
    return num(dim);
}

}  // namespace dmz
