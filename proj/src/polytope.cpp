#include "demazure/polytope.hpp"

#include "demazure/lp.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace dmz {

std::vector<IntWeight> vertex_set(const WeylGroup& group, const IntWeight& lambda, int w) {
    if (!group.datum().is_dominant(lambda)) throw std::invalid_argument("vertex_set: weight not dominant");
    std::set<IntWeight, LexLess> verts;
    for (int v : group.lower_interval(w)) verts.insert(group.apply(v, lambda));
    return {verts.begin(), verts.end()};
}

std::vector<Inequality> inequality_set(const WeylGroup& group, const IntWeight& lambda, int w) {
    if (!group.datum().is_dominant(lambda)) throw std::invalid_argument("inequality_set: weight not dominant");
    const RootDatum& datum = group.datum();
    const int n = datum.rank();
    const int w_inv = group.inverse(w);
    std::vector<Inequality> out;
    for (int i = 0; i < n; ++i) {
        std::vector<int> others;
        for (int j = 0; j < n; ++j)
            if (j != i) others.push_back(j);
        const Coweight xi = datum.fundamental_coweight(i);
        for (int v : group.min_coset_reps_maximal(i)) {
            int u = group.min_coset_rep(group.demazure_product(w_inv, v), others);
            Inequality iq;
            iq.v = v;
            iq.i = i;
            iq.normal = group.apply_coweight(v, xi);
            // <lambda, u x_i> = <u^{-1} lambda, x_i>
            iq.bound = datum.pairing(to_rat(group.apply(group.inverse(u), lambda)), xi);
            Int scale = 1;
            for (const auto& c : iq.normal) scale = boost::multiprecision::lcm(scale, den(c));
            iq.normal_scaled.resize(n);
            for (int k = 0; k < n; ++k) iq.normal_scaled[k] = num(iq.normal[k] * Rat(scale));
            Rat sb = iq.bound * Rat(scale);
            if (!is_integer(sb)) throw std::logic_error("scaled bound not integral for integral weight");
            iq.bound_scaled = num(sb);
            out.push_back(std::move(iq));
        }
    }
    return out;
}

DemazurePolytope build_polytope(const WeylGroup& group, const IntWeight& lambda, int w) {
    DemazurePolytope p;
    p.lambda = lambda;
    p.w = w;
    p.vertices = vertex_set(group, lambda, w);
    p.inequalities = inequality_set(group, lambda, w);
    return p;
}

bool contains(const DemazurePolytope& p, const IntWeight& mu) {
    for (const auto& iq : p.inequalities)
        if (dot(mu, iq.normal_scaled) < iq.bound_scaled) return false;
    return true;
}

bool contains(const DemazurePolytope& p, const RatWeight& mu) {
    for (const auto& iq : p.inequalities)
        if (dot(mu, iq.normal_scaled) < Rat(iq.bound_scaled)) return false;
    return true;
}

bool hull_membership_oracle(const std::vector<IntWeight>& vertices, const RatWeight& mu) {
    if (vertices.empty()) throw std::invalid_argument("hull_membership_oracle: empty vertex set");
    std::vector<RatVec> pts;
    pts.reserve(vertices.size());
    for (const auto& v : vertices) pts.push_back(to_rat(v));
    return in_convex_hull(pts, mu);
}

std::vector<IntWeight> lattice_points(const WeylGroup& group, const DemazurePolytope& p) {
    const RootDatum& datum = group.datum();
    const int n = datum.rank();
    IntWeight lowest = group.apply(group.longest(), p.lambda);
    RatVec span = datum.root_lattice_coords(to_rat(sub(p.lambda, lowest)));
    IntVec box = to_int(span);

    std::vector<IntWeight> alpha(n);
    for (int i = 0; i < n; ++i) alpha[i] = datum.simple_root(i);

    std::vector<IntWeight> out;
    auto rec = [&](auto&& self, int level, const IntWeight& cur) -> void {
        if (level == n) {
            if (contains(p, cur)) out.push_back(cur);
            return;
        }
        IntWeight step = cur;
        for (Int k = 0;; ++k) {
            self(self, level + 1, step);
            if (k == box[level]) break;
            step = sub(step, alpha[level]);
        }
    };
    rec(rec, 0, p.lambda);
    std::sort(out.begin(), out.end(), LexLess{});
    return out;
}

std::optional<RootSegment> root_string_segment(const WeylGroup& group, const DemazurePolytope& p,
                                               const RatWeight& mu, int i) {
    const RootDatum& datum = group.datum();
    if (i < 0 || i >= datum.rank()) throw std::out_of_range("root_string_segment: bad index");
    RatWeight alpha = to_rat(datum.simple_root(i));
    bool has_lo = false, has_hi = false;
    Rat t_lo, t_hi;
    for (const auto& iq : p.inequalities) {
        Rat base = dot(mu, iq.normal_scaled);
        Rat slope = dot(alpha, iq.normal_scaled);
        Rat bound(iq.bound_scaled);
        if (slope == 0) {
            if (base < bound) return std::nullopt;
        } else if (slope > 0) {
            Rat t = (bound - base) / slope;  // t >= this
            if (!has_lo || t > t_lo) { t_lo = t; has_lo = true; }
        } else {
            Rat t = (bound - base) / slope;  // t <= this
            if (!has_hi || t < t_hi) { t_hi = t; has_hi = true; }
        }
    }
    if (!has_lo || !has_hi) throw std::logic_error("root line not trapped; polytope unbounded?");
    if (t_lo > t_hi) return std::nullopt;
    RootSegment seg;
    seg.t_lo = t_lo;
    seg.t_hi = t_hi;
    seg.lo.resize(mu.size());
    seg.hi.resize(mu.size());
    for (size_t k = 0; k < mu.size(); ++k) {
        seg.lo[k] = mu[k] + t_lo * alpha[k];
        seg.hi[k] = mu[k] + t_hi * alpha[k];
    }
    return seg;
}

SaturationReport saturation_report(const WeylGroup& group, const IntWeight& lambda, const Word& word,
                                   bool keep_multiplicities) {
    SaturationReport rep;
    rep.lambda = lambda;
    rep.word = word;
    int w = group.from_word(word);
    if (group.length(w) != int(word.size())) throw std::invalid_argument("saturation_report: word not reduced");

    DemazurePolytope p = build_polytope(group, lambda, w);
    std::vector<IntWeight> pts = lattice_points(group, p);
    CharacterPoly ch = demazure_character(group, lambda, word);

    rep.num_lattice_points = pts.size();
    rep.num_support = ch.size();
    size_t pi = 0;
    auto ci = ch.begin();
    const LexLess less{};
    while (pi < pts.size() || ci != ch.end()) {
        if (ci == ch.end() || (pi < pts.size() && less(pts[pi], ci->first))) {
            rep.only_polytope.push_back(pts[pi]);
            ++pi;
        } else if (pi == pts.size() || less(ci->first, pts[pi])) {
            rep.only_character.push_back(ci->first);
            ++ci;
        } else {
            if (keep_multiplicities) rep.multiplicities.emplace_back(pts[pi], ci->second);
            ++pi;
            ++ci;
        }
    }
    return rep;
}

}  // namespace dmz
