#include "demazure/faces.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace dmz {

LeviContext::LeviContext(const WeylGroup& ambient) {
    const RootDatum& datum = ambient.datum();
    const int n = datum.rank();
    entries_.resize(n);
    for (int i = 0; i < n; ++i) {
        Entry& e = entries_[i];
        e.omitted = i;
        for (int j = 0; j < n; ++j)
            if (j != i) e.indices.push_back(j);
        e.datum = std::make_unique<RootDatum>(datum.sub_datum(e.indices));
        e.group = std::make_unique<WeylGroup>(*e.datum);
        e.position.assign(n, -1);
        for (size_t k = 0; k < e.indices.size(); ++k) e.position[e.indices[k]] = int(k);
    }
}

namespace {

std::vector<int> complement_of(int i, int rank) {
    std::vector<int> out;
    for (int j = 0; j < rank; ++j)
        if (j != i) out.push_back(j);
    return out;
}

bool in_parabolic(const WeylGroup& g, int x, const std::vector<int>& S) {
    return g.min_coset_rep(x, S) == g.identity();
}

// Restriction of an ambient weight to Levi coordinates.
IntWeight restrict_coords(const IntWeight& w, const std::vector<int>& indices) {
    IntWeight out;
    out.reserve(indices.size());
    for (int j : indices) out.push_back(w[j]);
    return out;
}

// Full-space weight lambda' - sum n_j alpha_j from a Levi weight, where n are
// the sub-datum root coordinates of lambda'_L - nu_L. Inverse of the
// restriction on the affine slice the face lives in.
IntWeight lift_levi_weight(const RootDatum& ambient, const RootDatum& levi, const std::vector<int>& indices,
                           const IntWeight& lambda_full, const IntWeight& nu_levi) {
    IntWeight lam_levi = restrict_coords(lambda_full, indices);
    RatVec n = levi.root_lattice_coords(to_rat(sub(lam_levi, nu_levi)));
    IntVec ni = to_int(n);
    IntWeight out = lambda_full;
    for (size_t k = 0; k < indices.size(); ++k) {
        IntWeight alpha = ambient.simple_root(indices[k]);
        for (size_t c = 0; c < out.size(); ++c) out[c] -= ni[k] * alpha[c];
    }
    return out;
}

}  // namespace

Face face_data(const WeylGroup& group, const IntWeight& lambda, int w, int v, int i) {
    const RootDatum& datum = group.datum();
    if (!datum.is_dominant(lambda)) throw std::invalid_argument("face_data: weight not dominant");
    if (i < 0 || i >= datum.rank()) throw std::out_of_range("face_data: bad parabolic index");
    const std::vector<int> others = complement_of(i, datum.rank());
    if (group.min_coset_rep(v, others) != v)
        throw std::invalid_argument("face_data: v is not a minimal coset representative");

    Face f;
    f.v = v;
    f.i = i;
    f.levi_indices = others;
    f.w_normalized = group.stabilizer_data(lambda, w).w_max;

    int x = group.demazure_product(group.inverse(f.w_normalized), v);
    f.u = group.min_coset_rep(x, others);
    f.y = group.mul(group.inverse(x), f.u);
    if (!in_parabolic(group, f.y, others)) throw std::logic_error("face_data: parabolic part escaped W_P");
    if (group.length(f.u) + group.length(f.y) != group.length(x))
        throw std::logic_error("face_data: non-additive parabolic factorization");

    // Equality locus of the (v, i) inequality over the vertex set.
    const Coweight normal = group.apply_coweight(v, datum.fundamental_coweight(i));
    const Rat bound = datum.pairing(to_rat(group.apply(group.inverse(f.u), lambda)),
                                    datum.fundamental_coweight(i));
    std::set<IntWeight, LexLess> filtered;
    for (int q : group.lower_interval(f.w_normalized)) {
        IntWeight mu = group.apply(q, lambda);
        if (datum.pairing(to_rat(mu), normal) == bound) filtered.insert(mu);
    }

    // Independent route: the coset formula {x lambda : x in v W_P u^{-1}, x <= w}.
    std::set<IntWeight, LexLess> coset;
    for (int c : group.parabolic_subgroup(others)) {
        int xc = group.mul(group.mul(v, c), group.inverse(f.u));
        if (group.bruhat_leq(xc, f.w_normalized)) coset.insert(group.apply(xc, lambda));
    }
    if (filtered != coset) throw std::logic_error("face_data: equality locus disagrees with coset formula");

    f.vertex_weights.assign(filtered.begin(), filtered.end());
    f.levi_lambda = restrict_coords(group.apply(group.inverse(f.u), lambda), others);
    return f;
}

LeviCheckReport levi_face_check(const WeylGroup& group, const LeviContext& levis, const Face& face,
                                const IntWeight& lambda) {
    LeviCheckReport rep;
    const RootDatum& datum = group.datum();
    const auto& levi = levis.omitting(face.i);
    std::ostringstream detail;

    // (a) interval identity inside W_{P_i}.
    rep.interval_ok = true;
    for (int z : group.parabolic_subgroup(face.levi_indices)) {
        int xz = group.mul(group.mul(face.v, z), group.inverse(face.u));
        bool lhs = group.bruhat_leq(xz, face.w_normalized);
        bool rhs = group.bruhat_leq(z, face.y);
        if (lhs != rhs) {
            rep.interval_ok = false;
            detail << "[interval] z=" << word_to_string(group.word(z)) << " membership " << lhs << " vs interval "
                   << rhs << "; ";
            break;
        }
    }

    // Levi data: highest weight u^{-1} lambda restricted, word of y reindexed.
    IntWeight lam_prime = group.apply(group.inverse(face.u), lambda);
    IntWeight lam_levi = restrict_coords(lam_prime, levi.indices);
    Word y_word;
    for (int letter : group.word(face.y)) {
        if (levi.position[letter] < 0) throw std::logic_error("levi_face_check: y uses the omitted node");
        y_word.push_back(levi.position[letter]);
    }
    int y_sub = levi.group->from_word(y_word);

    // (b) vertex bijection through mu -> v^{-1} mu.
    std::set<IntWeight, LexLess> mapped;
    bool slice_ok = true;
    int v_inv = group.inverse(face.v);
    for (const auto& mu : face.vertex_weights) {
        IntWeight nu = group.apply(v_inv, mu);
        RatVec c = datum.root_lattice_coords(to_rat(sub(lam_prime, nu)));
        for (int j = 0; j < datum.rank(); ++j) {
            if (levi.position[j] < 0 && c[j] != 0) {
                slice_ok = false;
                detail << "[vertex] v^{-1}mu off the Levi slice; ";
            }
        }
        mapped.insert(restrict_coords(nu, levi.indices));
    }
    auto levi_vertices = vertex_set(*levi.group, lam_levi, y_sub);
    rep.vertex_bijection_ok = slice_ok && mapped.size() == levi_vertices.size() &&
                              std::equal(mapped.begin(), mapped.end(), levi_vertices.begin());
    if (!rep.vertex_bijection_ok && slice_ok)
        detail << "[vertex] mapped " << mapped.size() << " vs levi " << levi_vertices.size() << "; ";

    // (c) lattice-point bijection on the same slice.
    DemazurePolytope ambient = build_polytope(group, lambda, face.w_normalized);
    const Coweight normal = group.apply_coweight(face.v, datum.fundamental_coweight(face.i));
    const Rat bound = datum.pairing(to_rat(group.apply(group.inverse(face.u), lambda)),
                                    datum.fundamental_coweight(face.i));
    std::set<IntWeight, LexLess> face_pts;
    for (const auto& mu : lattice_points(group, ambient)) {
        if (datum.pairing(to_rat(mu), normal) != bound) continue;
        IntWeight nu = group.apply(v_inv, mu);
        RatVec c = datum.root_lattice_coords(to_rat(sub(lam_prime, nu)));
        bool on_slice = true;
        for (int j = 0; j < datum.rank(); ++j)
            if (levi.position[j] < 0 && c[j] != 0) on_slice = false;
        if (!on_slice || !all_integer(c)) {
            detail << "[lattice] face point maps off the Levi lattice; ";
            continue;
        }
        face_pts.insert(restrict_coords(nu, levi.indices));
    }
    DemazurePolytope levi_poly = build_polytope(*levi.group, lam_levi, y_sub);
    auto levi_pts = lattice_points(*levi.group, levi_poly);
    rep.lattice_bijection_ok =
        face_pts.size() == levi_pts.size() && std::equal(face_pts.begin(), face_pts.end(), levi_pts.begin());
    if (!rep.lattice_bijection_ok)
        detail << "[lattice] face " << face_pts.size() << " vs levi " << levi_pts.size() << "; ";

    // (d) multiplicity domination.
    rep.mult_domination_ok = true;
    CharacterPoly ambient_char = demazure_character(group, lambda, group.word(face.w_normalized));
    CharacterPoly levi_char = demazure_character(*levi.group, lam_levi, levi.group->word(y_sub));
    for (const auto& [nu_levi, m] : levi_char) {
        IntWeight nu_full = lift_levi_weight(datum, *levi.datum, levi.indices, lam_prime, nu_levi);
        IntWeight mu = group.apply(face.v, nu_full);
        if (multiplicity(ambient_char, mu) < m) {
            rep.mult_domination_ok = false;
            detail << "[mult] levi multiplicity exceeds ambient; ";
            break;
        }
    }

    rep.detail = detail.str();
    return rep;
}

}  // namespace dmz
