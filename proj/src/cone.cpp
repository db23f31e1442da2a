#include "demazure/cone.hpp"

#include "demazure/lattice.hpp"
#include "demazure/lp.hpp"

#include <omp.h>

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace dmz {

IntVec pair_to_lattice(const RootDatum& datum, const IntVec& doubled) {
    const int n = datum.rank();
    if (int(doubled.size()) != 2 * n) throw std::invalid_argument("pair_to_lattice: dim mismatch");
    RatWeight diff(n);
    for (int i = 0; i < n; ++i) diff[i] = Rat(doubled[n + i] - doubled[i]);
    RatVec c = datum.root_lattice_coords(diff);
    IntVec out(2 * n);
    for (int i = 0; i < n; ++i) out[i] = doubled[i];
    for (int i = 0; i < n; ++i) {
        if (!is_integer(c[i])) throw std::invalid_argument("pair_to_lattice: difference outside the root lattice");
        out[n + i] = num(c[i]);
    }
    return out;
}

IntVec pair_from_lattice(const RootDatum& datum, const IntVec& coords) {
    const int n = datum.rank();
    if (int(coords.size()) != 2 * n) throw std::invalid_argument("pair_from_lattice: dim mismatch");
    IntVec out(2 * n);
    for (int i = 0; i < n; ++i) out[i] = coords[i];
    for (int i = 0; i < n; ++i) {
        Int s = coords[i];
        for (int j = 0; j < n; ++j) s += Int(datum.cartan(i, j)) * coords[n + j];
        out[n + i] = s;
    }
    return out;
}

bool pair_in_lattice(const RootDatum& datum, const IntVec& doubled) {
    const int n = datum.rank();
    RatWeight diff(n);
    for (int i = 0; i < n; ++i) diff[i] = Rat(doubled[n + i] - doubled[i]);
    return all_integer(datum.root_lattice_coords(diff));
}

SemigroupCone cone_build(const WeylGroup& group, int w) {
    const RootDatum& datum = group.datum();
    const int n = datum.rank();
    SemigroupCone cone;
    cone.w = w;
    cone.rank = n;

    std::set<IntVec, LexLess> gens;
    for (int v : group.lower_interval(w)) {
        for (int i = 0; i < n; ++i) {
            IntWeight omega(n, Int(0));
            omega[i] = 1;
            IntWeight img = group.apply(v, omega);
            IntVec pair(2 * n);
            for (int k = 0; k < n; ++k) pair[k] = omega[k];
            for (int k = 0; k < n; ++k) pair[n + k] = img[k];
            gens.insert(std::move(pair));
        }
    }
    cone.generators.assign(gens.begin(), gens.end());

    // Dominance rows (lambda_j >= 0), then the doubled face system
    // <mu, v x_i> - <lambda, u x_i> >= 0 with denominators cleared.
    for (int j = 0; j < n; ++j) {
        IntVec row(2 * n, Int(0));
        row[j] = 1;
        cone.ineq_normals.push_back(std::move(row));
    }
    cone.num_dominance = cone.ineq_normals.size();
    const int w_inv = group.inverse(w);
    for (int i = 0; i < n; ++i) {
        std::vector<int> others;
        for (int j = 0; j < n; ++j)
            if (j != i) others.push_back(j);
        const Coweight xi = datum.fundamental_coweight(i);
        for (int v : group.min_coset_reps_maximal(i)) {
            int u = group.min_coset_rep(group.demazure_product(w_inv, v), others);
            Coweight nv = group.apply_coweight(v, xi);
            Coweight nu = group.apply_coweight(u, xi);
            Int scale = 1;
            for (const auto& c : nv) scale = boost::multiprecision::lcm(scale, den(c));
            for (const auto& c : nu) scale = boost::multiprecision::lcm(scale, den(c));
            IntVec row(2 * n);
            for (int k = 0; k < n; ++k) row[k] = -num(nu[k] * Rat(scale));
            for (int k = 0; k < n; ++k) row[n + k] = num(nv[k] * Rat(scale));
            cone.ineq_normals.push_back(std::move(row));
        }
    }

    // Construction cross-checks: every generator is a lattice pair satisfying
    // every inequality, and the cone is pointed.
    for (const auto& g : cone.generators) {
        if (!pair_in_lattice(datum, g)) throw std::logic_error("cone_build: generator outside the pair lattice");
        if (!cone_satisfies(cone, g)) throw std::logic_error("cone_build: generator violates the inequality system");
    }
    std::vector<RatVec> cols;
    cols.reserve(cone.generators.size());
    for (const auto& g : cone.generators) cols.push_back(to_rat(g));
    for (const auto& g : cone.generators) {
        RatVec neg(g.size());
        for (size_t k = 0; k < g.size(); ++k) neg[k] = -Rat(g[k]);
        if (in_cone(cols, neg)) throw std::logic_error("cone_build: cone is not pointed");
    }

    // Extremality, verified one generator at a time by exact LP.
    for (size_t gi = 0; gi < cone.generators.size(); ++gi) {
        std::vector<RatVec> others;
        others.reserve(cols.size() - 1);
        for (size_t k = 0; k < cols.size(); ++k)
            if (k != gi) others.push_back(cols[k]);
        if (!in_cone(others, cols[gi])) cone.extremal.push_back(int(gi));
    }
    if (cone.extremal.empty()) throw std::logic_error("cone_build: no extremal generators found");
    return cone;
}

bool cone_satisfies(const SemigroupCone& cone, const IntVec& doubled) {
    for (const auto& row : cone.ineq_normals)
        if (dot(row, doubled) < 0) return false;
    return true;
}

namespace {

// Kernel direction of a (k-1) x k system with rank k-1.
RatVec facet_normal(const std::vector<IntVec>& rays, const std::vector<int>& facet) {
    const int k = int(rays[0].size());
    RatMat m(int(facet.size()), k);
    for (size_t r = 0; r < facet.size(); ++r)
        for (int j = 0; j < k; ++j) m.at(int(r), j) = rays[facet[r]][j];
    // Eliminate; the free column yields the kernel vector.
    int rows = m.rows;
    std::vector<int> pivot_of_col(k, -1);
    int row = 0;
    for (int col = 0; col < k && row < rows; ++col) {
        int p = -1;
        for (int r = row; r < rows; ++r)
            if (m.at(r, col) != 0) { p = r; break; }
        if (p < 0) continue;
        if (p != row)
            for (int j = 0; j < k; ++j) std::swap(m.at(p, j), m.at(row, j));
        Rat pv = m.at(row, col);
        for (int j = 0; j < k; ++j) m.at(row, j) /= pv;
        for (int r = 0; r < rows; ++r) {
            if (r == row || m.at(r, col) == 0) continue;
            Rat f = m.at(r, col);
            for (int j = 0; j < k; ++j) m.at(r, j) -= f * m.at(row, j);
        }
        pivot_of_col[col] = row;
        ++row;
    }
    int free_col = -1;
    for (int col = 0; col < k; ++col)
        if (pivot_of_col[col] < 0) { free_col = col; break; }
    if (row != k - 1 || free_col < 0) throw std::logic_error("facet_normal: facet does not span a hyperplane");
    RatVec h(k, Rat(0));
    h[free_col] = 1;
    for (int col = 0; col < k; ++col)
        if (pivot_of_col[col] >= 0) h[col] = -m.at(pivot_of_col[col], free_col);
    return h;
}

// Incremental placing triangulation of a pointed cone over extremal rays
// given in span coordinates. Returns index sets of size k.
std::vector<std::vector<int>> triangulate(const std::vector<IntVec>& rays) {
    const int k = int(rays[0].size());
    const int m = int(rays.size());
    if (m < k) throw std::logic_error("triangulate: fewer rays than the span dimension");

    // Insertion order: a maximal independent prefix first, rest afterwards.
    std::vector<int> order, rest;
    {
        RatMat acc(0, 0);
        std::vector<IntVec> chosen;
        for (int i = 0; i < m; ++i) {
            std::vector<IntVec> trial = chosen;
            trial.push_back(rays[i]);
            RatMat tm(int(trial.size()), k);
            for (size_t r = 0; r < trial.size(); ++r)
                for (int j = 0; j < k; ++j) tm.at(int(r), j) = trial[r][j];
            if (mat_rank(tm) == int(trial.size()) && int(chosen.size()) < k) {
                chosen.push_back(rays[i]);
                order.push_back(i);
            } else {
                rest.push_back(i);
            }
        }
        if (int(order.size()) != k) throw std::logic_error("triangulate: rays do not span");
        order.insert(order.end(), rest.begin(), rest.end());
    }

    std::vector<std::vector<int>> simplices;
    {
        std::vector<int> first(order.begin(), order.begin() + k);
        std::sort(first.begin(), first.end());
        simplices.push_back(first);
    }
    // Facet hyperplanes recur across insertions; cache them unoriented.
    std::map<std::vector<int>, RatVec> normal_cache;
    auto cached_normal = [&](const std::vector<int>& facet) -> const RatVec& {
        auto it = normal_cache.find(facet);
        if (it == normal_cache.end()) it = normal_cache.emplace(facet, facet_normal(rays, facet)).first;
        return it->second;
    };
    for (int step = k; step < m; ++step) {
        int g = order[step];
        // Boundary facets: (k-1)-subsets appearing in exactly one simplex.
        std::map<std::vector<int>, std::vector<std::pair<size_t, int>>> facets;
        for (size_t s = 0; s < simplices.size(); ++s) {
            for (int drop = 0; drop < k; ++drop) {
                std::vector<int> f;
                f.reserve(k - 1);
                for (int t = 0; t < k; ++t)
                    if (t != drop) f.push_back(simplices[s][t]);
                facets[f].emplace_back(s, simplices[s][drop]);
            }
        }
        size_t added = 0;
        for (const auto& [facet, owners] : facets) {
            if (owners.size() != 1) continue;
            const RatVec& h = cached_normal(facet);
            Rat side_inner = dot(h, rays[owners[0].second]);
            if (side_inner == 0) throw std::logic_error("triangulate: degenerate facet orientation");
            Rat side_new = dot(h, rays[g]);
            bool visible = side_inner > 0 ? side_new < 0 : side_new > 0;
            if (visible) {
                std::vector<int> ns = facet;
                ns.push_back(g);
                std::sort(ns.begin(), ns.end());
                simplices.push_back(std::move(ns));
                ++added;
            }
        }
        if (added == 0) throw std::logic_error("triangulate: extremal ray saw no boundary facet");
    }
    return simplices;
}

Int degree_key(const IntVec& doubled, int rank) {
    Int s = 0;
    for (int i = 0; i < rank; ++i) s += doubled[i];
    return s;
}

}  // namespace

HilbertBasisResult hilbert_basis(const WeylGroup& group, const SemigroupCone& cone,
                                 const HilbertBasisOptions& opts) {
    const RootDatum& datum = group.datum();
    const int n = cone.rank;
    HilbertBasisResult out;

    // Primitive extremal rays in pair-lattice coordinates.
    std::vector<IntVec> rays_pair, rays_lattice;
    for (int gi : cone.extremal) {
        IntVec lc = pair_to_lattice(datum, cone.generators[gi]);
        Int g = 0;
        for (const auto& c : lc) g = boost::multiprecision::gcd(g, c);
        if (g > 1)
            for (auto& c : lc) c /= g;
        rays_lattice.push_back(lc);
        rays_pair.push_back(pair_from_lattice(datum, lc));
    }

    SpanLattice span = span_lattice(rays_lattice, 2 * n);
    std::vector<IntVec> rays_span;
    rays_span.reserve(rays_lattice.size());
    for (const auto& r : rays_lattice) rays_span.push_back(lattice_coords(span.basis, r));

    std::vector<std::vector<int>> simplices =
        span.dim > 0 ? triangulate(rays_span) : std::vector<std::vector<int>>{};
    out.num_simplices = simplices.size();

    // Half-open parallelepiped points of each simplicial piece, via residues
    // of the diagonal form. Enumeration is parallel; everything downstream of
    // the frozen candidate snapshot is sequential.
    std::vector<std::set<IntVec, LexLess>> found(std::max<size_t>(simplices.size(), 1));
    int threads = opts.parallel ? omp_get_max_threads() : 1;
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (size_t si = 0; si < simplices.size(); ++si) {
        const auto& simplex = simplices[si];
        const int k = span.dim;
        IMat cols(k, IntVec(k));
        for (int j = 0; j < k; ++j)
            for (int i = 0; i < k; ++i) cols[i][j] = rays_span[simplex[j]][i];
        SmithForm f = smith_form(cols);
        std::vector<Int> diag = f.diagonal(k);
        uint64_t count = 1;
        for (const auto& d : diag) {
            if (d == 0) throw std::logic_error("hilbert_basis: singular simplicial piece");
            count *= d.convert_to<uint64_t>();
            if (count > opts.residue_cap) throw std::runtime_error("hilbert_basis: residue cap exceeded");
        }
        if (count == 1) continue;  // unimodular piece: no interior lattice points
        RatMat rmat(k, k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) rmat.at(i, j) = cols[i][j];
        RatMat rinv = mat_inverse(rmat);

        IntVec t(k, Int(0));
        while (true) {
            // z = u_inv * t is a residue representative; shift into the box.
            IntVec z(k, Int(0));
            for (int i = 0; i < k; ++i) {
                Int s = 0;
                for (int j = 0; j < k; ++j) s += f.u_inv[i][j] * t[j];
                z[i] = s;
            }
            RatVec theta(k);
            for (int i = 0; i < k; ++i) {
                Rat s = 0;
                for (int j = 0; j < k; ++j) s += rinv.at(i, j) * Rat(z[j]);
                theta[i] = s;
            }
            // point = z - cols * floor(theta), the representative inside the box
            IntVec point = z;
            bool zero = true;
            for (int j = 0; j < k; ++j) {
                Int fl = rat_floor(theta[j]);
                if (fl != 0)
                    for (int i = 0; i < k; ++i) point[i] -= cols[i][j] * fl;
            }
            for (const auto& c : point)
                if (c != 0) zero = false;
            if (!zero) {
                // Back to pair coordinates through the span basis.
                IntVec lat(2 * n, Int(0));
                for (int i = 0; i < 2 * n; ++i) {
                    Int s = 0;
                    for (int j = 0; j < k; ++j) s += span.basis[j][i] * point[j];
                    lat[i] = s;
                }
                found[si].insert(pair_from_lattice(datum, lat));
            }
            int pos = k - 1;
            while (pos >= 0) {
                ++t[pos];
                if (t[pos] < diag[pos]) break;
                t[pos] = 0;
                --pos;
            }
            if (pos < 0) break;
        }
    }

    std::set<IntVec, LexLess> candidates;
    for (const auto& r : rays_pair) candidates.insert(r);
    for (const auto& s : found) candidates.insert(s.begin(), s.end());
    out.num_candidates = candidates.size();

    // Every candidate must already satisfy the inequality description; this
    // cross-checks the two cone descriptions against each other.
    for (const auto& c : candidates)
        if (!cone_satisfies(cone, c)) throw std::logic_error("hilbert_basis: candidate violates inequalities");

    // Reduction in weight-degree order; an element is reducible when
    // subtracting a confirmed basis element lands back in the semigroup.
    std::vector<IntVec> ordered(candidates.begin(), candidates.end());
    std::stable_sort(ordered.begin(), ordered.end(), [&](const IntVec& a, const IntVec& b) {
        Int da = degree_key(a, n), db = degree_key(b, n);
        if (da != db) return da < db;
        return LexLess{}(a, b);
    });
    std::vector<IntVec> basis;
    for (const auto& x : ordered) {
        bool reducible = false;
        for (const auto& h : basis) {
            IntVec diff = sub(x, h);
            if (is_zero(diff)) continue;
            if (cone_satisfies(cone, diff)) { reducible = true; break; }
        }
        if (!reducible) basis.push_back(x);
    }
    std::sort(basis.begin(), basis.end(), LexLess{});
    out.basis = std::move(basis);
    return out;
}

PropertyPReport property_p_check(const WeylGroup& group, int w, const HilbertBasisOptions& opts) {
    const int n = group.rank();
    SemigroupCone cone = cone_build(group, w);
    HilbertBasisResult hb = hilbert_basis(group, cone, opts);

    PropertyPReport rep;
    rep.basis_size = hb.basis.size();
    rep.extremal_rays = cone.extremal.size();

    std::set<IntVec, LexLess> expected;
    for (int j = 0; j < n; ++j) {
        IntWeight omega(n, Int(0));
        omega[j] = 1;
        CharacterPoly ch = demazure_character(group, omega, group.word(w));
        for (const auto& [mu, m] : ch) {
            IntVec pair(2 * n);
            for (int k = 0; k < n; ++k) pair[k] = omega[k];
            for (int k = 0; k < n; ++k) pair[n + k] = mu[k];
            expected.insert(std::move(pair));
        }
    }

    std::set<IntVec, LexLess> basis_set(hb.basis.begin(), hb.basis.end());
    for (const auto& b : hb.basis) {
        Int sum = 0;
        bool fundamental = true;
        for (int k = 0; k < n; ++k) {
            if (b[k] < 0) fundamental = false;
            sum += b[k];
        }
        if (!fundamental || sum != 1) rep.non_fundamental.push_back(b);
        if (!expected.count(b)) rep.extra.push_back(b);
    }
    for (const auto& e : expected)
        if (!basis_set.count(e)) rep.missing.push_back(e);

    rep.holds = rep.non_fundamental.empty() && rep.missing.empty() && rep.extra.empty();
    return rep;
}

}  // namespace dmz
