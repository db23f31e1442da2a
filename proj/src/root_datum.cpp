#include "demazure/root_datum.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace dmz {

namespace {

void add_edge(std::vector<int64_t>& c, int rank, int i, int j, int64_t cij, int64_t cji) {
    c[size_t(i) * rank + j] = cij;
    c[size_t(j) * rank + i] = cji;
}

std::vector<int64_t> simple_cartan(char t, int r) {
    std::vector<int64_t> c(size_t(r) * r, 0);
    for (int i = 0; i < r; ++i) c[size_t(i) * r + i] = 2;
    auto chain = [&](int upto) {
        for (int i = 0; i + 1 < upto; ++i) add_edge(c, r, i, i + 1, -1, -1);
    };
    switch (t) {
        case 'A':
            chain(r);
            break;
        case 'B':
            // alpha_r short: <alpha_{r-1}, alpha_r_vee> = -2.
            chain(r);
            add_edge(c, r, r - 2, r - 1, -1, -2);
            break;
        case 'C':
            // alpha_r long: <alpha_r, alpha_{r-1}_vee> = -2.
            chain(r);
            add_edge(c, r, r - 2, r - 1, -2, -1);
            break;
        case 'D':
            chain(r - 1);
            add_edge(c, r, r - 3, r - 1, -1, -1);
            break;
        case 'E':
            // Nodes 1,3,4,5,...,r in a chain; node 2 hangs off node 4.
            add_edge(c, r, 0, 2, -1, -1);
            for (int i = 2; i + 1 < r; ++i) add_edge(c, r, i, i + 1, -1, -1);
            add_edge(c, r, 1, 3, -1, -1);
            break;
        case 'F':
            // alpha_1, alpha_2 long; alpha_3, alpha_4 short.
            chain(r);
            add_edge(c, r, 1, 2, -1, -2);
            break;
        case 'G':
            // alpha_1 short, alpha_2 long.
            add_edge(c, r, 0, 1, -3, -1);
            break;
        default:
            throw std::invalid_argument("unknown Lie type");
    }
    return c;
}

bool valid_type(char t, int r) {
    switch (t) {
        case 'A': return r >= 1;
        case 'B': return r >= 2;
        case 'C': return r >= 2;
        case 'D': return r >= 3;
        case 'E': return r == 6 || r == 7 || r == 8;
        case 'F': return r == 4;
        case 'G': return r == 2;
        default: return false;
    }
}

}  // namespace

int classical_positive_root_count(char t, int r) {
    switch (t) {
        case 'A': return r * (r + 1) / 2;
        case 'B':
        case 'C': return r * r;
        case 'D': return r * (r - 1);
        case 'E': return r == 6 ? 36 : (r == 7 ? 63 : 120);
        case 'F': return 24;
        case 'G': return 6;
        default: throw std::invalid_argument("unknown Lie type");
    }
}

RootDatum RootDatum::build(char lie_type, int rank) {
    if (!valid_type(lie_type, rank)) {
        std::ostringstream os;
        os << "invalid simple type (" << lie_type << "," << rank << ")";
        throw std::invalid_argument(os.str());
    }
    std::string label(1, lie_type);
    label += std::to_string(rank);
    RootDatum d = from_cartan(label, lie_type, simple_cartan(lie_type, rank), rank);
    if (d.num_positive_roots() != classical_positive_root_count(lie_type, rank))
        throw std::logic_error("positive root count mismatch for " + label);
    return d;
}

RootDatum RootDatum::from_cartan(std::string label, char lie_type, std::vector<int64_t> cartan, int rank) {
    RootDatum d;
    d.label_ = std::move(label);
    d.lie_type_ = lie_type;
    d.rank_ = rank;
    d.cartan_ = std::move(cartan);
    for (int i = 0; i < rank; ++i) {
        if (d.cartan(i, i) != 2) throw std::invalid_argument("Cartan diagonal must be 2");
        for (int j = 0; j < rank; ++j)
            if (i != j && d.cartan(i, j) > 0) throw std::invalid_argument("positive off-diagonal Cartan entry");
    }
    d.finish_tables();
    return d;
}

void RootDatum::finish_tables() {
    RatMat c(rank_, rank_);
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j) c.at(i, j) = cartan(i, j);
    inv_cartan_ = mat_inverse(c);

    // Positive roots: close the simple roots (in root coordinates) under all
    // simple reflections, keeping the nonnegative ones.
    std::set<IntVec, LexLess> roots;
    std::vector<IntVec> work;
    for (int i = 0; i < rank_; ++i) {
        IntVec e(rank_, Int(0));
        e[i] = 1;
        roots.insert(e);
        work.push_back(e);
    }
    while (!work.empty()) {
        IntVec beta = work.back();
        work.pop_back();
        for (int j = 0; j < rank_; ++j) {
            // <beta, alpha_j_vee> = sum_k cartan(j,k) beta_k
            Int p = 0;
            for (int k = 0; k < rank_; ++k) p += Int(cartan(j, k)) * beta[k];
            IntVec im = beta;
            im[j] -= p;
            bool nonneg = true;
            for (const auto& x : im)
                if (x < 0) { nonneg = false; break; }
            if (nonneg && roots.insert(im).second) work.push_back(im);
        }
    }
    positive_roots_.assign(roots.begin(), roots.end());

    // Symmetrizers: solve d_i c_ij = d_j c_ji componentwise along edges, then
    // normalize so the minimum on each connected component is 1.
    sym_.assign(rank_, Int(0));
    for (int start = 0; start < rank_; ++start) {
        if (sym_[start] != 0) continue;
        std::vector<Rat> rel(rank_, Rat(0));
        rel[start] = 1;
        std::vector<int> stack{start};
        std::vector<int> comp{start};
        while (!stack.empty()) {
            int i = stack.back();
            stack.pop_back();
            for (int j = 0; j < rank_; ++j) {
                if (i == j || cartan(i, j) == 0 || rel[j] != 0) continue;
                rel[j] = rel[i] * Rat(cartan(i, j)) / Rat(cartan(j, i));
                stack.push_back(j);
                comp.push_back(j);
            }
        }
        Rat lo = rel[start];
        for (int i : comp) lo = std::min(lo, rel[i]);
        for (int i : comp) {
            Rat v = rel[i] / lo;
            if (!is_integer(v)) throw std::logic_error("non-symmetrizable Cartan matrix");
            sym_[i] = num(v);
        }
    }
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j)
            if (sym_[i] * Int(cartan(i, j)) != sym_[j] * Int(cartan(j, i)))
                throw std::logic_error("symmetrizer does not symmetrize Cartan matrix");
}

RootDatum RootDatum::sub_datum(const std::vector<int>& indices) const {
    for (size_t k = 0; k < indices.size(); ++k) {
        if (indices[k] < 0 || indices[k] >= rank_) throw std::invalid_argument("sub_datum: index out of range");
        if (k > 0 && indices[k] <= indices[k - 1]) throw std::invalid_argument("sub_datum: indices must increase");
    }
    int r = int(indices.size());
    std::vector<int64_t> c(size_t(r) * r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) c[size_t(i) * r + j] = cartan(indices[i], indices[j]);
    std::ostringstream os;
    os << label_ << "[";
    for (int i = 0; i < r; ++i) os << (i ? "," : "") << indices[i] + 1;
    os << "]";
    return from_cartan(os.str(), '?', std::move(c), r);
}

IntWeight RootDatum::simple_root(int j) const {
    IntWeight a(rank_);
    for (int i = 0; i < rank_; ++i) a[i] = cartan(i, j);
    return a;
}

Coweight RootDatum::fundamental_coweight(int i) const {
    Coweight x(rank_);
    for (int j = 0; j < rank_; ++j) x[j] = inv_cartan_.at(i, j);
    return x;
}

Coweight RootDatum::simple_coroot(int i) const {
    Coweight x(rank_, Rat(0));
    x[i] = 1;
    return x;
}

bool RootDatum::is_dominant(const IntWeight& w) const {
    for (const auto& x : w)
        if (x < 0) return false;
    return true;
}

bool RootDatum::is_dominant(const RatWeight& w) const {
    for (const auto& x : w)
        if (x < 0) return false;
    return true;
}

IntWeight RootDatum::reflect_weight(int i, const IntWeight& v) const {
    if (i < 0 || i >= rank_) throw std::out_of_range("reflect_weight: bad index");
    IntWeight out = v;
    const Int& p = v[i];
    for (int k = 0; k < rank_; ++k) out[k] -= p * Int(cartan(k, i));
    return out;
}

RatWeight RootDatum::reflect_weight(int i, const RatWeight& v) const {
    if (i < 0 || i >= rank_) throw std::out_of_range("reflect_weight: bad index");
    RatWeight out = v;
    const Rat p = v[i];
    for (int k = 0; k < rank_; ++k) out[k] -= p * Rat(cartan(k, i));
    return out;
}

Coweight RootDatum::reflect_coweight(int i, const Coweight& x) const {
    if (i < 0 || i >= rank_) throw std::out_of_range("reflect_coweight: bad index");
    // <alpha_i, x> with x in coroot coordinates: cartan(k, i) = <alpha_i, alpha_k_vee>.
    Rat p = 0;
    for (int k = 0; k < rank_; ++k) p += Rat(cartan(k, i)) * x[k];
    Coweight out = x;
    out[i] -= p;
    return out;
}

Rat RootDatum::pairing(const RatWeight& lam, const Coweight& x) const {
    if (int(lam.size()) != rank_ || int(x.size()) != rank_)
        throw std::invalid_argument("pairing: rank mismatch");
    return dot(lam, x);
}

Int RootDatum::pairing(const IntWeight& lam, const IntVec& coroot_coords) const {
    if (int(lam.size()) != rank_ || int(coroot_coords.size()) != rank_)
        throw std::invalid_argument("pairing: rank mismatch");
    return dot(lam, coroot_coords);
}

RatVec RootDatum::root_lattice_coords(const RatWeight& lam) const {
    if (int(lam.size()) != rank_) throw std::invalid_argument("root_lattice_coords: rank mismatch");
    // lam = sum_k c_k alpha_k with alpha_k = column k of the Cartan matrix,
    // so c = A^{-1} lam.
    RatVec c(rank_, Rat(0));
    for (int i = 0; i < rank_; ++i) {
        Rat s = 0;
        for (int j = 0; j < rank_; ++j) s += inv_cartan_.at(i, j) * lam[j];
        c[i] = s;
    }
    return c;
}

bool RootDatum::in_root_lattice(const RatWeight& lam) const {
    return all_integer(root_lattice_coords(lam));
}

Rat RootDatum::form(const RatWeight& a, const RatWeight& b) const {
    // (a, b) = sum_j a-root-coords? Use (omega_i, alpha_j) = delta_ij d_j:
    // write b in root coordinates, pair against a's weight coordinates.
    RatVec cb = root_lattice_coords(b);
    Rat s = 0;
    for (int j = 0; j < rank_; ++j) s += a[j] * cb[j] * Rat(sym_[j]);
    return s;
}

std::string RootDatum::fingerprint() const {
    uint64_t h = 1469598103934665603ull;
    auto mix = [&h](uint64_t x) {
        for (int b = 0; b < 8; ++b) {
            h ^= (x >> (8 * b)) & 0xff;
            h *= 1099511628211ull;
        }
    };
    for (char ch : label_) mix(uint64_t(uint8_t(ch)));
    mix(uint64_t(rank_));
    for (int64_t e : cartan_) mix(uint64_t(e));
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

}  // namespace dmz
