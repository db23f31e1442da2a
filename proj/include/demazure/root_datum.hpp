#pragma once

#include "demazure/linalg.hpp"
#include "demazure/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace dmz {

// Integral weights in fundamental-weight coordinates: coordinate i is the
// pairing with the i-th simple coroot. Rational points of weight space use
// RatWeight in the same basis. Coweights live in simple-coroot coordinates,
// so pairings are plain dot products.
using IntWeight = IntVec;
using RatWeight = RatVec;
using Coweight = RatVec;

// Immutable root-system tables for one (possibly decomposable) Cartan matrix
// in Bourbaki numbering. cartan(i,j) equals the pairing of the j-th simple
// root with the i-th simple coroot; the j-th simple root written in the
// fundamental-weight basis is column j.
class RootDatum {
public:
    // Simple types: A(r>=1), B(r>=2), C(r>=2), D(r>=3), E(6,7,8), F(4), G(2).
    static RootDatum build(char lie_type, int rank);

    // Sub-datum on a subset of node indices (0-based, strictly increasing).
    // Used for Levi subsystems; the result may be decomposable.
    RootDatum sub_datum(const std::vector<int>& indices) const;

    const std::string& label() const { return label_; }
    char lie_type() const { return lie_type_; }
    int rank() const { return rank_; }

    int64_t cartan(int i, int j) const { return cartan_[size_t(i) * rank_ + j]; }
    const std::vector<int64_t>& cartan_flat() const { return cartan_; }
    const RatMat& inv_cartan() const { return inv_cartan_; }

    // Positive roots in simple-root coordinates, lexicographically sorted.
    const std::vector<IntVec>& positive_roots() const { return positive_roots_; }
    int num_positive_roots() const { return int(positive_roots_.size()); }

    // Minimal integer symmetrizers: d[i] * cartan(i,j) == d[j] * cartan(j,i),
    // normalized so short roots get 1. The invariant form satisfies
    // (omega_i, alpha_j) = delta_ij * d[j].
    const IntVec& symmetrizers() const { return sym_; }

    // Simple root alpha_j as an integral weight (column j of the Cartan matrix).
    IntWeight simple_root(int j) const;
    // Fundamental coweight x_i (row i of the inverse Cartan matrix).
    Coweight fundamental_coweight(int i) const;
    // Simple coroot alpha_i_vee in coroot coordinates (a standard basis vector).
    Coweight simple_coroot(int i) const;

    // Half-sum of positive roots: the all-ones integral weight.
    IntWeight rho() const { return IntWeight(rank_, Int(1)); }

    bool is_dominant(const IntWeight& w) const;
    bool is_dominant(const RatWeight& w) const;

    // s_i acting on weights: v - <v, alpha_i_vee> alpha_i.
    IntWeight reflect_weight(int i, const IntWeight& v) const;
    RatWeight reflect_weight(int i, const RatWeight& v) const;
    // s_i acting on coweights: x - <alpha_i, x> alpha_i_vee.
    Coweight reflect_coweight(int i, const Coweight& x) const;

    Rat pairing(const RatWeight& lam, const Coweight& x) const;
    Int pairing(const IntWeight& lam, const IntVec& coroot_coords) const;

    // Coordinates of lam in the simple-root basis, and integrality of those
    // coordinates (membership in the root lattice).
    RatVec root_lattice_coords(const RatWeight& lam) const;
    bool in_root_lattice(const RatWeight& lam) const;

    // The invariant symmetric form in fundamental-weight coordinates.
    Rat form(const RatWeight& a, const RatWeight& b) const;

    // FNV-1a digest of the label, rank and Cartan entries; stamps reports so
    // cached results are never mixed across conventions.
    std::string fingerprint() const;

private:
    RootDatum() = default;
    static RootDatum from_cartan(std::string label, char lie_type, std::vector<int64_t> cartan, int rank);
    void finish_tables();

    std::string label_;
    char lie_type_ = '?';  // '?' marks composite/custom data
    int rank_ = 0;
    std::vector<int64_t> cartan_;
    RatMat inv_cartan_;
    std::vector<IntVec> positive_roots_;
    IntVec sym_;
};

// Classical number of positive roots of a simple type; used as a construction
// cross-check.
int classical_positive_root_count(char lie_type, int rank);

}  // namespace dmz
