#pragma once

#include "demazure/polytope.hpp"

#include <memory>
#include <string>
#include <vector>

namespace dmz {

// Levi subsystems obtained by deleting one node, with their own Weyl groups.
// Built eagerly so face sweeps can run over instances without synchronization.
class LeviContext {
public:
    explicit LeviContext(const WeylGroup& ambient);

    struct Entry {
        int omitted = 0;
        std::vector<int> indices;  // ambient node indices, ascending
        std::unique_ptr<RootDatum> datum;
        std::unique_ptr<WeylGroup> group;
        std::vector<int> position;  // ambient index -> sub index, -1 for omitted
    };
    const Entry& omitting(int i) const { return entries_[i]; }

private:
    std::vector<Entry> entries_;
};

// The face of P_lambda^w cut out with equality by the (v, i) inequality.
// w is normalized internally to the maximal-length representative modulo the
// stabilizer of lambda; the element actually used is recorded.
struct Face {
    int v = 0;
    int i = 0;
    int w_normalized = 0;
    int u = 0;  // minimal coset representative mod W_{P_i}
    int y = 0;  // parabolic part: u y^{-1} equals the twisted product
    std::vector<IntWeight> vertex_weights;
    std::vector<int> levi_indices;
    IntWeight levi_lambda;  // u^{-1} lambda restricted to the Levi nodes
};

Face face_data(const WeylGroup& group, const IntWeight& lambda, int w, int v, int i);

// Three exact verifications of the Levi structure of a face, plus the
// multiplicity-domination shadow of the module inclusion:
//  (a) W_{P_i} meets v^{-1}[e,w]u exactly in the lower interval of y,
//  (b) mu -> v^{-1} mu carries the face vertices onto the vertices of the
//      Levi polytope of u^{-1} lambda at y,
//  (c) the same map is a bijection on lattice points,
//  (d) each Levi character multiplicity is bounded by the ambient one.
struct LeviCheckReport {
    bool interval_ok = false;
    bool vertex_bijection_ok = false;
    bool lattice_bijection_ok = false;
    bool mult_domination_ok = false;
    std::string detail;
    bool all_ok() const { return interval_ok && vertex_bijection_ok && lattice_bijection_ok && mult_domination_ok; }
};

LeviCheckReport levi_face_check(const WeylGroup& group, const LeviContext& levis, const Face& face,
                                const IntWeight& lambda);

}  // namespace dmz
