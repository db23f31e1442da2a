#include "demazure/serialize.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace dmz {

namespace {

int64_t to_i64(const Int& v) {
    if (v > std::numeric_limits<int64_t>::max() || v < std::numeric_limits<int64_t>::min())
        throw std::overflow_error("integer too large for serialization");
    return v.convert_to<int64_t>();
}

}  // namespace

Json rat_to_json(const Rat& r) {
    if (is_integer(r)) return to_i64(num(r));
    return rat_to_string(r);
}

Json weight_to_json(const IntWeight& w) {
    Json a = Json::array();
    for (const auto& c : w) a.push_back(to_i64(c));
    return a;
}

Json weight_to_json(const RatWeight& w) {
    Json a = Json::array();
    for (const auto& c : w) a.push_back(rat_to_json(c));
    return a;
}

Json character_to_json(const CharacterPoly& c) {
    Json a = Json::array();
    for (const auto& [w, m] : c) {
        Json rec;
        rec["weight"] = weight_to_json(w);
        rec["mult"] = to_i64(m);
        a.push_back(std::move(rec));
    }
    return a;
}

std::string character_to_csv(const CharacterPoly& c) {
    std::ostringstream os;
    if (c.empty()) return "mult\n";
    size_t rank = c.begin()->first.size();
    for (size_t i = 0; i < rank; ++i) os << "coord_" << i + 1 << ",";
    os << "mult\n";
    for (const auto& [w, m] : c) {
        for (const auto& x : w) os << x << ",";
        os << m << "\n";
    }
    return os.str();
}

Json polytope_to_json(const WeylGroup& group, const DemazurePolytope& p) {
    Json j;
    j["lambda"] = weight_to_json(p.lambda);
    j["word"] = word_to_string(group.word(p.w));
    Json verts = Json::array();
    for (const auto& v : p.vertices) verts.push_back(weight_to_json(v));
    j["vertices"] = std::move(verts);
    Json ineqs = Json::array();
    for (const auto& iq : p.inequalities) {
        Json rec;
        rec["v_word"] = word_to_string(group.word(iq.v));
        rec["i"] = iq.i + 1;
        rec["normal"] = weight_to_json(iq.normal);
        rec["bound"] = rat_to_json(iq.bound);
        ineqs.push_back(std::move(rec));
    }
    j["inequalities"] = std::move(ineqs);
    return j;
}

Json lattice_points_to_json(const std::vector<IntWeight>& pts) {
    Json a = Json::array();
    for (const auto& p : pts) a.push_back(weight_to_json(p));
    return a;
}

Json segment_to_json(const std::optional<RootSegment>& seg) {
    Json j;
    if (!seg) {
        j["empty"] = true;
        return j;
    }
    j["empty"] = false;
    j["degenerate"] = seg->degenerate();
    j["lo"] = weight_to_json(seg->lo);
    j["hi"] = weight_to_json(seg->hi);
    j["t_lo"] = rat_to_json(seg->t_lo);
    j["t_hi"] = rat_to_json(seg->t_hi);
    return j;
}

Json face_to_json(const WeylGroup& group, const Face& f, const LeviCheckReport* check) {
    Json j;
    j["v_word"] = word_to_string(group.word(f.v));
    j["i"] = f.i + 1;
    j["w_normalized"] = word_to_string(group.word(f.w_normalized));
    j["u_word"] = word_to_string(group.word(f.u));
    j["y_word"] = word_to_string(group.word(f.y));
    Json verts = Json::array();
    for (const auto& v : f.vertex_weights) verts.push_back(weight_to_json(v));
    j["vertex_weights"] = std::move(verts);
    Json levi;
    Json idx = Json::array();
    for (int k : f.levi_indices) idx.push_back(k + 1);
    levi["indices"] = std::move(idx);
    Word y_levi;
    for (int letter : group.word(f.y)) {
        int pos = 0;
        for (size_t t = 0; t < f.levi_indices.size(); ++t)
            if (f.levi_indices[t] == letter) pos = int(t);
        y_levi.push_back(pos);
    }
    levi["levi_word_y"] = word_to_string(y_levi);
    levi["levi_lambda"] = weight_to_json(f.levi_lambda);
    j["levi"] = std::move(levi);
    if (check) {
        Json c;
        c["interval_ok"] = check->interval_ok;
        c["vertex_bijection_ok"] = check->vertex_bijection_ok;
        c["lattice_bijection_ok"] = check->lattice_bijection_ok;
        c["mult_domination_ok"] = check->mult_domination_ok;
        if (!check->detail.empty()) c["detail"] = check->detail;
        j["check"] = std::move(c);
    }
    return j;
}

Json hilbert_to_json(const WeylGroup& group, const SemigroupCone& cone, const HilbertBasisResult& hb) {
    const int n = cone.rank;
    Json j;
    j["word"] = word_to_string(group.word(cone.w));
    j["extremal_rays"] = cone.extremal.size();
    j["basis_size"] = hb.basis.size();
    Json basis = Json::array();
    for (const auto& b : hb.basis) {
        Json rec;
        IntWeight lam(b.begin(), b.begin() + n), mu(b.begin() + n, b.end());
        rec["lambda"] = weight_to_json(lam);
        rec["mu"] = weight_to_json(mu);
        basis.push_back(std::move(rec));
    }
    j["basis"] = std::move(basis);
    Json rays = Json::array();
    for (int gi : cone.extremal) {
        const auto& g = cone.generators[gi];
        Json rec;
        IntWeight lam(g.begin(), g.begin() + n), mu(g.begin() + n, g.end());
        rec["lambda"] = weight_to_json(lam);
        rec["mu"] = weight_to_json(mu);
        rays.push_back(std::move(rec));
    }
    j["rays"] = std::move(rays);
    return j;
}

Json saturation_to_json(const SaturationReport& rep, bool include_multiplicities) {
    Json j;
    j["lambda"] = weight_to_json(rep.lambda);
    j["word"] = word_to_string(rep.word);
    j["status"] = rep.saturated() ? "ok" : "fail";
    j["lattice_points"] = rep.num_lattice_points;
    j["support"] = rep.num_support;
    Json d;
    d["only_polytope"] = lattice_points_to_json(rep.only_polytope);
    d["only_character"] = lattice_points_to_json(rep.only_character);
    j["discrepancies"] = std::move(d);
    if (include_multiplicities) {
        Json m = Json::array();
        for (const auto& [w, mult] : rep.multiplicities) {
            Json rec;
            rec["weight"] = weight_to_json(w);
            rec["mult"] = to_i64(mult);
            m.push_back(std::move(rec));
        }
        j["multiplicities"] = std::move(m);
    }
    return j;
}

Json property_p_to_json(const WeylGroup& group, int w, const PropertyPReport& rep) {
    Json j;
    j["word"] = word_to_string(group.word(w));
    j["holds"] = rep.holds;
    j["basis_size"] = rep.basis_size;
    j["extremal_rays"] = rep.extremal_rays;
    auto pairs = [&](const std::vector<IntVec>& v) {
        Json a = Json::array();
        const int n = group.rank();
        for (const auto& b : v) {
            Json rec;
            IntWeight lam(b.begin(), b.begin() + n), mu(b.begin() + n, b.end());
            rec["lambda"] = weight_to_json(lam);
            rec["mu"] = weight_to_json(mu);
            a.push_back(std::move(rec));
        }
        return a;
    };
    j["non_fundamental"] = pairs(rep.non_fundamental);
    j["missing"] = pairs(rep.missing);
    j["extra"] = pairs(rep.extra);
    return j;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

void atomic_write(const std::string& path, const std::string& content) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw std::runtime_error("cannot open " + tmp + " for writing");
        os << content;
        if (!os.flush()) throw std::runtime_error("write failed for " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) throw std::runtime_error("rename failed for " + path);
}

}  // namespace dmz
