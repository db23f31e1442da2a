#pragma once

#include "demazure/cone.hpp"
#include "demazure/faces.hpp"
#include "demazure/polytope.hpp"

#include <json.hpp>

#include <string>

namespace dmz {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "demazure-tools 0.1.0";

// Integers as bare numbers, proper fractions as "p/q" strings.
Json rat_to_json(const Rat& r);
Json weight_to_json(const IntWeight& w);
Json weight_to_json(const RatWeight& w);

Json character_to_json(const CharacterPoly& c);
std::string character_to_csv(const CharacterPoly& c);

Json polytope_to_json(const WeylGroup& group, const DemazurePolytope& p);
Json lattice_points_to_json(const std::vector<IntWeight>& pts);
Json segment_to_json(const std::optional<RootSegment>& seg);
Json face_to_json(const WeylGroup& group, const Face& f, const LeviCheckReport* check);
Json hilbert_to_json(const WeylGroup& group, const SemigroupCone& cone, const HilbertBasisResult& hb);
Json saturation_to_json(const SaturationReport& rep, bool include_multiplicities);
Json property_p_to_json(const WeylGroup& group, int w, const PropertyPReport& rep);

// "a,b,c" quoted when needed.
std::string csv_field(const std::string& s);

// Byte-stable dump with a trailing newline.
std::string dump_json(const Json& j);

// Write via temp file + rename in the destination directory.
void atomic_write(const std::string& path, const std::string& content);

}  // namespace dmz
