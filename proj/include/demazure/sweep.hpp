#pragma once

#include "demazure/polytope.hpp"
#include "demazure/serialize.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dmz {

struct SweepInstance {
    IntWeight lambda;
    int w = 0;
};

struct SweepOptions {
    bool parallel = true;
    int jobs = 0;  // 0: library default
    std::string cache_path;  // empty: no cache
    bool check_property_p = false;
    bool timing = false;  // wall time is volatile, so reports omit it by default
};

struct SweepReport {
    std::string label;
    int rank = 0;
    std::string fingerprint;
    bool conjectural = false;  // flagged for types whose saturation is unproven
    std::vector<Json> records;          // one per instance, instance order
    std::vector<Json> property_p;       // one per distinct element when requested
    size_t failures = 0;
    std::optional<int64_t> wall_ms;
    Json to_json() const;
};

// All dominant weights with coordinates in [0, max_coord].
std::vector<IntWeight> enumerate_lambdas(int rank, int max_coord);

// Distinct elements sampled without replacement; deterministic in the seed.
std::vector<int> sample_elements(const WeylGroup& group, size_t count, uint64_t seed);

// Saturation verification over the given instances. Instances run in parallel
// when requested; records land in instance order either way, so serial and
// parallel runs emit identical reports. The cache is keyed by the convention
// fingerprint plus (lambda, word); one percent of cache hits are re-verified
// from scratch, and any mismatch discards the cache with a warning.
SweepReport run_saturation_sweep(const WeylGroup& group, const std::vector<SweepInstance>& instances,
                                 const SweepOptions& opts);

}  // namespace dmz
