#include "demazure/sweep.hpp"

#include "demazure/cone.hpp"

#include <omp.h>

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace dmz {

namespace {

uint64_t fnv1a(const std::string& s) {
    uint64_t h = 1469598103934665603ull;
    for (char c : s) {
        h ^= uint64_t(uint8_t(c));
        h *= 1099511628211ull;
    }
    return h;
}

std::string instance_key(const WeylGroup& group, const SweepInstance& inst) {
    std::ostringstream os;
    os << "lambda=";
    for (size_t i = 0; i < inst.lambda.size(); ++i) os << (i ? "," : "") << inst.lambda[i];
    os << ";word=" << word_to_string(group.word(inst.w));
    return os.str();
}

// Bounded sampling on top of the seeded engine; the standard distributions
// are not byte-stable across library implementations.
uint64_t bounded(std::mt19937_64& rng, uint64_t n) {
    uint64_t limit = std::numeric_limits<uint64_t>::max() - std::numeric_limits<uint64_t>::max() % n;
    uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % n;
}

struct Cache {
    bool usable = false;
    std::map<std::string, std::string> records;  // key -> dumped json line
};

Cache load_cache(const std::string& path, const std::string& fingerprint) {
    Cache c;
    std::ifstream is(path);
    if (!is) return c;
    std::string line;
    if (!std::getline(is, line)) return c;
    if (line != "# demazure sweep cache v1") {
        std::cerr << "warning: unrecognized cache header, rebuilding: " << path << "\n";
        return c;
    }
    if (!std::getline(is, line) || line != "# fingerprint=" + fingerprint) {
        std::cerr << "warning: cache fingerprint mismatch, rebuilding: " << path << "\n";
        return c;
    }
    c.usable = true;
    while (std::getline(is, line)) {
        auto tab = line.find('\t');
        if (tab == std::string::npos) {
            std::cerr << "warning: malformed cache line, rebuilding: " << path << "\n";
            return Cache{};
        }
        c.records[line.substr(0, tab)] = line.substr(tab + 1);
    }
    return c;
}

}  // namespace

std::vector<IntWeight> enumerate_lambdas(int rank, int max_coord) {
    std::vector<IntWeight> out;
    IntWeight cur(rank, Int(0));
    while (true) {
        out.push_back(cur);
        int pos = rank - 1;
        while (pos >= 0) {
            if (cur[pos] < max_coord) {
                ++cur[pos];
                break;
            }
            cur[pos] = 0;
            --pos;
        }
        if (pos < 0) break;
    }
    std::sort(out.begin(), out.end(), LexLess{});
    return out;
}

std::vector<int> sample_elements(const WeylGroup& group, size_t count, uint64_t seed) {
    if (count > group.order()) count = group.order();
    std::mt19937_64 rng(seed);
    std::set<int> chosen;
    while (chosen.size() < count) chosen.insert(int(bounded(rng, group.order())));
    return {chosen.begin(), chosen.end()};
}

Json SweepReport::to_json() const {
    Json j;
    j["tool"] = kToolVersion;
    j["type"] = label;
    j["rank"] = rank;
    j["fingerprint"] = fingerprint;
    if (conjectural) j["conjectural"] = true;
    Json summary;
    summary["instances"] = records.size();
    summary["failures"] = failures;
    if (wall_ms) summary["wall_ms"] = *wall_ms;
    j["summary"] = std::move(summary);
    j["records"] = records;
    if (!property_p.empty()) j["property_p"] = property_p;
    return j;
}

SweepReport run_saturation_sweep(const WeylGroup& group, const std::vector<SweepInstance>& instances,
                                 const SweepOptions& opts) {
    auto t0 = std::chrono::steady_clock::now();
    const RootDatum& datum = group.datum();
    SweepReport rep;
    rep.label = datum.label();
    rep.rank = datum.rank();
    rep.fingerprint = datum.fingerprint();
    rep.conjectural = datum.lie_type() == 'E';

    Cache cache;
    if (!opts.cache_path.empty()) cache = load_cache(opts.cache_path, rep.fingerprint);

    // Compact one-line dumps double as the cache line format.
    auto compute = [&](const SweepInstance& inst) {
        SaturationReport r = saturation_report(group, inst.lambda, group.word(inst.w), false);
        return saturation_to_json(r, false).dump();
    };

    std::vector<std::string> keys(instances.size());
    for (size_t i = 0; i < instances.size(); ++i) keys[i] = instance_key(group, instances[i]);

    // Spot-check one percent of cache hits (always including the first one);
    // a mismatch poisons the whole cache.
    if (cache.usable) {
        bool first_hit = true;
        for (size_t i = 0; i < instances.size(); ++i) {
            auto it = cache.records.find(keys[i]);
            if (it == cache.records.end()) continue;
            bool check = first_hit || fnv1a(keys[i]) % 100 == 0;
            first_hit = false;
            if (!check) continue;
            if (compute(instances[i]) != it->second) {
                std::cerr << "warning: cache record failed re-verification, rebuilding from scratch\n";
                cache = Cache{};
                break;
            }
        }
    }

    std::vector<std::string> results(instances.size());
    std::vector<char> from_cache(instances.size(), 0);
    for (size_t i = 0; i < instances.size(); ++i) {
        auto it = cache.records.find(keys[i]);
        if (it == cache.records.end()) continue;
        results[i] = it->second;
        from_cache[i] = 1;
    }

    int threads = opts.parallel ? (opts.jobs > 0 ? opts.jobs : omp_get_max_threads()) : 1;
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (size_t i = 0; i < instances.size(); ++i) {
        if (from_cache[i]) continue;
        results[i] = compute(instances[i]);
    }

    for (size_t i = 0; i < instances.size(); ++i) {
        Json j = Json::parse(results[i]);
        if (j.at("status") != "ok") ++rep.failures;
        rep.records.push_back(std::move(j));
    }

    if (opts.check_property_p) {
        std::set<int> ws;
        for (const auto& inst : instances) ws.insert(inst.w);
        std::vector<int> order(ws.begin(), ws.end());
        std::vector<Json> props(order.size());
#pragma omp parallel for schedule(dynamic) num_threads(threads)
        for (size_t i = 0; i < order.size(); ++i) {
            PropertyPReport pr = property_p_check(group, order[i]);
            props[i] = property_p_to_json(group, order[i], pr);
        }
        for (auto& p : props) {
            if (!p.at("holds").get<bool>()) ++rep.failures;
            rep.property_p.push_back(std::move(p));
        }
    }

    if (!opts.cache_path.empty()) {
        std::ostringstream os;
        os << "# demazure sweep cache v1\n# fingerprint=" << rep.fingerprint << "\n";
        std::map<std::string, std::string> merged = cache.records;
        for (size_t i = 0; i < instances.size(); ++i) merged[keys[i]] = results[i];
        for (const auto& [k, v] : merged) os << k << "\t" << v << "\n";
        atomic_write(opts.cache_path, os.str());
    }

    if (opts.timing) {
        auto t1 = std::chrono::steady_clock::now();
        rep.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    }
    return rep;
}

}  // namespace dmz
