#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace dmz {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rat& r) { return den(r) == 1; }

// Largest integer <= r.
inline Int rat_floor(const Rat& r) {
    Int q = num(r) / den(r);
    if (num(r) < 0 && q * den(r) != num(r)) --q;
    return q;
}

inline Int rat_ceil(const Rat& r) { return -rat_floor(-r); }

// "p/q" for proper fractions, bare integer otherwise.
inline std::string rat_to_string(const Rat& r) {
    if (is_integer(r)) return num(r).str();
    return num(r).str() + "/" + den(r).str();
}

inline Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    Int p(s.substr(0, slash)), q(s.substr(slash + 1));
    if (q == 0) throw std::invalid_argument("zero denominator in rational: " + s);
    return Rat(p, q);
}

inline RatVec to_rat(const IntVec& v) {
    RatVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = v[i];
    return out;
}

// Exact vector of integers, or throws.
inline IntVec to_int(const RatVec& v) {
    IntVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        if (!is_integer(v[i])) throw std::invalid_argument("non-integral coordinate " + rat_to_string(v[i]));
        out[i] = num(v[i]);
    }
    return out;
}

inline bool all_integer(const RatVec& v) {
    for (const auto& x : v)
        if (!is_integer(x)) return false;
    return true;
}

struct LexLess {
    bool operator()(const IntVec& a, const IntVec& b) const {
        for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
            if (a[i] != b[i]) return a[i] < b[i];
        }
        return a.size() < b.size();
    }
    bool operator()(const RatVec& a, const RatVec& b) const {
        for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
            if (a[i] != b[i]) return a[i] < b[i];
        }
        return a.size() < b.size();
    }
};

}  // namespace dmz
