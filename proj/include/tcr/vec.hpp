#ifndef TCR_VEC_HPP
#define TCR_VEC_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tcr/q64.hpp"
#include "tcr/util.hpp"

namespace tcr {

// Lattice vectors are plain integer coordinate tuples; the lattice they live
// in (M or its dual N) is tracked by context.
using Vec = std::vector<int64_t>;

inline int64_t dot(const Vec& a, const Vec& b) {
    __int128 s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += (__int128)a[i] * b[i];
    return Q64::checked(s);
}

inline Vec add(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Vec sub(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Vec scale(int64_t c, const Vec& a) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

inline bool is_zero(const Vec& a) {
    for (int64_t x : a)
        if (x) return false;
    return true;
}

inline Vec zero_vec(size_t n) { return Vec(n, 0); }

// Divides out the content, keeping orientation.
inline Vec primitive(Vec v) {
    int64_t g = 0;
    for (int64_t x : v) g = gcd64(g, x);
    if (g > 1)
        for (int64_t& x : v) x /= g;
    return v;
}

inline uint64_t hash_vec(const Vec& v) {
    uint64_t h = 0x243f6a8885a308d3ull ^ v.size();
    for (int64_t x : v) h = hash_combine(h, (uint64_t)x);
    return h;
}

struct VecHash {
    size_t operator()(const Vec& v) const { return (size_t)hash_vec(v); }
};

inline std::string vec_str(const Vec& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + ")";
}

}  // namespace tcr

#endif
