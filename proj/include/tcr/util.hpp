#ifndef TCR_UTIL_HPP
#define TCR_UTIL_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tcr {

// Error taxonomy shared by the library, the C API and the CLI exit codes.
enum class errc {
    validation = 2,  // bad input: non-reflexive polytope, parse error, bad flags
    degenerate = 3,  // a coefficient function failed a non-degeneracy check
    budget = 4,      // configured size/window limit exceeded
    internal = 5,
};

class error : public std::runtime_error {
  public:
    error(errc kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    errc kind() const { return kind_; }

  private:
    errc kind_;
};

[[noreturn]] inline void fail(errc kind, const std::string& what) { throw error(kind, what); }

// splitmix64; used for seeded coefficient sampling and content hashes.
inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

inline uint64_t hash_combine(uint64_t h, uint64_t v) {
    return splitmix64(h ^ (v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2)));
}

inline int64_t gcd64(int64_t a, int64_t b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        int64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace tcr

#endif
