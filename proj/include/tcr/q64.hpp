#ifndef TCR_Q64_HPP
#define TCR_Q64_HPP

#include <compare>
#include <cstdint>
#include <string>

#include "tcr/util.hpp"

namespace tcr {

// Exact rational with 64-bit numerator/denominator and overflow detection.
// All quantities in the library (coefficient values, matrix entries, LP data)
// stay far below this range at the scales we run; an overflow raises a budget
// error rather than wrapping.
struct Q64 {
    int64_t num = 0;
    int64_t den = 1;  // always > 0

    Q64() = default;
    Q64(int64_t n) : num(n), den(1) {}
    Q64(int64_t n, int64_t d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) fail(errc::validation, "rational with zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        if (num == 0) {
            den = 1;
            return;
        }
        int64_t g = gcd64(num, den);
        num /= g;
        den /= g;
    }

    bool is_zero() const { return num == 0; }
    bool is_integer() const { return den == 1; }

    static int64_t checked(__int128 v) {
        if (v > INT64_MAX || v < INT64_MIN)
            fail(errc::budget, "exact 64-bit rational overflow; value out of supported range");
        return (int64_t)v;
    }

    friend Q64 operator+(const Q64& a, const Q64& b) {
        int64_t g = gcd64(a.den, b.den);
        __int128 n = (__int128)a.num * (b.den / g) + (__int128)b.num * (a.den / g);
        __int128 d = (__int128)(a.den / g) * b.den;
        Q64 r;
        r.num = checked(n);
        r.den = checked(d);
        r.normalize();
        return r;
    }
    friend Q64 operator-(const Q64& a, const Q64& b) { return a + Q64(-b.num, b.den); }
    friend Q64 operator-(const Q64& a) { return Q64(-a.num, a.den); }
    friend Q64 operator*(const Q64& a, const Q64& b) {
        int64_t g1 = gcd64(a.num, b.den);
        int64_t g2 = gcd64(b.num, a.den);
        __int128 n = (__int128)(a.num / g1) * (b.num / g2);
        __int128 d = (__int128)(a.den / g2) * (b.den / g1);
        Q64 r;
        r.num = checked(n);
        r.den = checked(d);
        return r;
    }
    friend Q64 operator/(const Q64& a, const Q64& b) {
        if (b.num == 0) fail(errc::validation, "rational division by zero");
        return a * Q64(b.den, b.num);
    }
    Q64& operator+=(const Q64& b) { return *this = *this + b; }
    Q64& operator-=(const Q64& b) { return *this = *this - b; }
    Q64& operator*=(const Q64& b) { return *this = *this * b; }

    friend bool operator==(const Q64& a, const Q64& b) { return a.num == b.num && a.den == b.den; }
    friend std::strong_ordering operator<=>(const Q64& a, const Q64& b) {
        __int128 lhs = (__int128)a.num * b.den;
        __int128 rhs = (__int128)b.num * a.den;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    int sign() const { return num > 0 ? 1 : (num < 0 ? -1 : 0); }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

// Parses "p" or "p/q".
Q64 parse_q64(const std::string& s);

}  // namespace tcr

#endif
