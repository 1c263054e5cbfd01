#ifndef TCR_LP_HPP
#define TCR_LP_HPP

#include <optional>
#include <vector>

#include "tcr/qlin.hpp"

namespace tcr {

// Lexicographically ordered objective value. A plain scalar objective is a
// one-component LexVal; triangulation heights use (height, e_i) rows, which
// realizes a deterministic symbolic perturbation.
struct LexVal {
    QVec parts;

    static LexVal zeros(size_t k) { return LexVal{QVec(k, Q64(0))}; }
    friend LexVal operator+(const LexVal& a, const LexVal& b) {
        LexVal r = a;
        for (size_t i = 0; i < r.parts.size(); ++i) r.parts[i] += b.parts[i];
        return r;
    }
    friend LexVal operator-(const LexVal& a, const LexVal& b) {
        LexVal r = a;
        for (size_t i = 0; i < r.parts.size(); ++i) r.parts[i] -= b.parts[i];
        return r;
    }
    friend LexVal operator*(const Q64& c, const LexVal& a) {
        LexVal r = a;
        for (auto& p : r.parts) p *= c;
        return r;
    }
    int sign() const {
        for (const auto& p : parts)
            if (!p.is_zero()) return p.sign();
        return 0;
    }
    friend bool operator==(const LexVal& a, const LexVal& b) { return a.parts == b.parts; }
    friend bool operator<(const LexVal& a, const LexVal& b) { return (a - b).sign() < 0; }
};

struct LpResult {
    bool feasible = false;
    QVec x;           // primal solution (size n)
    LexVal objective; // meaningful when an objective was supplied
    std::vector<int> basis;  // basic variable indices
};

// min c.x  s.t.  A x = b, x >= 0, exact arithmetic, Bland's rule.
// `obj` may be empty (pure feasibility) or hold one LexVal per variable.
LpResult solve_lp(const QMat& a, const QVec& b, const std::vector<LexVal>& obj);

// Convenience: is `p` in the convex hull of `pts`?
bool in_convex_hull(const std::vector<Vec>& pts, const Vec& p);

}  // namespace tcr

#endif
