#ifndef TCR_COEFFS_HPP
#define TCR_COEFFS_HPP

#include <map>
#include <string>
#include <vector>

#include "tcr/q64.hpp"
#include "tcr/vec.hpp"

namespace tcr {

// A coefficient function assigns an exact rational to every lattice point of
// Delta (side 0) or Delta* (side 1). Values are keyed by point, never by
// position, so permuting the support changes nothing.
struct CoefficientFunction {
    std::map<Vec, Q64> values;

    const Q64& value(const Vec& m) const {
        auto it = values.find(m);
        if (it == values.end())
            fail(errc::validation, "coefficient function: point " + vec_str(m) + " not in support");
        return it->second;
    }
    bool is_zero() const {
        for (const auto& [m, v] : values)
            if (!v.is_zero()) return false;
        return true;
    }
    size_t size() const { return values.size(); }

    uint64_t content_hash() const;
};

// Deterministic seeded integers, uniform in [1, 2^20], keyed by (seed, point).
CoefficientFunction sample_coefficients(const std::vector<Vec>& pts, uint64_t seed);

// 1 on the given vertices, 0 on the remaining points.
CoefficientFunction fermat_coefficients(const std::vector<Vec>& pts,
                                        const std::vector<Vec>& vertices);

// Text format: one line per point, "c1 c2 ... cd : p/q".
CoefficientFunction parse_coefficients(const std::string& text);
std::string write_coefficients(const CoefficientFunction& f);

// Homogeneous element of the semigroup ring, degree graded by the level.
struct GradedElement {
    int degree = 1;
    std::map<Vec, Q64> terms;

    bool is_zero() const {
        for (const auto& [m, v] : terms)
            if (!v.is_zero()) return false;
        return true;
    }
};

// z_n = sum_m f(m) (m.n) [m].
GradedElement z_element(const CoefficientFunction& f, const Vec& n);

}  // namespace tcr

#endif
