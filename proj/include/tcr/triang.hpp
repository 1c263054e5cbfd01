#ifndef TCR_TRIANG_HPP
#define TCR_TRIANG_HPP

#include <map>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "tcr/lp.hpp"
#include "tcr/vec.hpp"

namespace tcr {

// Regular triangulation of a level-1 point configuration, encoded by its
// height function. The induced piecewise-linear function extends conically to
// the whole cone; two cone points lie in a common (closed) cell of the fan
// exactly when the convexity relation h(x+y) >= h(x) + h(y) is an equality.
// Height ties are broken by a lexicographic perturbation (point i gets the
// symbolic extra eps^(i+1)), which is what the explicit cell listing uses.
class Triangulation {
  public:
    Triangulation(std::vector<Vec> points, std::map<Vec, Q64> heights);

    const std::vector<Vec>& points() const { return points_; }
    const Q64& height(const Vec& p) const;

    // Value of the conical lower-hull function at x (any level); errors if x
    // is outside the cone spanned by the points.
    Q64 hull_value(const Vec& x) const;

    bool same_cone(const Vec& x, const Vec& y) const;

    // Maximal cells as point-index sets (lex tie-broken, hence simplices).
    // Brute force; guarded by a budget on the subset count.
    const std::vector<std::vector<int>>& maximal_cells() const;

    // Point-index set of the subdivision face whose relative interior the
    // cone point x projects into (the tight set of the lower hull at x).
    std::vector<int> cell_of(const Vec& x) const;

    // Exact checks: cells cover (total normalized volume matches) and every
    // cell is supported from below strictly away from the other points.
    void validate() const;

    uint64_t content_hash() const;

  private:
    std::vector<Vec> points_;       // lex sorted, level-1 generators
    std::map<Vec, Q64> heights_;
    int rank_;

    LpResult solve_at(const Vec& x) const;

    mutable std::mutex mu_;
    mutable std::unordered_map<Vec, Q64, VecHash> hull_memo_;
    mutable std::vector<std::vector<int>> cells_;
    mutable bool cells_built_ = false;
};

// Vertex-pulling heights: 0 at `pulled`, seeded generic values near 1
// elsewhere (1 + tiny distinct rationals).
std::map<Vec, Q64> vertex_pull_heights(const std::vector<Vec>& points, const Vec& pulled,
                                       uint64_t seed);

// Seeded generic heights, integer-valued in [0, 2^16).
std::map<Vec, Q64> seeded_heights(const std::vector<Vec>& points, uint64_t seed);

}  // namespace tcr

#endif
