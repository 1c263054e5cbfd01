#include "tcr/presets.hpp"

namespace tcr {

Polytope quintic_delta_star() {
    return make_polytope({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {-1, -1, -1, -1}});
}

Polytope quintic_delta() { return polar_dual(quintic_delta_star()); }

Polytope elliptic_delta_star() { return make_polytope({{1, 0}, {0, 1}, {-1, -1}}); }

Polytope elliptic_delta() { return polar_dual(elliptic_delta_star()); }

GorensteinPair quintic_pair() { return GorensteinPair::from_polytope(quintic_delta()); }

GorensteinPair elliptic_pair() { return GorensteinPair::from_polytope(elliptic_delta()); }

}  // namespace tcr
