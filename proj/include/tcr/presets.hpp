#ifndef TCR_PRESETS_HPP
#define TCR_PRESETS_HPP

#include "tcr/cone.hpp"

namespace tcr {

// Built-in demonstration pairs.
//
// quintic: Delta* is the reflexive simplex conv{e1..e4, -(1,1,1,1)} in Z^4;
// the pair is built from its polar dual Delta, so that f lives on the 126
// lattice points of Delta and g on the 6 lattice points of Delta*.
//
// elliptic: the cubic curve in P^2, Delta = conv{(2,-1),(-1,2),(-1,-1)}
// (10 points), Delta* = conv{(1,0),(0,1),(-1,-1)} (4 points).
Polytope quintic_delta();
Polytope quintic_delta_star();
Polytope elliptic_delta();
Polytope elliptic_delta_star();

GorensteinPair quintic_pair();
GorensteinPair elliptic_pair();

}  // namespace tcr

#endif
