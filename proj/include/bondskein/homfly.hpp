#pragma once

// Link polynomial in the normalization
//   l P(L+) + l^-1 P(L-) + m P(L0) = 0,  P(unknot) = 1,
// so a split unknot factor multiplies by delta = -(l + l^-1)/m.  Computed by
// memoized skein expansion: walk the components, switch the first crossing
// whose first passage runs under, smooth it, recurse; descending diagrams
// are unlinks.  Diagrams are simplified between expansion steps and looked
// up by canonical code.

#include "bondskein/diagram.hpp"
#include "bondskein/ring.hpp"

namespace bondskein {

// crossing with the other strand on top; same ids
BondedDiagram switch_crossing(const BondedDiagram& d, int x);

// oriented smoothing: both strands turn instead of crossing.  Throws when a
// bond segment runs through the crossing.
BondedDiagram smooth_crossing(const BondedDiagram& d, int x);

// expansion size guard, read from BONDSKEIN_MAX_CROSSINGS (default 20)
int max_crossings();

// exact polynomial of a bond-free diagram; throws diagram_error when bonds
// remain or the simplified diagram still exceeds max_crossings()
LaurentPoly homfly(const BondedDiagram& d);

}  // namespace bondskein
