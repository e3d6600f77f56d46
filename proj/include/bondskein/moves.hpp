#pragma once

// Diagram rewriting moves and derived operations: bond isolation, greedy
// simplification, seeded random isotopy walks.
//
// Moves I, II, III are the classical link moves; IV / IV' slide a strand
// past a bond endpoint vertex (over / under); V flips a bond end across an
// adjacent link edge (non-rigid only); RV rolls the whole bond half a turn
// around its own axis, so the link-edge pair at each endpoint vertex crosses
// once, with mirrored handedness at the two ends.  Any strand in I, II, III
// and the sliding strand in IV / IV' may be a link arc or a bond segment.

#include "diagram.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace bondskein {

enum class Move { I, II, III, IV, IVp, V, RV };

std::string to_string(Move m);

// one typed identifier in a move site: v<id>, x<id>, e<id> or a dart e<id>.<end>
struct SiteTok {
  char kind = 'e';  // 'v' vertex, 'x' crossing, 'e' edge
  int id = -1;
  int bit = -1;  // dart end for edge tokens, -1 when absent
  auto operator<=>(const SiteTok&) const = default;
};

// flags by move:
//   I fwd:  sign "+" or "-", loop side "L" or "R"
//   II fwd: "over" / "under"  (is the first (poking) strand on top?)
//   V fwd:  side "L" (sweep across the ccw-next edge) or "R", plus
//           "over" / "under" for the bond
//   RV fwd: hand "L" (ccw-next strand on top at the named vertex) or "R";
//           the far endpoint twists the mirrored way
struct MoveSpec {
  Move move = Move::I;
  bool forward = true;
  std::vector<SiteTok> site;
  std::vector<std::string> flags;
};

struct MoveResult {
  BondedDiagram diagram;
  // spec that undoes the move at the same place; its site is empty when the
  // rewrite has no representable inverse (a strand closed into a
  // crossingless loop, or reconnected strands merged into a single edge)
  MoveSpec inverse;
};

// applies one move; throws diagram_error naming the failed pattern condition
MoveResult apply_move(const BondedDiagram& d, const MoveSpec& spec);

// script lines look like "IV forward at v3 x7" or "I backward at x2 e5";
// '#' starts a comment
MoveSpec parse_move(const std::string& line);
std::string format_move(const MoveSpec& spec);
std::vector<MoveSpec> parse_move_script(const std::string& text);

// every applicable move instance, in a deterministic order; move V is left
// out when rigid is set, and forward instances that would push the crossing
// count past max_crossings are skipped, as are backward II instances whose
// inverse would not be representable.  when rigid is set, each bond behaves
// as a stiff ribbon: candidates that would kink it (I on a bond edge), clasp
// it with itself (II on two edges of one bond), or slide it across its own
// vertex (IV / IV' moving the vertex's own bond) are also held back — a
// ribbon translates past other strands and rolls, but never folds
std::vector<MoveSpec> enumerate_moves(const BondedDiagram& d, bool rigid,
                                      std::size_t max_crossings);

// repeatedly reroutes the crossing nearest either endpoint vertex past that
// vertex (move IV / IV') until the bond is a single crossing-free segment;
// each slide trades one crossing on the bond for two crossings of the
// rerouted strand with the vertex's other edges.  best effort: when strands
// pinned at both vertices block the chain — or the crossing is the bond
// folded over itself, which no rigid move undoes — the leftover crossings
// stay (the smoothings cut through link strands)
BondedDiagram isolate_bond(const BondedDiagram& d, int bond);
// isolates every bond, ascending id; idempotent
BondedDiagram isolate_all(const BondedDiagram& d);

// greedily applies backward I and II at link-only sites until none applies
BondedDiagram simplify(const BondedDiagram& d);

// seeded deterministic walk: picks uniformly among applicable moves each
// step ({I..IV', RV} when rigid, {I..V, RV} otherwise); steps == 0 returns d
BondedDiagram random_isotopy(const BondedDiagram& d, std::uint64_t seed,
                             int steps, bool rigid,
                             std::size_t max_crossings = 12);

}  // namespace bondskein
