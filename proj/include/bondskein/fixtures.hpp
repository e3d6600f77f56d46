#pragma once

// Hand-built reference diagrams used by tests, the selftest command and the
// generator machinery.  Every map here was derived on paper; planarity is
// re-checked by validate() wherever they are used.

#include <string>

#include "bondskein/diagram.hpp"

namespace bondskein::fixtures {

// classical links
BondedDiagram unknot();
BondedDiagram unlink(int circles);
BondedDiagram trefoil();         // all-positive braid closure
BondedDiagram trefoil_mirror();  // all-negative
BondedDiagram hopf_positive();
BondedDiagram hopf_negative();
BondedDiagram unknot_positive_kink();  // one-crossing circles
BondedDiagram unknot_negative_kink();

// elementary bonded curves
BondedDiagram theta(int color = 1);           // circle + chord, antiparallel
BondedDiagram handcuff(int color = 1);        // two circles + bond, antiparallel
BondedDiagram handcuff_bar(int color = 1);    // one circle reversed, parallel
BondedDiagram theta_bar(int color = 1);       // kinked circle + rung, parallel
BondedDiagram theta_bar_star(int color = 1);  // opposite kink

// bonded trefoils sharing one underlying theta-curve: the bond is the rung
// below the braid, or one of the two long arcs through it
BondedDiagram trefoil_rung();
BondedDiagram trefoil_arc_bond();
BondedDiagram trefoil_arc_bond_alt();

// circle with crossing-free chords; pattern letters name bonds, each letter
// appears exactly twice ("abba" = nested, "abacbc" = partly interleaved).
// Chords are routed inside/outside the circle; throws when the interleaving
// forces chord-chord crossings (non-bipartite conflict graph).
BondedDiagram circle_with_chords(const std::string& pattern);

// the fully interleaved 3-chord pattern "abcabc"; needs one bond-bond crossing
BondedDiagram triple_interleaved_chords();

// deliberately broken rotation system (one vertex flipped): V - E + F = 0
BondedDiagram nonplanar_theta();

}  // namespace bondskein::fixtures
