#pragma once

// Skein-module invariants of colored bonded diagrams.  Values live in the
// free module spanned by commutative products of one-bond generators
// (theta curves and handcuffs, antiparallel or parallel) with one factor per
// bond, over rational functions in l, m.  The rigid invariant cuts every
// isolated bond against a four-row table of smoothings; the nonrigid one
// collapses each bond to a single theta factor.

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bondskein/diagram.hpp"
#include "bondskein/ring.hpp"

namespace bondskein {

enum class GeneratorKind { Theta, ThetaBar, H, HBar };
enum class Basis { Rigid, NonRigid };

std::string to_string(GeneratorKind k);
std::string to_string(Basis b);

struct Generator {
  GeneratorKind kind = GeneratorKind::Theta;
  int color = 1;
  bool operator==(const Generator&) const = default;
  std::strong_ordering operator<=>(const Generator& o) const {
    if (auto c = color <=> o.color; c != 0) return c;
    return kind <=> o.kind;
  }
};

// commutative product of generators: factor -> multiplicity
using GeneratorMultiset = std::map<Generator, int>;

struct InvariantElement {
  Basis basis = Basis::Rigid;
  std::map<GeneratorMultiset, RatFunc> terms;  // zero coefficients elided

  bool operator==(const InvariantElement&) const = default;
  InvariantElement& add(const GeneratorMultiset& ms, const RatFunc& c);
  InvariantElement operator+(const InvariantElement& o) const;
  InvariantElement operator*(const RatFunc& c) const;

  std::string str() const;
  std::string latex() const;
  std::string json() const;
};

// reference diagram whose class is the given generator
BondedDiagram generator_diagram(GeneratorKind k, int color = 1);

// one row of the single-bond cut
struct CutTerm {
  Smoothing smoothing;
  GeneratorKind generator;
  RatFunc coeff;
};
const std::vector<CutTerm>& cut_terms(BondGeometry g);

InvariantElement rigid_invariant(const BondedDiagram& d);
InvariantElement nonrigid_invariant(const BondedDiagram& d);
// the same nonrigid element read off the underlying link directly
InvariantElement nonrigid_closed_form(const BondedDiagram& d);

// evaluation maps splitting the module: isolate the bond, smooth it when the
// geometry admits the map, nullopt when the map annihilates the class
std::optional<BondedDiagram> g_map(const BondedDiagram& d, int bond,
                                   Smoothing which);

// generator polynomials under the four maps; rows are the maps in smoothing
// order (zero, infinity, positive, negative), columns the generators in kind
// order.  The determinant staying nonzero keeps the generators independent.
std::array<std::array<RatFunc, 4>, 4> evaluation_matrix();
RatFunc freeness_determinant();

}  // namespace bondskein
