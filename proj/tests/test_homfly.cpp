#include "bondskein/homfly.hpp"

#include <cstdlib>
#include <initializer_list>
#include <tuple>

#include "bondskein/fixtures.hpp"
#include "bondskein/moves.hpp"
#include "doctest.h"

using namespace bondskein;

namespace {

LaurentPoly poly(std::initializer_list<std::tuple<long, int, int>> terms) {
  LaurentPoly p;
  for (const auto& [c, el, em] : terms)
    p += LaurentPoly::monomial(c, el, em);
  return p;
}

const LaurentPoly kTrefoil = poly({{1, -2, 2}, {-2, -2, 0}, {-1, -4, 0}});
const LaurentPoly kTrefoilMirror = poly({{1, 2, 2}, {-2, 2, 0}, {-1, 4, 0}});
const LaurentPoly kHopfPlus = poly({{1, -1, -1}, {-1, -1, 1}, {1, -3, -1}});
const LaurentPoly kHopfMinus = poly({{1, 3, -1}, {1, 1, -1}, {-1, 1, 1}});
// the 7-crossing two-component link left by pulling one trefoil arc clear of
// the braid and splicing a clasp there
const LaurentPoly kSeven = poly({{-1, 3, 1},
                                 {2, 3, -1},
                                 {1, 1, 3},
                                 {-4, 1, 1},
                                 {3, 1, -1},
                                 {-1, -1, 1},
                                 {1, -1, -1}});

BondedDiagram seven_crossing_link() {
  BondedDiagram d = fixtures::trefoil_arc_bond();
  int bond = d.bonds.begin()->first;
  return smooth_bond(isolate_bond(d, bond), bond, Smoothing::NegCrossing);
}

BondedDiagram mirrored(const BondedDiagram& d) {
  BondedDiagram r = d;
  for (auto& [id, c] : r.crossings) c.over = (c.over + 1) % 4;
  return r;
}

BondedDiagram reversed(const BondedDiagram& d) {
  BondedDiagram r = d;
  for (auto& [id, e] : r.edges)
    if (e.kind == EdgeKind::Link) std::swap(e.at[0], e.at[1]);
  for (auto& [id, c] : r.crossings)
    for (Dart& s : c.slots)
      if (r.edges.at(s.edge).kind == EdgeKind::Link) s.end ^= 1;
  return r;
}

LaurentPoly invert_l(const LaurentPoly& p) {
  LaurentPoly r;
  for (const auto& [key, c] : p.terms())
    r += LaurentPoly::monomial(c, -key.first, key.second);
  return r;
}

BondedDiagram disjoint_union(const BondedDiagram& a, const BondedDiagram& b) {
  int de = 0, dx = 0, dv = 0, db = 0;
  for (const auto& [id, e] : a.edges) de = std::max(de, id + 1);
  for (const auto& [id, c] : a.crossings) dx = std::max(dx, id + 1);
  for (const auto& [id, v] : a.vertices) dv = std::max(dv, id + 1);
  for (const auto& [id, bd] : a.bonds) db = std::max(db, id + 1);
  BondedDiagram r = a;
  auto shift = [&](Port p) {
    p.site.id += p.site.kind == SiteKind::Crossing ? dx : dv;
    return p;
  };
  for (const auto& [id, e] : b.edges) {
    Edge f = e;
    f.at = {shift(e.at[0]), shift(e.at[1])};
    if (f.bond >= 0) f.bond += db;
    r.edges[id + de] = f;
  }
  for (const auto& [id, c] : b.crossings) {
    Crossing f = c;
    for (Dart& s : f.slots) s.edge += de;
    r.crossings[id + dx] = f;
  }
  for (const auto& [id, v] : b.vertices) {
    Vertex f = v;
    for (Dart& s : f.slots) s.edge += de;
    r.vertices[id + dv] = f;
  }
  for (const auto& [id, bd] : b.bonds) r.bonds[id + db] = bd;
  r.free_loops += b.free_loops;
  return r;
}

void check_skein_at(const BondedDiagram& d, int x) {
  LaurentPoly here = homfly(d);
  LaurentPoly other = homfly(switch_crossing(d, x));
  LaurentPoly zero = homfly(smooth_crossing(d, x));
  LaurentPoly plus = crossing_sign(d, x) > 0 ? here : other;
  LaurentPoly minus = crossing_sign(d, x) > 0 ? other : here;
  LaurentPoly lhs = LaurentPoly::l(1) * plus + LaurentPoly::l(-1) * minus +
                    LaurentPoly::m(1) * zero;
  CHECK_MESSAGE(lhs.is_zero(), "skein residue ", lhs.str(), " at x", x);
}

}  // namespace

TEST_CASE("unknots and unlinks evaluate to powers of the loop factor") {
  CHECK(homfly(fixtures::unknot()).is_one());
  CHECK(homfly(fixtures::unknot_positive_kink()).is_one());
  CHECK(homfly(fixtures::unknot_negative_kink()).is_one());
  CHECK(homfly(fixtures::unlink(2)) == delta_poly());
  CHECK(homfly(fixtures::unlink(4)) == delta_poly().pow(3));
}

TEST_CASE("small torus links match their tabulated polynomials") {
  CHECK(homfly(fixtures::trefoil()) == kTrefoil);
  CHECK(homfly(fixtures::trefoil_mirror()) == kTrefoilMirror);
  CHECK(homfly(fixtures::hopf_positive()) == kHopfPlus);
  CHECK(homfly(fixtures::hopf_negative()) == kHopfMinus);
}

TEST_CASE("the spliced trefoil arc gives the pinned seven-crossing link") {
  BondedDiagram d = seven_crossing_link();
  CHECK(d.crossings.size() == 7);
  CHECK(link_components(d).size() == 2);
  CHECK(homfly(d) == kSeven);
  CHECK(kSeven.eval(2, 1) == Rational(8));
}

TEST_CASE("mirroring a diagram inverts l") {
  CHECK(homfly(mirrored(fixtures::trefoil())) == kTrefoilMirror);
  CHECK(homfly(mirrored(fixtures::hopf_positive())) == invert_l(kHopfPlus));
  CHECK(homfly(mirrored(seven_crossing_link())) == invert_l(kSeven));
}

TEST_CASE("reversing every strand preserves the polynomial") {
  for (const BondedDiagram& d :
       {fixtures::trefoil(), fixtures::hopf_positive(), seven_crossing_link()}) {
    BondedDiagram r = reversed(d);
    require_valid(r);
    CHECK(homfly(r) == homfly(d));
  }
}

TEST_CASE("the skein relation holds at every crossing of the fixtures") {
  std::vector<BondedDiagram> pool = {
      fixtures::trefoil(), fixtures::hopf_positive(), fixtures::hopf_negative(),
      seven_crossing_link()};
  pool.push_back(random_isotopy(fixtures::trefoil(), 5, 6, false));
  pool.push_back(random_isotopy(fixtures::hopf_negative(), 7, 6, false));
  for (const BondedDiagram& d : pool)
    for (const auto& [x, c] : d.crossings) check_skein_at(d, x);
}

TEST_CASE("split unions multiply with one loop factor between parts") {
  BondedDiagram u = disjoint_union(fixtures::trefoil(), fixtures::hopf_positive());
  require_valid(u);
  CHECK(homfly(u) == delta_poly() * kTrefoil * kHopfPlus);
  BondedDiagram w = disjoint_union(u, fixtures::unknot());
  CHECK(homfly(w) == delta_poly().pow(2) * kTrefoil * kHopfPlus);
}

TEST_CASE("walks of a diagram keep its polynomial") {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    CHECK(homfly(random_isotopy(fixtures::trefoil(), seed, 8, false)) == kTrefoil);
    CHECK(homfly(random_isotopy(fixtures::unlink(2), seed, 8, false)) ==
          delta_poly());
  }
}

TEST_CASE("the expansion refuses bonds and oversized diagrams") {
  CHECK_THROWS_WITH_AS(homfly(fixtures::theta()),
                       doctest::Contains("smooth or cut the bonds"),
                       diagram_error);
  setenv("BONDSKEIN_MAX_CROSSINGS", "2", 1);
  CHECK(max_crossings() == 2);
  CHECK_THROWS_WITH_AS(homfly(fixtures::trefoil()),
                       doctest::Contains("BONDSKEIN_MAX_CROSSINGS"),
                       diagram_error);
  setenv("BONDSKEIN_MAX_CROSSINGS", "three", 1);
  CHECK_THROWS_AS(max_crossings(), diagram_error);
  unsetenv("BONDSKEIN_MAX_CROSSINGS");
  CHECK(max_crossings() == 20);
}

TEST_CASE("switch and smooth reject bad sites") {
  CHECK_THROWS_WITH_AS(switch_crossing(fixtures::trefoil(), 99),
                       doctest::Contains("no crossing x99"), diagram_error);
  BondedDiagram d = fixtures::trefoil_arc_bond();
  int bonded = -1;
  for (const auto& [x, c] : d.crossings)
    for (const Dart& s : c.slots)
      if (d.edges.at(s.edge).kind == EdgeKind::Bond) bonded = x;
  REQUIRE(bonded >= 0);
  CHECK_THROWS_WITH_AS(smooth_crossing(d, bonded),
                       doctest::Contains("bond segment"), diagram_error);
}
