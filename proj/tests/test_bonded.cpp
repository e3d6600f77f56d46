#include "bondskein/bonded.hpp"

#include <initializer_list>
#include <tuple>

#include <nlohmann/json.hpp>

#include "bondskein/fixtures.hpp"
#include "bondskein/homfly.hpp"
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

GeneratorMultiset one(GeneratorKind k, int color) {
  return {{Generator{k, color}, 1}};
}

// (l^2+1)^2 - l^2 m^2, the recurring denominator
const LaurentPoly kDenom = poly({{1, 4, 0}, {2, 2, 0}, {1, 0, 0}, {-1, 2, 2}});

Rational coeff_at(const InvariantElement& e, const GeneratorMultiset& ms,
                  long lv, long mv) {
  auto it = e.terms.find(ms);
  REQUIRE(it != e.terms.end());
  return it->second.eval(lv, mv);
}

}  // namespace

TEST_CASE("cutting a generator diagram returns that generator") {
  for (GeneratorKind k : {GeneratorKind::Theta, GeneratorKind::ThetaBar,
                          GeneratorKind::H, GeneratorKind::HBar})
    for (int color : {1, 3}) {
      InvariantElement got = rigid_invariant(generator_diagram(k, color));
      InvariantElement want{Basis::Rigid, {}};
      want.add(one(k, color), RatFunc(1));
      CHECK_MESSAGE(got == want, to_string(k), "_", color, " gave ", got.str());
    }
}

TEST_CASE("the opposite kink resolves against the parallel generators") {
  InvariantElement got = rigid_invariant(fixtures::theta_bar_star(2));
  InvariantElement want{Basis::Rigid, {}};
  want.add(one(GeneratorKind::ThetaBar, 2), RatFunc(-LaurentPoly::l(2)));
  want.add(one(GeneratorKind::HBar, 2),
           RatFunc(LaurentPoly::monomial(-1, 1, 1)));
  CHECK(got == want);
}

TEST_CASE("bond placement on the trefoil: rung differs from arc placements") {
  InvariantElement rung = rigid_invariant(fixtures::trefoil_rung());
  InvariantElement arc = rigid_invariant(fixtures::trefoil_arc_bond());
  InvariantElement arc_alt = rigid_invariant(fixtures::trefoil_arc_bond_alt());

  InvariantElement want{Basis::Rigid, {}};
  want.add(one(GeneratorKind::ThetaBar, 1), RatFunc(poly({{1, -2, 2}, {-1, -2, 0}})));
  want.add(one(GeneratorKind::HBar, 1), RatFunc(poly({{1, -3, 1}})));
  CHECK(rung == want);

  CHECK(arc == arc_alt);
  CHECK(rung != arc);
  CHECK(coeff_at(arc, one(GeneratorKind::ThetaBar, 1), 2, 1) == Rational(-4));
  CHECK(coeff_at(arc, one(GeneratorKind::HBar, 1), 2, 1) == Rational(-2));
}

TEST_CASE("rigid invariants survive rigid walks") {
  for (const BondedDiagram& base :
       {fixtures::trefoil_rung(), fixtures::theta_bar_star(1)}) {
    InvariantElement value = rigid_invariant(base);
    for (std::uint64_t seed : {3u, 4u})
      CHECK(rigid_invariant(random_isotopy(base, seed, 50, true, 6)) == value);
  }
}

TEST_CASE("a bond twist keeps the nonrigid class and moves the rigid one") {
  BondedDiagram base = fixtures::theta(1);
  MoveSpec twist;
  bool found = false;
  for (const MoveSpec& s : enumerate_moves(base, false, 8))
    if (s.move == Move::V && s.forward && !found) {
      twist = s;
      found = true;
    }
  REQUIRE(found);
  BondedDiagram twisted = apply_move(base, twist).diagram;
  CHECK(nonrigid_invariant(twisted) == nonrigid_invariant(base));
  CHECK(rigid_invariant(twisted) != rigid_invariant(base));
}

TEST_CASE("the sixteen generator evaluations match the module table") {
  RatFunc d = delta();
  RatFunc hopf{poly({{1, -1, -1}, {-1, -1, 1}, {1, -3, -1}})};
  std::array<std::array<RatFunc, 4>, 4> want = {{
      {RatFunc(1), RatFunc(1), d, d},
      {d, RatFunc(0), RatFunc(1), RatFunc(0)},
      {RatFunc(0), hopf, RatFunc(0), RatFunc(1)},
      {RatFunc(0), d, RatFunc(0), RatFunc(1)},
  }};
  std::array<std::array<RatFunc, 4>, 4> got = evaluation_matrix();
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      CHECK_MESSAGE(got[r][c] == want[r][c], "entry (", r, ",", c, ") is ",
                    got[r][c].str());
}

TEST_CASE("the evaluation determinant certifies independent generators") {
  RatFunc det = freeness_determinant();
  CHECK(det == RatFunc((kDenom * kDenom).shifted(-5, -3)));
  CHECK(det.eval(2, 1) == Rational(441, 32));
}

TEST_CASE("nonrigid invariants match the closed form") {
  std::vector<BondedDiagram> pool = {
      fixtures::theta(1),
      fixtures::theta_bar(2),
      fixtures::theta_bar_star(1),
      fixtures::handcuff(1),
      fixtures::handcuff_bar(1),
      fixtures::trefoil_rung(),
      fixtures::trefoil_arc_bond(),
      fixtures::circle_with_chords("abba"),
      fixtures::circle_with_chords("abacbc"),
      fixtures::triple_interleaved_chords(),
  };
  pool.push_back(random_isotopy(fixtures::trefoil_rung(), 9, 30, false, 6));
  pool.push_back(random_isotopy(fixtures::circle_with_chords("abba"), 10, 30,
                                false, 6));
  for (const BondedDiagram& d : pool)
    CHECK(nonrigid_invariant(d) == nonrigid_closed_form(d));
}

TEST_CASE("multisets carry one factor per bond in its color") {
  BondedDiagram d = fixtures::circle_with_chords("abba");
  auto it = d.bonds.begin();
  it->second.color = 2;
  (++it)->second.color = 5;

  InvariantElement rigid = rigid_invariant(d);
  CHECK(!rigid.terms.empty());
  for (const auto& [ms, c] : rigid.terms) {
    int total = 0;
    std::map<int, int> per_color;
    for (const auto& [g, mult] : ms) {
      total += mult;
      per_color[g.color] += mult;
    }
    CHECK(total == 2);
    CHECK(per_color[2] == 1);
    CHECK(per_color[5] == 1);
  }

  InvariantElement loose = nonrigid_invariant(d);
  GeneratorMultiset want;
  want[Generator{GeneratorKind::Theta, 2}] = 1;
  want[Generator{GeneratorKind::Theta, 5}] = 1;
  REQUIRE(loose.terms.size() == 1);
  CHECK(loose.terms.begin()->first == want);
}

TEST_CASE("elements render to text, latex and json") {
  InvariantElement e{Basis::Rigid, {}};
  GeneratorMultiset ms;
  ms[Generator{GeneratorKind::Theta, 2}] = 2;
  ms[Generator{GeneratorKind::Theta, 3}] = 1;
  e.add(ms, RatFunc(LaurentPoly::monomial(1, 3, 3),
                    LaurentPoly(1) + LaurentPoly::l(2)));
  e.add(one(GeneratorKind::HBar, 1), RatFunc(-1));

  CHECK(e.str() ==
        "(-1) HBar_1 + (l^3*m^3 / (l^2 + 1)) Theta_2^2 Theta_3");
  CHECK(e.latex().find("\\bar{H}_{1}") != std::string::npos);
  CHECK(e.latex().find("\\Theta_{2}^{2}\\,\\Theta_{3}") != std::string::npos);

  auto j = nlohmann::json::parse(e.json());
  CHECK(j["basis"] == "rigid");
  REQUIRE(j["terms"].size() == 2);
  CHECK(j["terms"][0]["multiset"][0]["kind"] == "HBar");
  CHECK(j["terms"][0]["num"] == "-1");
  CHECK(j["terms"][1]["multiset"][0]["color"] == 2);
  CHECK(j["terms"][1]["multiset"][0]["mult"] == 2);
  CHECK(j["terms"][1]["den"] == "l^2 + 1");

  InvariantElement zero{Basis::NonRigid, {}};
  CHECK(zero.str() == "0");
  CHECK(zero.latex() == "0");
  CHECK_THROWS_AS(e + zero, diagram_error);
}

TEST_CASE("bond-free diagrams reduce to the bare polynomial") {
  InvariantElement r = rigid_invariant(fixtures::trefoil());
  REQUIRE(r.terms.size() == 1);
  CHECK(r.terms.begin()->first.empty());
  CHECK(r.terms.begin()->second == RatFunc(homfly(fixtures::trefoil())));
  InvariantElement n = nonrigid_invariant(fixtures::trefoil());
  CHECK(n.terms == r.terms);
  CHECK(n.basis == Basis::NonRigid);
}
