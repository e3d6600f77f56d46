#include <doctest.h>

#include <vector>

#include "bondskein/ring.hpp"

using namespace bondskein;

namespace {

LaurentPoly L(int e) { return LaurentPoly::l(e); }
LaurentPoly M(int e) { return LaurentPoly::m(e); }

// l^4 + 2l^2 + 1 - l^2 m^2
LaurentPoly big_d() {
  return L(4) + 2 * L(2) + LaurentPoly(1) - L(2) * M(2);
}

}  // namespace

TEST_CASE("laurent arithmetic basics") {
  LaurentPoly z;
  CHECK(z.is_zero());
  CHECK((z + z).is_zero());
  CHECK(LaurentPoly(1).is_one());
  CHECK((L(1) * L(-1)).is_one());
  CHECK((L(2) - L(2)).is_zero());
  CHECK(L(1) * M(1) == LaurentPoly::monomial(1, 1, 1));
  CHECK((L(1) + M(1)) * (L(1) - M(1)) == L(2) - M(2));
  CHECK((L(1) + LaurentPoly(1)).pow(2) == L(2) + 2 * L(1) + LaurentPoly(1));
  CHECK(LaurentPoly(3).pow(0).is_one());
  CHECK(delta_poly() == -(L(1) + L(-1)) * M(-1));
}

TEST_CASE("factorization identity for the base-change determinant block") {
  LaurentPoly f1 = L(2) + LaurentPoly(1) - L(1) * M(1);
  LaurentPoly f2 = L(2) + LaurentPoly(1) + L(1) * M(1);
  CHECK(f1 * f2 == big_d());
}

TEST_CASE("min and max exponents") {
  LaurentPoly p = L(-2) * M(2) - 2 * L(-2) - L(-4);
  CHECK(p.min_exponents() == LaurentPoly::Key{-4, 0});
  CHECK(p.max_exponents() == LaurentPoly::Key{-2, 2});
  CHECK(LaurentPoly().min_exponents() == LaurentPoly::Key{0, 0});
}

TEST_CASE("gcd recovers a shared factor") {
  LaurentPoly f1 = L(2) + LaurentPoly(1) - L(1) * M(1);
  LaurentPoly f2 = L(2) + LaurentPoly(1) + L(1) * M(1);
  CHECK(laurent_gcd(big_d(), f1) == f1);
  CHECK(laurent_gcd(big_d(), f2) == f2);
  CHECK(laurent_gcd(big_d() * big_d(), big_d() * f2) == big_d() * f2);
  CHECK(laurent_gcd(big_d(), LaurentPoly(1)).is_one());
  CHECK(laurent_gcd(f1, f2).is_one());
}

TEST_CASE("gcd ignores monomial units and keeps integer content") {
  LaurentPoly f1 = L(2) + LaurentPoly(1) - L(1) * M(1);
  CHECK(laurent_gcd(M(2) * big_d(), M(-1) * f1) == f1);
  CHECK(laurent_gcd(L(-7) * big_d(), f1 * M(3)) == f1);
  LaurentPoly a = 6 * L(1) + LaurentPoly(6);
  LaurentPoly b = 4 * L(2) - LaurentPoly(4);
  CHECK(laurent_gcd(a, b) == 2 * L(1) + LaurentPoly(2));
  CHECK(laurent_gcd(LaurentPoly(), a) == a);
  CHECK(laurent_gcd(a, LaurentPoly()) == a);
  CHECK(laurent_gcd(LaurentPoly(), M(3) * a) == a);
}

TEST_CASE("gcd result has positive graded-lex leading coefficient") {
  LaurentPoly p = -(L(2) + LaurentPoly(1));
  CHECK(laurent_gcd(p, p) == L(2) + LaurentPoly(1));
  // q = l*(l - m^2): the monomial is stripped, and the graded-lex leader of
  // the rest is the degree-2 term -m^2, so the sign flips too
  LaurentPoly q = -(L(1) * M(2)) + L(2);
  CHECK(laurent_gcd(q, q) == M(2) - L(1));
  CHECK(laurent_gcd(-q, -q) == M(2) - L(1));
}

TEST_CASE("exact laurent division") {
  LaurentPoly f1 = L(2) + LaurentPoly(1) - L(1) * M(1);
  LaurentPoly f2 = L(2) + LaurentPoly(1) + L(1) * M(1);
  CHECK(laurent_div_exact(big_d(), f1) == f2);
  CHECK(laurent_div_exact(M(-3) * big_d(), f1 * L(2)) == f2 * M(-3) * L(-2));
  CHECK_THROWS_AS(laurent_div_exact(f1, f2), ring_error);
  CHECK_THROWS_AS(laurent_div_exact(big_d(), LaurentPoly()), ring_error);
  CHECK(laurent_div_exact(LaurentPoly(), f1).is_zero());
}

TEST_CASE("rational function canonical form") {
  // l^2 m^2 * (l + l^-1)/m over D reduces with monomials pulled into num
  LaurentPoly num = L(2) * M(2) * (L(1) + L(-1)) * M(-1);
  RatFunc r(num, big_d());
  CHECK(r.num() == L(3) * M(1) + L(1) * M(1));
  CHECK(r.den() == big_d());
  CHECK(r.eval(2, 1) == Rational(10, 21));

  // monomial denominators dissolve into the numerator
  RatFunc w(big_d() * big_d(), L(5) * M(3));
  CHECK(w.is_laurent());
  CHECK(w.eval(2, 1) == Rational(441, 32));

  RatFunc half(LaurentPoly(2), LaurentPoly(4));
  CHECK(half.num() == LaurentPoly(1));
  CHECK(half.den() == LaurentPoly(2));
  CHECK(half.str() == "1 / 2");

  // sign lives in the numerator
  RatFunc s(LaurentPoly(1), -(L(2) + LaurentPoly(1)));
  CHECK(s.den() == L(2) + LaurentPoly(1));
  CHECK(s.num() == LaurentPoly(-1));

  CHECK(RatFunc(LaurentPoly(), big_d()) == RatFunc(0));
  CHECK_THROWS_AS(RatFunc(LaurentPoly(1), LaurentPoly()), ring_error);
}

TEST_CASE("rational arithmetic") {
  RatFunc d = delta();
  CHECK(d.is_laurent());
  CHECK(d * RatFunc(M(1)) == RatFunc(-(L(1) + L(-1))));
  RatFunc inv = d.pow(-1);
  CHECK(inv.num() == -(L(1) * M(1)));
  CHECK(inv.den() == L(2) + LaurentPoly(1));
  CHECK(inv * d == RatFunc(1));
  CHECK(inv.str() == "-l*m / (l^2 + 1)");
  CHECK(d.eval(2, 1) == Rational(-5, 2));
  CHECK(inv.eval(2, 1) == Rational(-2, 5));

  RatFunc a(LaurentPoly(1), L(2) + LaurentPoly(1) - L(1) * M(1));
  RatFunc b(LaurentPoly(1), L(2) + LaurentPoly(1) + L(1) * M(1));
  CHECK(a * b == RatFunc(LaurentPoly(1), big_d()));
  CHECK(a - a == RatFunc(0));
  CHECK(a / a == RatFunc(1));
  CHECK((a + b).num() == 2 * L(2) + LaurentPoly(2));
  CHECK((a + b).den() == big_d());
  CHECK_THROWS_AS(a / RatFunc(0), ring_error);
  CHECK_THROWS_AS(RatFunc(0).pow(-1), ring_error);
}

TEST_CASE("rational algebra laws on a sample") {
  std::vector<RatFunc> xs = {
      RatFunc(0),
      RatFunc(1),
      delta(),
      RatFunc(L(2) * M(2), big_d()),
      RatFunc(L(3) * M(3), (L(2) + LaurentPoly(1)) * big_d()),
      RatFunc(-(L(1) * M(1)), L(2) + LaurentPoly(1)),
      RatFunc(L(-2) * M(2) - 2 * L(-2) - L(-4)),
  };
  for (const auto& a : xs)
    for (const auto& b : xs) {
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK(a - b == -(b - a));
      if (!b.is_zero()) CHECK((a / b) * b == a);
      for (const auto& c : xs) {
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
      }
      // canonical form is a fixed point of reconstruction
      RatFunc s = a * b;
      CHECK(RatFunc(s.num(), s.den()) == s);
      auto [dl, dm] = s.den().min_exponents();
      CHECK(dl == 0);
      CHECK(dm == 0);
    }
}

TEST_CASE("evaluation guards") {
  CHECK_THROWS_AS(delta().eval(0, 1), ring_error);
  CHECK_THROWS_AS(delta().eval(1, 0), ring_error);
  RatFunc a(LaurentPoly(1), L(2) + LaurentPoly(1) - L(1) * M(1));
  // denominator vanishes at l=1, m=2
  CHECK_THROWS_AS(a.eval(1, 2), ring_error);
  CHECK(a.eval(1, 1) == Rational(1, 1));
}

TEST_CASE("text rendering") {
  LaurentPoly tref = L(-2) * M(2) - 2 * L(-2) - L(-4);
  CHECK(tref.str() == "l^-2*m^2 - 2*l^-2 - l^-4");
  CHECK(tref.latex() == "l^{-2}m^{2} - 2l^{-2} - l^{-4}");
  CHECK(delta_poly().str() == "-l*m^-1 - l^-1*m^-1");
  CHECK(LaurentPoly().str() == "0");
  CHECK(LaurentPoly(-7).str() == "-7");
  CHECK((L(1) - LaurentPoly(1)).str() == "l - 1");
  CHECK(RatFunc(L(2) * M(2), big_d()).str() ==
        "l^2*m^2 / (l^4 - l^2*m^2 + 2*l^2 + 1)");
  CHECK(RatFunc(L(2) * M(2), big_d()).latex() ==
        "\\frac{l^{2}m^{2}}{l^{4} - l^{2}m^{2} + 2l^{2} + 1}");
  CHECK(RatFunc(1).str() == "1");
}
