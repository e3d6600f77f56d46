#pragma once

// Exact arithmetic in the coefficient ring of the invariants: Laurent
// polynomials in l, m over the integers, and rational functions built from
// them.  Rational functions are kept in a canonical reduced form so that
// operator== is structural equality.

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace bondskein {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

class ring_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Element of Z[l^{+-1}, m^{+-1}].  Keys are (exponent of l, exponent of m);
// zero coefficients are never stored.
class LaurentPoly {
public:
  using Key = std::pair<int, int>;
  using Map = std::map<Key, Int>;

  LaurentPoly() = default;
  LaurentPoly(long c) { if (c != 0) coeffs_[{0, 0}] = c; }
  LaurentPoly(const Int& c) { if (c != 0) coeffs_[{0, 0}] = c; }

  static LaurentPoly monomial(Int c, int el, int em);
  static LaurentPoly l(int e = 1) { return monomial(1, e, 0); }
  static LaurentPoly m(int e = 1) { return monomial(1, 0, e); }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;
  bool is_monomial() const { return coeffs_.size() == 1; }
  const Map& terms() const { return coeffs_; }

  // largest (a, b) with l^a m^b dividing the polynomial; (0,0) for zero
  Key min_exponents() const;
  Key max_exponents() const;

  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  bool operator==(const LaurentPoly& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const LaurentPoly& o) const { return coeffs_ != o.coeffs_; }
  bool operator<(const LaurentPoly& o) const { return coeffs_ < o.coeffs_; }

  LaurentPoly pow(unsigned e) const;
  LaurentPoly shifted(int el, int em) const;  // multiply by l^el m^em

  // throws ring_error on l=0 or m=0 with a negative exponent present
  Rational eval(const Rational& lv, const Rational& mv) const;

  std::string str() const;
  std::string latex() const;

  void set(Key k, Int c);  // inserts/overwrites, erasing zeros

private:
  Map coeffs_;
};

inline LaurentPoly operator*(const Int& c, const LaurentPoly& p) {
  return LaurentPoly(c) * p;
}

// gcd of the pure-polynomial parts: both arguments are shifted to have
// min_exponents (0,0), the gcd of those images in Z[l,m] is returned with
// positive leading coefficient (graded-lex, l before m).  gcd of 0 and p is
// the normalized p.
LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b);

// exact division; throws ring_error if not divisible in Z[l^{+-1}, m^{+-1}]
LaurentPoly laurent_div_exact(const LaurentPoly& a, const LaurentPoly& b);

// Canonical quotient of Laurent polynomials.  Invariants after construction:
//  - zero is 0/1;
//  - den is a polynomial with min_exponents (0,0), not a monomial unless 1,
//    positive leading coefficient (graded-lex, l before m);
//  - the pure parts of num and den are coprime, and the integer contents of
//    num and den are coprime;
//  - all monomial content (including negative powers) lives in num.
class RatFunc {
public:
  RatFunc() : num_(), den_(1) {}
  RatFunc(long c) : num_(c), den_(1) {}
  RatFunc(const Int& c) : num_(c), den_(1) {}
  RatFunc(const LaurentPoly& p) : num_(p), den_(1) {}
  RatFunc(LaurentPoly num, LaurentPoly den);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_laurent() const { return den_.is_one(); }

  RatFunc operator-() const;
  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;  // throws ring_error on /0
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
  bool operator==(const RatFunc& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }
  bool operator<(const RatFunc& o) const {
    return num_ != o.num_ ? num_ < o.num_ : den_ < o.den_;
  }

  RatFunc pow(int e) const;  // negative e inverts; throws on 0^negative

  // throws ring_error when the denominator vanishes at the point
  Rational eval(const Rational& lv, const Rational& mv) const;

  std::string str() const;
  std::string latex() const;

private:
  void normalize();
  LaurentPoly num_, den_;
};

// -(l + l^-1) / m: value of a disjoint unknot factor.  A Laurent polynomial.
LaurentPoly delta_poly();
inline RatFunc delta() { return RatFunc(delta_poly()); }

}  // namespace bondskein
