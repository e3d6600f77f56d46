#include "bondskein/ring.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace bondskein {

namespace {

using boost::multiprecision::gcd;

// ---------- univariate polynomials over Z, variable m, coeff[i] ~ m^i ----

using UP = std::vector<Int>;

void up_trim(UP& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}
bool up_zero(const UP& p) { return p.empty(); }
int up_deg(const UP& p) { return static_cast<int>(p.size()) - 1; }

UP up_mul(const UP& a, const UP& b) {
  if (a.empty() || b.empty()) return {};
  UP r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  up_trim(r);
  return r;
}

UP up_sub(UP a, const UP& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  up_trim(a);
  return a;
}

Int up_content(const UP& p) {
  Int g = 0;
  for (const auto& c : p) {
    g = gcd(g, c);
    if (g == 1) break;
  }
  return g;
}

UP up_div_int(UP p, const Int& c) {
  for (auto& x : p) {
    Int q = x / c;
    if (q * c != x) throw ring_error("inexact integer division");
    x = q;
  }
  return p;
}

UP up_div_exact(UP a, const UP& b) {
  if (up_zero(b)) throw ring_error("polynomial division by zero");
  if (up_zero(a)) return {};
  if (up_deg(a) < up_deg(b)) throw ring_error("inexact polynomial division");
  UP q(a.size() - b.size() + 1);
  while (!up_zero(a)) {
    if (up_deg(a) < up_deg(b)) throw ring_error("inexact polynomial division");
    Int c = a.back() / b.back();
    if (c * b.back() != a.back()) throw ring_error("inexact polynomial division");
    int d = up_deg(a) - up_deg(b);
    q[d] = c;
    for (size_t i = 0; i < b.size(); ++i) a[i + d] -= c * b[i];
    up_trim(a);
  }
  return q;
}

// pseudo-remainder in m; caller takes primitive parts
UP up_prem(UP a, const UP& b) {
  int db = up_deg(b);
  while (!up_zero(a) && up_deg(a) >= db) {
    int d = up_deg(a) - db;
    Int la = a.back();
    const Int lb = b.back();
    for (auto& x : a) x *= lb;
    for (size_t i = 0; i < b.size(); ++i) a[i + d] -= la * b[i];
    up_trim(a);
  }
  return a;
}

UP up_primitive(UP p) {
  if (up_zero(p)) return p;
  Int c = up_content(p);
  if (p.back() < 0) c = -c;
  return up_div_int(std::move(p), c);
}

// true gcd in Z[m], integer content included, positive leading coefficient
UP up_gcd(UP a, UP b) {
  if (up_zero(a)) {
    if (!up_zero(b) && b.back() < 0)
      for (auto& x : b) x = -x;
    return b;
  }
  if (up_zero(b)) {
    if (a.back() < 0)
      for (auto& x : a) x = -x;
    return a;
  }
  Int cg = gcd(up_content(a), up_content(b));
  a = up_primitive(std::move(a));
  b = up_primitive(std::move(b));
  if (up_deg(a) < up_deg(b)) std::swap(a, b);
  while (!up_zero(b)) {
    UP r = up_primitive(up_prem(std::move(a), b));
    a = std::move(b);
    b = std::move(r);
  }
  for (auto& x : a) x *= cg;
  return a;
}

// ---------- bivariate: coeff[i] in Z[m] is the coefficient of l^i ----------

using BP = std::vector<UP>;

void bp_trim(BP& p) {
  while (!p.empty() && up_zero(p.back())) p.pop_back();
}
bool bp_zero(const BP& p) { return p.empty(); }
int bp_deg(const BP& p) { return static_cast<int>(p.size()) - 1; }

UP bp_content(const BP& p) {
  UP g;
  for (const auto& c : p)
    if (!up_zero(c)) g = up_gcd(g, c);
  return g;
}

BP bp_div_up(BP p, const UP& c) {
  for (auto& x : p)
    if (!up_zero(x)) x = up_div_exact(std::move(x), c);
  return p;
}

BP bp_prem(BP a, const BP& b) {
  int db = bp_deg(b);
  while (!bp_zero(a) && bp_deg(a) >= db) {
    int d = bp_deg(a) - db;
    UP la = a.back();
    const UP lb = b.back();
    for (auto& x : a) x = up_mul(x, lb);
    for (int i = 0; i <= db; ++i)
      a[i + d] = up_sub(std::move(a[i + d]), up_mul(la, b[i]));
    bp_trim(a);
  }
  return a;
}

BP bp_primitive(BP p) {
  if (bp_zero(p)) return p;
  return bp_div_up(std::move(p), bp_content(p));
}

BP bp_gcd(BP a, BP b) {
  if (bp_zero(a)) return b;
  if (bp_zero(b)) return a;
  UP cg = up_gcd(bp_content(a), bp_content(b));
  a = bp_primitive(std::move(a));
  b = bp_primitive(std::move(b));
  if (bp_deg(a) < bp_deg(b)) std::swap(a, b);
  while (!bp_zero(b)) {
    BP r = bp_primitive(bp_prem(std::move(a), b));
    a = std::move(b);
    b = std::move(r);
  }
  for (auto& x : a) x = up_mul(x, cg);
  return a;
}

BP bp_div_exact(BP a, const BP& b) {
  if (bp_zero(b)) throw ring_error("polynomial division by zero");
  if (bp_zero(a)) return {};
  if (bp_deg(a) < bp_deg(b)) throw ring_error("inexact polynomial division");
  BP q(bp_deg(a) - bp_deg(b) + 1);
  while (!bp_zero(a)) {
    if (bp_deg(a) < bp_deg(b)) throw ring_error("inexact polynomial division");
    UP c = up_div_exact(a.back(), b.back());
    int d = bp_deg(a) - bp_deg(b);
    for (int i = 0; i <= bp_deg(b); ++i)
      a[i + d] = up_sub(std::move(a[i + d]), up_mul(c, b[i]));
    bp_trim(a);
    q[d] = std::move(c);
  }
  return q;
}

// ---------- conversions and ordering ----------

// requires min_exponents (0,0)
BP to_bp(const LaurentPoly& p) {
  BP r;
  for (const auto& [k, c] : p.terms()) {
    auto [el, em] = k;
    if (static_cast<int>(r.size()) <= el) r.resize(el + 1);
    if (static_cast<int>(r[el].size()) <= em) r[el].resize(em + 1);
    r[el][em] = c;
  }
  return r;
}

LaurentPoly from_bp(const BP& p) {
  LaurentPoly r;
  for (int i = 0; i < static_cast<int>(p.size()); ++i)
    for (int j = 0; j < static_cast<int>(p[i].size()); ++j)
      if (p[i][j] != 0) r.set({i, j}, p[i][j]);
  return r;
}

bool grlex_less(LaurentPoly::Key a, LaurentPoly::Key b) {
  int da = a.first + a.second, db = b.first + b.second;
  if (da != db) return da < db;
  return a < b;
}

LaurentPoly::Key grlex_max_key(const LaurentPoly& p) {
  auto it = p.terms().begin();
  LaurentPoly::Key best = it->first;
  for (++it; it != p.terms().end(); ++it)
    if (grlex_less(best, it->first)) best = it->first;
  return best;
}

// make the graded-lex leading coefficient positive
LaurentPoly grlex_normalize(LaurentPoly p) {
  if (p.is_zero()) return p;
  if (p.terms().at(grlex_max_key(p)) < 0) return -p;
  return p;
}

LaurentPoly pure_part(const LaurentPoly& p) {
  auto [el, em] = p.min_exponents();
  return p.shifted(-el, -em);
}

Int int_content(const LaurentPoly& p) {
  Int g = 0;
  for (const auto& [k, c] : p.terms()) {
    g = gcd(g, c);
    if (g == 1) break;
  }
  return g;
}

LaurentPoly div_int(const LaurentPoly& p, const Int& c) {
  LaurentPoly r;
  for (const auto& [k, v] : p.terms()) {
    Int q = v / c;
    if (q * c != v) throw ring_error("inexact integer division");
    r.set(k, q);
  }
  return r;
}

Rational rat_pow(const Rational& r, int e) {
  using boost::multiprecision::pow;
  if (e == 0) return 1;
  unsigned ue = e < 0 ? static_cast<unsigned>(-static_cast<long>(e))
                      : static_cast<unsigned>(e);
  Int n = pow(numerator(r), ue);
  Int d = pow(denominator(r), ue);
  if (e < 0) {
    if (n == 0) throw ring_error("evaluation needs a negative power of zero");
    std::swap(n, d);
  }
  return Rational(n, d);
}

void append_var(std::ostream& os, bool& any, const char* v, int e) {
  if (e == 0) return;
  if (any) os << "*";
  any = true;
  os << v;
  if (e != 1) os << "^" << e;
}

void append_var_latex(std::ostream& os, const char* v, int e) {
  if (e == 0) return;
  os << v;
  if (e != 1) os << "^{" << e << "}";
}

}  // namespace

// ---------- LaurentPoly ----------

LaurentPoly LaurentPoly::monomial(Int c, int el, int em) {
  LaurentPoly p;
  if (c != 0) p.coeffs_[{el, em}] = std::move(c);
  return p;
}

bool LaurentPoly::is_one() const {
  return coeffs_.size() == 1 && coeffs_.begin()->first == Key{0, 0} &&
         coeffs_.begin()->second == 1;
}

LaurentPoly::Key LaurentPoly::min_exponents() const {
  if (coeffs_.empty()) return {0, 0};
  int el = coeffs_.begin()->first.first, em = coeffs_.begin()->first.second;
  for (const auto& [k, c] : coeffs_) {
    el = std::min(el, k.first);
    em = std::min(em, k.second);
  }
  return {el, em};
}

LaurentPoly::Key LaurentPoly::max_exponents() const {
  if (coeffs_.empty()) return {0, 0};
  int el = coeffs_.begin()->first.first, em = coeffs_.begin()->first.second;
  for (const auto& [k, c] : coeffs_) {
    el = std::max(el, k.first);
    em = std::max(em, k.second);
  }
  return {el, em};
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [k, c] : coeffs_) r.coeffs_[k] = -c;
  return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (const auto& [k, c] : o.coeffs_) {
    auto it = r.coeffs_.find(k);
    if (it == r.coeffs_.end()) {
      r.coeffs_[k] = c;
    } else {
      it->second += c;
      if (it->second == 0) r.coeffs_.erase(it);
    }
  }
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  return *this + (-o);
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  for (const auto& [ka, ca] : coeffs_)
    for (const auto& [kb, cb] : o.coeffs_) {
      Key k{ka.first + kb.first, ka.second + kb.second};
      auto it = r.coeffs_.find(k);
      if (it == r.coeffs_.end()) {
        Int v = ca * cb;
        if (v != 0) r.coeffs_[k] = std::move(v);
      } else {
        it->second += ca * cb;
        if (it->second == 0) r.coeffs_.erase(it);
      }
    }
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
  LaurentPoly r(1), b = *this;
  while (e) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

LaurentPoly LaurentPoly::shifted(int el, int em) const {
  LaurentPoly r;
  for (const auto& [k, c] : coeffs_)
    r.coeffs_[{k.first + el, k.second + em}] = c;
  return r;
}

Rational LaurentPoly::eval(const Rational& lv, const Rational& mv) const {
  Rational s = 0;
  for (const auto& [k, c] : coeffs_)
    s += Rational(c) * rat_pow(lv, k.first) * rat_pow(mv, k.second);
  return s;
}

void LaurentPoly::set(Key k, Int c) {
  if (c == 0)
    coeffs_.erase(k);
  else
    coeffs_[k] = std::move(c);
}

std::string LaurentPoly::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    const bool neg = it->second < 0;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    Int ac = neg ? Int(-it->second) : it->second;
    auto [el, em] = it->first;
    if (el == 0 && em == 0) {
      os << ac;
    } else {
      if (ac != 1) os << ac << "*";
      bool any = false;
      append_var(os, any, "l", el);
      append_var(os, any, "m", em);
    }
  }
  return os.str();
}

std::string LaurentPoly::latex() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    const bool neg = it->second < 0;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    Int ac = neg ? Int(-it->second) : it->second;
    auto [el, em] = it->first;
    if (el == 0 && em == 0) {
      os << ac;
    } else {
      if (ac != 1) os << ac;
      append_var_latex(os, "l", el);
      append_var_latex(os, "m", em);
    }
  }
  return os.str();
}

LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() && b.is_zero()) return LaurentPoly();
  if (a.is_zero()) return grlex_normalize(pure_part(b));
  if (b.is_zero()) return grlex_normalize(pure_part(a));
  BP g = bp_gcd(to_bp(pure_part(a)), to_bp(pure_part(b)));
  return grlex_normalize(from_bp(g));
}

LaurentPoly laurent_div_exact(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw ring_error("division by zero");
  if (a.is_zero()) return LaurentPoly();
  auto [al, am] = a.min_exponents();
  auto [bl, bm] = b.min_exponents();
  BP q = bp_div_exact(to_bp(a.shifted(-al, -am)), to_bp(b.shifted(-bl, -bm)));
  return from_bp(q).shifted(al - bl, am - bm);
}

// ---------- RatFunc ----------

RatFunc::RatFunc(LaurentPoly num, LaurentPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

void RatFunc::normalize() {
  if (den_.is_zero()) throw ring_error("division by zero");
  if (num_.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  auto [nl, nm] = num_.min_exponents();
  auto [dl, dm] = den_.min_exponents();
  LaurentPoly np = num_.shifted(-nl, -nm);
  LaurentPoly dp = den_.shifted(-dl, -dm);
  LaurentPoly g = laurent_gcd(np, dp);
  if (!g.is_one()) {
    np = laurent_div_exact(np, g);
    dp = laurent_div_exact(dp, g);
  }
  Int cg = gcd(int_content(np), int_content(dp));
  if (cg > 1) {
    np = div_int(np, cg);
    dp = div_int(dp, cg);
  }
  if (dp.terms().at(grlex_max_key(dp)) < 0) {
    np = -np;
    dp = -dp;
  }
  num_ = np.shifted(nl - dl, nm - dm);
  den_ = std::move(dp);
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
  return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.is_zero()) throw ring_error("division by zero");
  return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::pow(int e) const {
  if (e >= 0) {
    RatFunc r(1), b = *this;
    unsigned ue = e;
    while (ue) {
      if (ue & 1) r *= b;
      ue >>= 1;
      if (ue) b *= b;
    }
    return r;
  }
  if (is_zero()) throw ring_error("negative power of zero");
  return RatFunc(den_, num_).pow(-e);
}

Rational RatFunc::eval(const Rational& lv, const Rational& mv) const {
  Rational d = den_.eval(lv, mv);
  if (d == 0) throw ring_error("evaluation at a pole of the denominator");
  return num_.eval(lv, mv) / d;
}

std::string RatFunc::str() const {
  if (den_.is_one()) return num_.str();
  std::string n = num_.is_monomial() ? num_.str() : "(" + num_.str() + ")";
  std::string d = den_.is_monomial() ? den_.str() : "(" + den_.str() + ")";
  return n + " / " + d;
}

std::string RatFunc::latex() const {
  if (den_.is_one()) return num_.latex();
  return "\\frac{" + num_.latex() + "}{" + den_.latex() + "}";
}

LaurentPoly delta_poly() {
  LaurentPoly d;
  d.set({1, -1}, -1);
  d.set({-1, -1}, -1);
  return d;
}

}  // namespace bondskein
