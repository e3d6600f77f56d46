#include "bondskein/bonded.hpp"

#include <nlohmann/json.hpp>

#include "bondskein/fixtures.hpp"
#include "bondskein/homfly.hpp"
#include "bondskein/moves.hpp"

namespace bondskein {

namespace {

std::string gen_latex(GeneratorKind k) {
  switch (k) {
    case GeneratorKind::Theta: return "\\Theta";
    case GeneratorKind::ThetaBar: return "\\bar\\Theta";
    case GeneratorKind::H: return "H";
    case GeneratorKind::HBar: return "\\bar{H}";
  }
  throw diagram_error("unknown generator kind");
}

std::string multiset_str(const GeneratorMultiset& ms) {
  std::string s;
  for (const auto& [g, mult] : ms) {
    if (!s.empty()) s += " ";
    s += to_string(g.kind) + "_" + std::to_string(g.color);
    if (mult > 1) s += "^" + std::to_string(mult);
  }
  return s;
}

}  // namespace

std::string to_string(GeneratorKind k) {
  switch (k) {
    case GeneratorKind::Theta: return "Theta";
    case GeneratorKind::ThetaBar: return "ThetaBar";
    case GeneratorKind::H: return "H";
    case GeneratorKind::HBar: return "HBar";
  }
  throw diagram_error("unknown generator kind");
}

std::string to_string(Basis b) {
  return b == Basis::Rigid ? "rigid" : "nonrigid";
}

InvariantElement& InvariantElement::add(const GeneratorMultiset& ms,
                                        const RatFunc& c) {
  RatFunc& slot = terms[ms];
  slot += c;
  if (slot.is_zero()) terms.erase(ms);
  return *this;
}

InvariantElement InvariantElement::operator+(const InvariantElement& o) const {
  if (basis != o.basis)
    throw diagram_error("cannot add elements over different bases");
  InvariantElement r = *this;
  for (const auto& [ms, c] : o.terms) r.add(ms, c);
  return r;
}

InvariantElement InvariantElement::operator*(const RatFunc& c) const {
  InvariantElement r{basis, {}};
  if (c.is_zero()) return r;
  for (const auto& [ms, v] : terms) r.terms[ms] = v * c;
  return r;
}

std::string InvariantElement::str() const {
  if (terms.empty()) return "0";
  std::string s;
  for (const auto& [ms, c] : terms) {
    if (!s.empty()) s += " + ";
    if (ms.empty())
      s += c.str();
    else
      s += "(" + c.str() + ") " + multiset_str(ms);
  }
  return s;
}

std::string InvariantElement::latex() const {
  if (terms.empty()) return "0";
  std::string s;
  for (const auto& [ms, c] : terms) {
    if (!s.empty()) s += " + ";
    std::string gens;
    for (const auto& [g, mult] : ms) {
      if (!gens.empty()) gens += "\\,";
      gens += gen_latex(g.kind) + "_{" + std::to_string(g.color) + "}";
      if (mult > 1) gens += "^{" + std::to_string(mult) + "}";
    }
    if (gens.empty())
      s += c.latex();
    else
      s += "\\left(" + c.latex() + "\\right)" + gens;
  }
  return s;
}

std::string InvariantElement::json() const {
  nlohmann::json j;
  j["basis"] = to_string(basis);
  j["terms"] = nlohmann::json::array();
  for (const auto& [ms, c] : terms) {
    nlohmann::json t;
    t["multiset"] = nlohmann::json::array();
    for (const auto& [g, mult] : ms)
      t["multiset"].push_back({{"kind", to_string(g.kind)},
                               {"color", g.color},
                               {"mult", mult}});
    t["num"] = c.num().str();
    t["den"] = c.den().str();
    j["terms"].push_back(t);
  }
  return j.dump(2);
}

BondedDiagram generator_diagram(GeneratorKind k, int color) {
  switch (k) {
    case GeneratorKind::Theta: return fixtures::theta(color);
    case GeneratorKind::ThetaBar: return fixtures::theta_bar(color);
    case GeneratorKind::H: return fixtures::handcuff(color);
    case GeneratorKind::HBar: return fixtures::handcuff_bar(color);
  }
  throw diagram_error("unknown generator kind");
}

const std::vector<CutTerm>& cut_terms(BondGeometry g) {
  // common denominator (l^2+1)^2 - l^2 m^2
  static const LaurentPoly denom = [] {
    LaurentPoly u = LaurentPoly::l(2) + LaurentPoly(1);
    return u * u - LaurentPoly::monomial(1, 2, 2);
  }();
  static const RatFunc main_c{LaurentPoly::monomial(1, 2, 2), denom};
  static const RatFunc cross_c{
      LaurentPoly::monomial(1, 3, 3),
      (LaurentPoly(1) + LaurentPoly::l(2)) * denom};
  static const std::vector<CutTerm> anti = {
      {Smoothing::Zero, GeneratorKind::H, main_c},
      {Smoothing::Zero, GeneratorKind::Theta, cross_c},
      {Smoothing::Infinity, GeneratorKind::Theta, main_c},
      {Smoothing::Infinity, GeneratorKind::H, cross_c},
  };
  static const std::vector<CutTerm> par = {
      {Smoothing::Zero, GeneratorKind::HBar, main_c},
      {Smoothing::Zero, GeneratorKind::ThetaBar, cross_c},
      {Smoothing::NegCrossing, GeneratorKind::ThetaBar, main_c},
      {Smoothing::NegCrossing, GeneratorKind::HBar, cross_c},
  };
  return g == BondGeometry::Antiparallel ? anti : par;
}

InvariantElement rigid_invariant(const BondedDiagram& d) {
  require_valid(d);
  if (d.bonds.empty()) {
    InvariantElement r{Basis::Rigid, {}};
    return r.add({}, RatFunc(homfly(d)));
  }
  BondedDiagram iso = isolate_all(d);
  std::vector<int> ids;
  for (const auto& [id, b] : iso.bonds) ids.push_back(id);
  int n = int(ids.size());
  std::vector<const std::vector<CutTerm>*> rows(n);
  for (int i = 0; i < n; ++i)
    rows[i] = &cut_terms(classify_bond(iso, ids[i]));

  std::map<std::vector<Smoothing>, RatFunc> residual;
  InvariantElement out{Basis::Rigid, {}};
  std::vector<int> pick(n, 0);
  while (true) {
    std::vector<Smoothing> sm(n);
    RatFunc coeff = delta();
    GeneratorMultiset ms;
    for (int i = 0; i < n; ++i) {
      const CutTerm& row = (*rows[i])[pick[i]];
      sm[i] = row.smoothing;
      coeff *= row.coeff;
      ms[Generator{row.generator, iso.bonds.at(ids[i]).color}] += 1;
    }
    auto [it, fresh] = residual.try_emplace(sm);
    if (fresh) {
      BondedDiagram r = iso;
      for (int i = 0; i < n; ++i) r = smooth_bond(r, ids[i], sm[i]);
      it->second = RatFunc(homfly(r));
    }
    out.add(ms, coeff * it->second);
    int i = 0;
    while (i < n && ++pick[i] == 4) pick[i++] = 0;
    if (i == n) break;
  }
  return out;
}

InvariantElement nonrigid_invariant(const BondedDiagram& d) {
  require_valid(d);
  InvariantElement out{Basis::NonRigid, {}};
  if (d.bonds.empty()) return out.add({}, RatFunc(homfly(d)));
  // no isolation needed: the zero smoothing deletes a bond whatever its
  // chain runs through
  GeneratorMultiset ms;
  RatFunc coeff = delta();
  const RatFunc per_bond{LaurentPoly::monomial(-1, 1, 1),
                         LaurentPoly(1) + LaurentPoly::l(2)};
  BondedDiagram r = d;
  std::vector<int> ids;
  for (const auto& [id, b] : d.bonds) ids.push_back(id);
  for (int id : ids) {
    ms[Generator{GeneratorKind::Theta, d.bonds.at(id).color}] += 1;
    coeff *= per_bond;
    r = smooth_bond(r, id, Smoothing::Zero);
  }
  return out.add(ms, coeff * RatFunc(homfly(r)));
}

InvariantElement nonrigid_closed_form(const BondedDiagram& d) {
  require_valid(d);
  InvariantElement out{Basis::NonRigid, {}};
  int n = int(d.bonds.size());
  if (n == 0) return out.add({}, RatFunc(homfly(d)));
  GeneratorMultiset ms;
  for (const auto& [id, b] : d.bonds)
    ms[Generator{GeneratorKind::Theta, b.color}] += 1;
  RatFunc coeff{LaurentPoly::monomial(n % 2 ? 1 : -1, n - 1, n - 1),
                (LaurentPoly(1) + LaurentPoly::l(2)).pow(unsigned(n - 1))};
  return out.add(ms, coeff * RatFunc(homfly(underlying_link(d))));
}

std::optional<BondedDiagram> g_map(const BondedDiagram& d, int bond,
                                   Smoothing which) {
  BondedDiagram iso = isolate_bond(d, bond);
  bool anti = classify_bond(iso, bond) == BondGeometry::Antiparallel;
  bool admits = which == Smoothing::Zero ||
                (anti == (which == Smoothing::Infinity));
  if (!admits) return std::nullopt;
  return smooth_bond(iso, bond, which);
}

std::array<std::array<RatFunc, 4>, 4> evaluation_matrix() {
  const std::array<Smoothing, 4> maps = {Smoothing::Zero, Smoothing::Infinity,
                                         Smoothing::PosCrossing,
                                         Smoothing::NegCrossing};
  const std::array<GeneratorKind, 4> gens = {
      GeneratorKind::Theta, GeneratorKind::ThetaBar, GeneratorKind::H,
      GeneratorKind::HBar};
  std::array<std::array<RatFunc, 4>, 4> m;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      BondedDiagram g = generator_diagram(gens[c]);
      auto img = g_map(g, g.bonds.begin()->first, maps[r]);
      m[r][c] = img ? RatFunc(homfly(*img)) : RatFunc(0);
    }
  return m;
}

namespace {

RatFunc det_minor(const std::array<std::array<RatFunc, 4>, 4>& m,
                  std::vector<int> rows, std::vector<int> cols) {
  if (rows.size() == 1) return m[rows[0]][cols[0]];
  RatFunc acc;
  for (size_t k = 0; k < cols.size(); ++k) {
    std::vector<int> sub(cols);
    sub.erase(sub.begin() + k);
    RatFunc term =
        m[rows[0]][cols[k]] * det_minor(m, {rows.begin() + 1, rows.end()}, sub);
    acc = k % 2 ? acc - term : acc + term;
  }
  return acc;
}

}  // namespace

RatFunc freeness_determinant() {
  return det_minor(evaluation_matrix(), {0, 1, 2, 3}, {0, 1, 2, 3});
}

}  // namespace bondskein
