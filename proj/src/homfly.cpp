#include "bondskein/homfly.hpp"

#include <cstdlib>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bondskein/moves.hpp"

namespace bondskein {

namespace {

std::unordered_map<std::string, LaurentPoly>& memo() {
  static std::unordered_map<std::string, LaurentPoly> m;
  return m;
}

// connected parts of the incidence structure, free loops stripped
std::vector<BondedDiagram> connected_parts(const BondedDiagram& d) {
  std::map<SiteRef, std::vector<int>> at_site;
  for (const auto& [id, e] : d.edges)
    for (int k : {0, 1}) at_site[e.at[k].site].push_back(id);
  std::map<int, int> comp;
  int np = 0;
  for (const auto& [id0, e0] : d.edges) {
    if (comp.count(id0)) continue;
    std::vector<int> queue{id0};
    comp[id0] = np;
    while (!queue.empty()) {
      int e = queue.back();
      queue.pop_back();
      for (int k : {0, 1})
        for (int n : at_site.at(d.edges.at(e).at[k].site))
          if (!comp.count(n)) {
            comp[n] = np;
            queue.push_back(n);
          }
    }
    ++np;
  }
  std::vector<BondedDiagram> parts(np);
  for (const auto& [id, e] : d.edges) {
    BondedDiagram& p = parts[comp.at(id)];
    p.edges[id] = e;
    for (int k : {0, 1}) {
      SiteRef s = e.at[k].site;
      if (s.kind == SiteKind::Crossing)
        p.crossings[s.id] = d.crossings.at(s.id);
      else
        p.vertices[s.id] = d.vertices.at(s.id);
    }
    if (e.bond >= 0) p.bonds[e.bond] = d.bonds.at(e.bond);
  }
  return parts;
}

// first crossing whose first passage (components walked in order, following
// orientation) runs under; -1 when the diagram is descending.  Depends only
// on the shadow, so switching the reported crossing shrinks the count.
int first_under(const BondedDiagram& d) {
  std::set<int> seen;
  for (const auto& comp : link_components(d))
    for (int e : comp) {
      Port p = d.edges.at(e).at[1];
      if (!seen.insert(p.site.id).second) continue;
      const Crossing& c = d.crossings.at(p.site.id);
      if (p.slot % 2 != c.over % 2) return p.site.id;
    }
  return -1;
}

LaurentPoly expand(BondedDiagram d) {
  int loops = d.free_loops;
  d.free_loops = 0;
  if (d.edges.empty()) {
    if (loops == 0) throw diagram_error("the empty diagram has no polynomial");
    return delta_poly().pow(unsigned(loops - 1));
  }
  LaurentPoly scale = delta_poly().pow(unsigned(loops));
  std::vector<BondedDiagram> parts = connected_parts(d);
  if (parts.size() > 1) {
    LaurentPoly r = scale * delta_poly().pow(unsigned(parts.size() - 1));
    for (BondedDiagram& p : parts) r *= expand(std::move(p));
    return r;
  }

  std::string key = canonical_code(d);
  if (auto it = memo().find(key); it != memo().end()) return scale * it->second;

  LaurentPoly val;
  int x = first_under(d);
  if (x < 0) {
    // descending diagrams fall apart into unlinks
    val = delta_poly().pow(unsigned(link_components(d).size() - 1));
  } else {
    int sign = crossing_sign(d, x);
    LaurentPoly sw = expand(simplify(switch_crossing(d, x)));
    LaurentPoly sm = expand(simplify(smooth_crossing(d, x)));
    if (sign > 0)
      val = -(LaurentPoly::l(-2) * sw) - LaurentPoly::monomial(1, -1, 1) * sm;
    else
      val = -(LaurentPoly::l(2) * sw) - LaurentPoly::monomial(1, 1, 1) * sm;
  }
  memo()[key] = val;
  return scale * val;
}

}  // namespace

BondedDiagram switch_crossing(const BondedDiagram& d, int x) {
  BondedDiagram r = d;
  auto it = r.crossings.find(x);
  if (it == r.crossings.end())
    throw diagram_error("no crossing x" + std::to_string(x));
  it->second.over = (it->second.over + 1) % 4;
  return r;
}

BondedDiagram smooth_crossing(const BondedDiagram& d, int x) {
  auto it = d.crossings.find(x);
  if (it == d.crossings.end())
    throw diagram_error("no crossing x" + std::to_string(x));
  const Crossing& c = it->second;
  for (const Dart& s : c.slots)
    if (d.edges.at(s.edge).kind != EdgeKind::Link)
      throw diagram_error("cannot smooth a crossing on a bond segment");
  // each incoming strand turns onto the adjacent outgoing one
  std::vector<std::pair<Dart, Dart>> joins;
  for (int i = 0; i < 4; ++i) {
    if (c.slots[i].end != 1) continue;
    int j = c.slots[(i + 1) % 4].end == 0 ? (i + 1) % 4 : (i + 3) % 4;
    joins.push_back({c.slots[i], c.slots[j]});
  }
  return fuse_pairs(d, {SiteRef{SiteKind::Crossing, x}}, {}, joins);
}

int max_crossings() {
  const char* s = std::getenv("BONDSKEIN_MAX_CROSSINGS");
  if (!s || !*s) return 20;
  char* end = nullptr;
  long v = std::strtol(s, &end, 10);
  if (end == s || *end != '\0' || v < 0)
    throw diagram_error("BONDSKEIN_MAX_CROSSINGS must be a nonnegative integer");
  return int(v);
}

LaurentPoly homfly(const BondedDiagram& d) {
  require_valid(d);
  if (!d.bonds.empty())
    throw diagram_error(
        "the polynomial is defined for link diagrams; smooth or cut the bonds "
        "first");
  BondedDiagram s = simplify(d);
  if (int(s.crossings.size()) > max_crossings())
    throw diagram_error("diagram keeps " + std::to_string(s.crossings.size()) +
                        " crossings after simplification, over the cap of " +
                        std::to_string(max_crossings()) +
                        " (raise BONDSKEIN_MAX_CROSSINGS to expand it)");
  return expand(std::move(s));
}

}  // namespace bondskein
