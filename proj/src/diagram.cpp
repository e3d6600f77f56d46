#include "bondskein/diagram.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace bondskein {

std::string to_string(BondGeometry g) {
  return g == BondGeometry::Parallel ? "parallel" : "antiparallel";
}

std::string to_string(Smoothing s) {
  switch (s) {
    case Smoothing::Zero: return "zero";
    case Smoothing::Infinity: return "infinity";
    case Smoothing::PosCrossing: return "pos-crossing";
    case Smoothing::NegCrossing: return "neg-crossing";
  }
  return "?";
}

Dart BondedDiagram::slot_dart(SiteRef s, int slot) const {
  if (s.kind == SiteKind::Crossing) return crossings.at(s.id).slots[slot];
  return vertices.at(s.id).slots[slot];
}

void BondedDiagram::attach(Dart d, SiteRef s, int slot) {
  edges.at(d.edge).at[d.end] = Port{s, slot};
  if (s.kind == SiteKind::Crossing)
    crossings.at(s.id).slots[slot] = d;
  else
    vertices.at(s.id).slots[slot] = d;
}

int BondedDiagram::fresh_edge_id() const {
  return edges.empty() ? 0 : edges.rbegin()->first + 1;
}
int BondedDiagram::fresh_crossing_id() const {
  return crossings.empty() ? 0 : crossings.rbegin()->first + 1;
}
int BondedDiagram::fresh_vertex_id() const {
  return vertices.empty() ? 0 : vertices.rbegin()->first + 1;
}

bool BondedDiagram::bond_free(int bond) const {
  int n = 0;
  for (const auto& [id, e] : edges)
    if (e.kind == EdgeKind::Bond && e.bond == bond) {
      ++n;
      for (int k : {0, 1})
        if (e.at[k].site.kind != SiteKind::Vertex) return false;
    }
  return n == 1;
}

// ---------------------------------------------------------------- validate

std::vector<std::string> validate(const BondedDiagram& d) {
  std::vector<std::string> bad;
  auto say = [&](const std::string& s) { bad.push_back(s); };

  if (d.free_loops < 0) say("negative free loop count");

  // every edge end seen at exactly one slot, and that slot points back
  std::map<Dart, int> seen;
  auto scan_site = [&](SiteRef s, const Dart* slots, int n) {
    for (int i = 0; i < n; ++i) {
      Dart t = slots[i];
      auto it = d.edges.find(t.edge);
      if (it == d.edges.end() || t.end < 0 || t.end > 1) {
        say("slot " + std::to_string(i) + " of site " + std::to_string(s.id) +
            " references a missing edge");
        continue;
      }
      ++seen[t];
      if (it->second.at[t.end] != Port{s, i})
        say("edge " + std::to_string(t.edge) + " end " + std::to_string(t.end) +
            " does not point back at its slot");
    }
  };
  for (const auto& [id, x] : d.crossings)
    scan_site({SiteKind::Crossing, id}, x.slots.data(), 4);
  for (const auto& [id, v] : d.vertices)
    scan_site({SiteKind::Vertex, id}, v.slots.data(), 3);
  for (const auto& [id, e] : d.edges) {
    for (int k : {0, 1}) {
      Dart t{id, k};
      auto c = seen.find(t);
      if (c == seen.end())
        say("edge " + std::to_string(id) + " end " + std::to_string(k) +
            " is unattached");
      else if (c->second > 1)
        say("edge " + std::to_string(id) + " end " + std::to_string(k) +
            " is attached more than once");
    }
    if (e.kind == EdgeKind::Bond && !d.bonds.count(e.bond))
      say("edge " + std::to_string(id) + " references unknown bond " +
          std::to_string(e.bond));
  }
  if (!bad.empty()) return bad;  // structure too broken for deeper checks

  // crossings: opposite slots continue one strand
  for (const auto& [id, x] : d.crossings) {
    if (x.over < 0 || x.over > 3) say("crossing " + std::to_string(id) + " has a bad over index");
    for (int i : {0, 1}) {
      const Edge& a = d.edges.at(x.slots[i].edge);
      const Edge& b = d.edges.at(x.slots[i + 2].edge);
      if (a.kind != b.kind) {
        say("crossing " + std::to_string(id) + " mixes a link strand with a bond strand");
        continue;
      }
      if (a.kind == EdgeKind::Link) {
        if (x.slots[i].end == x.slots[i + 2].end)
          say("crossing " + std::to_string(id) + " has an orientation conflict on strand " + std::to_string(i));
      } else if (a.bond != b.bond) {
        say("crossing " + std::to_string(id) + " joins segments of different bonds");
      }
    }
  }

  // vertices: one bond end, a link strand passing through
  for (const auto& [id, v] : d.vertices) {
    int nbond = 0;
    std::vector<int> linkbits;
    for (const Dart& t : v.slots) {
      const Edge& e = d.edges.at(t.edge);
      if (e.kind == EdgeKind::Bond)
        ++nbond;
      else
        linkbits.push_back(t.end);
    }
    if (nbond != 1)
      say("vertex " + std::to_string(id) + " must have exactly one bond end, has " + std::to_string(nbond));
    else if (linkbits[0] == linkbits[1])
      say("vertex " + std::to_string(id) + " has an orientation conflict on its link strand");
  }
  if (!bad.empty()) return bad;

  // bond chains: each bond is a path between two distinct vertices
  std::map<int, std::vector<int>> bond_edges;
  for (const auto& [id, e] : d.edges)
    if (e.kind == EdgeKind::Bond) bond_edges[e.bond].push_back(id);
  for (const auto& [bid, b] : d.bonds) {
    if (b.color < 1) say("bond " + std::to_string(bid) + " has a non-positive color");
    auto it = bond_edges.find(bid);
    if (it == bond_edges.end()) {
      say("bond " + std::to_string(bid) + " has no segments");
      continue;
    }
    int vertex_ends = 0;
    std::set<int> endpoints;
    for (int e : it->second)
      for (int k : {0, 1}) {
        Port p = d.edges.at(e).at[k];
        if (p.site.kind == SiteKind::Vertex) {
          ++vertex_ends;
          endpoints.insert(p.site.id);
        }
      }
    if (vertex_ends != 2) {
      say("bond " + std::to_string(bid) + " must have exactly two vertex ends, has " + std::to_string(vertex_ends));
      continue;
    }
    if (endpoints.size() != 2)
      say("bond " + std::to_string(bid) + " attaches both ends to one vertex");
    // connectivity: walk from one vertex end through crossings
    int start = -1, start_end = -1;
    for (int e : it->second)
      for (int k : {0, 1})
        if (d.edges.at(e).at[k].site.kind == SiteKind::Vertex && start < 0) {
          start = e;
          start_end = k;
        }
    std::set<int> walked;
    int cur = start, far = 1 - start_end;
    while (true) {
      walked.insert(cur);
      Port p = d.edges.at(cur).at[far];
      if (p.site.kind == SiteKind::Vertex) break;
      Dart nxt = d.crossings.at(p.site.id).slots[(p.slot + 2) % 4];
      if (walked.count(nxt.edge)) break;  // defensive; caught below
      cur = nxt.edge;
      far = 1 - nxt.end;
    }
    if (walked.size() != it->second.size())
      say("bond " + std::to_string(bid) + " segments do not form one chain");
  }
  for (const auto& [bid, es] : bond_edges)
    if (!d.bonds.count(bid))
      say("segments reference bond " + std::to_string(bid) + " which has no record");
  if (!bad.empty()) return bad;

  // planarity: V - E + F = 2 on every connected component
  std::map<SiteRef, SiteRef> parent;
  std::function<SiteRef(SiteRef)> find = [&](SiteRef s) {
    while (parent.at(s) != s) s = parent.at(s) = parent.at(parent.at(s));
    return s;
  };
  for (const auto& [id, x] : d.crossings) parent.insert({{SiteKind::Crossing, id}, {SiteKind::Crossing, id}});
  for (const auto& [id, v] : d.vertices) parent.insert({{SiteKind::Vertex, id}, {SiteKind::Vertex, id}});
  for (const auto& [id, e] : d.edges) {
    SiteRef a = find(e.at[0].site), b = find(e.at[1].site);
    if (a != b) parent[a] = b;
  }
  std::map<SiteRef, std::array<int, 3>> vef;  // component root -> V, E, F
  for (const auto& [s, p] : parent) vef[find(s)][0]++;
  for (const auto& [id, e] : d.edges) vef[find(e.at[0].site)][1]++;
  for (const auto& face : faces(d))
    vef[find(d.port_of(face.front()).site)][2]++;
  for (const auto& [root, c] : vef)
    if (c[0] - c[1] + c[2] != 2)
      say("component at site " + std::to_string(root.id) + " is not planar: V-E+F = " +
          std::to_string(c[0] - c[1] + c[2]));

  return bad;
}

void require_valid(const BondedDiagram& d) {
  auto bad = validate(d);
  if (!bad.empty()) {
    std::string msg = "invalid diagram:";
    for (const auto& s : bad) msg += "\n  " + s;
    throw diagram_error(msg);
  }
}

// ------------------------------------------------------------------- faces

Dart face_next(const BondedDiagram& d, Dart a) {
  Dart other{a.edge, 1 - a.end};
  Port p = d.port_of(other);
  int n = d.site_degree(p.site);
  return d.slot_dart(p.site, (p.slot + 1) % n);
}

std::vector<std::vector<Dart>> faces(const BondedDiagram& d) {
  std::set<Dart> togo;
  for (const auto& [id, e] : d.edges) {
    togo.insert({id, 0});
    togo.insert({id, 1});
  }
  std::vector<std::vector<Dart>> out;
  while (!togo.empty()) {
    Dart start = *togo.begin();
    std::vector<Dart> orbit;
    Dart cur = start;
    do {
      orbit.push_back(cur);
      togo.erase(cur);
      cur = face_next(d, cur);
    } while (cur != start);
    out.push_back(std::move(orbit));
  }
  return out;
}

// -------------------------------------------------------------- components

namespace {

// the edge that continues e's strand past its `end` attachment
Dart strand_continuation(const BondedDiagram& d, int e, int end) {
  Port p = d.edges.at(e).at[end];
  if (p.site.kind == SiteKind::Crossing)
    return d.slot_dart(p.site, (p.slot + 2) % 4);
  const Vertex& v = d.vertices.at(p.site.id);
  for (int i = 0; i < 3; ++i) {
    if (i == p.slot) continue;
    if (d.edges.at(v.slots[i].edge).kind == d.edges.at(e).kind) return v.slots[i];
  }
  throw diagram_error("no strand continuation at vertex " + std::to_string(p.site.id));
}

}  // namespace

std::vector<std::vector<int>> link_components(const BondedDiagram& d) {
  std::set<int> togo;
  for (const auto& [id, e] : d.edges)
    if (e.kind == EdgeKind::Link) togo.insert(id);
  std::vector<std::vector<int>> out;
  while (!togo.empty()) {
    int start = *togo.begin();
    std::vector<int> cyc;
    int cur = start;
    do {
      cyc.push_back(cur);
      togo.erase(cur);
      Dart nxt = strand_continuation(d, cur, 1);
      if (nxt.end != 0) throw diagram_error("broken orientation at edge " + std::to_string(cur));
      cur = nxt.edge;
    } while (cur != start);
    out.push_back(std::move(cyc));
  }
  return out;
}

std::array<int, 2> bond_endpoints(const BondedDiagram& d, int bond) {
  std::array<int, 2> vs{-1, -1};
  int n = 0;
  for (const auto& [id, e] : d.edges)
    if (e.kind == EdgeKind::Bond && e.bond == bond)
      for (int k : {0, 1})
        if (e.at[k].site.kind == SiteKind::Vertex) {
          if (n < 2) vs[n] = e.at[k].site.id;
          ++n;
        }
  if (n != 2) throw diagram_error("bond " + std::to_string(bond) + " does not have two vertex ends");
  if (vs[0] > vs[1]) std::swap(vs[0], vs[1]);
  return vs;
}

std::vector<int> bond_chain(const BondedDiagram& d, int bond) {
  // start at the smaller endpoint vertex
  auto vs = bond_endpoints(d, bond);
  const Vertex& v = d.vertices.at(vs[0]);
  Dart cur{-1, 0};
  for (const Dart& t : v.slots)
    if (d.edges.at(t.edge).kind == EdgeKind::Bond) cur = t;
  if (cur.edge < 0 || d.edges.at(cur.edge).bond != bond)
    throw diagram_error("bond chain walk lost at vertex " + std::to_string(vs[0]));
  std::vector<int> chain;
  while (true) {
    chain.push_back(cur.edge);
    Port far = d.edges.at(cur.edge).at[1 - cur.end];
    if (far.site.kind == SiteKind::Vertex) break;
    cur = d.slot_dart(far.site, (far.slot + 2) % 4);
  }
  return chain;
}

int crossing_sign(const BondedDiagram& d, int x) {
  const Crossing& c = d.crossings.at(x);
  for (const Dart& t : c.slots)
    if (d.edges.at(t.edge).kind != EdgeKind::Link)
      throw diagram_error("crossing " + std::to_string(x) + " involves a bond strand");
  int over = c.over % 2;
  int over_out = c.slots[over].end == 0 ? over : over + 2;
  int under_out = c.slots[1 - over].end == 0 ? 1 - over : 3 - over;
  return over_out % 4 == (under_out + 1) % 4 ? 1 : -1;
}

// ---------------------------------------------------- bond classification

namespace {

// slot of the (unique) bond end at an endpoint vertex of the given bond
int bond_slot_at(const BondedDiagram& d, int vertex, int bond) {
  const Vertex& v = d.vertices.at(vertex);
  for (int i = 0; i < 3; ++i) {
    const Edge& e = d.edges.at(v.slots[i].edge);
    if (e.kind == EdgeKind::Bond && e.bond == bond) return i;
  }
  throw diagram_error("bond " + std::to_string(bond) + " does not end at vertex " +
                      std::to_string(vertex));
}

}  // namespace

BondGeometry classify_bond(const BondedDiagram& d, int bond) {
  // walk the face on one side of the bond: the face steps just before the
  // walk enters the chain and just after it leaves traverse the link edges
  // flanking the two endpoint vertices; both run along the strand or both
  // against it exactly when the flows are antiparallel
  auto vs = bond_endpoints(d, bond);
  int s0 = bond_slot_at(d, vs[0], bond);
  int s1 = bond_slot_at(d, vs[1], bond);
  Dart succ = d.slot_dart({SiteKind::Vertex, vs[1]}, (s1 + 1) % 3);
  Dart before = d.slot_dart({SiteKind::Vertex, vs[0]}, (s0 + 2) % 3);
  Dart pred{before.edge, 1 - before.end};
  bool succ_along = succ.end == 1;
  bool pred_along = pred.end == 1;
  return succ_along == pred_along ? BondGeometry::Antiparallel
                                  : BondGeometry::Parallel;
}

BondGeometry classify_bond_local(const BondedDiagram& d, int bond) {
  // at each endpoint, look at the link end one slot counterclockwise from
  // the bond; the flow bits agree exactly for antiparallel bonds
  auto vs = bond_endpoints(d, bond);
  int flow[2];
  for (int k : {0, 1}) {
    int s = bond_slot_at(d, vs[k], bond);
    flow[k] = d.slot_dart({SiteKind::Vertex, vs[k]}, (s + 1) % 3).end;
  }
  return flow[0] == flow[1] ? BondGeometry::Antiparallel : BondGeometry::Parallel;
}

// ------------------------------------------------------------- fuse_pairs

BondedDiagram fuse_pairs(const BondedDiagram& d,
                         const std::vector<SiteRef>& dead_sites,
                         const std::vector<int>& dead_edges,
                         const std::vector<std::pair<Dart, Dart>>& joins) {
  std::set<SiteRef> dead(dead_sites.begin(), dead_sites.end());
  std::set<int> gone(dead_edges.begin(), dead_edges.end());
  for (int e : gone)
    for (int k : {0, 1})
      if (!dead.count(d.edges.at(e).at[k].site))
        throw diagram_error("deleted edge " + std::to_string(e) + " still attached to a surviving site");

  std::map<Dart, Dart> partner;
  for (const auto& [a, b] : joins) {
    if (gone.count(a.edge) || gone.count(b.edge))
      throw diagram_error("fuse pair references a deleted edge");
    const Edge& ea = d.edges.at(a.edge);
    const Edge& eb = d.edges.at(b.edge);
    if (ea.kind != eb.kind || (ea.kind == EdgeKind::Bond && ea.bond != eb.bond))
      throw diagram_error("fuse pair joins incompatible edges");
    if (ea.kind == EdgeKind::Link && a.end == b.end)
      throw diagram_error("orientation conflict: cannot join two link " +
                          std::string(a.end ? "heads" : "tails"));
    if (partner.count(a) || partner.count(b))
      throw diagram_error("edge end used in two fuse pairs");
    partner[a] = b;
    partner[b] = a;
  }
  // all surviving ends on dead sites must be reconnected
  for (const auto& [id, e] : d.edges) {
    if (gone.count(id)) continue;
    for (int k : {0, 1})
      if (dead.count(e.at[k].site) && !partner.count({id, k}))
        throw diagram_error("edge " + std::to_string(id) + " left dangling by fuse");
  }
  for (const auto& [a, b] : joins)
    if (!dead.count(d.port_of(a).site) || !dead.count(d.port_of(b).site))
      throw diagram_error("fuse pair end is not at a deleted site");

  BondedDiagram r = d;
  for (SiteRef s : dead) {
    if (s.kind == SiteKind::Crossing)
      r.crossings.erase(s.id);
    else
      r.vertices.erase(s.id);
  }
  for (int e : gone) r.edges.erase(e);

  std::set<int> done;
  for (const auto& [id0, e0] : d.edges) {
    if (gone.count(id0) || done.count(id0)) continue;
    if (!partner.count({id0, 0}) && !partner.count({id0, 1})) continue;

    // follow joins in one direction until an unjoined end or a loop
    auto walk = [&](Dart from) -> std::pair<Dart, bool> {
      Dart cur = from;
      while (partner.count(cur)) {
        Dart hop = partner.at(cur);
        cur = Dart{hop.edge, 1 - hop.end};
        if (cur.edge == from.edge && cur.end == from.end) return {cur, true};
      }
      return {cur, false};
    };
    auto [t0, looped] = walk({id0, 0});
    if (looped) {
      // closed chain: collect and turn into a free loop
      Dart cur{id0, 0};
      do {
        done.insert(cur.edge);
        if (d.edges.at(cur.edge).kind != EdgeKind::Link)
          throw diagram_error("a bond chain closed into a loop");
        r.edges.erase(cur.edge);
        Dart hop = partner.at(cur);
        cur = Dart{hop.edge, 1 - hop.end};
      } while (cur.edge != id0);
      r.free_loops += 1;
      continue;
    }
    auto [t1, l1] = walk({id0, 1});
    (void)l1;
    // chain from t0's edge to t1's edge; collect edges and pick the survivor
    std::vector<int> chain;
    Dart cur = t0;  // unjoined end; traverse toward the other end
    while (true) {
      chain.push_back(cur.edge);
      done.insert(cur.edge);
      Dart far{cur.edge, 1 - cur.end};
      if (!partner.count(far)) break;
      cur = partner.at(far);  // the entry end of the next edge in the chain
    }
    int keep = *std::min_element(chain.begin(), chain.end());
    Edge merged = d.edges.at(keep);
    int b0, b1;
    if (merged.kind == EdgeKind::Link) {
      b0 = t0.end;
      b1 = t1.end;
      if (b0 == b1) throw diagram_error("orientation conflict while fusing a link strand");
    } else {
      b0 = 0;  // bonds are unoriented; renormalize the bit names
      b1 = 1;
    }
    merged.at[b0] = d.port_of(t0);
    merged.at[b1] = d.port_of(t1);
    for (int e : chain) r.edges.erase(e);
    r.edges[keep] = merged;
    // repoint the surviving sites
    auto repoint = [&](Port p, Dart nd) {
      if (p.site.kind == SiteKind::Crossing)
        r.crossings.at(p.site.id).slots[p.slot] = nd;
      else
        r.vertices.at(p.site.id).slots[p.slot] = nd;
    };
    repoint(merged.at[b0], Dart{keep, b0});
    repoint(merged.at[b1], Dart{keep, b1});
  }
  return r;
}

// ------------------------------------------------------------- smoothings

namespace {

// delete one bond outright, even when its chain runs through crossings: the
// endpoint vertices disappear (their link strands joined straight through),
// and so does every crossing the chain traverses
BondedDiagram delete_bond(const BondedDiagram& d, int bond) {
  std::vector<SiteRef> dead_sites;
  std::vector<int> dead_edges;
  std::vector<std::pair<Dart, Dart>> joins;
  for (const auto& [id, e] : d.edges)
    if (e.kind == EdgeKind::Bond && e.bond == bond) dead_edges.push_back(id);
  auto vs = bond_endpoints(d, bond);
  for (int v : {vs[0], vs[1]}) {
    int s = bond_slot_at(d, v, bond);
    dead_sites.push_back({SiteKind::Vertex, v});
    joins.push_back({d.slot_dart({SiteKind::Vertex, v}, (s + 1) % 3),
                     d.slot_dart({SiteKind::Vertex, v}, (s + 2) % 3)});
  }
  for (const auto& [id, x] : d.crossings) {
    auto ours = [&](const Dart& t) {
      const Edge& e = d.edges.at(t.edge);
      return e.kind == EdgeKind::Bond && e.bond == bond;
    };
    bool a = ours(x.slots[0]);  // strand through slots 0,2
    bool b = ours(x.slots[1]);  // strand through slots 1,3
    if (!a && !b) continue;
    dead_sites.push_back({SiteKind::Crossing, id});
    if (!a) joins.push_back({x.slots[0], x.slots[2]});
    if (!b) joins.push_back({x.slots[1], x.slots[3]});
  }
  BondedDiagram r = fuse_pairs(d, dead_sites, dead_edges, joins);
  r.bonds.erase(bond);
  return r;
}

}  // namespace

BondedDiagram smooth_bond(const BondedDiagram& d, int bond, Smoothing kind) {
  if (!d.bonds.count(bond)) throw diagram_error("unknown bond " + std::to_string(bond));
  BondGeometry geo = classify_bond(d, bond);
  if (kind == Smoothing::Infinity && geo != BondGeometry::Antiparallel)
    throw diagram_error("infinity smoothing would conflict with orientations on a parallel bond");
  if ((kind == Smoothing::PosCrossing || kind == Smoothing::NegCrossing) &&
      geo != BondGeometry::Parallel)
    throw diagram_error("crossing replacement applies to parallel bonds only");
  if (kind == Smoothing::Zero) return delete_bond(d, bond);

  auto chain = bond_chain(d, bond);
  auto vs = bond_endpoints(d, bond);
  // the four link ends around the bond's rectangle, counterclockwise
  std::array<Dart, 4> legs;
  int w = 0;
  for (int v : {vs[0], vs[1]}) {
    const Vertex& vx = d.vertices.at(v);
    int s = bond_slot_at(d, v, bond);
    legs[w++] = vx.slots[(s + 1) % 3];
    legs[w++] = vx.slots[(s + 2) % 3];
  }

  if (chain.size() == 1) {
    std::vector<SiteRef> dead{{SiteKind::Vertex, vs[0]}, {SiteKind::Vertex, vs[1]}};
    BondedDiagram r;
    if (kind == Smoothing::Infinity) {
      r = fuse_pairs(d, dead, {chain[0]}, {{legs[1], legs[2]}, {legs[3], legs[0]}});
    } else {
      r = d;
      r.vertices.erase(vs[0]);
      r.vertices.erase(vs[1]);
      r.edges.erase(chain[0]);
      int nx = r.fresh_crossing_id();
      Crossing c;
      c.slots = legs;
      c.over = kind == Smoothing::PosCrossing ? 0 : 1;
      r.crossings[nx] = c;
      for (int i = 0; i < 4; ++i)
        r.edges.at(legs[i].edge).at[legs[i].end] = Port{{SiteKind::Crossing, nx}, i};
    }
    r.bonds.erase(bond);
    return r;
  }

  // the chain still runs through crossings: instead of demanding isolation,
  // route two parallel link strands along the chain's course, each crossing
  // whatever the chain crossed.  per old crossing, the copy right of the
  // course (as travelled from the smaller endpoint) gets the station "east",
  // the left copy gets "west", and a short middle edge reconnects the strand
  // the chain used to cross.
  struct Station {
    int id;  // old crossing on the chain
    int a;   // its slot where the course enters from the vs[0] side
  };
  std::vector<Station> course;
  {
    Dart cur = d.slot_dart({SiteKind::Vertex, vs[0]}, bond_slot_at(d, vs[0], bond));
    while (true) {
      Port far = d.edges.at(cur.edge).at[1 - cur.end];
      if (far.site.kind == SiteKind::Vertex) break;
      course.push_back({far.site.id, far.slot});
      cur = d.slot_dart(far.site, (far.slot + 2) % 4);
    }
  }
  for (const Station& st : course) {
    const Crossing& c = d.crossings.at(st.id);
    for (int k : {1, 3}) {
      const Edge& e = d.edges.at(c.slots[(st.a + k) % 4].edge);
      if (e.kind == EdgeKind::Bond && e.bond == bond)
        throw diagram_error("bond " + std::to_string(bond) +
                            " crosses itself; a folded ribbon has no flat "
                            "course to cut along");
    }
  }

  BondedDiagram r = d;
  r.vertices.erase(vs[0]);
  r.vertices.erase(vs[1]);
  for (int e : chain) r.edges.erase(e);
  int n = int(course.size());
  std::vector<int> east(n), west(n);
  for (int i = 0; i < n; ++i) {
    const Crossing& c = d.crossings.at(course[i].id);
    int a = course[i].a;
    Dart se = c.slots[(a + 1) % 4], sw = c.slots[(a + 3) % 4];
    bool course_over = a % 2 == c.over % 2;
    r.crossings.erase(course[i].id);
    east[i] = r.fresh_crossing_id();
    r.crossings[east[i]].over = course_over ? 0 : 1;
    west[i] = r.fresh_crossing_id();
    r.crossings[west[i]].over = course_over ? 0 : 1;
    r.attach(se, {SiteKind::Crossing, east[i]}, 1);
    r.attach(sw, {SiteKind::Crossing, west[i]}, 3);
    const Edge& through = d.edges.at(se.edge);
    int mid = r.fresh_edge_id();
    r.edges[mid].kind = through.kind;
    r.edges[mid].bond = through.bond;
    if (through.kind != EdgeKind::Link || se.end == 1) {
      r.attach({mid, 0}, {SiteKind::Crossing, east[i]}, 3);
      r.attach({mid, 1}, {SiteKind::Crossing, west[i]}, 1);
    } else {
      r.attach({mid, 0}, {SiteKind::Crossing, west[i]}, 1);
      r.attach({mid, 1}, {SiteKind::Crossing, east[i]}, 3);
    }
  }
  // stitch each copy together from the vs[0]-side leg northward
  auto stitch = [&](const std::vector<int>& sts, Dart head_leg, bool up) {
    r.attach(head_leg, {SiteKind::Crossing, sts.front()}, 0);
    for (int i = 0; i + 1 < int(sts.size()); ++i) {
      int g = r.fresh_edge_id();
      r.edges[g].kind = EdgeKind::Link;
      r.attach({g, up ? 0 : 1}, {SiteKind::Crossing, sts[i]}, 2);
      r.attach({g, up ? 1 : 0}, {SiteKind::Crossing, sts[i + 1]}, 0);
    }
  };
  bool east_up = legs[1].end == 1;  // strand flows into the course at vs[0]
  bool west_up = legs[0].end == 1;
  stitch(east, legs[1], east_up);
  stitch(west, legs[0], west_up);
  if (kind == Smoothing::Infinity) {
    r.attach(legs[2], {SiteKind::Crossing, east.back()}, 2);
    r.attach(legs[3], {SiteKind::Crossing, west.back()}, 2);
  } else {
    // the replacement crossing sits past the last station, west copy over
    // east exactly as the isolated form puts legs[0]'s strand over legs[1]'s
    int nx = r.fresh_crossing_id();
    r.crossings[nx].over = kind == Smoothing::PosCrossing ? 0 : 1;
    int ge = r.fresh_edge_id();
    r.edges[ge].kind = EdgeKind::Link;
    r.attach({ge, east_up ? 0 : 1}, {SiteKind::Crossing, east.back()}, 2);
    r.attach({ge, east_up ? 1 : 0}, {SiteKind::Crossing, nx}, 1);
    int gw = r.fresh_edge_id();
    r.edges[gw].kind = EdgeKind::Link;
    r.attach({gw, west_up ? 0 : 1}, {SiteKind::Crossing, west.back()}, 2);
    r.attach({gw, west_up ? 1 : 0}, {SiteKind::Crossing, nx}, 0);
    r.attach(legs[2], {SiteKind::Crossing, nx}, 2);
    r.attach(legs[3], {SiteKind::Crossing, nx}, 3);
  }
  r.bonds.erase(bond);
  require_valid(r);
  return r;
}

BondedDiagram underlying_link(const BondedDiagram& d) {
  BondedDiagram r = d;
  std::vector<int> ids;
  for (const auto& [id, b] : r.bonds) ids.push_back(id);
  for (int id : ids) r = delete_bond(r, id);
  return r;
}

// ---------------------------------------------------------------- coloring

std::map<int, int> contact_distance_coloring(const BondedDiagram& d,
                                             bool count_destination) {
  auto comps = link_components(d);
  if (comps.size() + d.free_loops != 1)
    throw diagram_error("contact distance is defined along a single knot");
  std::vector<int> seq;  // bond ids in knot order, one entry per endpoint
  if (!comps.empty())
    for (int e : comps[0]) {
      Port p = d.edges.at(e).at[1];
      if (p.site.kind != SiteKind::Vertex) continue;
      const Vertex& v = d.vertices.at(p.site.id);
      for (const Dart& t : v.slots)
        if (d.edges.at(t.edge).kind == EdgeKind::Bond)
          seq.push_back(d.edges.at(t.edge).bond);
    }
  std::map<int, int> color;
  int n = static_cast<int>(seq.size());
  for (const auto& [bid, b] : d.bonds) {
    int i = -1, j = -1;
    for (int k = 0; k < n; ++k)
      if (seq[k] == bid) (i < 0 ? i : j) = k;
    if (j < 0) throw diagram_error("bond " + std::to_string(bid) + " endpoints not found on the knot");
    int a1 = j - i - 1;
    int a2 = n - (j - i) - 1;
    color[bid] = 1 + std::min(a1, a2) + (count_destination ? 1 : 0);
  }
  return color;
}

// --------------------------------------------------------- canonical code

namespace {

struct PartLabels {
  std::map<int, int> edge, cross, vert;
  // canonical end-bit names for bond edges: edge id -> end bit that plays 0
  std::map<int, int> bond_flip;
  int ne = 0, nc = 0, nv = 0;
};

// connected part of the site/edge incidence structure
struct Part {
  std::set<int> edges;
};

std::vector<Part> split_parts(const BondedDiagram& d) {
  std::map<int, int> comp;  // edge -> part index
  int np = 0;
  std::map<SiteRef, std::vector<int>> at_site;
  for (const auto& [id, e] : d.edges)
    for (int k : {0, 1}) at_site[e.at[k].site].push_back(id);
  for (const auto& [id0, e0] : d.edges) {
    if (comp.count(id0)) continue;
    std::vector<int> queue{id0};
    comp[id0] = np;
    while (!queue.empty()) {
      int e = queue.back();
      queue.pop_back();
      for (int k : {0, 1})
        for (int nb : at_site.at(d.edges.at(e).at[k].site))
          if (!comp.count(nb)) {
            comp[nb] = np;
            queue.push_back(nb);
          }
    }
    ++np;
  }
  std::vector<Part> parts(np);
  for (const auto& [e, p] : comp) parts[p].edges.insert(e);
  return parts;
}

void label_site(const BondedDiagram&, PartLabels& lab, SiteRef s) {
  if (s.kind == SiteKind::Crossing) {
    if (!lab.cross.count(s.id)) lab.cross[s.id] = lab.nc++;
  } else {
    if (!lab.vert.count(s.id)) lab.vert[s.id] = lab.nv++;
  }
}

// walk one link component from basepoint, assigning labels
void label_component(const BondedDiagram& d, PartLabels& lab, int base) {
  int cur = base;
  do {
    lab.edge[cur] = lab.ne++;
    label_site(d, lab, d.edges.at(cur).at[1].site);
    cur = strand_continuation(d, cur, 1).edge;
  } while (cur != base);
  // tail site of the basepoint is the head site of the last edge: labeled
  label_site(d, lab, d.edges.at(base).at[0].site);
}

Dart relabeled(const PartLabels& lab, Dart t) {
  auto f = lab.bond_flip.find(t.edge);
  int bit = t.end;
  if (f != lab.bond_flip.end()) bit = t.end == f->second ? 0 : 1;
  return Dart{lab.edge.at(t.edge), bit};
}

std::string part_code(const BondedDiagram& d, const Part& part, int base) {
  PartLabels lab;
  label_component(d, lab, base);
  std::map<int, int> bond_label;
  std::vector<int> bond_by_label;
  std::map<int, std::vector<int>> bond_walk;  // chain edges in canonical order

  auto walk_bond = [&](int b, int start_vertex) {
    bond_label[b] = static_cast<int>(bond_by_label.size());
    bond_by_label.push_back(b);
    label_site(d, lab, {SiteKind::Vertex, start_vertex});
    const Vertex& v = d.vertices.at(start_vertex);
    Dart cur{};
    for (const Dart& t : v.slots)
      if (d.edges.at(t.edge).kind == EdgeKind::Bond) cur = t;
    while (true) {
      lab.edge[cur.edge] = lab.ne++;
      lab.bond_flip[cur.edge] = cur.end;
      bond_walk[b].push_back(cur.edge);
      Port far = d.edges.at(cur.edge).at[1 - cur.end];
      label_site(d, lab, far.site);
      if (far.site.kind == SiteKind::Vertex) break;
      cur = d.slot_dart(far.site, (far.slot + 2) % 4);
    }
  };

  // grow outward from the base component until the whole part is labeled.
  // priority: unlabeled link components seen from labeled edge ends, then
  // bonds hanging off labeled vertices, then bonds seen only where their
  // chain crosses labeled strands. every choice is made through the labels
  // already assigned, never through the arbitrary input ids.
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::pair<int, int>> order(lab.edge.size());
    for (const auto& [old_id, new_id] : lab.edge) order[new_id] = {new_id, old_id};
    for (const auto& [new_id, old_id] : order) {
      int flip = 0;
      if (auto f = lab.bond_flip.find(old_id); f != lab.bond_flip.end()) flip = f->second;
      for (int canon_end : {1, 0}) {
        int k = lab.bond_flip.count(old_id) ? (canon_end == 0 ? flip : 1 - flip)
                                            : canon_end;
        Port p = d.edges.at(old_id).at[k];
        int deg = d.site_degree(p.site);
        int anchor = -1;
        Dart best{};
        for (int i = 0; i < deg; ++i) {
          Dart t = d.slot_dart(p.site, i);
          if (!lab.edge.count(t.edge)) continue;
          Dart rd = relabeled(lab, t);
          if (anchor < 0 || rd < best) {
            best = rd;
            anchor = i;
          }
        }
        for (int i = 0; i < deg && anchor >= 0; ++i) {
          Dart t = d.slot_dart(p.site, (anchor + i) % deg);
          if (!lab.edge.count(t.edge) &&
              d.edges.at(t.edge).kind == EdgeKind::Link) {
            label_component(d, lab, t.edge);
            grew = true;
            break;
          }
        }
        if (grew) break;
      }
      if (grew) break;
    }
    if (grew) continue;

    // next bond, keyed by how its neighborhood is already labeled:
    // (0, endpoint vertex label, ...) beats (1, crossing anchor dart, offset)
    std::array<int, 4> pick_key{};
    int pick = -1, pick_start = -1;
    auto offer = [&](std::array<int, 4> key, int b, int start_vertex) {
      if (pick < 0 || key < pick_key) {
        pick_key = key;
        pick = b;
        pick_start = start_vertex;
      }
    };
    for (const auto& [vid, lv] : lab.vert) {
      const Vertex& v = d.vertices.at(vid);
      for (const Dart& t : v.slots) {
        const Edge& e = d.edges.at(t.edge);
        if (e.kind == EdgeKind::Bond && !bond_label.count(e.bond))
          offer({0, lv, 0, 0}, e.bond, vid);
      }
    }
    if (pick < 0) {
      // bonds touching the labeled region only at crossings: enter at the
      // smallest labeled dart, leave by the nearest bond slot ccw, and make
      // the vertex reached in that direction the start of the chain walk
      for (const auto& [xid, x] : d.crossings) {
        int anchor = -1;
        Dart best{};
        for (int i = 0; i < 4; ++i) {
          Dart t = x.slots[i];
          if (!lab.edge.count(t.edge)) continue;
          Dart rd = relabeled(lab, t);
          if (anchor < 0 || rd < best) {
            best = rd;
            anchor = i;
          }
        }
        if (anchor < 0) continue;
        for (int j = 1; j < 4; ++j) {
          Dart t = x.slots[(anchor + j) % 4];
          const Edge& e = d.edges.at(t.edge);
          if (lab.edge.count(t.edge) || e.kind != EdgeKind::Bond ||
              bond_label.count(e.bond))
            continue;
          // follow the chain away from this crossing to its end vertex
          Dart cur = t;
          while (true) {
            Port far = d.edges.at(cur.edge).at[1 - cur.end];
            if (far.site.kind == SiteKind::Vertex) {
              Dart rb = relabeled(lab, best);
              offer({1, rb.edge, rb.end, j}, e.bond, far.site.id);
              break;
            }
            cur = d.slot_dart(far.site, (far.slot + 2) % 4);
          }
          break;
        }
      }
    }
    if (pick < 0) break;
    walk_bond(pick, pick_start);
    grew = true;
  }
  if (lab.edge.size() != part.edges.size())
    throw diagram_error("canonical labeling failed to reach the whole part");

  // serialize under the labels
  std::ostringstream os;
  std::vector<int> by_label(lab.edge.size());
  for (const auto& [old_id, new_id] : lab.edge) by_label[new_id] = old_id;
  std::set<int> done;
  int comp_n = 0;
  for (int lid = 0; lid < static_cast<int>(by_label.size()); ++lid) {
    int e = by_label[lid];
    if (done.count(e) || d.edges.at(e).kind != EdgeKind::Link) continue;
    os << "c" << comp_n++ << ":";
    int cur = e;
    do {
      os << " " << lab.edge.at(cur);
      done.insert(cur);
      cur = strand_continuation(d, cur, 1).edge;
    } while (cur != e);
    os << "\n";
  }
  for (int b : bond_by_label) {
    os << "b" << bond_label.at(b) << " color " << d.bonds.at(b).color << ":";
    for (int e : bond_walk.at(b)) os << " " << lab.edge.at(e);
    os << "\n";
  }
  std::vector<std::pair<int, int>> xs;
  for (const auto& [old_id, new_id] : lab.cross) xs.push_back({new_id, old_id});
  std::sort(xs.begin(), xs.end());
  for (const auto& [new_id, old_id] : xs) {
    const Crossing& c = d.crossings.at(old_id);
    std::array<Dart, 4> rd;
    for (int i = 0; i < 4; ++i) rd[i] = relabeled(lab, c.slots[i]);
    int rot = 0;
    for (int i = 1; i < 4; ++i)
      if (rd[i] < rd[rot]) rot = i;
    os << "x" << new_id << "(";
    for (int i = 0; i < 4; ++i) {
      Dart t = rd[(rot + i) % 4];
      os << (i ? "," : "") << t.edge << "." << t.end;
    }
    os << ")o" << (((c.over - rot) % 4 + 4) % 4) % 2 << "\n";
  }
  std::vector<std::pair<int, int>> vsrt;
  for (const auto& [old_id, new_id] : lab.vert) vsrt.push_back({new_id, old_id});
  std::sort(vsrt.begin(), vsrt.end());
  for (const auto& [new_id, old_id] : vsrt) {
    const Vertex& v = d.vertices.at(old_id);
    std::array<Dart, 3> rd;
    for (int i = 0; i < 3; ++i) rd[i] = relabeled(lab, v.slots[i]);
    int rot = 0;
    for (int i = 1; i < 3; ++i)
      if (rd[i] < rd[rot]) rot = i;
    os << "v" << new_id << "(";
    for (int i = 0; i < 3; ++i) {
      Dart t = rd[(rot + i) % 3];
      os << (i ? "," : "") << t.edge << "." << t.end;
    }
    os << ")\n";
  }
  return os.str();
}

}  // namespace

std::string canonical_code(const BondedDiagram& d) {
  std::string code;
  std::vector<std::string> blocks;
  for (const Part& part : split_parts(d)) {
    std::string best;
    for (int e : part.edges) {
      if (d.edges.at(e).kind != EdgeKind::Link) continue;
      std::string cand = part_code(d, part, e);
      if (best.empty() || cand < best) best = cand;
    }
    blocks.push_back(best);
  }
  std::sort(blocks.begin(), blocks.end());
  for (const auto& b : blocks) code += "{" + b + "}";
  code += "loops " + std::to_string(d.free_loops);
  return code;
}

bool same_diagram(const BondedDiagram& a, const BondedDiagram& b) {
  return canonical_code(a) == canonical_code(b);
}

}  // namespace bondskein
