#include "bondskein/moves.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <optional>
#include <random>
#include <set>
#include <sstream>

namespace bondskein {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw diagram_error(msg); }

void need(bool ok, const std::string& msg) {
  if (!ok) fail(msg);
}

SiteRef xref(int id) { return {SiteKind::Crossing, id}; }
SiteRef vref(int id) { return {SiteKind::Vertex, id}; }

const Crossing& crossing_at(const BondedDiagram& d, int id) {
  auto it = d.crossings.find(id);
  if (it == d.crossings.end()) fail("no crossing x" + std::to_string(id));
  return it->second;
}

const Vertex& vertex_at(const BondedDiagram& d, int id) {
  auto it = d.vertices.find(id);
  if (it == d.vertices.end()) fail("no vertex v" + std::to_string(id));
  return it->second;
}

Port far_port(const BondedDiagram& d, Dart a) {
  return d.edges.at(a.edge).at[1 - a.end];
}

int new_crossing(BondedDiagram& d, int over) {
  int id = d.fresh_crossing_id();
  d.crossings[id].over = over;
  return id;
}

// cut the edge at its end_bit attachment: that end re-attaches at (fs,fslot)
// and a fresh edge of the same kind bridges the vacated port to (ns,nslot)
int split_toward(BondedDiagram& d, int edge, int end_bit, SiteRef fs, int fslot,
                 SiteRef ns, int nslot) {
  Edge proto = d.edges.at(edge);
  Port old = proto.at[end_bit];
  int n = d.fresh_edge_id();
  Edge fresh;
  fresh.kind = proto.kind;
  fresh.bond = proto.bond;
  d.edges[n] = fresh;
  d.attach({n, end_bit}, old.site, old.slot);
  d.attach({n, 1 - end_bit}, ns, nslot);
  d.attach({edge, end_bit}, fs, fslot);
  return n;
}

bool has_flag(const MoveSpec& s, const std::string& f) {
  return std::find(s.flags.begin(), s.flags.end(), f) != s.flags.end();
}

// picks one of two exclusive flags, with a default
char pick_flag(const MoveSpec& s, char a, char b, char dflt) {
  bool fa = has_flag(s, std::string(1, a));
  bool fb = has_flag(s, std::string(1, b));
  need(!(fa && fb), std::string(to_string(s.move)) + ": contradictory flags " +
                        std::string(1, a) + " and " + std::string(1, b));
  return fa ? a : fb ? b : dflt;
}

bool pick_over(const MoveSpec& s, bool dflt) {
  bool fo = has_flag(s, "over"), fu = has_flag(s, "under");
  need(!(fo && fu), std::string(to_string(s.move)) + ": contradictory flags over and under");
  return fo ? true : fu ? false : dflt;
}

const SiteTok& tok(const MoveSpec& s, std::size_t i, char kind, const char* what) {
  need(i < s.site.size(),
       std::string(to_string(s.move)) + ": site needs " + what);
  need(s.site[i].kind == kind,
       std::string(to_string(s.move)) + ": site token " + std::to_string(i + 1) +
           " must name " + what);
  return s.site[i];
}

const std::vector<Dart>* orbit_of(const std::vector<std::vector<Dart>>& fs, Dart a) {
  for (const auto& f : fs)
    if (std::find(f.begin(), f.end(), a) != f.end()) return &f;
  return nullptr;
}

// ------------------------------------------------------------ move I

// kink templates, slots counterclockwise; the strand runs in -> loop -> out
//   side L: [out 0, loop.0 1, loop.1 2, in 3]
//   side R: [in 0, loop.1 1, loop.0 2, out 3]
// over == 1 gives the positive kink in both

MoveResult kink_add(const BondedDiagram& d0, const MoveSpec& spec) {
  need(spec.site.size() == 1 && spec.site[0].kind == 'e' && spec.site[0].bit >= 0,
       "move I forward binds one edge dart e<id>.<end>");
  int E = spec.site[0].id, eb = spec.site[0].bit;
  need(d0.edges.count(E), "move I: no edge e" + std::to_string(E));
  char sign = pick_flag(spec, '+', '-', '+');
  char side = pick_flag(spec, 'L', 'R', 'L');

  BondedDiagram d = d0;
  int k = new_crossing(d, sign == '+' ? 1 : 0);
  SiteRef ks = xref(k);
  int in_slot = side == 'L' ? 3 : 0;
  int out_slot = side == 'L' ? 0 : 3;
  int l0 = side == 'L' ? 1 : 2;
  int l1 = side == 'L' ? 2 : 1;
  split_toward(d, E, eb, ks, eb ? in_slot : out_slot, ks, eb ? out_slot : in_slot);
  Edge proto = d.edges.at(E);
  int loop = d.fresh_edge_id();
  Edge le;
  le.kind = proto.kind;
  le.bond = proto.bond;
  d.edges[loop] = le;
  d.attach({loop, 0}, ks, l0);
  d.attach({loop, 1}, ks, l1);
  require_valid(d);
  return {std::move(d),
          MoveSpec{Move::I, false, {{'x', k, -1}, {'e', loop, -1}}, {}}};
}

MoveResult kink_remove(const BondedDiagram& d0, const MoveSpec& spec) {
  int k = tok(spec, 0, 'x', "the kink crossing x<id>").id;
  int loop = tok(spec, 1, 'e', "the loop edge e<id>").id;
  const Crossing& c = crossing_at(d0, k);
  need(d0.edges.count(loop), "move I: no edge e" + std::to_string(loop));
  int j = -1;
  for (int i = 0; i < 4; ++i)
    if (c.slots[i].edge == loop && c.slots[(i + 1) % 4].edge == loop &&
        c.slots[i].end != c.slots[(i + 1) % 4].end)
      j = i;
  need(j >= 0, "move I backward: e" + std::to_string(loop) +
                   " is not a kink loop at x" + std::to_string(k));
  Dart t1 = c.slots[(j + 2) % 4], t2 = c.slots[(j + 3) % 4];

  // re-adding the kink must reproduce its curl side as seen walking the
  // merged strand from its end 0: link orientations pin that direction, while
  // a merged bond edge gets bit 0 on the side of the kept edge's old end 0
  char sign = (c.over % 2 == j % 2) ? '+' : '-';
  char side;
  if (d0.edges.at(loop).kind == EdgeKind::Link) {
    side = c.slots[j].end == 0 ? 'L' : 'R';
  } else {
    int kept = std::min(t1.edge, t2.edge);
    side = (kept == t1.edge ? t1.end == 1 : t2.end == 0) ? 'L' : 'R';
  }
  MoveSpec inv{Move::I, true, {}, {std::string(1, sign), std::string(1, side)}};
  if (t1.edge != t2.edge)
    inv.site = {{'e', std::min(t1.edge, t2.edge), 0}};

  BondedDiagram r = fuse_pairs(d0, {xref(k)}, {loop}, {{t1, t2}});
  require_valid(r);
  return {std::move(r), std::move(inv)};
}

// ------------------------------------------------------------ move II

// pushing strand u across strand w inside a face both bound; u meets the new
// crossings x1 then x2 along its travel, w meets x2 then x1:
//   x1: [w-mid 0, u 1, w-tail 2, u-mid 3]   x2: [w 0, u-tail 1, w-mid 2, u-mid 3]

MoveResult poke_add(const BondedDiagram& d0, const MoveSpec& spec) {
  need(spec.site.size() == 2 && spec.site[0].kind == 'e' && spec.site[1].kind == 'e' &&
           spec.site[0].bit >= 0 && spec.site[1].bit >= 0,
       "move II forward binds two edge darts e<id>.<end>");
  Dart a{spec.site[0].id, spec.site[0].bit};
  Dart b{spec.site[1].id, spec.site[1].bit};
  need(d0.edges.count(a.edge) && d0.edges.count(b.edge), "move II: no such edge");
  need(a.edge != b.edge, "move II cannot push an edge across itself");
  auto fs = faces(d0);
  const std::vector<Dart>* orb = orbit_of(fs, a);
  need(orb && std::find(orb->begin(), orb->end(), b) != orb->end(),
       "move II: the darts do not bound a common face");
  bool u_over = pick_over(spec, true);

  BondedDiagram d = d0;
  int x1 = new_crossing(d, u_over ? 1 : 0);
  int x2 = new_crossing(d, u_over ? 1 : 0);
  int ab = a.end, bb = b.end;
  split_toward(d, a.edge, 1 - ab, xref(x1), 1, xref(x2), 1);
  Edge um;
  um.kind = d.edges.at(a.edge).kind;
  um.bond = d.edges.at(a.edge).bond;
  int m_u = d.fresh_edge_id();
  d.edges[m_u] = um;
  d.attach({m_u, ab}, xref(x1), 3);
  d.attach({m_u, 1 - ab}, xref(x2), 3);
  split_toward(d, b.edge, 1 - bb, xref(x2), 0, xref(x1), 2);
  Edge wm;
  wm.kind = d.edges.at(b.edge).kind;
  wm.bond = d.edges.at(b.edge).bond;
  int m_w = d.fresh_edge_id();
  d.edges[m_w] = wm;
  d.attach({m_w, bb}, xref(x2), 2);
  d.attach({m_w, 1 - bb}, xref(x1), 0);
  require_valid(d);
  return {std::move(d),
          MoveSpec{Move::II, false, {{'x', x1, -1}, {'x', x2, -1}}, {}}};
}

struct Bigon {
  Dart dm1, dm2;  // the two face darts; dm1 on edge mu, dm2 on mw
  int c1, c2;     // dm1 arrives at c1 (mu's slot p1) and departs c2
  int p1, p2, q1, q2;
};

std::optional<Bigon> find_bigon(const BondedDiagram& d, int c1, int c2) {
  for (const auto& f : faces(d)) {
    if (f.size() != 2 || f[0].edge == f[1].edge) continue;
    const Edge& e1 = d.edges.at(f[0].edge);
    const Edge& e2 = d.edges.at(f[1].edge);
    auto spans = [&](const Edge& e) {
      return (e.at[0].site == xref(c1) && e.at[1].site == xref(c2)) ||
             (e.at[0].site == xref(c2) && e.at[1].site == xref(c1));
    };
    if (!spans(e1) || !spans(e2)) continue;
    Bigon g;
    g.dm1 = f[0];
    g.dm2 = f[1];
    g.c1 = c1;
    g.c2 = c2;
    auto slot_at = [&](int edge, int x) {
      const Edge& e = d.edges.at(edge);
      return e.at[0].site == xref(x) ? e.at[0].slot : e.at[1].slot;
    };
    g.p1 = slot_at(f[0].edge, c1);
    g.p2 = slot_at(f[0].edge, c2);
    g.q1 = slot_at(f[1].edge, c1);
    g.q2 = slot_at(f[1].edge, c2);
    return g;
  }
  return std::nullopt;
}

MoveResult poke_remove(const BondedDiagram& d0, const MoveSpec& spec) {
  int c1 = tok(spec, 0, 'x', "two crossings x<id> x<id>").id;
  int c2 = tok(spec, 1, 'x', "two crossings x<id> x<id>").id;
  need(c1 != c2, "move II backward needs two distinct crossings");
  const Crossing& k1 = crossing_at(d0, c1);
  const Crossing& k2 = crossing_at(d0, c2);
  auto g = find_bigon(d0, c1, c2);
  need(g.has_value(), "move II backward: no two-sided face between x" +
                          std::to_string(c1) + " and x" + std::to_string(c2));
  bool mu_over1 = (k1.over % 2) == (g->p1 % 2);
  bool mu_over2 = (k2.over % 2) == (g->p2 % 2);
  need(mu_over1 == mu_over2,
       "move II backward: the strands alternate over and under across the bigon");

  Dart ou1 = k1.slots[(g->p1 + 2) % 4], ou2 = k2.slots[(g->p2 + 2) % 4];
  Dart ow1 = k1.slots[(g->q1 + 2) % 4], ow2 = k2.slots[(g->q2 + 2) % 4];
  BondedDiagram r = fuse_pairs(d0, {xref(c1), xref(c2)}, {g->dm1.edge, g->dm2.edge},
                               {{ou1, ou2}, {ow1, ow2}});
  require_valid(r);

  // the bigon's outer strands survive as two merged edges; re-poking one
  // across the other undoes the move, but the right dart sides have to be
  // recovered: try the candidates and keep the one that restores the input
  MoveSpec inv{Move::II, true, {}, {mu_over1 ? "over" : "under"}};
  std::array<int, 4> outs{ou1.edge, ou2.edge, ow1.edge, ow2.edge};
  std::sort(outs.begin(), outs.end());
  if (std::adjacent_find(outs.begin(), outs.end()) == outs.end()) {
    int U = std::min(ou1.edge, ou2.edge), W = std::min(ow1.edge, ow2.edge);
    auto rf = faces(r);
    for (int bu : {1 - g->dm1.end, g->dm1.end}) {
      for (int bw : {1 - g->dm2.end, g->dm2.end}) {
        const std::vector<Dart>* orb = orbit_of(rf, {U, bu});
        if (!orb || std::find(orb->begin(), orb->end(), Dart{W, bw}) == orb->end())
          continue;
        MoveSpec cand{Move::II, true, {{'e', U, bu}, {'e', W, bw}}, {inv.flags[0]}};
        if (same_diagram(poke_add(r, cand).diagram, d0)) {
          inv.site = cand.site;
          break;
        }
      }
      if (!inv.site.empty()) break;
    }
  }
  return {std::move(r), std::move(inv)};
}

// ------------------------------------------------------------ move III

MoveResult triangle_slide(const BondedDiagram& d0, const MoveSpec& spec) {
  int e1 = tok(spec, 0, 'e', "the sliding edge e<id>").id;
  int rid = tok(spec, 1, 'x', "the opposite crossing x<id>").id;
  need(d0.edges.count(e1), "move III: no edge e" + std::to_string(e1));
  crossing_at(d0, rid);

  Dart d1{-1, 0}, d2{-1, 0}, d3{-1, 0};
  for (const auto& f : faces(d0)) {
    if (f.size() != 3) continue;
    for (int i = 0; i < 3; ++i) {
      if (f[i].edge != e1) continue;
      Dart c2 = f[(i + 1) % 3];
      if (d0.port_of({c2.edge, 1 - c2.end}).site == xref(rid)) {
        d1 = f[i];
        d2 = c2;
        d3 = f[(i + 2) % 3];
      }
    }
  }
  need(d1.edge >= 0, "move III: no triangle with side e" + std::to_string(e1) +
                         " opposite x" + std::to_string(rid));
  need(d1.edge != d2.edge && d2.edge != d3.edge && d1.edge != d3.edge,
       "move III: degenerate triangle (repeated side)");

  Port ppa = d0.port_of({d1.edge, d1.end});
  Port pqa = d0.port_of({d1.edge, 1 - d1.end});
  Port pqb = d0.port_of({d2.edge, d2.end});
  Port prb = d0.port_of({d2.edge, 1 - d2.end});
  Port prc = d0.port_of({d3.edge, d3.end});
  Port ppc = d0.port_of({d3.edge, 1 - d3.end});
  SiteRef P = ppa.site, Q = pqa.site, R = prb.site;
  need(P.kind == SiteKind::Crossing && Q.kind == SiteKind::Crossing &&
           R.kind == SiteKind::Crossing,
       "move III: a triangle corner is a bond endpoint vertex");
  need(P != Q && Q != R && P != R, "move III: degenerate triangle (repeated corner)");
  int pa = ppa.slot, qa = pqa.slot, qb = pqb.slot, rb = prb.slot, rc = prc.slot,
      pc = ppc.slot;

  const Crossing& cp = d0.crossings.at(P.id);
  const Crossing& cq = d0.crossings.at(Q.id);
  bool over_p = (cp.over % 2) == (pa % 2);
  bool over_q = (cq.over % 2) == (qa % 2);
  need(over_p == over_q,
       "move III: the sliding strand weaves over and under at the triangle");

  BondedDiagram d = d0;
  Dart oaP = cp.slots[(pa + 2) % 4], ocP = cp.slots[(pc + 2) % 4];
  Dart oaQ = cq.slots[(qa + 2) % 4], obQ = cq.slots[(qb + 2) % 4];
  const Crossing& cr = d0.crossings.at(R.id);
  Dart obR = cr.slots[(rb + 2) % 4], ocR = cr.slots[(rc + 2) % 4];

  d.attach({d1.edge, 1 - d1.end}, P, (pa + 2) % 4);
  d.attach(ocR, P, pc);
  d.attach(oaQ, P, pa);
  d.attach({d3.edge, d3.end}, P, (pc + 2) % 4);
  d.attach(oaP, Q, qa);
  d.attach(obR, Q, qb);
  d.attach({d1.edge, d1.end}, Q, (qa + 2) % 4);
  d.attach({d2.edge, 1 - d2.end}, Q, (qb + 2) % 4);
  d.attach({d2.edge, d2.end}, R, (rb + 2) % 4);
  d.attach({d3.edge, 1 - d3.end}, R, (rc + 2) % 4);
  d.attach(obQ, R, rb);
  d.attach(ocP, R, rc);
  require_valid(d);
  return {std::move(d), MoveSpec{Move::III, !spec.forward, spec.site, {}}};
}

// ------------------------------------------------------- moves IV and IV'

// forward: the strand crossing the vertex edge at x is rerouted past v and
// crosses the other two vertex edges instead:
//   y1: [p-near 0, B 1, p-far 2, mid 3]   y2: [q-far 0, A 1, q-near 2, mid 3]
// where p, q are the edges at v-slots sv+1, sv+2 and A, B the crossing
// strand's ends at slots jx+1, jx+3 of x

MoveResult vertex_pull(const BondedDiagram& d0, const MoveSpec& spec) {
  int vid = tok(spec, 0, 'v', "the vertex v<id>").id;
  int xid = tok(spec, 1, 'x', "the crossing x<id>").id;
  const Vertex& vx = vertex_at(d0, vid);
  const Crossing& c = crossing_at(d0, xid);

  int sv = -1;
  if (spec.site.size() > 2) {
    int eid = tok(spec, 2, 'e', "the vertex edge e<id>").id;
    for (int i = 0; i < 3; ++i)
      if (vx.slots[i].edge == eid) sv = i;
    need(sv >= 0, "move " + to_string(spec.move) + ": e" + std::to_string(eid) +
                      " does not attach at v" + std::to_string(vid));
    need(far_port(d0, vx.slots[sv]).site == xref(xid),
         "move " + to_string(spec.move) + ": e" + std::to_string(eid) +
             " does not end at x" + std::to_string(xid));
  } else {
    for (int i = 0; i < 3 && sv < 0; ++i)
      if (far_port(d0, vx.slots[i]).site == xref(xid)) sv = i;
    need(sv >= 0, "move " + to_string(spec.move) + ": no edge from v" +
                      std::to_string(vid) + " ends at x" + std::to_string(xid));
  }

  // a curl crossing has no transverse strand to slide: its loop must be
  // undone by move I, not rerouted through the rigid disk
  for (int k = 0; k < 4; ++k)
    need(c.slots[k].edge != c.slots[(k + 1) % 4].edge,
         "move " + to_string(spec.move) +
             " cannot slide a curl past the vertex; remove the kink first");

  Dart t = vx.slots[sv];
  int jx = far_port(d0, t).slot;
  Dart A = c.slots[(jx + 1) % 4], B = c.slots[(jx + 3) % 4];
  // the slid strand must run clear of the disk: an arc that returns to the
  // vertex is pinned there, and sweeping it would drag the pinned end along
  for (Dart s : {A, B})
    need(far_port(d0, s).site != vref(vid),
         "move " + to_string(spec.move) +
             " cannot slide a strand that is attached to the vertex");
  bool s_over = (c.over % 2) == ((jx + 1) % 2);
  if (spec.move == Move::IV)
    need(s_over, "move IV slides an over-strand past the vertex; this strand "
                 "passes under (move IV' handles that)");
  else
    need(!s_over, "move IV' slides an under-strand past the vertex; this "
                  "strand passes over (move IV handles that)");

  Dart p = vx.slots[(sv + 1) % 3], q = vx.slots[(sv + 2) % 3];
  BondedDiagram d = d0;
  int y1 = new_crossing(d, s_over ? 1 : 0);
  int y2 = new_crossing(d, s_over ? 1 : 0);
  d.attach(B, xref(y1), 1);
  d.attach(A, xref(y2), 1);
  Edge sm;
  sm.kind = d.edges.at(A.edge).kind;
  sm.bond = d.edges.at(A.edge).bond;
  int mid = d.fresh_edge_id();
  d.edges[mid] = sm;
  int mb = (sm.kind == EdgeKind::Link && B.end == 0) ? 1 : 0;
  d.attach({mid, mb}, xref(y1), 3);
  d.attach({mid, 1 - mb}, xref(y2), 3);
  split_toward(d, p.edge, p.end, xref(y1), 2, xref(y1), 0);
  split_toward(d, q.edge, q.end, xref(y2), 0, xref(y2), 2);
  BondedDiagram r = fuse_pairs(d, {xref(xid)}, {},
                               {{Dart{t.edge, 1 - t.end}, c.slots[(jx + 2) % 4]}});
  require_valid(r);
  return {std::move(r),
          MoveSpec{spec.move, false,
                   {{'v', vid, -1}, {'x', y1, -1}, {'x', y2, -1}}, {}}};
}

MoveResult vertex_push(const BondedDiagram& d0, const MoveSpec& spec) {
  int vid = tok(spec, 0, 'v', "the vertex v<id>").id;
  int ca = tok(spec, 1, 'x', "two crossings x<id> x<id>").id;
  int cb = tok(spec, 2, 'x', "two crossings x<id> x<id>").id;
  need(ca != cb, "move " + to_string(spec.move) + " backward needs two distinct crossings");
  const Vertex& vx = vertex_at(d0, vid);
  crossing_at(d0, ca);
  crossing_at(d0, cb);

  std::string why = "no matching slide pattern at v" + std::to_string(vid);
  for (int sv = 0; sv < 3; ++sv) {
    Dart e_pn = vx.slots[(sv + 1) % 3], e_qn = vx.slots[(sv + 2) % 3];
    Port f1 = far_port(d0, e_pn), f2 = far_port(d0, e_qn);
    int y1, y2;
    if (f1.site == xref(ca) && f2.site == xref(cb)) {
      y1 = ca;
      y2 = cb;
    } else if (f1.site == xref(cb) && f2.site == xref(ca)) {
      y1 = cb;
      y2 = ca;
    } else {
      continue;
    }
    int a1 = f1.slot, a2 = f2.slot;
    const Crossing& k1 = d0.crossings.at(y1);
    const Crossing& k2 = d0.crossings.at(y2);
    Dart smid = k1.slots[(a1 + 3) % 4];
    if (far_port(d0, smid) != Port{xref(y2), (a2 + 1) % 4}) {
      why = "the crossings are not joined by a single strand segment past v" +
            std::to_string(vid);
      continue;
    }
    bool so1 = (k1.over % 2) == ((a1 + 1) % 2);
    bool so2 = (k2.over % 2) == ((a2 + 1) % 2);
    if (so1 != so2) {
      why = "the strand changes over/under between the two crossings";
      continue;
    }
    if (spec.move == Move::IV ? !so1 : so1) {
      why = spec.move == Move::IV
                ? "the strand passes under; move IV' undoes that slide"
                : "the strand passes over; move IV undoes that slide";
      continue;
    }
    Dart B = k1.slots[(a1 + 1) % 4], A = k2.slots[(a2 + 3) % 4];
    Dart p_far = k1.slots[(a1 + 2) % 4], q_far = k2.slots[(a2 + 2) % 4];

    Dart u = vx.slots[sv];
    BondedDiagram d = d0;
    int xn = new_crossing(d, so1 ? 1 : 0);
    int un = split_toward(d, u.edge, u.end, xref(xn), 2, xref(xn), 0);
    d.attach(A, xref(xn), 1);
    d.attach(B, xref(xn), 3);
    BondedDiagram r =
        fuse_pairs(d, {xref(y1), xref(y2)}, {smid.edge},
                   {{Dart{e_pn.edge, 1 - e_pn.end}, p_far},
                    {Dart{e_qn.edge, 1 - e_qn.end}, q_far}});
    require_valid(r);
    // the result must itself admit the forward slide, or this was no inverse
    const Crossing& cn = r.crossings.at(xn);
    bool stuck = false;
    for (int k = 0; k < 4; ++k)
      if (cn.slots[k].edge == cn.slots[(k + 1) % 4].edge) stuck = true;
    for (int k : {1, 3})
      if (far_port(r, cn.slots[k]).site == vref(vid)) stuck = true;
    if (stuck) {
      why = "undoing the slide would curl or pin the strand at the vertex";
      continue;
    }
    return {std::move(r),
            MoveSpec{spec.move, true,
                     {{'v', vid, -1}, {'x', xn, -1}, {'e', un, -1}}, {}}};
  }
  fail("move " + to_string(spec.move) + " backward: " + why);
}

// ------------------------------------------------------------- move V

// the bond end sweeps across an adjacent link edge; crossing layouts:
//   side L: [p-near 0, bond-far 1, p-far 2, bond-near 3]
//   side R: [bond-far 0, q-near 1, bond-near 2, q-far 3]

MoveResult bond_twist_add(const BondedDiagram& d0, const MoveSpec& spec) {
  int vid = tok(spec, 0, 'v', "the vertex v<id>").id;
  const Vertex& vx = vertex_at(d0, vid);
  char side = pick_flag(spec, 'L', 'R', 'L');
  bool b_over = pick_over(spec, true);

  int sb = -1;
  for (int i = 0; i < 3; ++i)
    if (d0.edges.at(vx.slots[i].edge).kind == EdgeKind::Bond) sb = i;
  need(sb >= 0, "move V: v" + std::to_string(vid) + " has no bond end");
  Dart b = vx.slots[sb];

  BondedDiagram d = d0;
  int x = new_crossing(d, 0);
  if (side == 'L') {
    Dart p = vx.slots[(sb + 1) % 3];
    split_toward(d, b.edge, b.end, xref(x), 1, xref(x), 3);
    split_toward(d, p.edge, p.end, xref(x), 2, xref(x), 0);
    d.crossings.at(x).over = b_over ? 1 : 0;
  } else {
    Dart q = vx.slots[(sb + 2) % 3];
    split_toward(d, b.edge, b.end, xref(x), 0, xref(x), 2);
    split_toward(d, q.edge, q.end, xref(x), 3, xref(x), 1);
    d.crossings.at(x).over = b_over ? 0 : 1;
  }
  // the bond end now sits between the two link edges
  Dart nb = d.vertices.at(vid).slots[sb];
  Dart nl = d.vertices.at(vid).slots[(sb + 1) % 3];
  d.attach(nb, vref(vid), (sb + 1) % 3);
  d.attach(nl, vref(vid), sb);
  require_valid(d);
  return {std::move(d), MoveSpec{Move::V, false, {{'v', vid, -1}}, {}}};
}

MoveResult bond_twist_remove(const BondedDiagram& d0, const MoveSpec& spec) {
  int vid = tok(spec, 0, 'v', "the vertex v<id>").id;
  const Vertex& vx = vertex_at(d0, vid);
  int sb = -1;
  for (int i = 0; i < 3; ++i)
    if (d0.edges.at(vx.slots[i].edge).kind == EdgeKind::Bond) sb = i;
  need(sb >= 0, "move V: v" + std::to_string(vid) + " has no bond end");
  Dart b_n = vx.slots[sb];
  Port fp = far_port(d0, b_n);
  need(fp.site.kind == SiteKind::Crossing,
       "move V backward: the bond at v" + std::to_string(vid) + " meets no crossing");
  int x = fp.site.id, k = fp.slot;
  const Crossing& c = d0.crossings.at(x);
  Dart bond_far = c.slots[(k + 2) % 4];

  char side;
  Dart near, far;
  int near_vslot;
  Dart cl = c.slots[(k + 1) % 4], cr = c.slots[(k + 3) % 4];
  if (far_port(d0, cl) == Port{vref(vid), (sb + 2) % 3}) {
    side = 'L';
    near = cl;
    far = c.slots[(k + 3) % 4];
    near_vslot = (sb + 2) % 3;
  } else if (far_port(d0, cr) == Port{vref(vid), (sb + 1) % 3}) {
    side = 'R';
    near = cr;
    far = c.slots[(k + 1) % 4];
    near_vslot = (sb + 1) % 3;
  } else {
    fail("move V backward: the bond's first crossing is not a twist across an "
         "adjacent link edge of v" + std::to_string(vid));
  }
  bool b_over = (c.over % 2) == (k % 2);

  BondedDiagram d = d0;
  Dart db = vx.slots[sb], dn = vx.slots[near_vslot];
  d.attach(db, vref(vid), near_vslot);
  d.attach(dn, vref(vid), sb);
  BondedDiagram r = fuse_pairs(d, {xref(x)}, {},
                               {{Dart{b_n.edge, 1 - b_n.end}, bond_far}, {near, far}});
  require_valid(r);
  return {std::move(r),
          MoveSpec{Move::V, true, {{'v', vid, -1}},
                   {std::string(1, side), b_over ? "over" : "under"}}};
}

// ------------------------------------------------------------- move RV

// the whole bond rotates half a turn around its own axis: the two link
// edges cross once at EACH endpoint vertex, with mirrored handedness at the
// far end (the two disks face opposite ways along the axis).
//   per vertex, x: [p-near 0, q-near 1, p-far 2, q-far 3], hand L puts p
//   (the ccw-next edge from the bond) on top

int bond_slot(const BondedDiagram& d, int vid) {
  const Vertex& vx = vertex_at(d, vid);
  for (int i = 0; i < 3; ++i)
    if (d.edges.at(vx.slots[i].edge).kind == EdgeKind::Bond) return i;
  fail("v" + std::to_string(vid) + " has no bond end");
}

MoveResult bond_roll_add(const BondedDiagram& d0, const MoveSpec& spec) {
  int vid = tok(spec, 0, 'v', "the vertex v<id>").id;
  char hand = pick_flag(spec, 'L', 'R', 'L');
  int sb = bond_slot(d0, vid);
  int bond = d0.edges.at(vertex_at(d0, vid).slots[sb].edge).bond;
  auto eps = bond_endpoints(d0, bond);
  int other = eps[0] == vid ? eps[1] : eps[0];

  BondedDiagram d = d0;
  char h = hand;
  for (int v : {vid, other}) {
    int s = bond_slot(d, v);
    const Vertex& vx = d.vertices.at(v);
    Dart p = vx.slots[(s + 1) % 3];
    int x = new_crossing(d, h == 'L' ? 0 : 1);
    split_toward(d, p.edge, p.end, xref(x), 2, xref(x), 0);
    Dart q2 = d.vertices.at(v).slots[(s + 2) % 3];  // p == q splits move it
    split_toward(d, q2.edge, q2.end, xref(x), 3, xref(x), 1);
    Dart pn = d.vertices.at(v).slots[(s + 1) % 3];
    Dart qn = d.vertices.at(v).slots[(s + 2) % 3];
    d.attach(pn, vref(v), (s + 2) % 3);
    d.attach(qn, vref(v), (s + 1) % 3);
    h = h == 'L' ? 'R' : 'L';
  }
  require_valid(d);
  return {std::move(d), MoveSpec{Move::RV, false, {{'v', vid, -1}}, {}}};
}

MoveResult bond_roll_remove(const BondedDiagram& d0, const MoveSpec& spec) {
  int vid = tok(spec, 0, 'v', "the vertex v<id>").id;
  int sb = bond_slot(d0, vid);
  int bond = d0.edges.at(vertex_at(d0, vid).slots[sb].edge).bond;
  auto eps = bond_endpoints(d0, bond);
  int other = eps[0] == vid ? eps[1] : eps[0];

  BondedDiagram d = d0;
  std::vector<SiteRef> dead;
  std::vector<std::pair<Dart, Dart>> joins;
  char hand = '?';
  for (int v : {vid, other}) {
    int s = bond_slot(d0, v);
    const Vertex& vx = d0.vertices.at(v);
    Dart e1 = vx.slots[(s + 1) % 3], e2 = vx.slots[(s + 2) % 3];
    Port f1 = far_port(d0, e1), f2 = far_port(d0, e2);
    need(f1.site.kind == SiteKind::Crossing && f1.site == f2.site,
         "move RV backward: the link edges at v" + std::to_string(v) +
             " do not meet at one crossing");
    int x = f1.site.id, k1 = f1.slot, k2 = f2.slot;
    const Crossing& c = d0.crossings.at(x);
    need(k1 == (k2 + 1) % 4,
         "move RV backward: the link edges cross with the wrong handedness "
         "layout at v" + std::to_string(v));
    char h = (c.over % 2 == k2 % 2) ? 'L' : 'R';
    if (v == vid)
      hand = h;
    else
      need(h != hand, "move RV backward: the two end twists turn the same "
                      "way; that is not one bond roll");
    for (const SiteRef& sr : dead)
      need(!(sr == xref(x)), "move RV backward: the end twists share a crossing");
    dead.push_back(xref(x));
    Dart p_far = c.slots[(k2 + 2) % 4], q_far = c.slots[(k1 + 2) % 4];
    d.attach(e1, vref(v), (s + 2) % 3);
    d.attach(e2, vref(v), (s + 1) % 3);
    joins.push_back({Dart{e2.edge, 1 - e2.end}, p_far});
    joins.push_back({Dart{e1.edge, 1 - e1.end}, q_far});
  }
  BondedDiagram r = fuse_pairs(d, dead, {}, joins);
  require_valid(r);
  return {std::move(r),
          MoveSpec{Move::RV, true, {{'v', vid, -1}}, {std::string(1, hand)}}};
}

}  // namespace

// ------------------------------------------------------------ dispatch

std::string to_string(Move m) {
  switch (m) {
    case Move::I: return "I";
    case Move::II: return "II";
    case Move::III: return "III";
    case Move::IV: return "IV";
    case Move::IVp: return "IV'";
    case Move::V: return "V";
    case Move::RV: return "RV";
  }
  return "?";
}

MoveResult apply_move(const BondedDiagram& d, const MoveSpec& spec) {
  switch (spec.move) {
    case Move::I:
      return spec.forward ? kink_add(d, spec) : kink_remove(d, spec);
    case Move::II:
      return spec.forward ? poke_add(d, spec) : poke_remove(d, spec);
    case Move::III:
      return triangle_slide(d, spec);
    case Move::IV:
    case Move::IVp:
      return spec.forward ? vertex_pull(d, spec) : vertex_push(d, spec);
    case Move::V:
      return spec.forward ? bond_twist_add(d, spec) : bond_twist_remove(d, spec);
    case Move::RV:
      return spec.forward ? bond_roll_add(d, spec) : bond_roll_remove(d, spec);
  }
  fail("unknown move");
}

// ------------------------------------------------------- script format

std::string format_move(const MoveSpec& spec) {
  std::ostringstream out;
  out << to_string(spec.move) << (spec.forward ? " forward" : " backward") << " at";
  for (const auto& t : spec.site) {
    out << ' ' << t.kind << t.id;
    if (t.bit >= 0) out << '.' << t.bit;
  }
  for (const auto& f : spec.flags) out << ' ' << f;
  return out.str();
}

MoveSpec parse_move(const std::string& line) {
  std::string text = line.substr(0, line.find('#'));
  std::istringstream in(text);
  std::vector<std::string> toks;
  for (std::string w; in >> w;) toks.push_back(w);
  need(toks.size() >= 3, "move script line needs '<move> <direction> at ...': " + text);

  MoveSpec s;
  if (toks[0] == "I") s.move = Move::I;
  else if (toks[0] == "II") s.move = Move::II;
  else if (toks[0] == "III") s.move = Move::III;
  else if (toks[0] == "IV") s.move = Move::IV;
  else if (toks[0] == "IV'" || toks[0] == "IVp") s.move = Move::IVp;
  else if (toks[0] == "V") s.move = Move::V;
  else if (toks[0] == "RV") s.move = Move::RV;
  else fail("unknown move '" + toks[0] + "'");
  if (toks[1] == "forward") s.forward = true;
  else if (toks[1] == "backward") s.forward = false;
  else fail("move direction must be forward or backward, got '" + toks[1] + "'");
  need(toks[2] == "at", "expected 'at' after the direction");

  for (std::size_t i = 3; i < toks.size(); ++i) {
    const std::string& w = toks[i];
    if ((w[0] == 'v' || w[0] == 'x' || w[0] == 'e') && w.size() > 1 &&
        std::isdigit(static_cast<unsigned char>(w[1]))) {
      SiteTok t;
      t.kind = w[0];
      std::size_t dot = w.find('.');
      try {
        t.id = std::stoi(w.substr(1, dot == std::string::npos ? dot : dot - 1));
        if (dot != std::string::npos) t.bit = std::stoi(w.substr(dot + 1));
      } catch (const std::exception&) {
        fail("bad site token '" + w + "'");
      }
      need(t.bit >= -1 && t.bit <= 1, "edge dart end must be 0 or 1 in '" + w + "'");
      s.site.push_back(t);
    } else if (w == "+" || w == "-" || w == "L" || w == "R" || w == "over" ||
               w == "under") {
      s.flags.push_back(w);
    } else {
      fail("unrecognized move token '" + w + "'");
    }
  }
  return s;
}

std::vector<MoveSpec> parse_move_script(const std::string& text) {
  std::vector<MoveSpec> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    std::string body = line.substr(0, line.find('#'));
    if (body.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(parse_move(body));
  }
  return out;
}

// ------------------------------------------------------- enumeration

std::vector<MoveSpec> enumerate_moves(const BondedDiagram& d, bool rigid,
                                      std::size_t max_crossings) {
  std::vector<MoveSpec> out;
  std::size_t nx = d.crossings.size();
  auto fits = [&](std::size_t added) { return nx + added <= max_crossings; };

  // with rigid vertices the whole bond is a stiff ribbon: it may translate
  // past other strands or roll (RV), but it cannot kink, clasp itself, or
  // fold over its own vertex, so those candidates are held back
  auto deforms_ribbon = [&](int e1, int e2) {
    if (!rigid) return false;
    const Edge& a = d.edges.at(e1);
    const Edge& b = d.edges.at(e2);
    return a.kind == EdgeKind::Bond && b.kind == EdgeKind::Bond &&
           a.bond == b.bond;
  };

  if (fits(1))
    for (const auto& [eid, e] : d.edges) {
      if (rigid && e.kind == EdgeKind::Bond) continue;  // would kink the ribbon
      for (int bit : {0, 1})
        for (const char* side : {"L", "R"})
          for (const char* sign : {"+", "-"})
            out.push_back({Move::I, true, {{'e', eid, bit}}, {sign, side}});
    }
  for (const auto& [xid, c] : d.crossings)
    for (int j = 0; j < 4; ++j) {
      Dart l1 = c.slots[j], l2 = c.slots[(j + 1) % 4];
      if (l1.edge != l2.edge || l1.end == l2.end) continue;
      Dart t1 = c.slots[(j + 2) % 4], t2 = c.slots[(j + 3) % 4];
      if (t1.edge == t2.edge) continue;  // strand would close into a bare loop
      if (rigid && d.edges.at(l1.edge).kind == EdgeKind::Bond) continue;
      out.push_back({Move::I, false, {{'x', xid, -1}, {'e', l1.edge, -1}}, {}});
    }

  auto fs = faces(d);
  if (fits(2))
    for (const auto& f : fs)
      for (const Dart& a : f)
        for (const Dart& b : f) {
          if (a.edge == b.edge) continue;
          if (deforms_ribbon(a.edge, b.edge)) continue;
          for (const char* ov : {"over", "under"})
            out.push_back(
                {Move::II, true, {{'e', a.edge, a.end}, {'e', b.edge, b.end}}, {ov}});
        }
  std::set<std::pair<int, int>> bigons_seen;
  for (const auto& f : fs) {
    if (f.size() != 2 || f[0].edge == f[1].edge) continue;
    if (deforms_ribbon(f[0].edge, f[1].edge)) continue;
    Port a0 = d.port_of({f[0].edge, 0}), a1 = d.port_of({f[0].edge, 1});
    if (a0.site.kind != SiteKind::Crossing || a1.site.kind != SiteKind::Crossing ||
        a0.site == a1.site)
      continue;
    int c1 = a0.site.id, c2 = a1.site.id;
    if (!bigons_seen.insert({std::min(c1, c2), std::max(c1, c2)}).second) continue;
    const Crossing& k1 = d.crossings.at(c1);
    const Crossing& k2 = d.crossings.at(c2);
    if (((k1.over % 2) == (a0.slot % 2)) != ((k2.over % 2) == (a1.slot % 2)))
      continue;
    // keep only clasps whose removal leaves a representable re-poke
    Dart ou1 = k1.slots[(a0.slot + 2) % 4], ou2 = k2.slots[(a1.slot + 2) % 4];
    Port b1 = d.port_of({f[1].edge, 0});
    int q1 = b1.site == a0.site ? b1.slot : d.port_of({f[1].edge, 1}).slot;
    int q2 = b1.site == a0.site ? d.port_of({f[1].edge, 1}).slot : b1.slot;
    Dart ow1 = k1.slots[(q1 + 2) % 4], ow2 = k2.slots[(q2 + 2) % 4];
    std::array<int, 4> outs{ou1.edge, ou2.edge, ow1.edge, ow2.edge};
    std::sort(outs.begin(), outs.end());
    if (std::adjacent_find(outs.begin(), outs.end()) != outs.end()) continue;
    out.push_back({Move::II, false,
                   {{'x', std::min(c1, c2), -1}, {'x', std::max(c1, c2), -1}}, {}});
  }

  for (const auto& f : fs) {
    if (f.size() != 3) continue;
    bool ok = true;
    std::array<SiteRef, 3> corner{};
    for (int i = 0; i < 3 && ok; ++i) {
      Port pp = d.port_of({f[i].edge, 1 - f[i].end});
      corner[i] = pp.site;  // head corner of side i
      if (pp.site.kind != SiteKind::Crossing) ok = false;
    }
    if (!ok || corner[0] == corner[1] || corner[1] == corner[2] ||
        corner[0] == corner[2])
      continue;
    if (f[0].edge == f[1].edge || f[1].edge == f[2].edge || f[0].edge == f[2].edge)
      continue;
    for (int i = 0; i < 3; ++i) {
      Port tp = d.port_of({f[i].edge, f[i].end});
      Port hp = d.port_of({f[i].edge, 1 - f[i].end});
      bool over_t = (d.crossings.at(tp.site.id).over % 2) == (tp.slot % 2);
      bool over_h = (d.crossings.at(hp.site.id).over % 2) == (hp.slot % 2);
      if (over_t != over_h) continue;
      int rid = corner[(i + 1) % 3].id;  // corner opposite side i
      out.push_back({Move::III, true, {{'e', f[i].edge, -1}, {'x', rid, -1}}, {}});
    }
  }

  for (const auto& [vid, vx] : d.vertices) {
    int own_bond = -1;
    for (int i = 0; i < 3; ++i) {
      const Edge& ve = d.edges.at(vx.slots[i].edge);
      if (ve.kind == EdgeKind::Bond) own_bond = ve.bond;
    }
    // the moved strand may be a link strand or another bond, but never the
    // ribbon this vertex belongs to — that would fold the ribbon onto itself
    auto own_ribbon = [&](int eid) {
      const Edge& e = d.edges.at(eid);
      return rigid && e.kind == EdgeKind::Bond && e.bond == own_bond;
    };
    for (int sv = 0; sv < 3; ++sv) {
      Port fp = far_port(d, vx.slots[sv]);
      if (fp.site.kind != SiteKind::Crossing) continue;
      const Crossing& fc = d.crossings.at(fp.site.id);
      bool stuck = false;
      for (int k = 0; k < 4; ++k)
        if (fc.slots[k].edge == fc.slots[(k + 1) % 4].edge) stuck = true;
      for (int k : {1, 3})
        if (far_port(d, fc.slots[(fp.slot + k) % 4]).site == vref(vid))
          stuck = true;
      if (own_ribbon(fc.slots[(fp.slot + 1) % 4].edge)) stuck = true;
      if (fits(1) && !stuck) {
        bool s_over = (fc.over % 2) == ((fp.slot + 1) % 2);
        out.push_back({s_over ? Move::IV : Move::IVp, true,
                       {{'v', vid, -1}, {'x', fp.site.id, -1},
                        {'e', vx.slots[sv].edge, -1}}, {}});
      }
      // backward pattern: the two other vertex edges end at crossings joined
      // by a single strand segment with consistent over/under
      Port f1 = far_port(d, vx.slots[(sv + 1) % 3]);
      Port f2 = far_port(d, vx.slots[(sv + 2) % 3]);
      if (f1.site.kind != SiteKind::Crossing || f2.site.kind != SiteKind::Crossing ||
          f1.site == f2.site)
        continue;
      const Crossing& k1 = d.crossings.at(f1.site.id);
      const Crossing& k2 = d.crossings.at(f2.site.id);
      Dart smid = k1.slots[(f1.slot + 3) % 4];
      if (far_port(d, smid) != Port{f2.site, (f2.slot + 1) % 4}) continue;
      if (own_ribbon(smid.edge)) continue;
      bool so1 = (k1.over % 2) == ((f1.slot + 1) % 2);
      bool so2 = (k2.over % 2) == ((f2.slot + 1) % 2);
      if (so1 != so2) continue;
      MoveSpec cand{so1 ? Move::IV : Move::IVp, false,
                    {{'v', vid, -1}, {'x', f1.site.id, -1}, {'x', f2.site.id, -1}},
                    {}};
      try {
        vertex_push(d, cand);
      } catch (const std::exception&) {
        continue;
      }
      out.push_back(std::move(cand));
    }

    if (!rigid && fits(1))
      for (const char* side : {"L", "R"})
        for (const char* ov : {"over", "under"})
          out.push_back({Move::V, true, {{'v', vid, -1}}, {side, ov}});
    if (!rigid) {
      int sb = -1;
      for (int i = 0; i < 3; ++i)
        if (d.edges.at(vx.slots[i].edge).kind == EdgeKind::Bond) sb = i;
      Port fp = far_port(d, vx.slots[sb]);
      if (fp.site.kind == SiteKind::Crossing) {
        const Crossing& c = d.crossings.at(fp.site.id);
        Dart cl = c.slots[(fp.slot + 1) % 4], cr = c.slots[(fp.slot + 3) % 4];
        if (far_port(d, cl) == Port{vref(vid), (sb + 2) % 3} ||
            far_port(d, cr) == Port{vref(vid), (sb + 1) % 3})
          out.push_back({Move::V, false, {{'v', vid, -1}}, {}});
      }
    }

    {
      // the roll twists both ends of the bond at once; emit it only at the
      // smaller endpoint so each bond gets one pair of candidates
      int sb = -1;
      for (int i = 0; i < 3; ++i)
        if (d.edges.at(vx.slots[i].edge).kind == EdgeKind::Bond) sb = i;
      int bond = d.edges.at(vx.slots[sb].edge).bond;
      if (bond_endpoints(d, bond)[0] == vid) {
        if (fits(2))
          for (const char* hand : {"L", "R"})
            out.push_back({Move::RV, true, {{'v', vid, -1}}, {hand}});
        MoveSpec cand{Move::RV, false, {{'v', vid, -1}}, {}};
        try {
          apply_move(d, cand);
          out.push_back(std::move(cand));
        } catch (const std::exception&) {
        }
      }
    }
  }
  return out;
}

// ---------------------------------------------------- derived operations

BondedDiagram isolate_bond(const BondedDiagram& d0, int bond) {
  need(d0.bonds.count(bond), "no bond " + std::to_string(bond));
  BondedDiagram cur = d0;
  while (!cur.bond_free(bond)) {
    auto eps = bond_endpoints(cur, bond);
    auto chain = bond_chain(cur, bond);
    // clear the crossing nearest either chain end; a strand attached to the
    // near vertex blocks that side, so fall through to the other end
    bool done = false;
    for (int side = 0; side < 2 && !done; ++side) {
      int v = eps[side];
      int near = side == 0 ? chain.front() : chain.back();
      const Edge& e = cur.edges.at(near);
      int vb = e.at[0].site == vref(v) ? 0 : 1;
      Port fx = e.at[1 - vb];
      const Crossing& cx = cur.crossings.at(fx.site.id);
      // the bond is a stiff ribbon: sliding a piece of it across its own
      // vertex folds the ribbon onto itself, which no rigid move allows
      const Edge& mover = cur.edges.at(cx.slots[(fx.slot + 1) % 4].edge);
      if (mover.kind == EdgeKind::Bond && mover.bond == bond) continue;
      bool pinned = false;
      for (int k : {1, 3})
        if (far_port(cur, cx.slots[(fx.slot + k) % 4]).site == vref(v))
          pinned = true;
      if (pinned) continue;
      bool s_over = (cx.over % 2) == ((fx.slot + 1) % 2);
      MoveSpec mv{s_over ? Move::IV : Move::IVp, true,
                  {{'v', v, -1}, {'x', fx.site.id, -1}, {'e', near, -1}}, {}};
      cur = apply_move(cur, mv).diagram;
      done = true;
    }
    // strands pinned at both vertices (or the ribbon itself) block the
    // chain; leave the remaining crossings in place — the smoothings know
    // how to cut through link strands
    if (!done) break;
  }
  return cur;
}

BondedDiagram isolate_all(const BondedDiagram& d) {
  BondedDiagram cur = d;
  for (const auto& [b, info] : d.bonds) {
    (void)info;
    cur = isolate_bond(cur, b);
  }
  return cur;
}

BondedDiagram simplify(const BondedDiagram& d0) {
  BondedDiagram cur = d0;
  for (;;) {
    bool applied = false;
    for (const auto& [xid, c] : cur.crossings) {
      for (int j = 0; j < 4; ++j) {
        Dart l1 = c.slots[j], l2 = c.slots[(j + 1) % 4];
        if (l1.edge != l2.edge || l1.end == l2.end) continue;
        if (cur.edges.at(l1.edge).kind != EdgeKind::Link) continue;
        cur = apply_move(cur, {Move::I, false,
                               {{'x', xid, -1}, {'e', l1.edge, -1}}, {}})
                  .diagram;
        applied = true;
        break;
      }
      if (applied) break;
    }
    if (applied) continue;
    for (const auto& f : faces(cur)) {
      if (f.size() != 2 || f[0].edge == f[1].edge) continue;
      if (cur.edges.at(f[0].edge).kind != EdgeKind::Link ||
          cur.edges.at(f[1].edge).kind != EdgeKind::Link)
        continue;
      Port a0 = cur.port_of({f[0].edge, 0}), a1 = cur.port_of({f[0].edge, 1});
      if (a0.site.kind != SiteKind::Crossing ||
          a1.site.kind != SiteKind::Crossing || a0.site == a1.site)
        continue;
      if (((cur.crossings.at(a0.site.id).over % 2) == (a0.slot % 2)) !=
          ((cur.crossings.at(a1.site.id).over % 2) == (a1.slot % 2)))
        continue;
      cur = apply_move(cur, {Move::II, false,
                             {{'x', a0.site.id, -1}, {'x', a1.site.id, -1}}, {}})
                .diagram;
      applied = true;
      break;
    }
    if (!applied) break;
  }
  return cur;
}

BondedDiagram random_isotopy(const BondedDiagram& d, std::uint64_t seed,
                             int steps, bool rigid, std::size_t max_crossings) {
  std::mt19937_64 rng(seed);
  BondedDiagram cur = d;
  for (int i = 0; i < steps; ++i) {
    auto cands = enumerate_moves(cur, rigid, max_crossings);
    if (cands.empty()) break;
    cur = apply_move(cur, cands[rng() % cands.size()]).diagram;
  }
  return cur;
}

}  // namespace bondskein
