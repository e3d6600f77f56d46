#include "bondskein/fixtures.hpp"

#include <map>
#include <set>

namespace bondskein::fixtures {

namespace {

void link_edges(BondedDiagram& d, std::initializer_list<int> ids) {
  for (int e : ids) d.edges[e] = Edge{EdgeKind::Link, -1, {}};
}

void bond_edges(BondedDiagram& d, int bond, int color,
                std::initializer_list<int> ids) {
  d.bonds[bond] = Bond{color};
  for (int e : ids) d.edges[e] = Edge{EdgeKind::Bond, bond, {}};
}

void put_x(BondedDiagram& d, int id, Dart s0, Dart s1, Dart s2, Dart s3,
           int over) {
  d.crossings[id] = Crossing{{s0, s1, s2, s3}, over};
}

void put_v(BondedDiagram& d, int id, Dart s0, Dart s1, Dart s2) {
  d.vertices[id] = Vertex{{s0, s1, s2}};
}

// derive every Edge::at from the site slot lists
void wire(BondedDiagram& d) {
  for (auto& [id, x] : d.crossings)
    for (int k = 0; k < 4; ++k) {
      Dart t = x.slots[k];
      d.edges.at(t.edge).at[t.end] = Port{{SiteKind::Crossing, id}, k};
    }
  for (auto& [id, v] : d.vertices)
    for (int k = 0; k < 3; ++k) {
      Dart t = v.slots[k];
      d.edges.at(t.edge).at[t.end] = Port{{SiteKind::Vertex, id}, k};
    }
}

// closure of the 2-strand braid with `n` equal crossings, strands flowing
// downward; edges 2i (right column) and 2i+1 (left column) run from
// crossing i down to crossing i+1 (mod n, wrapping around the sides)
BondedDiagram braid2_closure(int n, int over) {
  BondedDiagram d;
  for (int e = 0; e < 2 * n; ++e)
    d.edges[e] = Edge{EdgeKind::Link, -1, {}};
  for (int i = 0; i < n; ++i) {
    int a = 2 * i, b = 2 * i + 1;               // outputs of crossing i
    int pa = (a + 2 * n - 2) % (2 * n);         // inputs: outputs of i-1
    // slots ccw: (SW out, SE out, NE in, NW in)
    put_x(d, i, Dart{b, 0}, Dart{a, 0}, Dart{pa, 1}, Dart{pa + 1, 1}, over);
  }
  wire(d);
  return d;
}

}  // namespace

BondedDiagram unknot() { return unlink(1); }

BondedDiagram unlink(int circles) {
  BondedDiagram d;
  d.free_loops = circles;
  return d;
}

BondedDiagram trefoil() { return braid2_closure(3, 1); }
BondedDiagram trefoil_mirror() { return braid2_closure(3, 0); }
BondedDiagram hopf_positive() { return braid2_closure(2, 1); }
BondedDiagram hopf_negative() { return braid2_closure(2, 0); }
BondedDiagram unknot_positive_kink() { return braid2_closure(1, 1); }
BondedDiagram unknot_negative_kink() { return braid2_closure(1, 0); }

BondedDiagram theta(int color) {
  BondedDiagram d;
  link_edges(d, {0, 1});       // 0: upper arc v0->v1, 1: lower arc v1->v0
  bond_edges(d, 0, color, {2});
  put_v(d, 0, Dart{0, 0}, Dart{1, 1}, Dart{2, 0});
  put_v(d, 1, Dart{0, 1}, Dart{2, 1}, Dart{1, 0});
  wire(d);
  return d;
}

BondedDiagram handcuff(int color) {
  BondedDiagram d;
  link_edges(d, {0, 1});       // two circles, both counterclockwise
  bond_edges(d, 0, color, {2});
  put_v(d, 0, Dart{2, 0}, Dart{0, 0}, Dart{0, 1});
  put_v(d, 1, Dart{1, 1}, Dart{2, 1}, Dart{1, 0});
  wire(d);
  return d;
}

BondedDiagram handcuff_bar(int color) {
  BondedDiagram d;
  link_edges(d, {0, 1});       // second circle clockwise
  bond_edges(d, 0, color, {2});
  put_v(d, 0, Dart{2, 0}, Dart{0, 0}, Dart{0, 1});
  put_v(d, 1, Dart{1, 0}, Dart{2, 1}, Dart{1, 1});
  wire(d);
  return d;
}

namespace {

// one positive or negative kink above a bond rung between parallel strands:
// edges 0,1 run from the crossing down to the vertices, 2,3 close up the
// left/right sides, 4 is the rung
BondedDiagram kinked_rung(int over, int color) {
  BondedDiagram d;
  link_edges(d, {0, 1, 2, 3});
  bond_edges(d, 0, color, {4});
  put_x(d, 0, Dart{0, 0}, Dart{1, 0}, Dart{3, 1}, Dart{2, 1}, over);
  put_v(d, 0, Dart{4, 0}, Dart{0, 1}, Dart{2, 0});
  put_v(d, 1, Dart{1, 1}, Dart{4, 1}, Dart{3, 0});
  wire(d);
  return d;
}

}  // namespace

BondedDiagram theta_bar(int color) { return kinked_rung(1, color); }
BondedDiagram theta_bar_star(int color) { return kinked_rung(0, color); }

namespace {

// trefoil braid closure with two extra vertices spliced into the strands
// below the bottom crossing, joined by edge 8; edge roles:
//   0,2,4 left column, 1,3,5 right column (column segments i to i+1),
//   4/5 end at the vertices, 6/7 close the left/right sides, 8 is the rung
BondedDiagram theta_trefoil_map() {
  BondedDiagram d;
  for (int e = 0; e <= 8; ++e) d.edges[e] = Edge{EdgeKind::Link, -1, {}};
  put_x(d, 0, Dart{0, 0}, Dart{1, 0}, Dart{7, 1}, Dart{6, 1}, 1);
  put_x(d, 1, Dart{2, 0}, Dart{3, 0}, Dart{1, 1}, Dart{0, 1}, 1);
  put_x(d, 2, Dart{4, 0}, Dart{5, 0}, Dart{3, 1}, Dart{2, 1}, 1);
  put_v(d, 0, Dart{8, 0}, Dart{4, 1}, Dart{6, 0});
  put_v(d, 1, Dart{5, 1}, Dart{8, 1}, Dart{7, 0});
  wire(d);
  return d;
}

void make_bond(BondedDiagram& d, std::initializer_list<int> ids) {
  d.bonds[0] = Bond{1};
  for (int e : ids) {
    d.edges.at(e).kind = EdgeKind::Bond;
    d.edges.at(e).bond = 0;
  }
}

}  // namespace

BondedDiagram trefoil_rung() {
  BondedDiagram d = theta_trefoil_map();
  make_bond(d, {8});
  return d;
}

BondedDiagram trefoil_arc_bond() {
  BondedDiagram d = theta_trefoil_map();
  make_bond(d, {6, 1, 2, 5});
  return d;
}

BondedDiagram trefoil_arc_bond_alt() {
  BondedDiagram d = theta_trefoil_map();
  make_bond(d, {7, 0, 3, 4});
  // the remaining circle runs through the rung the other way
  std::swap(d.edges.at(8).at[0], d.edges.at(8).at[1]);
  d.vertices.at(0).slots[0] = Dart{8, 1};
  d.vertices.at(1).slots[1] = Dart{8, 0};
  return d;
}

BondedDiagram circle_with_chords(const std::string& pattern) {
  int n = static_cast<int>(pattern.size());
  if (n == 0 || n % 2) throw diagram_error("chord pattern length must be even");
  std::map<char, std::pair<int, int>> span;
  std::map<char, int> bond_of;
  for (int i = 0; i < n; ++i) {
    char c = pattern[i];
    if (!span.count(c)) {
      bond_of[c] = static_cast<int>(bond_of.size());
      span[c] = {i, -1};
    } else if (span[c].second != -1) {
      throw diagram_error(std::string("chord letter '") + c +
                          "' appears more than twice");
    } else {
      span[c].second = i;
    }
  }
  for (auto& [c, s] : span)
    if (s.second == -1)
      throw diagram_error(std::string("chord letter '") + c +
                          "' appears only once");

  // 2-color the interleaving-conflict graph: inside / outside the circle
  auto interleaved = [&](char a, char b) {
    auto [a0, a1] = span[a];
    auto [b0, b1] = span[b];
    bool in0 = a0 < b0 && b0 < a1, in1 = a0 < b1 && b1 < a1;
    return in0 != in1;
  };
  std::map<char, int> side;  // 0 inside, 1 outside
  for (auto& [c, s] : span) {
    (void)s;
    if (side.count(c)) continue;
    side[c] = 0;
    std::vector<char> queue{c};
    while (!queue.empty()) {
      char u = queue.back();
      queue.pop_back();
      for (auto& [w, sp] : span) {
        (void)sp;
        if (w == u || !interleaved(u, w)) continue;
        if (!side.count(w)) {
          side[w] = 1 - side[u];
          queue.push_back(w);
        } else if (side[w] == side[u]) {
          throw diagram_error("chord pattern forces chord-chord crossings");
        }
      }
    }
  }

  BondedDiagram d;
  for (int e = 0; e < n; ++e) d.edges[e] = Edge{EdgeKind::Link, -1, {}};
  for (auto& [c, b] : bond_of) {
    d.bonds[b] = Bond{1};
    d.edges[n + b] = Edge{EdgeKind::Bond, b, {}};
  }
  for (int k = 0; k < n; ++k) {
    char c = pattern[k];
    Dart chord{n + bond_of[c], span[c].first == k ? 0 : 1};
    Dart out{k, 0}, in{(k + n - 1) % n, 1};
    if (side[c] == 0)
      put_v(d, k, out, chord, in);  // chord toward the disk center
    else
      put_v(d, k, chord, out, in);  // chord through the outer face
  }
  wire(d);
  return d;
}

BondedDiagram triple_interleaved_chords() {
  BondedDiagram d;
  link_edges(d, {0, 1, 2, 3, 4, 5});
  bond_edges(d, 0, 1, {6, 7});   // hexagon diameter 0-3, split at the crossing
  bond_edges(d, 1, 1, {8});      // chord 1-4, routed outside
  bond_edges(d, 2, 1, {9, 10});  // diameter 2-5, crosses bond 0 at the center
  put_x(d, 0, Dart{6, 1}, Dart{9, 1}, Dart{7, 0}, Dart{10, 0}, 0);
  put_v(d, 0, Dart{0, 0}, Dart{6, 0}, Dart{5, 1});
  put_v(d, 1, Dart{8, 0}, Dart{1, 0}, Dart{0, 1});
  put_v(d, 2, Dart{2, 0}, Dart{9, 0}, Dart{1, 1});
  put_v(d, 3, Dart{3, 0}, Dart{7, 1}, Dart{2, 1});
  put_v(d, 4, Dart{8, 1}, Dart{4, 0}, Dart{3, 1});
  put_v(d, 5, Dart{5, 0}, Dart{10, 1}, Dart{4, 1});
  wire(d);
  return d;
}

BondedDiagram nonplanar_theta() {
  BondedDiagram d = theta();
  auto& v = d.vertices.at(1);
  std::swap(v.slots[1], v.slots[2]);
  wire(d);
  return d;
}

}  // namespace bondskein::fixtures
