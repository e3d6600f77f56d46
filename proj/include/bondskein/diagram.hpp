#pragma once

// Colored bonded link diagrams as combinatorial planar maps.
//
// A diagram is a set of oriented link edges and unoriented bond edges
// attached to two kinds of sites: 4-valent crossings and 3-valent bond
// endpoint vertices.  Slots at a site are numbered counterclockwise; the
// rotation system determines the faces and hence planarity.  Crossingless
// circles are kept as a bare count (free_loops).

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bondskein {

class diagram_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

enum class EdgeKind { Link, Bond };
enum class SiteKind { Crossing, Vertex };

struct SiteRef {
  SiteKind kind = SiteKind::Crossing;
  int id = -1;
  auto operator<=>(const SiteRef&) const = default;
};

// One end of an edge.  For link edges end 0 is the tail and end 1 the head
// (the edge is oriented 0 -> 1); bond edges are unoriented and the bit is
// just a name.
struct Dart {
  int edge = -1;
  int end = 0;
  auto operator<=>(const Dart&) const = default;
};

struct Port {
  SiteRef site;
  int slot = 0;
  auto operator<=>(const Port&) const = default;
};

struct Edge {
  EdgeKind kind = EdgeKind::Link;
  int bond = -1;             // owning bond id for bond segments
  std::array<Port, 2> at{};  // where end 0 / end 1 attach
  bool operator==(const Edge&) const = default;
};

struct Crossing {
  std::array<Dart, 4> slots{};  // counterclockwise
  int over = 0;  // the strand through slots {over, over+2} passes on top
  bool operator==(const Crossing&) const = default;
};

struct Vertex {
  std::array<Dart, 3> slots{};  // counterclockwise; exactly one bond end
  bool operator==(const Vertex&) const = default;
};

struct Bond {
  int color = 1;
  bool operator==(const Bond&) const = default;
};

enum class BondGeometry { Parallel, Antiparallel };
enum class Smoothing { Zero, Infinity, PosCrossing, NegCrossing };

std::string to_string(BondGeometry g);
std::string to_string(Smoothing s);

struct BondedDiagram {
  std::map<int, Edge> edges;
  std::map<int, Crossing> crossings;
  std::map<int, Vertex> vertices;
  std::map<int, Bond> bonds;
  int free_loops = 0;

  bool operator==(const BondedDiagram&) const = default;

  int site_degree(SiteRef s) const {
    return s.kind == SiteKind::Crossing ? 4 : 3;
  }
  Dart slot_dart(SiteRef s, int slot) const;
  Port port_of(Dart d) const { return edges.at(d.edge).at[d.end]; }
  // builder helper: records the attachment on both the edge and the site
  void attach(Dart d, SiteRef s, int slot);
  int fresh_edge_id() const;
  int fresh_crossing_id() const;
  int fresh_vertex_id() const;
  bool bond_free(int bond) const;  // single crossing-free segment?
};

// ---- structure queries ----

// all invariant violations, empty iff valid
std::vector<std::string> validate(const BondedDiagram& d);
void require_valid(const BondedDiagram& d);  // throws diagram_error

// face permutation: from the attachment dart d, jump to the other end of
// the same edge and take the next slot counterclockwise there
Dart face_next(const BondedDiagram& d, Dart a);
std::vector<std::vector<Dart>> faces(const BondedDiagram& d);

// oriented link components as cyclic edge-id lists, each starting at its
// smallest edge id, ordered by that id
std::vector<std::vector<int>> link_components(const BondedDiagram& d);
// bond segment chain in order, from the smaller endpoint vertex
std::vector<int> bond_chain(const BondedDiagram& d, int bond);
std::array<int, 2> bond_endpoints(const BondedDiagram& d, int bond);

// +1 or -1; throws if either strand is a bond segment
int crossing_sign(const BondedDiagram& d, int x);

// ---- bond geometry and smoothing ----

BondGeometry classify_bond(const BondedDiagram& d, int bond);
// independent local rule used as a cross-check in tests
BondGeometry classify_bond_local(const BondedDiagram& d, int bond);

BondedDiagram smooth_bond(const BondedDiagram& d, int bond, Smoothing kind);
BondedDiagram underlying_link(const BondedDiagram& d);

// ---- surgery core ----

// Delete the given sites and edges, then reconnect the listed pairs of edge
// ends.  Chains of edges glued end to end merge into single edges (keeping
// the smallest id); closed chains become free loops.  Link chains must glue
// head to tail; a mismatch throws (orientation conflict).
BondedDiagram fuse_pairs(const BondedDiagram& d,
                         const std::vector<SiteRef>& dead_sites,
                         const std::vector<int>& dead_edges,
                         const std::vector<std::pair<Dart, Dart>>& joins);

// ---- colorings ----

// color = 1 + minimal number of bond endpoints strictly between the two
// endpoint vertices along the knot (both arcs tried).  count_destination
// additionally counts the arrival endpoint itself as a contact.
std::map<int, int> contact_distance_coloring(const BondedDiagram& d,
                                             bool count_destination = false);

// ---- canonical form ----

// Complete serialization minimized over traversal relabelings: equal codes
// imply equal maps up to id renaming.  Safe as a memoization key.
std::string canonical_code(const BondedDiagram& d);
bool same_diagram(const BondedDiagram& a, const BondedDiagram& b);

// ---- text and JSON formats ----

BondedDiagram parse_bpd(const std::string& text);
std::string serialize_bpd(const BondedDiagram& d);
BondedDiagram diagram_from_json(const std::string& json_text);
std::string diagram_to_json(const BondedDiagram& d);

}  // namespace bondskein
