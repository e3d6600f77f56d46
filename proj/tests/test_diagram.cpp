#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "bondskein/diagram.hpp"
#include "bondskein/fixtures.hpp"

using namespace bondskein;
namespace fx = bondskein::fixtures;

namespace {

// relabel ids, rotate every site's slot array and rename bond-edge end bits;
// canonical_code must not see any of it
BondedDiagram scrambled(const BondedDiagram& d, unsigned seed) {
  std::mt19937 rng(seed);
  auto remap = [&](const auto& m) {
    std::vector<int> olds;
    for (const auto& [id, v] : m) olds.push_back(id);
    std::vector<int> news = olds;
    for (int& x : news) x = x * 3 + 17;
    std::shuffle(news.begin(), news.end(), rng);
    std::map<int, int> out;
    for (size_t i = 0; i < olds.size(); ++i) out[olds[i]] = news[i];
    return out;
  };
  auto emap = remap(d.edges);
  auto xmap = remap(d.crossings);
  auto vmap = remap(d.vertices);
  auto bmap = remap(d.bonds);
  std::map<int, int> xrot, vrot, eflip;
  for (const auto& [id, x] : d.crossings) xrot[id] = rng() % 4;
  for (const auto& [id, v] : d.vertices) vrot[id] = rng() % 3;
  for (const auto& [id, e] : d.edges)
    eflip[id] = e.kind == EdgeKind::Bond ? rng() % 2 : 0;

  auto new_dart = [&](Dart t) {
    return Dart{emap.at(t.edge), eflip.at(t.edge) ? 1 - t.end : t.end};
  };
  auto new_port = [&](Port p) {
    if (p.site.kind == SiteKind::Crossing)
      return Port{{SiteKind::Crossing, xmap.at(p.site.id)},
                  (p.slot - xrot.at(p.site.id) + 4) % 4};
    return Port{{SiteKind::Vertex, vmap.at(p.site.id)},
                (p.slot - vrot.at(p.site.id) + 3) % 3};
  };

  BondedDiagram r;
  r.free_loops = d.free_loops;
  for (const auto& [id, b] : d.bonds) r.bonds[bmap.at(id)] = b;
  for (const auto& [id, e] : d.edges) {
    Edge ne = e;
    if (ne.kind == EdgeKind::Bond) ne.bond = bmap.at(ne.bond);
    ne.at[eflip.at(id) ? 1 : 0] = new_port(e.at[0]);
    ne.at[eflip.at(id) ? 0 : 1] = new_port(e.at[1]);
    r.edges[emap.at(id)] = ne;
  }
  for (const auto& [id, x] : d.crossings) {
    Crossing nx;
    int rot = xrot.at(id);
    for (int i = 0; i < 4; ++i) nx.slots[i] = new_dart(x.slots[(i + rot) % 4]);
    nx.over = ((x.over - rot) % 4 + 4) % 4 % 2;
    r.crossings[xmap.at(id)] = nx;
  }
  for (const auto& [id, v] : d.vertices) {
    Vertex nv;
    int rot = vrot.at(id);
    for (int i = 0; i < 3; ++i) nv.slots[i] = new_dart(v.slots[(i + rot) % 3]);
    r.vertices[vmap.at(id)] = nv;
  }
  require_valid(r);
  return r;
}

std::vector<BondedDiagram> all_fixtures() {
  return {fx::unknot(),
          fx::unlink(3),
          fx::trefoil(),
          fx::trefoil_mirror(),
          fx::hopf_positive(),
          fx::hopf_negative(),
          fx::theta(),
          fx::handcuff(),
          fx::handcuff_bar(),
          fx::theta_bar(),
          fx::theta_bar_star(),
          fx::trefoil_rung(),
          fx::trefoil_arc_bond(),
          fx::trefoil_arc_bond_alt(),
          fx::circle_with_chords("abba"),
          fx::circle_with_chords("abacbc"),
          fx::circle_with_chords("aabdbcdc"),
          fx::triple_interleaved_chords()};
}

std::multiset<int> signs_of(const BondedDiagram& d) {
  std::multiset<int> s;
  for (const auto& [id, x] : d.crossings) s.insert(crossing_sign(d, id));
  return s;
}

int only_bond(const BondedDiagram& d) { return d.bonds.begin()->first; }

}  // namespace

TEST_CASE("fixtures are valid planar diagrams") {
  for (const auto& d : all_fixtures()) {
    auto bad = validate(d);
    std::string first = bad.empty() ? std::string() : bad.front();
    CHECK_MESSAGE(bad.empty(), first);
  }
}

TEST_CASE("broken rotation system is rejected") {
  auto bad = validate(fx::nonplanar_theta());
  REQUIRE(!bad.empty());
  CHECK(bad.front().find("not planar") != std::string::npos);
  CHECK_THROWS_AS(require_valid(fx::nonplanar_theta()), diagram_error);
}

TEST_CASE("link component structure") {
  auto comps = [](const BondedDiagram& d) { return link_components(d); };
  CHECK(comps(fx::unknot()).empty());
  CHECK(fx::unknot().free_loops == 1);
  CHECK(fx::unlink(3).free_loops == 3);
  REQUIRE(comps(fx::trefoil()).size() == 1);
  CHECK(comps(fx::trefoil())[0].size() == 6);
  CHECK(comps(fx::hopf_positive()).size() == 2);
  CHECK(comps(fx::hopf_negative()).size() == 2);
  REQUIRE(comps(fx::theta()).size() == 1);
  CHECK(comps(fx::theta())[0].size() == 2);
  CHECK(comps(fx::handcuff()).size() == 2);
  REQUIRE(comps(fx::trefoil_rung()).size() == 1);
  CHECK(comps(fx::trefoil_rung())[0].size() == 8);
  REQUIRE(comps(fx::trefoil_arc_bond()).size() == 1);
  CHECK(comps(fx::trefoil_arc_bond())[0].size() == 5);
  REQUIRE(comps(fx::triple_interleaved_chords()).size() == 1);
  CHECK(comps(fx::triple_interleaved_chords())[0].size() == 6);
}

TEST_CASE("face counts satisfy Euler's formula by hand") {
  CHECK(faces(fx::theta()).size() == 3);        // V=2 E=3
  CHECK(faces(fx::trefoil()).size() == 5);      // V=3 E=6
  CHECK(faces(fx::handcuff()).size() == 3);     // V=2 E=3
  CHECK(faces(fx::trefoil_rung()).size() == 6); // V=5 E=9
}

TEST_CASE("crossing signs") {
  auto all = [](const BondedDiagram& d, int want) {
    for (const auto& [id, x] : d.crossings) CHECK(crossing_sign(d, id) == want);
  };
  all(fx::trefoil(), 1);
  all(fx::trefoil_mirror(), -1);
  all(fx::hopf_positive(), 1);
  all(fx::hopf_negative(), -1);
  all(fx::theta_bar(), 1);       // the kink that absorbs a rung is positive
  all(fx::theta_bar_star(), -1);
  // bond strands carry no sign
  auto arc = fx::trefoil_arc_bond();
  for (const auto& [id, x] : arc.crossings)
    CHECK_THROWS_AS(crossing_sign(arc, id), diagram_error);
}

TEST_CASE("bond geometry classification") {
  auto geo = [](const BondedDiagram& d) {
    int b = only_bond(d);
    BondGeometry g = classify_bond(d, b);
    CHECK(g == classify_bond_local(d, b));  // face rule == endpoint rule
    return g;
  };
  CHECK(geo(fx::theta()) == BondGeometry::Antiparallel);
  CHECK(geo(fx::handcuff()) == BondGeometry::Antiparallel);
  CHECK(geo(fx::handcuff_bar()) == BondGeometry::Parallel);
  CHECK(geo(fx::theta_bar()) == BondGeometry::Parallel);
  CHECK(geo(fx::theta_bar_star()) == BondGeometry::Parallel);
  CHECK(geo(fx::trefoil_rung()) == BondGeometry::Parallel);
  CHECK(geo(fx::trefoil_arc_bond()) == BondGeometry::Parallel);
  CHECK(geo(fx::trefoil_arc_bond_alt()) == BondGeometry::Parallel);
  for (const auto& [b, rec] : fx::circle_with_chords("abacbc").bonds) {
    auto d = fx::circle_with_chords("abacbc");
    CHECK(classify_bond(d, b) == classify_bond_local(d, b));
  }
}

TEST_CASE("bond_free distinguishes rungs from threaded bonds") {
  CHECK(fx::theta().bond_free(only_bond(fx::theta())));
  CHECK(fx::trefoil_rung().bond_free(only_bond(fx::trefoil_rung())));
  CHECK(!fx::trefoil_arc_bond().bond_free(only_bond(fx::trefoil_arc_bond())));
  CHECK(bond_chain(fx::trefoil_arc_bond(), only_bond(fx::trefoil_arc_bond())).size() == 4);
}

TEST_CASE("smoothing an antiparallel bond") {
  auto th = fx::theta();
  int b = only_bond(th);

  auto zero = smooth_bond(th, b, Smoothing::Zero);
  CHECK(validate(zero).empty());
  CHECK(zero.edges.empty());
  CHECK(zero.bonds.empty());
  CHECK(zero.free_loops == 1);  // the two arcs close into one circle

  auto inf = smooth_bond(th, b, Smoothing::Infinity);
  CHECK(validate(inf).empty());
  CHECK(inf.free_loops == 2);  // each arc closes separately

  CHECK_THROWS_AS(smooth_bond(th, b, Smoothing::PosCrossing), diagram_error);
  CHECK_THROWS_AS(smooth_bond(th, b, Smoothing::NegCrossing), diagram_error);

  auto hc = fx::handcuff();
  CHECK(smooth_bond(hc, only_bond(hc), Smoothing::Zero).free_loops == 2);
  CHECK(smooth_bond(hc, only_bond(hc), Smoothing::Infinity).free_loops == 1);
}

TEST_CASE("smoothing a parallel bond") {
  auto hb = fx::handcuff_bar();
  int b = only_bond(hb);
  CHECK_THROWS_AS(smooth_bond(hb, b, Smoothing::Infinity), diagram_error);
  CHECK(smooth_bond(hb, b, Smoothing::Zero).free_loops == 2);

  auto pos = smooth_bond(hb, b, Smoothing::PosCrossing);
  CHECK(validate(pos).empty());
  CHECK(pos.crossings.size() == 1);
  CHECK(link_components(pos).size() == 1);  // a one-crossing unknot
  CHECK(signs_of(pos) == std::multiset<int>{1});
  auto neg = smooth_bond(hb, b, Smoothing::NegCrossing);
  CHECK(signs_of(neg) == std::multiset<int>{-1});

  auto tb = fx::theta_bar();
  int tbb = only_bond(tb);
  // removing the rung leaves exactly the positive kink
  CHECK(same_diagram(smooth_bond(tb, tbb, Smoothing::Zero), fx::unknot_positive_kink()));
  // the crossing replacements stack a second crossing against the kink
  auto tbpos = smooth_bond(tb, tbb, Smoothing::PosCrossing);
  CHECK(same_diagram(tbpos, fx::hopf_positive()));
  auto tbneg = smooth_bond(tb, tbb, Smoothing::NegCrossing);
  CHECK(link_components(tbneg).size() == 2);
  CHECK(signs_of(tbneg) == std::multiset<int>{-1, 1});

  auto ts = fx::theta_bar_star();
  int tsb = only_bond(ts);
  CHECK(signs_of(smooth_bond(ts, tsb, Smoothing::Zero)) == std::multiset<int>{-1});
  CHECK(same_diagram(smooth_bond(ts, tsb, Smoothing::NegCrossing), fx::hopf_negative()));

  auto rung = fx::trefoil_rung();
  int rb = only_bond(rung);
  CHECK(same_diagram(smooth_bond(rung, rb, Smoothing::Zero), fx::trefoil()));
  auto rneg = smooth_bond(rung, rb, Smoothing::NegCrossing);
  CHECK(rneg.crossings.size() == 4);
  CHECK(link_components(rneg).size() == 2);
  CHECK(signs_of(rneg) == std::multiset<int>{-1, 1, 1, 1});

  // threaded bonds need no isolation: the zero smoothing carries the chain's
  // crossings away, the others route doubled strands along the chain
  auto arc = fx::trefoil_arc_bond();
  auto az = smooth_bond(arc, only_bond(arc), Smoothing::Zero);
  CHECK(az.crossings.empty());
  CHECK(az.free_loops == 1);
  auto ap = smooth_bond(arc, only_bond(arc), Smoothing::PosCrossing);
  CHECK(validate(ap).empty());
  // all three trefoil crossings sat on the chain: each doubles, plus the
  // replacement crossing itself
  CHECK(ap.crossings.size() == 2 * 3 + 1);
  CHECK_THROWS_AS(smooth_bond(arc, only_bond(arc), Smoothing::Infinity),
                  diagram_error);
}

TEST_CASE("underlying link deletes bonds outright") {
  auto ul = [](const BondedDiagram& d) { return underlying_link(d); };
  CHECK(ul(fx::theta()).free_loops == 1);
  CHECK(ul(fx::theta()).edges.empty());
  CHECK(ul(fx::handcuff()).free_loops == 2);
  CHECK(same_diagram(ul(fx::trefoil_rung()), fx::trefoil()));
  // the long-arc bond carries all three crossings away with it
  auto a = ul(fx::trefoil_arc_bond());
  CHECK(a.crossings.empty());
  CHECK(a.free_loops == 1);
  CHECK(same_diagram(ul(fx::trefoil_arc_bond_alt()), fx::unknot()));
  // bond-bond crossings die when either bond goes
  auto t = ul(fx::triple_interleaved_chords());
  CHECK(t.crossings.empty());
  CHECK(t.bonds.empty());
  CHECK(t.free_loops == 1);
  // bonds on an honest link survive as the identity
  CHECK(same_diagram(ul(fx::trefoil()), fx::trefoil()));
}

TEST_CASE("contact distance coloring") {
  auto colors = [](const BondedDiagram& d, bool dest = false) {
    std::multiset<int> out;
    for (const auto& [b, c] : contact_distance_coloring(d, dest)) out.insert(c);
    return out;
  };
  CHECK(colors(fx::theta()) == std::multiset<int>{1});
  CHECK(colors(fx::circle_with_chords("abba")) == std::multiset<int>{1, 1});
  CHECK(colors(fx::circle_with_chords("abacbc")) == std::multiset<int>{2, 2, 3});
  CHECK(colors(fx::triple_interleaved_chords()) == std::multiset<int>{3, 3, 3});
  CHECK(colors(fx::circle_with_chords("aabdbcdc")) == std::multiset<int>{1, 2, 2, 3});
  // counting the destination vertex shifts every color up by one
  CHECK(colors(fx::circle_with_chords("aabdbcdc"), true) == std::multiset<int>{2, 3, 3, 4});
  CHECK(colors(fx::theta(), true) == std::multiset<int>{2});
  // only defined along a single knot
  CHECK_THROWS_AS(contact_distance_coloring(fx::handcuff()), diagram_error);
}

TEST_CASE("canonical code ignores labels, rotations and bond end names") {
  std::vector<BondedDiagram> ds = all_fixtures();
  for (size_t i = 0; i < ds.size(); ++i) {
    for (unsigned seed : {1u, 2u, 3u}) {
      CAPTURE(i);
      CHECK(same_diagram(ds[i], scrambled(ds[i], seed + unsigned(i))));
    }
  }
  // and it does distinguish genuinely different diagrams
  CHECK(!same_diagram(fx::trefoil(), fx::trefoil_mirror()));
  CHECK(!same_diagram(fx::theta(), fx::handcuff()));
  CHECK(!same_diagram(fx::theta_bar(), fx::theta_bar_star()));
  CHECK(!same_diagram(fx::trefoil_arc_bond(), fx::trefoil_rung()));
  CHECK(!same_diagram(fx::hopf_positive(), fx::hopf_negative()));
  CHECK(!same_diagram(fx::unknot(), fx::unlink(3)));
}

TEST_CASE("colors matter to the code, geometry does not care") {
  CHECK(!same_diagram(fx::theta(1), fx::theta(2)));
  CHECK(classify_bond(fx::theta(2), only_bond(fx::theta(2))) == BondGeometry::Antiparallel);
}

TEST_CASE("text round trip") {
  for (const auto& d : all_fixtures()) {
    auto text = serialize_bpd(d);
    auto back = parse_bpd(text);
    CHECK(same_diagram(d, back));
    CHECK(serialize_bpd(back) == text);  // stable on its own output
  }
}

TEST_CASE("json round trip") {
  for (const auto& d : all_fixtures()) {
    auto back = diagram_from_json(diagram_to_json(d));
    CHECK(same_diagram(d, back));
  }
  CHECK_THROWS_AS(diagram_from_json("{"), diagram_error);
  CHECK_THROWS_AS(diagram_from_json(R"({"components": [[0]]})"), diagram_error);
}

TEST_CASE("parser reports line numbers and structural problems") {
  auto fails_with = [](const std::string& text, const std::string& what) {
    try {
      parse_bpd(text);
      FAIL_CHECK("expected a parse failure: " << what);
    } catch (const diagram_error& e) {
      CHECK_MESSAGE(std::string(e.what()).find(what) != std::string::npos, e.what());
    }
  };
  fails_with("nonsense\n", "line 1: unknown declaration 'nonsense'");
  fails_with("comp c0 :\n", "line 1: comp needs an id and edges");
  fails_with("loops 0\nloops 1\n", "line 2: loops declared twice");
  fails_with("loops -1\n", "line 1: loop count must be nonnegative");
  fails_with("comp c0 : e0\nx x0 ( e0.2 , e0.0 , e0.1 , e0.1 ) over 0\n",
             "line 2: expected <edge>.<0|1>");
  fails_with("comp c0 : e0\nv v0 ( e0.0 , e0.1 , e5.0 )\nloops 0\n",
             "line 2: end references undeclared edge 5");
  fails_with("bond b0 color 0 : e0\n", "line 1: colors are positive integers");
  // attachments are checked against the declared traversal order
  auto text = serialize_bpd(fx::trefoil());
  auto pos = text.find(" :");
  auto eol = text.find('\n');
  std::string comp = text.substr(pos + 2, eol - pos - 2);  // " e0 e2 ..."
  std::string reversed;
  {
    std::istringstream is(comp);
    std::vector<std::string> toks;
    std::string t;
    while (is >> t) toks.push_back(t);
    std::reverse(toks.begin(), toks.end());
    for (const auto& s : toks) reversed += " " + s;
  }
  fails_with(text.substr(0, pos + 2) + reversed + text.substr(eol),
             "declared component order does not match");
  // dangling edges are caught by validation
  fails_with("comp c0 : e0\nloops 0\n", "unattached");
}

TEST_CASE("scrambling survives a full round trip through both formats") {
  auto d = scrambled(fx::trefoil_arc_bond(), 11);
  CHECK(same_diagram(parse_bpd(serialize_bpd(d)), fx::trefoil_arc_bond()));
  CHECK(same_diagram(diagram_from_json(diagram_to_json(d)), fx::trefoil_arc_bond()));
}
