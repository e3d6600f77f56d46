#include <nlohmann/json.hpp>

#include <algorithm>
#include <set>
#include <sstream>

#include "bondskein/diagram.hpp"

// Text format, one declaration per line, '#' starts a comment:
//   comp <id> : <edge-id list>
//   bond <id> color <int> : <edge-id list>
//   x <id> ( <end> , <end> , <end> , <end> ) over <0|1|2|3>
//   v <id> ( <end> , <end> , <end> )
//   loops <count>
// where <end> is <edge-id>.<0|1>, slots are listed counterclockwise, and
// ids are written with a letter prefix (e0, x3, v1, b0, c2).

namespace bondskein {

namespace {

[[noreturn]] void fail(int line, const std::string& msg) {
  throw diagram_error("line " + std::to_string(line) + ": " + msg);
}

int parse_id(const std::string& tok, int line) {
  size_t i = 0;
  while (i < tok.size() && !isdigit(static_cast<unsigned char>(tok[i]))) ++i;
  if (i == tok.size()) fail(line, "expected an identifier, got '" + tok + "'");
  for (size_t j = i; j < tok.size(); ++j)
    if (!isdigit(static_cast<unsigned char>(tok[j])))
      fail(line, "bad identifier '" + tok + "'");
  return std::stoi(tok.substr(i));
}

Dart parse_end(const std::string& tok, int line) {
  auto dot = tok.find('.');
  if (dot == std::string::npos || dot + 2 != tok.size() ||
      (tok[dot + 1] != '0' && tok[dot + 1] != '1'))
    fail(line, "expected <edge>.<0|1>, got '" + tok + "'");
  return Dart{parse_id(tok.substr(0, dot), line), tok[dot + 1] - '0'};
}

std::vector<std::string> tokenize(const std::string& s) {
  std::string spaced;
  for (char c : s) {
    if (c == '#') break;
    if (c == '(' || c == ')' || c == ',' || c == ':') {
      spaced += ' ';
      spaced += c;
      spaced += ' ';
    } else {
      spaced += c;
    }
  }
  std::istringstream is(spaced);
  std::vector<std::string> toks;
  std::string t;
  while (is >> t) toks.push_back(t);
  return toks;
}

void expect(const std::vector<std::string>& toks, size_t i,
            const std::string& what, int line) {
  if (i >= toks.size() || toks[i] != what)
    fail(line, "expected '" + what + "'" +
                   (i < toks.size() ? ", got '" + toks[i] + "'" : ""));
}

// rotate a cyclic sequence to start at its minimum
std::vector<int> rotated_to_min(std::vector<int> v) {
  auto it = std::min_element(v.begin(), v.end());
  std::rotate(v.begin(), it, v.end());
  return v;
}

void check_declarations(const BondedDiagram& d,
                        const std::vector<std::vector<int>>& decl_comps,
                        const std::map<int, std::vector<int>>& decl_chains) {
  auto derived = link_components(d);
  std::set<std::vector<int>> have;
  for (const auto& c : derived) have.insert(rotated_to_min(c));
  for (const auto& c : decl_comps)
    if (!have.count(rotated_to_min(c)))
      throw diagram_error(
          "declared component order does not match the attachments (component "
          "containing edge " + std::to_string(c.at(0)) + ")");
  if (decl_comps.size() != derived.size())
    throw diagram_error("declared components do not cover the link edges");
  for (const auto& [b, chain] : decl_chains) {
    auto got = bond_chain(d, b);
    auto rev = got;
    std::reverse(rev.begin(), rev.end());
    if (chain != got && chain != rev)
      throw diagram_error("declared chain of bond " + std::to_string(b) +
                          " does not match the attachments");
  }
}

}  // namespace

BondedDiagram parse_bpd(const std::string& text) {
  BondedDiagram d;
  std::vector<std::vector<int>> decl_comps;
  std::map<int, std::vector<int>> decl_chains;
  struct SiteLine {
    int line;
    SiteRef site;
    std::vector<Dart> ends;
  };
  std::vector<SiteLine> sites;

  std::istringstream is(text);
  std::string raw;
  int line = 0;
  bool saw_loops = false;
  while (std::getline(is, raw)) {
    ++line;
    auto toks = tokenize(raw);
    if (toks.empty()) continue;
    const std::string& kw = toks[0];
    if (kw == "comp") {
      if (toks.size() < 4) fail(line, "comp needs an id and edges");
      expect(toks, 2, ":", line);
      std::vector<int> es;
      for (size_t i = 3; i < toks.size(); ++i) {
        int e = parse_id(toks[i], line);
        if (d.edges.count(e)) fail(line, "edge " + toks[i] + " declared twice");
        d.edges[e] = Edge{EdgeKind::Link, -1, {}};
        es.push_back(e);
      }
      decl_comps.push_back(std::move(es));
    } else if (kw == "bond") {
      if (toks.size() < 6) fail(line, "bond needs an id, a color and edges");
      int b = parse_id(toks[1], line);
      expect(toks, 2, "color", line);
      int color = 0;
      try {
        color = std::stoi(toks[3]);
      } catch (...) {
        fail(line, "bad color '" + toks[3] + "'");
      }
      if (color < 1) fail(line, "colors are positive integers");
      expect(toks, 4, ":", line);
      if (d.bonds.count(b)) fail(line, "bond " + toks[1] + " declared twice");
      d.bonds[b] = Bond{color};
      std::vector<int> es;
      for (size_t i = 5; i < toks.size(); ++i) {
        int e = parse_id(toks[i], line);
        if (d.edges.count(e)) fail(line, "edge " + toks[i] + " declared twice");
        d.edges[e] = Edge{EdgeKind::Bond, b, {}};
        es.push_back(e);
      }
      decl_chains[b] = std::move(es);
    } else if (kw == "x" || kw == "v") {
      bool isx = kw == "x";
      size_t nends = isx ? 4 : 3;
      if (toks.size() < 3) fail(line, "truncated site line");
      int id = parse_id(toks[1], line);
      expect(toks, 2, "(", line);
      std::vector<Dart> ends;
      size_t i = 3;
      for (size_t k = 0; k < nends; ++k) {
        if (k) {
          expect(toks, i, ",", line);
          ++i;
        }
        if (i >= toks.size()) fail(line, "truncated site line");
        ends.push_back(parse_end(toks[i++], line));
      }
      expect(toks, i, ")", line);
      ++i;
      SiteRef ref{isx ? SiteKind::Crossing : SiteKind::Vertex, id};
      if (isx) {
        expect(toks, i, "over", line);
        ++i;
        if (i >= toks.size()) fail(line, "missing over index");
        int over = parse_id(toks[i], line);
        if (over < 0 || over > 3) fail(line, "over index must be 0..3");
        if (d.crossings.count(id)) fail(line, "crossing " + toks[1] + " declared twice");
        d.crossings[id] = Crossing{{}, over % 2};
      } else {
        if (d.vertices.count(id)) fail(line, "vertex " + toks[1] + " declared twice");
        d.vertices[id] = Vertex{};
      }
      sites.push_back({line, ref, std::move(ends)});
    } else if (kw == "loops") {
      if (toks.size() != 2) fail(line, "loops needs one count");
      if (saw_loops) fail(line, "loops declared twice");
      saw_loops = true;
      try {
        d.free_loops = std::stoi(toks[1]);
      } catch (...) {
        fail(line, "bad loop count");
      }
      if (d.free_loops < 0) fail(line, "loop count must be nonnegative");
    } else {
      fail(line, "unknown declaration '" + kw + "'");
    }
  }

  // attach ends now that all edges are declared
  for (const auto& s : sites) {
    for (size_t k = 0; k < s.ends.size(); ++k) {
      Dart t = s.ends[k];
      auto it = d.edges.find(t.edge);
      if (it == d.edges.end())
        fail(s.line, "end references undeclared edge " + std::to_string(t.edge));
      if (s.site.kind == SiteKind::Crossing)
        d.crossings.at(s.site.id).slots[k] = t;
      else
        d.vertices.at(s.site.id).slots[k] = t;
      it->second.at[t.end] = Port{s.site, static_cast<int>(k)};
    }
  }

  require_valid(d);
  check_declarations(d, decl_comps, decl_chains);
  return d;
}

std::string serialize_bpd(const BondedDiagram& d) {
  std::ostringstream os;
  auto end_str = [](Dart t) {
    return "e" + std::to_string(t.edge) + "." + std::to_string(t.end);
  };
  int cn = 0;
  for (const auto& comp : link_components(d)) {
    os << "comp c" << cn++ << " :";
    for (int e : comp) os << " e" << e;
    os << "\n";
  }
  for (const auto& [b, rec] : d.bonds) {
    os << "bond b" << b << " color " << rec.color << " :";
    for (int e : bond_chain(d, b)) os << " e" << e;
    os << "\n";
  }
  for (const auto& [id, x] : d.crossings) {
    os << "x x" << id << " ( " << end_str(x.slots[0]) << " , "
       << end_str(x.slots[1]) << " , " << end_str(x.slots[2]) << " , "
       << end_str(x.slots[3]) << " ) over " << x.over % 2 << "\n";
  }
  for (const auto& [id, v] : d.vertices) {
    os << "v v" << id << " ( " << end_str(v.slots[0]) << " , "
       << end_str(v.slots[1]) << " , " << end_str(v.slots[2]) << " )\n";
  }
  os << "loops " << d.free_loops << "\n";
  return os.str();
}

BondedDiagram diagram_from_json(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const std::exception& e) {
    throw diagram_error(std::string("bad JSON: ") + e.what());
  }
  BondedDiagram d;
  std::vector<std::vector<int>> decl_comps;
  std::map<int, std::vector<int>> decl_chains;
  try {
    for (const auto& comp : j.value("components", nlohmann::json::array())) {
      std::vector<int> es;
      for (const auto& e : comp) {
        int id = e.get<int>();
        if (d.edges.count(id)) throw diagram_error("edge declared twice in JSON");
        d.edges[id] = Edge{EdgeKind::Link, -1, {}};
        es.push_back(id);
      }
      decl_comps.push_back(std::move(es));
    }
    for (const auto& b : j.value("bonds", nlohmann::json::array())) {
      int id = b.at("id").get<int>();
      int color = b.value("color", 1);
      if (color < 1) throw diagram_error("colors are positive integers");
      if (d.bonds.count(id)) throw diagram_error("bond declared twice in JSON");
      d.bonds[id] = Bond{color};
      std::vector<int> es;
      for (const auto& e : b.at("edges")) {
        int eid = e.get<int>();
        if (d.edges.count(eid)) throw diagram_error("edge declared twice in JSON");
        d.edges[eid] = Edge{EdgeKind::Bond, id, {}};
        es.push_back(eid);
      }
      decl_chains[id] = std::move(es);
    }
    auto attach_all = [&](const nlohmann::json& arr, SiteKind kind, size_t n) {
      for (const auto& s : arr) {
        int id = s.at("id").get<int>();
        SiteRef ref{kind, id};
        if (kind == SiteKind::Crossing) {
          if (d.crossings.count(id)) throw diagram_error("crossing declared twice in JSON");
          int over = s.value("over", 0);
          if (over < 0 || over > 3) throw diagram_error("over index must be 0..3");
          d.crossings[id] = Crossing{{}, over % 2};
        } else {
          if (d.vertices.count(id)) throw diagram_error("vertex declared twice in JSON");
          d.vertices[id] = Vertex{};
        }
        const auto& ends = s.at("ends");
        if (ends.size() != n) throw diagram_error("wrong number of ends in JSON site");
        for (size_t k = 0; k < n; ++k) {
          int eid = ends[k].at(0).get<int>();
          int bit = ends[k].at(1).get<int>();
          if (bit != 0 && bit != 1) throw diagram_error("end bit must be 0 or 1");
          if (!d.edges.count(eid)) throw diagram_error("end references undeclared edge");
          Dart t{eid, bit};
          if (kind == SiteKind::Crossing)
            d.crossings.at(id).slots[k] = t;
          else
            d.vertices.at(id).slots[k] = t;
          d.edges.at(eid).at[bit] = Port{ref, static_cast<int>(k)};
        }
      }
    };
    attach_all(j.value("crossings", nlohmann::json::array()), SiteKind::Crossing, 4);
    attach_all(j.value("vertices", nlohmann::json::array()), SiteKind::Vertex, 3);
    d.free_loops = j.value("loops", 0);
    if (d.free_loops < 0) throw diagram_error("loop count must be nonnegative");
  } catch (const nlohmann::json::exception& e) {
    throw diagram_error(std::string("bad JSON diagram: ") + e.what());
  }
  require_valid(d);
  check_declarations(d, decl_comps, decl_chains);
  return d;
}

std::string diagram_to_json(const BondedDiagram& d) {
  nlohmann::json j;
  j["components"] = nlohmann::json::array();
  for (const auto& comp : link_components(d)) j["components"].push_back(comp);
  j["bonds"] = nlohmann::json::array();
  for (const auto& [b, rec] : d.bonds)
    j["bonds"].push_back({{"id", b}, {"color", rec.color}, {"edges", bond_chain(d, b)}});
  j["crossings"] = nlohmann::json::array();
  for (const auto& [id, x] : d.crossings) {
    nlohmann::json ends = nlohmann::json::array();
    for (const Dart& t : x.slots) ends.push_back({t.edge, t.end});
    j["crossings"].push_back({{"id", id}, {"ends", ends}, {"over", x.over % 2}});
  }
  j["vertices"] = nlohmann::json::array();
  for (const auto& [id, v] : d.vertices) {
    nlohmann::json ends = nlohmann::json::array();
    for (const Dart& t : v.slots) ends.push_back({t.edge, t.end});
    j["vertices"].push_back({{"id", id}, {"ends", ends}});
  }
  j["loops"] = d.free_loops;
  return j.dump(2);
}

}  // namespace bondskein
