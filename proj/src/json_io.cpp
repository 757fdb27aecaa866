#include "threepage/json_io.hpp"

#include <json.hpp>

namespace threepage {

using ordered_json = nlohmann::ordered_json;

namespace {

std::string letter_str(Letter l) {
  return std::string(1, kind_char(l.kind)) + std::to_string(l.index);
}

const char* triviality_str(Triviality t) {
  switch (t) {
    case Triviality::CertifiedTrivial: return "CertifiedTrivial";
    case Triviality::CertifiedNontrivial: return "CertifiedNontrivial";
    case Triviality::Unknown: return "Unknown";
  }
  return "?";
}

}  // namespace

std::string diagram_json(const Word& w, const MarkedGraphDiagram& d) {
  ordered_json j;
  ordered_json pts = ordered_json::array();
  for (const Letter& l : w.letters()) pts.push_back(letter_str(l));
  j["axis_points"] = pts;
  ordered_json pages = ordered_json::array();
  for (int pg = 0; pg < 3; ++pg) {
    ordered_json arcs = ordered_json::array();
    for (const PageArc& a : d.page_arcs[pg]) {
      arcs.push_back({a.open.pos, a.close.pos});
    }
    pages.push_back(arcs);
  }
  j["page_arcs"] = pages;
  ordered_json comps = ordered_json::array();
  for (const auto& cyc : d.components) {
    ordered_json c = ordered_json::array();
    for (const EndRef& e : cyc) c.push_back(e.pos);
    comps.push_back(c);
  }
  j["components"] = comps;
  ordered_json sing = ordered_json::array();
  for (const SingularPoint& sp : d.singular_points) {
    ordered_json s;
    s["position"] = sp.pos;
    s["branches"] = {{sp.branches[0].first, sp.branches[0].second},
                     {sp.branches[1].first, sp.branches[1].second}};
    sing.push_back(s);
  }
  j["singular_points"] = sing;
  return j.dump(2);
}

std::string invariants_json(const Word& w, const AdmissibilityReport& rep) {
  ordered_json j;
  j["word"] = format_word(w);
  DecodeResult dr = decode(w);
  j["components"] = static_cast<int>(dr.diagram->components.size());
  int nx = 0;
  for (const Letter& l : w.letters())
    if (l.kind == Kind::X) ++nx;
  j["singular_points"] = nx;
  j["euler_characteristic"] = euler_characteristic(w);
  j["resolution_positive"] = {
      {"word", format_word(resolve(w, ResolutionSign::Positive))},
      {"triviality", triviality_str(rep.positive.result)},
  };
  j["resolution_negative"] = {
      {"word", format_word(resolve(w, ResolutionSign::Negative))},
      {"triviality", triviality_str(rep.negative.result)},
  };
  j["admissible"] = rep.overall == Admissibility::Admissible      ? "Admissible"
                    : rep.overall == Admissibility::NotAdmissible ? "NotAdmissible"
                                                                  : "Unknown";
  bool classical = nx == 0;
  if (classical) {
    LinkDiagram D = to_link_diagram(w);
    j["crossings"] = static_cast<int>(D.crossings.size());
    ordered_json lk = ordered_json::array();
    for (const auto& row : linking_matrix(D)) lk.push_back(row);
    j["linking_matrix"] = lk;
    if (D.crossings.size() <= kBracketCrossingCap) {
      j["normalized_bracket"] = normalized_bracket(D).str();
    }
  }
  return j.dump(2);
}

PlanarMarkedDiagram diagram_from_json(const std::string& text) {
  ordered_json j = ordered_json::parse(text);
  PlanarMarkedDiagram d;
  for (const auto& jv : j.at("vertices")) {
    PlanarVertex v;
    v.id = jv.at("id").get<int>();
    std::string type = jv.at("type").get<std::string>();
    if (type == "crossing") {
      v.type = VertexType::Crossing;
      v.over_or_bridge = jv.at("over").get<int>();
    } else if (type == "singular") {
      v.type = VertexType::Singular;
      v.over_or_bridge = jv.at("bridge").get<int>();
    } else {
      throw std::runtime_error("unknown vertex type \"" + type + "\"");
    }
    auto rot = jv.at("rotation");
    if (rot.size() != 4) throw std::runtime_error("rotation must list 4 edges");
    for (int s = 0; s < 4; ++s) v.rotation[s] = rot[s].get<int>();
    d.vertices.push_back(v);
  }
  for (const auto& je : j.at("edges")) {
    PlanarEdge e;
    e.id = je.at("id").get<int>();
    auto ends = je.at("ends");
    if (ends.size() != 2) throw std::runtime_error("edge must have 2 ends");
    for (int k = 0; k < 2; ++k) {
      e.ends[k] = {ends[k][0].get<int>(), ends[k][1].get<int>()};
    }
    d.edges.push_back(e);
  }
  if (j.contains("free_loops")) d.free_loops = j.at("free_loops").get<int>();
  return d;
}

std::string diagram_to_json(const PlanarMarkedDiagram& d) {
  ordered_json j;
  ordered_json vs = ordered_json::array();
  for (const PlanarVertex& v : d.vertices) {
    ordered_json jv;
    jv["id"] = v.id;
    jv["type"] = v.type == VertexType::Crossing ? "crossing" : "singular";
    jv["rotation"] = v.rotation;
    if (v.type == VertexType::Crossing) jv["over"] = v.over_or_bridge;
    else jv["bridge"] = v.over_or_bridge;
    vs.push_back(jv);
  }
  j["vertices"] = vs;
  ordered_json es = ordered_json::array();
  for (const PlanarEdge& e : d.edges) {
    ordered_json je;
    je["id"] = e.id;
    je["ends"] = {{e.ends[0].first, e.ends[0].second}, {e.ends[1].first, e.ends[1].second}};
    es.push_back(je);
  }
  j["edges"] = es;
  j["free_loops"] = d.free_loops;
  return j.dump(2);
}

}  // namespace threepage
