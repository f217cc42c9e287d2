#pragma once

// JSON and DOT serialization. Graph schema:
//   {"vertices": [name...], "edges": [[name,name]...], "loops": [name...]}
// where the loops array lists one vertex name per loop, file order fixing the
// loop ids. Serialization is canonical: vertex order preserved, edges sorted.

#include <string>

#include <nlohmann/json.hpp>

#include "lcrigid/balance.hpp"
#include "lcrigid/count.hpp"
#include "lcrigid/cover.hpp"
#include "lcrigid/graph.hpp"

namespace lcrigid {

inline LoopedSimpleGraph graphFromJson(const nlohmann::json& doc) {
  if (!doc.is_object()) throw std::invalid_argument("graph document must be a JSON object");
  if (!doc.contains("vertices") || !doc["vertices"].is_array())
    throw std::invalid_argument("missing \"vertices\" array");
  std::vector<std::string> names;
  for (const auto& v : doc["vertices"]) {
    if (!v.is_string()) throw std::invalid_argument("vertex name must be a string");
    names.push_back(v.get<std::string>());
  }
  std::vector<std::array<std::string, 2>> edges;
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) throw std::invalid_argument("\"edges\" must be an array");
    for (const auto& e : doc["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
        throw std::invalid_argument("malformed edge pair");
      edges.push_back({e[0].get<std::string>(), e[1].get<std::string>()});
    }
  }
  std::vector<std::string> loops;
  if (doc.contains("loops")) {
    if (!doc["loops"].is_array()) throw std::invalid_argument("\"loops\" must be an array");
    for (const auto& l : doc["loops"]) {
      if (!l.is_string()) throw std::invalid_argument("loop entry must be a vertex name");
      loops.push_back(l.get<std::string>());
    }
  }
  return LoopedSimpleGraph::fromNames(std::move(names), edges, loops);
}

inline LoopedSimpleGraph parseGraph(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
  }
  return graphFromJson(doc);
}

inline nlohmann::json graphToJson(const LoopedSimpleGraph& g) {
  nlohmann::json doc;
  doc["vertices"] = g.vertexNames();
  auto edges = g.edges();
  std::sort(edges.begin(), edges.end());
  nlohmann::json edgeArr = nlohmann::json::array();
  for (auto [u, v] : edges)
    edgeArr.push_back(nlohmann::json::array({g.vertexName(u), g.vertexName(v)}));
  doc["edges"] = std::move(edgeArr);
  nlohmann::json loopArr = nlohmann::json::array();
  for (int v : g.loops()) loopArr.push_back(g.vertexName(v));
  doc["loops"] = std::move(loopArr);
  return doc;
}

inline std::string serializeGraph(const LoopedSimpleGraph& g) { return graphToJson(g).dump(); }

// DOT export; loops render as self-edges labeled by loop id.
inline std::string toDot(const LoopedSimpleGraph& g) {
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    return out + "\"";
  };
  std::string out = "graph G {\n";
  for (const auto& name : g.vertexNames()) out += "  " + quote(name) + ";\n";
  for (auto [u, v] : g.edges())
    out += "  " + quote(g.vertexName(u)) + " -- " + quote(g.vertexName(v)) + ";\n";
  for (int l = 0; l < g.loopCount(); ++l) {
    const std::string name = quote(g.vertexName(g.loopVertex(l)));
    out += "  " + name + " -- " + name + " [label=\"l" + std::to_string(l) + "\"];\n";
  }
  out += "}\n";
  return out;
}

inline nlohmann::json elementToJson(const LoopedSimpleGraph& g, Element e) {
  if (!g.hasElement(e)) throw std::invalid_argument("unknown element");
  if (e.kind == ElementKind::edge) {
    const auto [u, v] = g.edges()[e.index];
    return nlohmann::json{{"edge", {g.vertexName(u), g.vertexName(v)}}};
  }
  return nlohmann::json{{"loop", e.index}, {"vertex", g.vertexName(g.loopVertex(e.index))}};
}

inline nlohmann::json elementSetToJson(const LoopedSimpleGraph& g, const ElementSet& s) {
  nlohmann::json arr = nlohmann::json::array();
  for (Element e : s) arr.push_back(elementToJson(g, e));
  return arr;
}

inline nlohmann::json certificateToJson(const LoopedSimpleGraph& g, const RankCertificate& c) {
  nlohmann::json parts = nlohmann::json::array();
  for (const auto& p : c.parts) parts.push_back(elementSetToJson(g, p));
  return nlohmann::json{{"rank", c.rank},
                        {"discarded", elementSetToJson(g, c.discarded)},
                        {"parts", std::move(parts)}};
}

inline nlohmann::json coverToJson(const LoopedSimpleGraph& g, const Cover& c) {
  auto nameList = [&](const std::vector<int>& verts) {
    nlohmann::json arr = nlohmann::json::array();
    for (int v : verts) arr.push_back(g.vertexName(v));
    return arr;
  };
  nlohmann::json members = nlohmann::json::array();
  for (const auto& x : c.members) members.push_back(nameList(x));
  return nlohmann::json{{"discarded_loops", c.discardedLoops},
                        {"looped_member", nameList(c.loopedMember)},
                        {"members", std::move(members)}};
}

inline nlohmann::json balanceReportToJson(const LoopedSimpleGraph& g, const BalanceReport& r) {
  nlohmann::json doc{{"balanced", r.balanced}};
  if (r.witness) {
    auto nameList = [&](const std::vector<int>& verts) {
      nlohmann::json arr = nlohmann::json::array();
      for (int v : verts) arr.push_back(g.vertexName(v));
      return arr;
    };
    doc["witness"] = nlohmann::json{{"T", nameList(r.witness->removed)},
                                    {"component", nameList(r.witness->component)},
                                    {"looped_count", r.witness->loopedVertices},
                                    {"required", r.witness->required}};
  } else {
    doc["witness"] = nullptr;
  }
  return doc;
}

}  // namespace lcrigid
