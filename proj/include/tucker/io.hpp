#pragma once

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "json.hpp"
#include "tucker/borsuk.hpp"
#include "tucker/complex.hpp"
#include "tucker/errors.hpp"
#include "tucker/flag.hpp"
#include "tucker/labeling.hpp"
#include "tucker/oracle.hpp"
#include "tucker/pathfinder.hpp"

namespace tucker::io {

using json = nlohmann::json;

struct ComplexDocument {
  SymmetricComplex complex;
  std::optional<HemisphereFlag> flag;
};

inline json simplex_json(const Simplex& s) { return json(std::vector<VertexId>(s.begin(), s.end())); }

inline Simplex parse_simplex(const json& j) { return Simplex(j.get<std::vector<VertexId>>()); }

inline json to_json(const SymmetricComplex& k, const HemisphereFlag* flag = nullptr) {
  json vertices = json::array();
  for (VertexId v = 0; v < k.vertex_count(); ++v) {
    json jv = {{"id", v}, {"antipode", k.antipode(v)}};
    if (k.has_coords()) jv["coords"] = k.coords(v);
    vertices.push_back(std::move(jv));
  }
  json top = json::array();
  for (const Simplex& s : k.maximal_simplices()) top.push_back(simplex_json(s));
  json doc = {{"n", k.dim()}, {"vertices", std::move(vertices)}, {"maximal_simplices", std::move(top)}};
  if (flag) {
    json jf = json::object();
    for (int d = 0; d <= flag->dim(); ++d) {
      json level = json::array();
      for (const Simplex& s : flag->levels()[d]) level.push_back(simplex_json(s));
      jf[std::to_string(d)] = std::move(level);
    }
    doc["flag"] = std::move(jf);
  }
  return doc;
}

inline json to_json(const Triangulation& t) { return to_json(t.complex, &t.flag); }

/// Parses a complex (+ optional flag) document.  Malformed input raises
/// ValidationError.
inline ComplexDocument parse_complex(const json& doc) {
  try {
    const int n = doc.at("n").get<int>();
    const auto& jv = doc.at("vertices");
    std::vector<VertexId> antipode(jv.size());
    std::vector<bool> seen(jv.size(), false);
    std::vector<std::vector<double>> coords(jv.size());
    std::size_t with_coords = 0;
    for (const auto& v : jv) {
      const auto id = v.at("id").get<VertexId>();
      if (id >= jv.size() || seen[id])
        throw ValidationError("vertex ids must be dense from 0 without repeats");
      seen[id] = true;
      antipode[id] = v.at("antipode").get<VertexId>();
      if (v.contains("coords")) {
        coords[id] = v.at("coords").get<std::vector<double>>();
        ++with_coords;
      }
    }
    if (with_coords != 0 && with_coords != jv.size())
      throw ValidationError("coordinates must be given for all vertices or none");
    std::vector<Simplex> top;
    for (const auto& s : doc.at("maximal_simplices")) top.push_back(parse_simplex(s));
    std::optional<std::vector<std::vector<double>>> c;
    if (with_coords) c = std::move(coords);
    SymmetricComplex k(n, std::move(antipode), std::move(top), std::move(c));

    std::optional<HemisphereFlag> flag;
    if (doc.contains("flag")) {
      const auto& jf = doc.at("flag");
      std::vector<std::vector<Simplex>> levels(static_cast<std::size_t>(n) + 1);
      for (const auto& [key, list] : jf.items()) {
        std::size_t pos = 0;
        const int d = std::stoi(key, &pos);
        if (pos != key.size() || d < 0 || d > n) throw ValidationError("bad flag level key '" + key + "'");
        for (const auto& s : list) levels[d].push_back(parse_simplex(s));
      }
      for (const auto& s : levels)
        for (const auto& x : s)
          if (x[x.size() - 1] >= k.vertex_count())
            throw ValidationError("flag simplex " + to_string(x) + " uses unknown vertex");
      flag.emplace(k, std::move(levels));
    }
    return {std::move(k), std::move(flag)};
  } catch (const ValidationError&) {
    throw;
  } catch (const std::exception& e) {
    throw ValidationError(std::string("malformed complex document: ") + e.what());
  }
}

inline json to_json(const Labeling& l) {
  json labels = json::object();
  for (VertexId v = 0; v < l.size(); ++v) labels[std::to_string(v)] = l[v];
  return {{"m", l.bound()}, {"labels", std::move(labels)}};
}

/// Parses a labeling document.  Only one vertex per antipodal pair is
/// required; the other is mirrored by negation.  When both are present they
/// are kept as given (validate_labeling reports any asymmetry).
inline Labeling parse_labeling(const json& doc, const SymmetricComplex& k) {
  try {
    const int m = doc.at("m").get<int>();
    std::vector<int> labels(k.vertex_count(), 0);
    for (const auto& [key, value] : doc.at("labels").items()) {
      std::size_t pos = 0;
      const long v = std::stol(key, &pos);
      if (pos != key.size() || v < 0 || static_cast<std::size_t>(v) >= k.vertex_count())
        throw ValidationError("label for unknown vertex '" + key + "'");
      labels[v] = value.get<int>();
      if (labels[v] == 0) throw ValidationError("zero label at vertex " + key);
    }
    for (VertexId v = 0; v < k.vertex_count(); ++v)
      if (labels[v] == 0) {
        const int mirror = labels[k.antipode(v)];
        if (mirror == 0)
          throw ValidationError("no label for vertex " + std::to_string(v) + " or its antipode");
        labels[v] = -mirror;
      }
    return Labeling(m, std::move(labels));
  } catch (const ValidationError&) {
    throw;
  } catch (const std::exception& e) {
    throw ValidationError(std::string("malformed labeling document: ") + e.what());
  }
}

inline json to_json(const Node& v) {
  return {{"simplex", simplex_json(v.simplex)},
          {"labels", v.labels},
          {"carrier", {{"dim", v.carrier.dim}, {"sign", v.carrier.sign}}},
          {"type", static_cast<int>(v.type)}};
}

inline json to_json(const Witness& w) {
  json j = {{"simplex", simplex_json(w.simplex)}, {"labels", w.labels}};
  if (w.complementary_edge) j["edge"] = {w.complementary_edge->first, w.complementary_edge->second};
  return j;
}

inline json to_json(const PathTrace& t) {
  json nodes = json::array();
  for (const Node& v : t.nodes) nodes.push_back(to_json(v));
  return {{"trace", std::move(nodes)},
          {"termination", to_string(t.termination)},
          {"short_circuit", t.short_circuit},
          {"witness", to_json(t.witness)}};
}

inline json to_json(const OracleReport& r, bool full = false) {
  json endpoints = json::array();
  for (const Simplex& s : r.endpoints) endpoints.push_back(simplex_json(s));
  json claims = json::array();
  for (const auto& c : r.claims)
    claims.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  std::size_t paths = 0, cycles = 0;
  for (const auto& c : r.components) ++(c.closed ? cycles : paths);
  json j = {{"mode", to_string(r.mode)},
            {"alternating", {{"positive", r.alternating.positive}, {"negative", r.alternating.negative}}},
            {"node_count", r.nodes.size()},
            {"edge_count", r.edges.size()},
            {"path_count", paths},
            {"cycle_count", cycles},
            {"endpoint_count", r.endpoint_count},
            {"endpoints", std::move(endpoints)},
            {"claims", std::move(claims)}};
  if (full) {
    json edges = json::array();
    for (const auto& [a, b] : r.edges) edges.push_back({simplex_json(a), simplex_json(b)});
    json comps = json::array();
    for (const auto& c : r.components) {
      json nodes = json::array();
      for (const Simplex& s : c.nodes) nodes.push_back(simplex_json(s));
      comps.push_back({{"closed", c.closed}, {"nodes", std::move(nodes)}});
    }
    json nodes = json::array();
    for (const Node& v : r.nodes) {
      json jv = to_json(v);
      jv["degree"] = r.degree.at(v.simplex);
      nodes.push_back(std::move(jv));
    }
    j["nodes"] = std::move(nodes);
    j["edges"] = std::move(edges);
    j["components"] = std::move(comps);
  }
  return j;
}

inline json to_json(const BorsukWitness& w) {
  json j = {{"edge", {w.u, w.w}},
            {"labels", {w.label_u, w.label_w}},
            {"point", w.point},
            {"partner", w.partner},
            {"value", w.value},
            {"residual", w.residual},
            {"max_edge_length", w.max_edge_length},
            {"refinements", w.refinements},
            {"trace", to_json(w.trace)}};
  if (w.lipschitz) j["lipschitz"] = *w.lipschitz;
  if (w.bound) j["bound"] = *w.bound;
  if (w.mesh_bound) j["mesh_bound"] = *w.mesh_bound;
  return j;
}

inline std::map<VertexId, std::vector<double>> parse_samples(const json& doc) {
  try {
    std::map<VertexId, std::vector<double>> out;
    for (const auto& [key, value] : doc.at("samples").items()) {
      std::size_t pos = 0;
      const unsigned long v = std::stoul(key, &pos);
      if (pos != key.size()) throw ValidationError("bad vertex key '" + key + "'");
      out.emplace(static_cast<VertexId>(v), value.get<std::vector<double>>());
    }
    return out;
  } catch (const ValidationError&) {
    throw;
  } catch (const std::exception& e) {
    throw ValidationError(std::string("malformed sample table: ") + e.what());
  }
}

inline json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

inline void write_file(const std::string& path, const json& doc) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << doc.dump(2) << '\n';
}

}  // namespace tucker::io
