#pragma once

// JSON interchange for complexes and their decorations.  Canonical
// serialization sorts generator labels; loading a canonical file and saving
// it again reproduces the bytes exactly.

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <string>
#include <vector>

#include "scx/decor.hpp"
#include "scx/homology.hpp"
#include "scx/sset.hpp"

namespace scx {

using json = nlohmann::json;

inline json ref_to_json(const FiniteSimplicialSet& X, const SimplexRef& r) {
  return json{{"g", X.label(r.gdim, r.gen)}, {"word", r.word}};
}

// Copy with generators sorted by label in every dimension.
inline FiniteSimplicialSet canonical_copy(const FiniteSimplicialSet& X) {
  std::vector<std::vector<int>> order(static_cast<std::size_t>(X.top_dim()) + 1);
  std::vector<std::vector<int>> newindex(
      static_cast<std::size_t>(X.top_dim()) + 1);
  for (int d = 0; d <= X.top_dim(); ++d) {
    order[d].resize(X.num_generators(d));
    for (int g = 0; g < X.num_generators(d); ++g) order[d][g] = g;
    std::sort(order[d].begin(), order[d].end(), [&](int a, int b) {
      return X.label(d, a) < X.label(d, b);
    });
    newindex[d].resize(X.num_generators(d));
    for (int pos = 0; pos < X.num_generators(d); ++pos)
      newindex[d][order[d][pos]] = pos;
  }
  FiniteSimplicialSet Y;
  for (int d = 0; d <= X.top_dim(); ++d)
    for (int pos = 0; pos < X.num_generators(d); ++pos) {
      int g = order[d][pos];
      std::vector<SimplexRef> faces;
      if (d > 0)
        for (const auto& f : X.generator_faces(d, g))
          faces.push_back(SimplexRef{f.gdim, newindex[f.gdim][f.gen], f.word});
      Y.add_generator(d, X.label(d, g), std::move(faces));
    }
  return Y;
}

inline json sset_to_json(const FiniteSimplicialSet& X0) {
  auto X = canonical_copy(X0);
  json out;
  out["top_dim"] = X.top_dim();
  json gens = json::array();
  for (int d = 0; d <= X.top_dim(); ++d) {
    json level = json::array();
    for (int g = 0; g < X.num_generators(d); ++g) level.push_back(X.label(d, g));
    gens.push_back(level);
  }
  out["generators"] = gens;
  json faces = json::object();
  for (int d = 1; d <= X.top_dim(); ++d)
    for (int g = 0; g < X.num_generators(d); ++g) {
      json fs = json::array();
      for (const auto& f : X.generator_faces(d, g))
        fs.push_back(ref_to_json(X, f));
      faces[X.label(d, g)] = fs;
    }
  out["faces"] = faces;
  return out;
}

inline FiniteSimplicialSet sset_from_json(const json& j) {
  FiniteSimplicialSet X;
  if (!j.contains("top_dim") || !j.contains("generators"))
    throw PreconditionError("json: missing top_dim or generators");
  const auto& gens = j.at("generators");
  // Positive-dimension labels must be unique across dimensions for the
  // faces table to be unambiguous.
  std::map<std::string, std::pair<int, int>> by_label;
  for (int d = 0; d < static_cast<int>(gens.size()); ++d)
    for (const auto& l : gens[d]) {
      std::string label = l.get<std::string>();
      if (d > 0 && by_label.count(label))
        throw PreconditionError("json: duplicate label " + label);
      by_label[label] = {d, -1};
    }
  const json faces = j.value("faces", json::object());
  for (int d = 0; d < static_cast<int>(gens.size()); ++d)
    for (const auto& l : gens[d]) {
      std::string label = l.get<std::string>();
      std::vector<SimplexRef> fs;
      if (d > 0) {
        if (!faces.contains(label))
          throw PreconditionError("json: missing faces for " + label);
        for (const auto& fr : faces.at(label)) {
          std::string fg = fr.at("g").get<std::string>();
          auto it = by_label.find(fg);
          if (it == by_label.end() || it->second.second < 0)
            throw PreconditionError("json: face refers to unknown " + fg);
          SimplexRef r{it->second.first, it->second.second,
                       fr.at("word").get<std::vector<int>>()};
          fs.push_back(r);
        }
      }
      by_label[label].second = X.add_generator(d, label, std::move(fs));
    }
  X.validate();
  return X;
}

inline json decorated_to_json(const DecoratedSSet& D) {
  json out = sset_to_json(D.base);
  json cells = json::array();
  std::vector<std::string> labels;
  for (int g : D.decorated) labels.push_back(D.base.label(D.cell_dim(), g));
  std::sort(labels.begin(), labels.end());
  for (const auto& l : labels)
    cells.push_back(json{{"g", l}, {"word", json::array()}});
  out[D.kind == DecorKind::Marked ? "marked" : "thin"] = cells;
  return out;
}

inline DecoratedSSet decorated_from_json(const json& j) {
  DecoratedSSet D;
  D.base = sset_from_json(j);
  D.kind = j.contains("thin") ? DecorKind::Scaled : DecorKind::Marked;
  const char* key = D.kind == DecorKind::Scaled ? "thin" : "marked";
  if (j.contains(key))
    for (const auto& c : j.at(key)) {
      std::string l = c.at("g").get<std::string>();
      auto g = D.base.label_index(D.cell_dim(), l);
      if (!g) throw PreconditionError("json: decorated cell not found: " + l);
      D.decorated.insert(*g);
    }
  D.validate();
  return D;
}

inline json pattern_to_json(const CategoricalPattern& P) {
  json out = sset_to_json(P.base);
  auto cells = [&](const std::set<int>& s, int dim) {
    std::vector<std::string> labels;
    for (int g : s) labels.push_back(P.base.label(dim, g));
    std::sort(labels.begin(), labels.end());
    json arr = json::array();
    for (const auto& l : labels)
      arr.push_back(json{{"g", l}, {"word", json::array()}});
    return arr;
  };
  out["marked"] = cells(P.marked, 1);
  out["thin"] = cells(P.thin, 2);
  json cones = json::array();
  for (const auto& c : P.cones)
    cones.push_back(json{{"K", sset_to_json(c.K)}, {"map", c.vertex}});
  out["cones"] = cones;
  return out;
}

inline CategoricalPattern pattern_from_json(const json& j) {
  CategoricalPattern P;
  P.base = sset_from_json(j);
  auto fill = [&](const char* key, int dim, std::set<int>& out) {
    if (!j.contains(key)) return;
    for (const auto& c : j.at(key)) {
      auto g = P.base.label_index(dim, c.at("g").get<std::string>());
      if (!g) throw PreconditionError("json: pattern cell not found");
      out.insert(*g);
    }
  };
  fill("marked", 1, P.marked);
  fill("thin", 2, P.thin);
  if (j.contains("cones"))
    for (const auto& c : j.at("cones"))
      P.cones.push_back({sset_from_json(c.at("K")),
                         c.at("map").get<std::string>()});
  return P;
}

inline json certificate_to_json(const HomologyCertificate& C) {
  json out;
  out["betti"] = C.betti;
  json tors = json::array();
  for (const auto& t : C.torsion) {
    json level = json::array();
    for (const auto& f : t) level.push_back(f.get_str());
    tors.push_back(level);
  }
  out["torsion"] = tors;
  out["connected"] = C.connected;
  out["empty"] = C.empty_complex;
  if (C.witness) out["witness"] = *C.witness;
  return out;
}

inline std::string dump_canonical(const json& j) { return j.dump(1) + "\n"; }

inline void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ScxError("cannot write " + path);
  out << dump_canonical(j);
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PreconditionError("cannot read " + path);
  return json::parse(in);
}

}  // namespace scx
