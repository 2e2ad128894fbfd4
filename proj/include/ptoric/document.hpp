// Copyright 2026 The ptoric Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// JSON polytope documents and generator-matrix export (CSV / JSON).
//
// Polytope document:
//   {"dim": 2, "vertices": [[0,0],[1,0],[-2,3]],
//    "facets": [{"normal": [0,1], "offset": 0}, ...],   // optional, required for dim >= 4
//    "q": 4, "order": "lex", "lambda_max": 10}            // optional
//
// Matrix document ("ptoric-matrix", version 1): field description, row
// points, column labels and the entries as integer element codes.

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "ptoric/code.hpp"
#include "ptoric/errors.hpp"
#include "ptoric/gf.hpp"
#include "ptoric/polytope.hpp"

namespace ptoric {

using json = nlohmann::json;

struct PolytopeDocument {
  std::size_t dim = 0;
  std::vector<Point> vertices;
  std::vector<Facet> facets;
  std::optional<std::uint32_t> q;
  std::optional<std::string> order;
  std::optional<Integer> lambda_max;

  [[nodiscard]] LatticePolytope polytope() const {
    if (facets.empty()) return LatticePolytope::from_vertices(vertices);
    return LatticePolytope::from_vrep_hrep(vertices, facets);
  }
};

inline PolytopeDocument parse_document(const json& doc) {
  PolytopeDocument d;
  try {
    if (!doc.is_object()) throw ValidationError("polytope document must be a JSON object");
    if (!doc.contains("vertices")) throw ValidationError("polytope document has no \"vertices\"");
    for (const auto& v : doc.at("vertices")) d.vertices.push_back(v.get<Point>());
    if (d.vertices.empty()) throw ValidationError("\"vertices\" is empty");
    d.dim = doc.contains("dim") ? doc.at("dim").get<std::size_t>() : d.vertices.front().size();
    for (const auto& v : d.vertices)
      if (v.size() != d.dim) throw ValidationError("vertex " + to_string(v) + " does not have dimension " + std::to_string(d.dim));
    if (doc.contains("facets"))
      for (const auto& f : doc.at("facets"))
        d.facets.push_back(Facet{f.at("normal").get<IntVector>(), f.at("offset").get<Integer>()});
    if (doc.contains("q")) d.q = doc.at("q").get<std::uint32_t>();
    if (doc.contains("order")) d.order = doc.at("order").get<std::string>();
    if (doc.contains("lambda_max")) d.lambda_max = doc.at("lambda_max").get<Integer>();
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed polytope document: ") + e.what());
  }
  return d;
}

inline PolytopeDocument load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw ValidationError("cannot parse " + path + ": " + e.what());
  }
  return parse_document(doc);
}

inline json document_to_json(const PolytopeDocument& d) {
  json doc{{"dim", d.dim}, {"vertices", d.vertices}};
  if (!d.facets.empty()) {
    doc["facets"] = json::array();
    for (const auto& f : d.facets) doc["facets"].push_back({{"normal", f.normal}, {"offset", f.offset}});
  }
  if (d.q) doc["q"] = *d.q;
  if (d.order) doc["order"] = *d.order;
  if (d.lambda_max) doc["lambda_max"] = *d.lambda_max;
  return doc;
}

inline std::string matrix_to_csv(const EvaluationMatrix& m) {
  std::ostringstream os;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? "," : "") << m.entries(r, c).code;
    os << '\n';
  }
  return os.str();
}

inline json matrix_to_json(const EvaluationMatrix& m) {
  const Field field(m.q);
  json cols = json::array();
  for (std::size_t c = 0; c < m.cols(); ++c)
    cols.push_back({{"face", m.columns[c].face}, {"dim", m.column_face_dims[c]}, {"tuple", m.columns[c].tuple}});
  json entries = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.entries(r, c).code);
    entries.push_back(std::move(row));
  }
  return json{{"format", "ptoric-matrix"},
              {"version", 1},
              {"field", {{"q", field.q()}, {"p", field.p()}, {"k", field.k()}, {"modulus", field.modulus()},
                         {"encoding", "sum c_i p^i"}}},
              {"rows", m.rows()},
              {"cols", m.cols()},
              {"row_points", m.row_points},
              {"row_faces", m.row_faces},
              {"columns", std::move(cols)},
              {"entries", std::move(entries)}};
}

inline EvaluationMatrix matrix_from_json(const json& doc) {
  EvaluationMatrix m;
  try {
    if (doc.at("format") != "ptoric-matrix") throw ValidationError("not a ptoric-matrix document");
    m.q = doc.at("field").at("q").get<std::uint32_t>();
    const Field field(m.q);
    const auto rows = doc.at("rows").get<std::size_t>();
    const auto cols = doc.at("cols").get<std::size_t>();
    m.row_points = doc.at("row_points").get<std::vector<Point>>();
    m.row_faces = doc.at("row_faces").get<std::vector<std::size_t>>();
    for (const auto& c : doc.at("columns")) {
      m.columns.push_back({c.at("face").get<std::size_t>(), c.at("tuple").get<std::vector<std::uint32_t>>()});
      m.column_face_dims.push_back(c.at("dim").get<std::size_t>());
    }
    const auto& entries = doc.at("entries");
    if (entries.size() != rows || m.row_points.size() != rows || m.columns.size() != cols)
      throw ValidationError("matrix document sizes are inconsistent");
    m.entries = FqMatrix(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      if (entries[r].size() != cols) throw ValidationError("matrix row has the wrong width");
      for (std::size_t c = 0; c < cols; ++c) {
        Element e{entries[r][c].get<std::uint32_t>()};
        if (!field.valid(e)) throw ValidationError("element code out of range");
        m.entries(r, c) = e;
      }
    }
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed matrix document: ") + e.what());
  }
  return m;
}

}  // namespace ptoric
