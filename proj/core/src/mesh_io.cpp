// Copyright 2026 The Conesmooth Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <sstream>
#include <string>

#include <json.hpp>

#include "conesmooth/error.h"
#include "conesmooth/mesh.h"

namespace conesmooth {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void Malformed(const std::string& what) {
  throw Error(ErrorCode::kMalformedDocument, what);
}

VertexId ReadId(const Json& j, const std::string& where) {
  if (!j.is_number_unsigned()) Malformed(where + ": vertex id must be a non-negative integer");
  return VertexId{j.get<std::uint64_t>()};
}

const Json& Member(const Json& object, const char* key) {
  auto it = object.find(key);
  if (it == object.end()) Malformed(std::string("missing key \"") + key + "\"");
  return *it;
}

}  // namespace

PolyhedralSurface ParseSurface(std::string_view json_document) {
  Json doc;
  try {
    doc = Json::parse(json_document);
  } catch (const Json::parse_error& e) {
    Malformed(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) Malformed("document must be a JSON object");

  SurfaceDescription d;
  const Json& vertices = Member(doc, "vertices");
  if (!vertices.is_array()) Malformed("\"vertices\" must be an array");
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    d.vertices.push_back(ReadId(vertices[i], "vertices[" + std::to_string(i) + "]"));
  }

  const Json& faces = Member(doc, "faces");
  if (!faces.is_array()) Malformed("\"faces\" must be an array");
  for (std::size_t f = 0; f < faces.size(); ++f) {
    const std::string where = "faces[" + std::to_string(f) + "]";
    if (!faces[f].is_array() || faces[f].size() != 3) {
      Malformed(where + " must be an array of three vertex ids");
    }
    d.faces.push_back({ReadId(faces[f][0], where), ReadId(faces[f][1], where),
                       ReadId(faces[f][2], where)});
  }

  const Json& lengths = Member(doc, "edge_lengths");
  if (!lengths.is_array()) Malformed("\"edge_lengths\" must be an array");
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    const std::string where = "edge_lengths[" + std::to_string(i) + "]";
    const Json& e = lengths[i];
    if (!e.is_object()) Malformed(where + " must be an object");
    const Json& len = Member(e, "len");
    if (!len.is_number()) Malformed(where + ": \"len\" must be a number");
    d.edge_lengths.push_back(
        {ReadId(Member(e, "u"), where), ReadId(Member(e, "v"), where), len.get<double>()});
  }
  return PolyhedralSurface::FromDescription(d);
}

std::string WriteSurfaceJson(const PolyhedralSurface& surface) {
  Json doc;
  doc["vertices"] = Json::array();
  for (VertexId v : surface.vertices()) doc["vertices"].push_back(v.value);
  doc["faces"] = Json::array();
  for (FaceIndex f = 0; f < surface.num_faces(); ++f) {
    const FaceVertices vs = surface.face(f);
    doc["faces"].push_back({vs[0].value, vs[1].value, vs[2].value});
  }
  doc["edge_lengths"] = Json::array();
  for (const Edge& e : surface.edges()) {
    doc["edge_lengths"].push_back({{"u", e.u.value}, {"v", e.v.value}, {"len", e.length}});
  }
  return doc.dump(2) + "\n";
}

namespace {

// Splits an OFF document into whitespace-separated tokens per logical line,
// dropping comments and blank lines.
std::vector<std::vector<std::string>> OffLines(std::string_view text) {
  std::vector<std::vector<std::string>> lines;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::istringstream words(raw);
    std::vector<std::string> tokens;
    std::string w;
    while (words >> w) tokens.push_back(w);
    if (!tokens.empty()) lines.push_back(std::move(tokens));
  }
  return lines;
}

double ToDouble(const std::string& s, const std::string& where) {
  std::size_t used = 0;
  double x = 0.0;
  try {
    x = std::stod(s, &used);
  } catch (const std::exception&) {
    Malformed(where + ": expected a number, got \"" + s + "\"");
  }
  if (used != s.size() || !std::isfinite(x)) {
    Malformed(where + ": expected a finite number, got \"" + s + "\"");
  }
  return x;
}

long long ToInteger(const std::string& s, const std::string& where) {
  std::size_t used = 0;
  long long x = 0;
  try {
    x = std::stoll(s, &used);
  } catch (const std::exception&) {
    Malformed(where + ": expected an integer, got \"" + s + "\"");
  }
  if (used != s.size()) Malformed(where + ": expected an integer, got \"" + s + "\"");
  return x;
}

}  // namespace

PolyhedralSurface IngestOff(std::string_view off_document) {
  auto lines = OffLines(off_document);
  std::size_t line = 0;
  if (lines.empty() || lines[0][0] != "OFF") Malformed("OFF header missing");
  // The counts may share the header line.
  std::vector<std::string> counts(lines[0].begin() + 1, lines[0].end());
  ++line;
  if (counts.empty()) {
    if (line >= lines.size()) Malformed("OFF counts missing");
    counts = lines[line++];
  }
  if (counts.size() < 2) Malformed("OFF counts line needs vertex and face counts");
  const long long nv = ToInteger(counts[0], "vertex count");
  const long long nf = ToInteger(counts[1], "face count");
  if (nv <= 0 || nf <= 0) Malformed("OFF vertex and face counts must be positive");
  if (lines.size() < line + static_cast<std::size_t>(nv + nf)) {
    Malformed("OFF document ends before all vertices and faces are read");
  }

  std::vector<std::array<double, 3>> points;
  points.reserve(static_cast<std::size_t>(nv));
  for (long long i = 0; i < nv; ++i, ++line) {
    const auto& tokens = lines[line];
    const std::string where = "vertex " + std::to_string(i);
    if (tokens.size() < 3) Malformed(where + " needs three coordinates");
    points.push_back({ToDouble(tokens[0], where), ToDouble(tokens[1], where),
                      ToDouble(tokens[2], where)});
  }

  SurfaceDescription d;
  for (long long i = 0; i < nv; ++i) d.vertices.push_back(VertexId{static_cast<std::uint64_t>(i)});
  std::unordered_map<std::uint64_t, bool> recorded;
  for (long long f = 0; f < nf; ++f, ++line) {
    const auto& tokens = lines[line];
    const std::string where = "face " + std::to_string(f);
    const long long arity = ToInteger(tokens[0], where);
    if (arity != 3) {
      throw Error(ErrorCode::kNonTriangularFace,
                  where + " has " + std::to_string(arity) + " vertices; only triangles are supported");
    }
    if (tokens.size() < 4) Malformed(where + " lists fewer than three vertices");
    FaceVertices vs;
    for (int k = 0; k < 3; ++k) {
      const long long id = ToInteger(tokens[1 + k], where);
      if (id < 0 || id >= nv) Malformed(where + " references vertex " + tokens[1 + k] + " out of range");
      vs[k] = VertexId{static_cast<std::uint64_t>(id)};
    }
    d.faces.push_back(vs);
    for (int k = 0; k < 3; ++k) {
      std::uint64_t a = vs[k].value, b = vs[(k + 1) % 3].value;
      if (a == b) continue;  // rejected during validation
      if (a > b) std::swap(a, b);
      if (!recorded.emplace(a * static_cast<std::uint64_t>(nv) + b, true).second) continue;
      const auto& p = points[a];
      const auto& q = points[b];
      const double length = std::hypot(p[0] - q[0], p[1] - q[1], p[2] - q[2]);
      d.edge_lengths.push_back({VertexId{a}, VertexId{b}, length});
    }
  }
  return PolyhedralSurface::FromDescription(d);
}

}  // namespace conesmooth
