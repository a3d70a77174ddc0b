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

#include "conesmooth/mesh.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>
#include <utility>

#include "conesmooth/error.h"

namespace conesmooth {

namespace {

// Relative slack below which a triangle counts as degenerate.
constexpr double kTriangleSlack = 1e-12;

std::string PairString(VertexId u, VertexId v) {
  return "(" + ToString(u) + ", " + ToString(v) + ")";
}

std::string FaceString(FaceIndex f, const FaceVertices& vs) {
  return "face " + std::to_string(f) + " [" + ToString(vs[0]) + ", " + ToString(vs[1]) + ", " +
         ToString(vs[2]) + "]";
}

std::string Num(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

bool StrictTriangle(double a, double b, double c) {
  const double scale = std::max({a, b, c});
  return a + b - c > kTriangleSlack * scale && b + c - a > kTriangleSlack * scale &&
         c + a - b > kTriangleSlack * scale;
}

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

  std::size_t Find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void Union(std::size_t a, std::size_t b) { parent[Find(a)] = Find(b); }

  std::vector<std::size_t> parent;
};

}  // namespace

std::string ToString(VertexId v) { return std::to_string(v.value); }

PolyhedralSurface PolyhedralSurface::FromDescription(const SurfaceDescription& description) {
  PolyhedralSurface s;

  s.vertex_ids_ = description.vertices;
  std::sort(s.vertex_ids_.begin(), s.vertex_ids_.end());
  for (std::size_t i = 1; i < s.vertex_ids_.size(); ++i) {
    if (s.vertex_ids_[i] == s.vertex_ids_[i - 1]) {
      throw Error(ErrorCode::kMalformedDocument,
                  "duplicate vertex id " + ToString(s.vertex_ids_[i]));
    }
  }
  if (s.vertex_ids_.empty()) {
    throw Error(ErrorCode::kMalformedDocument, "surface has no vertices");
  }
  if (description.faces.empty()) {
    throw Error(ErrorCode::kMalformedDocument, "surface has no faces");
  }
  for (std::size_t i = 0; i < s.vertex_ids_.size(); ++i) {
    s.vertex_index_.emplace(s.vertex_ids_[i].value, i);
  }
  const std::size_t n = s.vertex_ids_.size();
  auto pair_key = [n](std::size_t a, std::size_t b) {
    if (a > b) std::swap(a, b);
    return static_cast<std::uint64_t>(a) * n + b;
  };

  // Faces.
  s.faces_.reserve(description.faces.size());
  for (FaceIndex f = 0; f < description.faces.size(); ++f) {
    const FaceVertices& vs = description.faces[f];
    std::array<std::size_t, 3> idx{};
    for (int k = 0; k < 3; ++k) {
      auto it = s.vertex_index_.find(vs[k].value);
      if (it == s.vertex_index_.end()) {
        throw Error(ErrorCode::kMalformedDocument,
                    FaceString(f, vs) + " references unknown vertex " + ToString(vs[k]));
      }
      idx[k] = it->second;
    }
    if (idx[0] == idx[1] || idx[1] == idx[2] || idx[0] == idx[2]) {
      throw Error(ErrorCode::kMalformedDocument, FaceString(f, vs) + " repeats a vertex");
    }
    s.faces_.push_back(idx);
  }

  // Lengths as given.
  std::unordered_map<std::uint64_t, std::pair<double, bool>> given;  // length, used
  for (const EdgeLength& e : description.edge_lengths) {
    auto iu = s.vertex_index_.find(e.u.value);
    auto iv = s.vertex_index_.find(e.v.value);
    if (iu == s.vertex_index_.end() || iv == s.vertex_index_.end()) {
      throw Error(ErrorCode::kMalformedDocument,
                  "edge length " + PairString(e.u, e.v) + " references an unknown vertex");
    }
    if (iu->second == iv->second) {
      throw Error(ErrorCode::kMalformedDocument, "edge length " + PairString(e.u, e.v) + " is a loop");
    }
    if (!std::isfinite(e.length)) {
      throw Error(ErrorCode::kMalformedDocument,
                  "edge " + PairString(e.u, e.v) + " has a non-finite length");
    }
    if (e.length <= 0.0) {
      throw Error(ErrorCode::kNonPositiveLength,
                  "edge " + PairString(e.u, e.v) + " has non-positive length " + Num(e.length));
    }
    if (!given.emplace(pair_key(iu->second, iv->second), std::make_pair(e.length, false)).second) {
      throw Error(ErrorCode::kMalformedDocument,
                  "edge " + PairString(e.u, e.v) + " has more than one length");
    }
  }

  // Edges from faces, ordered by (a, b).
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  pairs.reserve(3 * s.faces_.size());
  for (const auto& idx : s.faces_) {
    for (int k = 0; k < 3; ++k) {
      std::size_t a = idx[k];
      std::size_t b = idx[(k + 1) % 3];
      if (a > b) std::swap(a, b);
      pairs.emplace_back(a, b);
    }
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  s.edges_.reserve(pairs.size());
  for (const auto& [a, b] : pairs) {
    auto it = given.find(pair_key(a, b));
    if (it == given.end()) {
      throw Error(ErrorCode::kMalformedDocument,
                  "edge " + PairString(s.vertex_ids_[a], s.vertex_ids_[b]) + " has no length");
    }
    it->second.second = true;
    s.edge_lookup_.emplace(pair_key(a, b), s.edges_.size());
    s.edges_.push_back({a, b, it->second.first, 0});
  }
  for (const EdgeLength& e : description.edge_lengths) {
    const auto key = pair_key(s.vertex_index_.at(e.u.value), s.vertex_index_.at(e.v.value));
    if (!given.at(key).second) {
      throw Error(ErrorCode::kMalformedDocument,
                  "edge length " + PairString(e.u, e.v) + " does not belong to any face");
    }
  }

  s.face_edges_.reserve(s.faces_.size());
  for (FaceIndex f = 0; f < s.faces_.size(); ++f) {
    const auto& idx = s.faces_[f];
    std::array<std::size_t, 3> fe{};
    for (int k = 0; k < 3; ++k) {
      fe[k] = s.edge_index(idx[k], idx[(k + 1) % 3]);
      ++s.edges_[fe[k]].face_count;
    }
    s.face_edges_.push_back(fe);
    const double a = s.edges_[fe[0]].length;
    const double b = s.edges_[fe[1]].length;
    const double c = s.edges_[fe[2]].length;
    if (!StrictTriangle(a, b, c)) {
      throw Error(ErrorCode::kTriangleInequalityViolation,
                  FaceString(f, description.faces[f]) + " has lengths " + Num(a) + ", " + Num(b) +
                      ", " + Num(c) + " violating the strict triangle inequality");
    }
  }

  for (const auto& e : s.edges_) {
    if (e.face_count >= 3) {
      throw Error(ErrorCode::kNonManifoldEdge,
                  "edge " + PairString(s.vertex_ids_[e.a], s.vertex_ids_[e.b]) + " is shared by " +
                      std::to_string(e.face_count) + " faces");
    }
  }

  // Vertex links: the faces around a vertex must form one cycle or one path.
  s.incident_faces_.assign(n, {});
  for (FaceIndex f = 0; f < s.faces_.size(); ++f) {
    for (std::size_t v : s.faces_[f]) s.incident_faces_[v].push_back(f);
  }
  s.vertex_degree_.assign(n, 0);
  s.boundary_.assign(n, false);
  for (std::size_t v = 0; v < n; ++v) {
    const auto& star = s.incident_faces_[v];
    const std::string name = "vertex " + ToString(s.vertex_ids_[v]);
    if (star.empty()) {
      throw Error(ErrorCode::kBadVertexLink, name + " has no incident faces");
    }
    // Link graph: neighbours are nodes, each incident face joins its two
    // non-v corners.
    std::vector<std::size_t> neighbours;
    for (FaceIndex f : star) {
      for (std::size_t w : s.faces_[f]) {
        if (w != v) neighbours.push_back(w);
      }
    }
    std::sort(neighbours.begin(), neighbours.end());
    neighbours.erase(std::unique(neighbours.begin(), neighbours.end()), neighbours.end());
    auto local = [&](std::size_t w) {
      return static_cast<std::size_t>(
          std::lower_bound(neighbours.begin(), neighbours.end(), w) - neighbours.begin());
    };
    std::vector<std::vector<std::size_t>> adjacency(neighbours.size());
    for (FaceIndex f : star) {
      std::array<std::size_t, 2> ends{};
      int k = 0;
      for (std::size_t w : s.faces_[f]) {
        if (w != v) ends[k++] = local(w);
      }
      adjacency[ends[0]].push_back(ends[1]);
      adjacency[ends[1]].push_back(ends[0]);
    }
    int path_ends = 0;
    for (const auto& adj : adjacency) {
      if (adj.size() == 1) ++path_ends;
    }
    std::vector<bool> seen(neighbours.size(), false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
      const std::size_t x = stack.back();
      stack.pop_back();
      for (std::size_t y : adjacency[x]) {
        if (!seen[y]) {
          seen[y] = true;
          ++reached;
          stack.push_back(y);
        }
      }
    }
    if (reached != neighbours.size()) {
      throw Error(ErrorCode::kBadVertexLink, name + " has a disconnected link");
    }
    if (path_ends != 0 && path_ends != 2) {
      throw Error(ErrorCode::kBadVertexLink, name + " has a link that is neither a cycle nor a path");
    }
    s.vertex_degree_[v] = neighbours.size();
    if (path_ends == 2) {
      s.boundary_[v] = true;
      ++s.num_boundary_vertices_;
    }
  }

  DisjointSets components(n);
  for (const auto& e : s.edges_) components.Union(e.a, e.b);
  for (std::size_t v = 1; v < n; ++v) {
    if (components.Find(v) != components.Find(0)) {
      throw Error(ErrorCode::kDisconnectedSurface,
                  "vertex " + ToString(s.vertex_ids_[v]) + " is not connected to vertex " +
                      ToString(s.vertex_ids_[0]));
    }
  }
  return s;
}

std::size_t PolyhedralSurface::index_of(VertexId v) const {
  auto it = vertex_index_.find(v.value);
  if (it == vertex_index_.end()) {
    throw Error(ErrorCode::kUnknownVertex, "unknown vertex " + ToString(v));
  }
  return it->second;
}

std::size_t PolyhedralSurface::edge_index(std::size_t a, std::size_t b) const {
  if (a > b) std::swap(a, b);
  auto it = edge_lookup_.find(static_cast<std::uint64_t>(a) * vertex_ids_.size() + b);
  if (it == edge_lookup_.end()) {
    throw Error(ErrorCode::kInvalidArgument,
                PairString(vertex_ids_[a], vertex_ids_[b]) + " is not an edge");
  }
  return it->second;
}

FaceVertices PolyhedralSurface::face(FaceIndex f) const {
  const auto& idx = faces_.at(f);
  return {vertex_ids_[idx[0]], vertex_ids_[idx[1]], vertex_ids_[idx[2]]};
}

std::array<double, 3> PolyhedralSurface::face_lengths(FaceIndex f) const {
  const auto& fe = face_edges_.at(f);
  return {edges_[fe[0]].length, edges_[fe[1]].length, edges_[fe[2]].length};
}

std::vector<Edge> PolyhedralSurface::edges() const {
  std::vector<Edge> out;
  out.reserve(edges_.size());
  for (const auto& e : edges_) {
    out.push_back({vertex_ids_[e.a], vertex_ids_[e.b], e.length, e.face_count});
  }
  return out;
}

bool PolyhedralSurface::contains(VertexId v) const { return vertex_index_.contains(v.value); }

std::span<const FaceIndex> PolyhedralSurface::incident_faces(VertexId v) const {
  return incident_faces_[index_of(v)];
}

std::size_t PolyhedralSurface::vertex_degree(VertexId v) const {
  return vertex_degree_[index_of(v)];
}

double PolyhedralSurface::edge_length(VertexId u, VertexId v) const {
  return edges_[edge_index(index_of(u), index_of(v))].length;
}

bool PolyhedralSurface::is_boundary_vertex(VertexId v) const { return boundary_[index_of(v)]; }

long PolyhedralSurface::euler_characteristic() const {
  return static_cast<long>(num_vertices()) - static_cast<long>(num_edges()) +
         static_cast<long>(num_faces());
}

PolyhedralSurface PolyhedralSurface::scaled(double factor) const {
  if (!(factor > 0.0) || !std::isfinite(factor)) {
    throw Error(ErrorCode::kNonPositiveArgument, "scale factor must be positive, got " + Num(factor));
  }
  PolyhedralSurface out = *this;
  for (auto& e : out.edges_) e.length *= factor;
  return out;
}

SurfaceDescription PolyhedralSurface::description() const {
  SurfaceDescription d;
  d.vertices = vertex_ids_;
  d.faces.reserve(faces_.size());
  for (FaceIndex f = 0; f < faces_.size(); ++f) d.faces.push_back(face(f));
  for (const auto& e : edges()) d.edge_lengths.push_back({e.u, e.v, e.length});
  return d;
}

double CornerAngleFromLengths(double adjacent1, double adjacent2, double opposite) {
  const double cosine = (adjacent1 * adjacent1 + adjacent2 * adjacent2 - opposite * opposite) /
                        (2.0 * adjacent1 * adjacent2);
  return std::acos(std::clamp(cosine, -1.0, 1.0));
}

double TriangleHeight(double adjacent1, double adjacent2, double opposite) {
  // Kahan's arrangement of Heron's formula.
  std::array<double, 3> s{adjacent1, adjacent2, opposite};
  std::sort(s.begin(), s.end(), std::greater<>());
  const double a = s[0], b = s[1], c = s[2];
  const double product = (a + (b + c)) * (c - (a - b)) * (c + (a - b)) * (a + (b - c));
  const double area = 0.25 * std::sqrt(std::max(product, 0.0));
  return 2.0 * area / opposite;
}

double CornerAngle(const PolyhedralSurface& surface, FaceIndex face, VertexId vertex) {
  const FaceVertices vs = surface.face(face);
  const auto [l01, l12, l20] = surface.face_lengths(face);
  if (vs[0] == vertex) return CornerAngleFromLengths(l01, l20, l12);
  if (vs[1] == vertex) return CornerAngleFromLengths(l01, l12, l20);
  if (vs[2] == vertex) return CornerAngleFromLengths(l12, l20, l01);
  throw Error(ErrorCode::kVertexNotInFace,
              "vertex " + ToString(vertex) + " is not a corner of face " + std::to_string(face));
}

ConeAngle VertexConeAngle(const PolyhedralSurface& surface, VertexId vertex) {
  std::vector<double> corners;
  for (FaceIndex f : surface.incident_faces(vertex)) {
    corners.push_back(CornerAngle(surface, f, vertex));
  }
  // Summing in sorted order makes the result independent of face order.
  std::sort(corners.begin(), corners.end());
  return {std::accumulate(corners.begin(), corners.end(), 0.0),
          surface.is_boundary_vertex(vertex)};
}

double SafeRadius(const PolyhedralSurface& surface, VertexId vertex) {
  double reach = std::numeric_limits<double>::infinity();
  for (FaceIndex f : surface.incident_faces(vertex)) {
    const FaceVertices vs = surface.face(f);
    const auto [l01, l12, l20] = surface.face_lengths(f);
    double adjacent1 = 0.0, adjacent2 = 0.0, opposite = 0.0;
    if (vs[0] == vertex) {
      adjacent1 = l01, adjacent2 = l20, opposite = l12;
    } else if (vs[1] == vertex) {
      adjacent1 = l01, adjacent2 = l12, opposite = l20;
    } else {
      adjacent1 = l12, adjacent2 = l20, opposite = l01;
    }
    reach = std::min({reach, adjacent1, adjacent2, TriangleHeight(adjacent1, adjacent2, opposite)});
  }
  return 0.5 * reach;
}

double MinVertexSeparation(const PolyhedralSurface& surface) {
  double best = std::numeric_limits<double>::infinity();
  for (VertexId v : surface.vertices()) best = std::min(best, 2.0 * SafeRadius(surface, v));
  return best;
}

double TotalAngleDefect(const PolyhedralSurface& surface) {
  std::vector<double> defects;
  for (VertexId v : surface.vertices()) {
    const ConeAngle angle = VertexConeAngle(surface, v);
    if (!angle.boundary) defects.push_back(2.0 * std::numbers::pi - angle.radians);
  }
  std::sort(defects.begin(), defects.end());
  return std::accumulate(defects.begin(), defects.end(), 0.0);
}

}  // namespace conesmooth
