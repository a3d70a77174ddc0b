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

#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace conesmooth {

/// Vertex label as it appears in input documents. Labels are arbitrary
/// non-negative integers; nothing in the library depends on their values
/// beyond ordering for deterministic output.
struct VertexId {
  std::uint64_t value = 0;

  friend auto operator<=>(const VertexId&, const VertexId&) = default;
};

std::string ToString(VertexId v);

using FaceIndex = std::size_t;
using FaceVertices = std::array<VertexId, 3>;

struct EdgeLength {
  VertexId u;
  VertexId v;
  double length = 0.0;
};

/// Unvalidated surface data as read from a document.
struct SurfaceDescription {
  std::vector<VertexId> vertices;
  std::vector<FaceVertices> faces;
  std::vector<EdgeLength> edge_lengths;
};

struct Edge {
  VertexId u;  // u < v
  VertexId v;
  double length = 0.0;
  int face_count = 0;
};

/**
 * Intrinsic triangulated surface: combinatorics plus one length per edge and
 * no embedding. Instances only exist in validated form: every face satisfies
 * the strict triangle inequality, every edge lies in one or two faces, every
 * vertex link is a single cycle (interior) or a single path (boundary), and
 * the surface is connected. Immutable after construction.
 */
class PolyhedralSurface {
 public:
  /// Validates `description`; throws Error with the code of the first
  /// violated invariant.
  static PolyhedralSurface FromDescription(const SurfaceDescription& description);

  std::size_t num_vertices() const { return vertex_ids_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  std::size_t num_faces() const { return faces_.size(); }

  /// Vertex ids in ascending order.
  std::span<const VertexId> vertices() const { return vertex_ids_; }
  FaceVertices face(FaceIndex f) const;
  /// Lengths of (v0v1, v1v2, v2v0) for face (v0, v1, v2).
  std::array<double, 3> face_lengths(FaceIndex f) const;
  /// Edges ordered by (u, v).
  std::vector<Edge> edges() const;

  bool contains(VertexId v) const;
  /// Faces incident to `v`, ascending. Throws UnknownVertex.
  std::span<const FaceIndex> incident_faces(VertexId v) const;
  /// Number of edges incident to `v`. Throws UnknownVertex.
  std::size_t vertex_degree(VertexId v) const;
  /// Throws UnknownVertex, or InvalidArgument when (u, v) is not an edge.
  double edge_length(VertexId u, VertexId v) const;

  bool is_boundary_vertex(VertexId v) const;
  bool is_closed() const { return num_boundary_vertices_ == 0; }
  /// V - E + F.
  long euler_characteristic() const;

  /// Same combinatorics with every length multiplied by `factor` > 0.
  PolyhedralSurface scaled(double factor) const;
  SurfaceDescription description() const;

 private:
  PolyhedralSurface() = default;

  std::size_t index_of(VertexId v) const;
  std::size_t edge_index(std::size_t a, std::size_t b) const;

  std::vector<VertexId> vertex_ids_;
  std::unordered_map<std::uint64_t, std::size_t> vertex_index_;
  std::vector<std::array<std::size_t, 3>> faces_;
  std::vector<std::array<std::size_t, 3>> face_edges_;
  struct EdgeRecord {
    std::size_t a;
    std::size_t b;
    double length;
    int face_count;
  };
  std::vector<EdgeRecord> edges_;
  std::unordered_map<std::uint64_t, std::size_t> edge_lookup_;
  std::vector<std::vector<FaceIndex>> incident_faces_;
  std::vector<std::size_t> vertex_degree_;
  std::vector<bool> boundary_;
  std::size_t num_boundary_vertices_ = 0;
};

/// Reads the intrinsic JSON document
/// `{"vertices": [...], "faces": [[i,j,k], ...], "edge_lengths": [{"u":i,"v":j,"len":x}, ...]}`.
PolyhedralSurface ParseSurface(std::string_view json_document);

/// Reads an ASCII OFF file with triangular faces; edge lengths are the
/// Euclidean distances between the vertex coordinates and vertex ids are the
/// zero-based OFF vertex indices.
PolyhedralSurface IngestOff(std::string_view off_document);

/// Serializes to the intrinsic JSON document accepted by ParseSurface.
std::string WriteSurfaceJson(const PolyhedralSurface& surface);

/// Angle opposite side `opposite` in a flat triangle with sides `adjacent1`,
/// `adjacent2`, `opposite`. The cosine is clamped to [-1, 1].
double CornerAngleFromLengths(double adjacent1, double adjacent2, double opposite);

/// Distance from the vertex between `adjacent1` and `adjacent2` to the line
/// through the opposite side.
double TriangleHeight(double adjacent1, double adjacent2, double opposite);

/// Interior angle of `face` at `vertex`. Throws VertexNotInFace.
double CornerAngle(const PolyhedralSurface& surface, FaceIndex face, VertexId vertex);

struct ConeAngle {
  double radians = 0.0;
  /// Boundary vertices carry a sector angle, not the angle of a cone.
  bool boundary = false;
};

/// Sum of the corner angles at `vertex`. Throws UnknownVertex.
ConeAngle VertexConeAngle(const PolyhedralSurface& surface, VertexId vertex);

/// Radius of a disk about `vertex` that is isometric to a cone and holds no
/// other vertex: half the minimum of the incident edge lengths and the
/// heights from `vertex` in its incident faces.
double SafeRadius(const PolyhedralSurface& surface, VertexId vertex);

/// Lower bound for the minimal distance between distinct vertices,
/// min over vertices of 2 * SafeRadius. Not an exact geodesic distance.
double MinVertexSeparation(const PolyhedralSurface& surface);

/// Sum over interior vertices of 2*pi minus the cone angle.
double TotalAngleDefect(const PolyhedralSurface& surface);

}  // namespace conesmooth

template <>
struct std::hash<conesmooth::VertexId> {
  std::size_t operator()(conesmooth::VertexId v) const noexcept {
    return std::hash<std::uint64_t>{}(v.value);
  }
};
