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

#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <map>
#include <random>

#include "conesmooth/certify.h"
#include "conesmooth/error.h"
#include "conesmooth/mesh.h"
#include "test_meshes.h"

namespace {

using namespace conesmooth;
namespace meshes = conesmooth::testing;

constexpr double kPi = std::numbers::pi;

struct Mat2 {
  double a, b, c, d;  // [[a, b], [c, d]]
};

// Linear map sending the edge vectors p1 - p0, p2 - p0 to q1 - q0, q2 - q0.
Mat2 EdgeMap(const std::array<Point2, 3>& p, const std::array<Point2, 3>& q) {
  const double u1 = p[1].x - p[0].x, u2 = p[1].y - p[0].y;
  const double v1 = p[2].x - p[0].x, v2 = p[2].y - p[0].y;
  const double s1 = q[1].x - q[0].x, s2 = q[1].y - q[0].y;
  const double t1 = q[2].x - q[0].x, t2 = q[2].y - q[0].y;
  const double det = u1 * v2 - v1 * u2;
  // A = [s t] [u v]^-1
  return {(s1 * v2 - t1 * u2) / det, (-s1 * v1 + t1 * u1) / det, (s2 * v2 - t2 * u2) / det,
          (-s2 * v1 + t2 * u1) / det};
}

// Operator norms of A and A^-1 by sampling directions on the unit circle.
std::pair<double, double> SampledNorms(const Mat2& m, int directions) {
  double stretch = 0.0, shrink = std::numeric_limits<double>::infinity();
  for (int i = 0; i < directions; ++i) {
    const double t = kPi * i / directions;
    const double x = std::cos(t), y = std::sin(t);
    const double n = std::hypot(m.a * x + m.b * y, m.c * x + m.d * y);
    stretch = std::max(stretch, n);
    shrink = std::min(shrink, n);
  }
  return {stretch, shrink};
}

// Refines the sampled extremes with a local golden-section pass around the
// best sample, so the oracle reaches ~1e-12 without a huge grid.
std::pair<double, double> OperatorNorms(const Mat2& m) {
  auto norm = [&](double t) { return std::hypot(m.a * std::cos(t) + m.b * std::sin(t), m.c * std::cos(t) + m.d * std::sin(t)); };
  auto refine = [&](double t0, double step, bool maximise) {
    double lo = t0 - step, hi = t0 + step;
    const double g = (std::sqrt(5.0) - 1) / 2;
    for (int i = 0; i < 200; ++i) {
      const double x1 = hi - g * (hi - lo), x2 = lo + g * (hi - lo);
      const bool keep_left = maximise ? norm(x1) > norm(x2) : norm(x1) < norm(x2);
      if (keep_left) hi = x2; else lo = x1;
    }
    return norm(0.5 * (lo + hi));
  };
  const int n = 4096;
  double best_max = -1, best_min = 1e300, arg_max = 0, arg_min = 0;
  for (int i = 0; i < n; ++i) {
    const double t = kPi * i / n;
    const double v = norm(t);
    if (v > best_max) best_max = v, arg_max = t;
    if (v < best_min) best_min = v, arg_min = t;
  }
  return {std::max(best_max, refine(arg_max, kPi / n, true)),
          std::min(best_min, refine(arg_min, kPi / n, false))};
}

std::array<Point2, 3> Equilateral(double side) {
  return {Point2{0, 0}, Point2{side, 0}, Point2{side / 2, side * std::numbers::sqrt3 / 2}};
}

TriangleShape RandomShape(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.05, 1.0);
  for (;;) {
    const TriangleShape s{u(rng), u(rng), u(rng)};
    const double m = std::max({s.a, s.b, s.c});
    if (s.a + s.b + s.c - 2 * m > 1e-3 * m) return s;
  }
}

double Dist(Point2 p, Point2 q) { return std::hypot(p.x - q.x, p.y - q.y); }

TEST(PlaneEmbedding, Examples) {
  const auto eq = PlaneEmbedding({1, 1, 1});
  EXPECT_EQ(eq[0].x, 0.0);
  EXPECT_EQ(eq[1].x, 1.0);
  EXPECT_NEAR(eq[2].x, 0.5, 1e-15);
  EXPECT_NEAR(eq[2].y, std::sqrt(3.0) / 2, 1e-15);

  // a = |P0P1| = 3, b = |P1P2| = 4, c = |P2P0| = 5: right angle at P1.
  const auto right = PlaneEmbedding({3, 4, 5});
  EXPECT_NEAR(right[2].x, 3.0, 1e-15);
  EXPECT_NEAR(right[2].y, 4.0, 1e-15);
  EXPECT_NEAR(Dist(right[1], right[2]), 4.0, 1e-12 * 4);
  EXPECT_NEAR(Dist(right[0], right[2]), 5.0, 1e-12 * 5);

  const auto thin = PlaneEmbedding({1, 1, 1.999999});
  EXPECT_GT(thin[2].y, 0.0);
  EXPECT_LT(thin[2].y, 2e-3);
  try {
    PlaneEmbedding({1, 1, 2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDegenerateTriangle);
  }
}

TEST(PlaneEmbedding, ReproducesLengths) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 1000; ++i) {
    const TriangleShape s = RandomShape(rng);
    const auto p = PlaneEmbedding(s);
    EXPECT_GT(p[2].y, 0.0);
    EXPECT_NEAR(Dist(p[0], p[1]), s.a, 1e-12 * s.a);
    EXPECT_NEAR(Dist(p[1], p[2]), s.b, 1e-12 * s.b);
    EXPECT_NEAR(Dist(p[2], p[0]), s.c, 1e-12 * s.c);
  }
}

TEST(AffineSingularValues, Examples) {
  const auto one = AffineSingularValues({1, 1, 1}, 1.0);
  EXPECT_NEAR(one.major, 1.0, 1e-15);
  EXPECT_NEAR(one.minor, 1.0, 1e-15);
  const auto two = AffineSingularValues({1, 1, 1}, 2.0);
  EXPECT_NEAR(two.major, 2.0, 1e-15);
  EXPECT_NEAR(two.minor, 2.0, 1e-15);

  // Right isosceles with legs at P1: explicit matrix mapping (1,0),(0,1) to
  // (1,0),(1/2, sqrt3/2) after moving the right angle to the origin.
  const Mat2 m{1.0, 0.5, 0.0, std::sqrt(3.0) / 2};
  // Singular values of a 2x2 from trace/determinant of m^T m.
  const double t = m.a * m.a + m.b * m.b + m.c * m.c + m.d * m.d;
  const double det = std::abs(m.a * m.d - m.b * m.c);
  const double disc = std::sqrt(t * t - 4 * det * det);
  const double s1 = std::sqrt((t + disc) / 2), s2 = std::sqrt((t - disc) / 2);
  const auto sv = AffineSingularValues({1, 1, std::numbers::sqrt2}, 1.0);
  EXPECT_NEAR(sv.major, s1, 1e-14);
  EXPECT_NEAR(sv.minor, s2, 1e-14);
  EXPECT_NEAR(SimplexBilipConstant({1, 1, std::numbers::sqrt2}, 1.0), std::max(s1, 1 / s2), 1e-14);
}

TEST(AffineSingularValues, MatchDirectionSampling) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> side(0.1, 10.0);
  for (int i = 0; i < 1000; ++i) {
    const TriangleShape s = RandomShape(rng);
    const double r = side(rng);
    const auto [stretch, shrink] = OperatorNorms(EdgeMap(PlaneEmbedding(s), Equilateral(r)));
    const auto sv = AffineSingularValues(s, r);
    ASSERT_NEAR(sv.major, stretch, 1e-9 * stretch) << i;
    ASSERT_NEAR(sv.minor, shrink, 1e-9 * shrink) << i;
  }
}

TEST(AffineSingularValues, DenseSamplingOracleForRightTriangle) {
  const TriangleShape s{1, 1, std::numbers::sqrt2};
  const auto [stretch, shrink] = SampledNorms(EdgeMap(PlaneEmbedding(s), Equilateral(1.0)), 1000000);
  const double oracle = std::max(stretch, 1 / shrink);
  EXPECT_NEAR(SimplexBilipConstant(s, 1.0), oracle, 1e-6);
  const auto sv = AffineSingularValues(s, 1.0);
  EXPECT_GE(SimplexBilipConstant(s, 1.0), std::sqrt(sv.major / sv.minor));
}

TEST(AffineSingularValues, AllVertexCorrespondencesAgree) {
  std::mt19937_64 rng(3);
  const std::array<std::array<int, 3>, 6> perms{
      {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  for (int i = 0; i < 200; ++i) {
    const auto p = PlaneEmbedding(RandomShape(rng));
    const auto q = Equilateral(1.0);
    double first = -1;
    for (const auto& perm : perms) {
      const auto [stretch, shrink] = OperatorNorms(EdgeMap(p, {q[perm[0]], q[perm[1]], q[perm[2]]}));
      const double constant = std::max(stretch, 1 / shrink);
      if (first < 0) first = constant;
      EXPECT_NEAR(constant, first, 1e-10 * first);
    }
  }
}

TEST(AffineSingularValues, PermutationAndScaleInvariance) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 500; ++i) {
    const TriangleShape s = RandomShape(rng);
    const double base = SimplexBilipConstant(s, 0.7);
    for (const TriangleShape& p : {TriangleShape{s.b, s.c, s.a}, TriangleShape{s.c, s.a, s.b},
                                   TriangleShape{s.a, s.c, s.b}, TriangleShape{s.c, s.b, s.a},
                                   TriangleShape{s.b, s.a, s.c}}) {
      EXPECT_NEAR(SimplexBilipConstant(p, 0.7), base, 1e-12 * base);
    }
    for (double k : {0.5, 4.0}) {
      EXPECT_EQ(SimplexBilipConstant({k * s.a, k * s.b, k * s.c}, k * 0.7), base);
    }
    EXPECT_NEAR(SimplexBilipConstant({3 * s.a, 3 * s.b, 3 * s.c}, 2.1), base, 1e-13 * base);
  }
}

TEST(AffineSingularValues, QuasiconvexInScaleWithKnownMinimum) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    const TriangleShape s = RandomShape(rng);
    const auto unit = AffineSingularValues(s, 1.0);
    const double r_star = 1 / std::sqrt(unit.major * unit.minor);
    const double best = std::sqrt(unit.major / unit.minor);
    EXPECT_NEAR(SimplexBilipConstant(s, r_star), best, 1e-12 * best);
    double previous = 1e300;
    bool decreasing = true;
    for (int k = -400; k <= 400; ++k) {
      const double r = r_star * std::pow(10.0, k / 100.0);
      const double value = SimplexBilipConstant(s, r);
      EXPECT_GE(value, best * (1 - 1e-12));
      if (k > 0) decreasing = false;
      if (decreasing) {
        EXPECT_LE(value, previous * (1 + 1e-12));
      } else {
        EXPECT_GE(value, previous * (1 - 1e-12));
      }
      previous = value;
    }
  }
}

TEST(FeasibleScales, IntervalIsExactlyTheSublevelSet) {
  std::mt19937_64 rng(6);
  for (int i = 0; i < 200; ++i) {
    const TriangleShape s = RandomShape(rng);
    const int M = 1 + i % 40;
    const ScaleInterval in = FeasibleScales(s, M);
    if (in.empty()) {
      const auto unit = AffineSingularValues(s, 1.0);
      EXPECT_GT(std::sqrt(unit.major / unit.minor), M * (1 - 1e-12));
      continue;
    }
    EXPECT_LE(SimplexBilipConstant(s, in.lower), M * (1 + 1e-12));
    EXPECT_LE(SimplexBilipConstant(s, in.upper), M * (1 + 1e-12));
    EXPECT_GT(SimplexBilipConstant(s, in.lower * (1 - 1e-6)), M);
    EXPECT_GT(SimplexBilipConstant(s, in.upper * (1 + 1e-6)), M);
  }
}

TEST(FeasibleScales, MixedEquilateralSizes) {
  // Equilateral side s maps to side r with constant max(r/s, s/r).
  const ScaleInterval small5 = FeasibleScales({1, 1, 1}, 5);
  const ScaleInterval large5 = FeasibleScales({100, 100, 100}, 5);
  EXPECT_NEAR(small5.lower, 0.2, 1e-15);
  EXPECT_NEAR(small5.upper, 5.0, 1e-14);
  EXPECT_NEAR(large5.lower, 20.0, 1e-13);
  EXPECT_NEAR(large5.upper, 500.0, 1e-12);
  EXPECT_TRUE((ScaleInterval{std::max(small5.lower, large5.lower), std::min(small5.upper, large5.upper)}.empty()));

  const ScaleInterval small11 = FeasibleScales({1, 1, 1}, 11);
  const ScaleInterval large11 = FeasibleScales({100, 100, 100}, 11);
  EXPECT_FALSE((ScaleInterval{std::max(small11.lower, large11.lower), std::min(small11.upper, large11.upper)}.empty()));
}

TEST(CertifyLipschitz, Icosahedron) {
  const auto ico = IngestOff(meshes::IcosahedronOff());
  const auto pass = CertifyLipschitz(ico, 11);
  EXPECT_TRUE(pass.pass);
  ASSERT_EQ(pass.vertices.size(), 12u);
  ASSERT_EQ(pass.faces.size(), 20u);
  for (const auto& v : pass.vertices) {
    EXPECT_EQ(v.face_count, 5u);
    EXPECT_EQ(v.simplex_count, 11u);
  }
  for (const auto& f : pass.faces) EXPECT_NEAR(f.bilip_constant, 1.0, 1e-12);

  const auto fail = CertifyLipschitz(ico, 10);
  EXPECT_FALSE(fail.pass);
  EXPECT_FALSE(fail.vertices[0].pass);
  EXPECT_NE(fail.vertices[0].witness.find("11 simplices"), std::string::npos) << fail.vertices[0].witness;
  for (const auto& f : fail.faces) EXPECT_TRUE(f.pass);
}

TEST(CertifyLipschitz, NeedleFaceFailsAtTwo) {
  const auto pillow = PolyhedralSurface::FromDescription(meshes::Pillow(1, 1, 1.9));
  const auto report = CertifyLipschitz(pillow, 2);
  EXPECT_FALSE(report.pass);
  ASSERT_EQ(report.faces.size(), 2u);
  EXPECT_FALSE(report.faces[0].pass);
  EXPECT_GT(report.faces[0].bilip_constant, 2.0);
  EXPECT_NE(report.faces[0].witness.find("face 0"), std::string::npos);
  EXPECT_THROW(CertifyLipschitz(pillow, 0), Error);
}

TEST(CertifyQuasiconformal, IsScaleFree) {
  const auto ico = IngestOff(meshes::IcosahedronOff(0.01));
  EXPECT_FALSE(CertifyLipschitz(ico, 11).pass);
  const auto report = CertifyQuasiconformal(ico, 11);
  EXPECT_TRUE(report.pass);
  for (const auto& v : report.vertices) {
    ASSERT_TRUE(v.scale_interval.has_value());
    EXPECT_NEAR(v.scale_interval->lower, 0.01 / 11, 1e-12);
    EXPECT_NEAR(v.scale_interval->upper, 0.11, 1e-12);
  }
  for (const auto& f : report.faces) {
    EXPECT_NEAR(f.scale, 0.01, 1e-12);
    EXPECT_NEAR(f.bilip_constant, 1.0, 1e-12);
  }
  const auto big = CertifyQuasiconformal(IngestOff(meshes::IcosahedronOff(100)), 11);
  EXPECT_TRUE(big.pass);
}

TEST(CertifyQuasiconformal, DisjointIntervalsGiveWitness) {
  // Ring vertices of a bipyramid see an equilateral cap face of side 1 and a
  // tall isosceles face; at M = 2 the two feasible intervals do not meet.
  SurfaceDescription d;
  for (std::uint64_t i = 0; i < 5; ++i) d.vertices.push_back(VertexId{i});
  const VertexId top{3}, bottom{4};
  for (int i = 0; i < 3; ++i) {
    const VertexId a{static_cast<std::uint64_t>(i)}, b{static_cast<std::uint64_t>((i + 1) % 3)};
    d.faces.push_back({a, b, top});
    d.faces.push_back({b, a, bottom});
    d.edge_lengths.push_back({a, b, 1.0});
    d.edge_lengths.push_back({a, top, 1.0});
    d.edge_lengths.push_back({a, bottom, 4.0});
  }
  const auto s = PolyhedralSurface::FromDescription(d);
  const auto cap = AffineSingularValues({1, 1, 1}, 1.0);
  const auto tall = AffineSingularValues({1, 4, 4}, 1.0);
  const int M = 2;
  const double lower = std::max(1 / (M * cap.minor), 1 / (M * tall.minor));
  const double upper = std::min(M / cap.major, M / tall.major);
  ASSERT_GT(lower, upper);
  const auto report = CertifyQuasiconformal(s, M);
  EXPECT_FALSE(report.pass);
  const auto& ring = report.vertices[0];
  EXPECT_FALSE(ring.pass);
  ASSERT_TRUE(ring.scale_interval.has_value());
  EXPECT_NEAR(ring.scale_interval->lower, lower, 1e-12 * lower);
  EXPECT_NEAR(ring.scale_interval->upper, upper, 1e-12 * upper);
}

TEST(MinimalM, Examples) {
  EXPECT_EQ(MinimalM(PolyhedralSurface::FromDescription(meshes::Tetrahedron()), CertificationMode::kLipschitz), 7);
  EXPECT_EQ(MinimalM(IngestOff(meshes::IcosahedronOff()), CertificationMode::kLipschitz), 11);
  EXPECT_THROW(MinimalM(IngestOff(meshes::CubeOff()), CertificationMode::kAngleHypothesis), Error);
}

TEST(MinimalM, MatchesExhaustiveScan) {
  std::mt19937_64 rng(8);
  std::vector<SurfaceDescription> meshes = {meshes::Pillow(1, 1, 1.9), meshes::Pillow(1, 1, 1.99),
                                            meshes::Tetrahedron(3.0)};
  for (int i = 0; i < 6; ++i) meshes.push_back(meshes::RandomSphere(rng, 0, 0.3, 2.5));
  for (const auto& d : meshes) {
    const auto s = PolyhedralSurface::FromDescription(d);
    for (auto mode : {CertificationMode::kLipschitz, CertificationMode::kQuasiconformal}) {
      int scan = 0;
      for (int M = 1; M <= 64 && scan == 0; ++M) {
        const bool pass = mode == CertificationMode::kLipschitz ? CertifyLipschitz(s, M).pass
                                                                 : CertifyQuasiconformal(s, M).pass;
        if (pass) scan = M;
      }
      ASSERT_NE(scan, 0);
      EXPECT_EQ(MinimalM(s, mode), scan) << ModeName(mode);
    }
  }
}

TEST(CertifyProperties, LipschitzImpliesQuasiconformal) {
  std::mt19937_64 rng(10);
  for (int i = 0; i < 10; ++i) {
    const auto s = PolyhedralSurface::FromDescription(meshes::RandomSphere(rng, i % 2, 0.2, 1.0));
    for (int M = 1; M <= 40; ++M) {
      if (CertifyLipschitz(s, M).pass) EXPECT_TRUE(CertifyQuasiconformal(s, M).pass) << M;
    }
  }
}

TEST(CertifyProperties, NonVertexPointsAreCoveredByVertexChecks) {
  // Points inside a face lie in 1 simplex, points inside an edge in the edge
  // and its faces; both sets sit inside the star of any of their vertices.
  std::mt19937_64 rng(12);
  const auto s = PolyhedralSurface::FromDescription(meshes::RandomTorus(rng, 9, 6, 0.2));
  const int M = MinimalM(s, CertificationMode::kQuasiconformal);
  const auto report = CertifyQuasiconformal(s, M);
  ASSERT_TRUE(report.pass);
  std::map<VertexId, const VertexVerdict*> by_vertex;
  for (const auto& v : report.vertices) by_vertex[v.vertex] = &v;
  std::uniform_int_distribution<std::size_t> pick_face(0, s.num_faces() - 1);
  for (int i = 0; i < 500; ++i) {
    const FaceIndex f = pick_face(rng);
    const auto verts = s.face(f);
    const auto interval = FeasibleScales({s.face_lengths(f)[0], s.face_lengths(f)[1], s.face_lengths(f)[2]}, M);
    for (VertexId v : verts) {
      const VertexVerdict& vv = *by_vertex.at(v);
      // A face-interior point lies in 1 simplex, an edge-interior one in at
      // most 3; neither exceeds the count at a vertex of that face.
      EXPECT_GE(vv.simplex_count, 3u);
      // The vertex's common scale is feasible for this face.
      EXPECT_GE(vv.scale_interval->lower, interval.lower * (1 - 1e-12));
      EXPECT_LE(vv.scale_interval->upper, interval.upper * (1 + 1e-12));
    }
  }
}

TEST(AngleWindow, TetrahedronExamples) {
  const auto tet = PolyhedralSurface::FromDescription(meshes::Tetrahedron());
  const auto at2 = AngleWindowCheck(tet, 2.0, CertificationMode::kAngleHypothesis);
  EXPECT_TRUE(at2.pass);
  ASSERT_TRUE(at2.window.has_value());
  EXPECT_DOUBLE_EQ((*at2.window)[0], kPi);
  EXPECT_DOUBLE_EQ((*at2.window)[1], 4 * kPi);

  const auto at19 = AngleWindowCheck(tet, 1.9, CertificationMode::kAngleHypothesis);
  EXPECT_FALSE(at19.pass);
  for (const auto& v : at19.vertices) {
    EXPECT_FALSE(v.pass);
    EXPECT_NEAR(*v.cone_angle, kPi, 1e-14);
    EXPECT_NE(v.witness.find("outside"), std::string::npos);
  }

  const auto obstruction = AngleWindowCheck(tet, 1.5, CertificationMode::kAngleObstruction);
  EXPECT_TRUE(obstruction.pass);
  EXPECT_NEAR((*obstruction.window)[0], 2 * kPi / 2.25, 1e-15);

  EXPECT_THROW(AngleWindowCheck(tet, 0.5, CertificationMode::kAngleHypothesis), Error);
  EXPECT_THROW(AngleWindowCheck(tet, 2.0, CertificationMode::kLipschitz), Error);
}

TEST(AngleWindow, BoundaryVerticesAreNotJudged) {
  const auto fan = PolyhedralSurface::FromDescription(meshes::HexagonalFan());
  const auto report = AngleWindowCheck(fan, 1.0, CertificationMode::kAngleHypothesis);
  EXPECT_TRUE(report.pass);
  EXPECT_TRUE(report.vertices[1].boundary);
}

TEST(AngleWindow, ObstructionWindowContainsHypothesisWindow) {
  std::mt19937_64 rng(14);
  std::uniform_real_distribution<double> k_dist(1.0, 6.0), angle_dist(0.05, 40.0);
  for (int i = 0; i < 10000; ++i) {
    const double K = k_dist(rng), angle = angle_dist(rng);
    if (AngleInWindow(angle, HypothesisWindow(K))) {
      EXPECT_TRUE(AngleInWindow(angle, ObstructionWindow(K)));
    }
  }
  std::mt19937_64 mesh_rng(15);
  for (int i = 0; i < 6; ++i) {
    const auto s = PolyhedralSurface::FromDescription(meshes::RandomSphere(mesh_rng, 0, 0.3));
    for (double K : {1.0, 1.2, 1.5, 2.0, 3.0}) {
      if (AngleWindowCheck(s, K, CertificationMode::kAngleHypothesis).pass) {
        EXPECT_TRUE(AngleWindowCheck(s, K, CertificationMode::kAngleObstruction).pass);
      }
    }
  }
}

}  // namespace
