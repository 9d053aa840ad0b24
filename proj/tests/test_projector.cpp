#include "mstiler/projector.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace mstiler;

namespace {

using P3 = std::array<double, 3>;
const double kT = (1.0 + std::sqrt(5.0)) / 2.0;

// Images of l_1..l_6, written out directly.
const std::array<P3, 6> kPar{{{0.5, kT / 2, 0}, {-0.5, kT / 2, 0}, {0, 0.5, kT / 2}, {0, 0.5, -kT / 2}, {kT / 2, 0, 0.5}, {-kT / 2, 0, 0.5}}};

P3 project(const std::array<double, 6>& x) {
  P3 p{0, 0, 0};
  for (size_t i = 0; i < 6; ++i)
    for (size_t k = 0; k < 3; ++k) p[k] += x[i] * kPar[i][k];
  return p;
}

double dist(const P3& a, const P3& b) { return std::sqrt((a[0] - b[0]) * (a[0] - b[0]) + (a[1] - b[1]) * (a[1] - b[1]) + (a[2] - b[2]) * (a[2] - b[2])); }

bool is_tau(double d) {
  if (std::fabs(d - kT) < 1e-9) return true;
  EXPECT_NEAR(d, 1.0, 1e-9);
  return false;
}

// Labels by Table 1 face types, keyed by the number of long edges per face.
std::string oracle_label(const std::array<P3, 4>& t) {
  P3 u{t[1][0] - t[0][0], t[1][1] - t[0][1], t[1][2] - t[0][2]}, v{t[2][0] - t[0][0], t[2][1] - t[0][1], t[2][2] - t[0][2]},
      w{t[3][0] - t[0][0], t[3][1] - t[0][1], t[3][2] - t[0][2]};
  double det = u[0] * (v[1] * w[2] - v[2] * w[1]) - u[1] * (v[0] * w[2] - v[2] * w[0]) + u[2] * (v[0] * w[1] - v[1] * w[0]);
  if (std::fabs(det) < 1e-9) {
    int longs = 0;
    for (size_t a = 0; a < 4; ++a)
      for (size_t b = a + 1; b < 4; ++b) longs += is_tau(dist(t[a], t[b]));
    return longs == 3 ? "trapezoid" : "flat?";
  }
  std::array<int, 4> faces{};
  static const int kF[4][3] = {{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}};
  for (const auto& f : kF) {
    int longs = is_tau(dist(t[f[0]], t[f[1]])) + is_tau(dist(t[f[0]], t[f[2]])) + is_tau(dist(t[f[1]], t[f[2]]));
    ++faces[static_cast<size_t>(longs)];
  }
  static const std::map<std::array<int, 4>, std::string> table{{{2, 2, 0, 0}, "t1"}, {{1, 2, 1, 0}, "t2"}, {{0, 3, 0, 1}, "t3"},
                                                               {{1, 0, 3, 0}, "t4"}, {{0, 1, 2, 1}, "t5"}, {{0, 0, 2, 2}, "t6"}};
  auto it = table.find(faces);
  return it == table.end() ? "other" : it->second;
}

std::map<std::string, long> oracle_census_hemicube(bool even) {
  std::vector<std::array<double, 6>> v;
  for (int mask = 0; mask < 64; ++mask) {
    if ((__builtin_popcount(static_cast<unsigned>(mask)) % 2 == 0) != even) continue;
    std::array<double, 6> x{};
    for (int i = 0; i < 6; ++i) x[static_cast<size_t>(i)] = (mask >> i) & 1 ? -0.5 : 0.5;
    v.push_back(x);
  }
  auto adj = [&](size_t a, size_t b) {
    int d = 0;
    for (size_t i = 0; i < 6; ++i) d += v[a][i] != v[b][i];
    return d == 2;
  };
  std::map<std::string, long> c;
  const size_t n = v.size();
  for (size_t a = 0; a < n; ++a)
    for (size_t b = a + 1; b < n; ++b)
      for (size_t e = b + 1; e < n; ++e)
        for (size_t f = e + 1; f < n; ++f)
          if (adj(a, b) && adj(a, e) && adj(a, f) && adj(b, e) && adj(b, f) && adj(e, f))
            ++c[oracle_label({project(v[a]), project(v[b]), project(v[e]), project(v[f])})];
  return c;
}

std::map<std::string, long> oracle_census_cross() {
  std::map<std::string, long> c;
  for (int mask = 0; mask < 64; ++mask) {
    if (__builtin_popcount(static_cast<unsigned>(mask)) != 4) continue;
    std::vector<size_t> axes;
    for (size_t i = 0; i < 6; ++i)
      if ((mask >> i) & 1) axes.push_back(i);
    for (int s = 0; s < 16; ++s) {
      std::array<P3, 4> t;
      for (size_t j = 0; j < 4; ++j) {
        std::array<double, 6> x{};
        x[axes[j]] = (s >> j) & 1 ? -1 : 1;
        t[j] = project(x);
      }
      ++c[oracle_label(t)];
    }
  }
  return c;
}

std::map<std::string, long> library_census(CellKind k) {
  std::map<std::string, long> out;
  for (const auto& [cls, n] : delone_projection_census(delone_cell(k)))
    out[cls == TileClass::Trapezoid111T ? "trapezoid" : to_string(cls)] = n;
  return out;
}

}  // namespace

TEST(Projector, BasisImages) {
  for (int i = 1; i <= 6; ++i) {
    auto d = projected_basis(i).to_double();
    for (size_t k = 0; k < 3; ++k) EXPECT_NEAR(d[k], kPar[static_cast<size_t>(i - 1)][k], 1e-15);
    EXPECT_EQ(projected_basis(-i), -projected_basis(i));
  }
  EXPECT_EQ(project_par(Vector6::basis(1)), (GoldenVec3{GoldenScalar::from_ratio(1, 2), tau() * GoldenScalar::from_ratio(1, 2), 0}));
}

TEST(Projector, ParallelAndPerpendicularAreComplementary) {
  // The two images of the basis are orthogonal complements with equal scale (tau + 2) / 2.
  for (int i = 1; i <= 6; ++i)
    for (int j = 1; j <= 6; ++j) {
      Vector6 a = Vector6::basis(i), b = Vector6::basis(j);
      GoldenScalar s = dot(project_par(a), project_par(b)) + dot(project_perp(a), project_perp(b));
      EXPECT_EQ(s, i == j ? (tau() + 2) * GoldenScalar::from_ratio(1, 2) : GoldenScalar(0))
          << i << "," << j;
    }
}

TEST(Projector, FundamentalVolumes) {
  const double tv[6] = {1, kT, kT, kT * kT, kT * kT, kT * kT * kT};
  for (size_t i = 0; i < 6; ++i) EXPECT_NEAR(fundamental_volume(fundamental_labels()[i]).to_double(), tv[i] / 12, 1e-15);
}

TEST(Projector, CrossPolytopeCensusMatchesOracle) {
  auto lib = library_census(CellKind::CrossPolytope);
  EXPECT_EQ(lib, oracle_census_cross());
  EXPECT_EQ(lib, (std::map<std::string, long>{{"t1", 30}, {"t2", 60}, {"t5", 60}, {"t6", 30}, {"trapezoid", 60}}));
}

TEST(Projector, HemicubeCensusMatchesOracle) {
  for (bool even : {true, false}) {
    auto lib = library_census(even ? CellKind::HemicubeEven : CellKind::HemicubeOdd);
    EXPECT_EQ(lib, oracle_census_hemicube(even));
    long total = 0;
    for (const auto& [k, n] : lib) total += n;
    EXPECT_EQ(total, 640);
    for (const char* t : {"t1", "t2", "t3", "t4", "t5", "t6"}) EXPECT_GT(lib[t], 0) << t;
  }
}

TEST(Projector, ClassifierRejectsUnknownShapes) {
  const GoldenScalar z = 0, o = 1;
  Tet flat{GoldenVec3{z, z, z}, GoldenVec3{o, z, z}, GoldenVec3{z, o, z}, GoldenVec3{o, o, z}};
  EXPECT_EQ(classify_tetrahedron(flat).label, TileClass::DegenerateOther);
  Tet cube_corner{GoldenVec3{z, z, z}, GoldenVec3{o, z, z}, GoldenVec3{z, o, z}, GoldenVec3{z, z, o}};
  EXPECT_EQ(classify_tetrahedron(cube_corner).label, TileClass::DegenerateOther);
}

TEST(Projector, HandednessFlipsUnderReflection) {
  Tet t{projected_basis(1), projected_basis(2), projected_basis(3), projected_basis(-5)};
  auto c = classify_tetrahedron(t);
  ASSERT_NE(c.label, TileClass::DegenerateOther);
  Tet m = t;
  for (auto& p : m) p.x = -p.x;
  auto cm = classify_tetrahedron(m);
  EXPECT_EQ(cm.label, c.label);
  EXPECT_EQ(cm.handedness, -c.handedness);
}

TEST(Projector, HemicubeSplitsIntoDodecahedronAndIcosahedron) {
  auto split = hemicube_vertex_split(delone_cell(CellKind::HemicubeEven));
  ASSERT_EQ(split.dodeca_20.size(), 20u);
  ASSERT_EQ(split.icosa_12.size(), 12u);
  const double r_d = std::sqrt(3.0) * kT / 2;  // circumradius of the unit-edge dodecahedron
  for (const auto& v : split.dodeca_20) {
    auto p = project_par(v).to_double();
    EXPECT_NEAR(std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]), r_d, 1e-12);
  }
}

TEST(Projector, SimplexDemoFillsItsHull) {
  for (SimplexKind k : {SimplexKind::Four, SimplexKind::Five}) {
    SimplexDemo d = project_simplex_demo(k);
    GoldenScalar v;
    for (size_t i = 0; i < d.content.size(); ++i) v += fundamental_volume(d.content[i]);
    EXPECT_EQ(v, d.hull.volume);
    EXPECT_EQ(static_cast<long>(d.vertices) - static_cast<long>(d.edges) + static_cast<long>(d.faces), 2);
  }
}
