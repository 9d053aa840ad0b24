#include "mstiler/dissections.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace mstiler;

namespace {

const double kT = (1.0 + std::sqrt(5.0)) / 2.0;
using D3 = std::array<double, 3>;

D3 sub(const D3& a, const D3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
D3 crs(const D3& a, const D3& b) { return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]}; }
double dt(const D3& a, const D3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

struct Plane {
  D3 n;
  double c;
};

// Facet planes of the convex hull by brute force over point triples.
std::vector<Plane> hull_planes(const std::vector<D3>& p) {
  std::vector<Plane> out;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j)
      for (size_t k = j + 1; k < p.size(); ++k) {
        D3 n = crs(sub(p[j], p[i]), sub(p[k], p[i]));
        double len = std::sqrt(dt(n, n));
        if (len < 1e-9) continue;
        for (auto& x : n) x /= len;
        double c = dt(n, p[i]);
        int above = 0, below = 0;
        for (const auto& q : p) {
          double s = dt(n, q) - c;
          above += s > 1e-9;
          below += s < -1e-9;
        }
        if (above && below) continue;
        if (above) {
          for (auto& x : n) x = -x;
          c = -c;
        }
        out.push_back({n, c});
      }
  return out;
}

// +1 strictly inside, -1 strictly outside, 0 within eps of a face.
int tet_side(const std::array<D3, 4>& t, const D3& x, double eps) {
  static const int kF[4][4] = {{1, 2, 3, 0}, {0, 2, 3, 1}, {0, 1, 3, 2}, {0, 1, 2, 3}};
  int result = 1;
  for (const auto& f : kF) {
    D3 n = crs(sub(t[f[1]], t[f[0]]), sub(t[f[2]], t[f[0]]));
    double len = std::sqrt(dt(n, n));
    double sx = dt(n, sub(x, t[f[0]])) / len, so = dt(n, sub(t[f[3]], t[f[0]])) / len;
    double s = so > 0 ? sx : -sx;
    if (s < -eps) return -1;
    if (s < eps) result = 0;
  }
  return result;
}

struct SampleStats {
  long inside = 0, overlaps = 0, gaps = 0, outside_hits = 0;
};

// Monte Carlo oracle: interior points of the hull lie in exactly one tet,
// exterior points in none.
SampleStats sample(const Assembly& a, int n, unsigned seed) {
  std::vector<D3> hp;
  for (const auto& p : a.hull_points) hp.push_back(p.to_double());
  auto planes = hull_planes(hp);
  std::vector<std::array<D3, 4>> tets;
  for (const auto& t : a.tets) tets.push_back({t.vertices[0].to_double(), t.vertices[1].to_double(), t.vertices[2].to_double(), t.vertices[3].to_double()});
  double r = 0;
  for (const auto& p : hp) r = std::max(r, std::sqrt(dt(p, p)));
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(-r * 1.05, r * 1.05);
  SampleStats s;
  const double eps = 1e-7;
  for (int i = 0; i < n; ++i) {
    D3 x{u(rng), u(rng), u(rng)};
    bool in = true, near = false;
    for (const auto& pl : planes) {
      double d = dt(pl.n, x) - pl.c;
      if (d > eps) in = false;
      if (std::fabs(d) <= eps) near = true;
    }
    int hits = 0;
    bool boundary = false;
    for (const auto& t : tets) {
      int side = tet_side(t, x, eps);
      hits += side > 0;
      boundary = boundary || side == 0;
    }
    if (near || boundary) continue;
    if (in) {
      ++s.inside;
      if (hits > 1) ++s.overlaps;
      if (hits == 0) ++s.gaps;
    } else if (hits > 0) {
      ++s.outside_hits;
    }
  }
  return s;
}

double float_hull_volume(const Assembly& a) {
  double v = 0;
  for (const auto& t : a.tets) {
    D3 p = t.vertices[0].to_double();
    v += std::fabs(dt(sub(t.vertices[1].to_double(), p), crs(sub(t.vertices[2].to_double(), p), sub(t.vertices[3].to_double(), p)))) / 6;
  }
  return v;
}

TileCountVector F(std::vector<long> c) { return {Basis::Fundamental, std::vector<Integer>(c.begin(), c.end())}; }

}  // namespace

class Builds : public ::testing::TestWithParam<std::string> {};

TEST_P(Builds, VerifiesAndSamplesClean) {
  Assembly a = build(GetParam());
  VerifyReport v = verify_assembly(a);
  EXPECT_TRUE(v.ok()) << v.first_failure();
  SampleStats s = sample(a, GetParam() == "dtau" ? 4000 : 20000, 7);
  EXPECT_GT(s.inside, 100);
  EXPECT_EQ(s.overlaps, 0);
  EXPECT_EQ(s.gaps, 0);
  EXPECT_EQ(s.outside_hits, 0);
}

INSTANTIATE_TEST_SUITE_P(All, Builds, ::testing::Values("icosa", "d1-3fold", "d1-5fold", "id1", "dtau"),
                         [](const auto& info) {
                           std::string s = info.param;
                           for (auto& ch : s)
                             if (ch == '-') ch = '_';
                           return s;
                         });

TEST(Dissections, Volumes) {
  const double d1 = (7 * kT + 4) / 2;
  EXPECT_NEAR(float_hull_volume(build_icosahedron_unit()), 5 * kT * kT / 6, 1e-12);
  EXPECT_NEAR(float_hull_volume(build_d1_threefold()), d1, 1e-12);
  EXPECT_NEAR(float_hull_volume(build_d1_fivefold()), d1, 1e-12);
  EXPECT_NEAR(float_hull_volume(build_icosidodecahedron_unit()), (17 * kT + 14) / 3, 1e-12);
  EXPECT_NEAR(float_hull_volume(build_d_tau()), std::pow(kT, 3) * d1, 1e-10);
}

TEST(Dissections, Contents) {
  EXPECT_EQ(build_icosahedron_unit().fundamental_content(), F({7, 6, 0, 0, 2, 1}));
  EXPECT_EQ(build_icosidodecahedron_unit().fundamental_content(), F({0, 0, 0, 20, 24, 12}));
  TileCountVector d1{Basis::T, {3, 4, 0, 4}};
  EXPECT_EQ(build_d1_threefold().composite_content(), d1);
  EXPECT_EQ(build_d1_fivefold().composite_content(), d1);
  Assembly dt = build_d_tau();
  EXPECT_EQ(dt.composite_content(), (TileCountVector{Basis::T, {7, 18, 14, 10}}));
  EXPECT_EQ(dt.fundamental_content(), F({7, 18, 24, 32, 38, 31}));
}

TEST(Dissections, HullShapes) {
  VerifyReport ico = verify_assembly(build_icosahedron_unit());
  EXPECT_EQ(ico.hull_vertices, 12u);
  EXPECT_EQ(ico.hull_edges, 30u);
  EXPECT_EQ(ico.hull_faces, 20u);
  EXPECT_EQ(ico.exposed_face_census, (std::map<std::string, int>{{"eq(1)", 20}}));
  VerifyReport d1 = verify_assembly(build_d1_threefold());
  EXPECT_EQ(d1.hull_face_census, (std::map<std::string, int>{{"pentagon(1)", 12}}));
  VerifyReport id = verify_assembly(build_icosidodecahedron_unit());
  EXPECT_EQ(id.hull_vertices, 30u);
  EXPECT_EQ(id.hull_edges, 60u);
  EXPECT_EQ(id.hull_faces, 32u);
  VerifyReport dt = verify_assembly(build_d_tau());
  EXPECT_EQ(dt.hull_face_census, (std::map<std::string, int>{{"pentagon(tau)", 12}}));
}

TEST(Dissections, FrustumRatio) {
  Assembly a = build_d1_fivefold();
  EXPECT_EQ(cluster_volume(a, 0), GoldenScalar(2) * cluster_volume(a, 1));
  EXPECT_NEAR(cluster_volume(a, 1).to_double(), (7 * kT + 4) / 6, 1e-12);
}

TEST(Dissections, ThreefoldSymmetry) {
  GoldenMat3 g = threefold_element();
  EXPECT_EQ(g * g * g, GoldenMat3::identity());
  EXPECT_EQ(g * vertex("a"), vertex("b"));
  EXPECT_EQ(g * vertex("Y5"), vertex("Y5"));
  SymmetryReport s = symmetry_check(build_d1_threefold(), g);
  ASSERT_EQ(s.cluster_image.size(), 4u);
  EXPECT_EQ(s.cluster_image[0], std::optional<size_t>(1));
  EXPECT_EQ(s.cluster_image[1], std::optional<size_t>(2));
  EXPECT_EQ(s.cluster_image[2], std::optional<size_t>(0));
  EXPECT_EQ(s.cluster_image[3], std::optional<size_t>(3));
}

TEST(Dissections, InnerIcosahedronOfDtau) {
  Assembly a = build_d_tau();
  Hull h = convex_hull(a.hull_points);
  for (int i = 1; i <= 6; ++i)
    for (int s : {1, -1}) {
      GoldenVec3 p = projected_basis(s * i);
      EXPECT_TRUE(h.contains(p));
      for (const auto& f : h.faces) EXPECT_NE((dot(f.normal, p) - f.offset).sign(), 0);
    }
}

TEST(Dissections, CorruptedAssembliesFail) {
  Assembly missing = build_icosahedron_unit();
  missing.tets.pop_back();
  missing.blocks.clear();
  EXPECT_FALSE(verify_assembly(missing).ok());

  Assembly doubled = build_icosahedron_unit();
  doubled.tets.push_back(doubled.tets.front());
  doubled.blocks.clear();
  VerifyReport v = verify_assembly(doubled);
  EXPECT_FALSE(v.ok());

  Assembly relabelled = build_icosahedron_unit();
  relabelled.tets.front().label = relabelled.tets.front().label == TileClass::t1 ? TileClass::t2 : TileClass::t1;
  EXPECT_FALSE(verify_assembly(relabelled).ok());
}

TEST(Dissections, UnknownBuild) { EXPECT_THROW(build("cube"), std::invalid_argument); }
