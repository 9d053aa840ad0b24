#include "mstiler/catalog.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace mstiler;

namespace {

const double kT = (1.0 + std::sqrt(5.0)) / 2.0;
using D3 = std::array<double, 3>;

double dist(const D3& a, const D3& b) { return std::hypot(a[0] - b[0], a[1] - b[1], a[2] - b[2]); }

// Number of neighbours at distance 1 for every point.
std::vector<int> unit_degrees(const std::vector<GoldenVec3>& pts) {
  std::vector<int> deg(pts.size(), 0);
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = 0; j < pts.size(); ++j)
      if (i != j && std::fabs(dist(pts[i].to_double(), pts[j].to_double()) - 1) < 1e-12) ++deg[i];
  return deg;
}

double float_volume(const Tet& t) {
  D3 a = t[0].to_double(), b = t[1].to_double(), c = t[2].to_double(), d = t[3].to_double();
  D3 u{b[0] - a[0], b[1] - a[1], b[2] - a[2]}, v{c[0] - a[0], c[1] - a[1], c[2] - a[2]}, w{d[0] - a[0], d[1] - a[1], d[2] - a[2]};
  return std::fabs(u[0] * (v[1] * w[2] - v[2] * w[1]) - u[1] * (v[0] * w[2] - v[2] * w[0]) + u[2] * (v[0] * w[1] - v[1] * w[0])) / 6;
}

}  // namespace

TEST(Vertices, Polyhedra) {
  auto d = dodecahedron_vertices(), i = icosahedron_vertices(), id = icosidodecahedron_vertices();
  ASSERT_EQ(d.size(), 20u);
  ASSERT_EQ(i.size(), 12u);
  ASSERT_EQ(id.size(), 30u);
  for (int k : unit_degrees(d)) EXPECT_EQ(k, 3);
  for (int k : unit_degrees(i)) EXPECT_EQ(k, 5);
  for (int k : unit_degrees(id)) EXPECT_EQ(k, 4);
  // Circumradii: sqrt(3) tau / 2, sqrt(tau^2 + 1) / 2, tau.
  for (const auto& p : d) EXPECT_NEAR(std::sqrt(norm2(p).to_double()), std::sqrt(3.0) * kT / 2, 1e-12);
  for (const auto& p : i) EXPECT_NEAR(std::sqrt(norm2(p).to_double()), std::sqrt(kT * kT + 1) / 2, 1e-12);
  for (const auto& p : id) EXPECT_NEAR(std::sqrt(norm2(p).to_double()), kT, 1e-12);
}

TEST(Vertices, NamedPoints) {
  // X2 = (l1 + ... + l6) / 2.
  GoldenVec3 sum;
  for (int k = 1; k <= 6; ++k) sum += projected_basis(k);
  EXPECT_EQ(vertex("X2"), sum * GoldenScalar::from_ratio(1, 2));
  EXPECT_EQ(vertex("-X2"), -vertex("X2"));
  EXPECT_EQ(vertex("a"), half_vec(-sigma(), 1, 0));
  EXPECT_EQ(vertex("b"), half_vec(-1, 0, -sigma()));
  EXPECT_EQ(vertex("c"), half_vec(0, sigma(), -1));
  // a, b, c form an equilateral triangle of edge 1.
  EXPECT_EQ(distance2(vertex("a"), vertex("b")), GoldenScalar(1));
  EXPECT_EQ(distance2(vertex("b"), vertex("c")), distance2(vertex("c"), vertex("a")));
  EXPECT_THROW(vertex("Q7"), UnknownVertex);
}

TEST(IcosaGroup, OrderAndAction) {
  const auto& g = IcosaGroup::instance();
  ASSERT_EQ(g.order(), 120u);
  EXPECT_EQ(g.rotation_count(), 60u);
  EXPECT_TRUE(g.verify());
  auto ico = icosahedron_vertices();
  for (const auto& m : g.elements()) {
    EXPECT_TRUE(m.is_orthogonal());
    for (const auto& p : ico) EXPECT_NE(std::find(ico.begin(), ico.end(), m * p), ico.end());
  }
  GoldenMat3 f = g.five_fold(), t = g.three_fold();
  EXPECT_EQ(f * f * f * f * f, GoldenMat3::identity());
  EXPECT_NE(f, GoldenMat3::identity());
  EXPECT_EQ(t * t * t, GoldenMat3::identity());
}

TEST(Tiles, CanonicalVolumesAndFaces) {
  const double tv[6] = {1, kT, kT, kT * kT, kT * kT, kT * kT * kT};
  for (size_t i = 0; i < 6; ++i) {
    TileClass l = fundamental_labels()[i];
    Tet t = canonical_tile(l);
    EXPECT_NEAR(float_volume(t), tv[i] / 12, 1e-14);
    EXPECT_EQ(classify_tetrahedron(t).label, l);
    for (const auto& f : tet_faces(t)) {
      bool equilateral = f.shape == FaceShape::Equilateral1 || f.shape == FaceShape::EquilateralTau;
      EXPECT_EQ(axis_class(f.normal), equilateral ? AxisClass::ThreeFold : AxisClass::FiveFold);
    }
  }
}

TEST(Tiles, CongruenceUnderGroupAndTranslation) {
  const auto& g = IcosaGroup::instance();
  GoldenVec3 shift{GoldenScalar(3), tau(), -sigma()};
  for (TileClass l : fundamental_labels()) {
    for (size_t k = 0; k < g.order(); k += 7) {
      Tet t = apply(g.elements()[k], shift, canonical_tile(l));
      std::swap(t[0], t[2]);
      auto c = congruence_class(t);
      ASSERT_TRUE(c.has_value());
      EXPECT_EQ(c->label, l);
      EXPECT_TRUE(c->group_index.has_value());
      EXPECT_EQ(apply(c->linear, c->translation, canonical_tile(l))[0], t[c->vertex_map[0]]);
    }
  }
}

TEST(Composites, TableTwo) {
  struct Row {
    CompositeLabel l;
    size_t n0, n1, n2;
    double volume;
  };
  const std::vector<Row> rows{{CompositeLabel::T1, 8, 14, 8, 2 * std::pow(kT, 4) / 12},
                              {CompositeLabel::T2, 4, 6, 4, std::pow(kT, 3) / 12},
                              {CompositeLabel::T3, 6, 10, 6, (4 * kT + 3) / 12},
                              {CompositeLabel::T4, 6, 11, 7, 2 * std::pow(kT, 3) / 12},
                              {CompositeLabel::E, 6, 12, 8, (2 * kT * kT + 1) / 12},
                              {CompositeLabel::C, 6, 12, 8, (4 * kT + 1) / 12},
                              {CompositeLabel::T3bar, 6, 10, 6, (4 * kT + 3) / 12}};
  for (const auto& r : rows) {
    CompositeTile c = assemble(r.l);
    EXPECT_EQ(c.boundary.n0, r.n0) << to_string(r.l);
    EXPECT_EQ(c.boundary.n1, r.n1) << to_string(r.l);
    EXPECT_EQ(c.boundary.n2, r.n2) << to_string(r.l);
    double v = 0;
    for (const auto& t : c.tets()) v += float_volume(t);
    EXPECT_NEAR(v, r.volume, 1e-13) << to_string(r.l);
    EXPECT_NEAR(c.volume.to_double(), r.volume, 1e-13);
    EXPECT_EQ(face_axis_check(c.boundary.faces).exceptions, 0u) << to_string(r.l);
    DihedralReport d = dihedral_check(c.boundary);
    EXPECT_EQ(d.tan2_law, d.adjacent_pairs) << to_string(r.l);
  }
}

TEST(Composites, FaceShapes) {
  auto census = [](CompositeLabel l) { return face_census(assemble(l).boundary); };
  const std::string r1 = to_string(FaceShape::Robinson11T), r2 = to_string(FaceShape::Robinson1TT);
  const std::string trap = to_string(FaceShape::Trapezoid111T), pent = to_string(FaceShape::Pentagon1);
  EXPECT_EQ(census(CompositeLabel::T1), (std::map<std::string, int>{{r1, 4}, {trap, 4}}));
  EXPECT_EQ(census(CompositeLabel::T3), (std::map<std::string, int>{{r2, 5}, {pent, 1}}));
  EXPECT_EQ(census(CompositeLabel::T4), (std::map<std::string, int>{{r1, 3}, {r2, 3}, {trap, 1}}));
  EXPECT_EQ(census(CompositeLabel::T3bar), (std::map<std::string, int>{{r2, 4}, {trap, 2}}));
}

TEST(Composites, Recipes) {
  using M = std::map<TileClass, int>;
  EXPECT_EQ(composite_recipe(CompositeLabel::T2), (M{{TileClass::t2, 1}, {TileClass::t4, 1}}));
  EXPECT_EQ(composite_recipe(CompositeLabel::T3), (M{{TileClass::t5, 2}, {TileClass::t6, 1}}));
  EXPECT_EQ(composite_recipe(CompositeLabel::E), (M{{TileClass::t1, 1}, {TileClass::t4, 2}}));
  EXPECT_EQ(composite_recipe(CompositeLabel::C), (M{{TileClass::t3, 2}, {TileClass::t6, 1}}));
  EXPECT_EQ(composite_recipe(CompositeLabel::T1hat), (M{{TileClass::t1, 1}, {TileClass::t3, 3}, {TileClass::t4, 2}, {TileClass::t5, 1}, {TileClass::t6, 2}}));
}

TEST(Composites, LabelsRoundTrip) {
  for (CompositeLabel l : composite_labels()) EXPECT_EQ(parse_composite_label(to_string(l)), l);
  EXPECT_THROW(parse_composite_label("T9"), std::invalid_argument);
}
