#include "mstiler/lattice.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace mstiler;

namespace {

// Hemicube vertices as +-1 sign vectors with an even or odd number of minus signs.
std::vector<std::array<int, 6>> sign_vectors(bool even) {
  std::vector<std::array<int, 6>> out;
  for (int mask = 0; mask < 64; ++mask) {
    std::array<int, 6> v{};
    int minus = 0;
    for (int i = 0; i < 6; ++i) {
      v[static_cast<size_t>(i)] = (mask >> i) & 1 ? -1 : 1;
      minus += (mask >> i) & 1;
    }
    if ((minus % 2 == 0) == even) out.push_back(v);
  }
  return out;
}

// Vertices differing in exactly two signs are adjacent; simplices of the
// half-cube up to dimension 3 are exactly the cliques of this graph.
std::array<long, 4> clique_counts(const std::vector<std::array<int, 6>>& v) {
  const size_t n = v.size();
  auto adj = [&](size_t a, size_t b) {
    int d = 0;
    for (size_t i = 0; i < 6; ++i) d += v[a][i] != v[b][i];
    return d == 2;
  };
  std::array<long, 4> c{static_cast<long>(n), 0, 0, 0};
  for (size_t a = 0; a < n; ++a)
    for (size_t b = a + 1; b < n; ++b) {
      if (!adj(a, b)) continue;
      ++c[1];
      for (size_t e = b + 1; e < n; ++e) {
        if (!adj(a, e) || !adj(b, e)) continue;
        ++c[2];
        for (size_t f = e + 1; f < n; ++f)
          if (adj(a, f) && adj(b, f) && adj(e, f)) ++c[3];
      }
    }
  return c;
}

long binomial(long n, long k) {
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST(Vector6, HalfUnitStorage) {
  Vector6 v = Vector6::from_halves({1, -1, 1, 1, -1, -1});
  EXPECT_EQ(v.norm2(), Rational(3, 2));
  EXPECT_TRUE(v.is_half_cube_vertex());
  EXPECT_EQ(v.minus_count(), 3);
  EXPECT_FALSE(v.in_root_lattice());
  EXPECT_TRUE((Vector6::basis(1) + Vector6::basis(2)).in_root_lattice());
  EXPECT_FALSE(Vector6::basis(1).in_root_lattice());
}

TEST(PointGroup, Order) {
  EXPECT_EQ(PointGroup::instance().elements().size(), 32u * 720u);
  std::set<uint32_t> keys;
  for (const auto& g : PointGroup::instance().elements()) {
    EXPECT_EQ(g.sign_changes() % 2, 0);
    keys.insert(g.key());
  }
  EXPECT_EQ(keys.size(), 23040u);
}

TEST(DeloneCells, VertexSets) {
  auto even = delone_cell(CellKind::HemicubeEven), odd = delone_cell(CellKind::HemicubeOdd);
  auto cross = delone_cell(CellKind::CrossPolytope);
  EXPECT_EQ(even.vertices.size(), 32u);
  EXPECT_EQ(odd.vertices.size(), 32u);
  EXPECT_EQ(cross.vertices.size(), 12u);
  for (const auto& v : even.vertices) EXPECT_EQ(v.minus_count() % 2, 0);
  for (const auto& v : odd.vertices) EXPECT_EQ(v.minus_count() % 2, 1);
  for (const auto& v : cross.vertices) EXPECT_EQ(v.norm2(), Rational(1));
}

TEST(FacetCounts, HemicubeAgainstCliqueOracle) {
  for (bool even : {true, false}) {
    auto oracle = clique_counts(sign_vectors(even));
    FacetCounts fc = facet_counts(delone_cell(even ? CellKind::HemicubeEven : CellKind::HemicubeOdd));
    for (size_t k = 0; k < 4; ++k) EXPECT_EQ(fc.n[k], oracle[k]) << "k=" << k;
    EXPECT_EQ(fc.n, (std::array<long, 6>{32, 240, 640, 640, 252, 44}));
    EXPECT_EQ(fc.euler(), 0);
  }
}

TEST(FacetCounts, CrossPolytopeAgainstBinomials) {
  FacetCounts fc = facet_counts(delone_cell(CellKind::CrossPolytope));
  for (long k = 0; k < 6; ++k) EXPECT_EQ(fc.n[static_cast<size_t>(k)], binomial(6, k + 1) << (k + 1)) << "k=" << k;
  EXPECT_EQ(fc.euler(), 0);
}

TEST(FacetCounts, CosetTermsDivideGroupOrder) {
  for (CellKind k : {CellKind::CrossPolytope, CellKind::HemicubeEven}) {
    FacetCounts fc = facet_counts(delone_cell(k));
    for (const auto& terms : fc.terms)
      for (long t : terms) EXPECT_EQ(23040 % t, 0);
  }
  // The 3-faces of the half-cube come in two orbits.
  FacetCounts h = facet_counts(delone_cell(CellKind::HemicubeEven));
  EXPECT_EQ(h.terms[3], (std::vector<long>{160, 480}));
}

TEST(Enumeration, HemicubeHigherFacesRejected) {
  EXPECT_THROW(enumerate_faces(delone_cell(CellKind::HemicubeEven), 4), std::invalid_argument);
}

TEST(Enumeration, EveryCliqueIsSupported) {
  auto cell = delone_cell(CellKind::HemicubeEven);
  for (const auto& f : enumerate_faces(cell, 3)) {
    auto sf = supporting_functional(cell.vertices, f.vertices);
    ASSERT_TRUE(sf.has_value());
  }
}

TEST(Enumeration, NonFaceRejectedByFaceTest) {
  // Two antipodal hemicube vertices span a segment through the centre.
  auto cell = delone_cell(CellKind::HemicubeEven);
  size_t a = 0, b = 0;
  for (size_t i = 0; i < cell.vertices.size(); ++i)
    if (cell.vertices[i] == -cell.vertices[0]) b = i;
  ASSERT_NE(a, b);
  EXPECT_FALSE(supporting_functional(cell.vertices, {a, b}).has_value());
}
