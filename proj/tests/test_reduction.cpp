#include "mstiler/reduction.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <functional>

using namespace mstiler;

namespace {

// Plain int64 rewriting: kinds 0..3 are T1..T4, 4 is d.
using Expr = std::map<std::pair<int, int>, long long>;

const long long kM[4][4] = {{1, 2, 2, 2}, {0, 2, 1, 0}, {1, 2, 1, 1}, {1, 1, 1, 1}};
const int kBase[4] = {2, 3, 2, 2};
const std::vector<std::vector<std::array<long long, 3>>> kResidual{
    {{1, 1, 2}, {2, 1, 1}, {3, 1, 1}, {1, 0, 1}, {2, 0, 4}},
    {{1, 2, 2}, {1, 0, 5}, {2, 0, 6}},
    {{1, 0, 5}, {2, 0, 6}},
    {{1, 0, 3}, {2, 0, 5}}};

void oracle_add(Expr& e, int kind, int order, long long c, bool flatten) {
  if (kind == 4) {
    if (order <= 1) {
      e[{4, order}] += c;
      return;
    }
    oracle_add(e, 0, order, 3 * c, flatten);
    oracle_add(e, 1, order, 4 * c, flatten);
    oracle_add(e, 3, order, 4 * c, flatten);
    return;
  }
  const int r = kBase[kind];
  if (order >= r) {
    oracle_add(e, 4, order - r, c, flatten);
    for (const auto& t : kResidual[static_cast<size_t>(kind)])
      oracle_add(e, static_cast<int>(t[0]), static_cast<int>(t[1]) + order - r, c * t[2], flatten);
    return;
  }
  if (!flatten || order == 0) {
    e[{kind, order}] += c;
    return;
  }
  // tau^order applied to a single tile through M.
  std::array<long long, 4> row{0, 0, 0, 0};
  row[static_cast<size_t>(kind)] = 1;
  for (int s = 0; s < order; ++s) {
    std::array<long long, 4> next{0, 0, 0, 0};
    for (size_t i = 0; i < 4; ++i)
      for (size_t j = 0; j < 4; ++j) next[j] += row[i] * kM[i][j];
    row = next;
  }
  for (int j = 0; j < 4; ++j)
    if (row[static_cast<size_t>(j)]) oracle_add(e, j, 0, c * row[static_cast<size_t>(j)], flatten);
}

Expr to_expr(const MixedCount& m) {
  Expr e;
  for (const auto& [t, c] : m.terms) e[{static_cast<int>(t.first), static_cast<int>(t.second)}] = c.get_si();
  return e;
}

Expr oracle(int kind, int order, bool flatten) {
  Expr e;
  oracle_add(e, kind, order, 1, flatten);
  for (auto it = e.begin(); it != e.end();) it = it->second == 0 ? e.erase(it) : std::next(it);
  return e;
}

MixedCount one(Kind k, unsigned n) {
  MixedCount m;
  m.add({k, n}, 1);
  return m;
}

}  // namespace

TEST(Reduction, RulesAreVolumeExact) {
  for (Kind k : {Kind::T1, Kind::T2, Kind::T3, Kind::T4}) EXPECT_TRUE(ReductionRules::volume_exact(k));
}

TEST(Reduction, AgreesWithOracle) {
  for (int kind = 0; kind <= 4; ++kind)
    for (int n = 0; n <= 10; ++n)
      for (bool flatten : {false, true}) {
        auto mode = flatten ? NormalForm::Flatten : NormalForm::Keep;
        EXPECT_EQ(to_expr(reduce(one(static_cast<Kind>(kind), static_cast<unsigned>(n)), mode)), oracle(kind, n, flatten))
            << kind << " " << n << " " << flatten;
      }
}

TEST(Reduction, KeepForms) {
  using K = Kind;
  MixedCount t1 = reduce(one(K::T1, 4), NormalForm::Keep);
  EXPECT_EQ(t1.count(K::D, 0), 13);
  EXPECT_EQ(t1.count(K::D, 1), 2);
  EXPECT_EQ(t1.count(K::T2, 2), 9);
  EXPECT_EQ(t1.count(K::T2, 1), 14);
  EXPECT_EQ(t1.count(K::T3, 1), 14);
  EXPECT_EQ(t1.count(K::T4, 1), 3);
  EXPECT_EQ(t1.count(K::T2, 0), 45);
  EXPECT_EQ(t1.count(K::T3, 0), 68);
  EXPECT_EQ(t1.terms.size(), 8u);
  MixedCount t2 = reduce(one(K::T2, 4), NormalForm::Keep);
  MixedCount want;
  for (auto [k, n, c] : std::vector<std::tuple<Kind, unsigned, long>>{
           {K::D, 0, 2}, {K::D, 1, 1}, {K::T2, 2, 4}, {K::T2, 1, 5}, {K::T3, 1, 6}, {K::T2, 0, 10}, {K::T3, 0, 12}})
    want.add({k, n}, c);
  EXPECT_EQ(t2, want);
}

TEST(Reduction, DodecahedronCensus) {
  struct Row {
    unsigned n;
    long d1, dt, a, b, c, d;
  };
  for (const Row& r : {Row{3, 10, 7, 46, 222, 146, 46}, Row{4, 95, 10, 170, 1110, 898, 170},
                       Row{5, 240, 95, 828, 4446, 3078, 828}, Row{10, 432139, 92850, 1064050, 6341550, 4720730, 1064050}}) {
    DodecahedronCensus c = dodecahedron_census(r.n);
    EXPECT_EQ(c.d1, r.d1);
    EXPECT_EQ(c.dtau, r.dt);
    EXPECT_EQ(c.residual, (TileCountVector{Basis::T, {r.a, r.b, r.c, r.d}}));
  }
  EXPECT_EQ(dodecahedron_census(2).d1, 7);
  EXPECT_EQ(dodecahedron_census(4).dtau, dodecahedron_census(3).d1);
  EXPECT_EQ(dodecahedron_census(5).dtau, dodecahedron_census(4).d1);
  EXPECT_EQ(reduce(one(Kind::D, 0), NormalForm::Flatten), one(Kind::D, 0));
}

TEST(Reduction, VolumeAudit) {
  const double t = (1.0 + std::sqrt(5.0)) / 2.0;
  for (unsigned n = 0; n <= 10; ++n) {
    MixedCount m = reduce(one(Kind::D, n), NormalForm::Flatten);
    VolumeAudit a = volume_audit(m, n);
    EXPECT_TRUE(a.pass) << n;
    EXPECT_NEAR(a.actual.to_double() / (std::pow(t, 3.0 * n) * (7 * t + 4) / 2), 1.0, 1e-12);
  }
  MixedCount bad = reduce(one(Kind::D, 3), NormalForm::Flatten);
  bad.add({Kind::T2, 0}, 1);
  VolumeAudit a = volume_audit(bad, 3);
  EXPECT_FALSE(a.pass);
  EXPECT_EQ(a.discrepancy, pow(tau(), 3) * GoldenScalar::from_ratio(1, 12));
}

TEST(Reduction, NegativeCountsRejected) {
  MixedCount m = one(Kind::T1, 0);
  EXPECT_THROW(m.add({Kind::T1, 0}, -2), NegativeCount);
}

TEST(Reduction, NormalFormParsing) {
  EXPECT_EQ(parse_normal_form("keep"), NormalForm::Keep);
  EXPECT_EQ(parse_normal_form("flatten"), NormalForm::Flatten);
  EXPECT_THROW(parse_normal_form("flat"), std::invalid_argument);
}
