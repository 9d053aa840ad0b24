#include "mstiler/inflation.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace mstiler;

namespace {

const double kT = (1.0 + std::sqrt(5.0)) / 2.0;
using DM = std::array<std::array<double, 4>, 4>;

DM to_double(const IntMatrix4& m) {
  DM d{};
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = 0; j < 4; ++j) d[i][j] = m[i][j].get_d();
  return d;
}

double det(DM a) {
  double d = 1;
  for (size_t c = 0; c < 4; ++c) {
    size_t p = c;
    for (size_t r = c + 1; r < 4; ++r)
      if (std::fabs(a[r][c]) > std::fabs(a[p][c])) p = r;
    if (a[p][c] == 0) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      d = -d;
    }
    d *= a[c][c];
    for (size_t r = c + 1; r < 4; ++r) {
      double f = a[r][c] / a[c][c];
      for (size_t k = c; k < 4; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return d;
}

// Power iteration, normalised to unit sum.
std::array<double, 4> power_iteration(const DM& m, bool transpose) {
  std::array<double, 4> v{1, 1, 1, 1};
  for (int it = 0; it < 200; ++it) {
    std::array<double, 4> w{};
    for (size_t i = 0; i < 4; ++i)
      for (size_t j = 0; j < 4; ++j) w[i] += (transpose ? m[j][i] : m[i][j]) * v[j];
    double s = w[0] + w[1] + w[2] + w[3];
    for (size_t i = 0; i < 4; ++i) v[i] = w[i] / s;
  }
  return v;
}

TileCountVector T(std::vector<long> c) { return {Basis::T, std::vector<Integer>(c.begin(), c.end())}; }
TileCountVector F(std::vector<long> c) { return {Basis::Fundamental, std::vector<Integer>(c.begin(), c.end())}; }

}  // namespace

TEST(Inflation, MatrixRows) {
  EXPECT_EQ(inflate_counts(TileCountVector::unit(Basis::T, 0), 1), T({1, 2, 2, 2}));
  EXPECT_EQ(inflate_counts(TileCountVector::unit(Basis::T, 1), 2), T({1, 6, 3, 1}));
  TileCountVector v = T({5, 0, 7, 2});
  EXPECT_EQ(inflate_counts(v, 0), v);
  EXPECT_THROW(inflate_counts(F({1, 0, 0, 0, 0, 0}), 1), BasisMismatch);
}

TEST(Inflation, CharacteristicPolynomialAgainstDeterminant) {
  for (Basis b : {Basis::T, Basis::That}) {
    auto poly = characteristic_polynomial(inflation_matrix(b));
    DM m = to_double(inflation_matrix(b));
    for (double x : {-2.0, -1.0, 0.0, 0.5, 1.0, 3.0, 7.0}) {
      DM a = m;
      for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j) a[i][j] = (i == j ? x : 0) - m[i][j];
      double p = 0;
      for (const auto& c : poly) p = p * x + c.get_d();
      EXPECT_NEAR(p, det(a), 1e-9) << x;
      // (x^2 - x - 1)(x^2 - 4x - 1)
      EXPECT_NEAR(p, (x * x - x - 1) * (x * x - 4 * x - 1), 1e-9);
    }
  }
}

TEST(Inflation, PerronFrobeniusAgainstPowerIteration) {
  for (Basis b : {Basis::T, Basis::That}) {
    PFData d = pf_analysis(b);
    DM m = to_double(inflation_matrix(b));
    auto r = power_iteration(m, false), l = power_iteration(m, true);
    for (size_t i = 0; i < 4; ++i) {
      EXPECT_NEAR(d.right[i].to_double(), r[i], 1e-12);
      EXPECT_NEAR(d.left[i].to_double(), l[i], 1e-12);
    }
  }
  PFData m = pf_analysis(Basis::T);
  const double right[4] = {0.3820, 0.1180, 0.2639, 0.2361}, left[4] = {0.1338, 0.4331, 0.2677, 0.1654};
  for (size_t i = 0; i < 4; ++i) {
    EXPECT_NEAR(m.right[i].to_double(), right[i], 1e-4);
    EXPECT_NEAR(m.left[i].to_double(), left[i], 1e-4);
  }
  EXPECT_EQ(pf_analysis(Basis::That).right[0], GoldenScalar::from_ratio(1, 2));
  EXPECT_EQ(pf_analysis(Basis::That).left[1], GoldenScalar::from_ratio(1, 2));
}

TEST(Inflation, ProjectionMatrix) {
  PFData d = pf_analysis(Basis::T);
  EXPECT_EQ(d.projection[0][0], (tau() + 2) * GoldenScalar::from_ratio(2, 30));
  EXPECT_EQ(multiply(d.projection, d.projection), d.projection);
  // Float limit of tau^{-3n} M^n.
  DM p = to_double(matrix_power(inflation_matrix(Basis::T), 25));
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = 0; j < 4; ++j) EXPECT_NEAR(p[i][j] * std::pow(kT, -75.0), d.projection[i][j].to_double(), 1e-9);
}

TEST(Inflation, ConvergenceRate) {
  // The error decays like (tau^{-2})^n; below 1e-6 from n = 15.
  EXPECT_LT(pf_convergence_error(Basis::T, 15), 1e-6);
  EXPECT_LT(pf_convergence_error(Basis::T, 12), 1e-5);
  EXPECT_GT(pf_convergence_error(Basis::T, 12), pf_convergence_error(Basis::T, 13));
}

TEST(Inflation, VolumeHomomorphism) {
  const GoldenScalar t3 = pow(tau(), 3);
  for (Basis b : {Basis::T, Basis::That})
    for (size_t i = 0; i < 4; ++i)
      for (unsigned n = 0; n <= 6; ++n)
        EXPECT_EQ(inflate_counts(TileCountVector::unit(b, i), n).volume(), pow(t3, n) * basis_volume(b, i));
}

TEST(Inflation, FundamentalRules) {
  EXPECT_EQ(fundamental_inflation("t1"), F({0, 0, 1, 0, 1, 0}));
  EXPECT_EQ(fundamental_inflation("t2"), F({0, 1, 0, 1, 1, 0}));
  EXPECT_EQ(fundamental_inflation("t4"), F({0, 1, 0, 1, 1, 1}));
  EXPECT_EQ(fundamental_inflation("T3"), F({1, 2, 3, 4, 3, 3}));
  for (const char* bad : {"t3", "t5", "t6", "q"}) EXPECT_THROW(fundamental_inflation(bad), UnsupportedInflation);
  // Float volumes: tau^3 times the input.
  const double v[6] = {1, kT, kT, kT * kT, kT * kT, kT * kT * kT};
  auto vol = [&](const TileCountVector& c) {
    double s = 0;
    for (size_t i = 0; i < 6; ++i) s += c.counts[i].get_d() * v[i] / 12;
    return s;
  };
  EXPECT_NEAR(vol(fundamental_inflation("t1")), std::pow(kT, 3) * v[0] / 12, 1e-12);
  EXPECT_NEAR(vol(fundamental_inflation("T3")), std::pow(kT, 3) * (2 * v[4] + v[5]) / 12, 1e-12);
}

TEST(Inflation, NamedSolids) {
  EXPECT_EQ(named_content("i(1)"), F({7, 6, 0, 0, 2, 1}));
  EXPECT_EQ(named_content("i(tau)"), F({1, 8, 10, 10, 16, 3}));
  EXPECT_EQ(named_content("d(1)"), F({3, 4, 10, 10, 4, 7}));
  EXPECT_EQ(named_content("d(tau)"), F({7, 18, 24, 32, 38, 31}));
  EXPECT_EQ(named_content("id(1)"), F({0, 0, 0, 20, 24, 12}));
  EXPECT_EQ(named_content("id(tau)"), F({12, 44, 36, 68, 56, 56}));
  EXPECT_NEAR(named_volume("d(1)").to_double(), (7 * kT + 4) / 2, 1e-12);
  EXPECT_NEAR(named_volume("id(1)").to_double(), (17 * kT + 14) / 3, 1e-12);
  EXPECT_NEAR(named_volume("i(1)").to_double(), 5 * kT * kT / 6, 1e-12);
  EXPECT_THROW(named_content("cube"), std::invalid_argument);
}

TEST(Inflation, HatBasis) {
  TileCountVector d1{Basis::That, {3, 4, 0, 1}}, dt{Basis::That, {7, 18, 14, 3}};
  EXPECT_EQ(that_to_t(d1), T({3, 4, 0, 4}));
  EXPECT_EQ(that_to_t(dt), T({7, 18, 14, 10}));
  EXPECT_EQ(inflate_counts(d1, 1), dt);
  EXPECT_EQ(inflate_counts(T({3, 4, 0, 4}), 1), T({7, 18, 14, 10}));
  EXPECT_EQ(to_fundamental(d1), to_fundamental(T({3, 4, 0, 4})));
  EXPECT_EQ(d1.volume(), T({3, 4, 0, 4}).volume());
}
