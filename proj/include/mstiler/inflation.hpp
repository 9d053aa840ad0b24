// Tile-count vectors, the inflation matrices M and M-hat, exact Perron-Frobenius
// data and the fundamental-tile inflation identities.
#pragma once

#include "mstiler/catalog.hpp"
#include "mstiler/golden.hpp"

#include <array>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace mstiler {

enum class Basis { T, That, Fundamental };

inline std::string to_string(Basis b) {
  switch (b) {
    case Basis::T: return "T1,T2,T3,T4";
    case Basis::That: return "T1hat,T2,T3,T4";
    case Basis::Fundamental: return "t1,t2,t3,t4,t5,t6";
  }
  return "?";
}

inline size_t basis_size(Basis b) { return b == Basis::Fundamental ? 6 : 4; }

inline std::vector<std::string> basis_names(Basis b) {
  switch (b) {
    case Basis::T: return {"T1", "T2", "T3", "T4"};
    case Basis::That: return {"T1hat", "T2", "T3", "T4"};
    case Basis::Fundamental: return {"t1", "t2", "t3", "t4", "t5", "t6"};
  }
  return {};
}

class BasisMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline GoldenScalar basis_volume(Basis b, size_t i) {
  switch (b) {
    case Basis::Fundamental: return fundamental_volume(fundamental_labels()[i]);
    case Basis::T: {
      static const std::array<CompositeLabel, 4> l{CompositeLabel::T1, CompositeLabel::T2, CompositeLabel::T3,
                                                   CompositeLabel::T4};
      return composite_reference(l[i]).volume;
    }
    case Basis::That: {
      static const std::array<CompositeLabel, 4> l{CompositeLabel::T1hat, CompositeLabel::T2, CompositeLabel::T3,
                                                   CompositeLabel::T4};
      return composite_reference(l[i]).volume;
    }
  }
  return 0;
}

struct TileCountVector {
  Basis basis = Basis::T;
  std::vector<Integer> counts;

  TileCountVector() = default;
  TileCountVector(Basis b, std::vector<Integer> c) : basis(b), counts(std::move(c)) {
    if (counts.size() != basis_size(b)) throw BasisMismatch("count vector length does not match its basis");
    for (const auto& x : counts)
      if (sgn(x) < 0) throw std::invalid_argument("tile counts must be non-negative");
  }
  static TileCountVector unit(Basis b, size_t i) {
    std::vector<Integer> c(basis_size(b), 0);
    c.at(i) = 1;
    return {b, c};
  }

  GoldenScalar volume() const {
    GoldenScalar v;
    for (size_t i = 0; i < counts.size(); ++i) v += basis_volume(basis, i) * GoldenScalar(Rational(counts[i]));
    return v;
  }

  TileCountVector& operator+=(const TileCountVector& o) {
    if (o.basis != basis) throw BasisMismatch("adding count vectors over different bases");
    for (size_t i = 0; i < counts.size(); ++i) counts[i] += o.counts[i];
    return *this;
  }
  friend TileCountVector operator+(TileCountVector a, const TileCountVector& b) { return a += b; }
  friend TileCountVector operator*(long k, TileCountVector a) {
    for (auto& x : a.counts) x *= k;
    return a;
  }
  friend bool operator==(const TileCountVector& a, const TileCountVector& b) {
    return a.basis == b.basis && a.counts == b.counts;
  }

  std::string to_string() const {
    auto names = basis_names(basis);
    std::string s;
    for (size_t i = 0; i < counts.size(); ++i) {
      if (sgn(counts[i]) == 0) continue;
      if (!s.empty()) s += " + ";
      s += (counts[i] == 1 ? std::string() : counts[i].get_str()) + names[i];
    }
    return s.empty() ? "0" : s;
  }
};

using IntMatrix4 = std::array<std::array<Integer, 4>, 4>;
using GoldenMatrix4 = std::array<std::array<GoldenScalar, 4>, 4>;

/// M over (T1..T4); M-hat over (T1hat, T2, T3, T4). Row i is the content of tau * tile i.
inline IntMatrix4 inflation_matrix(Basis b) {
  auto make = [](std::array<std::array<int, 4>, 4> a) {
    IntMatrix4 m;
    for (size_t i = 0; i < 4; ++i)
      for (size_t j = 0; j < 4; ++j) m[i][j] = a[i][j];
    return m;
  };
  switch (b) {
    case Basis::T: return make({{{1, 2, 2, 2}, {0, 2, 1, 0}, {1, 2, 1, 1}, {1, 1, 1, 1}}});
    case Basis::That: return make({{{2, 3, 3, 1}, {0, 2, 1, 0}, {1, 2, 1, 0}, {1, 1, 1, 0}}});
    case Basis::Fundamental: break;
  }
  throw BasisMismatch("no inflation matrix over the fundamental basis");
}

inline IntMatrix4 multiply(const IntMatrix4& a, const IntMatrix4& b) {
  IntMatrix4 r;
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = 0; j < 4; ++j) {
      r[i][j] = 0;
      for (size_t k = 0; k < 4; ++k) r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}

inline IntMatrix4 matrix_power(const IntMatrix4& m, unsigned n) {
  IntMatrix4 r;
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = 0; j < 4; ++j) r[i][j] = i == j ? 1 : 0;
  IntMatrix4 base = m;
  while (n != 0) {
    if (n & 1U) r = multiply(r, base);
    base = multiply(base, base);
    n >>= 1U;
  }
  return r;
}

/// tau^n applied to every tile of v: the row vector v * M^n.
inline TileCountVector inflate_counts(const TileCountVector& v, unsigned n) {
  if (v.basis == Basis::Fundamental) throw BasisMismatch("inflate_counts needs the T or T-hat basis");
  IntMatrix4 p = matrix_power(inflation_matrix(v.basis), n);
  std::vector<Integer> out(4, 0);
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = 0; j < 4; ++j) out[j] += v.counts[i] * p[i][j];
  return {v.basis, out};
}

/// T-hat counts rewritten in the T basis using T1hat = T1 + T4.
inline TileCountVector that_to_t(const TileCountVector& v) {
  if (v.basis != Basis::That) throw BasisMismatch("expected a T-hat vector");
  return {Basis::T, {v.counts[0], v.counts[1], v.counts[2], v.counts[3] + v.counts[0]}};
}

/// Composite counts expanded into fundamental tiles.
inline TileCountVector to_fundamental(const TileCountVector& v) {
  if (v.basis == Basis::Fundamental) return v;
  static const std::map<CompositeLabel, std::map<TileClass, int>> recipes = [] {
    std::map<CompositeLabel, std::map<TileClass, int>> m;
    for (auto c : composite_labels()) m[c] = composite_recipe(c);
    return m;
  }();
  std::array<CompositeLabel, 4> labels{v.basis == Basis::T ? CompositeLabel::T1 : CompositeLabel::T1hat,
                                       CompositeLabel::T2, CompositeLabel::T3, CompositeLabel::T4};
  std::vector<Integer> out(6, 0);
  for (size_t i = 0; i < 4; ++i)
    for (const auto& [t, k] : recipes.at(labels[i])) out[static_cast<size_t>(t)] += v.counts[i] * k;
  return {Basis::Fundamental, out};
}

// ---------------------------------------------------------------------------

/// Characteristic polynomial det(xI - m), coefficients from x^4 down to x^0.
inline std::array<Integer, 5> characteristic_polynomial(const IntMatrix4& m) {
  // Faddeev-LeVerrier.
  std::array<Integer, 5> c;
  c[0] = 1;
  IntMatrix4 mk;
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = 0; j < 4; ++j) mk[i][j] = 0;
  for (unsigned k = 1; k <= 4; ++k) {
    IntMatrix4 shifted = mk;
    for (size_t i = 0; i < 4; ++i) shifted[i][i] += c[k - 1];
    mk = multiply(m, shifted);
    Integer trace = mk[0][0] + mk[1][1] + mk[2][2] + mk[3][3];
    c[k] = -trace / static_cast<long>(k);
  }
  return c;
}

inline GoldenScalar evaluate(const std::array<Integer, 5>& poly, const GoldenScalar& x) {
  GoldenScalar r;
  for (const auto& c : poly) r = r * x + GoldenScalar(Rational(c));
  return r;
}

class EigenError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A spanning vector of the kernel of a (which must be one-dimensional).
inline std::vector<GoldenScalar> kernel_vector(GoldenMatrix4 a) {
  std::array<int, 4> pivot_col{-1, -1, -1, -1};
  size_t row = 0;
  std::vector<bool> is_pivot(4, false);
  for (size_t col = 0; col < 4 && row < 4; ++col) {
    size_t p = row;
    while (p < 4 && a[p][col].is_zero()) ++p;
    if (p == 4) continue;
    std::swap(a[p], a[row]);
    GoldenScalar inv = a[row][col].inverse();
    for (auto& x : a[row]) x *= inv;
    for (size_t r = 0; r < 4; ++r) {
      if (r == row || a[r][col].is_zero()) continue;
      GoldenScalar f = a[r][col];
      for (size_t j = 0; j < 4; ++j) a[r][j] -= f * a[row][j];
    }
    pivot_col[row] = static_cast<int>(col);
    is_pivot[col] = true;
    ++row;
  }
  if (row != 3) throw EigenError("eigenspace is not one-dimensional");
  size_t free = 0;
  while (is_pivot[free]) ++free;
  std::vector<GoldenScalar> v(4);
  v[free] = 1;
  for (size_t r = 0; r < 3; ++r) v[static_cast<size_t>(pivot_col[r])] = -a[r][free];
  return v;
}

struct PFData {
  std::array<Integer, 5> charpoly;
  std::array<GoldenScalar, 4> eigenvalues;  // tau^3, tau, sigma, sigma^3
  std::vector<GoldenScalar> right;          // M v = tau^3 v, components sum to 1
  std::vector<GoldenScalar> left;           // v^T M = tau^3 v^T, components sum to 1
  GoldenMatrix4 projection;                 // right * left^T / (left . right)
};

inline GoldenMatrix4 to_golden(const IntMatrix4& m) {
  GoldenMatrix4 g;
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = 0; j < 4; ++j) g[i][j] = GoldenScalar(Rational(m[i][j]));
  return g;
}

inline GoldenMatrix4 multiply(const GoldenMatrix4& a, const GoldenMatrix4& b) {
  GoldenMatrix4 r;
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = 0; j < 4; ++j)
      for (size_t k = 0; k < 4; ++k) r[i][j] += a[i][k] * b[k][j];
  return r;
}

inline PFData pf_analysis(Basis b) {
  IntMatrix4 m = inflation_matrix(b);
  PFData d;
  d.charpoly = characteristic_polynomial(m);
  const GoldenScalar t = tau(), s = sigma();
  d.eigenvalues = {t * t * t, t, s, s * s * s};
  for (const auto& e : d.eigenvalues)
    if (!evaluate(d.charpoly, e).is_zero()) throw EigenError("eigenvalue is not a root of the characteristic polynomial");
  const GoldenScalar& lam = d.eigenvalues[0];
  GoldenMatrix4 g = to_golden(m), gt;
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = 0; j < 4; ++j) gt[i][j] = g[j][i];
  for (size_t i = 0; i < 4; ++i) {
    g[i][i] -= lam;
    gt[i][i] -= lam;
  }
  auto normalise = [](std::vector<GoldenScalar> v) {
    GoldenScalar sum;
    for (const auto& x : v) sum += x;
    GoldenScalar inv = sum.inverse();
    for (auto& x : v) x *= inv;
    return v;
  };
  d.right = normalise(kernel_vector(g));
  d.left = normalise(kernel_vector(gt));
  GoldenScalar lr;
  for (size_t i = 0; i < 4; ++i) lr += d.left[i] * d.right[i];
  GoldenScalar inv = lr.inverse();
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = 0; j < 4; ++j) d.projection[i][j] = d.right[i] * d.left[j] * inv;
  return d;
}

/// max |tau^{-3n} (M^n)_ij - P_ij| in double precision.
inline double pf_convergence_error(Basis b, unsigned n) {
  PFData d = pf_analysis(b);
  IntMatrix4 p = matrix_power(inflation_matrix(b), n);
  double scale = std::pow((1.0 + std::sqrt(5.0)) / 2.0, -3.0 * n);
  double worst = 0;
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = 0; j < 4; ++j)
      worst = std::max(worst, std::fabs(p[i][j].get_d() * scale - d.projection[i][j].to_double()));
  return worst;
}

// ---------------------------------------------------------------------------

class UnsupportedInflation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline TileCountVector fundamental(std::array<int, 6> c) {
  return {Basis::Fundamental, std::vector<Integer>(c.begin(), c.end())};
}

/// Fundamental content of tau * label for t1, t2, t4 and the tent T3.
inline TileCountVector fundamental_inflation(const std::string& label) {
  TileCountVector out;
  TileCountVector in;
  if (label == "t1") {
    out = fundamental({0, 0, 1, 0, 1, 0});
    in = fundamental({1, 0, 0, 0, 0, 0});
  } else if (label == "t2") {
    out = fundamental({0, 1, 0, 1, 1, 0});
    in = fundamental({0, 1, 0, 0, 0, 0});
  } else if (label == "t4") {
    out = fundamental({0, 1, 0, 1, 1, 1});
    in = fundamental({0, 0, 0, 1, 0, 0});
  } else if (label == "T3") {
    out = fundamental({1, 2, 3, 4, 3, 3});
    in = fundamental({0, 0, 0, 0, 2, 1});
  } else if (label == "t3" || label == "t5" || label == "t6") {
    throw UnsupportedInflation("no face-matching inflation of " + label + " into fundamental tiles");
  } else {
    throw UnsupportedInflation("unknown tile " + label);
  }
  if (!(pow(tau(), 3) * in.volume() == out.volume())) throw std::logic_error("inflation of " + label + " is not volume exact");
  return out;
}

class ContentMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline const std::vector<std::string>& named_solids() {
  static const std::vector<std::string> n{"i(1)", "i(tau)", "d(1)", "d(tau)", "id(1)", "id(tau)"};
  return n;
}

/// Composite-level content where one is known (d(1), d(tau) over T or T-hat).
inline TileCountVector named_composite_content(const std::string& name, Basis b) {
  if (b == Basis::T) {
    if (name == "d(1)") return {Basis::T, {3, 4, 0, 4}};
    if (name == "d(tau)") return {Basis::T, {7, 18, 14, 10}};
  } else if (b == Basis::That) {
    if (name == "d(1)") return {Basis::That, {3, 4, 0, 1}};
    if (name == "d(tau)") return {Basis::That, {7, 18, 14, 3}};
  }
  throw std::invalid_argument("no composite content for " + name + " over " + to_string(b));
}

/// Fundamental content of a named solid. Stored values are checked against a
/// recomputation from the inflation identities.
inline TileCountVector named_content(const std::string& name) {
  auto i1 = fundamental({7, 6, 0, 0, 2, 1});
  auto id1 = fundamental({0, 0, 0, 20, 24, 12});
  TileCountVector stored, derived;
  if (name == "i(1)") {
    stored = i1;
    derived = 7 * fundamental({1, 0, 0, 0, 0, 0}) + 6 * fundamental({0, 1, 0, 0, 0, 0}) +
              to_fundamental({Basis::T, {0, 0, 1, 0}});
  } else if (name == "i(tau)") {
    stored = fundamental({1, 8, 10, 10, 16, 3});
    derived = 7 * fundamental_inflation("t1") + 6 * fundamental_inflation("t2") + fundamental_inflation("T3");
  } else if (name == "d(1)") {
    stored = fundamental({3, 4, 10, 10, 4, 7});
    derived = to_fundamental(named_composite_content("d(1)", Basis::T));
  } else if (name == "d(tau)") {
    stored = fundamental({7, 18, 24, 32, 38, 31});
    derived = to_fundamental(inflate_counts(named_composite_content("d(1)", Basis::T), 1));
  } else if (name == "id(1)") {
    stored = id1;
    derived = 20 * fundamental({0, 0, 0, 1, 0, 0}) + to_fundamental({Basis::T, {0, 0, 12, 0}});
  } else if (name == "id(tau)") {
    stored = fundamental({12, 44, 36, 68, 56, 56});
    derived = 20 * fundamental_inflation("t4") + 12 * fundamental_inflation("T3");
  } else {
    throw std::invalid_argument("unknown solid " + name);
  }
  if (!(stored == derived)) {
    throw ContentMismatch(name + ": stored " + stored.to_string() + " but recomputed " + derived.to_string());
  }
  return stored;
}

/// Exact volume of a named solid from its content.
inline GoldenScalar named_volume(const std::string& name) { return named_content(name).volume(); }

}  // namespace mstiler
