// Exact arithmetic in the golden field Q(sqrt 5), stored in the basis {1, tau}.
//
// Every coordinate, volume and eigenvector component used by the tiler lives
// in this field, so all predicates (sign, equality, orientation) are exact.
// Floating point appears only in to_double() and to_decimal(), which are meant
// for rendering.
#pragma once

#include <gmpxx.h>

#include <array>
#include <cmath>
#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mstiler {

using Rational = mpq_class;
using Integer = mpz_class;

/// a + b*tau with rational a, b and tau = (1 + sqrt 5) / 2.
class GoldenScalar {
 public:
  GoldenScalar() = default;
  GoldenScalar(Rational rational_part, Rational tau_part = 0)  // NOLINT
      : r_(std::move(rational_part)), t_(std::move(tau_part)) {
    r_.canonicalize();
    t_.canonicalize();
  }
  GoldenScalar(long value) : r_(value), t_(0) {}  // NOLINT
  GoldenScalar(int value) : r_(value), t_(0) {}   // NOLINT

  static GoldenScalar tau() { return {0, 1}; }
  /// sigma = 1 - tau = (1 - sqrt 5) / 2, the algebraic conjugate of tau.
  static GoldenScalar sigma() { return {1, -1}; }
  static GoldenScalar from_ratio(long num, long den) { return {Rational(num, den), 0}; }

  const Rational& rational_part() const { return r_; }
  const Rational& tau_part() const { return t_; }

  bool is_zero() const { return sgn(r_) == 0 && sgn(t_) == 0; }
  bool is_rational() const { return sgn(t_) == 0; }

  GoldenScalar& operator+=(const GoldenScalar& o) {
    r_ += o.r_;
    t_ += o.t_;
    return *this;
  }
  GoldenScalar& operator-=(const GoldenScalar& o) {
    r_ -= o.r_;
    t_ -= o.t_;
    return *this;
  }
  // (a + b tau)(c + d tau) = ac + bd + (ad + bc + bd) tau, using tau^2 = tau + 1.
  GoldenScalar& operator*=(const GoldenScalar& o) {
    Rational bd = t_ * o.t_;
    Rational r = r_ * o.r_ + bd;
    Rational t = r_ * o.t_ + t_ * o.r_ + bd;
    r_ = std::move(r);
    t_ = std::move(t);
    return *this;
  }
  GoldenScalar& operator/=(const GoldenScalar& o) { return *this *= o.inverse(); }

  GoldenScalar operator-() const { return {-r_, -t_}; }
  friend GoldenScalar operator+(GoldenScalar a, const GoldenScalar& b) { return a += b; }
  friend GoldenScalar operator-(GoldenScalar a, const GoldenScalar& b) { return a -= b; }
  friend GoldenScalar operator*(GoldenScalar a, const GoldenScalar& b) { return a *= b; }
  friend GoldenScalar operator/(GoldenScalar a, const GoldenScalar& b) { return a /= b; }

  /// tau -> sigma, i.e. a + b tau -> (a + b) - b tau. A ring automorphism.
  GoldenScalar conjugate() const { return {r_ + t_, -t_}; }

  /// Field norm x * conj(x) = a^2 + ab - b^2 (always rational).
  Rational norm() const { return r_ * r_ + r_ * t_ - t_ * t_; }

  GoldenScalar inverse() const {
    Rational n = norm();
    if (sgn(n) == 0) throw std::domain_error("GoldenScalar: division by zero");
    GoldenScalar c = conjugate();
    return {c.r_ / n, c.t_ / n};
  }

  /// Exact sign of the real number a + b tau.
  int sign() const {
    // value = (p + q sqrt 5) / 2 with p = 2a + b, q = b.
    Rational p = 2 * r_ + t_;
    const Rational& q = t_;
    int sp = sgn(p);
    int sq = sgn(q);
    if (sp >= 0 && sq >= 0) return (sp == 0 && sq == 0) ? 0 : 1;
    if (sp <= 0 && sq <= 0) return -1;
    Rational p2 = p * p;
    Rational q2 = 5 * q * q;
    if (sp > 0) return cmp(p2, q2) > 0 ? 1 : -1;
    return cmp(q2, p2) > 0 ? 1 : -1;
  }

  GoldenScalar abs() const { return sign() < 0 ? -*this : *this; }

  double to_double() const {
    static const double kTau = (1.0 + std::sqrt(5.0)) / 2.0;
    return r_.get_d() + t_.get_d() * kTau;
  }

  /// Exact floor of the real value.
  Integer floor() const;

  friend bool operator==(const GoldenScalar& a, const GoldenScalar& b) {
    return a.r_ == b.r_ && a.t_ == b.t_;
  }
  /// Numeric order on the reals.
  friend std::strong_ordering operator<=>(const GoldenScalar& a, const GoldenScalar& b) {
    int s = (a - b).sign();
    return s < 0 ? std::strong_ordering::less
                 : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// Cheap structural order (by components), suitable for map keys only.
  friend bool structural_less(const GoldenScalar& a, const GoldenScalar& b) {
    int c = cmp(a.r_, b.r_);
    if (c != 0) return c < 0;
    return cmp(a.t_, b.t_) < 0;
  }

  friend std::ostream& operator<<(std::ostream& os, const GoldenScalar& x) {
    return os << x.r_.get_str() << (sgn(x.t_) < 0 ? "" : "+") << x.t_.get_str() << "t";
  }

 private:
  Rational r_{0};
  Rational t_{0};
};

inline const GoldenScalar& tau() {
  static const GoldenScalar t = GoldenScalar::tau();
  return t;
}
inline const GoldenScalar& sigma() {
  static const GoldenScalar s = GoldenScalar::sigma();
  return s;
}

inline GoldenScalar pow(GoldenScalar base, unsigned n) {
  GoldenScalar acc(1);
  while (n != 0) {
    if (n & 1U) acc *= base;
    base *= base;
    n >>= 1U;
  }
  return acc;
}

namespace detail {

inline Integer floor_div(const Integer& num, const Integer& den) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

inline Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Integer pow10(long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(e));
  return r;
}

inline Rational rational_pow10(long e) {
  if (e >= 0) return Rational(pow10(e));
  return Rational(Integer(1), pow10(-e));
}

}  // namespace detail

inline Integer GoldenScalar::floor() const {
  // value = (U + W sqrt 5) / D over the integers, D > 0.
  Rational p = 2 * r_ + t_;  // value = p/2 + (t/2) sqrt 5
  Rational half_p = p / 2;
  Rational half_q = t_ / 2;
  Integer den = detail::lcm(half_p.get_den(), half_q.get_den());
  Integer u = half_p.get_num() * (den / half_p.get_den());
  Integer w = half_q.get_num() * (den / half_q.get_den());
  if (sgn(w) == 0) return detail::floor_div(u, den);
  Integer rad = 5 * w * w;
  Integer root;
  mpz_sqrt(root.get_mpz_t(), rad.get_mpz_t());
  // sqrt(rad) is irrational, strictly between root and root + 1.
  if (sgn(w) > 0) return detail::floor_div(u + root, den);
  return detail::floor_div(u - root - 1, den);
}

/// Correctly rounded decimal rendering with `digits` significant digits
/// (round half up; ties only occur for rational values).
inline std::string to_decimal(const GoldenScalar& x, int digits) {
  if (digits < 1) throw std::invalid_argument("to_decimal: digits must be >= 1");
  if (x.is_zero()) {
    return digits == 1 ? std::string("0") : "0." + std::string(static_cast<size_t>(digits - 1), '0');
  }
  const bool negative = x.sign() < 0;
  const GoldenScalar y = x.abs();

  // e = floor(log10(y)), fixed exactly.
  long e = static_cast<long>(std::floor(std::log10(y.to_double())));
  while (GoldenScalar(detail::rational_pow10(e)) > y) --e;
  while (GoldenScalar(detail::rational_pow10(e + 1)) <= y) ++e;

  Integer mantissa;
  for (;;) {
    GoldenScalar scaled = y * GoldenScalar(detail::rational_pow10(digits - 1 - e)) +
                          GoldenScalar(Rational(1, 2));
    mantissa = scaled.floor();
    if (mantissa < detail::pow10(digits)) break;
    ++e;  // rounding carried into a new digit
  }

  std::string m = mantissa.get_str();
  std::string out;
  if (negative) out.push_back('-');
  if (e >= digits - 1) {
    out += m;
    out.append(static_cast<size_t>(e - (digits - 1)), '0');
  } else if (e >= 0) {
    out += m.substr(0, static_cast<size_t>(e + 1));
    out.push_back('.');
    out += m.substr(static_cast<size_t>(e + 1));
  } else {
    out += "0.";
    out.append(static_cast<size_t>(-e - 1), '0');
    out += m;
  }
  return out;
}

/// Exact rational rendered as "p/q" (or "p" when integral).
inline std::string rational_string(const Rational& q) { return q.get_str(); }

inline Rational parse_rational(std::string_view text) {
  Rational q;
  if (q.set_str(std::string(text), 10) != 0) {
    throw std::invalid_argument("parse_rational: not a rational: " + std::string(text));
  }
  q.canonicalize();
  return q;
}

// ---------------------------------------------------------------------------

struct GoldenVec3 {
  GoldenScalar x, y, z;

  const GoldenScalar& operator[](size_t i) const { return i == 0 ? x : (i == 1 ? y : z); }
  GoldenScalar& operator[](size_t i) { return i == 0 ? x : (i == 1 ? y : z); }

  GoldenVec3& operator+=(const GoldenVec3& o) {
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }
  GoldenVec3& operator-=(const GoldenVec3& o) {
    x -= o.x;
    y -= o.y;
    z -= o.z;
    return *this;
  }
  GoldenVec3& operator*=(const GoldenScalar& s) {
    x *= s;
    y *= s;
    z *= s;
    return *this;
  }
  GoldenVec3 operator-() const { return {-x, -y, -z}; }
  friend GoldenVec3 operator+(GoldenVec3 a, const GoldenVec3& b) { return a += b; }
  friend GoldenVec3 operator-(GoldenVec3 a, const GoldenVec3& b) { return a -= b; }
  friend GoldenVec3 operator*(GoldenVec3 a, const GoldenScalar& s) { return a *= s; }
  friend GoldenVec3 operator*(const GoldenScalar& s, GoldenVec3 a) { return a *= s; }

  friend bool operator==(const GoldenVec3& a, const GoldenVec3& b) {
    return a.x == b.x && a.y == b.y && a.z == b.z;
  }

  bool is_zero() const { return x.is_zero() && y.is_zero() && z.is_zero(); }

  std::array<double, 3> to_double() const { return {x.to_double(), y.to_double(), z.to_double()}; }

  friend std::ostream& operator<<(std::ostream& os, const GoldenVec3& v) {
    return os << "(" << v.x << ", " << v.y << ", " << v.z << ")";
  }
};

inline GoldenScalar dot(const GoldenVec3& a, const GoldenVec3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}
inline GoldenVec3 cross(const GoldenVec3& a, const GoldenVec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline GoldenScalar norm2(const GoldenVec3& a) { return dot(a, a); }
inline GoldenScalar distance2(const GoldenVec3& a, const GoldenVec3& b) { return norm2(a - b); }

/// Triple product a . (b x c).
inline GoldenScalar triple(const GoldenVec3& a, const GoldenVec3& b, const GoldenVec3& c) {
  return dot(a, cross(b, c));
}

/// Component-wise structural order; for sets and maps of exact points.
struct StructuralLess {
  bool operator()(const GoldenScalar& a, const GoldenScalar& b) const { return structural_less(a, b); }
  bool operator()(const GoldenVec3& a, const GoldenVec3& b) const {
    if (a.x != b.x) return structural_less(a.x, b.x);
    if (a.y != b.y) return structural_less(a.y, b.y);
    return structural_less(a.z, b.z);
  }
};

/// Numeric lexicographic order (x, then y, then z); deterministic output order.
struct NumericLess {
  bool operator()(const GoldenVec3& a, const GoldenVec3& b) const {
    if (auto c = a.x <=> b.x; c != 0) return c < 0;
    if (auto c = a.y <=> b.y; c != 0) return c < 0;
    return (a.z <=> b.z) < 0;
  }
};

// ---------------------------------------------------------------------------

class GoldenMat3 {
 public:
  GoldenMat3() = default;
  explicit GoldenMat3(std::array<GoldenVec3, 3> rows) : rows_(std::move(rows)) {}

  static GoldenMat3 identity() {
    return GoldenMat3({GoldenVec3{1, 0, 0}, GoldenVec3{0, 1, 0}, GoldenVec3{0, 0, 1}});
  }
  /// Matrix whose columns are the given vectors.
  static GoldenMat3 from_columns(const GoldenVec3& c0, const GoldenVec3& c1, const GoldenVec3& c2) {
    return GoldenMat3({c0, c1, c2}).transposed();
  }

  const GoldenVec3& row(size_t i) const { return rows_[i]; }
  const GoldenScalar& operator()(size_t i, size_t j) const { return rows_[i][j]; }
  GoldenScalar& operator()(size_t i, size_t j) { return rows_[i][j]; }

  GoldenMat3 transposed() const {
    GoldenMat3 t;
    for (size_t i = 0; i < 3; ++i)
      for (size_t j = 0; j < 3; ++j) t(i, j) = (*this)(j, i);
    return t;
  }

  GoldenScalar determinant() const { return triple(rows_[0], rows_[1], rows_[2]); }

  GoldenMat3 inverse() const {
    GoldenScalar det = determinant();
    if (det.is_zero()) throw std::domain_error("GoldenMat3: singular matrix");
    GoldenScalar inv = det.inverse();
    // Columns of the inverse are cross products of the rows.
    GoldenVec3 c0 = cross(rows_[1], rows_[2]) * inv;
    GoldenVec3 c1 = cross(rows_[2], rows_[0]) * inv;
    GoldenVec3 c2 = cross(rows_[0], rows_[1]) * inv;
    return from_columns(c0, c1, c2);
  }

  bool is_orthogonal() const { return *this * transposed() == identity(); }

  friend GoldenVec3 operator*(const GoldenMat3& m, const GoldenVec3& v) {
    return {dot(m.rows_[0], v), dot(m.rows_[1], v), dot(m.rows_[2], v)};
  }
  friend GoldenMat3 operator*(const GoldenMat3& a, const GoldenMat3& b) {
    GoldenMat3 bt = b.transposed();
    GoldenMat3 r;
    for (size_t i = 0; i < 3; ++i)
      for (size_t j = 0; j < 3; ++j) r(i, j) = dot(a.rows_[i], bt.rows_[j]);
    return r;
  }
  friend GoldenMat3 operator*(const GoldenScalar& s, GoldenMat3 m) {
    for (auto& r : m.rows_) r *= s;
    return m;
  }
  friend bool operator==(const GoldenMat3& a, const GoldenMat3& b) { return a.rows_ == b.rows_; }

 private:
  std::array<GoldenVec3, 3> rows_{};
};

}  // namespace mstiler
