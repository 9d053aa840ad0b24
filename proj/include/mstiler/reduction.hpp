// Dodecahedron extraction over mixed-order tile expressions.
#pragma once

#include "mstiler/inflation.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mstiler {

enum class Kind { T1, T2, T3, T4, D };

inline std::string to_string(Kind k) {
  switch (k) {
    case Kind::T1: return "T1";
    case Kind::T2: return "T2";
    case Kind::T3: return "T3";
    case Kind::T4: return "T4";
    case Kind::D: return "d";
  }
  return "?";
}

inline Kind parse_kind(const std::string& s) {
  for (Kind k : {Kind::T1, Kind::T2, Kind::T3, Kind::T4, Kind::D})
    if (to_string(k) == s) return k;
  throw std::invalid_argument("unknown tile kind: " + s);
}

/// (kind, order): order n means scaled by tau^n.
using Term = std::pair<Kind, unsigned>;

class NegativeCount : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct MixedCount {
  std::map<Term, Integer> terms;

  MixedCount() = default;
  MixedCount(std::initializer_list<std::pair<const Term, Integer>> init) {
    for (const auto& [t, c] : init) add(t, c);
  }

  void add(const Term& t, const Integer& k) {
    Integer& slot = terms[t];
    slot += k;
    if (sgn(slot) < 0) throw NegativeCount("negative count for " + mstiler::to_string(t.first));
    if (sgn(slot) == 0) terms.erase(t);
  }
  void add(const MixedCount& o, const Integer& k = 1) {
    for (const auto& [t, c] : o.terms) add(t, c * k);
  }
  MixedCount lifted(unsigned by) const {
    MixedCount r;
    for (const auto& [t, c] : terms) r.terms[{t.first, t.second + by}] = c;
    return r;
  }
  Integer count(Kind k, unsigned order) const {
    auto it = terms.find({k, order});
    return it == terms.end() ? Integer(0) : it->second;
  }

  /// Sum of count * tau^(3 order) * vol(kind); vol(d) = (7 tau + 4) / 2.
  GoldenScalar volume() const {
    GoldenScalar v;
    for (const auto& [t, c] : terms) v += pow(tau(), 3 * t.second) * kind_volume(t.first) * GoldenScalar(Rational(c));
    return v;
  }

  static GoldenScalar kind_volume(Kind k) {
    if (k == Kind::D) return (GoldenScalar(7) * tau() + 4) * GoldenScalar::from_ratio(1, 2);
    return basis_volume(Basis::T, static_cast<size_t>(k));
  }

  std::string to_string() const {
    std::string s;
    for (const auto& [t, c] : terms) {
      if (!s.empty()) s += " + ";
      if (c != 1) s += c.get_str();
      s += mstiler::to_string(t.first);
      if (t.first == Kind::D) s += t.second == 0 ? "(1)" : (t.second == 1 ? "(tau)" : "(tau^" + std::to_string(t.second) + ")");
      else if (t.second != 0) s += "^(" + std::to_string(t.second) + ")";
    }
    return s.empty() ? "0" : s;
  }

  friend bool operator==(const MixedCount& a, const MixedCount& b) { return a.terms == b.terms; }
};

enum class NormalForm { Keep, Flatten };

inline std::string to_string(NormalForm f) { return f == NormalForm::Keep ? "keep" : "flatten"; }
inline NormalForm parse_normal_form(const std::string& s) {
  if (s == "keep") return NormalForm::Keep;
  if (s == "flatten") return NormalForm::Flatten;
  throw std::invalid_argument("unknown normal form: " + s);
}

/// Base orders r_i and residuals: tau^{r_i} T_i = d(1) + residual_i.
struct ReductionRules {
  static unsigned base_order(Kind k) {
    switch (k) {
      case Kind::T1: return 2;
      case Kind::T2: return 3;
      case Kind::T3: return 2;
      case Kind::T4: return 2;
      case Kind::D: break;
    }
    throw std::invalid_argument("d has no base order");
  }
  static MixedCount residual(Kind k) {
    using K = Kind;
    switch (k) {
      case K::T1: return {{{K::T2, 1}, 2}, {{K::T3, 1}, 1}, {{K::T4, 1}, 1}, {{K::T2, 0}, 1}, {{K::T3, 0}, 4}};
      case K::T2: return {{{K::T2, 2}, 2}, {{K::T2, 0}, 5}, {{K::T3, 0}, 6}};
      case K::T3: return {{{K::T2, 0}, 5}, {{K::T3, 0}, 6}};
      case K::T4: return {{{K::T2, 0}, 3}, {{K::T3, 0}, 5}};
      case K::D: break;
    }
    throw std::invalid_argument("d has no residual");
  }
  /// tau^{r_i} T_i - residual_i must have the volume of d(1).
  static bool volume_exact(Kind k) {
    MixedCount lhs{{{k, base_order(k)}, 1}};
    MixedCount rhs = residual(k);
    rhs.add({Kind::D, 0}, 1);
    return lhs.volume() == rhs.volume();
  }
};

namespace detail {

inline MixedCount reduce_term(const Term& t, NormalForm mode, std::map<std::pair<Term, NormalForm>, MixedCount>& memo) {
  auto key = std::make_pair(t, mode);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  const auto [kind, n] = t;
  MixedCount step;
  bool terminal = false;
  if (kind == Kind::D) {
    if (n <= 1) terminal = true;
    else step = {{{Kind::T1, n}, 3}, {{Kind::T2, n}, 4}, {{Kind::T4, n}, 4}};
  } else {
    unsigned r = ReductionRules::base_order(kind);
    if (n >= r) {
      step = ReductionRules::residual(kind).lifted(n - r);
      step.add({Kind::D, n - r}, 1);
    } else if (mode == NormalForm::Keep || n == 0) {
      terminal = true;
    } else {
      TileCountVector row = inflate_counts(TileCountVector::unit(Basis::T, static_cast<size_t>(kind)), n);
      for (size_t j = 0; j < 4; ++j)
        if (sgn(row.counts[j]) != 0) step.add({static_cast<Kind>(j), 0}, row.counts[j]);
    }
  }
  MixedCount out;
  if (terminal) {
    out.add(t, 1);
  } else {
    for (const auto& [sub, c] : step.terms) out.add(reduce_term(sub, mode, memo), c);
  }
  memo.emplace(key, out);
  return out;
}

}  // namespace detail

/// Rewrites expr to the fixed point of the extraction strategy:
///   d at order m >= 2 becomes 3 T1 + 4 T2 + 4 T4 at order m;
///   T_i at order n >= r_i becomes d at order n - r_i plus the lifted residual;
///   T_i below its base order is kept, or in flatten mode expanded to order 0 through M^n.
class Reducer {
 public:
  MixedCount reduce(const MixedCount& expr, NormalForm mode) {
    std::lock_guard<std::mutex> lock(mutex_);
    MixedCount out;
    for (const auto& [t, c] : expr.terms) out.add(detail::reduce_term(t, mode, memo_), c);
    return out;
  }
  size_t memo_size() const { return memo_.size(); }

 private:
  std::mutex mutex_;
  std::map<std::pair<Term, NormalForm>, MixedCount> memo_;
};

inline Reducer& shared_reducer() {
  static Reducer r;
  return r;
}

inline MixedCount reduce(const MixedCount& expr, NormalForm mode) { return shared_reducer().reduce(expr, mode); }

struct DodecahedronCensus {
  unsigned order = 0;
  Integer d1, dtau;
  TileCountVector residual{Basis::T, {0, 0, 0, 0}};
};

/// d(tau^n) in flatten form, summarised.
inline DodecahedronCensus dodecahedron_census(unsigned n) {
  MixedCount m = reduce({{{Kind::D, n}, 1}}, NormalForm::Flatten);
  DodecahedronCensus c;
  c.order = n;
  c.d1 = m.count(Kind::D, 0);
  c.dtau = m.count(Kind::D, 1);
  for (size_t j = 0; j < 4; ++j) c.residual.counts[j] = m.count(static_cast<Kind>(j), 0);
  return c;
}

struct VolumeAudit {
  bool pass = false;
  GoldenScalar expected, actual, discrepancy;  // discrepancy = actual - expected
};

/// Does expr have the volume of d(tau^n)?
inline VolumeAudit volume_audit(const MixedCount& expr, unsigned n) {
  VolumeAudit a;
  a.expected = pow(tau(), 3 * n) * MixedCount::kind_volume(Kind::D);
  a.actual = expr.volume();
  a.discrepancy = a.actual - a.expected;
  a.pass = a.discrepancy.is_zero();
  return a;
}

}  // namespace mstiler
