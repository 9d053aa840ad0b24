// The D6 root lattice: orthonormal basis l_1..l_6, weights, the point group of
// signed permutations with an even number of sign changes, and the Delone
// cells (cross polytope, two hemicubes) with their face enumeration.
#pragma once

#include "mstiler/exact_lp.hpp"
#include "mstiler/golden.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

namespace mstiler {

/// A point of R^6 in the orthonormal l-basis. Every point the tiler needs has
/// integer or half-integer coordinates, so coordinates are stored doubled.
class Vector6 {
 public:
  Vector6() = default;
  static Vector6 from_halves(std::array<int, 6> halves) {
    Vector6 v;
    v.h_ = halves;
    return v;
  }
  static Vector6 from_integers(std::array<int, 6> c) {
    for (auto& x : c) x *= 2;
    return from_halves(c);
  }
  /// l_i, 1-based.
  static Vector6 basis(int i) {
    std::array<int, 6> c{};
    c.at(static_cast<size_t>(i - 1)) = 2;
    return from_halves(c);
  }

  int halves(size_t i) const { return h_[i]; }
  const std::array<int, 6>& halves() const { return h_; }
  Rational coord(size_t i) const {
    Rational q(h_[i], 2);
    q.canonicalize();
    return q;
  }

  Vector6 operator+(const Vector6& o) const {
    Vector6 r;
    for (size_t i = 0; i < 6; ++i) r.h_[i] = h_[i] + o.h_[i];
    return r;
  }
  Vector6 operator-(const Vector6& o) const {
    Vector6 r;
    for (size_t i = 0; i < 6; ++i) r.h_[i] = h_[i] - o.h_[i];
    return r;
  }
  Vector6 operator-() const {
    Vector6 r;
    for (size_t i = 0; i < 6; ++i) r.h_[i] = -h_[i];
    return r;
  }

  /// Exact inner product.
  Rational dot(const Vector6& o) const {
    long s = 0;
    for (size_t i = 0; i < 6; ++i) s += static_cast<long>(h_[i]) * o.h_[i];
    Rational q(s, 4);
    q.canonicalize();
    return q;
  }
  Rational norm2() const { return dot(*this); }

  /// Integer coordinates with even sum.
  bool in_root_lattice() const {
    int sum = 0;
    for (int x : h_) {
      if (x % 2 != 0) return false;
      sum += x / 2;
    }
    return sum % 2 == 0;
  }
  /// All six coordinates equal to +-1/2.
  bool is_half_cube_vertex() const {
    return std::all_of(h_.begin(), h_.end(), [](int x) { return x == 1 || x == -1; });
  }
  int minus_count() const {
    return static_cast<int>(std::count_if(h_.begin(), h_.end(), [](int x) { return x < 0; }));
  }

  friend bool operator==(const Vector6&, const Vector6&) = default;
  friend auto operator<=>(const Vector6&, const Vector6&) = default;

  std::string to_string() const {
    std::string s = "(";
    for (size_t i = 0; i < 6; ++i) {
      if (i != 0) s += ", ";
      s += coord(i).get_str();
    }
    return s + ")";
  }

 private:
  std::array<int, 6> h_{};
};

// ---------------------------------------------------------------------------

/// x -> y with y[image[i]] = sign[i] * x[i].
struct SignedPermutation {
  std::array<uint8_t, 6> image{0, 1, 2, 3, 4, 5};
  std::array<int8_t, 6> sign{1, 1, 1, 1, 1, 1};

  static SignedPermutation identity() { return {}; }

  Vector6 apply(const Vector6& v) const {
    std::array<int, 6> out{};
    for (size_t i = 0; i < 6; ++i) out[image[i]] = sign[i] * v.halves(i);
    return Vector6::from_halves(out);
  }
  /// (a * b)(x) = a(b(x)).
  friend SignedPermutation operator*(const SignedPermutation& a, const SignedPermutation& b) {
    SignedPermutation r;
    for (size_t i = 0; i < 6; ++i) {
      r.image[i] = a.image[b.image[i]];
      r.sign[i] = static_cast<int8_t>(a.sign[b.image[i]] * b.sign[i]);
    }
    return r;
  }
  SignedPermutation inverse() const {
    SignedPermutation r;
    for (size_t i = 0; i < 6; ++i) {
      r.image[image[i]] = static_cast<uint8_t>(i);
      r.sign[image[i]] = sign[i];
    }
    return r;
  }
  int sign_changes() const {
    return static_cast<int>(std::count(sign.begin(), sign.end(), int8_t{-1}));
  }
  uint32_t key() const {
    uint32_t k = 0;
    for (size_t i = 0; i < 6; ++i) k = k * 6 + image[i];
    for (size_t i = 0; i < 6; ++i) k = k * 2 + (sign[i] < 0 ? 1U : 0U);
    return k;
  }
  friend bool operator==(const SignedPermutation& a, const SignedPermutation& b) {
    return a.image == b.image && a.sign == b.sign;
  }
};

/// The point group of D6 (order 2^5 6! = 23040), materialised once by closure
/// from adjacent transpositions and a double sign flip.
class PointGroup {
 public:
  static constexpr size_t kOrder = 23040;

  static const PointGroup& instance() {
    static const PointGroup g;
    return g;
  }

  const std::vector<SignedPermutation>& elements() const { return elements_; }
  size_t order() const { return elements_.size(); }
  const std::vector<SignedPermutation>& generators() const { return generators_; }

  /// Identity present, inverses present, closed under the generators.
  bool verify_axioms() const {
    std::unordered_set<uint32_t> keys;
    for (const auto& g : elements_) keys.insert(g.key());
    if (!keys.count(SignedPermutation::identity().key())) return false;
    for (const auto& g : elements_) {
      if (!keys.count(g.inverse().key())) return false;
      if (g.sign_changes() % 2 != 0) return false;
      for (const auto& s : generators_)
        if (!keys.count((s * g).key())) return false;
    }
    return true;
  }

 private:
  PointGroup() {
    for (uint8_t i = 0; i < 5; ++i) {
      SignedPermutation t;
      std::swap(t.image[i], t.image[i + 1]);
      generators_.push_back(t);
    }
    SignedPermutation flip;
    flip.sign[4] = -1;
    flip.sign[5] = -1;
    generators_.push_back(flip);

    std::unordered_set<uint32_t> seen;
    std::vector<SignedPermutation> frontier{SignedPermutation::identity()};
    seen.insert(frontier.front().key());
    elements_.push_back(frontier.front());
    while (!frontier.empty()) {
      std::vector<SignedPermutation> next;
      for (const auto& g : frontier) {
        for (const auto& s : generators_) {
          SignedPermutation h = s * g;
          if (seen.insert(h.key()).second) {
            elements_.push_back(h);
            next.push_back(h);
          }
        }
      }
      frontier = std::move(next);
    }
    if (elements_.size() != kOrder) throw std::logic_error("D6 point group closure has wrong order");
  }

  std::vector<SignedPermutation> generators_;
  std::vector<SignedPermutation> elements_;
};

// ---------------------------------------------------------------------------

enum class WeightLabel { Omega1, Omega2, Omega5, Omega6 };

struct WeightVector {
  WeightLabel label;
  Vector6 coordinates;
};

inline WeightVector weight(WeightLabel label) {
  switch (label) {
    case WeightLabel::Omega1:
      return {label, Vector6::basis(1)};
    case WeightLabel::Omega2:
      return {label, Vector6::basis(1) + Vector6::basis(2)};
    case WeightLabel::Omega5:
      return {label, Vector6::from_halves({1, 1, 1, 1, 1, -1})};
    case WeightLabel::Omega6:
      return {label, Vector6::from_halves({1, 1, 1, 1, 1, 1})};
  }
  throw std::invalid_argument("unknown weight label");
}

inline WeightLabel parse_weight_label(const std::string& s) {
  if (s == "omega1" || s == "w1") return WeightLabel::Omega1;
  if (s == "omega2" || s == "w2") return WeightLabel::Omega2;
  if (s == "omega5" || s == "w5") return WeightLabel::Omega5;
  if (s == "omega6" || s == "w6") return WeightLabel::Omega6;
  throw std::invalid_argument("unknown weight label: " + s);
}

/// Orbit of w under the point group, sorted.
inline std::vector<Vector6> point_group_orbit(const Vector6& w) {
  std::set<Vector6> orbit;
  for (const auto& g : PointGroup::instance().elements()) orbit.insert(g.apply(w));
  return {orbit.begin(), orbit.end()};
}
inline std::vector<Vector6> point_group_orbit(const WeightVector& w) {
  return point_group_orbit(w.coordinates);
}

/// Brute-force count of group elements fixing every point of `points` setwise.
inline size_t stabilizer_order(const std::vector<Vector6>& points) {
  std::set<Vector6> target(points.begin(), points.end());
  size_t count = 0;
  for (const auto& g : PointGroup::instance().elements()) {
    bool fixes = std::all_of(points.begin(), points.end(),
                             [&](const Vector6& p) { return target.count(g.apply(p)) != 0; });
    if (fixes) ++count;
  }
  return count;
}

// ---------------------------------------------------------------------------

enum class CellKind { CrossPolytope, HemicubeEven, HemicubeOdd };

inline std::string to_string(CellKind k) {
  switch (k) {
    case CellKind::CrossPolytope: return "cross";
    case CellKind::HemicubeEven: return "hemi-even";
    case CellKind::HemicubeOdd: return "hemi-odd";
  }
  return "?";
}

inline CellKind parse_cell_kind(const std::string& s) {
  if (s == "cross") return CellKind::CrossPolytope;
  if (s == "hemi-even") return CellKind::HemicubeEven;
  if (s == "hemi-odd") return CellKind::HemicubeOdd;
  throw std::invalid_argument("unknown cell kind: " + s);
}

struct DeloneCell {
  CellKind kind;
  std::vector<Vector6> vertices;
};

/// Cross polytope = orbit of omega1, hemicubes = orbits of omega6 (even number
/// of minus signs) and omega5 (odd).
inline DeloneCell delone_cell(CellKind kind) {
  switch (kind) {
    case CellKind::CrossPolytope:
      return {kind, point_group_orbit(weight(WeightLabel::Omega1))};
    case CellKind::HemicubeEven:
      return {kind, point_group_orbit(weight(WeightLabel::Omega6))};
    case CellKind::HemicubeOdd:
      return {kind, point_group_orbit(weight(WeightLabel::Omega5))};
  }
  throw std::invalid_argument("unknown cell kind");
}

/// A k-dimensional simplex face, as indices into the parent cell's vertices.
struct Facet {
  int dimension = 0;
  std::vector<size_t> vertices;
};

class FaceTestError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A linear functional that takes one common value on the face and strictly
/// smaller values on every other vertex of the cell.
struct SupportingFunctional {
  std::array<Rational, 6> normal;
  Rational value;
};

namespace detail {

inline bool supports(const std::vector<Vector6>& cell, const std::vector<size_t>& face,
                     const std::array<Rational, 6>& n, Rational* value_out) {
  auto eval = [&](const Vector6& v) {
    Rational s = 0;
    for (size_t i = 0; i < 6; ++i) s += n[i] * v.coord(i);
    return s;
  };
  Rational value = eval(cell[face.front()]);
  std::vector<bool> in_face(cell.size(), false);
  for (size_t f : face) {
    in_face[f] = true;
    if (eval(cell[f]) != value) return false;
  }
  for (size_t i = 0; i < cell.size(); ++i)
    if (!in_face[i] && eval(cell[i]) >= value) return false;
  if (value_out) *value_out = value;
  return true;
}

}  // namespace detail

/// Exact face test. Candidate normals: the sum of the face vertices, then the
/// 64 cube diagonals; otherwise an exact LP decides.
inline std::optional<SupportingFunctional> supporting_functional(const std::vector<Vector6>& cell,
                                                                 const std::vector<size_t>& face) {
  std::vector<std::array<Rational, 6>> candidates;
  {
    std::array<Rational, 6> sum;
    for (auto& s : sum) s = 0;
    for (size_t f : face)
      for (size_t i = 0; i < 6; ++i) sum[i] += cell[f].coord(i);
    candidates.push_back(sum);
  }
  for (int mask = 0; mask < 64; ++mask) {
    std::array<Rational, 6> d;
    for (size_t i = 0; i < 6; ++i) d[i] = (mask >> i) & 1 ? -1 : 1;
    candidates.push_back(d);
  }
  for (const auto& n : candidates) {
    Rational value;
    if (detail::supports(cell, face, n, &value)) return SupportingFunctional{n, value};
  }

  // n . (v_f - v_0) = 0 on the face, n . (w - v_0) <= -1 elsewhere.
  LinearSystem sys;
  sys.num_vars = 6;
  const Vector6& base = cell[face.front()];
  std::vector<bool> in_face(cell.size(), false);
  for (size_t f : face) in_face[f] = true;
  for (size_t k = 1; k < face.size(); ++k) {
    Vector6 d = cell[face[k]] - base;
    std::vector<Rational> row(6);
    for (size_t i = 0; i < 6; ++i) row[i] = d.coord(i);
    sys.eq_rows.push_back(row);
    sys.eq_rhs.emplace_back(0);
  }
  for (size_t w = 0; w < cell.size(); ++w) {
    if (in_face[w]) continue;
    Vector6 d = cell[w] - base;
    std::vector<Rational> row(6);
    for (size_t i = 0; i < 6; ++i) row[i] = d.coord(i);
    sys.ub_rows.push_back(row);
    sys.ub_rhs.emplace_back(-1);
  }
  auto y = find_feasible_point(sys);
  if (!y) return std::nullopt;
  SupportingFunctional sf;
  for (size_t i = 0; i < 6; ++i) sf.normal[i] = (*y)[i];
  if (!detail::supports(cell, face, sf.normal, &sf.value)) {
    throw FaceTestError("exact LP returned a functional that does not support the face");
  }
  return sf;
}

/// k-simplex faces of a Delone cell (k <= 5 for the cross polytope, k <= 3
/// for hemicubes).
inline std::vector<Facet> enumerate_faces(const DeloneCell& cell, int k) {
  std::vector<Facet> out;
  const auto& v = cell.vertices;
  const size_t need = static_cast<size_t>(k + 1);
  if (cell.kind == CellKind::CrossPolytope) {
    // k+1 distinct axes, independent signs.
    auto index_of = [&](const Vector6& p) {
      return static_cast<size_t>(std::lower_bound(v.begin(), v.end(), p) - v.begin());
    };
    std::vector<int> axes(6);
    std::iota(axes.begin(), axes.end(), 1);
    std::vector<bool> pick(6, false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(need), true);
    do {
      std::vector<int> chosen;
      for (size_t i = 0; i < 6; ++i)
        if (pick[i]) chosen.push_back(axes[i]);
      for (int mask = 0; mask < (1 << need); ++mask) {
        Facet f{k, {}};
        for (size_t j = 0; j < need; ++j) {
          Vector6 b = Vector6::basis(chosen[j]);
          f.vertices.push_back(index_of((mask >> j) & 1 ? -b : b));
        }
        std::sort(f.vertices.begin(), f.vertices.end());
        out.push_back(std::move(f));
      }
    } while (std::prev_permutation(pick.begin(), pick.end()));
    std::sort(out.begin(), out.end(), [](const Facet& a, const Facet& b) { return a.vertices < b.vertices; });
    return out;
  }

  if (k > 3) throw std::invalid_argument("hemicube face enumeration is implemented for k <= 3");
  // Cliques in the squared-distance-2 graph, then the exact face test.
  const size_t n = v.size();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) adj[i][j] = i != j && (v[i] - v[j]).norm2() == 2;

  std::vector<size_t> current;
  auto recurse = [&](auto&& self, size_t start) -> void {
    if (current.size() == need) {
      if (!supporting_functional(v, current)) {
        throw FaceTestError("clique is not a face of the cell: the face test rejected it");
      }
      out.push_back(Facet{k, current});
      return;
    }
    for (size_t i = start; i < n; ++i) {
      bool ok = std::all_of(current.begin(), current.end(), [&](size_t c) { return adj[c][i]; });
      if (!ok) continue;
      current.push_back(i);
      self(self, i + 1);
      current.pop_back();
    }
  };
  recurse(recurse, 0);
  return out;
}

inline std::vector<Facet> enumerate_3facets(const DeloneCell& cell) { return enumerate_faces(cell, 3); }

struct FacetCounts {
  std::array<long, 6> n{};
  /// Per-k coset terms |G| / |Stab| that add up to n[k].
  std::array<std::vector<long>, 6> terms;
  long euler() const { return n[0] - n[1] + n[2] - n[3] + n[4] - n[5]; }
};

class FacetCountMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Stabilizer-order (coset) formula for the face numbers; cross-checked
/// against direct enumeration for k <= 3.
inline FacetCounts facet_counts(const DeloneCell& cell) {
  const long order = static_cast<long>(PointGroup::kOrder);
  FacetCounts fc;
  auto fact = [](long m) {
    long r = 1;
    for (long i = 2; i <= m; ++i) r *= i;
    return r;
  };
  if (cell.kind == CellKind::CrossPolytope) {
    // A k-simplex on k+1 axes: Sym(k+1) on the chosen axes times the D_{5-k}
    // signed permutations of the rest (with the sign parity absorbed).
    for (int k = 0; k < 6; ++k) {
      long rest = 5 - k;
      long stab = fact(k + 1) * fact(rest) * (rest > 0 ? (1L << (rest - 1)) : 1L);
      if (rest == 0) stab = fact(6) / 2;
      fc.terms[static_cast<size_t>(k)] = {order / stab};
    }
  } else {
    // Coset counts per orbit of k-faces of the half-cube.
    const std::array<std::vector<long>, 6> stabs{{
        {fact(6)},
        {fact(4) * 4},
        {fact(3) * fact(3)},
        {fact(4) * fact(3), fact(4) * 2},
        {fact(4) * 16, fact(5)},
        {fact(5) * 16, fact(6)},
    }};
    for (size_t k = 0; k < 6; ++k)
      for (long s : stabs[k]) fc.terms[k].push_back(order / s);
  }
  for (size_t k = 0; k < 6; ++k)
    fc.n[k] = std::accumulate(fc.terms[k].begin(), fc.terms[k].end(), 0L);

  for (int k = 0; k <= 3; ++k) {
    long enumerated = static_cast<long>(enumerate_faces(cell, k).size());
    if (enumerated != fc.n[static_cast<size_t>(k)]) {
      throw FacetCountMismatch("face count formula disagrees with enumeration at k = " + std::to_string(k) +
                               ": formula " + std::to_string(fc.n[static_cast<size_t>(k)]) +
                               ", enumerated " + std::to_string(enumerated));
    }
  }
  return fc;
}

/// Orbit decomposition of a set of faces under the point group; returns the
/// orbit sizes in decreasing order of stabilizer.
inline std::vector<size_t> face_orbit_sizes(const DeloneCell& cell, const std::vector<Facet>& faces) {
  std::set<std::vector<Vector6>> remaining;
  for (const auto& f : faces) {
    std::vector<Vector6> pts;
    for (size_t i : f.vertices) pts.push_back(cell.vertices[i]);
    std::sort(pts.begin(), pts.end());
    remaining.insert(pts);
  }
  std::vector<size_t> sizes;
  while (!remaining.empty()) {
    std::vector<Vector6> rep = *remaining.begin();
    std::set<std::vector<Vector6>> orbit;
    for (const auto& g : PointGroup::instance().elements()) {
      std::vector<Vector6> img;
      for (const auto& p : rep) img.push_back(g.apply(p));
      std::sort(img.begin(), img.end());
      orbit.insert(img);
    }
    for (const auto& o : orbit) remaining.erase(o);
    sizes.push_back(orbit.size());
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

}  // namespace mstiler
