// Named vertices, the icosahedral group, the fundamental and composite tiles,
// and congruence recognition.
#pragma once

#include "mstiler/geometry.hpp"
#include "mstiler/golden.hpp"
#include "mstiler/lattice.hpp"
#include "mstiler/projector.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mstiler {

inline GoldenVec3 half_vec(const GoldenScalar& x, const GoldenScalar& y, const GoldenScalar& z) {
  GoldenScalar h = GoldenScalar::from_ratio(1, 2);
  return {h * x, h * y, h * z};
}

/// Sign patterns of the dodecahedron vertices X_1..X_5, Y_1..Y_5 in the l-basis.
inline const std::array<std::array<int, 6>, 10>& dodecahedron_sign_patterns() {
  static const std::array<std::array<int, 6>, 10> s{{
      {1, 1, 1, 1, -1, -1},    // X1
      {1, 1, 1, 1, 1, 1},      // X2
      {1, 1, 1, -1, 1, -1},    // X3
      {1, -1, 1, 1, 1, -1},    // X4
      {1, 1, -1, 1, 1, -1},    // X5
      {1, 1, 1, -1, -1, 1},    // Y1
      {1, -1, 1, -1, 1, 1},    // Y2
      {1, -1, -1, -1, 1, -1},  // Y3
      {1, -1, -1, 1, -1, -1},  // Y4
      {1, 1, -1, 1, -1, 1},    // Y5
  }};
  return s;
}

class UnknownVertex : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Named points: l1..l6, X1..X5, Y1..Y5 (projected hemicube vertices), a, b, c;
/// a leading '-' negates.
inline GoldenVec3 vertex(const std::string& name) {
  if (name.empty()) throw UnknownVertex("empty vertex name");
  if (name[0] == '-') return -vertex(name.substr(1));
  if (name == "a") return half_vec(-sigma(), 1, 0);
  if (name == "b") return half_vec(-1, 0, -sigma());
  if (name == "c") return half_vec(0, sigma(), -1);
  if (name.size() == 2 && name[1] >= '1') {
    int i = name[1] - '0';
    if (name[0] == 'l' && i <= 6) return projected_basis(i);
    if ((name[0] == 'X' || name[0] == 'Y') && i <= 5) {
      size_t row = static_cast<size_t>(i - 1 + (name[0] == 'Y' ? 5 : 0));
      const auto& sg = dodecahedron_sign_patterns()[row];
      return project_par(Vector6::from_halves(sg));
    }
  }
  throw UnknownVertex("unknown vertex name: " + name);
}

inline Tet tet_of(const std::array<std::string, 4>& names) {
  return {vertex(names[0]), vertex(names[1]), vertex(names[2]), vertex(names[3])};
}

/// The 20 dodecahedron vertices +-X_i, +-Y_i.
inline std::vector<GoldenVec3> dodecahedron_vertices() {
  std::vector<GoldenVec3> out;
  for (const char* p : {"X", "Y"})
    for (int i = 1; i <= 5; ++i) {
      std::string n = std::string(p) + std::to_string(i);
      out.push_back(vertex(n));
      out.push_back(vertex("-" + n));
    }
  return out;
}

/// The 12 icosahedron vertices +-l_i.
inline std::vector<GoldenVec3> icosahedron_vertices() {
  std::vector<GoldenVec3> out;
  for (int i = 1; i <= 6; ++i) {
    out.push_back(projected_basis(i));
    out.push_back(projected_basis(-i));
  }
  return out;
}

/// The 12 points 1/2(+-1, 0, +-sigma), 1/2(0, +-sigma, +-1), 1/2(+-sigma, +-1, 0):
/// an icosahedron of edge 1/tau containing a, b, c.
inline std::vector<GoldenVec3> small_icosahedron_points() {
  std::vector<GoldenVec3> out;
  for (int s1 : {1, -1})
    for (int s2 : {1, -1}) {
      out.push_back(half_vec(s1, 0, sigma() * s2));
      out.push_back(half_vec(0, sigma() * s1, s2));
      out.push_back(half_vec(sigma() * s1, s2, 0));
    }
  return out;
}

/// The 30 icosidodecahedron vertices of edge 1: tau times the unit vectors and
/// the cyclic permutations of tau/2 (+-sigma, +-tau, +-1). These are twice the
/// icosahedron edge midpoints.
inline std::vector<GoldenVec3> icosidodecahedron_vertices() {
  std::vector<GoldenVec3> out;
  const GoldenScalar t = tau();
  for (int s : {1, -1}) {
    out.push_back({t * s, 0, 0});
    out.push_back({0, t * s, 0});
    out.push_back({0, 0, t * s});
  }
  for (int s1 : {1, -1})
    for (int s2 : {1, -1})
      for (int s3 : {1, -1}) {
        GoldenScalar p = sigma() * s1, q = t * s2, r = GoldenScalar(s3);
        for (GoldenVec3 v : {half_vec(p, q, r), half_vec(q, r, p), half_vec(r, p, q)}) out.push_back(t * v);
      }
  return out;
}

// ---------------------------------------------------------------------------

class GroupClosureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Orthogonal matrix sending l_i to sign[i] * l_{image[i]}. Images are 1-based
/// and may themselves be negative.
inline GoldenMat3 matrix_from_signed_permutation(const std::array<int, 6>& image, const std::array<int, 6>& sign) {
  std::array<GoldenVec3, 6> src, dst;
  for (size_t i = 0; i < 6; ++i) {
    src[i] = projected_basis(static_cast<int>(i) + 1);
    dst[i] = projected_basis(image[i]) * GoldenScalar(sign[i]);
  }
  GoldenMat3 s = GoldenMat3::from_columns(src[0], src[1], src[2]);
  GoldenMat3 d = GoldenMat3::from_columns(dst[0], dst[1], dst[2]);
  GoldenMat3 m = d * s.inverse();
  for (size_t i = 0; i < 6; ++i)
    if (!(m * src[i] == dst[i])) throw GroupClosureError("signed permutation is not induced by a linear map");
  if (!m.is_orthogonal()) throw GroupClosureError("signed permutation is not induced by an isometry");
  return m;
}

/// The full icosahedral group (order 120), generated by the 5-fold rotation
/// (1)(23564), the 3-fold rotation (123)(465) and the central inversion.
class IcosaGroup {
 public:
  static const IcosaGroup& instance() {
    static const IcosaGroup g;
    return g;
  }

  const std::vector<GoldenMat3>& elements() const { return elements_; }
  size_t order() const { return elements_.size(); }
  const GoldenMat3& five_fold() const { return g5_; }
  const GoldenMat3& three_fold() const { return g3_; }
  size_t rotation_count() const {
    return static_cast<size_t>(std::count_if(elements_.begin(), elements_.end(),
                                             [](const GoldenMat3& m) { return m.determinant() == GoldenScalar(1); }));
  }
  std::optional<size_t> index_of(const GoldenMat3& m) const {
    for (size_t i = 0; i < elements_.size(); ++i)
      if (elements_[i] == m) return i;
    return std::nullopt;
  }

  /// Closed under products and every element permutes {+-l_i}.
  bool verify() const {
    auto ico = icosahedron_vertices();
    for (const auto& a : elements_) {
      for (const auto& v : ico)
        if (std::find(ico.begin(), ico.end(), a * v) == ico.end()) return false;
      for (const auto& b : {g5_, g3_})
        if (!index_of(a * b)) return false;
    }
    return true;
  }

 private:
  IcosaGroup() {
    // Signs make the cycle (2 3 5 6 4) a rotation: l5 -> -l6, l6 -> -l4.
    g5_ = matrix_from_signed_permutation({1, 3, 5, 2, -6, -4}, {1, 1, 1, 1, 1, 1});
    g3_ = matrix_from_signed_permutation({2, 3, 1, 6, 4, 5}, {1, 1, 1, 1, 1, 1});
    std::vector<GoldenMat3> rot{GoldenMat3::identity()};
    std::vector<GoldenMat3> frontier = rot;
    while (!frontier.empty()) {
      std::vector<GoldenMat3> next;
      for (const auto& m : frontier)
        for (const auto& g : {g5_, g3_}) {
          GoldenMat3 h = g * m;
          if (std::find(rot.begin(), rot.end(), h) == rot.end()) {
            rot.push_back(h);
            next.push_back(h);
          }
        }
      frontier = std::move(next);
      if (rot.size() > 60) throw GroupClosureError("rotation closure exceeded 60 elements");
    }
    if (rot.size() != 60) throw GroupClosureError("rotation closure did not reach 60 elements");
    elements_ = rot;
    for (const auto& m : rot) elements_.push_back(GoldenScalar(-1) * m);
  }

  GoldenMat3 g5_, g3_;
  std::vector<GoldenMat3> elements_;
};

// ---------------------------------------------------------------------------

/// Canonical fundamental tiles, drawn from the listed icosahedron and
/// dodecahedron dissections.
inline Tet canonical_tile(TileClass label) {
  switch (label) {
    case TileClass::t1: return tet_of({"l1", "l4", "-l6", "-l3"});
    case TileClass::t2: return tet_of({"l1", "-l6", "-l2", "-l3"});
    case TileClass::t3: return tet_of({"-Y2", "-Y1", "Y4", "X5"});
    case TileClass::t4: return tet_of({"X5", "X1", "a", "-Y2"});
    case TileClass::t5: return tet_of({"l1", "l6", "-l3", "-l5"});
    case TileClass::t6: return tet_of({"l1", "l6", "-l2", "-l3"});
    default: throw std::invalid_argument("canonical_tile: not a fundamental tile");
  }
}

struct Congruence {
  TileClass label = TileClass::DegenerateOther;
  int handedness = 0;               // det of the linear part
  GoldenMat3 linear;                // x -> linear * x + translation maps the canonical tile onto the input
  GoldenVec3 translation;
  std::array<size_t, 4> vertex_map{};  // canonical vertex k -> input vertex vertex_map[k]
  std::optional<size_t> group_index;   // position of `linear` in the icosahedral group
};

/// Finds the canonical tile congruent to t and the isometry realising it.
/// Vertex correspondences are tried in lexicographic order, identity first.
inline std::optional<Congruence> congruence_class(const Tet& t) {
  GoldenScalar vol = tet_volume(t);
  if (vol.is_zero()) return std::nullopt;
  for (TileClass label : fundamental_labels()) {
    if (!(fundamental_volume(label) == vol)) continue;
    Tet c = canonical_tile(label);
    GoldenMat3 cinv = GoldenMat3::from_columns(c[1] - c[0], c[2] - c[0], c[3] - c[0]).inverse();
    std::array<size_t, 4> perm{0, 1, 2, 3};
    do {
      bool lengths = true;
      for (size_t i = 0; i < 4 && lengths; ++i)
        for (size_t j = i + 1; j < 4 && lengths; ++j)
          lengths = distance2(c[i], c[j]) == distance2(t[perm[i]], t[perm[j]]);
      if (!lengths) continue;
      GoldenMat3 p = GoldenMat3::from_columns(t[perm[1]] - t[perm[0]], t[perm[2]] - t[perm[0]], t[perm[3]] - t[perm[0]]);
      GoldenMat3 l = p * cinv;
      if (!l.is_orthogonal()) continue;
      Congruence cg;
      cg.label = label;
      cg.linear = l;
      cg.translation = t[perm[0]] - l * c[0];
      cg.handedness = l.determinant().sign();
      cg.vertex_map = perm;
      cg.group_index = IcosaGroup::instance().index_of(l);
      return cg;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return std::nullopt;
}

inline Tet apply(const GoldenMat3& m, const GoldenVec3& shift, const Tet& t) {
  return {m * t[0] + shift, m * t[1] + shift, m * t[2] + shift, m * t[3] + shift};
}

// ---------------------------------------------------------------------------

enum class AxisClass { FiveFold, ThreeFold, Unclassified };

inline std::string to_string(AxisClass a) {
  switch (a) {
    case AxisClass::FiveFold: return "5-fold";
    case AxisClass::ThreeFold: return "3-fold";
    case AxisClass::Unclassified: return "unclassified";
  }
  return "?";
}

inline AxisClass axis_class(const GoldenVec3& normal) {
  for (int i = 1; i <= 6; ++i)
    if (cross(normal, projected_basis(i)).is_zero()) return AxisClass::FiveFold;
  for (const auto& v : dodecahedron_vertices())
    if (cross(normal, v).is_zero()) return AxisClass::ThreeFold;
  return AxisClass::Unclassified;
}

/// 5-fold axis index (1..6) parallel to the normal, 0 if none.
inline int five_fold_axis(const GoldenVec3& normal) {
  for (int i = 1; i <= 6; ++i)
    if (cross(normal, projected_basis(i)).is_zero()) return i;
  return 0;
}

// ---------------------------------------------------------------------------

enum class CompositeLabel { E, C, T1, T2, T3, T4, T3bar, T1hat };

inline const std::array<CompositeLabel, 8>& composite_labels() {
  static const std::array<CompositeLabel, 8> a{CompositeLabel::E,  CompositeLabel::C,  CompositeLabel::T1,
                                               CompositeLabel::T2, CompositeLabel::T3, CompositeLabel::T4,
                                               CompositeLabel::T3bar, CompositeLabel::T1hat};
  return a;
}

inline std::string to_string(CompositeLabel c) {
  switch (c) {
    case CompositeLabel::E: return "E";
    case CompositeLabel::C: return "C";
    case CompositeLabel::T1: return "T1";
    case CompositeLabel::T2: return "T2";
    case CompositeLabel::T3: return "T3";
    case CompositeLabel::T4: return "T4";
    case CompositeLabel::T3bar: return "T3bar";
    case CompositeLabel::T1hat: return "T1hat";
  }
  return "?";
}

inline CompositeLabel parse_composite_label(const std::string& s) {
  for (auto c : composite_labels())
    if (to_string(c) == s) return c;
  throw std::invalid_argument("unknown composite tile: " + s);
}

struct PlacedTet {
  TileClass label = TileClass::DegenerateOther;
  Tet vertices;
  int handedness = 0;
};

struct CompositeTile {
  CompositeLabel label;
  std::vector<PlacedTet> parts;
  BoundaryComplex boundary;
  GoldenScalar volume;

  std::vector<Tet> tets() const {
    std::vector<Tet> out;
    for (const auto& p : parts) out.push_back(p.vertices);
    return out;
  }
};

class AssemblyMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline PlacedTet placed(TileClass label, const Tet& t) {
  auto cg = congruence_class(t);
  if (!cg || cg->label != label) {
    throw AssemblyMismatch("tetrahedron is not congruent to " + to_string(label));
  }
  return {label, t, cg->handedness};
}

inline bool shares_triangle(const Tet& a, const Tet& b) {
  int common = 0;
  for (const auto& p : a)
    if (std::find(b.begin(), b.end(), p) != b.end()) ++common;
  return common == 3;
}

// T3 with its last t5 turned about the glued equilateral face so that the
// composite shows two trapezoids.
inline std::vector<PlacedTet> t3bar_parts(const std::vector<PlacedTet>& t3) {
  const Tet& mid = t3[1].vertices;
  const Tet& last = t3[2].vertices;
  std::vector<GoldenVec3> face;
  GoldenVec3 apex;
  for (const auto& p : last) {
    if (std::find(mid.begin(), mid.end(), p) != mid.end()) face.push_back(p);
    else apex = p;
  }
  GoldenVec3 fc = centroid(face);
  for (const auto& g : IcosaGroup::instance().elements()) {
    if (g == GoldenMat3::identity()) continue;
    bool keeps_face = std::all_of(face.begin(), face.end(), [&](const GoldenVec3& p) {
      return std::find(face.begin(), face.end(), g * (p - fc) + fc) != face.end();
    });
    if (!keeps_face) continue;
    GoldenVec3 q = g * (apex - fc) + fc;
    if (q == apex) continue;
    // Same side of the face as the original apex.
    if (orient_sign(face[0], face[1], face[2], q) != orient_sign(face[0], face[1], face[2], apex)) continue;
    Tet moved{face[0], face[1], face[2], q};
    std::vector<Tet> tets{t3[0].vertices, mid, moved};
    BoundaryComplex bc;
    try {
      bc = boundary_of(tets);
    } catch (const BoundaryError&) {
      continue;
    }
    auto census = face_census(bc);
    if (census == std::map<std::string, int>{{to_string(FaceShape::Robinson1TT), 4},
                                             {to_string(FaceShape::Trapezoid111T), 2}}) {
      return {t3[0], t3[1], placed(TileClass::t5, moved)};
    }
  }
  throw AssemblyMismatch("no re-glued t5 gives the two-trapezoid composite");
}

}  // namespace detail

/// The fundamental-tile recipe of each composite, placed at the coordinates of
/// the listed dissections.
inline CompositeTile assemble(CompositeLabel label) {
  using detail::placed;
  std::vector<PlacedTet> e{placed(TileClass::t4, tet_of({"X5", "X1", "a", "-Y2"})),
                           placed(TileClass::t1, tet_of({"X5", "X1", "a", "X4"})),
                           placed(TileClass::t4, tet_of({"X5", "X4", "a", "-Y1"}))};
  std::vector<PlacedTet> c{placed(TileClass::t3, tet_of({"-Y2", "-Y1", "Y4", "X5"})),
                           placed(TileClass::t6, tet_of({"-Y2", "-Y1", "X5", "a"})),
                           placed(TileClass::t3, tet_of({"-Y2", "-Y1", "a", "c"}))};
  std::vector<PlacedTet> t4{placed(TileClass::t3, tet_of({"Y3", "X4", "-Y1", "-Y5"})),
                            placed(TileClass::t6, tet_of({"a", "X4", "-Y1", "-Y5"})),
                            placed(TileClass::t5, tet_of({"c", "a", "-Y1", "-Y5"}))};
  std::vector<PlacedTet> t3{placed(TileClass::t5, tet_of({"l1", "l6", "-l3", "-l5"})),
                            placed(TileClass::t6, tet_of({"l1", "l6", "-l2", "-l3"})),
                            placed(TileClass::t5, tet_of({"l1", "l6", "-l2", "-l4"}))};

  CompositeTile ct{label, {}, {}, 0};
  switch (label) {
    case CompositeLabel::E: ct.parts = e; break;
    case CompositeLabel::C: ct.parts = c; break;
    case CompositeLabel::T1:
      ct.parts = e;
      ct.parts.insert(ct.parts.end(), c.begin(), c.end());
      break;
    case CompositeLabel::T2:
      ct.parts = {placed(TileClass::t2, tet_of({"X1", "X3", "X4", "a"})),
                  placed(TileClass::t4, tet_of({"X3", "X4", "a", "-Y5"}))};
      break;
    case CompositeLabel::T3: ct.parts = t3; break;
    case CompositeLabel::T4: ct.parts = t4; break;
    case CompositeLabel::T3bar: ct.parts = detail::t3bar_parts(t3); break;
    case CompositeLabel::T1hat:
      ct.parts = e;
      ct.parts.insert(ct.parts.end(), c.begin(), c.end());
      ct.parts.insert(ct.parts.end(), t4.begin(), t4.end());
      break;
  }
  // The parts must form one piece under face-to-face gluing.
  std::vector<bool> reached(ct.parts.size(), false);
  std::vector<size_t> stack{0};
  reached[0] = true;
  while (!stack.empty()) {
    size_t i = stack.back();
    stack.pop_back();
    for (size_t j = 0; j < ct.parts.size(); ++j)
      if (!reached[j] && detail::shares_triangle(ct.parts[i].vertices, ct.parts[j].vertices)) {
        reached[j] = true;
        stack.push_back(j);
      }
  }
  for (size_t i = 0; i < reached.size(); ++i)
    if (!reached[i]) throw AssemblyMismatch(to_string(label) + ": part " + std::to_string(i) + " is not glued face to face");
  for (const auto& p : ct.parts) ct.volume += tet_volume(p.vertices);
  ct.boundary = boundary_of(ct.tets());
  return ct;
}

/// Fundamental content of a composite as label counts.
inline std::map<TileClass, int> composite_recipe(CompositeLabel label) {
  std::map<TileClass, int> m;
  for (const auto& p : assemble(label).parts) ++m[p.label];
  return m;
}

struct CompositeSpec {
  bool tabulated = true;  // false: only the volume is known in advance
  size_t n0, n1, n2;
  std::map<std::string, int> faces;
  GoldenScalar volume;
};

/// Reference data for the composite tiles.
inline CompositeSpec composite_reference(CompositeLabel label) {
  const GoldenScalar t = tau();
  const GoldenScalar twelfth = GoldenScalar::from_ratio(1, 12);
  const std::string r1 = to_string(FaceShape::Robinson11T), r2 = to_string(FaceShape::Robinson1TT);
  const std::string big = to_string(FaceShape::RobinsonTTT2), trap = to_string(FaceShape::Trapezoid111T);
  const std::string pent = to_string(FaceShape::Pentagon1);
  switch (label) {
    case CompositeLabel::T1: return {true, 8, 14, 8, {{r1, 4}, {trap, 4}}, GoldenScalar(2) * pow(t, 4) * twelfth};
    case CompositeLabel::T2: return {true, 4, 6, 4, {{r2, 2}, {big, 2}}, pow(t, 3) * twelfth};
    case CompositeLabel::T3: return {true, 6, 10, 6, {{r2, 5}, {pent, 1}}, (GoldenScalar(4) * t + 3) * twelfth};
    case CompositeLabel::T4: return {true, 6, 11, 7, {{r1, 3}, {r2, 3}, {trap, 1}}, GoldenScalar(2) * pow(t, 3) * twelfth};
    case CompositeLabel::E: return {true, 6, 12, 8, {{r2, 6}, {r1, 2}}, (GoldenScalar(2) * t * t + 1) * twelfth};
    case CompositeLabel::C: return {true, 6, 12, 8, {{r1, 6}, {r2, 2}}, (GoldenScalar(4) * t + 1) * twelfth};
    case CompositeLabel::T3bar: return {true, 6, 10, 6, {{r2, 4}, {trap, 2}}, (GoldenScalar(4) * t + 3) * twelfth};
    case CompositeLabel::T1hat: return {false, 0, 0, 0, {}, (GoldenScalar(10) * t + 6) * twelfth};
  }
  throw std::invalid_argument("unknown composite");
}

// ---------------------------------------------------------------------------

struct FaceAxisEntry {
  std::string shape;
  AxisClass axis;
};

struct FaceAxisReport {
  std::vector<FaceAxisEntry> faces;
  size_t exceptions = 0;  // equilateral faces off 3-fold axes, other faces off 5-fold axes
};

inline FaceAxisReport face_axis_check(const std::vector<PolygonFace>& faces) {
  FaceAxisReport r;
  for (const auto& f : faces) {
    AxisClass a = axis_class(f.normal);
    bool equilateral = f.shape == FaceShape::Equilateral1 || f.shape == FaceShape::EquilateralTau;
    AxisClass want = equilateral ? AxisClass::ThreeFold : AxisClass::FiveFold;
    if (a != want) ++r.exceptions;
    r.faces.push_back({to_string(f.shape), a});
  }
  return r;
}

inline std::vector<PolygonFace> tet_faces(const Tet& t) {
  std::vector<PolygonFace> out;
  static constexpr std::array<std::array<size_t, 4>, 4> kF{{{1, 2, 3, 0}, {0, 2, 3, 1}, {0, 1, 3, 2}, {0, 1, 2, 3}}};
  for (const auto& f : kF) {
    PolygonFace pf;
    pf.corners = {t[f[0]], t[f[1]], t[f[2]]};
    pf.normal = cross(t[f[1]] - t[f[0]], t[f[2]] - t[f[0]]);
    if (dot(pf.normal, t[f[3]] - t[f[0]]).sign() > 0) pf.normal = -pf.normal;
    pf.shape = classify_polygon(pf.corners);
    out.push_back(std::move(pf));
  }
  return out;
}

struct DihedralReport {
  size_t adjacent_pairs = 0;
  size_t tan2_law = 0;  // pairs with cos^2 = 1/5
};

/// Dihedral angles between faces sharing a side: the tan^-1(2) law says the
/// squared cosine between outward normals is exactly 1/5.
inline DihedralReport dihedral_check(const BoundaryComplex& bc) {
  DihedralReport r;
  auto sides = [](const PolygonFace& f) {
    std::vector<std::pair<GoldenVec3, GoldenVec3>> s;
    for (size_t i = 0; i < f.corners.size(); ++i) s.emplace_back(f.corners[i], f.corners[(i + 1) % f.corners.size()]);
    return s;
  };
  for (size_t i = 0; i < bc.faces.size(); ++i) {
    for (size_t j = i + 1; j < bc.faces.size(); ++j) {
      bool adjacent = false;
      for (const auto& [a, b] : sides(bc.faces[i]))
        for (const auto& [c, d] : sides(bc.faces[j]))
          if ((a == d && b == c) || (a == c && b == d)) adjacent = true;
      if (!adjacent) continue;
      ++r.adjacent_pairs;
      const auto& n1 = bc.faces[i].normal;
      const auto& n2 = bc.faces[j].normal;
      GoldenScalar d = dot(n1, n2);
      if (d * d * 5 == norm2(n1) * norm2(n2)) ++r.tan2_law;
    }
  }
  return r;
}

}  // namespace mstiler
