// Coordinate dissections of the icosahedron, dodecahedra and icosidodecahedron,
// and their exact verification.
#pragma once

#include "mstiler/catalog.hpp"
#include "mstiler/inflation.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace mstiler {

/// A group of tets forming one tile of the stated kind ("T1", "T2", "t4", ...).
struct Block {
  std::string label;
  std::vector<size_t> members;
  int cluster = -1;
};

struct Assembly {
  std::string name;
  std::vector<PlacedTet> tets;
  std::vector<GoldenVec3> hull_points;
  GoldenScalar expected_volume;
  std::vector<Block> blocks;
  std::vector<std::string> cluster_labels;

  std::vector<Tet> tet_list() const {
    std::vector<Tet> out;
    for (const auto& t : tets) out.push_back(t.vertices);
    return out;
  }
  std::vector<Tet> block_tets(size_t b) const {
    std::vector<Tet> out;
    for (size_t i : blocks[b].members) out.push_back(tets[i].vertices);
    return out;
  }

  /// Count of tets of each fundamental label.
  TileCountVector fundamental_content() const {
    std::vector<Integer> c(6, 0);
    for (const auto& t : tets) c.at(static_cast<size_t>(t.label)) += 1;
    return {Basis::Fundamental, c};
  }
  /// Blocks labelled T1..T4, in the T basis.
  TileCountVector composite_content() const {
    std::vector<Integer> c(4, 0);
    for (const auto& b : blocks)
      for (size_t i = 0; i < 4; ++i)
        if (b.label == "T" + std::to_string(i + 1)) c[i] += 1;
    return {Basis::T, c};
  }
  std::map<std::string, int> block_census() const {
    std::map<std::string, int> m;
    for (const auto& b : blocks) ++m[b.label];
    return m;
  }
};

class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Composite congruence

struct Isometry {
  GoldenMat3 linear;
  GoldenVec3 translation;
  GoldenVec3 operator()(const GoldenVec3& p) const { return linear * p + translation; }
};

namespace detail {

inline std::vector<GoldenVec3> distinct_points(const std::vector<Tet>& tets) {
  std::vector<GoldenVec3> pts;
  for (const auto& t : tets)
    for (const auto& p : t)
      if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
  return pts;
}

inline const CompositeTile& composite(CompositeLabel l) {
  static const std::map<CompositeLabel, CompositeTile> cache = [] {
    std::map<CompositeLabel, CompositeTile> m;
    for (auto c : composite_labels()) m.emplace(c, assemble(c));
    return m;
  }();
  return cache.at(l);
}

}  // namespace detail

/// An isometry carrying the catalog composite onto the given tets (as point
/// sets), provided the fundamental labels also agree.
inline std::optional<Isometry> composite_congruence(const std::vector<PlacedTet>& parts, CompositeLabel label) {
  const CompositeTile& ref = detail::composite(label);
  if (parts.size() != ref.parts.size()) return std::nullopt;
  std::map<TileClass, int> want, have;
  for (const auto& p : ref.parts) ++want[p.label];
  GoldenScalar vol;
  std::vector<Tet> tets;
  for (const auto& p : parts) {
    ++have[p.label];
    vol += tet_volume(p.vertices);
    tets.push_back(p.vertices);
  }
  if (want != have || !(vol == ref.volume)) return std::nullopt;
  auto src = detail::distinct_points(ref.tets());
  auto dst = detail::distinct_points(tets);
  if (src.size() != dst.size()) return std::nullopt;
  // Four affinely independent reference points.
  std::array<size_t, 4> base{0, 0, 0, 0};
  bool found = false;
  for (size_t i = 1; i < src.size() && !found; ++i)
    for (size_t j = i + 1; j < src.size() && !found; ++j)
      for (size_t k = j + 1; k < src.size() && !found; ++k)
        if (orient_sign(src[0], src[i], src[j], src[k]) != 0) {
          base = {0, i, j, k};
          found = true;
        }
  if (!found) return std::nullopt;
  GoldenMat3 cinv = GoldenMat3::from_columns(src[base[1]] - src[0], src[base[2]] - src[0], src[base[3]] - src[0]).inverse();
  std::array<GoldenScalar, 6> d;
  {
    size_t e = 0;
    for (size_t i = 0; i < 4; ++i)
      for (size_t j = i + 1; j < 4; ++j) d[e++] = distance2(src[base[i]], src[base[j]]);
  }
  const size_t n = dst.size();
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b) {
      if (b == a || !(distance2(dst[a], dst[b]) == d[0])) continue;
      for (size_t c = 0; c < n; ++c) {
        if (c == a || c == b || !(distance2(dst[a], dst[c]) == d[1]) || !(distance2(dst[b], dst[c]) == d[3])) continue;
        for (size_t e = 0; e < n; ++e) {
          if (e == a || e == b || e == c) continue;
          if (!(distance2(dst[a], dst[e]) == d[2]) || !(distance2(dst[b], dst[e]) == d[4]) ||
              !(distance2(dst[c], dst[e]) == d[5]))
            continue;
          GoldenMat3 p = GoldenMat3::from_columns(dst[b] - dst[a], dst[c] - dst[a], dst[e] - dst[a]);
          Isometry iso{p * cinv, {}};
          if (!iso.linear.is_orthogonal()) continue;
          iso.translation = dst[a] - iso.linear * src[0];
          bool onto = std::all_of(src.begin(), src.end(), [&](const GoldenVec3& s) {
            return std::find(dst.begin(), dst.end(), iso(s)) != dst.end();
          });
          if (onto) return iso;
        }
      }
    }
  return std::nullopt;
}

inline std::optional<CompositeLabel> composite_label_of(const std::string& s) {
  for (auto c : composite_labels())
    if (to_string(c) == s) return c;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Verification

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  std::string assembly;
  std::vector<CheckResult> checks;
  std::map<std::string, int> hull_face_census;      // shapes of the hull faces
  std::map<std::string, int> exposed_face_census;   // shapes of the tet faces lying on the hull
  size_t hull_vertices = 0, hull_edges = 0, hull_faces = 0;
  GoldenScalar volume;

  bool ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
  }
  std::string first_failure() const {
    for (const auto& c : checks)
      if (!c.pass) return c.name + ": " + c.detail;
    return "";
  }
};

namespace detail {

inline std::string point_string(const GoldenVec3& p) {
  return "(" + to_decimal(p.x, 6) + ", " + to_decimal(p.y, 6) + ", " + to_decimal(p.z, 6) + ")";
}

// Tet faces oriented outward: (a, b, c) with (b - a) x (c - a) pointing away from the fourth vertex.
inline std::array<std::array<GoldenVec3, 3>, 4> outward_faces(const Tet& t) {
  std::array<std::array<GoldenVec3, 3>, 4> out;
  static constexpr std::array<std::array<size_t, 4>, 4> kF{{{1, 2, 3, 0}, {0, 2, 3, 1}, {0, 1, 3, 2}, {0, 1, 2, 3}}};
  for (size_t i = 0; i < 4; ++i) {
    const auto& f = kF[i];
    if (orient_sign(t[f[0]], t[f[1]], t[f[2]], t[f[3]]) > 0) out[i] = {t[f[0]], t[f[2]], t[f[1]]};
    else out[i] = {t[f[0]], t[f[1]], t[f[2]]};
  }
  return out;
}

}  // namespace detail

/// Congruence of every tet and block, pairwise interior-disjointness, volume
/// sum against the hull, containment, and per-plane area bookkeeping: hull
/// planes are covered exactly from inside, every other plane carries equal
/// face area on both sides.
inline VerifyReport verify_assembly(const Assembly& a) {
  VerifyReport r;
  r.assembly = a.name;

  {
    CheckResult c{"congruence", true, ""};
    for (size_t i = 0; i < a.tets.size() && c.pass; ++i) {
      auto cg = congruence_class(a.tets[i].vertices);
      if (!cg || cg->label != a.tets[i].label) {
        c.pass = false;
        c.detail = "tet " + std::to_string(i) + " is not congruent to " + to_string(a.tets[i].label);
      }
    }
    for (size_t b = 0; b < a.blocks.size() && c.pass; ++b) {
      auto label = composite_label_of(a.blocks[b].label);
      if (!label) continue;
      std::vector<PlacedTet> parts;
      for (size_t i : a.blocks[b].members) parts.push_back(a.tets[i]);
      if (!composite_congruence(parts, *label)) {
        c.pass = false;
        c.detail = "block " + std::to_string(b) + " is not congruent to " + a.blocks[b].label;
      }
    }
    r.checks.push_back(c);
  }

  {
    CheckResult c{"disjointness", true, ""};
    for (size_t i = 0; i < a.tets.size() && c.pass; ++i)
      for (size_t j = i + 1; j < a.tets.size() && c.pass; ++j)
        if (interiors_overlap(a.tets[i].vertices, a.tets[j].vertices)) {
          c.pass = false;
          c.detail = "tets " + std::to_string(i) + " and " + std::to_string(j) + " overlap";
        }
    r.checks.push_back(c);
  }

  Hull hull = convex_hull(a.hull_points);
  r.hull_vertices = hull.vertices.size();
  r.hull_edges = hull.edge_count;
  r.hull_faces = hull.faces.size();
  for (const auto& f : hull.faces) {
    std::vector<GoldenVec3> corners;
    for (size_t k : f.corners) corners.push_back(hull.points[k]);
    ++r.hull_face_census[to_string(classify_polygon(corners))];
  }

  {
    for (const auto& t : a.tets) r.volume += tet_volume(t.vertices);
    CheckResult c{"volume", r.volume == hull.volume && r.volume == a.expected_volume, ""};
    if (!c.pass)
      c.detail = "tets " + to_decimal(r.volume, 8) + ", hull " + to_decimal(hull.volume, 8) + ", expected " +
                 to_decimal(a.expected_volume, 8);
    r.checks.push_back(c);
  }

  {
    CheckResult c{"containment", true, ""};
    for (size_t i = 0; i < a.tets.size() && c.pass; ++i)
      for (const auto& p : a.tets[i].vertices)
        if (!hull.contains(p)) {
          c.pass = false;
          c.detail = "tet " + std::to_string(i) + " vertex " + detail::point_string(p) + " lies outside the hull";
          break;
        }
    r.checks.push_back(c);
  }

  {
    CheckResult c{"boundary coverage", true, ""};
    struct Side {
      GoldenScalar plus, minus;
    };
    std::map<PlaneKey, Side> planes;
    for (const auto& t : a.tets)
      for (const auto& f : detail::outward_faces(t.vertices)) {
        PlaneKey key = plane_key(f[0], f[1], f[2]);
        GoldenScalar w = dot(cross(f[1] - f[0], f[2] - f[0]), key.normal);
        Side& s = planes[key];
        if (w.sign() > 0) s.plus += w;
        else s.minus -= w;
      }
    std::set<PlaneKey> hull_planes;
    for (const auto& f : hull.faces) {
      const auto& p = hull.points;
      PlaneKey key = plane_key(p[f.corners[0]], p[f.corners[1]], p[f.corners[2]]);
      hull_planes.insert(key);
      GoldenVec3 fan{0, 0, 0};
      for (size_t k = 1; k + 1 < f.corners.size(); ++k)
        fan += cross(p[f.corners[k]] - p[f.corners[0]], p[f.corners[k + 1]] - p[f.corners[0]]);
      GoldenScalar area = dot(fan, key.normal);  // signed like an outward tet face on this plane
      Side s = planes.count(key) ? planes[key] : Side{};
      bool ok = area.sign() > 0 ? (s.plus == area && s.minus.is_zero()) : (s.minus == -area && s.plus.is_zero());
      if (!ok && c.pass) {
        c.pass = false;
        c.detail = "hull face with corner " + detail::point_string(p[f.corners[0]]) + " is not covered exactly";
      }
    }
    for (const auto& [key, s] : planes) {
      if (hull_planes.count(key)) continue;
      if (!(s.plus == s.minus) && c.pass) {
        c.pass = false;
        c.detail = "internal plane with unmatched face area (normal " + detail::point_string(key.normal) + ")";
      }
    }
    for (const auto& t : a.tets)
      for (const auto& f : detail::outward_faces(t.vertices))
        if (hull.face_containing({f[0], f[1], f[2]})) ++r.exposed_face_census[to_string(classify_polygon({f[0], f[1], f[2]}))];
    r.checks.push_back(c);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Symmetry

struct SymmetryReport {
  bool tets_invariant = false;                     // g maps the tet set onto itself
  std::vector<std::optional<size_t>> block_image;  // block b -> block with the same tets after g
  std::vector<std::optional<size_t>> block_union_image;  // same union polyhedron (tets may differ)
  std::vector<std::optional<size_t>> cluster_image;
};

namespace detail {

inline std::vector<GoldenVec3> sorted_points(std::vector<GoldenVec3> v) {
  std::sort(v.begin(), v.end(), StructuralLess{});
  return v;
}

inline std::vector<std::vector<GoldenVec3>> tet_keys(const std::vector<Tet>& tets) {
  std::vector<std::vector<GoldenVec3>> keys;
  for (const auto& t : tets) keys.push_back(sorted_points({t.begin(), t.end()}));
  std::sort(keys.begin(), keys.end(), [](const auto& x, const auto& y) {
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(), StructuralLess{});
  });
  return keys;
}

// Boundary faces as sorted corner sets.
inline std::optional<std::vector<std::vector<GoldenVec3>>> union_key(const std::vector<Tet>& tets) {
  try {
    BoundaryComplex bc = boundary_of(tets);
    std::vector<std::vector<GoldenVec3>> faces;
    for (const auto& f : bc.faces) faces.push_back(sorted_points(f.corners));
    std::sort(faces.begin(), faces.end(), [](const auto& x, const auto& y) {
      return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(), StructuralLess{});
    });
    return faces;
  } catch (const BoundaryError&) {
    return std::nullopt;
  }
}

inline Tet transformed(const GoldenMat3& g, const Tet& t) { return {g * t[0], g * t[1], g * t[2], g * t[3]}; }

}  // namespace detail

inline SymmetryReport symmetry_check(const Assembly& a, const GoldenMat3& g) {
  SymmetryReport r;
  auto all = a.tet_list();
  std::vector<Tet> moved;
  for (const auto& t : all) moved.push_back(detail::transformed(g, t));
  r.tets_invariant = detail::tet_keys(all) == detail::tet_keys(moved);

  const size_t nb = a.blocks.size();
  std::vector<std::vector<std::vector<GoldenVec3>>> keys(nb);
  std::vector<std::optional<std::vector<std::vector<GoldenVec3>>>> ukeys(nb);
  for (size_t b = 0; b < nb; ++b) {
    keys[b] = detail::tet_keys(a.block_tets(b));
    ukeys[b] = detail::union_key(a.block_tets(b));
  }
  r.block_image.assign(nb, std::nullopt);
  r.block_union_image.assign(nb, std::nullopt);
  for (size_t b = 0; b < nb; ++b) {
    std::vector<Tet> img;
    for (const auto& t : a.block_tets(b)) img.push_back(detail::transformed(g, t));
    auto k = detail::tet_keys(img);
    auto u = detail::union_key(img);
    for (size_t c = 0; c < nb; ++c) {
      if (a.blocks[c].label != a.blocks[b].label) continue;
      if (!r.block_image[b] && keys[c] == k) r.block_image[b] = c;
      if (!r.block_union_image[b] && u && ukeys[c] && *ukeys[c] == *u) r.block_union_image[b] = c;
    }
  }
  // Clusters: compared as unions of their blocks.
  const size_t nc = a.cluster_labels.size();
  r.cluster_image.assign(nc, std::nullopt);
  auto cluster_tets = [&](size_t cl, bool apply) {
    std::vector<Tet> out;
    for (const auto& b : a.blocks)
      if (b.cluster == static_cast<int>(cl))
        for (size_t i : b.members) out.push_back(apply ? detail::transformed(g, a.tets[i].vertices) : a.tets[i].vertices);
    return out;
  };
  for (size_t cl = 0; cl < nc; ++cl) {
    auto u = detail::union_key(cluster_tets(cl, true));
    if (!u) continue;
    for (size_t d = 0; d < nc; ++d) {
      auto v = detail::union_key(cluster_tets(d, false));
      if (v && *v == *u) {
        r.cluster_image[cl] = d;
        break;
      }
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Builders

namespace detail {

inline size_t add_block(Assembly& a, const std::string& label, const std::vector<PlacedTet>& parts, int cluster = -1) {
  Block b{label, {}, cluster};
  for (const auto& p : parts) {
    b.members.push_back(a.tets.size());
    a.tets.push_back(p);
  }
  a.blocks.push_back(b);
  return a.blocks.size() - 1;
}

inline PlacedTet place(TileClass label, const Tet& t) {
  auto cg = congruence_class(t);
  if (!cg || cg->label != label) {
    throw ConstructionError("listed " + to_string(label) + " (" + point_string(t[0]) + ", ...) is not congruent to it");
  }
  return {label, t, cg->handedness};
}

inline PlacedTet place(TileClass label, const std::array<std::string, 4>& names,
                       const std::function<GoldenVec3(const std::string&)>& resolve) {
  return place(label, Tet{resolve(names[0]), resolve(names[1]), resolve(names[2]), resolve(names[3])});
}

inline GoldenVec3 named(const std::string& n) { return vertex(n); }

inline const TileClass t1 = TileClass::t1, t2 = TileClass::t2, t3 = TileClass::t3, t4 = TileClass::t4,
                       t5 = TileClass::t5, t6 = TileClass::t6;

}  // namespace detail

/// Icosahedron of edge 1 on +-l_i: T3 plus 7 t1 and 6 t2.
inline Assembly build_icosahedron_unit() {
  using namespace detail;
  Assembly a;
  a.name = "icosa";
  a.hull_points = icosahedron_vertices();
  a.expected_volume = GoldenScalar::from_ratio(5, 6) * tau() * tau();
  add_block(a, "T3",
            {place(t5, {"l1", "l6", "-l3", "-l5"}, named), place(t6, {"l1", "l6", "-l2", "-l3"}, named),
             place(t5, {"l1", "l6", "-l2", "-l4"}, named)});
  const std::vector<std::pair<TileClass, std::array<std::string, 4>>> rest{
      {t2, {"l1", "-l6", "-l2", "-l3"}}, {t2, {"l1", "l4", "-l3", "-l5"}}, {t2, {"l1", "l2", "l6", "-l5"}},
      {t2, {"l1", "l3", "l6", "-l4"}},   {t2, {"l1", "l5", "-l2", "-l4"}}, {t1, {"l1", "l4", "-l6", "-l3"}},
      {t1, {"l1", "l2", "l4", "-l5"}},   {t1, {"l1", "l2", "l3", "l6"}},   {t1, {"l1", "l3", "l5", "-l4"}},
      {t1, {"l1", "l5", "-l2", "-l6"}},  {t1, {"-l1", "-l3", "-l5", "l6"}}, {t2, {"-l1", "-l2", "-l3", "l6"}},
      {t1, {"-l1", "-l2", "-l4", "l6"}}};
  for (const auto& [label, names] : rest) add_block(a, to_string(label), {place(label, names, named)});
  return a;
}

/// The label map cycling a -> b -> c and fixing +-Y5.
inline std::string threefold_label(const std::string& name) {
  static const std::map<std::string, std::string> m{
      {"X1", "-Y3"}, {"X2", "-X4"}, {"X3", "-X5"}, {"X4", "-Y4"}, {"X5", "Y1"}, {"Y1", "-X3"}, {"Y2", "-X1"},
      {"Y3", "Y2"},  {"Y4", "X2"},  {"Y5", "Y5"},  {"a", "b"},    {"b", "c"},   {"c", "a"}};
  bool neg = !name.empty() && name[0] == '-';
  std::string base = neg ? name.substr(1) : name;
  auto it = m.find(base);
  if (it == m.end()) throw UnknownVertex("no 3-fold image for " + name);
  std::string img = it->second;
  if (!neg) return img;
  return img[0] == '-' ? img.substr(1) : "-" + img;
}

/// Icosahedral group element inducing threefold_label on the named vertices.
inline GoldenMat3 threefold_element() {
  static const std::vector<std::string> names{"X1", "X2", "X3", "X4", "X5", "Y1", "Y2", "Y3", "Y4", "Y5", "a", "b", "c"};
  for (const auto& g : IcosaGroup::instance().elements()) {
    bool ok = std::all_of(names.begin(), names.end(),
                          [&](const std::string& n) { return g * vertex(n) == vertex(threefold_label(n)); });
    if (ok) return g;
  }
  throw ConstructionError("the cyclic label map is not induced by an icosahedral symmetry");
}

/// Dodecahedron of edge 1 as three cyclic copies of (E + C + T4) + T2 plus the
/// invariant T2 + T4.
inline Assembly build_d1_threefold() {
  using namespace detail;
  Assembly a;
  a.name = "d1-3fold";
  a.hull_points = dodecahedron_vertices();
  a.expected_volume = (GoldenScalar(7) * tau() + 4) * GoldenScalar::from_ratio(1, 2);
  using Row = std::pair<TileClass, std::array<std::string, 4>>;
  const std::vector<Row> e{{t4, {"X5", "X1", "a", "-Y2"}}, {t1, {"X5", "X1", "a", "X4"}}, {t4, {"X5", "X4", "a", "-Y1"}}};
  const std::vector<Row> c{{t3, {"-Y2", "-Y1", "Y4", "X5"}}, {t6, {"-Y2", "-Y1", "X5", "a"}}, {t3, {"-Y2", "-Y1", "a", "c"}}};
  const std::vector<Row> t4b{{t3, {"Y3", "X4", "-Y1", "-Y5"}}, {t6, {"a", "X4", "-Y1", "-Y5"}}, {t5, {"c", "a", "-Y1", "-Y5"}}};
  const std::vector<Row> t2b{{t2, {"X1", "X3", "X4", "a"}}, {t4, {"X3", "X4", "a", "-Y5"}}};
  for (int k = 0; k < 3; ++k) {
    auto resolve = [k](const std::string& n) {
      std::string m = n;
      for (int i = 0; i < k; ++i) m = threefold_label(m);
      return vertex(m);
    };
    auto rows = [&](const std::vector<Row>& rs) {
      std::vector<PlacedTet> out;
      for (const auto& [l, names] : rs) out.push_back(place(l, names, resolve));
      return out;
    };
    a.cluster_labels.push_back("T1+T4+T2");
    auto ep = rows(e), cp = rows(c);
    ep.insert(ep.end(), cp.begin(), cp.end());
    add_block(a, "T1", ep, k);
    add_block(a, "T4", rows(t4b), k);
    add_block(a, "T2", rows(t2b), k);
  }
  a.cluster_labels.push_back("T2+T4");
  add_block(a, "T2", {place(t2, {"a", "b", "c", "-Y3"}, named), place(t4, {"a", "b", "c", "-Y5"}, named)}, 3);
  add_block(a, "T4",
            {place(t3, {"-Y3", "-Y2", "X1", "Y5"}, named), place(t6, {"X1", "a", "-Y2", "-Y3"}, named),
             place(t5, {"-Y2", "-Y3", "c", "a"}, named)},
            3);
  return a;
}

/// Extra points used by the five-fold build: e1 = (0, sigma, 1)/2 and
/// e11 = (-sigma, -1, 0)/2, both vertices of the small icosahedron.
inline GoldenVec3 fivefold_point(const std::string& n) {
  if (n == "e1") return half_vec(0, sigma(), 1);
  if (n == "e11") return half_vec(-sigma(), -1, 0);
  return vertex(n);
}

/// Dodecahedron of edge 1 as two frustums: d1 = 2T1 + 2T2 + 3T4 and d2 = T1 + 2T2 + T4.
inline Assembly build_d1_fivefold() {
  using namespace detail;
  Assembly a;
  a.name = "d1-5fold";
  a.hull_points = dodecahedron_vertices();
  a.expected_volume = (GoldenScalar(7) * tau() + 4) * GoldenScalar::from_ratio(1, 2);
  a.cluster_labels = {"d1(1)", "d2(1)"};
  auto p = [](TileClass l, std::array<std::string, 4> n) { return place(l, n, fivefold_point); };
  // d1(1)
  add_block(a, "T1",
            {p(t1, {"X1", "X4", "X5", "a"}), p(t4, {"X1", "X5", "-Y2", "a"}), p(t4, {"X4", "X5", "-Y1", "a"}),
             p(t6, {"X5", "-Y1", "-Y2", "a"}), p(t3, {"X5", "-Y1", "-Y2", "Y4"}), p(t3, {"-Y1", "-Y2", "a", "c"})},
            0);
  add_block(a, "T1",
            {p(t1, {"X2", "X3", "X4", "a"}), p(t4, {"X3", "X4", "-Y5", "a"}), p(t4, {"X2", "X3", "-Y4", "a"}),
             p(t6, {"X3", "-Y4", "-Y5", "a"}), p(t3, {"X3", "-Y4", "Y2", "-Y5"}), p(t3, {"-Y4", "-Y5", "e1", "a"})},
            0);
  add_block(a, "T2", {p(t2, {"X1", "X2", "X4", "a"}), p(t4, {"X1", "X2", "-Y3", "a"})}, 0);
  add_block(a, "T2", {p(t4, {"-Y5", "b", "a", "c"}), p(t2, {"-Y3", "b", "a", "c"})}, 0);
  add_block(a, "T4", {p(t3, {"X1", "-Y2", "Y5", "-Y3"}), p(t6, {"X1", "-Y2", "-Y3", "a"}), p(t5, {"-Y2", "-Y3", "a", "c"})}, 0);
  add_block(a, "T4", {p(t3, {"-Y3", "Y1", "-Y4", "X2"}), p(t6, {"X2", "-Y3", "-Y4", "a"}), p(t5, {"-Y3", "-Y4", "a", "e1"})}, 0);
  add_block(a, "T4", {p(t3, {"X4", "Y3", "-Y1", "-Y5"}), p(t6, {"X4", "-Y1", "-Y5", "a"}), p(t5, {"-Y1", "-Y5", "a", "c"})}, 0);
  // d2(1)
  add_block(a, "T1",
            {p(t1, {"-X4", "-Y4", "-X5", "b"}), p(t4, {"-X4", "-X5", "-X2", "b"}), p(t4, {"-Y4", "-X5", "-Y5", "b"}),
             p(t6, {"-X5", "-X2", "-Y5", "b"}), p(t3, {"-X1", "-X2", "-X5", "-Y5"}), p(t3, {"-X2", "-Y5", "b", "e11"})},
            1);
  add_block(a, "T2", {p(t2, {"-Y2", "-Y1", "-X2", "c"}), p(t4, {"-X2", "-Y1", "-Y5", "c"})}, 1);
  add_block(a, "T2", {p(t2, {"-Y3", "-Y4", "-X4", "b"}), p(t4, {"-X4", "-Y2", "-Y3", "b"})}, 1);
  add_block(a, "T4", {p(t3, {"-X4", "-X3", "-X2", "-Y2"}), p(t6, {"-X4", "-X2", "-Y2", "b"}), p(t5, {"-X2", "-Y2", "b", "e11"})}, 1);
  return a;
}

/// Volume of the blocks in one cluster.
inline GoldenScalar cluster_volume(const Assembly& a, int cluster) {
  GoldenScalar v;
  for (const auto& b : a.blocks)
    if (b.cluster == cluster)
      for (size_t i : b.members) v += tet_volume(a.tets[i].vertices);
  return v;
}

namespace detail {

// Cyclically ordered corners of a convex face, counter-clockwise about `normal`.
inline std::vector<GoldenVec3> cyclic_order(std::vector<GoldenVec3> pts, const GoldenVec3& normal, const GoldenScalar& edge2) {
  std::vector<GoldenVec3> out{pts[0]};
  pts.erase(pts.begin());
  while (!pts.empty()) {
    bool moved = false;
    for (size_t i = 0; i < pts.size(); ++i) {
      if (!(distance2(out.back(), pts[i]) == edge2)) continue;
      if (out.size() == 1) {
        // Pick the neighbour that turns counter-clockwise.
        bool ccw = false;
        for (const auto& q : pts)
          if (!(q == pts[i]) && dot(cross(pts[i] - out[0], q - out[0]), normal).sign() > 0) ccw = true;
        if (!ccw) continue;
      }
      out.push_back(pts[i]);
      pts.erase(pts.begin() + static_cast<long>(i));
      moved = true;
      break;
    }
    if (!moved) throw ConstructionError("face corners do not form a cycle");
  }
  return out;
}

}  // namespace detail

/// Icosidodecahedron of edge 1: a T3 tent on each pentagon and a t4 on each
/// triangle, apexes at the origin.
inline Assembly build_icosidodecahedron_unit() {
  using namespace detail;
  Assembly a;
  a.name = "id1";
  a.hull_points = icosidodecahedron_vertices();
  a.expected_volume = (GoldenScalar(17) * tau() + 14) * GoldenScalar::from_ratio(1, 3);
  Hull h = convex_hull(a.hull_points);
  const GoldenVec3 o{0, 0, 0};
  for (const auto& f : h.faces) {
    std::vector<GoldenVec3> c;
    for (size_t k : f.corners) c.push_back(h.points[k]);
    if (c.size() == 5) {
      add_block(a, "T3",
                {place(t5, Tet{o, c[0], c[1], c[2]}), place(t6, Tet{o, c[0], c[2], c[3]}),
                 place(t5, Tet{o, c[0], c[3], c[4]})});
    } else if (c.size() == 3) {
      add_block(a, "t4", {place(t4, Tet{o, c[0], c[1], c[2]})});
    } else {
      throw ConstructionError("unexpected icosidodecahedron face");
    }
  }
  return a;
}

// ---------------------------------------------------------------------------
// d(tau)

namespace detail {

struct PyramidSplit {
  std::vector<PlacedTet> tets;  // 7 tets: 2 t3, 3 t5, t2, t4
};

// The ways of cutting a tau-scaled pentagonal pyramid into fundamental tiles:
// fan from base corner v0 and cut the diagonals v0v2, v0v3 at p and q.
inline std::vector<PyramidSplit> pyramid_splits(const GoldenVec3& apex, const std::vector<GoldenVec3>& base) {
  std::vector<PyramidSplit> out;
  const GoldenScalar t2inv = (tau() * tau()).inverse();
  for (size_t s = 0; s < 5; ++s) {
    std::array<GoldenVec3, 5> v;
    for (size_t k = 0; k < 5; ++k) v[k] = base[(s + k) % 5];
    for (const GoldenScalar& fp : {GoldenScalar(1), tau()})
      for (const GoldenScalar& fq : {GoldenScalar(1), tau()}) {
        GoldenVec3 p = v[0] + (v[2] - v[0]) * (fp * t2inv);
        GoldenVec3 q = v[0] + (v[3] - v[0]) * (fq * t2inv);
        for (int opt = 0; opt < 2; ++opt) {
          std::vector<Tet> tets{{apex, v[0], v[1], p}, {apex, p, v[1], v[2]}, {apex, v[0], p, q}};
          if (opt == 0) {
            tets.push_back({apex, p, v[2], v[3]});
            tets.push_back({apex, p, v[3], q});
          } else {
            tets.push_back({apex, p, v[2], q});
            tets.push_back({apex, q, v[2], v[3]});
          }
          tets.push_back({apex, v[0], q, v[4]});
          tets.push_back({apex, q, v[3], v[4]});
          PyramidSplit sp;
          bool ok = true;
          for (const auto& t : tets) {
            Classification c = classify_tetrahedron(t);
            if (c.label == TileClass::Trapezoid111T || c.label == TileClass::DegenerateOther) {
              ok = false;
              break;
            }
            sp.tets.push_back({c.label, t, c.handedness});
          }
          if (!ok) continue;
          // The t2 and t4 pieces must make a T2.
          std::vector<PlacedTet> pair;
          for (const auto& pt : sp.tets)
            if (pt.label == TileClass::t2 || pt.label == TileClass::t4) pair.push_back(pt);
          if (pair.size() != 2 || !composite_congruence(pair, CompositeLabel::T2)) continue;
          out.push_back(std::move(sp));
        }
      }
  }
  return out;
}

inline bool tet_has(const Tet& t, const GoldenVec3& p) { return std::find(t.begin(), t.end(), p) != t.end(); }

}  // namespace detail

/// Dodecahedron of edge tau around the unit icosahedron: i(1), a t4 cap on each
/// of its 20 faces, a t6 wedge under each of its 30 edges and a cut pentagonal
/// pyramid at each of its 12 vertices. Pyramid cuts are chosen by search so
/// that the pieces group into 7 T1, 18 T2, 14 T3 and 10 T4.
inline Assembly build_d_tau() {
  using namespace detail;
  const GoldenScalar t = tau();
  Assembly a;
  a.name = "dtau";
  for (const auto& v : dodecahedron_vertices()) a.hull_points.push_back(t * v);
  a.expected_volume = pow(t, 3) * (GoldenScalar(7) * t + 4) * GoldenScalar::from_ratio(1, 2);

  Assembly ico = build_icosahedron_unit();
  const auto ico_pts = icosahedron_vertices();

  // Caps: each face of i(1) gets the t4 whose apex is the dodecahedron vertex
  // at distance tau from all three corners.
  struct Cap {
    size_t owner;  // tet of i(1) carrying the face
    std::array<GoldenVec3, 3> face;
    GoldenVec3 apex;
  };
  std::vector<Cap> caps;
  Hull ico_hull = convex_hull(ico_pts);
  for (size_t i = 0; i < ico.tets.size(); ++i)
    for (const auto& f : outward_faces(ico.tets[i].vertices)) {
      if (!ico_hull.face_containing({f[0], f[1], f[2]})) continue;
      std::optional<GoldenVec3> apex;
      for (const auto& q : a.hull_points)
        if (distance2(q, f[0]) == t * t && distance2(q, f[1]) == t * t && distance2(q, f[2]) == t * t) apex = q;
      if (!apex) throw ConstructionError("no cap apex over an icosahedron face");
      caps.push_back({i, f, *apex});
    }
  if (caps.size() != 20) throw ConstructionError("expected 20 capped faces");
  auto cap_tet = [&](const Cap& c) { return place(t4, Tet{c.face[0], c.face[1], c.face[2], c.apex}); };
  auto cap_has = [](const Cap& c, const GoldenVec3& p) { return std::find(c.face.begin(), c.face.end(), p) != c.face.end(); };

  // Wedges under the icosahedron edges.
  struct Wedge {
    size_t i, j;  // indices into ico_pts
    GoldenVec3 a, b;
    bool e_edge = false;
  };
  std::vector<Wedge> wedges;
  for (size_t i = 0; i < ico_pts.size(); ++i)
    for (size_t j = i + 1; j < ico_pts.size(); ++j) {
      if (!(distance2(ico_pts[i], ico_pts[j]) == 1)) continue;
      std::vector<GoldenVec3> ap;
      for (const auto& c : caps)
        if (cap_has(c, ico_pts[i]) && cap_has(c, ico_pts[j])) ap.push_back(c.apex);
      if (ap.size() != 2) throw ConstructionError("an icosahedron edge is not shared by two caps");
      wedges.push_back({i, j, ap[0], ap[1]});
    }

  // Each t1 of i(1) carries two caps; their shared edge is where E meets C.
  std::vector<std::pair<size_t, std::array<size_t, 2>>> e_groups;  // t1 index, its two caps
  for (size_t i = 0; i < ico.tets.size(); ++i) {
    if (ico.tets[i].label != t1) continue;
    std::vector<size_t> mine;
    for (size_t k = 0; k < caps.size(); ++k)
      if (caps[k].owner == i) mine.push_back(k);
    if (mine.size() != 2) throw ConstructionError("a t1 of the icosahedron does not carry two caps");
    e_groups.push_back({i, {mine[0], mine[1]}});
    std::vector<GoldenVec3> common;
    for (const auto& p : caps[mine[0]].face)
      if (cap_has(caps[mine[1]], p)) common.push_back(p);
    for (auto& w : wedges)
      if ((ico_pts[w.i] == common[0] && ico_pts[w.j] == common[1]) || (ico_pts[w.i] == common[1] && ico_pts[w.j] == common[0]))
        w.e_edge = true;
  }

  // Pyramids at the icosahedron vertices.
  std::vector<std::vector<PyramidSplit>> splits;
  for (const auto& l : ico_pts) {
    std::vector<GoldenVec3> base;
    for (const auto& c : caps)
      if (distance2(c.apex, l) == t * t && std::find(base.begin(), base.end(), c.apex) == base.end()) base.push_back(c.apex);
    if (base.size() != 5) throw ConstructionError("pyramid base is not a pentagon");
    base = cyclic_order(base, l, t * t);
    splits.push_back(pyramid_splits(l, base));
    if (splits.back().empty()) throw ConstructionError("a pyramid admits no cut into fundamental tiles");
  }

  auto piece = [&](size_t pyr, size_t choice, const Wedge& w) -> const PlacedTet& {
    const GoldenVec3& l = ico_pts[pyr];
    for (const auto& pt : splits[pyr][choice].tets)
      if (tet_has(pt.vertices, l) && tet_has(pt.vertices, w.a) && tet_has(pt.vertices, w.b)) return pt;
    throw ConstructionError("no pyramid piece on a wedge face");
  };

  // Kind of the (piece, wedge, piece) triple, if it is a catalog composite.
  std::map<std::tuple<size_t, size_t, size_t>, std::optional<CompositeLabel>> memo;
  auto wedge_kind = [&](size_t wi, size_t ci, size_t cj) -> std::optional<CompositeLabel> {
    auto key = std::make_tuple(wi, ci, cj);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const Wedge& w = wedges[wi];
    const PlacedTet& pi = piece(w.i, ci, w);
    const PlacedTet& pj = piece(w.j, cj, w);
    std::optional<CompositeLabel> kind;
    int n3 = (pi.label == t3) + (pj.label == t3);
    int n5 = (pi.label == t5) + (pj.label == t5);
    if (n3 == 2) kind = CompositeLabel::C;
    else if (n5 == 2) kind = CompositeLabel::T3;
    else if (n3 == 1 && n5 == 1) kind = CompositeLabel::T4;
    if (kind) {
      std::vector<PlacedTet> parts{pi, place(t6, Tet{ico_pts[w.i], ico_pts[w.j], w.a, w.b}), pj};
      if (!composite_congruence(parts, *kind)) kind.reset();
    }
    memo.emplace(key, kind);
    return kind;
  };

  // Backtracking over pyramid cuts.
  const std::map<CompositeLabel, int> need{{CompositeLabel::C, 7}, {CompositeLabel::T3, 13}, {CompositeLabel::T4, 10}};
  std::map<CompositeLabel, int> have{{CompositeLabel::C, 0}, {CompositeLabel::T3, 0}, {CompositeLabel::T4, 0}};
  std::vector<std::optional<size_t>> choice(ico_pts.size());
  std::function<bool(size_t)> search = [&](size_t k) -> bool {
    if (k == ico_pts.size()) return have == need;
    for (size_t s = 0; s < splits[k].size(); ++s) {
      choice[k] = s;
      std::vector<CompositeLabel> added;
      bool ok = true;
      for (size_t wi = 0; wi < wedges.size() && ok; ++wi) {
        const Wedge& w = wedges[wi];
        size_t other = w.i == k ? w.j : (w.j == k ? w.i : ico_pts.size());
        if (other == ico_pts.size() || !choice[other] || other > k) continue;
        auto kind = w.i == k ? wedge_kind(wi, s, *choice[other]) : wedge_kind(wi, *choice[other], s);
        if (!kind || (*kind == CompositeLabel::C) != w.e_edge) {
          ok = false;
          break;
        }
        added.push_back(*kind);
        if (++have[*kind] > need.at(*kind)) ok = false;
      }
      if (ok && search(k + 1)) return true;
      for (auto kd : added) --have[kd];
      choice[k].reset();
    }
    return false;
  };
  if (!search(0)) throw ConstructionError("no choice of pyramid cuts gives the composite content");

  // Assemble the blocks.
  std::vector<bool> cap_used(caps.size(), false);
  for (const auto& [t1i, ck] : e_groups) {
    std::vector<PlacedTet> parts{cap_tet(caps[ck[0]]), ico.tets[t1i], cap_tet(caps[ck[1]])};
    cap_used[ck[0]] = cap_used[ck[1]] = true;
    std::vector<GoldenVec3> common;
    for (const auto& p : caps[ck[0]].face)
      if (cap_has(caps[ck[1]], p)) common.push_back(p);
    for (size_t wi = 0; wi < wedges.size(); ++wi) {
      const Wedge& w = wedges[wi];
      if (!((ico_pts[w.i] == common[0] && ico_pts[w.j] == common[1]) || (ico_pts[w.i] == common[1] && ico_pts[w.j] == common[0])))
        continue;
      parts.push_back(piece(w.i, *choice[w.i], w));
      parts.push_back(place(t6, Tet{ico_pts[w.i], ico_pts[w.j], w.a, w.b}));
      parts.push_back(piece(w.j, *choice[w.j], w));
    }
    add_block(a, "T1", parts);
  }
  for (size_t wi = 0; wi < wedges.size(); ++wi) {
    const Wedge& w = wedges[wi];
    if (w.e_edge) continue;
    auto kind = wedge_kind(wi, *choice[w.i], *choice[w.j]);
    add_block(a, to_string(*kind),
              {piece(w.i, *choice[w.i], w), place(t6, Tet{ico_pts[w.i], ico_pts[w.j], w.a, w.b}), piece(w.j, *choice[w.j], w)});
  }
  for (size_t k = 0; k < ico_pts.size(); ++k) {
    std::vector<PlacedTet> pair;
    for (const auto& pt : splits[k][*choice[k]].tets)
      if (pt.label == t2 || pt.label == t4) pair.push_back(pt);
    add_block(a, "T2", pair);
  }
  for (size_t i = 0; i < ico.tets.size(); ++i) {
    if (ico.tets[i].label != t2) continue;
    std::optional<size_t> cap;
    for (size_t k = 0; k < caps.size(); ++k)
      if (caps[k].owner == i) cap = k;
    if (!cap || cap_used[*cap]) throw ConstructionError("a t2 of the icosahedron has no free cap");
    cap_used[*cap] = true;
    add_block(a, "T2", {ico.tets[i], cap_tet(caps[*cap])});
  }
  for (const auto& b : ico.blocks)
    if (b.label == "T3") {
      std::vector<PlacedTet> parts;
      for (size_t i : b.members) parts.push_back(ico.tets[i]);
      add_block(a, "T3", parts);
    }
  if (a.tets.size() != 150) throw ConstructionError("d(tau) does not have 150 tets");
  return a;
}

// ---------------------------------------------------------------------------

inline const std::vector<std::string>& build_names() {
  static const std::vector<std::string> n{"icosa", "d1-3fold", "d1-5fold", "id1", "dtau"};
  return n;
}

inline Assembly build(const std::string& name) {
  if (name == "icosa") return build_icosahedron_unit();
  if (name == "d1-3fold") return build_d1_threefold();
  if (name == "d1-5fold") return build_d1_fivefold();
  if (name == "id1") return build_icosidodecahedron_unit();
  if (name == "dtau") return build_d_tau();
  throw std::invalid_argument("unknown build: " + name);
}

}  // namespace mstiler
