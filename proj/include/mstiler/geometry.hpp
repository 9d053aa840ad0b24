// Exact 3D predicates over the golden field: orientation, tetrahedron volume and
// overlap, small convex hulls and the boundary complex of a union of
// tetrahedra.
//
// Floating point is used only as a certified filter: a double result is
// trusted when it clears a margin far above its rounding error, otherwise the
// exact value is computed.
#pragma once

#include "mstiler/golden.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace mstiler {

using Tet = std::array<GoldenVec3, 4>;
using DVec = std::array<double, 3>;

namespace detail {

constexpr double kFilterMargin = 1e-9;

inline DVec dsub(const DVec& a, const DVec& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
inline DVec dcross(const DVec& a, const DVec& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
inline double ddot(const DVec& a, const DVec& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
inline double dnorm(const DVec& a) { return std::sqrt(ddot(a, a)); }

}  // namespace detail

/// Sign of (b - a) . ((c - a) x (d - a)).
inline int orient_sign(const GoldenVec3& a, const GoldenVec3& b, const GoldenVec3& c, const GoldenVec3& d) {
  using namespace detail;
  DVec fa = a.to_double(), fb = b.to_double(), fc = c.to_double(), fd = d.to_double();
  double v = ddot(dsub(fb, fa), dcross(dsub(fc, fa), dsub(fd, fa)));
  if (v > kFilterMargin) return 1;
  if (v < -kFilterMargin) return -1;
  return triple(b - a, c - a, d - a).sign();
}

/// Six times the signed volume.
inline GoldenScalar signed_volume6(const Tet& t) { return triple(t[1] - t[0], t[2] - t[0], t[3] - t[0]); }

inline GoldenScalar tet_volume(const Tet& t) { return signed_volume6(t).abs() * GoldenScalar::from_ratio(1, 6); }

inline GoldenVec3 centroid(const std::vector<GoldenVec3>& pts) {
  GoldenVec3 c{0, 0, 0};
  for (const auto& p : pts) c += p;
  return c * GoldenScalar::from_ratio(1, static_cast<long>(pts.size()));
}

namespace detail {

struct FilteredTet {
  const Tet* exact;
  std::array<DVec, 4> f;
  DVec lo, hi;
};

inline FilteredTet filtered(const Tet& t) {
  FilteredTet ft{&t, {}, {}, {}};
  for (size_t i = 0; i < 4; ++i) ft.f[i] = t[i].to_double();
  for (size_t k = 0; k < 3; ++k) {
    ft.lo[k] = ft.hi[k] = ft.f[0][k];
    for (size_t i = 1; i < 4; ++i) {
      ft.lo[k] = std::min(ft.lo[k], ft.f[i][k]);
      ft.hi[k] = std::max(ft.hi[k], ft.f[i][k]);
    }
  }
  return ft;
}

// Whether the axis separates the two tetrahedra (touching counts as separated).
inline bool exact_separates(const Tet& p, const Tet& q, const GoldenVec3& axis) {
  if (axis.is_zero()) return false;
  std::array<GoldenScalar, 4> pa, qa;
  for (size_t i = 0; i < 4; ++i) {
    pa[i] = dot(p[i], axis);
    qa[i] = dot(q[i], axis);
  }
  auto [pmin, pmax] = std::minmax_element(pa.begin(), pa.end());
  auto [qmin, qmax] = std::minmax_element(qa.begin(), qa.end());
  return *pmax <= *qmin || *qmax <= *pmin;
}

// Filtered verdict for a double axis: +1 separated, -1 overlapping along it, 0 unsure.
inline int filtered_separates(const FilteredTet& p, const FilteredTet& q, const DVec& axis) {
  double len = dnorm(axis);
  if (len <= kFilterMargin) return 0;
  double pmin = 1e300, pmax = -1e300, qmin = 1e300, qmax = -1e300;
  for (size_t i = 0; i < 4; ++i) {
    double a = ddot(p.f[i], axis), b = ddot(q.f[i], axis);
    pmin = std::min(pmin, a);
    pmax = std::max(pmax, a);
    qmin = std::min(qmin, b);
    qmax = std::max(qmax, b);
  }
  double gap = std::max(qmin - pmax, pmin - qmax) / len;
  if (gap > kFilterMargin) return 1;
  if (gap < -kFilterMargin) return -1;
  return 0;
}

}  // namespace detail

/// True when the interiors of the two (non-degenerate) tetrahedra intersect.
/// Separating axis test over the 8 face normals and 36 edge-pair directions.
inline bool interiors_overlap(const Tet& p, const Tet& q) {
  using namespace detail;
  FilteredTet fp = filtered(p), fq = filtered(q);
  for (size_t k = 0; k < 3; ++k)
    if (fp.hi[k] < fq.lo[k] - kFilterMargin || fq.hi[k] < fp.lo[k] - kFilterMargin) return false;

  static constexpr std::array<std::array<size_t, 3>, 4> kFaces{{{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}}};
  static constexpr std::array<std::array<size_t, 2>, 6> kEdges{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

  for (const FilteredTet* t : {&fp, &fq}) {
    for (const auto& fc : kFaces) {
      DVec nf = dcross(dsub(t->f[fc[1]], t->f[fc[0]]), dsub(t->f[fc[2]], t->f[fc[0]]));
      int v = filtered_separates(fp, fq, nf);
      if (v > 0) return false;
      if (v < 0) continue;
      const Tet& e = *t->exact;
      if (exact_separates(p, q, cross(e[fc[1]] - e[fc[0]], e[fc[2]] - e[fc[0]]))) return false;
    }
  }
  for (const auto& ea : kEdges) {
    DVec da = dsub(fp.f[ea[1]], fp.f[ea[0]]);
    for (const auto& eb : kEdges) {
      int v = filtered_separates(fp, fq, dcross(da, dsub(fq.f[eb[1]], fq.f[eb[0]])));
      if (v > 0) return false;
      if (v < 0) continue;
      if (exact_separates(p, q, cross(p[ea[1]] - p[ea[0]], q[eb[1]] - q[eb[0]]))) return false;
    }
  }
  return true;
}

/// Whether p lies in the closed tetrahedron.
inline bool tet_contains(const Tet& t, const GoldenVec3& p) {
  int s = orient_sign(t[0], t[1], t[2], t[3]);
  if (s == 0) return false;
  for (size_t i = 0; i < 4; ++i) {
    Tet u = t;
    u[i] = p;
    int si = orient_sign(u[0], u[1], u[2], u[3]);
    if (si != 0 && si != s) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

/// A plane n . x = offset with n scaled so its first nonzero component is 1.
struct PlaneKey {
  GoldenVec3 normal;
  GoldenScalar offset;

  friend bool operator<(const PlaneKey& a, const PlaneKey& b) {
    StructuralLess less;
    if (!(a.normal == b.normal)) return less(a.normal, b.normal);
    return structural_less(a.offset, b.offset);
  }
};

/// Canonical plane through a, b, c; `orientation` receives +1 if the
/// canonical normal agrees with (b - a) x (c - a), -1 otherwise.
inline PlaneKey plane_key(const GoldenVec3& a, const GoldenVec3& b, const GoldenVec3& c, int* orientation = nullptr) {
  GoldenVec3 n = cross(b - a, c - a);
  if (n.is_zero()) throw std::invalid_argument("plane_key: collinear points");
  size_t k = !n.x.is_zero() ? 0 : (!n.y.is_zero() ? 1 : 2);
  GoldenScalar s = n[k].inverse();
  if (orientation) *orientation = s.sign();
  n *= s;
  return {n, dot(n, a)};
}

// ---------------------------------------------------------------------------

struct HullFace {
  std::vector<size_t> corners;  // indices into Hull::points, counter-clockwise seen from outside
  GoldenVec3 normal;            // outward, unnormalised
  GoldenScalar offset;          // normal . x = offset on the face
};

struct Hull {
  std::vector<GoldenVec3> points;
  std::vector<size_t> vertices;  // indices of corner points
  std::vector<HullFace> faces;
  size_t edge_count = 0;
  GoldenScalar volume;

  /// Closed containment.
  bool contains(const GoldenVec3& p) const {
    for (const auto& f : faces)
      if (dot(f.normal, p) > f.offset) return false;
    return true;
  }
  /// Index of the face whose plane contains all of pts, if any.
  std::optional<size_t> face_containing(const std::vector<GoldenVec3>& pts) const {
    for (size_t i = 0; i < faces.size(); ++i) {
      bool all = std::all_of(pts.begin(), pts.end(),
                             [&](const GoldenVec3& p) { return dot(faces[i].normal, p) == faces[i].offset; });
      if (all) return i;
    }
    return std::nullopt;
  }
  GoldenScalar face_area2(size_t i) const;
};

namespace detail {

// Convex polygon corners of coplanar points, in counter-clockwise order
// around `normal` (exact gift wrapping).
inline std::vector<size_t> planar_hull(const std::vector<GoldenVec3>& pts, const std::vector<size_t>& idx,
                                       const GoldenVec3& normal) {
  auto turn = [&](size_t a, size_t b, size_t c) { return dot(normal, cross(pts[b] - pts[a], pts[c] - pts[a])).sign(); };
  NumericLess less;
  size_t start = *std::min_element(idx.begin(), idx.end(), [&](size_t a, size_t b) { return less(pts[a], pts[b]); });
  std::vector<size_t> out;
  size_t cur = start;
  for (;;) {
    out.push_back(cur);
    size_t cand = idx.front() == cur ? idx.back() : idx.front();
    for (size_t j : idx) {
      if (j == cur) continue;
      int t = turn(cur, cand, j);
      // j is to the right of cur->cand, or collinear and farther.
      if (t < 0 || (t == 0 && distance2(pts[cur], pts[j]) > distance2(pts[cur], pts[cand]))) cand = j;
    }
    cur = cand;
    if (cur == start) break;
    if (out.size() > idx.size()) throw std::logic_error("planar_hull: wrapping did not close");
  }
  return out;
}

}  // namespace detail

/// Convex hull of a small 3D point set (exact). Requires a full-dimensional set.
inline Hull convex_hull(const std::vector<GoldenVec3>& pts) {
  const size_t n = pts.size();
  if (n < 4) throw std::invalid_argument("convex_hull: need at least 4 points");
  Hull h;
  h.points = pts;
  std::set<std::vector<size_t>> seen;
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      for (size_t k = j + 1; k < n; ++k) {
        int pos = 0, neg = 0;
        std::vector<size_t> on;
        bool collinear = true;
        for (size_t m = 0; m < n && !(pos && neg); ++m) {
          int s = orient_sign(pts[i], pts[j], pts[k], pts[m]);
          if (s > 0) ++pos;
          else if (s < 0) ++neg;
          else on.push_back(m);
          if (s != 0) collinear = false;
        }
        if (collinear || (pos && neg)) continue;
        if (cross(pts[j] - pts[i], pts[k] - pts[i]).is_zero()) continue;
        if (!seen.insert(on).second) continue;
        GoldenVec3 nrm = cross(pts[j] - pts[i], pts[k] - pts[i]);
        if (pos > 0) nrm = -nrm;  // others lie on the negative side of an outward normal
        HullFace f;
        f.normal = nrm;
        f.offset = dot(nrm, pts[i]);
        f.corners = detail::planar_hull(pts, on, nrm);
        h.faces.push_back(std::move(f));
      }
    }
  }
  if (h.faces.size() < 4) throw std::invalid_argument("convex_hull: degenerate point set");
  std::set<size_t> verts;
  size_t sides = 0;
  for (const auto& f : h.faces) {
    verts.insert(f.corners.begin(), f.corners.end());
    sides += f.corners.size();
  }
  h.vertices.assign(verts.begin(), verts.end());
  h.edge_count = sides / 2;

  std::vector<GoldenVec3> corner_pts;
  for (size_t v : h.vertices) corner_pts.push_back(pts[v]);
  GoldenVec3 c = centroid(corner_pts);
  GoldenScalar vol6 = 0;
  for (const auto& f : h.faces)
    for (size_t t = 1; t + 1 < f.corners.size(); ++t)
      vol6 += triple(pts[f.corners[0]] - c, pts[f.corners[t]] - c, pts[f.corners[t + 1]] - c).abs();
  h.volume = vol6 * GoldenScalar::from_ratio(1, 6);
  return h;
}

/// 4 * area^2 of face i.
inline GoldenScalar Hull::face_area2(size_t i) const {
  const auto& f = faces[i];
  GoldenVec3 s{0, 0, 0};
  for (size_t t = 1; t + 1 < f.corners.size(); ++t)
    s += cross(points[f.corners[t]] - points[f.corners[0]], points[f.corners[t + 1]] - points[f.corners[0]]);
  return norm2(s);
}

// ---------------------------------------------------------------------------

enum class FaceShape {
  Equilateral1,
  EquilateralTau,
  Robinson11T,
  Robinson1TT,
  RobinsonTTT2,
  Trapezoid111T,
  Pentagon1,
  PentagonTau,
  Other
};

inline std::string to_string(FaceShape s) {
  switch (s) {
    case FaceShape::Equilateral1: return "eq(1)";
    case FaceShape::EquilateralTau: return "eq(tau)";
    case FaceShape::Robinson11T: return "rob(1,1,tau)";
    case FaceShape::Robinson1TT: return "rob(1,tau,tau)";
    case FaceShape::RobinsonTTT2: return "rob(tau,tau,tau^2)";
    case FaceShape::Trapezoid111T: return "trapezoid(1,1,1,tau)";
    case FaceShape::Pentagon1: return "pentagon(1)";
    case FaceShape::PentagonTau: return "pentagon(tau)";
    case FaceShape::Other: return "other";
  }
  return "other";
}

/// Classify a convex polygon given by its corners in cyclic order.
inline FaceShape classify_polygon(const std::vector<GoldenVec3>& corners) {
  const GoldenScalar one = 1;
  const GoldenScalar t2 = tau() * tau();
  const GoldenScalar t4 = t2 * t2;
  std::vector<int> sides;
  for (size_t i = 0; i < corners.size(); ++i) {
    GoldenScalar d = distance2(corners[i], corners[(i + 1) % corners.size()]);
    if (d == one) sides.push_back(1);
    else if (d == t2) sides.push_back(2);
    else if (d == t4) sides.push_back(4);
    else return FaceShape::Other;
  }
  auto count = [&](int v) { return std::count(sides.begin(), sides.end(), v); };
  if (sides.size() == 3) {
    if (count(1) == 3) return FaceShape::Equilateral1;
    if (count(2) == 3) return FaceShape::EquilateralTau;
    if (count(1) == 2 && count(2) == 1) return FaceShape::Robinson11T;
    if (count(1) == 1 && count(2) == 2) return FaceShape::Robinson1TT;
    if (count(2) == 2 && count(4) == 1) return FaceShape::RobinsonTTT2;
    return FaceShape::Other;
  }
  if (sides.size() == 4 && count(1) == 3 && count(2) == 1) return FaceShape::Trapezoid111T;
  if (sides.size() == 5 && count(1) == 5) return FaceShape::Pentagon1;
  if (sides.size() == 5 && count(2) == 5) return FaceShape::PentagonTau;
  return FaceShape::Other;
}

// ---------------------------------------------------------------------------

struct PolygonFace {
  std::vector<GoldenVec3> corners;
  GoldenVec3 normal;  // outward
  FaceShape shape = FaceShape::Other;
};

struct BoundaryComplex {
  std::vector<GoldenVec3> vertices;  // polyhedron corners
  std::vector<PolygonFace> faces;
  size_t n0 = 0, n1 = 0, n2 = 0;
};

class BoundaryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Boundary of a union of tetrahedra glued along whole triangles. Internal
/// triangles cancel in pairs; coplanar boundary triangles sharing an edge are
/// merged into polygons; vertices in the middle of a straight side are not
/// corners.
inline BoundaryComplex boundary_of(const std::vector<Tet>& tets) {
  // Point table.
  std::vector<GoldenVec3> pts;
  std::map<GoldenVec3, size_t, StructuralLess> index;
  auto id = [&](const GoldenVec3& p) {
    auto [it, fresh] = index.emplace(p, pts.size());
    if (fresh) pts.push_back(p);
    return it->second;
  };
  struct Tri {
    std::array<size_t, 3> v;  // outward orientation
  };
  std::map<std::array<size_t, 3>, std::vector<Tri>> by_set;
  for (const auto& t : tets) {
    std::array<size_t, 4> ids{id(t[0]), id(t[1]), id(t[2]), id(t[3])};
    static constexpr std::array<std::array<size_t, 4>, 4> kF{{{1, 2, 3, 0}, {0, 3, 2, 1}, {0, 1, 3, 2}, {0, 2, 1, 3}}};
    for (const auto& f : kF) {
      Tri tri{{ids[f[0]], ids[f[1]], ids[f[2]]}};
      // Orient so the opposite vertex is on the negative side.
      if (orient_sign(pts[tri.v[0]], pts[tri.v[1]], pts[tri.v[2]], pts[ids[f[3]]]) > 0) std::swap(tri.v[1], tri.v[2]);
      std::array<size_t, 3> key = tri.v;
      std::sort(key.begin(), key.end());
      by_set[key].push_back(tri);
    }
  }
  std::vector<Tri> bnd;
  for (const auto& [key, list] : by_set) {
    if (list.size() == 1) bnd.push_back(list.front());
    else if (list.size() != 2) throw BoundaryError("a triangle is shared by more than two tetrahedra");
  }

  // Split triangle sides at boundary vertices lying inside them.
  auto on_segment = [&](size_t a, size_t b, size_t p) {
    if (p == a || p == b) return false;
    GoldenVec3 ab = pts[b] - pts[a], ap = pts[p] - pts[a];
    if (!cross(ab, ap).is_zero()) return false;
    GoldenScalar s = dot(ap, ab);
    return s.sign() > 0 && s < norm2(ab);
  };
  std::set<size_t> bverts;
  for (const auto& t : bnd) bverts.insert(t.v.begin(), t.v.end());
  auto sub_edges = [&](size_t a, size_t b) {
    std::vector<size_t> inner;
    for (size_t p : bverts)
      if (on_segment(a, b, p)) inner.push_back(p);
    std::sort(inner.begin(), inner.end(),
              [&](size_t x, size_t y) { return distance2(pts[a], pts[x]) < distance2(pts[a], pts[y]); });
    std::vector<std::pair<size_t, size_t>> out;
    size_t prev = a;
    for (size_t p : inner) {
      out.emplace_back(prev, p);
      prev = p;
    }
    out.emplace_back(prev, b);
    return out;
  };

  // Union-find over coplanar, equally oriented triangles sharing a sub-edge.
  std::vector<PlaneKey> planes;
  std::vector<int> orient;
  for (const auto& t : bnd) {
    int o = 0;
    planes.push_back(plane_key(pts[t.v[0]], pts[t.v[1]], pts[t.v[2]], &o));
    orient.push_back(o);
  }
  std::vector<size_t> parent(bnd.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::map<std::pair<size_t, size_t>, std::vector<size_t>> edge_owner;  // directed sub-edge -> triangles
  std::vector<std::vector<std::pair<size_t, size_t>>> tri_edges(bnd.size());
  for (size_t i = 0; i < bnd.size(); ++i) {
    for (size_t k = 0; k < 3; ++k) {
      for (auto e : sub_edges(bnd[i].v[k], bnd[i].v[(k + 1) % 3])) {
        tri_edges[i].push_back(e);
        edge_owner[e].push_back(i);
      }
    }
  }
  for (size_t i = 0; i < bnd.size(); ++i) {
    for (auto [a, b] : tri_edges[i]) {
      auto it = edge_owner.find({b, a});
      if (it == edge_owner.end()) continue;
      for (size_t j : it->second) {
        bool same_plane = !(planes[i] < planes[j]) && !(planes[j] < planes[i]) && orient[i] == orient[j];
        if (same_plane) parent[find(i)] = find(j);
      }
    }
  }
  std::map<size_t, std::vector<size_t>> groups;
  for (size_t i = 0; i < bnd.size(); ++i) groups[find(i)].push_back(i);

  BoundaryComplex bc;
  std::set<size_t> corner_ids;
  size_t side_total = 0;
  for (const auto& [root, members] : groups) {
    // Directed sub-edges of the group not cancelled by a reverse sub-edge in the group.
    std::multiset<std::pair<size_t, size_t>> es;
    for (size_t i : members)
      for (auto e : tri_edges[i]) es.insert(e);
    std::map<size_t, size_t> next;
    for (auto e : es) {
      if (es.count({e.second, e.first}) != 0) continue;
      if (next.count(e.first)) throw BoundaryError("face boundary is not a simple cycle");
      next[e.first] = e.second;
    }
    if (next.empty()) throw BoundaryError("empty face boundary");
    std::vector<size_t> cycle;
    size_t start = next.begin()->first, cur = start;
    do {
      cycle.push_back(cur);
      auto it = next.find(cur);
      if (it == next.end()) throw BoundaryError("open face boundary");
      cur = it->second;
      if (cycle.size() > next.size()) throw BoundaryError("face boundary has several cycles");
    } while (cur != start);
    if (cycle.size() != next.size()) throw BoundaryError("face with holes or several components");
    std::vector<size_t> corners;
    for (size_t k = 0; k < cycle.size(); ++k) {
      size_t a = cycle[(k + cycle.size() - 1) % cycle.size()], b = cycle[k], c = cycle[(k + 1) % cycle.size()];
      if (!cross(pts[b] - pts[a], pts[c] - pts[b]).is_zero()) corners.push_back(b);
    }
    PolygonFace pf;
    for (size_t c : corners) pf.corners.push_back(pts[c]);
    const Tri& t0 = bnd[members.front()];
    pf.normal = cross(pts[t0.v[1]] - pts[t0.v[0]], pts[t0.v[2]] - pts[t0.v[0]]);
    pf.shape = classify_polygon(pf.corners);
    corner_ids.insert(corners.begin(), corners.end());
    side_total += corners.size();
    bc.faces.push_back(std::move(pf));
  }
  for (size_t c : corner_ids) bc.vertices.push_back(pts[c]);
  bc.n0 = corner_ids.size();
  bc.n2 = bc.faces.size();
  bc.n1 = side_total / 2;
  return bc;
}

/// Multiset of face shapes as label -> count.
inline std::map<std::string, int> face_census(const BoundaryComplex& bc) {
  std::map<std::string, int> out;
  for (const auto& f : bc.faces) ++out[to_string(f.shape)];
  return out;
}

}  // namespace mstiler
