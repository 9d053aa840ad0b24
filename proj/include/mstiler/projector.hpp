// Projection of the D6 lattice onto the icosahedral 3-spaces and
// classification of projected Delone facets into the six fundamental tiles.
#pragma once

#include "mstiler/geometry.hpp"
#include "mstiler/golden.hpp"
#include "mstiler/lattice.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace mstiler {

/// Rows of the unnormalised projection; column i is the image of l_{i+1}.
struct ProjectionFrame {
  std::array<std::array<GoldenScalar, 6>, 3> par_rows;
  std::array<std::array<GoldenScalar, 6>, 3> perp_rows;

  static const ProjectionFrame& standard() {
    static const ProjectionFrame f = [] {
      const GoldenScalar h = GoldenScalar::from_ratio(1, 2);
      const GoldenScalar t = tau();
      // Images of l_1..l_6 in the parallel space.
      const std::array<GoldenVec3, 6> par{{
          {h, h * t, 0},
          {-h, h * t, 0},
          {0, h, h * t},
          {0, h, -h * t},
          {h * t, 0, h},
          {-h * t, 0, h},
      }};
      ProjectionFrame fr;
      for (size_t i = 0; i < 6; ++i) {
        for (size_t r = 0; r < 3; ++r) {
          fr.par_rows[r][i] = par[i][r];
          // Perpendicular image: tau times the Galois conjugate.
          fr.perp_rows[r][i] = t * par[i][r].conjugate();
        }
      }
      return fr;
    }();
    return f;
  }
};

inline GoldenVec3 project_with(const std::array<std::array<GoldenScalar, 6>, 3>& rows, const Vector6& v) {
  GoldenVec3 out{0, 0, 0};
  for (size_t r = 0; r < 3; ++r) {
    GoldenScalar s = 0;
    for (size_t i = 0; i < 6; ++i)
      if (v.halves(i) != 0) s += rows[r][i] * GoldenScalar(v.coord(i));
    out[r] = s;
  }
  return out;
}

inline GoldenVec3 project_par(const Vector6& v) { return project_with(ProjectionFrame::standard().par_rows, v); }
inline GoldenVec3 project_perp(const Vector6& v) { return project_with(ProjectionFrame::standard().perp_rows, v); }

/// Projected l_i (1-based), signed.
inline GoldenVec3 projected_basis(int i) {
  return i > 0 ? project_par(Vector6::basis(i)) : -project_par(Vector6::basis(-i));
}

// ---------------------------------------------------------------------------

enum class TileClass { t1, t2, t3, t4, t5, t6, Trapezoid111T, DegenerateOther };

inline const std::array<TileClass, 6>& fundamental_labels() {
  static const std::array<TileClass, 6> a{TileClass::t1, TileClass::t2, TileClass::t3,
                                          TileClass::t4, TileClass::t5, TileClass::t6};
  return a;
}

inline std::string to_string(TileClass c) {
  switch (c) {
    case TileClass::t1: return "t1";
    case TileClass::t2: return "t2";
    case TileClass::t3: return "t3";
    case TileClass::t4: return "t4";
    case TileClass::t5: return "t5";
    case TileClass::t6: return "t6";
    case TileClass::Trapezoid111T: return "trapezoid_111tau";
    case TileClass::DegenerateOther: return "degenerate_other";
  }
  return "?";
}

inline TileClass parse_tile_class(const std::string& s) {
  for (TileClass c : fundamental_labels())
    if (to_string(c) == s) return c;
  if (s == "trapezoid_111tau") return TileClass::Trapezoid111T;
  if (s == "degenerate_other") return TileClass::DegenerateOther;
  throw std::invalid_argument("unknown tile label: " + s);
}

/// Volume of a fundamental tile: (1, tau, tau, tau^2, tau^2, tau^3) / 12.
inline GoldenScalar fundamental_volume(TileClass c) {
  static const std::array<unsigned, 6> powers{0, 1, 1, 2, 2, 3};
  auto i = static_cast<size_t>(c);
  if (i >= 6) throw std::invalid_argument("not a fundamental tile");
  return pow(tau(), powers[i]) * GoldenScalar::from_ratio(1, 12);
}

/// Triangular face census of a fundamental tile.
inline std::map<std::string, int> fundamental_face_census(TileClass c) {
  const std::string e1 = to_string(FaceShape::Equilateral1), et = to_string(FaceShape::EquilateralTau);
  const std::string r1 = to_string(FaceShape::Robinson11T), r2 = to_string(FaceShape::Robinson1TT);
  switch (c) {
    case TileClass::t1: return {{e1, 2}, {r1, 2}};
    case TileClass::t2: return {{e1, 1}, {r1, 2}, {r2, 1}};
    case TileClass::t3: return {{et, 1}, {r1, 3}};
    case TileClass::t4: return {{e1, 1}, {r2, 3}};
    case TileClass::t5: return {{et, 1}, {r1, 1}, {r2, 2}};
    case TileClass::t6: return {{et, 2}, {r2, 2}};
    default: throw std::invalid_argument("not a fundamental tile");
  }
}

/// Primary tile letters and Kramer letters.
inline std::pair<std::string, std::string> tile_letters(TileClass c) {
  switch (c) {
    case TileClass::t1: return {"B", "B*"};
    case TileClass::t2: return {"G", "D*"};
    case TileClass::t3: return {"E", "G*"};
    case TileClass::t4: return {"F", "F*"};
    case TileClass::t5: return {"C", "C*"};
    case TileClass::t6: return {"D", "A*"};
    default: throw std::invalid_argument("not a fundamental tile");
  }
}

inline std::map<std::string, int> triangle_census(const Tet& t) {
  std::map<std::string, int> out;
  static constexpr std::array<std::array<size_t, 3>, 4> kF{{{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}}};
  for (const auto& f : kF) ++out[to_string(classify_polygon({t[f[0]], t[f[1]], t[f[2]]}))];
  return out;
}

struct Classification {
  TileClass label = TileClass::DegenerateOther;
  /// Sign of the orientation determinant of the points as given (0 when flat).
  int handedness = 0;
};

/// Exact classification by volume, edge multiset and face census.
inline Classification classify_tetrahedron(const Tet& t) {
  Classification c;
  const GoldenScalar one = 1, t2 = tau() * tau();
  int ones = 0, taus = 0;
  std::array<std::array<bool, 4>, 4> unit{};
  for (size_t i = 0; i < 4; ++i) {
    for (size_t j = i + 1; j < 4; ++j) {
      GoldenScalar d = distance2(t[i], t[j]);
      if (d == one) {
        ++ones;
        unit[i][j] = unit[j][i] = true;
      } else if (d == t2) {
        ++taus;
      }
    }
  }
  GoldenScalar v6 = signed_volume6(t);
  c.handedness = v6.sign();
  if (ones + taus != 6) return c;
  if (v6.is_zero()) {
    // Isosceles trapezoid: the three unit edges form a path (the sides).
    if (ones != 3) return c;
    std::array<int, 4> deg{};
    for (size_t i = 0; i < 4; ++i)
      for (size_t j = 0; j < 4; ++j) deg[i] += unit[i][j] ? 1 : 0;
    std::array<int, 4> sorted = deg;
    std::sort(sorted.begin(), sorted.end());
    if (sorted == std::array<int, 4>{1, 1, 2, 2}) c.label = TileClass::Trapezoid111T;
    return c;
  }
  GoldenScalar vol = v6.abs() * GoldenScalar::from_ratio(1, 6);
  auto census = triangle_census(t);
  for (TileClass k : fundamental_labels()) {
    if (vol == fundamental_volume(k) && census == fundamental_face_census(k)) {
      c.label = k;
      return c;
    }
  }
  return c;
}

inline Tet project_facet(const DeloneCell& cell, const Facet& f) {
  if (f.vertices.size() != 4) throw std::invalid_argument("project_facet: not a 3-simplex");
  Tet t;
  for (size_t i = 0; i < 4; ++i) t[i] = project_par(cell.vertices[f.vertices[i]]);
  return t;
}

class CensusError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct LabeledFacet {
  Facet facet;
  Tet image;
  Classification cls;
};

inline std::vector<LabeledFacet> classify_cell_facets(const DeloneCell& cell) {
  std::vector<LabeledFacet> out;
  for (const auto& f : enumerate_3facets(cell)) out.push_back({f, project_facet(cell, f), classify_tetrahedron(project_facet(cell, f))});
  return out;
}

/// Census of projected 3-facets by class; any degenerate_other is fatal.
inline std::map<TileClass, long> delone_projection_census(const DeloneCell& cell) {
  std::map<TileClass, long> census;
  for (const auto& lf : classify_cell_facets(cell)) {
    if (lf.cls.label == TileClass::DegenerateOther) {
      std::string msg = "facet projects to an unrecognised shape:";
      for (size_t i : lf.facet.vertices) msg += " " + cell.vertices[i].to_string();
      throw CensusError(msg);
    }
    ++census[lf.cls.label];
  }
  return census;
}

// ---------------------------------------------------------------------------

struct HemicubeSplit {
  std::vector<Vector6> dodeca_20;
  std::vector<Vector6> icosa_12;
};

/// Splits the omega6 hemicube by projected length: the 20 longer images are
/// the dodecahedron vertices, the 12 shorter ones an icosahedron.
inline HemicubeSplit hemicube_vertex_split(const DeloneCell& cell) {
  if (cell.kind != CellKind::HemicubeEven) throw std::invalid_argument("hemicube_vertex_split expects the even hemicube");
  std::map<GoldenScalar, std::vector<Vector6>, StructuralLess> by_norm;
  for (const auto& v : cell.vertices) by_norm[norm2(project_par(v))].push_back(v);
  if (by_norm.size() != 2) throw std::logic_error("hemicube vertices do not split into two shells");
  auto a = by_norm.begin()->second, b = std::next(by_norm.begin())->second;
  if (by_norm.begin()->first > std::next(by_norm.begin())->first) std::swap(a, b);
  return {b, a};
}

// ---------------------------------------------------------------------------

struct SimplexDemo {
  size_t vertices = 0, edges = 0, faces = 0;
  std::vector<TileClass> content;
  std::vector<std::string> face_shapes;
  Hull hull;
};

enum class SimplexKind { Four, Five };

/// Hull of a projected 4- or 5-simplex and a dissection of it into projected
/// 3-faces of the simplex.
inline SimplexDemo project_simplex_demo(SimplexKind kind) {
  std::vector<GoldenVec3> pts;
  for (int i = 1; i <= 5; ++i) pts.push_back(projected_basis(i));
  if (kind == SimplexKind::Five) pts.push_back(projected_basis(-6));
  SimplexDemo d;
  d.hull = convex_hull(pts);
  d.vertices = d.hull.vertices.size();
  d.edges = d.hull.edge_count;
  d.faces = d.hull.faces.size();
  for (size_t f = 0; f < d.hull.faces.size(); ++f) {
    std::vector<GoldenVec3> c;
    for (size_t i : d.hull.faces[f].corners) c.push_back(pts[i]);
    d.face_shapes.push_back(to_string(classify_polygon(c)));
  }

  std::vector<Tet> cand;
  const size_t n = pts.size();
  for (size_t a = 0; a < n; ++a)
    for (size_t b = a + 1; b < n; ++b)
      for (size_t c = b + 1; c < n; ++c)
        for (size_t e = c + 1; e < n; ++e) {
          Tet t{pts[a], pts[b], pts[c], pts[e]};
          if (!signed_volume6(t).is_zero()) cand.push_back(t);
        }
  // Smallest set of pairwise disjoint facets whose volumes fill the hull.
  std::vector<size_t> chosen;
  std::vector<size_t> best;
  auto rec = [&](auto&& self, size_t start, GoldenScalar vol) -> void {
    if (vol == d.hull.volume) {
      if (best.empty() || chosen.size() < best.size()) best = chosen;
      return;
    }
    if (vol > d.hull.volume) return;
    for (size_t i = start; i < cand.size(); ++i) {
      bool ok = std::none_of(chosen.begin(), chosen.end(), [&](size_t j) { return interiors_overlap(cand[i], cand[j]); });
      if (!ok) continue;
      chosen.push_back(i);
      self(self, i + 1, vol + tet_volume(cand[i]));
      chosen.pop_back();
    }
  };
  rec(rec, 0, GoldenScalar(0));
  for (size_t i : best) d.content.push_back(classify_tetrahedron(cand[i]).label);
  std::sort(d.content.begin(), d.content.end());
  return d;
}

}  // namespace mstiler
