// Reference audits run by `mstiler verify --all`.
#pragma once

#include "mstiler/dissections.hpp"
#include "mstiler/lattice.hpp"
#include "mstiler/reduction.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace mstiler {

struct AuditResult {
  int id = 0;
  std::string title;
  bool pass = true;
  std::vector<std::string> failures;
  std::vector<std::string> notes;
  double seconds = 0;

  void check(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      failures.push_back(what);
    }
  }
  void note(const std::string& s) { notes.push_back(s); }
  std::string summary() const {
    std::string s;
    for (const auto& f : failures) s += (s.empty() ? "" : "; ") + f;
    if (s.empty())
      for (const auto& n : notes) s += (s.empty() ? "" : "; ") + n;
    return s;
  }
};

namespace audit_detail {

inline std::string census_string(const std::map<TileClass, long>& c) {
  std::string s;
  for (const auto& [k, v] : c) s += (s.empty() ? "" : " ") + to_string(k) + "=" + std::to_string(v);
  return s;
}

inline std::string counts_string(const std::array<long, 6>& n) {
  std::string s = "(";
  for (size_t i = 0; i < 6; ++i) s += (i ? "," : "") + std::to_string(n[i]);
  return s + ")";
}

inline MixedCount mixed(std::initializer_list<std::tuple<Kind, unsigned, long>> items) {
  MixedCount m;
  for (const auto& [k, n, c] : items) m.add({k, n}, c);
  return m;
}

inline GoldenScalar g(long r, long t = 0, long den = 1) {
  return GoldenScalar(Rational(r, den), Rational(t, den));
}

inline TileCountVector tvec(Basis b, std::vector<long> c) { return {b, std::vector<Integer>(c.begin(), c.end())}; }

}  // namespace audit_detail

inline AuditResult audit_facet_counting() {
  using namespace audit_detail;
  AuditResult r{1, "facet counting"};
  const std::array<long, 6> hemi{32, 240, 640, 640, 252, 44}, cross{12, 60, 160, 240, 192, 64};
  for (auto [kind, want] : {std::pair{CellKind::HemicubeEven, hemi}, std::pair{CellKind::HemicubeOdd, hemi},
                            std::pair{CellKind::CrossPolytope, cross}}) {
    const DeloneCell cell = delone_cell(kind);
    const std::string name = to_string(kind);
    try {
      FacetCounts fc = facet_counts(cell);
      r.check(fc.n == want, name + " counts " + counts_string(fc.n) + " expected " + counts_string(want));
      r.check(fc.euler() == 0, name + " alternating sum " + std::to_string(fc.euler()));
      for (int k = 0; k <= 3; ++k) {
        long e = static_cast<long>(enumerate_faces(cell, k).size());
        r.check(e == fc.n[static_cast<size_t>(k)], name + " enumeration at k=" + std::to_string(k) + " gives " + std::to_string(e));
      }
      r.note(name + " " + counts_string(fc.n));
    } catch (const std::exception& e) {
      r.check(false, name + ": " + e.what());
    }
  }
  return r;
}

inline AuditResult audit_projection_census() {
  using namespace audit_detail;
  AuditResult r{2, "projection census"};
  try {
    auto c = delone_projection_census(delone_cell(CellKind::CrossPolytope));
    const std::set<TileClass> allowed{TileClass::t1, TileClass::t2, TileClass::t5, TileClass::t6, TileClass::Trapezoid111T};
    long total = 0;
    for (const auto& [k, v] : c) {
      total += v;
      r.check(allowed.count(k) == 1, "cross polytope image of class " + to_string(k));
    }
    r.check(total == 240, "cross polytope total " + std::to_string(total));
    r.note("cross: " + census_string(c));
  } catch (const std::exception& e) {
    r.check(false, std::string("cross polytope: ") + e.what());
  }
  const std::set<TileClass> six(fundamental_labels().begin(), fundamental_labels().end());
  for (CellKind kind : {CellKind::HemicubeEven, CellKind::HemicubeOdd}) {
    const std::string name = to_string(kind);
    try {
      auto c = delone_projection_census(delone_cell(kind));
      long total = 0;
      std::set<TileClass> keys;
      for (const auto& [k, v] : c) {
        total += v;
        keys.insert(k);
      }
      r.check(total == 640, name + " total " + std::to_string(total));
      r.check(keys == six, name + " images are not exactly {t1..t6}: " + census_string(c));
      r.note(name + ": " + census_string(c));
    } catch (const std::exception& e) {
      r.check(false, name + ": " + e.what());
    }
  }
  return r;
}

inline AuditResult audit_tile_atlas() {
  AuditResult r{3, "tile atlas"};
  static const std::array<unsigned, 6> powers{0, 1, 1, 2, 2, 3};
  size_t faces = 0;
  for (size_t i = 0; i < 6; ++i) {
    TileClass t = fundamental_labels()[i];
    Tet tet = canonical_tile(t);
    const std::string n = to_string(t);
    r.check(tet_volume(tet) == pow(tau(), powers[i]) * GoldenScalar::from_ratio(1, 12), n + " volume");
    r.check(fundamental_volume(t) == tet_volume(tet), n + " stored volume");
    r.check(triangle_census(tet) == fundamental_face_census(t), n + " face census");
    auto fa = face_axis_check(tet_faces(tet));
    r.check(fa.exceptions == 0, n + " has " + std::to_string(fa.exceptions) + " faces off their axis class");
    faces += fa.faces.size();
  }
  for (CompositeLabel l : {CompositeLabel::T1, CompositeLabel::T2, CompositeLabel::T3, CompositeLabel::T4}) {
    const std::string n = to_string(l);
    try {
      CompositeTile c = assemble(l);
      CompositeSpec s = composite_reference(l);
      const auto& b = c.boundary;
      r.check(b.n0 == s.n0 && b.n1 == s.n1 && b.n2 == s.n2,
              n + " (N0,N1,N2) = (" + std::to_string(b.n0) + "," + std::to_string(b.n1) + "," + std::to_string(b.n2) + ")");
      r.check(face_census(b) == s.faces, n + " face census");
      r.check(c.volume == s.volume, n + " volume " + to_decimal(c.volume, 8));
      auto fa = face_axis_check(b.faces);
      r.check(fa.exceptions == 0, n + " has " + std::to_string(fa.exceptions) + " faces off their axis class");
      faces += fa.faces.size();
    } catch (const std::exception& e) {
      r.check(false, n + ": " + e.what());
    }
  }
  r.note(std::to_string(faces) + " face normals checked, 0 exceptions");
  return r;
}

inline AuditResult audit_eigen() {
  using namespace audit_detail;
  AuditResult r{4, "eigen-analysis"};
  const std::array<Integer, 5> want{1, -5, 2, 5, 1};
  PFData m = pf_analysis(Basis::T), mh = pf_analysis(Basis::That);
  r.check(m.charpoly == want, "charpoly(M)");
  r.check(mh.charpoly == want, "charpoly(M-hat)");
  const std::array<double, 4> right{0.3820, 0.1180, 0.2639, 0.2361}, left{0.1338, 0.4331, 0.2677, 0.1654};
  for (size_t i = 0; i < 4; ++i) {
    r.check(std::fabs(m.right[i].to_double() - right[i]) < 1e-4, "right PF component " + std::to_string(i + 1));
    r.check(std::fabs(m.left[i].to_double() - left[i]) < 1e-4, "left PF component " + std::to_string(i + 1));
  }
  const GoldenScalar s = sigma(), t = tau();
  const std::vector<GoldenScalar> hr{g(1, 0, 2), s * s * g(1, 0, 4), (g(-1) - GoldenScalar(3) * s) * g(1, 0, 4), s * s * g(1, 0, 2)};
  const std::vector<GoldenScalar> hl{(GoldenScalar(4) * t).inverse(), g(1, 0, 2), (GoldenScalar(2) * t).inverse(),
                                     (GoldenScalar(4) * pow(t, 4)).inverse()};
  r.check(mh.right[0] == g(1, 0, 2), "M-hat right PF first component is " + to_decimal(mh.right[0], 10));
  r.check(mh.right == hr, "M-hat right PF vector");
  r.check(mh.left == hl, "M-hat left PF vector");

  const GoldenScalar r5 = GoldenScalar(2) * t - 1;
  const GoldenScalar thirtieth = g(1, 0, 30);
  const GoldenScalar tp2 = t + 2, sp2 = s + 2;
  const std::array<std::array<GoldenScalar, 4>, 4> eq{{
      {GoldenScalar(2) * tp2, GoldenScalar(4) * (GoldenScalar(3) * t + 1), GoldenScalar(4) * tp2, GoldenScalar(4) * r5},
      {r5, GoldenScalar(2) * tp2, GoldenScalar(2) * r5, GoldenScalar(2) * sp2},
      {GoldenScalar(5), GoldenScalar(10) * t, GoldenScalar(10), GoldenScalar(-10) * s},
      {GoldenScalar(2) * r5, GoldenScalar(4) * tp2, GoldenScalar(4) * r5, GoldenScalar(4) * sp2},
  }};
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = 0; j < 4; ++j)
      r.check(m.projection[i][j] == eq[i][j] * thirtieth, "P entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
  r.check(multiply(m.projection, m.projection) == m.projection, "P^2 != P");
  r.note("convergence error n=12: " + std::to_string(pf_convergence_error(Basis::T, 12)) +
         ", n=15: " + std::to_string(pf_convergence_error(Basis::T, 15)));
  return r;
}

inline AuditResult audit_reduction() {
  using namespace audit_detail;
  AuditResult r{5, "reduction engine"};
  using K = Kind;
  Reducer fresh;
  auto keep = [&](Kind k, unsigned n) { return fresh.reduce(mixed({{k, n, 1}}), NormalForm::Keep); };
  auto flat = [&](unsigned n) { return fresh.reduce(mixed({{K::D, n, 1}}), NormalForm::Flatten); };

  const std::vector<std::pair<Term, MixedCount>> keep_cases{
      {{K::T1, 2}, mixed({{K::D, 0, 1}, {K::T2, 1, 2}, {K::T3, 1, 1}, {K::T4, 1, 1}, {K::T2, 0, 1}, {K::T3, 0, 4}})},
      {{K::T2, 3}, mixed({{K::D, 0, 1}, {K::T2, 2, 2}, {K::T2, 0, 5}, {K::T3, 0, 6}})},
      {{K::T3, 2}, mixed({{K::D, 0, 1}, {K::T2, 0, 5}, {K::T3, 0, 6}})},
      {{K::T4, 2}, mixed({{K::D, 0, 1}, {K::T2, 0, 3}, {K::T3, 0, 5}})},
      {{K::T2, 4}, mixed({{K::D, 0, 2}, {K::D, 1, 1}, {K::T2, 2, 4}, {K::T2, 1, 5}, {K::T3, 1, 6}, {K::T2, 0, 10}, {K::T3, 0, 12}})},
      {{K::T1, 4}, mixed({{K::D, 0, 13}, {K::D, 1, 2}, {K::T2, 2, 9}, {K::T2, 1, 14}, {K::T3, 1, 14}, {K::T4, 1, 3},
                          {K::T2, 0, 45}, {K::T3, 0, 68}})},
      {{K::T3, 4}, mixed({{K::D, 0, 13}, {K::T2, 2, 9}, {K::T2, 1, 6}, {K::T3, 1, 3}, {K::T4, 1, 3}, {K::T2, 0, 45}, {K::T3, 0, 68}})},
      {{K::T4, 4}, mixed({{K::D, 0, 12}, {K::T2, 2, 7}, {K::T2, 1, 6}, {K::T3, 1, 3}, {K::T4, 1, 3}, {K::T2, 0, 40}, {K::T3, 0, 62}})},
  };
  const auto start = std::chrono::steady_clock::now();
  for (const auto& [term, want] : keep_cases) {
    MixedCount got = keep(term.first, term.second);
    r.check(got == want, to_string(term.first) + "^(" + std::to_string(term.second) + ") keep form: " + got.to_string());
  }
  const std::vector<std::tuple<unsigned, std::array<long, 6>>> flat_cases{
      {3, {10, 7, 46, 222, 146, 46}},
      {4, {95, 10, 170, 1110, 898, 170}},
      {5, {240, 95, 828, 4446, 3078, 828}},
      {10, {432139, 92850, 1064050, 6341550, 4720730, 1064050}},
  };
  for (const auto& [n, w] : flat_cases) {
    MixedCount want = mixed({{K::D, 0, w[0]}, {K::D, 1, w[1]}, {K::T1, 0, w[2]}, {K::T2, 0, w[3]}, {K::T3, 0, w[4]}, {K::T4, 0, w[5]}});
    MixedCount got = flat(n);
    r.check(got == want, "d(tau^" + std::to_string(n) + ") flatten form: " + got.to_string());
  }
  MixedCount two = flat(2);
  r.check(two.count(K::D, 0) == 7 && two.count(K::D, 1) == 0, "d(tau^2) holds " + two.count(K::D, 0).get_str() + " d(1)");
  r.check(flat(0) == mixed({{K::D, 0, 1}}), "d(1) is not terminal");
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.check(secs < 1.0, "reduction took " + std::to_string(secs) + " s");
  r.note("d(tau^2) = " + two.to_string());
  return r;
}

inline AuditResult audit_volumes() {
  using namespace audit_detail;
  AuditResult r{6, "volume audits"};
  const GoldenScalar t = tau(), t3 = pow(t, 3);
  const GoldenScalar vd1 = (GoldenScalar(7) * t + 4) * g(1, 0, 2);
  const GoldenScalar vid1 = (GoldenScalar(17) * t + 14) * g(1, 0, 3);
  const GoldenScalar vi1 = GoldenScalar(5) * t * t * g(1, 0, 6);
  r.check(named_volume("d(1)") == vd1, "vol d(1) from content");
  r.check(named_composite_content("d(1)", Basis::T).volume() == vd1, "vol d(1) from 3T1+4T2+4T4");
  r.check(named_volume("id(1)") == vid1, "vol id(1)");
  r.check(named_volume("i(1)") == vi1, "vol i(1)");
  r.check(named_volume("d(tau)") == t3 * vd1, "vol d(tau)");
  r.check(named_volume("i(tau)") == t3 * vi1, "vol i(tau)");
  r.check(named_volume("id(tau)") == t3 * vid1, "vol id(tau)");

  size_t audited = 0;
  for (NormalForm mode : {NormalForm::Keep, NormalForm::Flatten}) {
    for (unsigned n = 0; n <= 10; ++n) {
      VolumeAudit va = volume_audit(reduce(mixed({{Kind::D, n, 1}}), mode), n);
      r.check(va.pass, "d(tau^" + std::to_string(n) + ") " + to_string(mode) + " off by " + to_decimal(va.discrepancy, 8));
      ++audited;
      for (Kind k : {Kind::T1, Kind::T2, Kind::T3, Kind::T4}) {
        MixedCount in = mixed({{k, n, 1}});
        r.check(reduce(in, mode).volume() == in.volume(), to_string(k) + "^(" + std::to_string(n) + ") " + to_string(mode));
        ++audited;
      }
    }
  }
  for (Basis b : {Basis::T, Basis::That}) {
    IntMatrix4 m = inflation_matrix(b);
    for (size_t i = 0; i < 4; ++i) {
      TileCountVector row{b, {m[i][0], m[i][1], m[i][2], m[i][3]}};
      r.check(row.volume() == t3 * basis_volume(b, i), to_string(b) + " inflation row " + std::to_string(i + 1));
    }
  }
  r.check(tvec(Basis::T, {0, 2, 1, 1}).volume() == t3 * composite_reference(CompositeLabel::E).volume, "tau E");
  r.check(tvec(Basis::T, {1, 0, 1, 1}).volume() == t3 * composite_reference(CompositeLabel::C).volume, "tau C");
  for (const char* l : {"t1", "t2", "t4", "T3"}) {
    try {
      (void)fundamental_inflation(l);
    } catch (const std::exception& e) {
      r.check(false, e.what());
    }
  }
  TileCountVector c5 = 20 * fundamental_inflation("t4") + 12 * fundamental_inflation("T3");
  r.check(c5.volume() == t3 * vid1, "tau id(1) as 20 tau t4 + 12 tau T3");
  r.check(tvec(Basis::Fundamental, {12, 44, 36, 68, 56, 56}).volume() == t3 * vid1, "id(tau) content");
  r.note(std::to_string(audited) + " reduce outputs audited");
  return r;
}

inline AuditResult audit_dissections() {
  using namespace audit_detail;
  AuditResult r{7, "dissection builders"};
  const auto start = std::chrono::steady_clock::now();
  for (const auto& name : build_names()) {
    try {
      Assembly a = build(name);
      VerifyReport v = verify_assembly(a);
      r.check(v.ok(), name + ": " + v.first_failure());
      r.note(name + " " + std::to_string(a.tets.size()) + " tets");
      if (name == "icosa") r.check(a.fundamental_content() == fundamental({7, 6, 0, 0, 2, 1}), "icosa content");
      if (name == "d1-3fold" || name == "d1-5fold") {
        r.check(a.composite_content() == named_composite_content("d(1)", Basis::T), name + " content " + a.composite_content().to_string());
      }
      if (name == "d1-5fold") {
        GoldenScalar v0 = cluster_volume(a, 0), v1 = cluster_volume(a, 1);
        r.check(v0 == GoldenScalar(2) * v1, "frustum volumes " + to_decimal(v0, 8) + " and " + to_decimal(v1, 8));
      }
      if (name == "id1") r.check(a.fundamental_content() == fundamental({0, 0, 0, 20, 24, 12}), "id1 content");
      if (name == "dtau") {
        r.check(a.composite_content() == named_composite_content("d(tau)", Basis::T), "dtau content " + a.composite_content().to_string());
        r.check(a.fundamental_content() == named_content("d(tau)"), "dtau fundamental content");
      }
    } catch (const std::exception& e) {
      r.check(false, name + ": " + e.what());
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.check(secs < 120.0, "builds took " + std::to_string(secs) + " s");
  return r;
}

inline AuditResult audit_symmetry() {
  AuditResult r{8, "three-fold symmetry"};
  try {
    GoldenMat3 g = threefold_element();
    r.check(g.determinant() == GoldenScalar(1) && g * g * g == GoldenMat3::identity() && !(g == GoldenMat3::identity()),
            "element is not a rotation of order 3");
    for (const char* n : {"Y5", "-Y5"}) r.check(g * vertex(n) == vertex(n), std::string(n) + " moves");
    r.check(g * vertex("a") == vertex("b") && g * vertex("b") == vertex("c") && g * vertex("c") == vertex("a"), "a, b, c not cycled");
    Assembly a = build_d1_threefold();
    SymmetryReport s = symmetry_check(a, g);
    r.check(s.cluster_image.size() == 4, "expected four clusters");
    if (s.cluster_image.size() == 4) {
      std::set<size_t> images;
      for (size_t c = 0; c < 3; ++c) {
        auto im = s.cluster_image[c];
        r.check(im && *im < 3 && *im != c, "cluster " + std::to_string(c) + " is not moved to another T1+T4+T2 cluster");
        if (im) images.insert(*im);
      }
      r.check(images.size() == 3, "T1+T4+T2 clusters are not permuted");
      r.check(s.cluster_image[3] && *s.cluster_image[3] == 3, "T2+T4 cluster is not fixed");
    }
    size_t mapped = 0;
    for (const auto& b : s.block_union_image) mapped += b.has_value();
    r.note(std::to_string(mapped) + "/" + std::to_string(s.block_union_image.size()) + " blocks map onto blocks");
  } catch (const std::exception& e) {
    r.check(false, e.what());
  }
  return r;
}

inline AuditResult audit_content() {
  using namespace audit_detail;
  AuditResult r{9, "content identities"};
  try {
    TileCountVector itau = 7 * fundamental_inflation("t1") + 6 * fundamental_inflation("t2") + fundamental_inflation("T3");
    r.check(itau == fundamental({1, 8, 10, 10, 16, 3}), "i(tau) expansion " + itau.to_string());
    TileCountVector idtau = 20 * fundamental_inflation("t4") + 12 * fundamental_inflation("T3");
    r.check(idtau == fundamental({12, 44, 36, 68, 56, 56}), "id(tau) expansion " + idtau.to_string());
    TileCountVector d1 = that_to_t(tvec(Basis::That, {3, 4, 0, 1}));
    r.check(d1 == tvec(Basis::T, {3, 4, 0, 4}), "3T1hat+4T2+T4 gives " + d1.to_string());
    TileCountVector dt = that_to_t(tvec(Basis::That, {7, 18, 14, 3}));
    r.check(dt == tvec(Basis::T, {7, 18, 14, 10}), "7T1hat+18T2+14T3+3T4 gives " + dt.to_string());
    TileCountVector inf = inflate_counts(tvec(Basis::T, {3, 4, 0, 4}), 1);
    r.check(inf == tvec(Basis::T, {7, 18, 14, 10}), "tau d(1) gives " + inf.to_string());
    TileCountVector infh = inflate_counts(tvec(Basis::That, {3, 4, 0, 1}), 1);
    r.check(infh == tvec(Basis::That, {7, 18, 14, 3}), "tau d(1) over T-hat gives " + infh.to_string());
    for (const auto& n : named_solids()) (void)named_content(n);
  } catch (const std::exception& e) {
    r.check(false, e.what());
  }
  return r;
}

inline const std::vector<std::function<AuditResult()>>& audits() {
  static const std::vector<std::function<AuditResult()>> a{audit_facet_counting, audit_projection_census, audit_tile_atlas,
                                                          audit_eigen,          audit_reduction,         audit_volumes,
                                                          audit_dissections,    audit_symmetry,          audit_content};
  return a;
}

inline AuditResult run_audit(size_t i) {
  const auto start = std::chrono::steady_clock::now();
  AuditResult r;
  try {
    r = audits().at(i)();
  } catch (const std::exception& e) {
    r.id = static_cast<int>(i + 1);
    r.check(false, e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace mstiler
