// mstiler: command-line front end.
#include "mstiler/audit.hpp"
#include "mstiler/mesh.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

using json = nlohmann::json;
using namespace mstiler;

namespace {

constexpr int kBadArguments = 2;
constexpr int kAuditFailure = 1;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Integers that fit in 64 bits are JSON numbers, larger ones decimal strings.
json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

json golden_json(const GoldenScalar& x) {
  return {{"r", rational_string(x.rational_part())}, {"t", rational_string(x.tau_part())}};
}

json vec_json(const GoldenVec3& v) { return json::array({golden_json(v.x), golden_json(v.y), golden_json(v.z)}); }

json counts_json(const TileCountVector& v) {
  json j = json::object();
  auto names = basis_names(v.basis);
  for (size_t i = 0; i < v.counts.size(); ++i) j[names[i]] = integer_json(v.counts[i]);
  return j;
}

template <class Map>
json census_json(const Map& m) {
  json j = json::object();
  for (const auto& [k, v] : m) {
    if constexpr (std::is_same_v<typename Map::key_type, std::string>) j[k] = v;
    else j[to_string(k)] = v;
  }
  return j;
}

std::string render(const json& j) { return j.dump(2) + "\n"; }

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  f << text;
  if (!f) throw std::runtime_error("write to " + path + " failed");
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) std::cout << text;
  else write_file(out, text);
}

std::string pad(const std::string& s, size_t w) { return s.size() >= w ? s : s + std::string(w - s.size(), ' '); }

std::string ends_with_any(const std::string& path, std::initializer_list<const char*> exts) {
  for (const char* e : exts) {
    std::string x(e);
    if (path.size() >= x.size() && path.compare(path.size() - x.size(), x.size(), x) == 0) return x;
  }
  return "";
}

// ---------------------------------------------------------------------------

int cmd_lattice(const std::string& cell_name, const std::string& report, const std::string& format, const std::string& out) {
  DeloneCell cell = delone_cell(parse_cell_kind(cell_name));
  FacetCounts fc = facet_counts(cell);
  json j{{"cell", cell_name}, {"N", fc.n}, {"euler", fc.euler()}, {"group_order", PointGroup::kOrder}};
  json terms = json::array();
  for (const auto& t : fc.terms) terms.push_back(t);
  j["coset_terms"] = terms;
  if (report == "facets") {
    json facets = json::array();
    for (const auto& f : enumerate_3facets(cell)) {
      json row = json::array();
      for (size_t i : f.vertices) row.push_back(cell.vertices[i].to_string());
      facets.push_back(row);
    }
    j["facets"] = facets;
  }
  if (format == "table") {
    std::ostringstream os;
    os << "cell " << cell_name << "\n";
    for (size_t k = 0; k < 6; ++k) os << "N" << k << " = " << fc.n[k] << "\n";
    os << "euler = " << fc.euler() << "\n";
    emit(os.str(), out);
  } else {
    emit(render(j), out);
  }
  return 0;
}

int cmd_project(const std::string& cell_name, const std::string& format, const std::string& out, const std::string& dump) {
  DeloneCell cell = delone_cell(parse_cell_kind(cell_name));
  auto census = delone_projection_census(cell);
  long total = 0;
  for (const auto& [k, v] : census) total += v;
  if (!dump.empty()) {
    json tets = json::array();
    for (const auto& lf : classify_cell_facets(cell)) {
      json src = json::array(), img = json::array();
      for (size_t i : lf.facet.vertices) src.push_back(cell.vertices[i].to_string());
      for (const auto& p : lf.image) img.push_back(vec_json(p));
      tets.push_back({{"facet", src}, {"image", img}, {"label", to_string(lf.cls.label)}, {"handedness", lf.cls.handedness}});
    }
    write_file(dump, render(json{{"cell", cell_name}, {"tets", tets}}));
  }
  if (format == "table") {
    std::ostringstream os;
    for (const auto& [k, v] : census) os << pad(to_string(k), 18) << v << "\n";
    os << pad("total", 18) << total << "\n";
    emit(os.str(), out);
  } else {
    emit(render({{"cell", cell_name}, {"census", census_json(census)}, {"total", total}}), out);
  }
  return 0;
}

int cmd_tiles(const std::string& format, const std::string& out) {
  json fund = json::array(), comp = json::array();
  std::ostringstream table;
  table << pad("tile", 8) << pad("volume", 22) << "faces\n";
  for (TileClass t : fundamental_labels()) {
    Tet tet = canonical_tile(t);
    auto fa = face_axis_check(tet_faces(tet));
    json axes = json::array();
    for (const auto& f : fa.faces) axes.push_back({{"shape", f.shape}, {"axis", to_string(f.axis)}});
    auto [ms, kr] = tile_letters(t);
    json v = json::array();
    for (const auto& p : tet) v.push_back(vec_json(p));
    fund.push_back({{"label", to_string(t)},
                    {"letters", {{"primary", ms}, {"kramer", kr}}},
                    {"volume", golden_json(fundamental_volume(t))},
                    {"faces", census_json(fundamental_face_census(t))},
                    {"face_normals", axes},
                    {"vertices", v}});
    std::string faces;
    for (const auto& [s, n] : fundamental_face_census(t)) faces += std::to_string(n) + " " + s + "  ";
    table << pad(to_string(t), 8) << pad(to_decimal(fundamental_volume(t), 10), 22) << faces << "\n";
  }
  table << "\n" << pad("tile", 8) << pad("N0 N1 N2", 12) << pad("volume", 22) << "faces\n";
  for (CompositeLabel l : composite_labels()) {
    CompositeTile c = assemble(l);
    auto fa = face_axis_check(c.boundary.faces);
    std::map<std::string, int> parts;
    for (const auto& p : c.parts) ++parts[to_string(p.label)];
    comp.push_back({{"label", to_string(l)},
                    {"N", {c.boundary.n0, c.boundary.n1, c.boundary.n2}},
                    {"faces", census_json(face_census(c.boundary))},
                    {"volume", golden_json(c.volume)},
                    {"parts", census_json(parts)},
                    {"face_axis_exceptions", fa.exceptions}});
    std::string faces;
    for (const auto& [s, n] : face_census(c.boundary)) faces += std::to_string(n) + " " + s + "  ";
    table << pad(to_string(l), 8)
          << pad(std::to_string(c.boundary.n0) + " " + std::to_string(c.boundary.n1) + " " + std::to_string(c.boundary.n2), 12)
          << pad(to_decimal(c.volume, 10), 22) << faces << "\n";
  }
  if (format == "table") emit(table.str(), out);
  else emit(render({{"fundamental", fund}, {"composite", comp}}), out);
  return 0;
}

std::vector<Integer> parse_vector(const std::string& s) {
  std::vector<Integer> v;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    Integer z;
    if (tok.empty() || z.set_str(tok, 10) != 0 || sgn(z) < 0) throw UsageError("bad vector entry: '" + tok + "'");
    v.push_back(z);
  }
  if (v.size() != 4) throw UsageError("--vector needs four comma-separated counts");
  return v;
}

int cmd_inflate(const std::string& matrix, unsigned power, const std::string& vector, const std::string& format,
                const std::string& out) {
  Basis b = matrix == "M" ? Basis::T : Basis::That;
  IntMatrix4 p = matrix_power(inflation_matrix(b), power);
  json rows = json::array();
  for (const auto& row : p) {
    json r = json::array();
    for (const auto& x : row) r.push_back(integer_json(x));
    rows.push_back(r);
  }
  json j{{"matrix", matrix}, {"power", power}, {"basis", basis_names(b)}, {"matrix_power", rows}};
  std::ostringstream table;
  for (const auto& row : p) {
    for (const auto& x : row) table << std::setw(14) << x.get_str();
    table << "\n";
  }
  if (!vector.empty()) {
    TileCountVector v{b, parse_vector(vector)};
    TileCountVector r = inflate_counts(v, power);
    json counts = json::array(), freq = json::array();
    Integer total = 0;
    for (const auto& c : r.counts) total += c;
    for (const auto& c : r.counts) {
      counts.push_back(integer_json(c));
      freq.push_back(sgn(total) == 0 ? 0.0 : Rational(c, total).get_d());
    }
    j["vector"] = {{"input", counts_json(v)}, {"counts", counts}, {"frequencies", freq}, {"volume", golden_json(r.volume())}};
    table << "\n" << r.to_string() << "\n";
  }
  emit(format == "table" ? table.str() : render(j), out);
  return 0;
}

int cmd_reduce(unsigned order, const std::string& nf, const std::string& format, const std::string& out) {
  MixedCount in;
  in.add({Kind::D, order}, 1);
  MixedCount r = reduce(in, parse_normal_form(nf));
  VolumeAudit va = volume_audit(r, order);
  json residual = json::array();
  for (const auto& [t, c] : r.terms) {
    if (t.first == Kind::D) continue;
    residual.push_back({{"tile", to_string(t.first)}, {"order", t.second}, {"count", integer_json(c)}});
  }
  if (format == "table") {
    std::ostringstream os;
    os << "d(tau^" << order << ") [" << nf << "]\n";
    os << pad("d(1)", 12) << r.count(Kind::D, 0).get_str() << "\n";
    os << pad("d(tau)", 12) << r.count(Kind::D, 1).get_str() << "\n";
    for (const auto& [t, c] : r.terms) {
      if (t.first == Kind::D) continue;
      std::string name = to_string(t.first) + (t.second ? "^(" + std::to_string(t.second) + ")" : "");
      os << pad(name, 12) << c.get_str() << "\n";
    }
    os << pad("volume", 12) << to_decimal(r.volume(), 15) << "\n";
    os << pad("audit", 12) << (va.pass ? "pass" : "fail") << "\n";
    emit(os.str(), out);
  } else {
    emit(render({{"order", order},
                 {"normal_form", nf},
                 {"d1", integer_json(r.count(Kind::D, 0))},
                 {"dtau", integer_json(r.count(Kind::D, 1))},
                 {"residual", residual},
                 {"volume", golden_json(r.volume())},
                 {"volume_audit", va.pass ? "pass" : "fail"}}),
         out);
  }
  return va.pass ? 0 : kAuditFailure;
}

json report_json(const VerifyReport& v) {
  json checks = json::array();
  for (const auto& c : v.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return {{"checks", checks},
          {"pass", v.ok()},
          {"hull", {{"V", v.hull_vertices}, {"E", v.hull_edges}, {"F", v.hull_faces}, {"faces", census_json(v.hull_face_census)}}},
          {"exposed_faces", census_json(v.exposed_face_census)},
          {"volume", golden_json(v.volume)}};
}

json assembly_json(const Assembly& a, bool with_tets) {
  json j{{"name", a.name},
         {"tet_count", a.tets.size()},
         {"fundamental_content", counts_json(a.fundamental_content())},
         {"composite_content", counts_json(a.composite_content())},
         {"blocks", census_json(a.block_census())},
         {"expected_volume", golden_json(a.expected_volume)}};
  if (with_tets) {
    json tets = json::array(), blocks = json::array();
    for (const auto& t : a.tets) {
      json v = json::array();
      for (const auto& p : t.vertices) v.push_back(vec_json(p));
      tets.push_back({{"label", to_string(t.label)}, {"vertices", v}});
    }
    for (const auto& b : a.blocks) blocks.push_back({{"label", b.label}, {"members", b.members}, {"cluster", b.cluster}});
    j["tets"] = tets;
    j["block_list"] = blocks;
    j["clusters"] = a.cluster_labels;
  }
  return j;
}

// Writes a mesh or JSON dump; meshes require a passing verification unless forced.
int write_assembly(const Assembly& a, const std::string& path, const ExportOptions& opt, bool force, const VerifyReport* known) {
  std::string ext = ends_with_any(path, {".off", ".obj", ".json"});
  if (ext.empty()) throw UsageError("output must end in .off, .obj or .json: " + path);
  if (ext == ".json") {
    write_file(path, render(assembly_json(a, true)));
    return 0;
  }
  if (!force) {
    VerifyReport v = known ? *known : verify_assembly(a);
    if (!v.ok()) {
      std::cerr << "mstiler: " << a.name << " failed verification (" << v.first_failure() << "); use --force to export anyway\n";
      return kAuditFailure;
    }
  }
  write_file(path, ext == ".off" ? export_off(a, opt) : export_obj(a, opt));
  return 0;
}

int cmd_build(const std::string& name, bool verify, const std::string& out, const ExportOptions& opt, bool force,
              const std::string& format) {
  Assembly a = build(name);
  json j = assembly_json(a, false);
  std::optional<VerifyReport> v;
  if (verify) {
    v = verify_assembly(a);
    j["verify"] = report_json(*v);
  }
  if (format == "table") {
    std::cout << name << ": " << a.tets.size() << " tets, " << a.fundamental_content().to_string() << "\n";
    if (v)
      for (const auto& c : v->checks) std::cout << "  " << pad(c.name, 14) << (c.pass ? "pass" : "FAIL") << "  " << c.detail << "\n";
  } else {
    std::cout << render(j);
  }
  int rc = 0;
  if (!out.empty()) rc = write_assembly(a, out, opt, force, v ? &*v : nullptr);
  if (v && !v->ok()) {
    std::cerr << "mstiler: verification of " << name << " failed: " << v->first_failure() << "\n";
    return kAuditFailure;
  }
  return rc;
}

int cmd_export(const std::string& name, const std::string& out, const ExportOptions& opt, bool force, const std::string& mesh) {
  Assembly a = build(name);
  if (!out.empty()) return write_assembly(a, out, opt, force, nullptr);
  if (!force) {
    VerifyReport v = verify_assembly(a);
    if (!v.ok()) {
      std::cerr << "mstiler: " << name << " failed verification (" << v.first_failure() << "); use --force to export anyway\n";
      return kAuditFailure;
    }
  }
  std::cout << (mesh == "obj" ? export_obj(a, opt) : export_off(a, opt));
  return 0;
}

int cmd_verify(const std::vector<int>& only, const std::string& format, const std::string& out, bool timing) {
  std::vector<int> ids = only;
  if (ids.empty())
    for (size_t i = 0; i < audits().size(); ++i) ids.push_back(static_cast<int>(i + 1));
  json results = json::array();
  std::ostringstream table;
  bool all = true;
  for (int id : ids) {
    if (id < 1 || static_cast<size_t>(id) > audits().size()) throw UsageError("no audit " + std::to_string(id));
    AuditResult r = run_audit(static_cast<size_t>(id - 1));
    all = all && r.pass;
    results.push_back({{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"failures", r.failures}, {"notes", r.notes}});
    table << "[" << (r.pass ? "PASS" : "FAIL") << "] " << r.id << " " << r.title << ": " << r.summary() << "\n";
    if (timing) std::cerr << "audit " << r.id << ": " << std::fixed << std::setprecision(3) << r.seconds << " s\n";
    if (!r.pass) std::cerr << "mstiler: audit " << r.id << " (" << r.title << ") failed: " << r.failures.front() << "\n";
  }
  emit(format == "table" ? table.str() : render({{"audits", results}, {"pass", all}}), out);
  return all ? 0 : kAuditFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact icosahedral tiling from the D6 lattice"};
  app.require_subcommand(1);
  std::string format = "json", out, cell = "hemi-even";
  int digits = 17;
  bool force = false, timing = false;

  auto add_format = [&](CLI::App* c) {
    c->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "table"}));
    c->add_option("--out", out, "Write output to PATH");
  };
  const std::vector<std::string> cells{"cross", "hemi-even", "hemi-odd"};

  auto* lattice = app.add_subcommand("lattice", "Face numbers of a Delone cell");
  std::string report = "counts";
  lattice->add_option("--cell", cell)->check(CLI::IsMember(cells));
  lattice->add_option("--report", report)->check(CLI::IsMember({"counts", "facets"}));
  add_format(lattice);

  auto* project = app.add_subcommand("project", "Classify projected 3-facets of a Delone cell");
  std::string dump;
  project->add_option("--cell", cell)->check(CLI::IsMember(cells));
  project->add_flag("--census", "Print the census (default)");
  project->add_option("--dump-tets", dump, "Write every labelled facet image to a JSON file");
  add_format(project);

  auto* tiles = app.add_subcommand("tiles", "Fundamental and composite tile atlas");
  tiles->add_flag("--atlas", "Print the full atlas (default)");
  add_format(tiles);

  auto* inflate = app.add_subcommand("inflate", "Powers of the inflation matrix");
  std::string matrix = "M", vec;
  unsigned power = 1;
  inflate->add_option("--matrix", matrix)->check(CLI::IsMember({"M", "Mhat"}));
  inflate->add_option("--power", power)->check(CLI::Range(0u, 100000u));
  inflate->add_option("--vector", vec, "Counts a,b,c,d");
  add_format(inflate);

  auto* red = app.add_subcommand("reduce", "Dodecahedra inside d(tau^n)");
  unsigned order = 0;
  std::string nf = "flatten";
  red->add_option("--order", order)->required()->check(CLI::Range(0u, 10000u));
  red->add_option("--normal-form", nf)->check(CLI::IsMember({"keep", "flatten"}));
  add_format(red);

  std::string color_by = "tile", mesh = "off", name;
  auto add_mesh = [&](CLI::App* c) {
    c->add_option("--digits", digits, "Significant digits for coordinates")->check(CLI::Range(1, 17));
    c->add_option("--color-by", color_by)->check(CLI::IsMember({"tile", "block"}));
    c->add_flag("--force", force, "Export without a passing verification");
  };
  auto* bld = app.add_subcommand("build", "Build and optionally verify a dissection");
  bool verify_flag = false;
  bld->add_option("name", name)->required()->check(CLI::IsMember(build_names()));
  bld->add_flag("--verify", verify_flag);
  add_format(bld);
  add_mesh(bld);

  auto* exp = app.add_subcommand("export", "Write a dissection as a mesh");
  exp->add_option("name", name)->required()->check(CLI::IsMember(build_names()));
  exp->add_option("--out", out, "file.off, file.obj or file.json");
  exp->add_option("--mesh", mesh, "Format when writing to stdout")->check(CLI::IsMember({"off", "obj"}));
  add_mesh(exp);

  auto* ver = app.add_subcommand("verify", "Run the reference audits");
  bool all = false;
  std::vector<int> only;
  ver->add_flag("--all", all, "Run every audit");
  ver->add_option("--only", only, "Run the listed audits")->delimiter(',');
  ver->add_flag("--timing", timing, "Report wall time on stderr");
  add_format(ver);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadArguments;
  }

  ExportOptions opt;
  opt.digits = digits;
  opt.color_by = color_by == "block" ? ColorBy::Block : ColorBy::Tile;
  const auto start = std::chrono::steady_clock::now();
  int rc = 0;
  try {
    if (*lattice) rc = cmd_lattice(cell, report, format, out);
    else if (*project) rc = cmd_project(cell, format, out, dump);
    else if (*tiles) rc = cmd_tiles(format, out);
    else if (*inflate) rc = cmd_inflate(matrix, power, vec, format, out);
    else if (*red) rc = cmd_reduce(order, nf, format, out);
    else if (*bld) rc = cmd_build(name, verify_flag, out, opt, force, format);
    else if (*exp) rc = cmd_export(name, out, opt, force, mesh);
    else if (*ver) {
      if (!all && only.empty()) throw UsageError("verify needs --all or --only");
      rc = cmd_verify(all ? std::vector<int>{} : only, format, out, timing);
    }
  } catch (const UsageError& e) {
    std::cerr << "mstiler: " << e.what() << "\n";
    return kBadArguments;
  } catch (const std::invalid_argument& e) {
    std::cerr << "mstiler: " << e.what() << "\n";
    return kBadArguments;
  } catch (const std::exception& e) {
    std::cerr << "mstiler: " << e.what() << "\n";
    return kAuditFailure;
  }
  if (timing && !*ver)
    std::cerr << "wall time: " << std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() << " s\n";
  return rc;
}
