// OFF and OBJ export of assemblies, and a strict OFF reader.
#pragma once

#include "mstiler/dissections.hpp"

#include <array>
#include <cstdio>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace mstiler {

enum class ColorBy { Tile, Block };

struct ExportOptions {
  int digits = 17;
  ColorBy color_by = ColorBy::Tile;
};

using Rgb = std::array<int, 3>;

inline Rgb tile_color(TileClass t) {
  switch (t) {
    case TileClass::t1: return {230, 159, 0};
    case TileClass::t2: return {86, 180, 233};
    case TileClass::t3: return {0, 158, 115};
    case TileClass::t4: return {240, 228, 66};
    case TileClass::t5: return {0, 114, 178};
    case TileClass::t6: return {213, 94, 0};
    default: return {128, 128, 128};
  }
}

inline Rgb block_color(const std::string& label) {
  static const std::map<std::string, Rgb> m{{"T1", {204, 121, 167}}, {"T2", {86, 180, 233}}, {"T3", {0, 158, 115}},
                                            {"T4", {213, 94, 0}},    {"E", {230, 159, 0}},   {"C", {0, 114, 178}}};
  auto it = m.find(label);
  if (it != m.end()) return it->second;
  for (TileClass t : fundamental_labels())
    if (to_string(t) == label) return tile_color(t);
  return {128, 128, 128};
}

struct MeshFace {
  std::array<size_t, 3> v;
  Rgb color;
};

/// Exactly deduplicated vertices in lexicographic order of their exact
/// coordinates, and four outward faces per tet.
struct MeshDocument {
  std::vector<GoldenVec3> vertices;
  std::vector<MeshFace> faces;
  std::map<std::string, Rgb> legend;
};

inline MeshDocument make_mesh(const Assembly& a, ColorBy color_by = ColorBy::Tile) {
  MeshDocument m;
  std::map<GoldenVec3, size_t, NumericLess> index;
  for (const auto& t : a.tets)
    for (const auto& p : t.vertices) index.emplace(p, 0);
  for (auto& [p, i] : index) {
    i = m.vertices.size();
    m.vertices.push_back(p);
  }
  std::vector<std::string> block_of(a.tets.size());
  for (const auto& b : a.blocks)
    for (size_t i : b.members) block_of[i] = b.label;
  for (size_t i = 0; i < a.tets.size(); ++i) {
    const auto& t = a.tets[i];
    std::string key = color_by == ColorBy::Tile ? to_string(t.label) : (block_of[i].empty() ? to_string(t.label) : block_of[i]);
    Rgb col = color_by == ColorBy::Tile ? tile_color(t.label) : block_color(key);
    m.legend[key] = col;
    for (const auto& f : detail::outward_faces(t.vertices)) m.faces.push_back({{index.at(f[0]), index.at(f[1]), index.at(f[2])}, col});
  }
  return m;
}

inline std::string format_double(double x, int digits) {
  if (x == 0) x = 0;  // no negative zero
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

inline std::string to_off(const MeshDocument& m, int digits = 17) {
  std::ostringstream os;
  os << "OFF\n" << m.vertices.size() << ' ' << m.faces.size() << " 0\n";
  for (const auto& v : m.vertices) {
    auto d = v.to_double();
    os << format_double(d[0], digits) << ' ' << format_double(d[1], digits) << ' ' << format_double(d[2], digits) << '\n';
  }
  for (const auto& f : m.faces)
    os << "3 " << f.v[0] << ' ' << f.v[1] << ' ' << f.v[2] << ' ' << f.color[0] << ' ' << f.color[1] << ' ' << f.color[2] << '\n';
  return os.str();
}

inline std::string to_obj(const MeshDocument& m, int digits = 17) {
  std::ostringstream os;
  for (const auto& v : m.vertices) {
    auto d = v.to_double();
    os << "v " << format_double(d[0], digits) << ' ' << format_double(d[1], digits) << ' ' << format_double(d[2], digits) << '\n';
  }
  for (const auto& f : m.faces) os << "f " << f.v[0] + 1 << ' ' << f.v[1] + 1 << ' ' << f.v[2] + 1 << '\n';
  return os.str();
}

inline std::string export_off(const Assembly& a, const ExportOptions& opt = {}) {
  return to_off(make_mesh(a, opt.color_by), opt.digits);
}

inline std::string export_obj(const Assembly& a, const ExportOptions& opt = {}) {
  return to_obj(make_mesh(a, opt.color_by), opt.digits);
}

class OffParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OffMesh {
  std::vector<std::array<double, 3>> vertices;
  std::vector<std::vector<size_t>> faces;
};

/// Reads ASCII OFF: header, counts, vertices, then faces with optional colors.
/// Comments start with '#'.
inline OffMesh parse_off(const std::string& text) {
  std::istringstream lines(text);
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(lines, line)) {
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::vector<std::string> toks;
    std::string tok;
    while (ls >> tok) toks.push_back(tok);
    if (!toks.empty()) rows.push_back(std::move(toks));
  }
  if (rows.empty() || rows[0][0] != "OFF") throw OffParseError("missing OFF header");
  size_t r = 0;
  std::vector<std::string> counts(rows[0].begin() + 1, rows[0].end());
  if (counts.empty()) {
    if (rows.size() < 2) throw OffParseError("missing counts line");
    counts = rows[1];
    r = 2;
  } else {
    r = 1;
  }
  if (counts.size() != 3) throw OffParseError("counts line must have three entries");
  size_t nv = 0, nf = 0;
  try {
    nv = std::stoul(counts[0]);
    nf = std::stoul(counts[1]);
    (void)std::stoul(counts[2]);
  } catch (const std::exception&) {
    throw OffParseError("bad counts line");
  }
  if (rows.size() != r + nv + nf) throw OffParseError("line count does not match the header");
  OffMesh m;
  for (size_t i = 0; i < nv; ++i, ++r) {
    if (rows[r].size() != 3) throw OffParseError("vertex line " + std::to_string(i) + " must have three coordinates");
    try {
      m.vertices.push_back({std::stod(rows[r][0]), std::stod(rows[r][1]), std::stod(rows[r][2])});
    } catch (const std::exception&) {
      throw OffParseError("bad vertex line " + std::to_string(i));
    }
  }
  for (size_t i = 0; i < nf; ++i, ++r) {
    const auto& row = rows[r];
    size_t k = 0;
    try {
      k = std::stoul(row[0]);
    } catch (const std::exception&) {
      throw OffParseError("bad face line " + std::to_string(i));
    }
    if (row.size() != 1 + k && row.size() != 1 + k + 3 && row.size() != 1 + k + 4)
      throw OffParseError("face line " + std::to_string(i) + " has the wrong number of entries");
    std::vector<size_t> f;
    for (size_t j = 1; j <= k; ++j) {
      size_t idx = std::stoul(row[j]);
      if (idx >= nv) throw OffParseError("face index out of range");
      f.push_back(idx);
    }
    m.faces.push_back(std::move(f));
  }
  return m;
}

}  // namespace mstiler
