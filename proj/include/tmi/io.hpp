// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Serialization: JSON for configurations, complexes, Betti tables and check
// reports; Macaulay2-style Betti text; OFF export of the realization.
#ifndef TMI_IO_HPP
#define TMI_IO_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "tmi/complex.hpp"
#include "tmi/error.hpp"
#include "tmi/monomial.hpp"
#include "tmi/resolution.hpp"

namespace tmi {

using json = nlohmann::ordered_json;

inline BlockConfig config_from_json(const json& j) {
  try {
    return BlockConfig(j.at("n").get<int>(), j.at("t").get<int>(), j.at("b").get<std::vector<int>>());
  } catch (const json::exception& e) {
    throw ParameterError(std::string("invalid configuration JSON: ") + e.what());
  }
}

inline json to_json(const BlockConfig& cfg) {
  json j;
  j["n"] = cfg.n();
  j["t"] = cfg.t();
  j["b"] = cfg.sizes();
  return j;
}

// VarId as "i.j".
inline std::string varid_string(VarId v) { return std::to_string(v.block) + "." + std::to_string(v.index); }

inline VarId parse_varid(const std::string& s) {
  const auto dot = s.find('.');
  try {
    if (dot == std::string::npos) throw ParameterError("");
    std::size_t used1 = 0, used2 = 0;
    const std::string a = s.substr(0, dot), b = s.substr(dot + 1);
    VarId v{std::stoi(a, &used1), std::stoi(b, &used2)};
    if (used1 != a.size() || used2 != b.size() || v.block < 1 || v.index < 1) throw ParameterError("");
    return v;
  } catch (const std::exception&) {
    throw ParameterError("malformed variable id '" + s + "' (expected \"block.index\")");
  }
}

inline json to_json(const LabeledComplex& x) {
  json j;
  j["arity"] = x.arity();
  json cells = json::array();
  for (const Cell& c : x.cells()) {
    json factors = json::array();
    for (const auto& u : c.factors()) {
      json f = json::array();
      for (VarId v : u) f.push_back(varid_string(v));
      factors.push_back(std::move(f));
    }
    json cj;
    cj["factors"] = std::move(factors);
    cj["dim"] = c.dim();
    cj["label"] = to_string(c.label());
    cells.push_back(std::move(cj));
  }
  j["cells"] = std::move(cells);
  return j;
}

// Rebuilds a complex and checks the recorded dim and label of every cell.
inline LabeledComplex complex_from_json(const json& j) {
  try {
    const auto arity = j.at("arity").get<std::size_t>();
    std::vector<Cell> cells;
    for (const auto& cj : j.at("cells")) {
      std::vector<Factor> factors;
      for (const auto& f : cj.at("factors")) {
        Factor u;
        for (const auto& v : f) u.push_back(parse_varid(v.get<std::string>()));
        factors.push_back(std::move(u));
      }
      Cell c(std::move(factors));
      if (cj.contains("dim") && cj.at("dim").get<int>() != c.dim()) {
        throw ParameterError("recorded dim disagrees with factors for " + to_string(c));
      }
      if (cj.contains("label") && parse_monomial(cj.at("label").get<std::string>()) != c.label()) {
        throw ParameterError("recorded label disagrees with factors for " + to_string(c));
      }
      cells.push_back(std::move(c));
    }
    return LabeledComplex::from_cells(std::move(cells), arity);
  } catch (const json::exception& e) {
    throw ParameterError(std::string("invalid complex JSON: ") + e.what());
  }
}

inline json to_json(const BettiTable& table) {
  json j;
  json coarse = json::array();
  for (const auto& [key, v] : table.coarse()) {
    coarse.push_back({{"i", key.first}, {"j", key.second}, {"value", v}});
  }
  json fine = json::array();
  for (const auto& [key, v] : table.multigraded()) {
    fine.push_back({{"i", key.first}, {"degree", to_string(key.second)}, {"value", v}});
  }
  j["totals"] = table.totals();
  j["coarse"] = std::move(coarse);
  j["multigraded"] = std::move(fine);
  return j;
}

inline json to_json(const CheckReport& r) {
  return {{"name", r.name}, {"passed", r.passed}, {"checked", r.checked}, {"failures", r.failures}};
}

// Macaulay2 layout: column i is the homological index, row r holds β_{i,i+r};
// zeros print as '.'.
inline std::string betti_text(const BettiTable& table) {
  const auto coarse = table.coarse();
  const int len = table.length();
  if (len < 0) return "(zero)\n";
  int rmin = 0, rmax = 0;
  bool first = true;
  for (const auto& [key, v] : coarse) {
    const int r = key.second - key.first;
    if (first) {
      rmin = rmax = r;
      first = false;
    }
    rmin = std::min(rmin, r);
    rmax = std::max(rmax, r);
  }
  const auto totals = table.totals();
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> head{""};
  for (int i = 0; i <= len; ++i) head.push_back(std::to_string(i));
  rows.push_back(head);
  std::vector<std::string> total_row{"total:"};
  for (long v : totals) total_row.push_back(std::to_string(v));
  rows.push_back(total_row);
  for (int r = rmin; r <= rmax; ++r) {
    std::vector<std::string> row{std::to_string(r) + ":"};
    for (int i = 0; i <= len; ++i) {
      auto it = coarse.find({i, i + r});
      row.push_back(it == coarse.end() || it->second == 0 ? "." : std::to_string(it->second));
    }
    rows.push_back(row);
  }
  std::vector<std::size_t> width(static_cast<std::size_t>(len + 2), 0);
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream out;
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out << ' ';
      out << std::string(width[c] - row[c].size(), ' ') << row[c];
    }
    out << '\n';
  }
  return out.str();
}

// OFF (nOFF when m != 3) export of the exponent-vector realization. Vertex
// labels are written as comments; 2-cells are emitted as the triangles of
// their pulling triangulation, maximal edges as segments, isolated vertices as
// points, and the tetrahedra of each 3-cell as comment lines.
inline void write_off(std::ostream& os, const LabeledComplex& x, const std::vector<VarId>& universe) {
  const auto vertices = x.cells_of_dim(0);
  std::map<Monomial, std::size_t> index;
  for (std::size_t i = 0; i < vertices.size(); ++i) index[vertices[i].label()] = i;

  std::vector<std::vector<std::size_t>> faces;
  std::vector<std::vector<std::size_t>> tetrahedra;
  auto indices_of = [&](const std::vector<Monomial>& labels) {
    std::vector<std::size_t> out;
    for (const auto& l : labels) out.push_back(index.at(l));
    return out;
  };
  std::vector<char> covered(x.size(), 0);
  for (const Cell& c : x.cells()) {
    for_each_facet(c, [&](const Cell& facet, int, VarId) { covered[*x.index_of(facet)] = 1; });
  }
  for (std::size_t k = 0; k < x.size(); ++k) {
    const Cell& c = x.cells()[k];
    if (c.dim() == 2) {
      for (const auto& tri : pulling_triangulation(c)) faces.push_back(indices_of(tri));
    } else if (c.dim() < 2 && !covered[k]) {
      faces.push_back(indices_of(c.vertex_labels()));
    } else if (c.dim() == 3) {
      for (const auto& tet : pulling_triangulation(c)) tetrahedra.push_back(indices_of(tet));
    }
  }

  if (universe.size() == 3) {
    os << "OFF\n";
  } else {
    os << "nOFF\n" << universe.size() << "\n";
  }
  os << "# coordinates:";
  for (VarId v : universe) os << ' ' << to_string(v);
  os << "\n";
  for (std::size_t i = 0; i < vertices.size(); ++i) os << "# v" << i << ' ' << to_string(vertices[i].label()) << "\n";
  for (const auto& tet : tetrahedra) {
    os << "# tet";
    for (std::size_t v : tet) os << ' ' << v;
    os << "\n";
  }
  os << vertices.size() << ' ' << faces.size() << " 0\n";
  for (const Cell& v : vertices) {
    const Point p = exponent_vector(v.label(), universe);
    for (std::size_t c = 0; c < p.size(); ++c) os << (c ? " " : "") << p[c];
    os << "\n";
  }
  for (const auto& f : faces) {
    os << f.size();
    for (std::size_t v : f) os << ' ' << v;
    os << "\n";
  }
}

}  // namespace tmi

#endif  // TMI_IO_HPP
