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


#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "sweep.hpp"
#include "tmi/gamma.hpp"
#include "tmi/io.hpp"

namespace tmi {
namespace {

using testing::describe;
using testing::sweep;

std::vector<std::string> lines_of(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

TEST(Json, ConfigRoundTrip) {
  const BlockConfig cfg(4, 3, {2, 2, 1, 1});
  const json j = to_json(cfg);
  EXPECT_EQ(j.dump(), R"({"n":4,"t":3,"b":[2,2,1,1]})");
  EXPECT_EQ(config_from_json(j), cfg);
  EXPECT_THROW(config_from_json(json::parse(R"({"n":2,"t":3,"b":[1,1]})")), ParameterError);
  EXPECT_THROW(config_from_json(json::parse(R"({"n":2,"b":[1,1]})")), ParameterError);
  EXPECT_THROW(config_from_json(json::parse(R"({"n":"two","t":1,"b":[1,1]})")), ParameterError);
}

TEST(Json, VarIds) {
  EXPECT_EQ(varid_string({3, 2}), "3.2");
  EXPECT_EQ(parse_varid("3.2"), (VarId{3, 2}));
  for (const char* bad : {"3", "3.", ".2", "a.b", "3.2x", "0.1", "1.-1"}) {
    EXPECT_THROW(parse_varid(bad), ParameterError) << bad;
  }
}

TEST(Json, ComplexRoundTripProperty) {
  for (const auto& cfg : sweep(7)) {
    const auto x = gamma(cfg);
    const json j = json::parse(to_json(x).dump());
    EXPECT_TRUE(complex_from_json(j) == x) << describe(cfg);
  }
}

TEST(Json, ComplexLayout) {
  const auto x = gamma(BlockConfig(2, 2, {1, 2}));
  const json j = to_json(x);
  EXPECT_EQ(j["arity"], 2);
  ASSERT_EQ(j["cells"].size(), 3u);
  EXPECT_EQ(j["cells"][0].dump(), R"({"factors":[["1.1"],["2.1"]],"dim":0,"label":"x[1,1]*x[2,1]"})");
  EXPECT_EQ(j["cells"][2]["dim"], 1);
}

TEST(Json, MalformedComplexes) {
  EXPECT_THROW(complex_from_json(json::parse(R"({"cells":[]})")), ParameterError);
  // Recorded label disagrees with the factors.
  EXPECT_THROW(complex_from_json(json::parse(
                   R"({"arity":1,"cells":[{"factors":[["1.1"]],"dim":0,"label":"x[1,2]"}]})")),
               ParameterError);
  EXPECT_THROW(complex_from_json(json::parse(
                   R"({"arity":1,"cells":[{"factors":[["1.1"]],"dim":1}]})")),
               ParameterError);
  // An edge without its endpoints is not closed under faces.
  EXPECT_THROW(complex_from_json(json::parse(R"({"arity":1,"cells":[{"factors":[["1.1","1.2"]]}]})")), Error);
}

TEST(Json, BettiTable) {
  const auto table = betti_table(gamma(BlockConfig(4, 2, {1, 1, 1, 1})));
  const json j = to_json(table);
  EXPECT_EQ(j["totals"].dump(), "[6,8,3]");
  EXPECT_EQ(j["coarse"][0].dump(), R"({"i":0,"j":2,"value":6})");
  // Each squarefree cubic carries two edges; the three squares share one label.
  EXPECT_EQ(j["multigraded"].size(), 6u + 4u + 1u);
  EXPECT_EQ(j["multigraded"].back().dump(), R"({"i":2,"degree":"x[1,1]*x[2,1]*x[3,1]*x[4,1]","value":3})");
}

TEST(BettiText, Layout) {
  const auto table = betti_table(gamma(BlockConfig(4, 3, {2, 2, 1, 1})));
  EXPECT_EQ(betti_text(table),
            "        0  1  2 3\n"
            "total: 12 22 14 3\n"
            "    3: 12 22 14 3\n");
  EXPECT_EQ(betti_text(BettiTable()), "(zero)\n");
}

TEST(Off, FourBlocksDegreeThree) {
  const BlockConfig cfg(4, 3, {2, 2, 1, 1});
  std::ostringstream os;
  const auto x = gamma(cfg);
  write_off(os, x, cfg.variables());
  const auto lines = lines_of(os.str());
  ASSERT_GE(lines.size(), 3u);
  // Triangles count once, squares twice. The 3-cells are a tetrahedron, a
  // prism and a cube: 1 + 3 + 6 tetrahedra.
  std::size_t triangles = 0;
  for (const Cell& c : x.cells_of_dim(2)) triangles += c.vertices().size() == 3 ? 1 : 2;
  EXPECT_EQ(triangles, 22u);
  EXPECT_EQ(lines[0], "nOFF");
  EXPECT_EQ(lines[1], "6");
  EXPECT_EQ(lines[2], "# coordinates: x[1,1] x[1,2] x[2,1] x[2,2] x[3,1] x[4,1]");
  int labels = 0, tets = 0;
  std::size_t counts = 0;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].rfind("# v", 0) == 0) ++labels;
    if (lines[i].rfind("# tet", 0) == 0) ++tets;
    if (lines[i][0] != '#' && i > 1 && counts == 0) counts = i;
  }
  EXPECT_EQ(labels, 12);
  EXPECT_EQ(tets, 10);
  EXPECT_EQ(lines[counts], "12 22 0");
  EXPECT_EQ(lines.size(), counts + 1 + 12 + 22);
  EXPECT_EQ(lines[counts + 1].size(), std::string("1 0 1 0 1 0").size());
  EXPECT_EQ(lines.back().substr(0, 2), "3 ");
}

TEST(Off, ThreeVariablesUsePlainHeader) {
  const BlockConfig cfg(3, 2, {1, 1, 1});
  std::ostringstream os;
  write_off(os, gamma(cfg), cfg.variables());
  const auto lines = lines_of(os.str());
  EXPECT_EQ(lines[0], "OFF");
  // A path of two maximal edges on three vertices.
  EXPECT_NE(os.str().find("\n3 2 0\n"), std::string::npos);
}

}  // namespace
}  // namespace tmi
