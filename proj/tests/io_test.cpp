// Copyright 2026 The polyflat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "polyflat/io.hpp"

#include "gtest/gtest.h"
#include "polyflat/dot.hpp"
#include "polyflat/polyflat.hpp"
#include "support/corpus.hpp"

namespace polyflat {
namespace {

const char* const kU12 = R"({"ground": ["x", "y"],
  "rank": {"": "0", "x": "1", "y": "1", "x,y": "1"}})";

void expect_parse_error(const std::string& text, const std::string& fragment) {
  try {
    io::parse_set_function(text);
    FAIL() << "accepted: " << text;
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kParse);
    EXPECT_NE(std::string(e.what()).find(fragment), std::string::npos) << e.what();
  }
}

TEST(PolymatroidFileTest, Parses) {
  const SetFunction f = io::parse_set_function(kU12);
  EXPECT_EQ(f, uniform_matroid(1, GroundSet({"x", "y"})));
  // Key order and label order inside a key do not matter; integers are accepted.
  const SetFunction g = io::parse_set_function(
      R"({"ground": ["x", "y"], "rank": {"y,x": 1, "x": "1", "": 0, "y": "2/2"}})");
  EXPECT_EQ(g, f);
}

TEST(PolymatroidFileTest, ErrorsNameTheKey) {
  expect_parse_error(R"({"ground": ["x"], "rank": {"": "0", "z": "1"}})", "\"z\"");
  expect_parse_error(R"({"ground": ["x", "y"], "rank": {"": "0", "x": "1", "y": "1"}})",
                     "\"x,y\"");
  expect_parse_error(R"({"ground": ["x"], "rank": {"": "0", "x": "1", "x": "1"}})", "\"x\"");
  expect_parse_error(
      R"({"ground": ["x", "y"], "rank": {"": "0", "x": "1", "y": "1", "x,y": "1", "y,x": "1"}})",
      "\"y,x\"");
  expect_parse_error(R"({"ground": ["x"], "rank": {"": "0", "x": "0.5"}})", "rank[\"x\"]");
  expect_parse_error(R"({"ground": ["x"], "rank": {"": "0", "x,x": "1", "x": "1"}})", "x,x");
  expect_parse_error(R"({"ground": ["x", "x"], "rank": {}})", "duplicate");
  expect_parse_error(R"({"rank": {}})", "ground");
  expect_parse_error("{", "invalid JSON");
}

TEST(PolymatroidFileTest, RoundTripIsByteIdentical) {
  for (const auto& entry : testing::polymatroid_corpus()) {
    const std::string once = io::write_set_function(entry.f);
    const SetFunction back = io::parse_set_function(once);
    ASSERT_EQ(back, entry.f) << entry.name;
    ASSERT_EQ(io::write_set_function(back), once) << entry.name;
  }
}

TEST(PolymatroidFileTest, CanonicalText) {
  const SetFunction f(GroundSet({"y", "x"}), {Rat(0), Rat(1, 2), Rat(2, 4), Rat(1)});
  EXPECT_EQ(io::write_set_function(f),
            "{\n"
            "  \"ground\": [\n    \"y\",\n    \"x\"\n  ],\n"
            "  \"rank\": {\n"
            "    \"\": \"0\",\n    \"y\": \"1/2\",\n    \"x\": \"1/2\",\n    \"x,y\": \"1\"\n"
            "  }\n"
            "}\n");
}

TEST(LatticeFileTest, ParseAndRoundTrip) {
  const RankedLattice l = io::parse_lattice(R"({"ground": ["x", "y"], "elements": [
      {"set": [], "rank": "0"}, {"set": ["y", "x"], "rank": "3"}]})");
  EXPECT_EQ(l.size(), 2u);
  EXPECT_EQ(l.rank(Subset(0b11)), 3);
  const std::string once = io::write_lattice(l);
  EXPECT_EQ(io::write_lattice(io::parse_lattice(once)), once);

  for (const auto& entry : testing::polymatroid_corpus()) {
    const auto cf = cyclic_flats(entry.f);
    const std::string text = io::write_lattice(cf.lattice);
    const RankedLattice back = io::parse_lattice(text);
    ASSERT_TRUE(back.same_family(cf.lattice)) << entry.name;
    ASSERT_EQ(io::write_lattice(back), text) << entry.name;
  }
}

TEST(LatticeFileTest, Errors) {
  try {
    io::parse_lattice(R"({"ground": ["x", "y"], "elements": [
        {"set": ["x"], "rank": "0"}, {"set": ["y"], "rank": "0"}]})");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNotALattice);
  }
  try {
    io::parse_lattice(R"({"ground": ["x"], "elements": [{"set": ["q"], "rank": "0"}]})");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kParse);
    EXPECT_NE(std::string(e.what()).find("elements[0].set"), std::string::npos);
  }
  try {
    io::parse_lattice(R"({"ground": ["x"], "elements": [{"set": []}]})");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kParse);
  }
  try {
    io::parse_lattice(R"({"ground": ["x"], "elements": [{"set": [], "rank": "-1"}]})");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNegativeRank);
  }
}

TEST(MeasureFileTest, ParseWriteAndErrors) {
  const GroundSet g({"x", "y"});
  const Measure mu = io::parse_measure(R"({"y": "1/3", "x": 2})", g);
  EXPECT_EQ(mu.singleton(0), 2);
  EXPECT_EQ(mu.singleton(1), Rat(1, 3));
  EXPECT_EQ(io::write_measure(mu), "{\n  \"x\": \"2\",\n  \"y\": \"1/3\"\n}\n");
  EXPECT_THROW(io::parse_measure(R"({"x": "1"})", g), Error);
  EXPECT_THROW(io::parse_measure(R"({"x": "1", "y": "-1"})", g), Error);
  EXPECT_THROW(io::parse_measure(R"({"x": "1", "y": "1", "z": "1"})", g), Error);
  EXPECT_THROW(io::parse_measure(R"({"x": "1", "y": "1", "x": "2"})", g), Error);
}

TEST(ExpansionMapTest, Writes) {
  const auto h = helgason_expand(SetFunction(GroundSet({"x", "y"}), {0, 2, 1, 2}));
  const auto doc = io::Json::parse(io::write_expansion_map(h.map));
  EXPECT_EQ(doc["blocks"]["x"], io::Json::parse(R"(["x#1", "x#2"])"));
  EXPECT_EQ(doc["blocks"]["y"], io::Json::parse(R"(["y#1"])"));
  EXPECT_EQ(doc["expanded"].size(), 3u);
}

TEST(DotTest, ChainHasOneEdge) {
  const RankedLattice l = validate_lattice(GroundSet({"x", "y"}), {{Subset{}, 0}, {Subset(0b11), 3}});
  const std::string dot = lattice_to_dot(l);
  EXPECT_EQ(hasse_edges(l).size(), 1u);
  EXPECT_NE(dot.find("n0 -> n1;"), std::string::npos);
  EXPECT_NE(dot.find("{x,y}\\nλ=3"), std::string::npos);
  std::size_t arrows = 0;
  for (std::size_t pos = dot.find("->"); pos != std::string::npos; pos = dot.find("->", pos + 1)) {
    ++arrows;
  }
  EXPECT_EQ(arrows, 1u);
}

TEST(DotTest, DiamondAndOrderIndependence) {
  const GroundSet g({"x", "y", "z"});
  const std::vector<LatticeElement> elements{
      {Subset{}, 0}, {Subset(0b001), 1}, {Subset(0b010), 1}, {Subset(0b111), 2}};
  const RankedLattice forward = validate_lattice(g, elements);
  const RankedLattice backward =
      validate_lattice(g, std::vector<LatticeElement>(elements.rbegin(), elements.rend()));
  EXPECT_EQ(hasse_edges(forward).size(), 4u);
  EXPECT_EQ(lattice_to_dot(forward), lattice_to_dot(backward));
}

}  // namespace
}  // namespace polyflat
