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

#include "polyflat/cli.hpp"

#include <filesystem>
#include <sstream>

#include "gtest/gtest.h"
#include "polyflat/io.hpp"

namespace polyflat {
namespace {

namespace fs = std::filesystem;

std::string sample(const std::string& name) {
  return std::string(POLYFLAT_SAMPLES_DIR) + "/" + name;
}

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("polyflat_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string temp(const std::string& name) const { return (dir_ / name).string(); }
  std::string put(const std::string& name, const std::string& contents) const {
    io::write_file(temp(name), contents);
    return temp(name);
  }

  fs::path dir_;
};

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

TEST_F(CliTest, CheckMatroid) {
  const auto r = run({"check", sample("u23.json")});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "matroid: yes")) << r.out;
  EXPECT_TRUE(contains(r.out, "loops: ∅")) << r.out;
}

TEST_F(CliTest, CheckReportsSubmodularityWitness) {
  const auto r = run({"check", sample("not_submodular.json")});
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(contains(r.out, "submodular: no"));
  EXPECT_TRUE(contains(r.out, "witness")) << r.out;
}

TEST_F(CliTest, MalformedKeyIsAParseError) {
  const auto r = run({"check", sample("bad_key.json")});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(contains(r.err, "\"x,z\"")) << r.err;
}

TEST_F(CliTest, MissingFileAndBadUsage) {
  EXPECT_EQ(run({"check", temp("absent.json")}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"axioms", sample("lattice_xy3.json")}).code, 2);
}

TEST_F(CliTest, CyclicFlatsOfUniformMatroid) {
  const auto r = run({"cyclic-flats", sample("u23.json"), "-o", temp("l.json"), "-m",
                      temp("m.json"), "--dot", temp("l.dot")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "cyclic flats: 2"));
  const RankedLattice l = io::parse_lattice(io::read_file(temp("l.json")));
  EXPECT_EQ(l.size(), 2u);
  EXPECT_EQ(l.rank(Subset{}), 0);
  EXPECT_EQ(l.rank(Subset(0b111)), 2);
  const Measure mu = io::parse_measure(io::read_file(temp("m.json")), l.ground());
  EXPECT_EQ(mu.singletons(), (std::vector<Rat>{1, 1, 1}));
  EXPECT_TRUE(contains(io::read_file(temp("l.dot")), "n0 -> n1;"));
}

TEST_F(CliTest, CyclicFlatsOfFreeMatroid) {
  const std::string path = put("free.json", io::write_set_function(uniform_matroid(3, 3)));
  const auto r = run({"cyclic-flats", path, "-o", temp("l.json")});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(io::parse_lattice(io::read_file(temp("l.json"))).size(), 1u);
}

TEST_F(CliTest, CyclicFlatsRejectsNonPolymatroid) {
  EXPECT_EQ(run({"cyclic-flats", sample("not_submodular.json")}).code, 1);
}

TEST_F(CliTest, Axioms) {
  EXPECT_EQ(run({"axioms", sample("lattice_xy3.json"), sample("measure_xy22.json")}).code, 0);
  const auto fail = run({"axioms", sample("lattice_xy4.json"), sample("measure_xy22.json")});
  EXPECT_EQ(fail.code, 1);
  EXPECT_TRUE(contains(fail.out, "C* FAIL: λ({x,y})−λ(∅)=4 = μ")) << fail.out;
  EXPECT_EQ(run({"axioms", sample("not_a_lattice.json"), sample("measure_xy22.json")}).code, 2);
}

TEST_F(CliTest, ConvolveMatchesLibrary) {
  const auto r = run({"convolve", sample("lattice_xy3.json"), sample("measure_xy22.json")});
  ASSERT_EQ(r.code, 0);
  const SetFunction f = io::parse_set_function(r.out);
  EXPECT_EQ(f.values(), (std::vector<Rat>{0, 2, 2, 3}));
}

TEST_F(CliTest, Convolve2WithAdditiveLatticeMatchesConvolve) {
  const GroundSet g({"x", "y"});
  std::vector<LatticeElement> all;
  for_each_subset(2, [&](Subset s) { all.push_back({s, Rat(2 * static_cast<int>(s.size()))}); });
  const std::string additive = put("add.json", io::write_lattice(validate_lattice(g, all)));
  ASSERT_EQ(run({"convolve", sample("lattice_xy3.json"), sample("measure_xy22.json"), "-o",
                 temp("one.json")})
                .code,
            0);
  ASSERT_EQ(run({"convolve2", sample("lattice_xy3.json"), additive, "-o", temp("two.json")}).code,
            0);
  EXPECT_EQ(io::read_file(temp("one.json")), io::read_file(temp("two.json")));
}

TEST_F(CliTest, Verify) {
  const auto ok = run({"verify", sample("lattice_xy3.json"), sample("measure_xy22.json")});
  EXPECT_EQ(ok.code, 0);
  EXPECT_TRUE(contains(ok.out, "lattice recovered: yes"));
  const auto bad = run({"verify", sample("lattice_xy4.json"), sample("measure_xy22.json")});
  EXPECT_EQ(bad.code, 1);
  EXPECT_TRUE(contains(bad.out, "lattice recovered: no"));
  EXPECT_TRUE(contains(bad.out, "mismatch: lattice member {x,y}")) << bad.out;
}

TEST_F(CliTest, Reconstruct) {
  const auto r = run({"reconstruct", sample("u23.json")});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "exact on all 8 subsets"));
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const std::string path =
        put("r" + std::to_string(seed) + ".json",
            io::write_set_function(random_polymatroid(seed, 1 + seed % 5)));
    ASSERT_EQ(run({"reconstruct", path}).code, 0);
  }
}

TEST_F(CliTest, Helgason) {
  const auto r = run({"helgason", sample("x2.json"), "-o", temp("h.json"), "--map", temp("map.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  const SetFunction h = io::parse_set_function(io::read_file(temp("h.json")));
  EXPECT_EQ(h.ground().names(), (std::vector<std::string>{"x#1", "x#2"}));
  EXPECT_EQ(h.values(), uniform_matroid(2, 2).values());
  EXPECT_TRUE(contains(io::read_file(temp("map.json")), "\"x#2\""));

  const std::string half = put("half.json", io::write_set_function(SetFunction(
                                                GroundSet({"x"}), {Rat(0), Rat(1, 2)})));
  EXPECT_EQ(run({"helgason", half}).code, 1);
}

TEST_F(CliTest, Infiltrate) {
  const auto r = run({"infiltrate", sample("f_mc.json"), "c", sample("g_pq.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  const SetFunction f = io::parse_set_function(r.out);
  const GroundSet& g = f.ground();
  EXPECT_EQ(f(g.subset({"m", "p"})), 2);
  EXPECT_EQ(f(g.subset({"p", "q"})), 1);
  EXPECT_EQ(f(g.subset({"m", "p", "q"})), 2);

  const std::string u22 = put("u22.json", io::write_set_function(uniform_matroid(2, GroundSet({"p", "q"}))));
  const auto mismatch = run({"infiltrate", sample("f_mc.json"), "c", u22});
  EXPECT_EQ(mismatch.code, 1);
  EXPECT_TRUE(contains(mismatch.err, "RankMismatch")) << mismatch.err;
}

TEST_F(CliTest, Gen) {
  const auto u = run({"gen", "uniform", "--k", "2", "--n", "3"});
  ASSERT_EQ(u.code, 0);
  EXPECT_EQ(io::parse_set_function(u.out).values(), uniform_matroid(2, 3).values());

  const auto g = run({"gen", "graphic", "--vertices", "3", "--edges", "0-1,1-2,0-2"});
  ASSERT_EQ(g.code, 0);
  EXPECT_EQ(io::parse_set_function(g.out), graphic_matroid(3, {{0, 1}, {1, 2}, {0, 2}}));

  const auto a = run({"gen", "random", "--n", "4", "--seed", "9", "--mode", "rejection"});
  const auto b = run({"gen", "random", "--n", "4", "--seed", "9", "--mode", "rejection"});
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);

  EXPECT_EQ(run({"gen", "uniform", "--k", "4", "--n", "3"}).code, 2);
  EXPECT_EQ(run({"gen", "graphic", "--vertices", "2", "--edges", "0-"}).code, 2);
  EXPECT_EQ(run({"gen", "zonotope"}).code, 2);
}

}  // namespace
}  // namespace polyflat
