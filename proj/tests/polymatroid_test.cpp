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

#include <algorithm>
#include <set>

#include "gtest/gtest.h"
#include "polyflat/polyflat.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

namespace polyflat {
namespace {

using testing::table;

// f(x)=f(y)=2, f(xy)=3
SetFunction two_twos() { return table({"x", "y"}, {"0", "2", "2", "3"}); }
// f(x)=2, f(y)=1, f(xy)=3
SetFunction two_one() { return table({"x", "y"}, {"0", "2", "1", "3"}); }

const std::vector<testing::CorpusEntry>& corpus() {
  static const auto entries = testing::polymatroid_corpus();
  return entries;
}

TEST(CheckPolymatroidTest, UniformMatroid) {
  const auto report = check_polymatroid(uniform_matroid(2, 3));
  EXPECT_TRUE(report.nonnegative);
  EXPECT_TRUE(report.monotone);
  EXPECT_TRUE(report.submodular);
  EXPECT_TRUE(report.integer_valued);
  EXPECT_TRUE(report.is_matroid);
  EXPECT_FALSE(report.witness.has_value());
}

TEST(CheckPolymatroidTest, SubmodularityWitness) {
  const SetFunction f = table({"x", "y"}, {"0", "1", "1", "3"});
  const auto report = check_polymatroid(f);
  EXPECT_TRUE(report.monotone);
  EXPECT_FALSE(report.submodular);
  ASSERT_TRUE(report.witness.has_value());
  const auto& w = *report.witness;
  EXPECT_EQ(w.kind, ViolationKind::kNotSubmodular);
  EXPECT_EQ(w.a, Subset{});
  EXPECT_EQ(w.i, 0u);
  EXPECT_EQ(w.j, 1u);
  // Re-evaluating the cited sets reproduces 1 + 1 < 3 + 0.
  EXPECT_EQ(f(w.a.with(*w.i)) + f(w.a.with(*w.j)), w.lhs);
  EXPECT_EQ(f(w.a.with(*w.i).with(*w.j)) + f(w.a), w.rhs);
  EXPECT_LT(w.lhs, w.rhs);
}

TEST(CheckPolymatroidTest, ZeroFunctionIsMatroidOfLoops) {
  const auto report = check_polymatroid(table({"x", "y"}, {"0", "0", "0", "0"}));
  EXPECT_TRUE(report.is_polymatroid());
  EXPECT_TRUE(report.is_matroid);
}

TEST(CheckPolymatroidTest, FlagsAndWitnessesForOtherViolations) {
  const auto negative = check_polymatroid(table({"x"}, {"0", "-1"}));
  EXPECT_FALSE(negative.nonnegative);
  EXPECT_EQ(negative.witness->kind, ViolationKind::kNegative);

  const auto decreasing = check_polymatroid(table({"x"}, {"2", "1"}));
  EXPECT_FALSE(decreasing.monotone);
  EXPECT_EQ(decreasing.witness->kind, ViolationKind::kNotMonotone);

  const auto fractional = check_polymatroid(table({"x"}, {"0", "1/2"}));
  EXPECT_TRUE(fractional.is_polymatroid());
  EXPECT_FALSE(fractional.integer_valued);
  EXPECT_FALSE(fractional.is_matroid);
  EXPECT_EQ(fractional.witness->kind, ViolationKind::kNotInteger);

  const auto big = check_polymatroid(two_twos());
  EXPECT_TRUE(big.is_polymatroid());
  EXPECT_FALSE(big.is_matroid);
  EXPECT_EQ(big.witness->kind, ViolationKind::kSingletonNotBinary);
}

TEST(CheckPolymatroidTest, LocalFormsAgreeWithAllPairsOracle) {
  // Corpus members plus perturbed tables that break the axioms.
  std::mt19937_64 rng(11);
  for (const auto& entry : corpus()) {
    if (entry.f.size() > 4) continue;
    std::vector<Rat> values = entry.f.values();
    for (int trial = 0; trial < 3; ++trial) {
      const SetFunction f(entry.f.ground(), values);
      const auto report = check_polymatroid(f);
      ASSERT_EQ(report.submodular, testing::submodular_all_pairs(f)) << entry.name;
      ASSERT_EQ(report.monotone, testing::monotone_all_pairs(f)) << entry.name;
      if (!report.is_polymatroid()) {
        ASSERT_TRUE(report.witness.has_value());
      }
      const auto slot = std::uniform_int_distribution<std::size_t>(0, values.size() - 1)(rng);
      values[slot] += Rat(std::uniform_int_distribution<int>(-2, 2)(rng), 2);
    }
  }
}

TEST(LoopsTest, Examples) {
  EXPECT_EQ(loops(uniform_matroid(2, 3)), Subset{});
  EXPECT_EQ(loops(table({"a", "b"}, {"0", "0", "1", "1"})), Subset(0b01));
  EXPECT_EQ(loops(uniform_matroid(0, 3)), Subset(0b111));
}

TEST(ColoopsTest, Examples) {
  EXPECT_EQ(coloops(uniform_matroid(2, 2)), Subset(0b11));
  EXPECT_EQ(coloops(uniform_matroid(1, 2)), Subset{});
  EXPECT_EQ(coloops(two_one()), Subset(0b11));
}

TEST(ClosureTest, Examples) {
  EXPECT_EQ(closure(uniform_matroid(1, 3), Subset(0b001)), Subset(0b111));
  const SetFunction free = uniform_matroid(3, 3);
  for_each_subset(3, [&](Subset a) { EXPECT_EQ(closure(free, a), a); });
  EXPECT_EQ(closure(two_twos(), Subset(0b01)), Subset(0b01));
}

TEST(ClosureTest, MatchesFlatScanOracleAndIsAClosureOperator) {
  for (const auto& entry : corpus()) {
    const auto& f = entry.f;
    for_each_subset(f.size(), [&](Subset a) {
      const Subset c = closure(f, a);
      ASSERT_EQ(c, testing::closure_by_flat_scan(f, a)) << entry.name;
      ASSERT_TRUE(a.subset_of(c));
      ASSERT_EQ(closure(f, c), c);
      ASSERT_TRUE(is_flat(f, c));
      for (std::size_t i = 0; i < f.size(); ++i) {
        ASSERT_TRUE(c.subset_of(closure(f, a.with(i)))) << entry.name;
      }
    });
  }
}

TEST(IsFlatTest, Examples) {
  EXPECT_TRUE(is_flat(two_twos(), Subset(0b11)));
  EXPECT_TRUE(is_flat(uniform_matroid(1, 3), Subset(0b111)));
  EXPECT_FALSE(is_flat(uniform_matroid(1, 3), Subset(0b001)));
  EXPECT_TRUE(is_flat(two_twos(), Subset(0b01)));
}

TEST(FlatsTest, Examples) {
  EXPECT_EQ(flats(uniform_matroid(1, 2)), (std::vector<Subset>{Subset{}, Subset(0b11)}));
  EXPECT_EQ(flats(uniform_matroid(2, 2)),
            (std::vector<Subset>{Subset{}, Subset(0b01), Subset(0b10), Subset(0b11)}));
  EXPECT_EQ(flats(two_twos()),
            (std::vector<Subset>{Subset{}, Subset(0b01), Subset(0b10), Subset(0b11)}));
}

TEST(FlatsTest, IntersectionClosedAndMatchesDefinition) {
  for (const auto& entry : corpus()) {
    const auto fl = flats(entry.f);
    std::set<Subset> as_set(fl.begin(), fl.end());
    std::vector<Subset> oracle = testing::flats_by_definition(entry.f);
    ASSERT_EQ(as_set, std::set<Subset>(oracle.begin(), oracle.end())) << entry.name;
    ASSERT_TRUE(as_set.contains(entry.f.ground().full()));
    for (Subset a : fl) {
      for (Subset b : fl) ASSERT_TRUE(as_set.contains(a & b)) << entry.name;
    }
    ASSERT_TRUE(std::is_sorted(fl.begin(), fl.end(),
                               [](Subset a, Subset b) { return a.size() < b.size(); }));
  }
}

TEST(IsCyclicFlatTest, Examples) {
  EXPECT_TRUE(is_cyclic_flat(uniform_matroid(2, 3), Subset{}));
  EXPECT_TRUE(is_cyclic_flat(two_twos(), Subset(0b11)));
  EXPECT_FALSE(is_cyclic_flat(two_twos(), Subset(0b01)));
}

TEST(MaxCyclicFlatTest, Examples) {
  EXPECT_EQ(max_cyclic_flat(uniform_matroid(2, 2), Subset(0b11)), Subset{});
  EXPECT_EQ(max_cyclic_flat(uniform_matroid(2, 3), Subset(0b111)), Subset(0b111));
  EXPECT_EQ(max_cyclic_flat(two_one(), Subset(0b11)), Subset{});
}

TEST(MaxCyclicFlatTest, RejectsNonFlat) {
  try {
    max_cyclic_flat(uniform_matroid(1, 3), Subset(0b001));
    FAIL() << "non-flat accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNotAFlat);
  }
}

TEST(MaxCyclicFlatTest, DecompositionAndOrderIndependence) {
  for (const auto& entry : corpus()) {
    const auto& f = entry.f;
    const Measure mu = induced_measure(f);
    for (Subset flat : flats(f)) {
      const Subset c = max_cyclic_flat(f, flat);
      ASSERT_EQ(c, max_cyclic_flat(f, flat, ScanOrder::kDescending)) << entry.name;
      ASSERT_TRUE(is_cyclic_flat(f, c)) << entry.name;
      ASSERT_TRUE(c.subset_of(flat));
      // f(A) = f(C) + μ(A − C) for C ⊆ A ⊆ F.
      for_each_subset_of(flat - c, [&](Subset extra) {
        ASSERT_EQ(f(c | extra), f(c) + mu(extra)) << entry.name;
      });
      // No larger cyclic flat inside F.
      for_each_subset_of(flat, [&](Subset s) {
        if (is_cyclic_flat(f, s)) {
          ASSERT_TRUE(s.subset_of(c)) << entry.name;
        }
      });
    }
  }
}

TEST(CyclicFlatsTest, Examples) {
  const auto u23 = cyclic_flats(uniform_matroid(2, 3));
  ASSERT_EQ(u23.lattice.size(), 2u);
  EXPECT_EQ(u23.lattice.rank(Subset{}), 0);
  EXPECT_EQ(u23.lattice.rank(Subset(0b111)), 2);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(u23.measure.singleton(i), 1);

  const auto free = cyclic_flats(uniform_matroid(2, 2));
  ASSERT_EQ(free.lattice.size(), 1u);
  EXPECT_EQ(free.lattice.element(0).set, Subset{});
  EXPECT_EQ(free.measure.singleton(0), 1);

  const auto tt = cyclic_flats(two_twos());
  ASSERT_EQ(tt.lattice.size(), 2u);
  EXPECT_EQ(tt.lattice.rank(Subset(0b11)), 3);
  EXPECT_EQ(tt.measure.singleton(0), 2);
}

TEST(CyclicFlatsTest, EmptyGroundSet) {
  const SetFunction f(GroundSet{}, {Rat(0)});
  const auto cf = cyclic_flats(f);
  ASSERT_EQ(cf.lattice.size(), 1u);
  EXPECT_EQ(cf.lattice.element(0).set, Subset{});
  EXPECT_TRUE(reconstruct_check(f).ok);
}

TEST(CyclicFlatsTest, MeetAndJoinMatchFlatConstructions) {
  for (const auto& entry : corpus()) {
    const auto& f = entry.f;
    const auto cf = cyclic_flats(f);
    const auto& l = cf.lattice;
    for (std::size_t i = 0; i < l.size(); ++i) {
      for (std::size_t j = 0; j < l.size(); ++j) {
        const Subset c1 = l.element(i).set;
        const Subset c2 = l.element(j).set;
        ASSERT_EQ(l.element(l.meet_index(i, j)).set, max_cyclic_flat(f, c1 & c2)) << entry.name;
        ASSERT_EQ(l.element(l.join_index(i, j)).set, closure(f, c1 | c2)) << entry.name;
      }
    }
  }
}

TEST(CyclicFlatsTest, MatroidsAgreeWithCircuitOracle) {
  std::size_t matroids = 0;
  for (const auto& entry : corpus()) {
    if (!check_polymatroid(entry.f).is_matroid) continue;
    ++matroids;
    const auto family = cyclic_flat_family(entry.f);
    const auto oracle = testing::matroid_cyclic_flats_by_circuits(entry.f);
    ASSERT_EQ(std::set<Subset>(family.begin(), family.end()),
              std::set<Subset>(oracle.begin(), oracle.end()))
        << entry.name;
  }
  EXPECT_GT(matroids, 50u);
}

TEST(ReconstructCheckTest, Examples) {
  EXPECT_TRUE(reconstruct_check(uniform_matroid(2, 3)).ok);
  EXPECT_TRUE(reconstruct_check(two_twos()).ok);
  EXPECT_TRUE(reconstruct_check(uniform_matroid(0, 3)).ok);
}

TEST(ReconstructCheckTest, HoldsOnCorpus) {
  for (const auto& entry : corpus()) {
    const auto result = reconstruct_check(entry.f);
    ASSERT_TRUE(result.ok) << entry.name << " fails at "
                           << entry.f.ground().format(*result.first_failure);
  }
}

}  // namespace
}  // namespace polyflat
