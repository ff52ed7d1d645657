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

#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "polyflat/conditions.hpp"
#include "polyflat/error.hpp"
#include "polyflat/polymatroid.hpp"
#include "polyflat/ranked_lattice.hpp"
#include "polyflat/set_function.hpp"

namespace polyflat {

/// Convolution values together with, for every subset, the lowest-index
/// lattice element attaining the minimum.
struct ConvolutionTrace {
  SetFunction values;
  std::vector<std::size_t> argmin;
};

inline ConvolutionTrace convolve_traced(const RankedLattice& lattice, const Measure& mu) {
  if (!(lattice.ground() == mu.ground())) {
    throw Error(ErrorKind::kGroundSetMismatch, "lattice and measure use different ground sets");
  }
  const std::size_t n = lattice.ground().size();
  std::vector<Rat> values(subset_count(n));
  std::vector<std::size_t> argmin(subset_count(n), 0);
  for_each_subset(n, [&](Subset a) {
    std::optional<Rat> best;
    for (std::size_t z = 0; z < lattice.size(); ++z) {
      const auto& e = lattice.element(z);
      Rat v = e.rank + mu(a - e.set);
      if (!best || v < *best) {
        best = std::move(v);
        argmin[a.index()] = z;
      }
    }
    values[a.index()] = std::move(*best);
  });
  return {SetFunction(lattice.ground(), std::move(values)), std::move(argmin)};
}

/// r(A) = min over Z in L of λ(Z) + μ(A − Z).
inline SetFunction convolve(const RankedLattice& lattice, const Measure& mu) {
  return convolve_traced(lattice, mu).values;
}

/// r(A) = min of λ1(Z1) + λ2(Z2) over pairs with A ⊆ Z1 ∪ Z2, on the ground
/// elements of I_L1 ∪ I_L2 (kept in the original order). The result need
/// not be a polymatroid.
inline SetFunction convolve_lattices(const RankedLattice& first, const RankedLattice& second) {
  if (!(first.ground() == second.ground())) {
    throw Error(ErrorKind::kGroundSetMismatch, "lattices use different ground sets");
  }
  const GroundSet& g = first.ground();
  const Subset cover = first.top() | second.top();

  std::vector<std::string> names;
  std::vector<std::size_t> original;
  cover.for_each([&](std::size_t i) {
    names.push_back(g.name(i));
    original.push_back(i);
  });
  GroundSet result_ground(std::move(names));

  return SetFunction::tabulate(result_ground, [&](Subset a) {
    Subset lifted;
    a.for_each([&](std::size_t i) { lifted = lifted.with(original[i]); });
    std::optional<Rat> best;
    for (const auto& z1 : first.elements()) {
      for (const auto& z2 : second.elements()) {
        if (!lifted.subset_of(z1.set | z2.set)) continue;
        Rat v = z1.rank + z2.rank;
        if (!best || v < *best) best = std::move(v);
      }
    }
    return *best;
  });
}

/// r restricted to singletons.
inline std::vector<Rat> convolution_singleton_profile(const RankedLattice& lattice,
                                                      const Measure& mu) {
  if (!(lattice.ground() == mu.ground())) {
    throw Error(ErrorKind::kGroundSetMismatch, "lattice and measure use different ground sets");
  }
  std::vector<Rat> out;
  for (std::size_t i = 0; i < lattice.ground().size(); ++i) {
    const Subset a = Subset::singleton(i);
    std::optional<Rat> best;
    for (const auto& e : lattice.elements()) {
      Rat v = e.rank + mu(a - e.set);
      if (!best || v < *best) best = std::move(v);
    }
    out.push_back(std::move(*best));
  }
  return out;
}

enum class MismatchKind {
  kMissingCyclicFlat,     // lattice member that is not a cyclic flat of r
  kExtraCyclicFlat,       // cyclic flat of r that is not a lattice member
  kRankDiffers,           // both, but r(Z) ≠ λ(Z)
  kSingletonDiffers,      // r(a) differs from the expected measure value
};

struct RecoveryMismatch {
  MismatchKind kind;
  Subset set;
  std::optional<std::size_t> element;
  Rat expected;
  Rat actual;
};

struct RoundTripReport {
  ConditionReport conditions;
  PolymatroidReport polymatroid;
  bool is_polymatroid = false;
  bool lattice_recovered = false;
  bool measure_recovered = false;
  std::vector<RecoveryMismatch> mismatches;
  SetFunction convolution;

  bool round_trip_ok() const { return is_polymatroid && lattice_recovered && measure_recovered; }
  /// False only if the characterizing conditions pass yet recovery fails.
  bool consistent() const {
    return !conditions.characterizing_conditions_pass() || round_trip_ok();
  }
};

/// Runs the condition checks, convolves, and tests whether the convolution
/// gives back the lattice as its cyclic flats (with equal ranks) and μ as
/// its singleton ranks (μ taken as 0 on O_L).
inline RoundTripReport verify_main_theorem(const RankedLattice& lattice, const Measure& mu) {
  RoundTripReport report;
  report.conditions = check_conditions(lattice, mu);
  report.convolution = convolve(lattice, mu);
  const SetFunction& r = report.convolution;
  report.polymatroid = check_polymatroid(r);
  report.is_polymatroid = report.polymatroid.is_polymatroid();

  report.lattice_recovered = true;
  const auto family = cyclic_flat_family(r);
  for (const auto& e : lattice.elements()) {
    if (std::find(family.begin(), family.end(), e.set) == family.end()) {
      report.lattice_recovered = false;
      report.mismatches.push_back(
          {MismatchKind::kMissingCyclicFlat, e.set, std::nullopt, e.rank, r(e.set)});
    } else if (r(e.set) != e.rank) {
      report.lattice_recovered = false;
      report.mismatches.push_back(
          {MismatchKind::kRankDiffers, e.set, std::nullopt, e.rank, r(e.set)});
    }
  }
  for (Subset c : family) {
    if (!lattice.contains(c)) {
      report.lattice_recovered = false;
      report.mismatches.push_back({MismatchKind::kExtraCyclicFlat, c, std::nullopt, Rat(0), r(c)});
    }
  }

  report.measure_recovered = true;
  const Subset bottom = lattice.bottom();
  for (std::size_t a = 0; a < r.size(); ++a) {
    const Rat expected = bottom.contains(a) ? Rat(0) : mu.singleton(a);
    if (r.singleton(a) != expected) {
      report.measure_recovered = false;
      report.mismatches.push_back({MismatchKind::kSingletonDiffers, Subset::singleton(a), a,
                                   expected, r.singleton(a)});
    }
  }
  return report;
}

inline std::string format_mismatch(const RecoveryMismatch& m, const GroundSet& g) {
  switch (m.kind) {
    case MismatchKind::kMissingCyclicFlat:
      return "lattice member " + g.format(m.set) + " is not a cyclic flat of the convolution";
    case MismatchKind::kExtraCyclicFlat:
      return "cyclic flat " + g.format(m.set) + " of the convolution is not in the lattice";
    case MismatchKind::kRankDiffers:
      return "r(" + g.format(m.set) + ")=" + format_rat(m.actual) + " but λ=" +
             format_rat(m.expected);
    case MismatchKind::kSingletonDiffers:
      return "r(" + g.name(*m.element) + ")=" + format_rat(m.actual) + " but expected " +
             format_rat(m.expected);
  }
  return "";
}

}  // namespace polyflat
