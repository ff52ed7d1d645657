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

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "polyflat/error.hpp"
#include "polyflat/ranked_lattice.hpp"
#include "polyflat/set_function.hpp"

namespace polyflat {

// The axiom system for a ranked lattice (λ, L) together with a measure μ:
//   C1   λ(O_L) = 0
//   C2   Z1 ≤ Z2  ⇒  0 ≤ λ(Z2) − λ(Z1) ≤ μ(Z2 − Z1)
//   C*   Z1 < Z2  ⇒  0 < λ(Z2) − λ(Z1) < μ(Z2 − Z1)
//   C3   λ(Z1) + λ(Z2) ≥ λ(Z1 ∨ Z2) + λ(Z1 ∧ Z2) + μ(Z1 ∩ Z2 − Z1 ∧ Z2)
//   C4   a ∈ Z  ⇒  μ(a) ≤ λ(Z)
//   C5a  λ(Z) > 0 for Z ≠ O_L
//   C5b  μ(a) > 0 for a ∉ O_L
enum class Condition { kC1, kC2, kCStar, kC3, kC4, kC5a, kC5b };

inline constexpr std::array<Condition, 7> kAllConditions = {
    Condition::kC1, Condition::kC2,  Condition::kCStar, Condition::kC3,
    Condition::kC4, Condition::kC5a, Condition::kC5b};

inline std::string_view to_string(Condition c) {
  switch (c) {
    case Condition::kC1: return "C1";
    case Condition::kC2: return "C2";
    case Condition::kCStar: return "C*";
    case Condition::kC3: return "C3";
    case Condition::kC4: return "C4";
    case Condition::kC5a: return "C5a";
    case Condition::kC5b: return "C5b";
  }
  return "?";
}

/// The relation `lhs REL rhs` that a condition requires.
enum class Relation { kEqual, kLess, kLessEqual, kGreater, kGreaterEqual };

inline bool holds(const Rat& lhs, Relation rel, const Rat& rhs) {
  switch (rel) {
    case Relation::kEqual: return lhs == rhs;
    case Relation::kLess: return lhs < rhs;
    case Relation::kLessEqual: return lhs <= rhs;
    case Relation::kGreater: return lhs > rhs;
    case Relation::kGreaterEqual: return lhs >= rhs;
  }
  return false;
}

/// A concrete violation: `lhs rel rhs` is required but false for the cited
/// lattice members and ground element.
struct ConditionWitness {
  std::vector<Subset> sets;
  std::optional<std::size_t> element;
  Rat lhs;
  Relation rel = Relation::kEqual;
  Rat rhs;
  /// Human-readable form of the failed inequality, e.g.
  /// "λ({x,y})−λ(∅)=4 = μ({x,y}−∅)=4".
  std::string text;
};

struct ConditionVerdict {
  bool pass = true;
  std::optional<ConditionWitness> witness;
};

struct ConditionReport {
  std::array<ConditionVerdict, kAllConditions.size()> verdicts;
  /// Ground elements outside I_L; the convolution prices them by μ alone.
  Subset uncovered;

  const ConditionVerdict& operator[](Condition c) const {
    return verdicts[static_cast<std::size_t>(c)];
  }
  ConditionVerdict& operator[](Condition c) { return verdicts[static_cast<std::size_t>(c)]; }

  bool passes(Condition c) const { return (*this)[c].pass; }

  /// C1, C*, C3, C4 and C5 (both parts): the characterizing set.
  bool characterizing_conditions_pass() const {
    return passes(Condition::kC1) && passes(Condition::kCStar) && passes(Condition::kC3) &&
           passes(Condition::kC4) && passes(Condition::kC5a) && passes(Condition::kC5b);
  }
};

namespace detail {

inline void record(ConditionReport& report, Condition c, ConditionWitness w) {
  auto& verdict = report[c];
  if (!verdict.pass) return;  // keep the first witness in scan order
  verdict.pass = false;
  verdict.witness = std::move(w);
}

inline std::string rel_symbol_negated(Relation rel) {
  switch (rel) {
    case Relation::kEqual: return "≠";
    case Relation::kLess: return "≥";
    case Relation::kLessEqual: return ">";
    case Relation::kGreater: return "≤";
    case Relation::kGreaterEqual: return "<";
  }
  return "?";
}

// Renders the failed comparison; equal sides print as "=" so boundary cases
// read naturally ("... =4 = μ(...)=4").
inline std::string violation_symbol(const Rat& lhs, Relation rel, const Rat& rhs) {
  if (lhs == rhs && rel != Relation::kEqual) return "=";
  return rel_symbol_negated(rel);
}

// C2 and C* share the same two-sided shape; only strictness differs.
inline void check_monotone_pair(ConditionReport& report, const RankedLattice& lattice,
                                const Measure& mu, std::size_t lo, std::size_t hi,
                                Condition c, bool strict) {
  const GroundSet& g = lattice.ground();
  const Subset z1 = lattice.element(lo).set;
  const Subset z2 = lattice.element(hi).set;
  const Rat diff = lattice.element(hi).rank - lattice.element(lo).rank;
  const Rat gap = mu(z2 - z1);
  const std::string diff_text =
      "λ(" + g.format(z2) + ")−λ(" + g.format(z1) + ")=" + format_rat(diff);
  const Relation rel = strict ? Relation::kLess : Relation::kLessEqual;
  if (!holds(Rat(0), rel, diff)) {
    record(report, c,
           {{z1, z2}, std::nullopt, Rat(0), rel, diff,
            diff_text + " " + violation_symbol(diff, Relation::kGreaterEqual, Rat(0)) + " 0"});
    return;
  }
  if (!holds(diff, rel, gap)) {
    record(report, c,
           {{z1, z2}, std::nullopt, diff, rel, gap,
            diff_text + " " + violation_symbol(diff, rel, gap) + " μ(" + g.format(z2) + "−" +
                g.format(z1) + ")=" + format_rat(gap)});
  }
}

}  // namespace detail

/// Evaluates every condition. Scans run over lattice element indices in
/// order, and each failed condition keeps its first witness.
inline ConditionReport check_conditions(const RankedLattice& lattice, const Measure& mu) {
  if (!(lattice.ground() == mu.ground())) {
    throw Error(ErrorKind::kGroundSetMismatch, "lattice and measure use different ground sets");
  }
  const GroundSet& g = lattice.ground();
  const std::size_t k = lattice.size();
  const Subset bottom = lattice.bottom();
  ConditionReport report;
  report.uncovered = g.full() - lattice.top();

  const Rat& bottom_rank = lattice.element(lattice.bottom_index()).rank;
  if (bottom_rank != 0) {
    detail::record(report, Condition::kC1,
                   {{bottom}, std::nullopt, bottom_rank, Relation::kEqual, Rat(0),
                    "λ(O_L)=λ(" + g.format(bottom) + ")=" + format_rat(bottom_rank) + " ≠ 0"});
  }

  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j) continue;
      const Subset z1 = lattice.element(i).set;
      const Subset z2 = lattice.element(j).set;
      if (!z1.proper_subset_of(z2)) continue;
      detail::check_monotone_pair(report, lattice, mu, i, j, Condition::kC2, false);
      detail::check_monotone_pair(report, lattice, mu, i, j, Condition::kCStar, true);
    }
  }

  // All pairs, comparable ones included: those reduce to an identity, so a
  // failure there means the meet/join tables are broken.
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i; j < k; ++j) {
      const auto& e1 = lattice.element(i);
      const auto& e2 = lattice.element(j);
      const auto& m = lattice.element(lattice.meet_index(i, j));
      const auto& u = lattice.element(lattice.join_index(i, j));
      const Rat lhs = e1.rank + e2.rank;
      const Subset gap = (e1.set & e2.set) - m.set;
      const Rat rhs = u.rank + m.rank + mu(gap);
      if (lhs >= rhs) continue;
      if (e1.set.subset_of(e2.set) || e2.set.subset_of(e1.set)) {
        throw std::logic_error("C3 failed on a comparable pair");
      }
      detail::record(report, Condition::kC3,
                     {{e1.set, e2.set}, std::nullopt, lhs, Relation::kGreaterEqual, rhs,
                      "λ(" + g.format(e1.set) + ")+λ(" + g.format(e2.set) + ")=" +
                          format_rat(lhs) + " < λ(" + g.format(u.set) + ")+λ(" +
                          g.format(m.set) + ")+μ(" + g.format(gap) + ")=" + format_rat(rhs)});
    }
  }

  for (std::size_t i = 0; i < k; ++i) {
    const auto& e = lattice.element(i);
    bool reported = false;
    e.set.for_each([&](std::size_t a) {
      if (reported || mu.singleton(a) <= e.rank) return;
      reported = true;
      detail::record(report, Condition::kC4,
                     {{e.set}, a, mu.singleton(a), Relation::kLessEqual, e.rank,
                      "μ(" + g.name(a) + ")=" + format_rat(mu.singleton(a)) + " > λ(" +
                          g.format(e.set) + ")=" + format_rat(e.rank)});
    });
  }

  for (std::size_t i = 0; i < k; ++i) {
    const auto& e = lattice.element(i);
    if (i == lattice.bottom_index() || e.rank > 0) continue;
    detail::record(report, Condition::kC5a,
                   {{e.set}, std::nullopt, e.rank, Relation::kGreater, Rat(0),
                    "λ(" + g.format(e.set) + ")=" + format_rat(e.rank) + " ≤ 0"});
  }

  for (std::size_t a = 0; a < g.size(); ++a) {
    if (bottom.contains(a) || mu.singleton(a) > 0) continue;
    detail::record(report, Condition::kC5b,
                   {{}, a, mu.singleton(a), Relation::kGreater, Rat(0),
                    "μ(" + g.name(a) + ")=" + format_rat(mu.singleton(a)) + " ≤ 0"});
  }
  return report;
}

inline std::string format_report(const ConditionReport& report, const GroundSet& ground) {
  std::string out;
  for (Condition c : kAllConditions) {
    const auto& v = report[c];
    out += std::string(to_string(c)) + (v.pass ? " pass" : " FAIL");
    if (v.witness) out += ": " + v.witness->text;
    out += "\n";
  }
  if (!report.uncovered.empty()) {
    out += "note: elements outside I_L: " + ground.format(report.uncovered) + "\n";
  }
  return out;
}

}  // namespace polyflat
