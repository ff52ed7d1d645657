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

#include "polyflat/error.hpp"
#include "polyflat/ranked_lattice.hpp"
#include "polyflat/set_function.hpp"
#include "polyflat/subset.hpp"

namespace polyflat {

enum class ViolationKind {
  kNegative,          // f(a) < 0 at set `a`
  kNotMonotone,       // f(a) > f(b) with b = a ∪ {i}
  kNotSubmodular,     // f(a∪i) + f(a∪j) < f(a∪i∪j) + f(a)
  kNotInteger,        // f(a) is not an integer
  kNotNormalized,     // f(∅) ≠ 0, so not a matroid rank function
  kSingletonNotBinary // f({i}) ∉ {0, 1}
};

inline std::string_view to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::kNegative: return "negative";
    case ViolationKind::kNotMonotone: return "not monotone";
    case ViolationKind::kNotSubmodular: return "not submodular";
    case ViolationKind::kNotInteger: return "not integer";
    case ViolationKind::kNotNormalized: return "f(∅) ≠ 0";
    case ViolationKind::kSingletonNotBinary: return "singleton rank not 0/1";
  }
  return "?";
}

struct PolymatroidViolation {
  ViolationKind kind;
  Subset a;
  Subset b;
  std::optional<std::size_t> i;
  std::optional<std::size_t> j;
  Rat lhs;  // the side that should be >= rhs (or the offending value)
  Rat rhs;
};

struct PolymatroidReport {
  bool nonnegative = true;
  bool monotone = true;
  bool submodular = true;
  bool integer_valued = true;
  /// f(∅) = 0.
  bool normalized = true;
  bool is_matroid = true;
  /// First violation found; present whenever any flag above is false.
  std::optional<PolymatroidViolation> witness;

  bool is_polymatroid() const { return nonnegative && monotone && submodular; }
};

inline std::string format_violation(const PolymatroidViolation& v, const GroundSet& g) {
  auto with = [&](Subset s, std::optional<std::size_t> i) {
    return i ? s.with(*i) : s;
  };
  switch (v.kind) {
    case ViolationKind::kNegative:
      return "f(" + g.format(v.a) + ")=" + format_rat(v.lhs) + " < 0";
    case ViolationKind::kNotMonotone:
      return "f(" + g.format(v.a) + ")=" + format_rat(v.lhs) + " > f(" + g.format(v.b) +
             ")=" + format_rat(v.rhs);
    case ViolationKind::kNotSubmodular:
      return "A=" + g.format(v.a) + " i=" + g.name(*v.i) + " j=" + g.name(*v.j) + ": f(" +
             g.format(with(v.a, v.i)) + ")+f(" + g.format(with(v.a, v.j)) + ")=" +
             format_rat(v.lhs) + " < f(" + g.format(with(with(v.a, v.i), v.j)) + ")+f(" +
             g.format(v.a) + ")=" + format_rat(v.rhs);
    case ViolationKind::kNotInteger:
      return "f(" + g.format(v.a) + ")=" + format_rat(v.lhs) + " is not an integer";
    case ViolationKind::kNotNormalized:
      return "f(∅)=" + format_rat(v.lhs) + " ≠ 0";
    case ViolationKind::kSingletonNotBinary:
      return "f(" + g.name(*v.i) + ")=" + format_rat(v.lhs) + " ∉ {0,1}";
  }
  return "";
}

/// Checks the polymatroid axioms. Monotonicity and submodularity are tested
/// in their local forms: f(A) ≤ f(A∪i), and f(A∪i)+f(A∪j) ≥ f(A∪i∪j)+f(A)
/// for distinct i, j ∉ A.
inline PolymatroidReport check_polymatroid(const SetFunction& f) {
  PolymatroidReport report;
  const std::size_t n = f.size();
  auto note = [&](PolymatroidViolation v) {
    if (!report.witness) report.witness = std::move(v);
  };

  for_each_subset(n, [&](Subset a) {
    if (report.nonnegative && f(a) < 0) {
      report.nonnegative = false;
      note({ViolationKind::kNegative, a, a, std::nullopt, std::nullopt, f(a), Rat(0)});
    }
  });

  for_each_subset(n, [&](Subset a) {
    if (!report.monotone) return;
    for (std::size_t i = 0; i < n && report.monotone; ++i) {
      if (a.contains(i)) continue;
      if (f(a) > f(a.with(i))) {
        report.monotone = false;
        note({ViolationKind::kNotMonotone, a, a.with(i), i, std::nullopt, f(a), f(a.with(i))});
      }
    }
  });

  for_each_subset(n, [&](Subset a) {
    if (!report.submodular) return;
    for (std::size_t i = 0; i < n && report.submodular; ++i) {
      if (a.contains(i)) continue;
      for (std::size_t j = i + 1; j < n; ++j) {
        if (a.contains(j)) continue;
        const Rat lhs = f(a.with(i)) + f(a.with(j));
        const Rat rhs = f(a.with(i).with(j)) + f(a);
        if (lhs < rhs) {
          report.submodular = false;
          note({ViolationKind::kNotSubmodular, a, a.with(i).with(j), i, j, lhs, rhs});
          break;
        }
      }
    }
  });

  for_each_subset(n, [&](Subset a) {
    if (report.integer_valued && !is_integer(f(a))) {
      report.integer_valued = false;
      note({ViolationKind::kNotInteger, a, a, std::nullopt, std::nullopt, f(a), Rat(0)});
    }
  });

  if (f(Subset{}) != 0) {
    report.normalized = false;
    note({ViolationKind::kNotNormalized, Subset{}, Subset{}, std::nullopt, std::nullopt,
          f(Subset{}), Rat(0)});
  }

  bool binary_singletons = true;
  for (std::size_t i = 0; i < n && binary_singletons; ++i) {
    const Rat& v = f.singleton(i);
    if (v != 0 && v != 1) {
      binary_singletons = false;
      if (report.is_polymatroid() && report.integer_valued && report.normalized) {
        note({ViolationKind::kSingletonNotBinary, Subset::singleton(i), Subset::singleton(i), i,
              std::nullopt, v, Rat(0)});
      }
    }
  }
  report.is_matroid = report.is_polymatroid() && report.integer_valued && report.normalized &&
                      binary_singletons;
  return report;
}

/// Elements of rank zero.
inline Subset loops(const SetFunction& f) {
  Subset out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f.singleton(i) == 0) out = out.with(i);
  }
  return out;
}

/// Elements a with f(M) − f(M−a) = f(a).
inline Subset coloops(const SetFunction& f) {
  const Subset m = f.ground().full();
  Subset out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f(m) - f(m.without(i)) == f.singleton(i)) out = out.with(i);
  }
  return out;
}

/// Smallest flat containing `a`: absorb every element that does not raise
/// the rank until nothing changes.
inline Subset closure(const SetFunction& f, Subset a) {
  f.ground().require_within(a);
  Subset current = a;
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (!current.contains(i) && f(current.with(i)) == f(current)) {
        current = current.with(i);
        grew = true;
      }
    }
  }
  return current;
}

inline bool is_flat(const SetFunction& f, Subset s) {
  f.ground().require_within(s);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (!s.contains(i) && f(s.with(i)) <= f(s)) return false;
  }
  return true;
}

/// All flats, by increasing cardinality and then by bit pattern.
inline std::vector<Subset> flats(const SetFunction& f) {
  std::vector<Subset> out;
  for_each_subset(f.size(), [&](Subset s) {
    if (is_flat(f, s)) out.push_back(s);
  });
  std::stable_sort(out.begin(), out.end(),
                   [](Subset a, Subset b) { return a.size() < b.size(); });
  return out;
}

inline bool is_cyclic_flat(const SetFunction& f, Subset c) {
  if (!is_flat(f, c)) return false;
  bool cyclic = true;
  c.for_each([&](std::size_t i) {
    const Rat& fi = f.singleton(i);
    if (fi != 0 && !(f(c) - f(c.without(i)) < fi)) cyclic = false;
  });
  return cyclic;
}

/// Which end of the element order max_cyclic_flat tries first.
enum class ScanOrder { kAscending, kDescending };

/// The unique largest cyclic flat inside the flat F: repeatedly drop an
/// element x with f(x) > 0 and f(F) − f(F−x) = f(x).
inline Subset max_cyclic_flat(const SetFunction& f, Subset flat,
                              ScanOrder order = ScanOrder::kAscending) {
  if (!is_flat(f, flat)) {
    throw Error(ErrorKind::kNotAFlat, f.ground().format(flat) + " is not a flat");
  }
  const std::size_t n = f.size();
  Subset current = flat;
  bool removed = true;
  while (removed) {
    removed = false;
    for (std::size_t step = 0; step < n; ++step) {
      const std::size_t x = order == ScanOrder::kAscending ? step : n - 1 - step;
      if (!current.contains(x)) continue;
      const Rat& fx = f.singleton(x);
      if (fx > 0 && f(current) - f(current.without(x)) == fx) {
        current = current.without(x);
        removed = true;
        break;
      }
    }
  }
  return current;
}

/// Every cyclic flat, by increasing cardinality then bit pattern. Defined
/// for any set function; no lattice structure is assumed.
inline std::vector<Subset> cyclic_flat_family(const SetFunction& f) {
  std::vector<Subset> out;
  for_each_subset(f.size(), [&](Subset s) {
    if (is_cyclic_flat(f, s)) out.push_back(s);
  });
  std::stable_sort(out.begin(), out.end(),
                   [](Subset a, Subset b) { return a.size() < b.size(); });
  return out;
}

struct CyclicFlats {
  RankedLattice lattice;
  Measure measure;
};

/// The lattice of cyclic flats ranked by f, together with μ_f.
inline CyclicFlats cyclic_flats(const SetFunction& f) {
  std::vector<LatticeElement> elements;
  for (Subset s : cyclic_flat_family(f)) elements.push_back({s, f(s)});
  return {RankedLattice::validate(f.ground(), std::move(elements)), induced_measure(f)};
}

struct ReconstructResult {
  bool ok = true;
  /// First A (in bit order) where f(A) differs from the cyclic-flat minimum.
  std::optional<Subset> first_failure;
  Rat expected;
  Rat actual;
};

/// Self-test: f(A) must equal min over cyclic flats C of f(C) + μ_f(A − C).
inline ReconstructResult reconstruct_check(const SetFunction& f) {
  const auto family = cyclic_flat_family(f);
  const Measure mu = induced_measure(f);
  ReconstructResult result;
  for_each_subset(f.size(), [&](Subset a) {
    if (!result.ok) return;
    std::optional<Rat> best;
    for (Subset c : family) {
      Rat v = f(c) + mu(a - c);
      if (!best || v < *best) best = std::move(v);
    }
    if (!best || *best != f(a)) {
      result.ok = false;
      result.first_failure = a;
      result.expected = f(a);
      result.actual = best.value_or(Rat(-1));
    }
  });
  return result;
}

}  // namespace polyflat
