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
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "polyflat/convolution.hpp"
#include "polyflat/error.hpp"
#include "polyflat/polymatroid.hpp"
#include "polyflat/ranked_lattice.hpp"
#include "polyflat/set_function.hpp"

namespace polyflat {

// ---------------------------------------------------------------------------
// Generators

/// Rank function A ↦ min(|A|, k) of U_{k,n} over `ground`.
inline SetFunction uniform_matroid(std::size_t k, const GroundSet& ground) {
  if (k > ground.size()) {
    throw Error(ErrorKind::kBadParameters,
                "U_{k,n} needs k <= n, got k=" + std::to_string(k) +
                    " n=" + std::to_string(ground.size()));
  }
  return SetFunction::tabulate(ground, [&](Subset a) {
    return Rat(static_cast<long long>(std::min(a.size(), k)));
  });
}

inline SetFunction uniform_matroid(std::size_t k, std::size_t n) {
  if (n > GroundSet::kMaxSize) {
    throw Error(ErrorKind::kBadParameters, "n=" + std::to_string(n) + " exceeds 20");
  }
  return uniform_matroid(k, GroundSet::letters(n));
}

struct Edge {
  std::size_t u;
  std::size_t v;
};

/// Cycle matroid of a multigraph: rank(A) = vertices − components of (V, A).
/// Ground elements are the edges, in the order given.
inline SetFunction graphic_matroid(std::size_t vertices, const std::vector<Edge>& edges) {
  if (edges.size() > GroundSet::kMaxSize) {
    throw Error(ErrorKind::kBadParameters, "at most 20 edges are supported");
  }
  for (const auto& e : edges) {
    if (e.u >= vertices || e.v >= vertices) {
      throw Error(ErrorKind::kBadParameters, "edge endpoint out of range");
    }
  }
  return SetFunction::tabulate(GroundSet::letters(edges.size()), [&](Subset a) {
    std::vector<std::size_t> parent(vertices);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    long long rank = 0;
    a.for_each([&](std::size_t i) {
      const std::size_t ru = find(edges[i].u);
      const std::size_t rv = find(edges[i].v);
      if (ru != rv) {
        parent[ru] = rv;
        ++rank;
      }
    });
    return Rat(rank);
  });
}

/// weight · min(|A ∩ support|, k)
struct UniformSummand {
  Subset support;
  std::size_t k = 0;
  Rat weight = 1;
};

/// Non-negative combinations of restricted uniform matroid ranks are
/// polymatroid ranks.
inline SetFunction weighted_uniform_sum(const GroundSet& ground,
                                        const std::vector<UniformSummand>& terms) {
  for (const auto& t : terms) {
    ground.require_within(t.support);
    if (t.weight < 0) throw Error(ErrorKind::kBadParameters, "negative summand weight");
  }
  return SetFunction::tabulate(ground, [&](Subset a) {
    Rat sum = 0;
    for (const auto& t : terms) {
      sum += t.weight * static_cast<long long>(std::min((a & t.support).size(), t.k));
    }
    return sum;
  });
}

struct RandomPolymatroidParams {
  enum class Mode { kWeightedSum, kRejection };
  Mode mode = Mode::kWeightedSum;
  /// Summand count is drawn from [1, max_summands].
  std::size_t max_summands = 3;
  bool integer_weights = false;
  std::int64_t max_weight_numerator = 3;
  std::int64_t max_weight_denominator = 3;
  /// Value cap in rejection mode.
  std::int64_t max_rank = 4;
  std::size_t max_attempts = 100000;
};

namespace detail {

inline std::int64_t uniform_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

// Fills levels in order of cardinality, drawing each value from the interval
// left open by monotonicity and local submodularity against smaller sets; a
// dead end (empty interval) rejects the whole table.
inline std::optional<std::vector<std::int64_t>> draw_bounded_table(std::mt19937_64& rng,
                                                                   std::size_t n,
                                                                   std::int64_t cap) {
  std::vector<Subset> order;
  for_each_subset(n, [&](Subset s) { order.push_back(s); });
  std::stable_sort(order.begin(), order.end(),
                   [](Subset a, Subset b) { return a.size() < b.size(); });
  std::vector<std::int64_t> table(subset_count(n), 0);
  for (Subset b : order) {
    if (b.empty()) continue;
    std::int64_t lo = 0;
    std::int64_t hi = cap;
    b.for_each([&](std::size_t i) { lo = std::max(lo, table[b.without(i).index()]); });
    b.for_each([&](std::size_t i) {
      b.for_each([&](std::size_t j) {
        if (j <= i) return;
        hi = std::min(hi, table[b.without(i).index()] + table[b.without(j).index()] -
                              table[b.without(i).without(j).index()]);
      });
    });
    if (lo > hi) return std::nullopt;
    table[b.index()] = uniform_int(rng, lo, hi);
  }
  return table;
}

}  // namespace detail

/// Deterministic in (seed, n, params). Weighted-sum mode (n ≤ 10) sums random
/// uniform-matroid ranks over random supports with positive weights.
/// Rejection mode (n ≤ 4) draws small-integer tables and keeps the first
/// one that passes check_polymatroid.
inline SetFunction random_polymatroid(std::uint64_t seed, std::size_t n,
                                      const RandomPolymatroidParams& params = {}) {
  std::mt19937_64 rng(seed);
  const GroundSet ground = GroundSet::letters(std::min<std::size_t>(n, GroundSet::kMaxSize));
  if (params.mode == RandomPolymatroidParams::Mode::kWeightedSum) {
    if (n > 10) throw Error(ErrorKind::kBadParameters, "weighted-sum mode supports n <= 10");
    if (params.max_summands == 0 || params.max_weight_numerator < 1 ||
        params.max_weight_denominator < 1) {
      throw Error(ErrorKind::kBadParameters, "summand and weight bounds must be positive");
    }
    std::vector<UniformSummand> terms;
    const auto count = detail::uniform_int(rng, 1, static_cast<std::int64_t>(params.max_summands));
    for (std::int64_t t = 0; t < count && n > 0; ++t) {
      Subset support(static_cast<Subset::Bits>(
          detail::uniform_int(rng, 1, static_cast<std::int64_t>(subset_count(n)) - 1)));
      const auto k = static_cast<std::size_t>(
          detail::uniform_int(rng, 1, static_cast<std::int64_t>(support.size())));
      const auto num = detail::uniform_int(rng, 1, params.max_weight_numerator);
      const auto den =
          params.integer_weights ? 1 : detail::uniform_int(rng, 1, params.max_weight_denominator);
      terms.push_back({support, k, Rat(num, den)});
    }
    return weighted_uniform_sum(ground, terms);
  }

  if (n > 4) throw Error(ErrorKind::kBadParameters, "rejection mode supports n <= 4");
  if (params.max_rank < 0) throw Error(ErrorKind::kBadParameters, "negative rank cap");
  for (std::size_t attempt = 0; attempt < params.max_attempts; ++attempt) {
    const auto table = detail::draw_bounded_table(rng, n, params.max_rank);
    if (!table) continue;
    std::vector<Rat> values(table->begin(), table->end());
    SetFunction f(ground, std::move(values));
    if (check_polymatroid(f).is_polymatroid()) return f;
  }
  throw Error(ErrorKind::kBadParameters, "rejection sampling did not converge");
}

// ---------------------------------------------------------------------------
// Helgason expansion

/// Groups the expanded ground set N into blocks M_i, one per original element.
struct ExpansionMap {
  GroundSet original;
  GroundSet expanded;
  std::vector<Subset> blocks;

  /// ∪_{i∈A} M_i
  Subset block_union(Subset a) const {
    Subset out;
    a.for_each([&](std::size_t i) { out = out | blocks[i]; });
    return out;
  }
};

struct HelgasonExpansion {
  SetFunction matroid;
  ExpansionMap map;
  /// Block-closed subsets of N ranked by f, and the 0/1 measure.
  RankedLattice lattice;
  Measure measure;
};

/// Expands an integer polymatroid into a matroid on N = ∪ M_i with
/// |M_i| = max(1, f(i)), such that f is the factor given by the blocks.
/// Expanded labels are "<label>#1", "<label>#2", ...
inline HelgasonExpansion helgason_expand(const SetFunction& f) {
  if (!f.integer_valued()) throw Error(ErrorKind::kNotInteger, "f is not integer-valued");
  if (!check_polymatroid(f).is_polymatroid()) {
    throw Error(ErrorKind::kNotPolymatroid, "f is not a polymatroid");
  }
  const GroundSet& m = f.ground();
  std::vector<std::string> names;
  std::vector<std::size_t> block_sizes;
  std::unordered_set<std::string> seen;
  for (std::size_t i = 0; i < m.size(); ++i) {
    const auto size = std::max<long long>(
        1, static_cast<long long>(boost::multiprecision::numerator(f.singleton(i))));
    if (names.size() + static_cast<std::size_t>(size) > GroundSet::kMaxSize) {
      throw Error(ErrorKind::kBadParameters, "expanded ground set exceeds 20 elements");
    }
    block_sizes.push_back(static_cast<std::size_t>(size));
    for (long long copy = 1; copy <= size; ++copy) {
      std::string label = m.name(i) + "#" + std::to_string(copy);
      if (!seen.insert(label).second) {
        throw Error(ErrorKind::kLabelCollision, "expanded label \"" + label + "\" collides");
      }
      names.push_back(std::move(label));
    }
  }

  ExpansionMap map{m, GroundSet(std::move(names)), {}};
  std::size_t next = 0;
  for (std::size_t size : block_sizes) {
    Subset block;
    for (std::size_t c = 0; c < size; ++c) block = block.with(next++);
    map.blocks.push_back(block);
  }

  std::vector<LatticeElement> elements;
  for_each_subset(m.size(), [&](Subset a) { elements.push_back({map.block_union(a), f(a)}); });
  RankedLattice lattice = RankedLattice::validate(map.expanded, std::move(elements));

  std::vector<Rat> singleton(map.expanded.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    const Rat value = std::min(Rat(1), f.singleton(i));
    map.blocks[i].for_each([&](std::size_t a) { singleton[a] = value; });
  }
  Measure mu(map.expanded, std::move(singleton));
  SetFunction r = convolve(lattice, mu);
  return {std::move(r), std::move(map), std::move(lattice), std::move(mu)};
}

// ---------------------------------------------------------------------------
// Infiltration

/// f lives on M ∪ {pivot}, g on P; P must be disjoint from M ∪ {pivot} and
/// f(pivot) = g(P).
struct InfiltrationSpec {
  SetFunction f;
  std::string pivot;
  SetFunction g;
};

namespace detail {

struct InfiltrationLayout {
  GroundSet ground;            // M then P
  std::size_t pivot = 0;       // index of c in f's ground
  std::vector<std::size_t> m;  // result index -> f index, for the M part
  std::size_t m_size = 0;
};

inline InfiltrationLayout infiltration_layout(const InfiltrationSpec& spec) {
  const auto pivot = spec.f.ground().index_of(spec.pivot);
  if (!pivot) {
    throw Error(ErrorKind::kBadParameters,
                "pivot \"" + spec.pivot + "\" is not an element of f's ground set");
  }
  for (const auto& label : spec.g.ground().names()) {
    if (spec.f.ground().index_of(label)) {
      throw Error(ErrorKind::kGroundOverlap, "label \"" + label + "\" occurs in both ground sets");
    }
  }
  if (!check_polymatroid(spec.f).is_polymatroid()) {
    throw Error(ErrorKind::kNotPolymatroid, "f is not a polymatroid");
  }
  if (!check_polymatroid(spec.g).is_polymatroid()) {
    throw Error(ErrorKind::kNotPolymatroid, "g is not a polymatroid");
  }
  const Rat& fc = spec.f.singleton(*pivot);
  const Rat& gp = spec.g(spec.g.ground().full());
  if (fc != gp) {
    throw Error(ErrorKind::kRankMismatch,
                "f(" + spec.pivot + ")=" + format_rat(fc) + " but g(P)=" + format_rat(gp));
  }
  InfiltrationLayout layout;
  layout.pivot = *pivot;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < spec.f.size(); ++i) {
    if (i == *pivot) continue;
    names.push_back(spec.f.ground().name(i));
    layout.m.push_back(i);
  }
  layout.m_size = names.size();
  for (const auto& label : spec.g.ground().names()) names.push_back(label);
  if (names.size() > GroundSet::kMaxSize) {
    throw Error(ErrorKind::kBadParameters, "M ∪ P exceeds 20 elements");
  }
  layout.ground = GroundSet(std::move(names));
  return layout;
}

// Splits a subset of M ∪ P into (subset of f's ground, subset of g's ground).
inline std::pair<Subset, Subset> split(const InfiltrationLayout& layout, Subset a) {
  Subset in_f;
  Subset in_g;
  a.for_each([&](std::size_t i) {
    if (i < layout.m_size) {
      in_f = in_f.with(layout.m[i]);
    } else {
      in_g = in_g.with(i - layout.m_size);
    }
  });
  return {in_f, in_g};
}

}  // namespace detail

/// r(A) = min{ f(A∩M) + g(A∩P), f((A∩M) ∪ c) } on M ∪ P.
inline SetFunction infiltrate(const InfiltrationSpec& spec) {
  const auto layout = detail::infiltration_layout(spec);
  return SetFunction::tabulate(layout.ground, [&](Subset a) {
    const auto [in_f, in_g] = detail::split(layout, a);
    return std::min(spec.f(in_f) + spec.g(in_g), spec.f(in_f.with(layout.pivot)));
  });
}

/// The same extension built as the convolution of two ranked lattices:
/// L1 holds the sets meeting P fully or not at all, L2 the subsets of P.
inline SetFunction infiltrate_via_lattices(const InfiltrationSpec& spec) {
  const auto layout = detail::infiltration_layout(spec);
  const Subset p_part = layout.ground.full() - Subset::full(layout.m_size);

  std::vector<LatticeElement> first;
  for_each_subset(layout.m_size, [&](Subset s) {
    const auto [in_f, unused] = detail::split(layout, s);
    const Rat without_p = spec.f(in_f);
    const Rat with_p = spec.f(in_f.with(layout.pivot));
    if (p_part.empty()) {
      first.push_back({s, std::min(without_p, with_p)});
    } else {
      first.push_back({s, without_p});
      first.push_back({s | p_part, with_p});
    }
  });

  std::vector<LatticeElement> second;
  for_each_subset_of(p_part, [&](Subset s) {
    const auto [unused, in_g] = detail::split(layout, s);
    second.push_back({s, spec.g(in_g)});
  });

  return convolve_lattices(RankedLattice::validate(layout.ground, std::move(first)),
                           RankedLattice::validate(layout.ground, std::move(second)));
}

}  // namespace polyflat
