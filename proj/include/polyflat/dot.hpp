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
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "polyflat/ranked_lattice.hpp"

namespace polyflat {

/// Pairs (lower, upper) of element indices where upper covers lower.
inline std::vector<std::pair<std::size_t, std::size_t>> hasse_edges(const RankedLattice& lattice) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  const std::size_t k = lattice.size();
  for (std::size_t lo = 0; lo < k; ++lo) {
    for (std::size_t hi = 0; hi < k; ++hi) {
      const Subset a = lattice.element(lo).set;
      const Subset b = lattice.element(hi).set;
      if (!a.proper_subset_of(b)) continue;
      bool covered = true;
      for (std::size_t mid = 0; mid < k && covered; ++mid) {
        const Subset c = lattice.element(mid).set;
        if (a.proper_subset_of(c) && c.proper_subset_of(b)) covered = false;
      }
      if (covered) edges.emplace_back(lo, hi);
    }
  }
  return edges;
}

/// Hasse diagram in Graphviz syntax. Nodes are numbered by (cardinality,
/// sorted label list) so output is stable across element orderings.
inline std::string lattice_to_dot(const RankedLattice& lattice) {
  const GroundSet& g = lattice.ground();
  std::vector<std::size_t> order(lattice.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const Subset sa = lattice.element(a).set;
    const Subset sb = lattice.element(b).set;
    if (sa.size() != sb.size()) return sa.size() < sb.size();
    return g.sorted_labels(sa) < g.sorted_labels(sb);
  });
  std::vector<std::size_t> node_id(lattice.size());
  for (std::size_t pos = 0; pos < order.size(); ++pos) node_id[order[pos]] = pos;

  std::string out = "digraph lattice {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    const auto& e = lattice.element(order[pos]);
    out += "  n" + std::to_string(pos) + " [label=\"" + g.format(e.set) + "\\nλ=" +
           format_rat(e.rank) + "\"];\n";
  }
  auto edges = hasse_edges(lattice);
  for (auto& [lo, hi] : edges) {
    lo = node_id[lo];
    hi = node_id[hi];
  }
  std::sort(edges.begin(), edges.end());
  for (const auto& [lo, hi] : edges) {
    out += "  n" + std::to_string(lo) + " -> n" + std::to_string(hi) + ";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace polyflat
