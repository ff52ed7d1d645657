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
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "polyflat/error.hpp"
#include "polyflat/ground_set.hpp"
#include "polyflat/rational.hpp"
#include "polyflat/subset.hpp"

namespace polyflat {

struct LatticeElement {
  Subset set;
  Rat rank;

  friend bool operator==(const LatticeElement&, const LatticeElement&) = default;
};

/// Raised when a family of sets has a pair without a greatest lower bound or
/// least upper bound inside the family.
class NotALatticeError : public Error {
 public:
  NotALatticeError(Subset first, Subset second, std::string reason,
                   const std::string& message)
      : Error(ErrorKind::kNotALattice, message),
        first_(first),
        second_(second),
        reason_(std::move(reason)) {}

  Subset first() const { return first_; }
  Subset second() const { return second_; }
  const std::string& reason() const { return reason_; }

 private:
  Subset first_;
  Subset second_;
  std::string reason_;
};

/// A finite family of subsets that is a lattice under inclusion, each member
/// carrying a non-negative rank. Meets and joins are taken inside the family
/// and are tabulated at construction. Element order is the order given to
/// validate(); witness scans follow it.
class RankedLattice {
 public:
  static RankedLattice validate(GroundSet ground, std::vector<LatticeElement> elements) {
    RankedLattice lattice;
    lattice.ground_ = std::move(ground);
    lattice.elements_ = std::move(elements);
    lattice.build_tables();
    return lattice;
  }

  const GroundSet& ground() const { return ground_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<LatticeElement>& elements() const { return elements_; }
  const LatticeElement& element(std::size_t i) const { return elements_.at(i); }

  std::optional<std::size_t> find(Subset s) const {
    const auto it = index_.find(s);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  bool contains(Subset s) const { return index_.contains(s); }

  std::size_t index_of(Subset s) const {
    const auto i = find(s);
    if (!i) {
      throw Error(ErrorKind::kElementNotInLattice, ground_.format(s) + " is not in the lattice");
    }
    return *i;
  }

  std::size_t meet_index(std::size_t i, std::size_t j) const { return meet_[i * size() + j]; }
  std::size_t join_index(std::size_t i, std::size_t j) const { return join_[i * size() + j]; }

  Subset meet(Subset z1, Subset z2) const {
    return elements_[meet_index(index_of(z1), index_of(z2))].set;
  }
  Subset join(Subset z1, Subset z2) const {
    return elements_[join_index(index_of(z1), index_of(z2))].set;
  }

  std::size_t bottom_index() const { return bottom_; }
  std::size_t top_index() const { return top_; }
  /// O_L
  Subset bottom() const { return elements_[bottom_].set; }
  /// I_L
  Subset top() const { return elements_[top_].set; }

  const Rat& rank(Subset s) const { return elements_[index_of(s)].rank; }

  bool integer_valued() const {
    return std::all_of(elements_.begin(), elements_.end(),
                       [](const LatticeElement& e) { return is_integer(e.rank); });
  }

  /// Same ground set and the same (set, rank) pairs, in any order.
  bool same_family(const RankedLattice& other) const {
    if (!(ground_ == other.ground_) || size() != other.size()) return false;
    for (const auto& e : elements_) {
      const auto j = other.find(e.set);
      if (!j || other.elements_[*j].rank != e.rank) return false;
    }
    return true;
  }

 private:
  RankedLattice() = default;

  void build_tables() {
    const std::size_t k = elements_.size();
    if (k == 0) {
      throw NotALatticeError(Subset{}, Subset{}, "empty family",
                             "the empty family is not a lattice");
    }
    for (std::size_t i = 0; i < k; ++i) {
      const auto& e = elements_[i];
      ground_.require_within(e.set);
      if (e.rank < 0) {
        throw Error(ErrorKind::kNegativeRank,
                    "rank of " + ground_.format(e.set) + " is " + format_rat(e.rank));
      }
      if (!index_.emplace(e.set, i).second) {
        throw Error(ErrorKind::kDuplicateElement, ground_.format(e.set) + " listed twice");
      }
    }

    meet_.assign(k * k, 0);
    join_.assign(k * k, 0);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i; j < k; ++j) {
        const std::uint32_t m = greatest_lower_bound(i, j);
        const std::uint32_t u = least_upper_bound(i, j);
        meet_[i * k + j] = meet_[j * k + i] = m;
        join_[i * k + j] = join_[j * k + i] = u;
      }
    }

    bottom_ = 0;
    top_ = 0;
    for (std::size_t i = 1; i < k; ++i) {
      bottom_ = meet_index(bottom_, i);
      top_ = join_index(top_, i);
    }
  }

  // Fast path when the intersection is itself a member; otherwise scan all
  // lower bounds for one that contains every other.
  std::uint32_t greatest_lower_bound(std::size_t i, std::size_t j) const {
    const Subset both = elements_[i].set & elements_[j].set;
    if (const auto hit = find(both)) return static_cast<std::uint32_t>(*hit);
    std::optional<std::size_t> best;
    for (std::size_t w = 0; w < elements_.size(); ++w) {
      const Subset s = elements_[w].set;
      if (!s.subset_of(both)) continue;
      if (!best || elements_[*best].set.size() < s.size()) best = w;
    }
    if (best) {
      const Subset candidate = elements_[*best].set;
      const bool greatest = std::all_of(
          elements_.begin(), elements_.end(), [&](const LatticeElement& e) {
            return !e.set.subset_of(both) || e.set.subset_of(candidate);
          });
      if (greatest) return static_cast<std::uint32_t>(*best);
    }
    throw not_a_lattice(i, j, "no unique lower bound");
  }

  std::uint32_t least_upper_bound(std::size_t i, std::size_t j) const {
    const Subset either = elements_[i].set | elements_[j].set;
    if (const auto hit = find(either)) return static_cast<std::uint32_t>(*hit);
    std::optional<std::size_t> best;
    for (std::size_t w = 0; w < elements_.size(); ++w) {
      const Subset s = elements_[w].set;
      if (!either.subset_of(s)) continue;
      if (!best || s.size() < elements_[*best].set.size()) best = w;
    }
    if (best) {
      const Subset candidate = elements_[*best].set;
      const bool least = std::all_of(
          elements_.begin(), elements_.end(), [&](const LatticeElement& e) {
            return !either.subset_of(e.set) || candidate.subset_of(e.set);
          });
      if (least) return static_cast<std::uint32_t>(*best);
    }
    throw not_a_lattice(i, j, "no unique upper bound");
  }

  NotALatticeError not_a_lattice(std::size_t i, std::size_t j, const std::string& reason) const {
    const Subset a = elements_[i].set;
    const Subset b = elements_[j].set;
    return NotALatticeError(a, b, reason,
                            ground_.format(a) + " and " + ground_.format(b) + ": " + reason);
  }

  GroundSet ground_;
  std::vector<LatticeElement> elements_;
  std::unordered_map<Subset, std::size_t> index_;
  std::vector<std::uint32_t> meet_;
  std::vector<std::uint32_t> join_;
  std::size_t bottom_ = 0;
  std::size_t top_ = 0;
};

inline RankedLattice validate_lattice(GroundSet ground, std::vector<LatticeElement> elements) {
  return RankedLattice::validate(std::move(ground), std::move(elements));
}

inline Subset meet(const RankedLattice& lattice, Subset z1, Subset z2) {
  return lattice.meet(z1, z2);
}

inline Subset join(const RankedLattice& lattice, Subset z1, Subset z2) {
  return lattice.join(z1, z2);
}

/// Shifts every rank down by the rank of the bottom element. Throws
/// kNegativeRank when some rank lies below λ(O_L); such a lattice already
/// fails monotonicity.
inline RankedLattice normalize_pointed(const RankedLattice& lattice) {
  const Rat shift = lattice.element(lattice.bottom_index()).rank;
  std::vector<LatticeElement> shifted = lattice.elements();
  for (auto& e : shifted) e.rank -= shift;
  return RankedLattice::validate(lattice.ground(), std::move(shifted));
}

}  // namespace polyflat
