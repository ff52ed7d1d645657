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

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "polyflat/error.hpp"
#include "polyflat/ground_set.hpp"
#include "polyflat/rational.hpp"
#include "polyflat/subset.hpp"

namespace polyflat {

/// Dense table of exact values on all 2^n subsets of a ground set,
/// indexed by Subset::index().
class SetFunction {
 public:
  SetFunction() : values_(1) {}

  SetFunction(GroundSet ground, std::vector<Rat> values)
      : ground_(std::move(ground)), values_(std::move(values)) {
    if (values_.size() != subset_count(ground_.size())) {
      throw Error(ErrorKind::kTableSize,
                  "expected " + std::to_string(subset_count(ground_.size())) +
                      " values, got " + std::to_string(values_.size()));
    }
  }

  /// Tabulates fn(Subset) over every subset.
  template <typename Fn>
  static SetFunction tabulate(GroundSet ground, Fn&& fn) {
    std::vector<Rat> values;
    values.reserve(subset_count(ground.size()));
    for_each_subset(ground.size(), [&](Subset s) { values.emplace_back(fn(s)); });
    return SetFunction(std::move(ground), std::move(values));
  }

  const GroundSet& ground() const { return ground_; }
  std::size_t size() const { return ground_.size(); }
  const std::vector<Rat>& values() const { return values_; }

  const Rat& operator()(Subset s) const { return values_[s.index()]; }
  const Rat& at(Subset s) const {
    ground_.require_within(s);
    return values_[s.index()];
  }
  const Rat& singleton(std::size_t i) const { return values_[Subset::singleton(i).index()]; }

  bool integer_valued() const {
    for (const auto& v : values_) {
      if (!is_integer(v)) return false;
    }
    return true;
  }

  friend bool operator==(const SetFunction&, const SetFunction&) = default;

 private:
  GroundSet ground_;
  std::vector<Rat> values_;
};

/// Additive set function given by its singleton values.
class Measure {
 public:
  Measure() = default;

  Measure(GroundSet ground, std::vector<Rat> singleton)
      : ground_(std::move(ground)), singleton_(std::move(singleton)) {
    if (singleton_.size() != ground_.size()) {
      throw Error(ErrorKind::kTableSize,
                  "measure needs one value per ground element");
    }
  }

  const GroundSet& ground() const { return ground_; }
  const std::vector<Rat>& singletons() const { return singleton_; }
  const Rat& singleton(std::size_t i) const { return singleton_.at(i); }

  Rat operator()(Subset s) const {
    Rat sum = 0;
    s.for_each([&](std::size_t i) { sum += singleton_[i]; });
    return sum;
  }

  bool nonnegative() const {
    for (const auto& v : singleton_) {
      if (v < 0) return false;
    }
    return true;
  }

  bool integer_valued() const {
    for (const auto& v : singleton_) {
      if (!is_integer(v)) return false;
    }
    return true;
  }

  friend bool operator==(const Measure&, const Measure&) = default;

 private:
  GroundSet ground_;
  std::vector<Rat> singleton_;
};

inline Rat measure_of(const Measure& mu, Subset a) {
  mu.ground().require_within(a);
  return mu(a);
}

/// f(I|K) = f(I ∪ K) - f(K).
inline Rat conditional_rank(const SetFunction& f, Subset i, Subset k) {
  return f.at(i | k) - f.at(k);
}

/// The measure carried by the singleton values of f.
inline Measure induced_measure(const SetFunction& f) {
  std::vector<Rat> singleton;
  singleton.reserve(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f.singleton(i) < 0) {
      throw Error(ErrorKind::kNegativeSingleton,
                  "f(" + f.ground().name(i) + ") = " + format_rat(f.singleton(i)) +
                      " is negative");
    }
    singleton.push_back(f.singleton(i));
  }
  return Measure(f.ground(), std::move(singleton));
}

}  // namespace polyflat
