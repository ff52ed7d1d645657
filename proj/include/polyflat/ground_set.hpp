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
#include <unordered_map>
#include <utility>
#include <vector>

#include "polyflat/error.hpp"
#include "polyflat/subset.hpp"

namespace polyflat {

/// Ordered list of distinct, non-empty element labels. Element i of the
/// ground set corresponds to bit i of every Subset over it.
class GroundSet {
 public:
  static constexpr std::size_t kMaxSize = 20;

  GroundSet() = default;

  explicit GroundSet(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.size() > kMaxSize) {
      throw Error(ErrorKind::kInvalidGroundSet,
                  "ground set has " + std::to_string(names_.size()) +
                      " elements, at most " + std::to_string(kMaxSize) +
                      " are supported");
    }
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i].empty()) {
        throw Error(ErrorKind::kInvalidGroundSet, "empty element label");
      }
      if (!index_.emplace(names_[i], i).second) {
        throw Error(ErrorKind::kInvalidGroundSet,
                    "duplicate element label \"" + names_[i] + "\"");
      }
    }
  }

  /// Labels "a", "b", ... for small synthetic ground sets.
  static GroundSet letters(std::size_t n) {
    if (n > kMaxSize) {
      throw Error(ErrorKind::kInvalidGroundSet, "too many elements");
    }
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.emplace_back(1, static_cast<char>('a' + i));
    return GroundSet(std::move(names));
  }

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }

  std::optional<std::size_t> index_of(const std::string& label) const {
    const auto it = index_.find(label);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  Subset full() const { return Subset::full(size()); }
  bool contains(Subset s) const { return s.subset_of(full()); }

  void require_within(Subset s) const {
    if (!contains(s)) {
      throw Error(ErrorKind::kSubsetOutOfRange,
                  "subset has members outside the " + std::to_string(size()) +
                      "-element ground set");
    }
  }

  /// Builds a subset from labels; throws on unknown or repeated labels.
  Subset subset(const std::vector<std::string>& labels) const {
    Subset s;
    for (const auto& label : labels) {
      const auto i = index_of(label);
      if (!i) throw Error(ErrorKind::kSubsetOutOfRange, "unknown label \"" + label + "\"");
      if (s.contains(*i)) {
        throw Error(ErrorKind::kParse, "label \"" + label + "\" repeated");
      }
      s = s.with(*i);
    }
    return s;
  }

  /// Member labels sorted lexicographically (the on-the-wire order).
  std::vector<std::string> sorted_labels(Subset s) const {
    std::vector<std::string> out;
    s.for_each([&](std::size_t i) { out.push_back(names_[i]); });
    std::sort(out.begin(), out.end());
    return out;
  }

  /// "{x,y}" with sorted labels; "∅" for the empty set.
  std::string format(Subset s) const {
    if (s.empty()) return "∅";
    std::string out = "{";
    bool first = true;
    for (const auto& label : sorted_labels(s)) {
      if (!first) out += ",";
      out += label;
      first = false;
    }
    return out + "}";
  }

  friend bool operator==(const GroundSet& a, const GroundSet& b) {
    return a.names_ == b.names_;
  }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
};

}  // namespace polyflat
