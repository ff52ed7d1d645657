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

// JSON file formats.
//
//   polymatroid: {"ground": ["x","y"],
//                 "rank": {"": "0", "x": "1", "y": "1", "x,y": "2"}}
//   lattice:     {"ground": ["x","y"],
//                 "elements": [{"set": [], "rank": "0"},
//                              {"set": ["x","y"], "rank": "3"}]}
//   measure:     {"x": "2", "y": "2"}
//
// Subset keys are comma-joined labels, written sorted; the empty set is "".
// Ranks are "p/q" or "p" strings (JSON integers are accepted on input).
// Writers emit keys in canonical order so write -> read -> write is
// byte-identical.

#pragma once

#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "polyflat/constructions.hpp"
#include "polyflat/error.hpp"
#include "polyflat/ranked_lattice.hpp"
#include "polyflat/set_function.hpp"

namespace polyflat::io {

using Json = nlohmann::ordered_json;

namespace detail {

// Rejects duplicate keys inside any JSON object; nlohmann keeps the last one
// silently otherwise.
inline Json parse_strict(std::string_view text) {
  std::vector<std::set<std::string>> open_objects;
  const auto callback = [&](int /*depth*/, Json::parse_event_t event, Json& parsed) {
    switch (event) {
      case Json::parse_event_t::object_start:
        open_objects.emplace_back();
        break;
      case Json::parse_event_t::object_end:
        open_objects.pop_back();
        break;
      case Json::parse_event_t::key: {
        const auto key = parsed.get<std::string>();
        if (!open_objects.back().insert(key).second) {
          throw Error(ErrorKind::kParse, "duplicate key \"" + key + "\"");
        }
        break;
      }
      default:
        break;
    }
    return true;
  };
  try {
    return Json::parse(text.begin(), text.end(), callback);
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::kParse, std::string("invalid JSON: ") + e.what());
  }
}

inline Rat parse_value(const Json& value, const std::string& where) {
  try {
    if (value.is_string()) return parse_rat(value.get<std::string>());
    if (value.is_number_integer()) return Rat(value.get<long long>());
  } catch (const Error& e) {
    throw Error(ErrorKind::kParse, where + ": " + e.what());
  }
  throw Error(ErrorKind::kParse, where + ": expected a rational string");
}

inline GroundSet parse_ground(const Json& doc) {
  if (!doc.is_object() || !doc.contains("ground") || !doc["ground"].is_array()) {
    throw Error(ErrorKind::kParse, "missing \"ground\" array");
  }
  std::vector<std::string> names;
  for (const auto& label : doc["ground"]) {
    if (!label.is_string()) throw Error(ErrorKind::kParse, "ground labels must be strings");
    names.push_back(label.get<std::string>());
  }
  try {
    return GroundSet(std::move(names));
  } catch (const Error& e) {
    throw Error(ErrorKind::kParse, e.what());
  }
}

inline Json ground_json(const GroundSet& g) {
  Json names = Json::array();
  for (const auto& n : g.names()) names.push_back(n);
  return names;
}

inline Json label_array(const GroundSet& g, Subset s) {
  Json out = Json::array();
  for (const auto& label : g.sorted_labels(s)) out.push_back(label);
  return out;
}

inline Subset parse_label_array(const GroundSet& g, const Json& labels, const std::string& where) {
  if (!labels.is_array()) throw Error(ErrorKind::kParse, where + ": expected a label array");
  std::vector<std::string> names;
  for (const auto& l : labels) {
    if (!l.is_string()) throw Error(ErrorKind::kParse, where + ": labels must be strings");
    names.push_back(l.get<std::string>());
  }
  try {
    return g.subset(names);
  } catch (const Error& e) {
    throw Error(ErrorKind::kParse, where + ": " + e.what());
  }
}

inline std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace detail

/// "x,y" with labels sorted; "" for the empty set.
inline std::string subset_key(const GroundSet& g, Subset s) {
  std::string out;
  for (const auto& label : g.sorted_labels(s)) {
    if (!out.empty()) out += ",";
    out += label;
  }
  return out;
}

inline Subset parse_subset_key(const GroundSet& g, const std::string& key) {
  std::vector<std::string> labels;
  if (!key.empty()) {
    std::size_t start = 0;
    while (true) {
      const auto comma = key.find(',', start);
      labels.push_back(key.substr(start, comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  try {
    return g.subset(labels);
  } catch (const Error& e) {
    throw Error(ErrorKind::kParse, "bad subset key \"" + key + "\": " + e.what());
  }
}

// --- polymatroid files -----------------------------------------------------

inline SetFunction parse_set_function(std::string_view text) {
  const Json doc = detail::parse_strict(text);
  GroundSet ground = detail::parse_ground(doc);
  if (!doc.contains("rank") || !doc["rank"].is_object()) {
    throw Error(ErrorKind::kParse, "missing \"rank\" object");
  }
  std::vector<Rat> values(subset_count(ground.size()));
  std::vector<bool> seen(values.size(), false);
  for (const auto& [key, value] : doc["rank"].items()) {
    const Subset s = parse_subset_key(ground, key);
    if (seen[s.index()]) {
      throw Error(ErrorKind::kParse, "subset key \"" + key + "\" duplicates another key");
    }
    seen[s.index()] = true;
    values[s.index()] = detail::parse_value(value, "rank[\"" + key + "\"]");
  }
  for (std::size_t m = 0; m < seen.size(); ++m) {
    if (!seen[m]) {
      throw Error(ErrorKind::kParse,
                  "missing subset key \"" +
                      subset_key(ground, Subset(static_cast<Subset::Bits>(m))) + "\"");
    }
  }
  return SetFunction(std::move(ground), std::move(values));
}

inline std::string write_set_function(const SetFunction& f) {
  Json doc;
  doc["ground"] = detail::ground_json(f.ground());
  Json rank = Json::object();
  for_each_subset(f.size(), [&](Subset s) { rank[subset_key(f.ground(), s)] = format_rat(f(s)); });
  doc["rank"] = std::move(rank);
  return detail::dump(doc);
}

// --- lattice files ---------------------------------------------------------

struct LatticeFile {
  GroundSet ground;
  std::vector<LatticeElement> elements;
};

inline LatticeFile parse_lattice_file(std::string_view text) {
  const Json doc = detail::parse_strict(text);
  LatticeFile out{detail::parse_ground(doc), {}};
  if (!doc.contains("elements") || !doc["elements"].is_array()) {
    throw Error(ErrorKind::kParse, "missing \"elements\" array");
  }
  std::size_t index = 0;
  for (const auto& e : doc["elements"]) {
    const std::string where = "elements[" + std::to_string(index++) + "]";
    if (!e.is_object() || !e.contains("set") || !e.contains("rank")) {
      throw Error(ErrorKind::kParse, where + ": needs \"set\" and \"rank\"");
    }
    out.elements.push_back({detail::parse_label_array(out.ground, e["set"], where + ".set"),
                            detail::parse_value(e["rank"], where + ".rank")});
  }
  return out;
}

/// Parses and validates; lattice errors (kNotALattice, kDuplicateElement,
/// kNegativeRank) propagate unchanged.
inline RankedLattice parse_lattice(std::string_view text) {
  auto file = parse_lattice_file(text);
  return RankedLattice::validate(std::move(file.ground), std::move(file.elements));
}

inline std::string write_lattice(const RankedLattice& lattice) {
  Json doc;
  doc["ground"] = detail::ground_json(lattice.ground());
  Json elements = Json::array();
  for (const auto& e : lattice.elements()) {
    Json item;
    item["set"] = detail::label_array(lattice.ground(), e.set);
    item["rank"] = format_rat(e.rank);
    elements.push_back(std::move(item));
  }
  doc["elements"] = std::move(elements);
  return detail::dump(doc);
}

// --- measure files ---------------------------------------------------------

inline Measure parse_measure(std::string_view text, const GroundSet& ground) {
  const Json doc = detail::parse_strict(text);
  if (!doc.is_object()) throw Error(ErrorKind::kParse, "measure must be a JSON object");
  std::vector<Rat> values(ground.size());
  std::vector<bool> seen(ground.size(), false);
  for (const auto& [label, value] : doc.items()) {
    const auto i = ground.index_of(label);
    if (!i) throw Error(ErrorKind::kParse, "measure names unknown element \"" + label + "\"");
    values[*i] = detail::parse_value(value, "measure[\"" + label + "\"]");
    if (values[*i] < 0) {
      throw Error(ErrorKind::kParse, "measure[\"" + label + "\"] is negative");
    }
    seen[*i] = true;
  }
  for (std::size_t i = 0; i < ground.size(); ++i) {
    if (!seen[i]) {
      throw Error(ErrorKind::kParse, "measure is missing element \"" + ground.name(i) + "\"");
    }
  }
  return Measure(ground, std::move(values));
}

inline std::string write_measure(const Measure& mu) {
  Json doc = Json::object();
  for (std::size_t i = 0; i < mu.ground().size(); ++i) {
    doc[mu.ground().name(i)] = format_rat(mu.singleton(i));
  }
  return detail::dump(doc);
}

// --- expansion maps --------------------------------------------------------

inline std::string write_expansion_map(const ExpansionMap& map) {
  Json doc;
  doc["original"] = detail::ground_json(map.original);
  doc["expanded"] = detail::ground_json(map.expanded);
  Json blocks = Json::object();
  for (std::size_t i = 0; i < map.original.size(); ++i) {
    Json members = Json::array();
    map.blocks[i].for_each([&](std::size_t a) { members.push_back(map.expanded.name(a)); });
    blocks[map.original.name(i)] = std::move(members);
  }
  doc["blocks"] = std::move(blocks);
  return detail::dump(doc);
}

// --- filesystem ------------------------------------------------------------

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kParse, "cannot open \"" + path + "\"");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::kParse, "cannot write \"" + path + "\"");
  out << contents;
  if (!out) throw Error(ErrorKind::kParse, "write to \"" + path + "\" failed");
}

}  // namespace polyflat::io
