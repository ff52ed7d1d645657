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

// Subcommands of the `polyflat` tool. Exit codes: 0 success, 1 semantic
// failure (a witness is printed), 2 usage, I/O or parse failure.

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "polyflat/conditions.hpp"
#include "polyflat/constructions.hpp"
#include "polyflat/convolution.hpp"
#include "polyflat/dot.hpp"
#include "polyflat/error.hpp"
#include "polyflat/io.hpp"
#include "polyflat/polymatroid.hpp"

namespace polyflat::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

inline int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kNegativeSingleton:
    case ErrorKind::kNotAFlat:
    case ErrorKind::kElementNotInLattice:
    case ErrorKind::kNotInteger:
    case ErrorKind::kNotPolymatroid:
    case ErrorKind::kRankMismatch:
    case ErrorKind::kGroundOverlap:
      return kExitFailure;
    default:
      return kExitUsage;
  }
}

namespace detail {

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

inline void emit(const std::string& path, const std::string& contents, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << contents;
  } else {
    io::write_file(path, contents);
  }
}

inline std::vector<Edge> parse_edges(const std::string& text) {
  std::vector<Edge> edges;
  std::size_t start = 0;
  while (start < text.size()) {
    auto comma = text.find(',', start);
    if (comma == std::string::npos) comma = text.size();
    const std::string item = text.substr(start, comma - start);
    const auto dash = item.find('-');
    if (dash == std::string::npos || dash == 0 || dash + 1 == item.size()) {
      throw Error(ErrorKind::kBadParameters, "edge \"" + item + "\" is not of the form u-v");
    }
    try {
      edges.push_back({std::stoul(item.substr(0, dash)), std::stoul(item.substr(dash + 1))});
    } catch (const std::exception&) {
      throw Error(ErrorKind::kBadParameters, "edge \"" + item + "\" is not of the form u-v");
    }
    start = comma + 1;
  }
  return edges;
}

inline RankedLattice load_lattice(const std::string& path) {
  return io::parse_lattice(io::read_file(path));
}

inline SetFunction load_set_function(const std::string& path) {
  return io::parse_set_function(io::read_file(path));
}

}  // namespace detail

inline int cmd_check(const std::string& path, std::ostream& out) {
  const SetFunction f = detail::load_set_function(path);
  const auto report = check_polymatroid(f);
  out << "nonnegative: " << detail::yes_no(report.nonnegative) << "\n"
      << "monotone: " << detail::yes_no(report.monotone) << "\n"
      << "submodular: " << detail::yes_no(report.submodular) << "\n"
      << "integer: " << detail::yes_no(report.integer_valued) << "\n"
      << "normalized: " << detail::yes_no(report.normalized) << "\n"
      << "matroid: " << detail::yes_no(report.is_matroid) << "\n";
  if (report.witness) {
    out << "witness (" << to_string(report.witness->kind)
        << "): " << format_violation(*report.witness, f.ground()) << "\n";
  }
  if (!report.is_polymatroid()) return kExitFailure;
  out << "loops: " << f.ground().format(loops(f)) << "\n"
      << "coloops: " << f.ground().format(coloops(f)) << "\n";
  return kExitOk;
}

inline int require_polymatroid(const SetFunction& f, std::ostream& err) {
  const auto report = check_polymatroid(f);
  if (report.is_polymatroid()) return kExitOk;
  err << "input is not a polymatroid: " << format_violation(*report.witness, f.ground()) << "\n";
  return kExitFailure;
}

inline int cmd_cyclic_flats(const std::string& path, const std::string& lattice_out,
                            const std::string& measure_out, const std::string& dot_out,
                            std::ostream& out, std::ostream& err) {
  const SetFunction f = detail::load_set_function(path);
  if (const int code = require_polymatroid(f, err)) return code;
  const auto cf = cyclic_flats(f);
  out << "cyclic flats: " << cf.lattice.size() << "\n";
  for (const auto& e : cf.lattice.elements()) {
    out << "  " << f.ground().format(e.set) << " : " << format_rat(e.rank) << "\n";
  }
  out << "measure:";
  for (std::size_t i = 0; i < f.size(); ++i) {
    out << " " << f.ground().name(i) << "=" << format_rat(cf.measure.singleton(i));
  }
  out << "\n";
  if (!lattice_out.empty()) detail::emit(lattice_out, io::write_lattice(cf.lattice), out);
  if (!measure_out.empty()) detail::emit(measure_out, io::write_measure(cf.measure), out);
  if (!dot_out.empty()) detail::emit(dot_out, lattice_to_dot(cf.lattice), out);
  return kExitOk;
}

inline int cmd_axioms(const std::string& lattice_path, const std::string& measure_path,
                      std::ostream& out) {
  const RankedLattice lattice = detail::load_lattice(lattice_path);
  const Measure mu = io::parse_measure(io::read_file(measure_path), lattice.ground());
  const auto report = check_conditions(lattice, mu);
  out << format_report(report, lattice.ground());
  return report.characterizing_conditions_pass() ? kExitOk : kExitFailure;
}

inline int cmd_convolve(const std::string& lattice_path, const std::string& measure_path,
                        const std::string& output, std::ostream& out) {
  const RankedLattice lattice = detail::load_lattice(lattice_path);
  const Measure mu = io::parse_measure(io::read_file(measure_path), lattice.ground());
  detail::emit(output, io::write_set_function(convolve(lattice, mu)), out);
  return kExitOk;
}

inline int cmd_convolve2(const std::string& first_path, const std::string& second_path,
                         const std::string& output, std::ostream& out) {
  const RankedLattice first = detail::load_lattice(first_path);
  const RankedLattice second = detail::load_lattice(second_path);
  detail::emit(output, io::write_set_function(convolve_lattices(first, second)), out);
  return kExitOk;
}

inline int cmd_verify(const std::string& lattice_path, const std::string& measure_path,
                      std::ostream& out) {
  const RankedLattice lattice = detail::load_lattice(lattice_path);
  const Measure mu = io::parse_measure(io::read_file(measure_path), lattice.ground());
  const auto report = verify_main_theorem(lattice, mu);
  out << format_report(report.conditions, lattice.ground());
  out << "polymatroid: " << detail::yes_no(report.is_polymatroid) << "\n"
      << "lattice recovered: " << detail::yes_no(report.lattice_recovered) << "\n"
      << "measure recovered: " << detail::yes_no(report.measure_recovered) << "\n";
  for (const auto& m : report.mismatches) {
    out << "mismatch: " << format_mismatch(m, lattice.ground()) << "\n";
  }
  if (!report.consistent()) {
    out << "error: conditions hold but the round trip failed\n";
  }
  return report.round_trip_ok() ? kExitOk : kExitFailure;
}

inline int cmd_reconstruct(const std::string& path, std::ostream& out, std::ostream& err) {
  const SetFunction f = detail::load_set_function(path);
  if (const int code = require_polymatroid(f, err)) return code;
  const auto cf = cyclic_flats(f);
  const SetFunction r = convolve(cf.lattice, cf.measure);
  int code = kExitOk;
  for_each_subset(f.size(), [&](Subset a) {
    if (code != kExitOk || r(a) == f(a)) return;
    out << "mismatch at " << f.ground().format(a) << ": f=" << format_rat(f(a))
        << " reconstructed=" << format_rat(r(a)) << "\n";
    code = kExitFailure;
  });
  if (code == kExitOk) {
    out << "reconstruction exact on all " << subset_count(f.size()) << " subsets from "
        << cf.lattice.size() << " cyclic flats\n";
  }
  return code;
}

inline int cmd_helgason(const std::string& path, const std::string& output,
                        const std::string& map_output, std::ostream& out) {
  const SetFunction f = detail::load_set_function(path);
  const auto expansion = helgason_expand(f);
  detail::emit(output, io::write_set_function(expansion.matroid), out);
  if (!map_output.empty()) detail::emit(map_output, io::write_expansion_map(expansion.map), out);
  return kExitOk;
}

inline int cmd_infiltrate(const std::string& f_path, const std::string& pivot,
                          const std::string& g_path, const std::string& output,
                          std::ostream& out, std::ostream& err) {
  InfiltrationSpec spec{detail::load_set_function(f_path), pivot,
                        detail::load_set_function(g_path)};
  const SetFunction r = infiltrate(spec);
  if (const int code = require_polymatroid(r, err)) return code;
  detail::emit(output, io::write_set_function(r), out);
  return kExitOk;
}

struct GenOptions {
  std::string family;
  std::size_t k = 0;
  std::size_t n = 0;
  std::size_t vertices = 0;
  std::string edges;
  std::uint64_t seed = 0;
  std::string mode = "sum";
  bool integer = false;
  std::int64_t max_rank = 4;
  std::size_t summands = 3;
};

inline int cmd_gen(const GenOptions& opt, const std::string& output, std::ostream& out) {
  SetFunction f;
  if (opt.family == "uniform") {
    f = uniform_matroid(opt.k, opt.n);
  } else if (opt.family == "graphic") {
    f = graphic_matroid(opt.vertices, detail::parse_edges(opt.edges));
  } else if (opt.family == "random") {
    RandomPolymatroidParams params;
    if (opt.mode == "sum") {
      params.mode = RandomPolymatroidParams::Mode::kWeightedSum;
    } else if (opt.mode == "rejection") {
      params.mode = RandomPolymatroidParams::Mode::kRejection;
    } else {
      throw Error(ErrorKind::kBadParameters, "unknown mode \"" + opt.mode + "\"");
    }
    params.integer_weights = opt.integer;
    params.max_rank = opt.max_rank;
    params.max_summands = opt.summands;
    f = random_polymatroid(opt.seed, opt.n, params);
  } else {
    throw Error(ErrorKind::kBadParameters, "unknown family \"" + opt.family + "\"");
  }
  detail::emit(output, io::write_set_function(f), out);
  return kExitOk;
}

/// Runs the tool on `args` (program name excluded).
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Polymatroid and cyclic-flat workbench", "polyflat"};
  app.require_subcommand(1);

  std::function<int()> action;
  std::string in1, in2, in3, output, lattice_out, measure_out, dot_out, map_out, label;

  auto* check = app.add_subcommand("check", "check the polymatroid axioms of a rank table");
  check->add_option("polymatroid", in1)->required();
  check->callback([&] { action = [&] { return cmd_check(in1, out); }; });

  auto* cyc = app.add_subcommand("cyclic-flats", "extract the ranked lattice of cyclic flats");
  cyc->add_option("polymatroid", in1)->required();
  cyc->add_option("-o,--json", lattice_out, "write the lattice file here");
  cyc->add_option("-m,--measure", measure_out, "write the measure file here");
  cyc->add_option("--dot", dot_out, "write the Hasse diagram (Graphviz) here");
  cyc->callback([&] {
    action = [&] { return cmd_cyclic_flats(in1, lattice_out, measure_out, dot_out, out, err); };
  });

  auto* axioms = app.add_subcommand("axioms", "check conditions C1-C5 of a lattice and measure");
  axioms->add_option("lattice", in1)->required();
  axioms->add_option("measure", in2)->required();
  axioms->callback([&] { action = [&] { return cmd_axioms(in1, in2, out); }; });

  auto* conv = app.add_subcommand("convolve", "convolve a ranked lattice with a measure");
  conv->add_option("lattice", in1)->required();
  conv->add_option("measure", in2)->required();
  conv->add_option("-o,--output", output);
  conv->callback([&] { action = [&] { return cmd_convolve(in1, in2, output, out); }; });

  auto* conv2 = app.add_subcommand("convolve2", "convolve two ranked lattices");
  conv2->add_option("lattice1", in1)->required();
  conv2->add_option("lattice2", in2)->required();
  conv2->add_option("-o,--output", output);
  conv2->callback([&] { action = [&] { return cmd_convolve2(in1, in2, output, out); }; });

  auto* verify = app.add_subcommand("verify", "round-trip a lattice and measure through convolution");
  verify->add_option("lattice", in1)->required();
  verify->add_option("measure", in2)->required();
  verify->callback([&] { action = [&] { return cmd_verify(in1, in2, out); }; });

  auto* recon = app.add_subcommand("reconstruct", "rebuild a polymatroid from its cyclic flats");
  recon->add_option("polymatroid", in1)->required();
  recon->callback([&] { action = [&] { return cmd_reconstruct(in1, out, err); }; });

  auto* helg = app.add_subcommand("helgason", "expand an integer polymatroid into a matroid");
  helg->add_option("polymatroid", in1)->required();
  helg->add_option("-o,--output", output);
  helg->add_option("--map", map_out, "write the expansion map here");
  helg->callback([&] { action = [&] { return cmd_helgason(in1, output, map_out, out); }; });

  auto* infil = app.add_subcommand("infiltrate", "insert polymatroid g in place of element c of f");
  infil->add_option("f", in1)->required();
  infil->add_option("c", label)->required();
  infil->add_option("g", in2)->required();
  infil->add_option("-o,--output", output);
  infil->callback([&] {
    action = [&] { return cmd_infiltrate(in1, label, in2, output, out, err); };
  });

  GenOptions gen_opt;
  auto* gen = app.add_subcommand("gen", "generate a polymatroid: uniform | graphic | random");
  gen->add_option("family", gen_opt.family)->required();
  gen->add_option("--k", gen_opt.k, "uniform: rank");
  gen->add_option("--n", gen_opt.n, "uniform, random: ground set size");
  gen->add_option("--vertices", gen_opt.vertices, "graphic: vertex count");
  gen->add_option("--edges", gen_opt.edges, "graphic: edges as u-v,u-v,...");
  gen->add_option("--seed", gen_opt.seed, "random: seed");
  gen->add_option("--mode", gen_opt.mode, "random: sum | rejection");
  gen->add_flag("--integer", gen_opt.integer, "random sum mode: integer weights");
  gen->add_option("--max-rank", gen_opt.max_rank, "random rejection mode: value cap");
  gen->add_option("--summands", gen_opt.summands, "random sum mode: maximum summands");
  gen->add_option("-o,--output", output);
  gen->callback([&] { action = [&] { return cmd_gen(gen_opt, output, out); }; });

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }

  try {
    return action();
  } catch (const Error& e) {
    err << e.what() << "\n";
    return exit_code_for(e.kind());
  }
}

}  // namespace polyflat::cli
