/* Copyright 2026 The iet-words Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */
 // Command dispatch for the iet-words tool:
 //
 //   iet-words <command> <spec.json> [--length N] [--nmax K] [--seed S] [--json]
 //
 // Exit codes: 0 success / OK, 1 domain violation or mismatch, 2 unusable
 // input (bad arguments, unreadable or invalid instance file).

#ifndef IETWORDS_CLI_HPP
#define IETWORDS_CLI_HPP

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ietwords/analysis.hpp"
#include "ietwords/coding.hpp"
#include "ietwords/errors.hpp"
#include "ietwords/selftest.hpp"
#include "ietwords/spec_io.hpp"
#include "ietwords/subdivision.hpp"

namespace ietwords::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitBadInput = 2;

struct Options {
  std::string command;
  std::string spec_path;
  std::optional<std::size_t> length;
  std::size_t n_max = 50;
  std::uint64_t seed = 20071115;
  bool json = false;
};

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SchemaError("", "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline const Subdivision& need_subdivision(const InstanceSpec& spec) {
  if (!spec.subdivision) throw SchemaError("/subdivision", "this command needs a subdivision");
  return *spec.subdivision;
}

inline std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

inline int generate(const InstanceSpec& spec, const Options& opt, std::ostream& out) {
  const auto word = code(spec.map, need_subdivision(spec), spec.x0, opt.length.value_or(spec.length));
  if (opt.json) {
    out << to_json(word).dump(2) << '\n';
  } else {
    out << word.to_text(80);
  }
  return kExitOk;
}

inline int check_good(const InstanceSpec& spec, const Options& opt, std::ostream& out) {
  const auto result = is_good(need_subdivision(spec), spec.map);
  const auto* violations = std::get_if<std::vector<GoodnessViolation>>(&result);
  if (opt.json) {
    Json list = Json::array();
    if (violations) {
      for (const auto& v : *violations) list.push_back(to_json(v));
    }
    out << Json{{"good", violations == nullptr}, {"map", spec.map.fingerprint()}, {"violations", list}}.dump(2)
        << '\n';
  } else if (!violations) {
    out << "GOOD: subdivision is good for " << spec.map.fingerprint() << '\n';
  } else {
    out << "NOT GOOD: " << violations->size() << " violation(s)\n";
    for (const auto& v : *violations) out << "  " << v.describe() << '\n';
  }
  return violations ? kExitViolation : kExitOk;
}

inline int refine(const InstanceSpec& spec, const Options&, std::ostream& out) {
  const auto refined = refine_to_good(need_subdivision(spec), spec.map);
  out << Json{{"subdivision", to_json(refined.subdivision)}, {"gluing", to_json(refined.gluing)}}.dump(2)
      << '\n';
  return kExitOk;
}

inline int roundtrip(const InstanceSpec& spec, const Options& opt, std::ostream& out) {
  const auto result = roundtrip_check(spec.map, need_subdivision(spec), spec.x0, opt.length.value_or(spec.length));
  const std::string verdict = result.ok() ? "OK" : "Mismatch(" + std::to_string(*result.mismatch) + ")";
  if (opt.json) {
    out << Json{{"result", verdict}}.dump(2) << '\n';
  } else {
    out << verdict << '\n';
  }
  return result.ok() ? kExitOk : kExitViolation;
}

inline int analyze(const InstanceSpec& spec, const Options& opt, std::ostream& out) {
  const auto word = code(spec.map, need_subdivision(spec), spec.x0, opt.length.value_or(spec.length));
  const auto depth = std::min(opt.n_max, word.size());
  const auto cx = complexity(word, depth);
  const auto rec = recurrence_profile(word, depth);
  const auto period = detect_period(word);
  if (opt.json) {
    out << Json{{"prefix_length", word.size()},
                {"complexity", to_json(cx)},
                {"recurrence", to_json(rec)},
                {"periodicity", to_json(period)}}
               .dump(2)
        << '\n';
    return kExitOk;
  }
  out << "complexity (prefix " << word.size() << ")\n";
  out << pad("n", 6) << pad("p(n)", 12) << '\n';
  for (const auto& [n, p] : cx.values) out << pad(std::to_string(n), 6) << pad(std::to_string(p), 12) << '\n';
  out << "\nrecurrence window (prefix " << word.size() << ")\n";
  out << pad("n", 6) << pad("window", 24) << '\n';
  for (const auto& [n, w] : rec.values) {
    out << pad(std::to_string(n), 6) << pad(w ? std::to_string(*w) : "NOT_RECURRENT_AT_SCALE", 24) << '\n';
  }
  out << "\nperiodicity: ";
  if (period) {
    out << "preperiod " << period->preperiod << ", period " << period->period << '\n';
  } else {
    out << "APERIODIC_AT_SCALE\n";
  }
  return kExitOk;
}

inline int convert_to_iet(const InstanceSpec& spec, const Options&, std::ostream& out) {
  out << to_json(to_iet(spec.map)).dump(2) << '\n';
  return kExitOk;
}

inline int selftest(const Options& opt, std::ostream& out) {
  const auto results = run_selftest(opt.seed, opt.length.value_or(kDefaultLength), opt.n_max);
  bool all = true;
  for (const auto& r : results) {
    out << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.detail << ")\n";
    all = all && r.passed;
  }
  out << (all ? "selftest: all suites passed\n" : "selftest: FAILED\n");
  return all ? kExitOk : kExitViolation;
}

}  // namespace detail

/// Runs one command. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  static const std::vector<std::string> commands{"generate", "check-good", "refine", "roundtrip",
                                                 "analyze",  "to-iet",     "selftest"};
  Options opt;
  CLI::App app{"Symbolic words of piecewise isometries and interval exchanges", "iet-words"};
  app.add_option("command", opt.command, "generate | check-good | refine | roundtrip | analyze | to-iet | selftest")
      ->required()
      ->check(CLI::IsMember(commands));
  app.add_option("spec", opt.spec_path, "instance file (JSON)");
  app.add_option("--length", opt.length, "word length (overrides the instance file)")->check(CLI::PositiveNumber);
  app.add_option("--nmax", opt.n_max, "largest factor length analyzed")->check(CLI::PositiveNumber);
  app.add_option("--seed", opt.seed, "seed for randomized suites");
  app.add_flag("--json", opt.json, "JSON output");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  }

  if (opt.command == "selftest") return detail::selftest(opt, out);
  if (opt.spec_path.empty()) {
    err << "error: command '" << opt.command << "' needs an instance file\n";
    return kExitBadInput;
  }

  std::optional<InstanceSpec> spec;
  try {
    spec = parse_spec(detail::read_file(opt.spec_path));
    if (opt.command != "to-iet") detail::need_subdivision(*spec);
  } catch (const Error& e) {
    err << "error: " << opt.spec_path << ": " << e.what() << '\n';
    return kExitBadInput;
  }

  std::ostringstream report;
  int code = kExitOk;
  try {
    if (opt.command == "generate") code = detail::generate(*spec, opt, report);
    else if (opt.command == "check-good") code = detail::check_good(*spec, opt, report);
    else if (opt.command == "refine") code = detail::refine(*spec, opt, report);
    else if (opt.command == "roundtrip") code = detail::roundtrip(*spec, opt, report);
    else if (opt.command == "analyze") code = detail::analyze(*spec, opt, report);
    else code = detail::convert_to_iet(*spec, opt, report);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitViolation;
  }
  out << report.str();
  return code;
}

}  // namespace ietwords::cli

#endif  // IETWORDS_CLI_HPP
