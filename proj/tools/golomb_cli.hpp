#pragma once

// Command-line front end. Kept header-only so the test suite can drive it
// in-process with string streams.
//
// Exit codes: 0 success, 1 non-graceful verdict, 2 usage/input error,
// 3 search stopped by its time limit.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <new>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "golomb/bench.hpp"
#include "golomb/constructions.hpp"
#include "golomb/quadratic.hpp"
#include "golomb/ruler.hpp"
#include "golomb/search.hpp"

namespace golomb::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "golomb/1";
inline constexpr int kExitOk = 0;
inline constexpr int kExitNotGraceful = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitTimeout = 3;

// Verification is quadratic in the order; refuse orders that would take
// minutes or gigabytes.
inline constexpr std::uint64_t kMaxVerifyOrder = 5000;
inline constexpr std::uint64_t kMaxCliSearchOrder = 15;
inline constexpr std::size_t kMaxPrintedSequence = 10000;

enum class OutputFormat { kText, kJson, kCsv };

/// Raised for bad command-line input; maps to exit 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline OutputFormat parse_format(const std::string& name, bool allow_csv) {
  if (name == "text") return OutputFormat::kText;
  if (name == "json") return OutputFormat::kJson;
  if (name == "csv") {
    if (!allow_csv) throw UsageError("csv output is only available for the bench command");
    return OutputFormat::kCsv;
  }
  throw UsageError("unknown format '" + name + "'");
}

inline std::int64_t parse_integer(const std::string& token) {
  std::int64_t value = 0;
  std::size_t used = 0;
  try {
    value = std::stoll(token, &used, 10);
  } catch (const std::exception&) {
    throw UsageError("not an integer: '" + token + "'");
  }
  if (used != token.size()) throw UsageError("not an integer: '" + token + "'");
  return value;
}

/// Accepts e.g. "250ms", "2s", "1m", "500us", "100ns"; a bare number is seconds.
inline std::chrono::nanoseconds parse_duration(const std::string& text) {
  static const std::regex pattern(R"(^(\d+)(ns|us|ms|s|m)?$)");
  std::smatch match;
  if (!std::regex_match(text, match, pattern)) throw UsageError("bad duration '" + text + "'");
  const std::int64_t count = parse_integer(match[1].str());
  const std::string unit = match[2].matched ? match[2].str() : "s";
  using namespace std::chrono;
  if (unit == "ns") return nanoseconds(count);
  if (unit == "us") return duration_cast<nanoseconds>(microseconds(count));
  if (unit == "ms") return duration_cast<nanoseconds>(milliseconds(count));
  if (unit == "m") return duration_cast<nanoseconds>(minutes(count));
  return duration_cast<nanoseconds>(seconds(count));
}

/// Marks as typed by a user: any strictly increasing integers. Translated so
/// the smallest becomes 0; `offset` records the amount subtracted.
struct NormalizedMarks {
  Ruler ruler;
  std::int64_t offset = 0;
};

inline NormalizedMarks normalize_marks(const std::vector<std::int64_t>& raw) {
  if (raw.empty()) throw UsageError("no marks given");
  for (std::size_t k = 1; k < raw.size(); ++k) {
    if (raw[k] == raw[k - 1]) throw UsageError("duplicate mark " + std::to_string(raw[k]));
    if (raw[k] < raw[k - 1]) throw UsageError("marks must be strictly increasing");
  }
  const std::int64_t offset = raw.front();
  std::vector<Mark> marks;
  marks.reserve(raw.size());
  for (std::int64_t v : raw) marks.push_back(static_cast<Mark>(v) - static_cast<Mark>(offset));
  return {Ruler(std::move(marks)), offset};
}

inline std::vector<std::int64_t> marks_from_json(const Json& doc) {
  const Json* array = &doc;
  if (doc.is_object()) {
    if (!doc.contains("marks")) throw UsageError("JSON object has no \"marks\" field");
    array = &doc.at("marks");
  }
  if (!array->is_array()) throw UsageError("JSON marks must be an array");
  std::vector<std::int64_t> out;
  for (const auto& v : *array) {
    if (!v.is_number_integer()) throw UsageError("JSON marks must be integers");
    out.push_back(v.get<std::int64_t>());
  }
  return out;
}

/// Rulers from a marks file: one ruler per line, whitespace separated, '#'
/// starts a comment line. A document starting with '{' or '[' is read as
/// JSON instead: a ruler object (as printed with --format json), a bare marks
/// array, or an array of either.
inline std::vector<std::vector<std::int64_t>> parse_marks_document(const std::string& text) {
  std::vector<std::vector<std::int64_t>> rulers;
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (text[first] == '{' || text[first] == '[')) {
    Json doc;
    try {
      doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
      throw UsageError(std::string("invalid JSON: ") + e.what());
    }
    if (doc.is_array() && !doc.empty() && (doc.front().is_object() || doc.front().is_array())) {
      for (const auto& item : doc) rulers.push_back(marks_from_json(item));
    } else {
      rulers.push_back(marks_from_json(doc));
    }
    return rulers;
  }

  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream tokens(line);
    std::vector<std::int64_t> marks;
    std::string token;
    while (tokens >> token) marks.push_back(parse_integer(token));
    rulers.push_back(std::move(marks));
  }
  if (rulers.empty()) throw UsageError("no rulers found in input");
  return rulers;
}

inline std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline Json marks_json(const Ruler& r) {
  Json arr = Json::array();
  for (Mark m : r.marks()) arr.push_back(m);
  return arr;
}

inline Json witness_json(const CollisionPair& w) {
  return Json{{"first", {w.first.i, w.first.j}}, {"second", {w.second.i, w.second.j}}, {"value", w.value}};
}

inline std::string witness_text(const CollisionPair& w) {
  std::ostringstream os;
  os << "t(" << w.first.i << "," << w.first.j << ") = t(" << w.second.i << "," << w.second.j << ") = " << w.value;
  return os.str();
}

// ---------------------------------------------------------------------------
// construct

struct ConstructOptions {
  std::string method;
  std::uint64_t n = 0;
  std::optional<std::uint64_t> modulus;
  std::string format = "text";
};

inline int cmd_construct(const ConstructOptions& opt, std::ostream& out) {
  const OutputFormat format = parse_format(opt.format, false);
  if (opt.n > kMaxVerifyOrder) {
    throw UsageError("order " + std::to_string(opt.n) + " exceeds the verification limit " +
                     std::to_string(kMaxVerifyOrder));
  }
  if (opt.method == "triangular" && !opt.modulus) throw UsageError("--modulus is required for triangular");
  if (opt.method != "triangular" && opt.modulus) throw UsageError("--modulus only applies to triangular");

  std::optional<Ruler> ruler;
  std::optional<std::uint64_t> bound;
  if (opt.method == "pow2") {
    ruler = construct_powers_of_two(opt.n);
  } else if (opt.method == "cubic") {
    ruler = construct_cubic(opt.n);
    bound = theorem1_bound(opt.n);
  } else if (opt.method == "halfcubic") {
    ruler = construct_half_cubic(opt.n);
    bound = theorem2_bound(opt.n);
  } else if (opt.method == "triangular") {
    ruler = construct_triangular({opt.n, *opt.modulus});
  } else {
    throw UsageError("unknown method '" + opt.method + "'");
  }

  const GracefulnessReport report = verify_graceful(*ruler);
  if (format == OutputFormat::kJson) {
    Json doc{{"schema", kSchema}, {"n", ruler->order()}, {"method", opt.method}};
    if (opt.modulus) doc["modulus"] = *opt.modulus;
    doc["marks"] = marks_json(*ruler);
    doc["length"] = ruler->length();
    if (bound) doc["bound"] = *bound;
    doc["graceful"] = report.graceful;
    if (report.witness) doc["witness"] = witness_json(*report.witness);
    out << doc.dump() << '\n';
  } else {
    out << "method: " << opt.method << '\n';
    if (opt.modulus) out << "modulus: " << *opt.modulus << '\n';
    out << "n: " << ruler->order() << '\n';
    out << "marks: " << *ruler << '\n';
    out << "length: " << ruler->length() << '\n';
    if (bound) out << "bound: " << *bound << '\n';
    out << "graceful: " << (report.graceful ? "yes" : "no") << '\n';
    if (report.witness) out << "witness: " << witness_text(*report.witness) << '\n';
  }
  return report.graceful ? kExitOk : kExitNotGraceful;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyOptions {
  std::vector<std::string> marks;
  std::string file;
  std::string format = "text";
};

inline std::vector<std::vector<std::int64_t>> collect_marks(const std::vector<std::string>& tokens,
                                                            const std::string& file) {
  if (!tokens.empty() && !file.empty()) throw UsageError("give marks either inline or with --file, not both");
  if (!file.empty()) return parse_marks_document(read_input(file));
  if (tokens.empty()) throw UsageError("no marks given");
  std::vector<std::int64_t> marks;
  for (const auto& t : tokens) marks.push_back(parse_integer(t));
  return {marks};
}

inline int cmd_verify(const VerifyOptions& opt, std::ostream& out) {
  const OutputFormat format = parse_format(opt.format, false);
  const auto inputs = collect_marks(opt.marks, opt.file);

  std::vector<NormalizedMarks> rulers;
  for (const auto& raw : inputs) {
    if (raw.size() > kMaxVerifyOrder) throw UsageError("too many marks to verify");
    rulers.push_back(normalize_marks(raw));
  }

  bool all_graceful = true;
  bool first = true;
  for (const auto& [ruler, offset] : rulers) {
    const GracefulnessReport report = verify_graceful(ruler);
    all_graceful = all_graceful && report.graceful;
    if (format == OutputFormat::kJson) {
      Json doc{{"schema", kSchema}, {"n", ruler.order()}, {"marks", marks_json(ruler)},
               {"length", ruler.length()}, {"offset", offset}, {"graceful", report.graceful}};
      if (report.witness) doc["witness"] = witness_json(*report.witness);
      out << doc.dump() << '\n';
      continue;
    }
    if (!first) out << '\n';
    first = false;
    out << "marks: " << ruler << '\n';
    if (offset != 0) out << "normalized: subtracted " << offset << " from every mark\n";
    out << "n: " << ruler.order() << '\n';
    out << "length: " << ruler.length() << '\n';
    out << "graceful: " << (report.graceful ? "yes" : "no") << '\n';
    if (report.witness) out << "witness: " << witness_text(*report.witness) << '\n';
  }
  return all_graceful ? kExitOk : kExitNotGraceful;
}

// ---------------------------------------------------------------------------
// triangle

struct TriangleOptions {
  std::vector<std::string> marks;
  std::string method;
  std::optional<std::uint64_t> n;
  std::optional<std::uint64_t> modulus;
  std::string format = "text";
};

inline int cmd_triangle(const TriangleOptions& opt, std::ostream& out) {
  const OutputFormat format = parse_format(opt.format, false);
  std::optional<Ruler> ruler;
  if (!opt.method.empty()) {
    if (!opt.marks.empty()) throw UsageError("give either marks or --method, not both");
    if (!opt.n) throw UsageError("--n is required with --method");
    // Rendering is quadratic in n, same as verification.
    if (*opt.n > kMaxVerifyOrder) throw UsageError("order too large to render");
    if (opt.method == "pow2") {
      ruler = construct_powers_of_two(*opt.n);
    } else if (opt.method == "cubic") {
      ruler = construct_cubic(*opt.n);
    } else if (opt.method == "halfcubic") {
      ruler = construct_half_cubic(*opt.n);
    } else if (opt.method == "triangular") {
      if (!opt.modulus) throw UsageError("--modulus is required for triangular");
      ruler = construct_triangular({*opt.n, *opt.modulus});
    } else {
      throw UsageError("unknown method '" + opt.method + "'");
    }
  } else {
    if (opt.n || opt.modulus) throw UsageError("--n and --modulus need --method");
    const auto inputs = collect_marks(opt.marks, "");
    if (inputs.front().size() > kMaxVerifyOrder) throw UsageError("too many marks to render");
    ruler = normalize_marks(inputs.front()).ruler;
  }
  if (ruler->order() < 2) throw UsageError("a difference triangle needs at least 2 marks");

  const DifferenceTriangle dt = build_difference_triangle(*ruler);
  if (format == OutputFormat::kJson) {
    Json rows = Json::array();
    for (std::size_t i = 1; i <= dt.rows(); ++i) {
      Json row = Json::array();
      for (Mark v : dt.row(i)) row.push_back(v);
      rows.push_back(std::move(row));
    }
    Json doc{{"schema", kSchema}, {"n", ruler->order()}, {"marks", marks_json(*ruler)}, {"rows", rows}};
    out << doc.dump() << '\n';
    return kExitOk;
  }
  for (std::size_t i = 1; i <= dt.rows(); ++i) {
    const auto row = dt.row(i);
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
    out << '\n';
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// search

struct SearchOptions {
  std::uint64_t n = 0;
  std::string timeout;
  unsigned jobs = 1;
  std::string format = "text";
};

inline int cmd_search(const SearchOptions& opt, std::ostream& out) {
  const OutputFormat format = parse_format(opt.format, false);
  if (opt.n < 2) throw UsageError("search order must be at least 2");
  if (opt.n > kMaxCliSearchOrder) {
    throw UsageError("search order " + std::to_string(opt.n) + " is above the supported maximum of " +
                     std::to_string(kMaxCliSearchOrder) +
                     "; use 'construct --method halfcubic' for a near-optimal ruler at larger orders");
  }
  SearchConfig config;
  config.order = opt.n;
  config.parallelism = opt.jobs;
  if (!opt.timeout.empty()) config.time_limit = parse_duration(opt.timeout);

  const SearchResult result = search_optimal(config);
  const double elapsed_ms = std::chrono::duration<double, std::milli>(result.elapsed).count();
  if (format == OutputFormat::kJson) {
    Json doc{{"schema", kSchema},
             {"n", result.ruler.order()},
             {"marks", marks_json(result.ruler)},
             {"length", result.length},
             {"optimal", result.optimal},
             {"nodes", result.nodes_explored},
             {"elapsed_ms", elapsed_ms}};
    out << doc.dump() << '\n';
  } else {
    out << "n: " << result.ruler.order() << '\n';
    out << "marks: " << result.ruler << '\n';
    out << "length: " << result.length << '\n';
    out << "optimal: " << (result.optimal ? "yes" : "no (time limit reached)") << '\n';
    out << "nodes: " << result.nodes_explored << '\n';
    out << "elapsed_ms: " << std::fixed << std::setprecision(3) << elapsed_ms << '\n';
  }
  return result.optimal ? kExitOk : kExitTimeout;
}

// ---------------------------------------------------------------------------
// bench

struct BenchOptions {
  std::uint64_t n_max = 0;
  std::uint64_t exact_cutoff = 9;
  unsigned jobs = 1;
  std::string format = "text";
};

inline std::string optional_cell(const std::optional<std::uint64_t>& v) {
  return v ? std::to_string(*v) : "?";
}

inline int cmd_bench(const BenchOptions& opt, std::ostream& out) {
  const OutputFormat format = parse_format(opt.format, true);
  if (opt.n_max < 2) throw UsageError("--n-max must be at least 2");
  if (opt.exact_cutoff > kMaxCliSearchOrder) {
    throw UsageError("--exact-cutoff above " + std::to_string(kMaxCliSearchOrder) + " is not supported");
  }
  const auto rows = compare_constructions(BenchConfig{opt.n_max, opt.exact_cutoff, opt.jobs});

  if (format == OutputFormat::kCsv) {
    out << "n,lower_bound,optimal,pow2,thm1,thm1_nminus2,thm2\n";
    for (const auto& r : rows) {
      out << r.n << ',' << r.lower_bound << ',' << optional_cell(r.optimal) << ',' << optional_cell(r.pow2) << ','
          << r.thm1 << ',' << r.thm1_nminus2 << ',' << r.thm2 << '\n';
    }
    return kExitOk;
  }
  if (format == OutputFormat::kJson) {
    Json table = Json::array();
    for (const auto& r : rows) {
      Json row{{"n", r.n}, {"lower_bound", r.lower_bound}};
      row["optimal"] = r.optimal ? Json(*r.optimal) : Json(nullptr);
      row["pow2"] = r.pow2 ? Json(*r.pow2) : Json(nullptr);
      row["thm1"] = r.thm1;
      row["thm1_nminus2"] = r.thm1_nminus2;
      row["thm2"] = r.thm2;
      row["thm2_over_thm1"] = r.half_ratio();
      table.push_back(std::move(row));
    }
    out << Json{{"schema", kSchema}, {"rows", table}}.dump() << '\n';
    return kExitOk;
  }
  out << std::setw(6) << "n" << std::setw(12) << "C(n,2)" << std::setw(10) << "optimal" << std::setw(22) << "pow2"
      << std::setw(14) << "thm1" << std::setw(14) << "thm1(n-2)" << std::setw(14) << "thm2" << std::setw(10)
      << "thm2/thm1" << '\n';
  for (const auto& r : rows) {
    out << std::setw(6) << r.n << std::setw(12) << r.lower_bound << std::setw(10) << optional_cell(r.optimal)
        << std::setw(22) << optional_cell(r.pow2) << std::setw(14) << r.thm1 << std::setw(14) << r.thm1_nminus2
        << std::setw(14) << r.thm2 << std::setw(10) << std::fixed << std::setprecision(4) << r.half_ratio() << '\n';
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// counterexample

struct CounterexampleOptions {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;
  std::string format = "text";
};

inline int cmd_counterexample(const CounterexampleOptions& opt, std::ostream& out) {
  const OutputFormat format = parse_format(opt.format, false);
  const QuadraticFamilyParams params{opt.a, opt.b, opt.c};
  const CollisionWitness w = find_quadratic_collision(params);

  // Recompute both entries from the materialised sequence when it is small
  // enough to print, otherwise from the closed form mark by mark.
  std::vector<std::int64_t> sequence;
  const bool printable = w.n <= kMaxPrintedSequence;
  if (printable) sequence = quadratic_ruler(params, w.n);
  const auto n = static_cast<std::int64_t>(w.n);
  const auto x = [&](std::size_t k) {  // 0-based mark index
    return printable ? sequence[k] : quadratic_mark(params, n, static_cast<std::int64_t>(k));
  };
  const std::int64_t first_hi = x(w.first.i), first_lo = x(w.first.i - w.first.j);
  const std::int64_t second_hi = x(w.second.i), second_lo = x(w.second.i - w.second.j);
  const std::int64_t first_value = first_hi - first_lo;
  const std::int64_t second_value = second_hi - second_lo;
  const bool verified = first_value == second_value && first_value == w.value;
  if (!verified) throw Error(ErrorKind::kInternalInconsistency, "recomputed entries disagree");

  if (format == OutputFormat::kJson) {
    Json doc{{"schema", kSchema}, {"a", opt.a}, {"b", opt.b}, {"c", opt.c}, {"n", w.n}};
    doc["sequence"] = printable ? Json(sequence) : Json(nullptr);
    doc["first"] = {w.first.i, w.first.j};
    doc["second"] = {w.second.i, w.second.j};
    doc["value"] = w.value;
    doc["verified"] = verified;
    out << doc.dump() << '\n';
    return kExitOk;
  }
  out << "params: a=" << opt.a << " b=" << opt.b << " c=" << opt.c << '\n';
  out << "n: " << w.n << '\n';
  if (printable) {
    out << "sequence:";
    for (std::int64_t v : sequence) out << ' ' << v;
    out << '\n';
  } else {
    out << "sequence: omitted (n > " << kMaxPrintedSequence << ")\n";
  }
  const auto describe = [&](const char* label, TrianglePos p, std::int64_t hi, std::int64_t lo) {
    out << label << ": t(" << p.i << "," << p.j << ") = x_" << p.i + 1 << " - x_" << p.i + 1 - p.j << " = " << hi
        << " - " << lo << " = " << hi - lo << '\n';
  };
  describe("first", w.first, first_hi, first_lo);
  describe("second", w.second, second_hi, second_lo);
  out << "positions: (" << w.first.i << "," << w.first.j << ") and (" << w.second.i << "," << w.second.j << ")\n";
  out << "value: " << w.value << '\n';
  out << "verified\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// dispatch

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Golomb ruler constructions, verification and exact search", "golomb"};
  app.require_subcommand(1);

  ConstructOptions construct;
  auto* sc = app.add_subcommand("construct", "Build a ruler from an explicit family and verify it");
  sc->add_option("--method", construct.method, "pow2 | cubic | halfcubic | triangular")
      ->required()
      ->check(CLI::IsMember({"pow2", "cubic", "halfcubic", "triangular"}));
  sc->add_option("--n", construct.n, "Number of marks")->required();
  sc->add_option("--modulus", construct.modulus, "Modulus N for the triangular family");
  sc->add_option("--format", construct.format, "text | json");

  VerifyOptions verify;
  auto* sv = app.add_subcommand("verify", "Check that all pairwise differences are distinct");
  sv->add_option("marks", verify.marks, "Marks (any strictly increasing integers)");
  sv->add_option("--file", verify.file, "Marks file or JSON ruler ('-' for stdin)");
  sv->add_option("--format", verify.format, "text | json");

  TriangleOptions triangle;
  auto* st = app.add_subcommand("triangle", "Print the difference triangle");
  st->add_option("marks", triangle.marks, "Marks (any strictly increasing integers)");
  st->add_option("--method", triangle.method, "pow2 | cubic | halfcubic | triangular");
  st->add_option("--n", triangle.n, "Number of marks with --method");
  st->add_option("--modulus", triangle.modulus, "Modulus for --method triangular");
  st->add_option("--format", triangle.format, "text | json");

  SearchOptions search;
  auto* ss = app.add_subcommand("search", "Exact optimal ruler search (n <= 15)");
  ss->add_option("--n", search.n, "Number of marks")->required();
  ss->add_option("--timeout", search.timeout, "Time limit, e.g. 500ms, 10s, 2m");
  ss->add_option("--jobs", search.jobs, "Worker threads (0 = all cores)");
  ss->add_option("--format", search.format, "text | json");

  BenchOptions bench;
  auto* sb = app.add_subcommand("bench", "Compare construction lengths with exact optima");
  sb->add_option("--n-max", bench.n_max, "Largest order in the table")->required();
  sb->add_option("--exact-cutoff", bench.exact_cutoff, "Largest order solved exactly (default 9)");
  sb->add_option("--jobs", bench.jobs, "Worker threads for exact search");
  sb->add_option("--format", bench.format, "text | json | csv");

  CounterexampleOptions counter;
  auto* sq = app.add_subcommand("counterexample", "Exhibit a repeated difference in a quadratic family");
  sq->add_option("--a", counter.a, "Quadratic coefficient")->required();
  sq->add_option("--b", counter.b, "Coefficient of n*(i-1)")->required();
  sq->add_option("--c", counter.c, "Linear coefficient")->required();
  sq->add_option("--format", counter.format, "text | json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*sc) return cmd_construct(construct, out);
    if (*sv) return cmd_verify(verify, out);
    if (*st) return cmd_triangle(triangle, out);
    if (*ss) return cmd_search(search, out);
    if (*sb) return cmd_bench(bench, out);
    if (*sq) return cmd_counterexample(counter, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const Error& e) {
    // Library errors name their kind; constraint messages are already phrased
    // for the user.
    err << "error: " << (e.kind() == ErrorKind::kInvalidParams ? e.detail() : std::string(e.what())) << '\n';
  } catch (const std::bad_alloc&) {
    err << "error: out of memory\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitUsage;
}

/// Convenience overload for tests: args exclude the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"golomb"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace golomb::cli
