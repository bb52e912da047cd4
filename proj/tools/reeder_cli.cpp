// Command-line front end. Talks to the engine only through the C API.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "reeder/reeder.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitMismatch = 3;
constexpr int kExitResource = 4;
constexpr int kExitInternal = 1;

// Carries an exit code out of a subcommand.
struct Failure {
  int code;
  std::string message;
};

int exit_code(reeder_status s) {
  switch (s) {
    case REEDER_OK: return kExitOk;
    case REEDER_ERR_PARSE:
    case REEDER_ERR_INVALID: return kExitParse;
    case REEDER_ERR_MISMATCH: return kExitMismatch;
    case REEDER_ERR_RESOURCE: return kExitResource;
    case REEDER_ERR_INTERNAL: break;
  }
  return kExitInternal;
}

void check(reeder_status s) {
  if (s != REEDER_OK) throw Failure{exit_code(s), reeder_last_error()};
}

struct DiagramDeleter {
  void operator()(reeder_diagram* d) const { reeder_diagram_free(d); }
};
struct PartitionDeleter {
  void operator()(reeder_partition* p) const { reeder_partition_free(p); }
};
struct StringDeleter {
  void operator()(char* s) const { reeder_string_free(s); }
};
using DiagramPtr = std::unique_ptr<reeder_diagram, DiagramDeleter>;
using PartitionPtr = std::unique_ptr<reeder_partition, PartitionDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

DiagramPtr open_diagram(const std::string& spec) {
  reeder_diagram* d = nullptr;
  check(reeder_diagram_open(spec.c_str(), &d));
  return DiagramPtr(d);
}

DiagramPtr family_diagram(const std::string& spec) {
  reeder_diagram* d = nullptr;
  check(reeder_diagram_from_family(spec.c_str(), &d));
  return DiagramPtr(d);
}

PartitionPtr enumerate(const reeder_diagram* d, int cap) {
  reeder_partition* p = nullptr;
  check(reeder_partition_enumerate(d, cap, &p));
  return PartitionPtr(p);
}

std::string take(char* s) {
  StringPtr owned(s);
  return s ? std::string(s) : std::string();
}

reeder_format parse_format(const std::string& name) {
  if (name == "json") return REEDER_FORMAT_JSON;
  if (name == "csv") return REEDER_FORMAT_CSV;
  return REEDER_FORMAT_TEXT;
}

// Flag, then REEDER_MAX_VERTICES, then the library default.
int resolve_cap(std::optional<int> flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("REEDER_MAX_VERTICES"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v <= 0 || v > 64) throw Failure{kExitParse, "invalid REEDER_MAX_VERTICES: " + std::string(env)};
    return static_cast<int>(v);
  }
  return reeder_default_max_free();
}

// Writes to `path` via a temporary file so a failed run leaves nothing
// behind; an empty path means stdout.
void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Failure{kExitInternal, "cannot write " + tmp};
    out << text;
    if (!out) throw Failure{kExitInternal, "cannot write " + tmp};
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw Failure{kExitInternal, "cannot rename output to " + path};
  }
}

// ---------------------------------------------------------------- commands

int cmd_count(const std::string& spec, bool formula, int cap) {
  const DiagramPtr d = open_diagram(spec);
  const PartitionPtr p = enumerate(d.get(), cap);
  const int count = reeder_partition_class_count(p.get());
  std::cout << reeder_diagram_name(d.get()) << ": " << count << " classes\n";
  if (!formula) return kExitOk;

  std::uint64_t expected = 0;
  int has_formula = 0;
  check(reeder_diagram_closed_form(d.get(), &expected, &has_formula));
  if (!has_formula) {
    std::cout << "closed form: deferred (no formula)\n";
    return kExitOk;
  }
  const bool match = expected == static_cast<std::uint64_t>(count);
  std::cout << "closed form: " << expected << "\n" << (match ? "MATCH" : "MISMATCH") << "\n";
  return match ? kExitOk : kExitMismatch;
}

int cmd_classes(const std::string& spec, bool reps, bool full, const std::string& format, int cap) {
  const DiagramPtr d = open_diagram(spec);
  const PartitionPtr p = enumerate(d.get(), cap);
  const reeder_format fmt = parse_format(format);
  char* raw = nullptr;
  check(reeder_partition_export(p.get(), fmt, full ? 1 : 0, &raw));
  const std::string table = take(raw);
  if (!reps) {
    std::cout << table;
    return kExitOk;
  }

  char* report = nullptr;
  int available = 0;
  int ok = 0;
  check(reeder_check_representatives(d.get(), p.get(), fmt, &report, &available, &ok));
  const std::string rep_text = available ? take(report) : std::string();
  if (fmt == REEDER_FORMAT_JSON) {
    std::cout << "{\n\"partition\": " << table << ",\n\"representatives\": " << (available ? rep_text : "null")
              << "}\n";
  } else {
    std::cout << table;
    if (fmt == REEDER_FORMAT_CSV) std::cout << '\n';
    std::cout << (available ? rep_text : std::string("no canonical representative list for this diagram\n"));
  }
  return (!available || ok) ? kExitOk : kExitMismatch;
}

struct Range {
  int lo;
  int hi;
};

Range parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw Failure{kExitParse, "range must look like a..b, got '" + text + "'"};
  try {
    std::size_t used_lo = 0;
    std::size_t used_hi = 0;
    const std::string lo = text.substr(0, dots);
    const std::string hi = text.substr(dots + 2);
    const Range r{std::stoi(lo, &used_lo), std::stoi(hi, &used_hi)};
    if (used_lo != lo.size() || used_hi != hi.size()) throw std::invalid_argument("trailing");
    return r;
  } catch (const std::exception&) {
    throw Failure{kExitParse, "range must look like a..b, got '" + text + "'"};
  }
}

int cmd_census(const std::string& family, const std::string& range_text, const std::string& format,
               const std::string& output, int cap) {
  const Range range = parse_range(range_text);
  struct Row {
    int param;
    int vertices;
    std::string formula;
    int brute;
    std::string match;
    long long runtime_ms;
  };
  std::vector<Row> rows;
  bool mismatch = false;
  for (int n = range.lo; n <= range.hi; ++n) {
    const auto start = std::chrono::steady_clock::now();
    const DiagramPtr d = family_diagram(family + ":" + std::to_string(n));
    const PartitionPtr p = enumerate(d.get(), cap);
    const auto stop = std::chrono::steady_clock::now();
    std::uint64_t expected = 0;
    int has_formula = 0;
    check(reeder_diagram_closed_form(d.get(), &expected, &has_formula));
    const int brute = reeder_partition_class_count(p.get());
    Row row{n, reeder_diagram_vertex_count(d.get()), "deferred", brute, "n/a",
            std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count()};
    if (has_formula) {
      row.formula = std::to_string(expected);
      const bool ok = expected == static_cast<std::uint64_t>(brute);
      row.match = ok ? "true" : "false";
      mismatch = mismatch || !ok;
    }
    rows.push_back(row);
  }

  std::ostringstream os;
  if (format == "json") {
    os << "[";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const Row& r = rows[i];
      os << (i ? ",\n " : "\n ") << "{\"family\": \"" << family << "\", \"param\": " << r.param
         << ", \"vertices\": " << r.vertices << ", \"formula\": "
         << (r.formula == "deferred" ? "null" : r.formula) << ", \"bruteforce\": " << r.brute
         << ", \"match\": " << (r.match == "n/a" ? "null" : r.match) << ", \"runtime_ms\": " << r.runtime_ms << "}";
    }
    os << (rows.empty() ? "]\n" : "\n]\n");
  } else if (format == "text") {
    os << "family  param  vertices  formula   bruteforce  match  runtime_ms\n";
    for (const Row& r : rows) {
      char line[160];
      std::snprintf(line, sizeof line, "%-7s %5d  %8d  %-8s  %10d  %-5s  %10lld\n", family.c_str(), r.param,
                    r.vertices, r.formula.c_str(), r.brute, r.match.c_str(), r.runtime_ms);
      os << line;
    }
  } else {
    os << "family,param,vertices,formula,bruteforce,match,runtime_ms\n";
    for (const Row& r : rows) {
      os << family << ',' << r.param << ',' << r.vertices << ',' << r.formula << ',' << r.brute << ',' << r.match
         << ',' << r.runtime_ms << '\n';
    }
  }
  emit(output, os.str());
  return mismatch ? kExitMismatch : kExitOk;
}

int cmd_verify(const std::string& spec, const std::string& format, int cap) {
  const DiagramPtr d = open_diagram(spec);
  char* report = nullptr;
  int passed = 0;
  check(reeder_verify(d.get(), cap, format == "json" ? REEDER_FORMAT_JSON : REEDER_FORMAT_TEXT, &report, &passed));
  std::cout << take(report);
  return passed ? kExitOk : kExitMismatch;
}

int cmd_duality(const std::string& spec, int cap) {
  const DiagramPtr d = open_diagram(spec);
  char* json = nullptr;
  int applicable = 0;
  int verified = 0;
  check(reeder_duality(d.get(), cap, &json, &applicable, &verified));
  std::cout << take(json);
  return (!applicable || verified) ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reeder puzzle engine: enumerate classes, check closed forms, verify invariants"};
  app.require_subcommand(1);
  std::optional<int> max_vertices;
  app.add_option("--max-vertices", max_vertices,
                 "Enumeration cap on free vertices (overrides REEDER_MAX_VERTICES; default 26)")
      ->check(CLI::Range(1, 64));

  const auto formats = CLI::IsMember({"json", "csv", "text"});

  std::string spec;
  bool formula = false;
  auto* count = app.add_subcommand("count", "Brute-force class count");
  count->add_option("diagram", spec, "Family string (A:5, affD:7, ...) or DSL file")->required();
  count->add_flag("--formula", formula, "Compare against the closed form; exit 3 on mismatch");

  bool reps = false;
  bool full = false;
  std::string format = "text";
  auto* classes = app.add_subcommand("classes", "List the equivalence classes");
  classes->add_option("diagram", spec, "Family string or DSL file")->required();
  classes->add_flag("--reps", reps, "Check the canonical representatives; exit 3 on mismatch");
  classes->add_flag("--full", full, "List every member of every class");
  classes->add_option("--format", format, "json, csv or text")->check(formats);

  std::string family;
  std::string range;
  std::string output;
  std::string census_format = "csv";
  auto* census = app.add_subcommand("census", "Closed form versus brute force over a parameter range");
  census->add_option("--family", family, "Family name, e.g. affD")->required();
  census->add_option("--range", range, "Inclusive range a..b")->required();
  census->add_option("--format", census_format, "csv, json or text")->check(formats);
  census->add_option("--output", output, "Write to a file (atomically) instead of stdout");

  std::string verify_format = "text";
  auto* verify = app.add_subcommand("verify", "Run every applicable invariant check; exit 3 on failure");
  verify->add_option("diagram", spec, "Family string or DSL file")->required();
  verify->add_option("--format", verify_format, "json or text")->check(CLI::IsMember({"json", "text"}));

  auto* duality = app.add_subcommand("duality", "Reeder classes versus lit-only sigma-game orbits (JSON)");
  duality->add_option("diagram", spec, "Family string or DSL file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  try {
    const int cap = resolve_cap(max_vertices);
    if (count->parsed()) return cmd_count(spec, formula, cap);
    if (classes->parsed()) return cmd_classes(spec, reps, full, format, cap);
    if (census->parsed()) return cmd_census(family, range, census_format, output, cap);
    if (verify->parsed()) return cmd_verify(spec, verify_format, cap);
    if (duality->parsed()) return cmd_duality(spec, cap);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << '\n';
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitInternal;
}
