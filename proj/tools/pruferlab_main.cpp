// Command-line front end: report, suite, search, catalog.
// Exit codes: 0 success, 1 fixture/search assertion failure or I/O error,
// 2 parse error, 3 resource cap exceeded.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "pruferlab/report.hpp"
#include "pruferlab/spec.hpp"
#include "pruferlab/suite.hpp"
#include "pruferlab/zoo.hpp"

using namespace pruferlab;

namespace {

enum Exit { ok = 0, failure = 1, parse_error = 2, cap_error = 3 };

/// --max-order beats PRUFERLAB_MAX_ORDER, which beats the command default.
std::size_t resolve_order(const std::optional<std::size_t>& flag, std::size_t fallback) {
  if (flag) return *flag;
  if (const char* env = std::getenv("PRUFERLAB_MAX_ORDER")) {
    try {
      return std::stoul(env);
    } catch (const std::exception&) {
      throw InvalidArgument(std::string("PRUFERLAB_MAX_ORDER is not a number: ") + env);
    }
  }
  return fallback;
}

Limits limits_for(std::size_t max_order) {
  Limits l;
  l.enumeration_order = max_order;
  l.construction_order = std::max(l.construction_order, max_order);
  return l;
}

int write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return ok;
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) {
    std::cerr << "error: cannot write " << path << "\n";
    return failure;
  }
  return ok;
}

std::string render_search(const SearchResult& s, const std::string& format) {
  if (format == "json") {
    nlohmann::ordered_json j;
    j["schema"] = report_schema_version;
    j["predicate"] = s.predicate;
    j["universe_size"] = s.universe_size;
    j["matches"] = nlohmann::ordered_json::array();
    for (const auto& m : s.matches) j["matches"].push_back(m.spec);
    j["skipped"] = nlohmann::ordered_json::array();
    for (const auto& m : s.skipped) j["skipped"].push_back({{"spec", m.spec}, {"error", m.error}});
    return j.dump(2) + "\n";
  }
  if (format == "csv") {
    std::string out = csv_line(csv_header()) + "\n";
    for (const auto& m : s.matches) out += csv_line(csv_row(*m.report)) + "\n";
    return out;
  }
  std::string out = "predicate: " + s.predicate + "\nuniverse: " + std::to_string(s.universe_size) +
                    " rings\nmatches: " + std::to_string(s.matches.size()) + "\n";
  for (const auto& m : s.matches) out += "  " + m.spec + "  (order " + std::to_string(m.order) + ")\n";
  for (const auto& m : s.skipped) out += "  skipped " + m.spec + ": " + m.error + "\n";
  return out;
}

std::string render_suite(const std::vector<FixtureResult>& results, const std::string& format) {
  if (format == "json") {
    auto j = nlohmann::ordered_json::array();
    for (const auto& r : results) {
      nlohmann::ordered_json f;
      f["name"] = r.name;
      f["passed"] = r.passed();
      f["checks"] = nlohmann::ordered_json::array();
      for (const auto& c : r.checks) f["checks"].push_back({{"what", c.what}, {"passed", c.passed}, {"detail", c.detail}});
      j.push_back(std::move(f));
    }
    return j.dump(2) + "\n";
  }
  std::string out;
  char ms[32];
  for (const auto& r : results) {
    std::snprintf(ms, sizeof ms, "%.1f ms", r.ms);
    out += (r.passed() ? "PASS " : "FAIL ") + r.name + " (" + ms + ")\n";
    for (const auto& c : r.checks) {
      out += std::string("  [") + (c.passed ? "ok" : "FAILED") + "] " + c.what;
      if (!c.detail.empty()) out += ": " + c.detail;
      out += "\n";
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite commutative ring property classifier"};
  app.require_subcommand(1);

  std::optional<std::size_t> max_order;
  int max_depth = 2;
  std::string format = "text";
  std::string out_path;
  unsigned threads = 0;

  auto* report = app.add_subcommand("report", "Classify one ring given by a spec string");
  std::string spec;
  report->add_option("spec", spec, "ring spec, e.g. \"Triv(Z/4, Self)\"")->required();
  report->add_option("--max-order", max_order, "largest ring order classified (default 64)");
  report->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  bool timings = true;
  report->add_flag("--timings,!--no-timings", timings, "include per-decider timings in json");
  report->add_option("--out", out_path, "write to a file instead of stdout");

  auto* suite = app.add_subcommand("suite", "Run the fixture suite and the transfer harness");
  suite->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  suite->add_option("--out", out_path, "write to a file instead of stdout");

  auto* search_cmd = app.add_subcommand("search", "List universe rings whose flags satisfy a predicate");
  std::string predicate;
  std::string expect;
  search_cmd->add_option("predicate", predicate, "e.g. \"prufer && !gaussian\"")->required();
  search_cmd->add_option("--max-order", max_order, "universe order cap (default 16)");
  search_cmd->add_option("--max-depth", max_depth, "constructor depth (default 2)")->check(CLI::Range(1, 4));
  search_cmd->add_option("--format", format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
  search_cmd->add_option("--expect", expect, "fail with exit 1 unless the result is empty or nonempty")
      ->check(CLI::IsMember({"empty", "nonempty"}));
  search_cmd->add_option("--threads", threads, "worker threads (default: hardware concurrency)");
  search_cmd->add_option("--out", out_path, "write to a file instead of stdout");

  auto* catalog_cmd = app.add_subcommand("catalog", "Export the classified universe");
  catalog_cmd->add_option("--max-order", max_order, "universe order cap (default 16)");
  catalog_cmd->add_option("--max-depth", max_depth, "constructor depth (default 2)")->check(CLI::Range(1, 4));
  catalog_cmd->add_option("--format", format, "json (default) or csv")->check(CLI::IsMember({"json", "csv"}));
  catalog_cmd->add_option("--threads", threads, "worker threads (default: hardware concurrency)");
  catalog_cmd->add_option("--out", out_path, "output path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (report->parsed()) {
      const auto limits = limits_for(resolve_order(max_order, Limits{}.enumeration_order));
      const auto ring = ring_from_spec(spec, limits);
      if (ring->order() > limits.enumeration_order)
        throw CapExceeded("ring " + ring->spec() + " of order " + std::to_string(ring->order()),
                          limits.enumeration_order);
      const auto r = classify_ring(ring, limits);
      return write_output(format == "json" ? to_json(r, timings).dump(2) + "\n" : render_text(r), out_path);
    }
    if (suite->parsed()) {
      const auto results = run_suite();
      const int code = write_output(render_suite(results, format), out_path);
      for (const auto& r : results)
        if (!r.passed()) return failure;
      return code;
    }
    if (search_cmd->parsed()) {
      const auto pred = Predicate::parse(predicate);
      const UniverseParams params{resolve_order(max_order, 16), max_depth};
      const auto result = search(pred, params, limits_for(params.max_order), threads);
      if (result.universe_size == 0) std::cerr << "warning: the universe is empty\n";
      const int code = write_output(render_search(result, format), out_path);
      if (expect == "empty" && !result.matches.empty()) return failure;
      if (expect == "nonempty" && result.matches.empty()) return failure;
      return code;
    }
    if (catalog_cmd->parsed()) {
      const UniverseParams params{resolve_order(max_order, 16), max_depth};
      const auto catalog = build_catalog(params, limits_for(params.max_order), threads);
      if (catalog.entries.empty()) std::cerr << "warning: the universe is empty\n";
      return write_output(format == "csv" ? catalog_csv(catalog) : catalog_json(catalog), out_path);
    }
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return parse_error;
  } catch (const SemanticError& e) {
    std::cerr << e.what() << "\n";
    return parse_error;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return cap_error;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return failure;
  }
  return ok;
}
