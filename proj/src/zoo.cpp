#include "pruferlab/zoo.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <exception>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>

#include "pruferlab/ideal.hpp"
#include "pruferlab/report.hpp"

namespace pruferlab {

namespace {

RingSpec cyclic(std::uint64_t n) {
  RingSpec s;
  s.kind = RingSpec::Kind::Cyclic;
  s.number = n;
  return s;
}

RingSpec galois(std::uint64_t q) {
  RingSpec s;
  s.kind = RingSpec::Kind::GaloisField;
  s.number = q;
  return s;
}

ModuleSpec self_module() { return ModuleSpec{}; }

ModuleSpec quot_module(std::vector<std::uint64_t> gens) {
  ModuleSpec m;
  m.kind = ModuleSpec::Kind::Quotient;
  m.generators = std::move(gens);
  return m;
}

ModuleSpec sum_module(const ModuleSpec& a, const ModuleSpec& b) {
  ModuleSpec m;
  m.kind = ModuleSpec::Kind::Sum;
  m.parts = {a, b};
  return m;
}

int depth_of(const RingSpec& s);

int depth_of(const ModuleSpec& m) {
  int d = 0;
  for (const auto& p : m.parts) d = std::max(d, depth_of(p));
  for (const auto& r : m.ring) d = std::max(d, depth_of(r));
  return d;
}

int depth_of(const RingSpec& s) {
  int d = 0;
  for (const auto& r : s.rings) d = std::max(d, depth_of(r));
  for (const auto& m : s.module) d = std::max(d, depth_of(m));
  return d + 1;
}

std::vector<std::uint64_t> as_values(const std::vector<Index>& v) { return {v.begin(), v.end()}; }

}  // namespace

std::vector<ModuleSpec> module_menu(const RingSpec& a, const RingPtr& ring, std::size_t max_module_order) {
  const std::size_t n = ring->order();
  std::vector<std::pair<ModuleSpec, std::size_t>> menu;
  menu.emplace_back(self_module(), n);
  menu.emplace_back(sum_module(self_module(), self_module()), n * n);
  for (const auto& m : ring->maximal_ideals()) {
    if (m.count() == 1) continue;  // A/0 is Self
    const auto q = quot_module(as_values(Ideal::from_elements(ring, m).generators()));
    menu.emplace_back(q, n / m.count());
    menu.emplace_back(sum_module(q, q), (n / m.count()) * (n / m.count()));
  }
  std::set<ElementSet> seen;
  for (Index x = 0; x < n; ++x) {
    const auto& p = ring->principal(x);
    if (p.count() == 1 || p.count() == n || !seen.insert(p).second) continue;
    menu.emplace_back(quot_module({x}), n / p.count());
  }
  const bool prime_field = (a.kind == RingSpec::Kind::Cyclic || a.kind == RingSpec::Kind::GaloisField) &&
                           is_prime(a.number);
  if (prime_field)
    for (std::uint64_t q = a.number * a.number; q <= max_module_order; q *= a.number) {
      ModuleSpec e;
      e.kind = ModuleSpec::Kind::Extension;
      e.ring = {galois(q)};
      menu.emplace_back(e, q);
    }

  std::vector<ModuleSpec> out;
  std::set<std::string> printed;
  for (auto& [m, order] : menu)
    if (order <= max_module_order && printed.insert(print(m)).second) out.push_back(std::move(m));
  return out;
}

std::vector<UniverseEntry> enumerate_universe(const UniverseParams& params, const Limits& limits) {
  const std::size_t cap = params.max_order;
  std::map<std::string, UniverseEntry> found;
  auto add = [&](RingSpec ast, std::size_t order) {
    if (order > cap) return;
    auto text = print(ast);
    if (found.contains(text)) return;
    const int depth = depth_of(ast);
    found.emplace(text, UniverseEntry{text, std::move(ast), order, depth});
  };
  if (params.max_depth < 1) return {};

  for (std::uint64_t n = 1; n <= cap; ++n) add(cyclic(n), n);
  for (std::uint64_t q = 2; q <= cap; ++q)
    if (galois_field_modulus(q)) add(galois(q), q);
  for (std::uint64_t p = 2; p * p <= cap; ++p) {
    if (!is_prime(p)) continue;
    for (std::uint64_t k = 2, order = p * p; order <= cap; ++k, order *= p) {
      RingSpec s;
      s.kind = RingSpec::Kind::PolyQ;
      s.number = p;
      s.values.assign(k + 1, 0);
      s.values[k] = 1;
      add(s, order);
    }
  }

  for (int d = 2; d <= params.max_depth; ++d) {
    std::vector<UniverseEntry> lower;
    for (const auto& [text, e] : found)
      if (e.depth < d) lower.push_back(e);
    for (const auto& s : lower) {
      if (s.order == 1) continue;
      for (const auto& t : lower) {
        if (t.order == 1 || t.spec < s.spec || s.order * t.order > cap) continue;
        if (s.depth != d - 1 && t.depth != d - 1) continue;
        RingSpec p;
        p.kind = RingSpec::Kind::Product;
        p.rings = {s.ast, t.ast};
        add(std::move(p), s.order * t.order);
      }
      // every module in the menu has at least two elements; shallower bases were extended in an earlier round
      if (s.order * 2 > cap || s.depth != d - 1) continue;
      const auto ring = eval_spec(s.ast, limits);
      for (const auto& m : module_menu(s.ast, ring, cap / s.order)) {
        RingSpec t;
        t.kind = RingSpec::Kind::Trivial;
        t.rings = {s.ast};
        t.module = {m};
        const auto order = s.order * eval_module_spec(m, ring, limits)->order();
        add(std::move(t), order);
      }
    }
  }

  std::vector<UniverseEntry> out;
  out.reserve(found.size());
  for (auto& [text, e] : found) out.push_back(std::move(e));
  return out;
}

namespace {

class PredicateParser {
 public:
  explicit PredicateParser(const std::string& text) : s_(text) {}

  std::function<bool(const PropertyReport&)> parse() {
    auto p = disjunction();
    skip_ws();
    if (pos_ != s_.size()) fail({"&&", "||", "end of input"});
    return p;
  }

 private:
  using Fn = std::function<bool(const PropertyReport&)>;

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(const std::string& token) {
    skip_ws();
    if (s_.compare(pos_, token.size(), token) != 0) return false;
    pos_ += token.size();
    return true;
  }

  std::string word_at(std::size_t at) const {
    std::size_t end = at;
    while (end < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[end])) || s_[end] == '_')) ++end;
    return s_.substr(at, end - at);
  }

  [[noreturn]] void fail(std::set<std::string> expected) {
    std::string found = pos_ >= s_.size() ? "end of input" : word_at(pos_);
    if (found.empty()) found = s_.substr(pos_, 1);
    throw ParseError(pos_, std::move(expected), found);
  }

  Fn disjunction() {
    Fn left = conjunction();
    while (accept("||")) left = [l = left, r = conjunction()](const PropertyReport& x) { return l(x) || r(x); };
    return left;
  }

  Fn conjunction() {
    Fn left = factor();
    while (accept("&&")) left = [l = left, r = factor()](const PropertyReport& x) { return l(x) && r(x); };
    return left;
  }

  Fn factor() {
    if (accept("!")) return [inner = factor()](const PropertyReport& x) { return !inner(x); };
    if (accept("(")) {
      Fn inner = disjunction();
      if (!accept(")")) fail({")"});
      return inner;
    }
    skip_ws();
    const auto word = word_at(pos_);
    if (word == "true" || word == "false") {
      pos_ += word.size();
      return [v = word == "true"](const PropertyReport&) { return v; };
    }
    const auto& names = flag_names();
    if (std::find(names.begin(), names.end(), word) == names.end()) {
      std::set<std::string> expected(names.begin(), names.end());
      expected.insert({"!", "(", "true", "false"});
      fail(std::move(expected));
    }
    pos_ += word.size();
    return [word](const PropertyReport& x) { return flag_value(x, word); };
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

Predicate Predicate::parse(const std::string& text) {
  Predicate p;
  p.text_ = text;
  p.eval_ = PredicateParser(text).parse();
  return p;
}

Catalog build_catalog(const UniverseParams& params, const Limits& limits, unsigned threads) {
  const auto universe = enumerate_universe(params, limits);
  Catalog catalog{params, std::vector<CatalogEntry>(universe.size())};
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> failures;
  std::mutex failure_lock;

  auto work = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < universe.size();) {
      const auto& u = universe[k];
      auto& entry = catalog.entries[k];
      entry.spec = u.spec;
      entry.order = u.order;
      try {
        const auto ring = eval_spec(u.ast, limits);
        if (ring->spec() != u.spec) throw InternalError("ring built from " + u.spec + " reports spec " + ring->spec());
        entry.report = classify_ring(ring, limits);
      } catch (const CapExceeded& e) {
        entry.error = e.what();
      } catch (const std::overflow_error& e) {
        entry.error = e.what();
      } catch (...) {
        std::lock_guard lock(failure_lock);
        failures.push_back(std::current_exception());
      }
    }
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, universe.size())));
  if (threads == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
  }
  if (!failures.empty()) std::rethrow_exception(failures.front());
  return catalog;
}

SearchResult search(const Predicate& predicate, const Catalog& catalog) {
  SearchResult out;
  out.predicate = predicate.text();
  out.universe_size = catalog.entries.size();
  for (const auto& e : catalog.entries) {
    if (!e.report) out.skipped.push_back(e);
    else if (predicate(*e.report)) out.matches.push_back(e);
  }
  return out;
}

SearchResult search(const Predicate& predicate, const UniverseParams& params, const Limits& limits, unsigned threads) {
  return search(predicate, build_catalog(params, limits, threads));
}

std::string catalog_json(const Catalog& catalog) {
  nlohmann::ordered_json j;
  j["schema"] = report_schema_version;
  j["params"] = {{"max_order", catalog.params.max_order}, {"max_depth", catalog.params.max_depth}};
  j["count"] = catalog.entries.size();
  auto& entries = j["entries"] = nlohmann::ordered_json::array();
  for (const auto& e : catalog.entries) {
    nlohmann::ordered_json item;
    item["spec"] = e.spec;
    item["order"] = e.order;
    item["error"] = e.report ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(e.error);
    item["report"] = e.report ? to_json(*e.report, false) : nlohmann::ordered_json(nullptr);
    entries.push_back(std::move(item));
  }
  return j.dump(2) + "\n";
}

std::string catalog_csv(const Catalog& catalog) {
  std::string out = csv_line(csv_header()) + "\n";
  const auto width = csv_header().size();
  for (const auto& e : catalog.entries) {
    if (e.report) {
      out += csv_line(csv_row(*e.report)) + "\n";
      continue;
    }
    std::vector<std::string> row(width);
    row.front() = e.spec;
    row[1] = std::to_string(e.order);
    row.back() = e.error;
    out += csv_line(row) + "\n";
  }
  return out;
}

}  // namespace pruferlab
