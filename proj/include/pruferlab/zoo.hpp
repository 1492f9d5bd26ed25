#pragma once

/**
 * @file zoo.hpp
 * @brief The bounded spec-grammar universe, flag predicates, counterexample
 * search and catalog export.
 *
 * Universe at depth d and order cap N, all entries of order <= N:
 *   depth 1: Z/n (1 <= n), GF(q) for every q in the field table, PolyQ(p, x^k) for k >= 2
 *   depth d: Prod(s, t) with s <= t by spec string and neither the zero ring,
 *            Triv(s, m) for s nonzero and m in the module menu of s,
 *            with s, t of depth < d.
 * Module menu of A: Self, Sum(Self, Self), QuotMod(M) and Sum(QuotMod(M), QuotMod(M))
 * for each nonzero maximal M, QuotMod(g) for each proper nonzero principal (g),
 * and ExtMod(GF(q)) when A is Z/p or GF(p) and q is a proper power of p.
 * GF(p) and Z/p are both listed: they are the same ring under two spellings.
 * Quot is left out: every quotient of a depth-1 ring is again a depth-1 ring up to isomorphism.
 * Entries are unique and sorted by spec string.
 */

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pruferlab/deciders.hpp"
#include "pruferlab/spec.hpp"

namespace pruferlab {

struct UniverseParams {
  std::size_t max_order = 16;
  int max_depth = 2;
};

struct UniverseEntry {
  std::string spec;
  RingSpec ast;
  std::size_t order = 0;
  int depth = 1;
};

std::vector<UniverseEntry> enumerate_universe(const UniverseParams& params, const Limits& limits = {});

/// Module menu of A as spec nodes, deduplicated by printed form.
std::vector<ModuleSpec> module_menu(const RingSpec& a, const RingPtr& ring, std::size_t max_module_order);

/// Boolean expression over report flags: name | "!" p | p "&&" p | p "||" p | "(" p ")" | true | false.
/// "&&" binds tighter than "||". Unknown names raise ParseError listing the known flags.
class Predicate {
 public:
  static Predicate parse(const std::string& text);

  bool operator()(const PropertyReport& report) const { return eval_(report); }
  const std::string& text() const noexcept { return text_; }

 private:
  std::string text_;
  std::function<bool(const PropertyReport&)> eval_;
};

struct CatalogEntry {
  std::string spec;
  std::size_t order = 0;
  std::optional<PropertyReport> report;
  std::string error;  ///< resource-cap message when report is empty
};

struct Catalog {
  UniverseParams params;
  std::vector<CatalogEntry> entries;
};

/// Classifies every universe entry. Work is spread over `threads` workers
/// (0 = hardware concurrency); the result order is the universe order.
Catalog build_catalog(const UniverseParams& params, const Limits& limits = {}, unsigned threads = 0);

struct SearchResult {
  std::string predicate;
  std::size_t universe_size = 0;
  std::vector<CatalogEntry> matches;
  std::vector<CatalogEntry> skipped;  ///< entries whose classification hit a cap
};

SearchResult search(const Predicate& predicate, const Catalog& catalog);
SearchResult search(const Predicate& predicate, const UniverseParams& params, const Limits& limits = {},
                    unsigned threads = 0);

/// Deterministic exports: no timings, fixed key order, entries in universe order.
std::string catalog_json(const Catalog& catalog);
std::string catalog_csv(const Catalog& catalog);

}  // namespace pruferlab
