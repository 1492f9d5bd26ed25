#pragma once

/**
 * @file spec.hpp
 * @brief The ring-spec language: parser with positioned errors, canonical
 * printer and evaluator.
 *
 *   ring := "Z/" int | "GF(" int ")" | "PolyQ(" int "," ints ")"
 *         | "Prod(" ring "," ring ")" | "Quot(" ring "," ints ")"
 *         | "Triv(" ring "," mod ")"
 *   mod  := "Self" | "QuotMod(" ints ")" | "Sum(" mod "," mod ")" | "ExtMod(" ring ")"
 *   ints := int ("," int)*
 *
 * PolyQ coefficients are listed constant term first; Quot and QuotMod list
 * ideal generators by element index. ExtMod(K) over A views K as an A-module
 * through the prime-ring map j·1_A ↦ j·1_K, so A must be additively cyclic.
 */

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "pruferlab/module.hpp"
#include "pruferlab/ring.hpp"

namespace pruferlab {

struct ModuleSpec;

struct RingSpec {
  enum class Kind { Cyclic, GaloisField, PolyQ, Product, Quotient, Trivial };
  Kind kind = Kind::Cyclic;
  std::uint64_t number = 0;           ///< n, q, or p
  std::vector<std::uint64_t> values;  ///< PolyQ coefficients or Quot generators
  std::vector<RingSpec> rings;        ///< Prod: 2; Quot, Triv: 1
  std::vector<ModuleSpec> module;     ///< Triv: 1
  std::size_t position = 0;           ///< offset in the parsed text; ignored by ==
};

struct ModuleSpec {
  enum class Kind { Self, Quotient, Sum, Extension };
  Kind kind = Kind::Self;
  std::vector<std::uint64_t> generators;  ///< QuotMod
  std::vector<ModuleSpec> parts;          ///< Sum: 2
  std::vector<RingSpec> ring;             ///< ExtMod: 1
  std::size_t position = 0;
};

bool operator==(const RingSpec& a, const RingSpec& b);
bool operator==(const ModuleSpec& a, const ModuleSpec& b);

class ParseError : public Error {
 public:
  ParseError(std::size_t position, std::set<std::string> expected, std::string found);
  std::size_t position() const noexcept { return position_; }
  const std::set<std::string>& expected() const noexcept { return expected_; }
  const std::string& found() const noexcept { return found_; }

 private:
  std::size_t position_;
  std::set<std::string> expected_;
  std::string found_;
};

/// Well-formed syntax with a meaning that cannot be built (GF of a
/// non-prime-power, Z/0, generator out of range, ...).
class SemanticError : public Error {
 public:
  SemanticError(std::size_t position, const std::string& message);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Syntax plus the numeric checks that need no ring: Z/n with n >= 1, GF(q)
/// with q in the modulus table, PolyQ with prime p.
RingSpec parse_ring_spec(const std::string& text);

/// Canonical form: no extra whitespace, ", " between arguments.
std::string print(const RingSpec& s);
std::string print(const ModuleSpec& s);

/// Builds the ring; its spec() is print(s) whenever the PolyQ coefficients are
/// already reduced mod p. Throws SemanticError for invalid generators or
/// module kinds, CapExceeded for orders beyond the limits.
RingPtr eval_spec(const RingSpec& s, const Limits& limits = {});
ModulePtr eval_module_spec(const ModuleSpec& s, const RingPtr& base, const Limits& limits = {});

/// parse + eval.
RingPtr ring_from_spec(const std::string& text, const Limits& limits = {});

}  // namespace pruferlab
