#include "pruferlab/spec.hpp"

#include <cctype>
#include <limits>

#include "pruferlab/ideal.hpp"

namespace pruferlab {

namespace {

std::string describe_expected(const std::set<std::string>& expected) {
  std::string out;
  std::size_t k = 0;
  for (const auto& e : expected) {
    if (k++) out += k == expected.size() ? " or " : ", ";
    out += "'" + e + "'";
  }
  return out;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  RingSpec parse() {
    RingSpec r = ring();
    skip_ws();
    if (pos_ != s_.size()) fail({"end of input"});
    return r;
  }

 private:
  static constexpr std::uint64_t max_literal = std::uint64_t{1} << 32;

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  std::string found() const {
    if (pos_ >= s_.size()) return "end of input";
    std::size_t end = pos_;
    if (std::isalnum(static_cast<unsigned char>(s_[end])))
      while (end < s_.size() && std::isalnum(static_cast<unsigned char>(s_[end]))) ++end;
    else
      ++end;
    return s_.substr(pos_, end - pos_);
  }

  [[noreturn]] void fail(std::set<std::string> expected) { throw ParseError(pos_, std::move(expected), found()); }

  bool accept(const std::string& token) {
    skip_ws();
    if (s_.compare(pos_, token.size(), token) != 0) return false;
    // keywords must not run into further identifier characters
    if (std::isalpha(static_cast<unsigned char>(token.back())) && pos_ + token.size() < s_.size() &&
        std::isalnum(static_cast<unsigned char>(s_[pos_ + token.size()])))
      return false;
    pos_ += token.size();
    return true;
  }

  void expect(const std::string& token) {
    if (!accept(token)) fail({token});
  }

  std::uint64_t integer() {
    skip_ws();
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail({"integer"});
    const std::size_t start = pos_;
    std::uint64_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + static_cast<std::uint64_t>(s_[pos_++] - '0');
      if (v > max_literal) throw SemanticError(start, "integer literal too large");
    }
    return v;
  }

  std::vector<std::uint64_t> integers() {
    std::vector<std::uint64_t> out{integer()};
    while (accept(",")) out.push_back(integer());
    return out;
  }

  RingSpec ring() {
    skip_ws();
    RingSpec r;
    r.position = pos_;
    if (accept("Z/")) {
      r.kind = RingSpec::Kind::Cyclic;
      const std::size_t at = pos_;
      r.number = integer();
      if (r.number == 0) throw SemanticError(at, "Z/0 is not a finite ring");
    } else if (accept("GF(")) {
      r.kind = RingSpec::Kind::GaloisField;
      skip_ws();
      const std::size_t at = pos_;
      r.number = integer();
      if (!galois_field_modulus(r.number))
        throw SemanticError(at, "GF(" + std::to_string(r.number) + "): order must be a prime or a prime power up to 64");
      expect(")");
    } else if (accept("PolyQ(")) {
      r.kind = RingSpec::Kind::PolyQ;
      skip_ws();
      const std::size_t at = pos_;
      r.number = integer();
      if (!is_prime(r.number)) throw SemanticError(at, "PolyQ characteristic must be prime");
      expect(",");
      r.values = integers();
      expect(")");
    } else if (accept("Prod(")) {
      r.kind = RingSpec::Kind::Product;
      r.rings.push_back(ring());
      expect(",");
      r.rings.push_back(ring());
      expect(")");
    } else if (accept("Quot(")) {
      r.kind = RingSpec::Kind::Quotient;
      r.rings.push_back(ring());
      expect(",");
      r.values = integers();
      expect(")");
    } else if (accept("Triv(")) {
      r.kind = RingSpec::Kind::Trivial;
      r.rings.push_back(ring());
      expect(",");
      r.module.push_back(module());
      expect(")");
    } else {
      fail({"Z/", "GF(", "PolyQ(", "Prod(", "Quot(", "Triv("});
    }
    return r;
  }

  ModuleSpec module() {
    skip_ws();
    ModuleSpec m;
    m.position = pos_;
    if (accept("Self")) {
      m.kind = ModuleSpec::Kind::Self;
    } else if (accept("QuotMod(")) {
      m.kind = ModuleSpec::Kind::Quotient;
      m.generators = integers();
      expect(")");
    } else if (accept("Sum(")) {
      m.kind = ModuleSpec::Kind::Sum;
      m.parts.push_back(module());
      expect(",");
      m.parts.push_back(module());
      expect(")");
    } else if (accept("ExtMod(")) {
      m.kind = ModuleSpec::Kind::Extension;
      m.ring.push_back(ring());
      expect(")");
    } else {
      fail({"Self", "QuotMod(", "Sum(", "ExtMod("});
    }
    return m;
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

std::string join(const std::vector<std::uint64_t>& v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? ", " : "") + std::to_string(v[k]);
  return out;
}

std::vector<Index> element_indices(const std::vector<std::uint64_t>& gens, const FiniteRing& r, std::size_t position) {
  std::vector<Index> out;
  for (auto g : gens) {
    if (g >= r.order())
      throw SemanticError(position, "generator " + std::to_string(g) + " is not an element index of " + r.spec() +
                                        " (order " + std::to_string(r.order()) + ")");
    out.push_back(static_cast<Index>(g));
  }
  return out;
}

}  // namespace

bool operator==(const RingSpec& a, const RingSpec& b) {
  return a.kind == b.kind && a.number == b.number && a.values == b.values && a.rings == b.rings &&
         a.module == b.module;
}

bool operator==(const ModuleSpec& a, const ModuleSpec& b) {
  return a.kind == b.kind && a.generators == b.generators && a.parts == b.parts && a.ring == b.ring;
}

ParseError::ParseError(std::size_t position, std::set<std::string> expected, std::string found)
    : Error("parse error at position " + std::to_string(position) + ": expected " + describe_expected(expected) +
            ", found '" + found + "'"),
      position_(position),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

SemanticError::SemanticError(std::size_t position, const std::string& message)
    : Error("error at position " + std::to_string(position) + ": " + message), position_(position) {}

RingSpec parse_ring_spec(const std::string& text) { return Parser(text).parse(); }

std::string print(const RingSpec& s) {
  switch (s.kind) {
    case RingSpec::Kind::Cyclic: return "Z/" + std::to_string(s.number);
    case RingSpec::Kind::GaloisField: return "GF(" + std::to_string(s.number) + ")";
    case RingSpec::Kind::PolyQ: return "PolyQ(" + std::to_string(s.number) + ", " + join(s.values) + ")";
    case RingSpec::Kind::Product: return "Prod(" + print(s.rings[0]) + ", " + print(s.rings[1]) + ")";
    case RingSpec::Kind::Quotient: return "Quot(" + print(s.rings[0]) + ", " + join(s.values) + ")";
    case RingSpec::Kind::Trivial: return "Triv(" + print(s.rings[0]) + ", " + print(s.module[0]) + ")";
  }
  return "?";
}

std::string print(const ModuleSpec& s) {
  switch (s.kind) {
    case ModuleSpec::Kind::Self: return "Self";
    case ModuleSpec::Kind::Quotient: return "QuotMod(" + join(s.generators) + ")";
    case ModuleSpec::Kind::Sum: return "Sum(" + print(s.parts[0]) + ", " + print(s.parts[1]) + ")";
    case ModuleSpec::Kind::Extension: return "ExtMod(" + print(s.ring[0]) + ")";
  }
  return "?";
}

RingPtr eval_spec(const RingSpec& s, const Limits& limits) {
  try {
    switch (s.kind) {
      case RingSpec::Kind::Cyclic: return make_cyclic_ring(s.number, limits);
      case RingSpec::Kind::GaloisField: return make_galois_field(s.number, limits);
      case RingSpec::Kind::PolyQ: return make_poly_quotient_ring(s.number, s.values, limits);
      case RingSpec::Kind::Product:
        return make_product_ring(eval_spec(s.rings[0], limits), eval_spec(s.rings[1], limits), limits);
      case RingSpec::Kind::Quotient: {
        auto a = eval_spec(s.rings[0], limits);
        const auto gens = element_indices(s.values, *a, s.position);
        return make_quotient_ring(a, ideal_generated_by(a, gens)).ring;
      }
      case RingSpec::Kind::Trivial: {
        auto a = eval_spec(s.rings[0], limits);
        return make_trivial_extension(a, eval_module_spec(s.module[0], a, limits), limits);
      }
    }
  } catch (const InvalidArgument& e) {
    throw SemanticError(s.position, e.what());
  }
  return nullptr;
}

ModulePtr eval_module_spec(const ModuleSpec& s, const RingPtr& base, const Limits& limits) {
  try {
    switch (s.kind) {
      case ModuleSpec::Kind::Self: return make_regular_module(base);
      case ModuleSpec::Kind::Quotient:
        return make_quotient_module(ideal_generated_by(base, element_indices(s.generators, *base, s.position)));
      case ModuleSpec::Kind::Sum: {
        const std::vector<ModulePtr> parts{eval_module_spec(s.parts[0], base, limits),
                                           eval_module_spec(s.parts[1], base, limits)};
        return make_direct_sum(base, parts);
      }
      case ModuleSpec::Kind::Extension: return make_extension_module(base, eval_spec(s.ring[0], limits), limits);
    }
  } catch (const InvalidArgument& e) {
    throw SemanticError(s.position, e.what());
  }
  return nullptr;
}

RingPtr ring_from_spec(const std::string& text, const Limits& limits) { return eval_spec(parse_ring_spec(text), limits); }

}  // namespace pruferlab
