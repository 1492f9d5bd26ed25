#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "pruferlab/ideal.hpp"
#include "pruferlab/spec.hpp"

using namespace pruferlab;

namespace {

RingSpec random_ring(std::mt19937& rng, int depth);

ModuleSpec random_module(std::mt19937& rng, int depth) {
  ModuleSpec m;
  switch (std::uniform_int_distribution<int>(0, depth > 0 ? 3 : 1)(rng)) {
    case 0: m.kind = ModuleSpec::Kind::Self; break;
    case 1:
      m.kind = ModuleSpec::Kind::Quotient;
      m.generators = {std::uniform_int_distribution<std::uint64_t>(0, 9)(rng)};
      if (rng() % 2) m.generators.push_back(rng() % 10);
      break;
    case 2:
      m.kind = ModuleSpec::Kind::Sum;
      m.parts = {random_module(rng, depth - 1), random_module(rng, depth - 1)};
      break;
    default:
      m.kind = ModuleSpec::Kind::Extension;
      m.ring = {random_ring(rng, depth - 1)};
  }
  return m;
}

RingSpec random_ring(std::mt19937& rng, int depth) {
  RingSpec r;
  switch (std::uniform_int_distribution<int>(0, depth > 0 ? 5 : 2)(rng)) {
    case 0: r.kind = RingSpec::Kind::Cyclic; r.number = 1 + rng() % 30; break;
    case 1: r.kind = RingSpec::Kind::GaloisField; r.number = std::vector<std::uint64_t>{2, 4, 8, 9, 25, 49}[rng() % 6]; break;
    case 2:
      r.kind = RingSpec::Kind::PolyQ;
      r.number = std::vector<std::uint64_t>{2, 3, 5}[rng() % 3];
      for (int k = 0; k < 3; ++k) r.values.push_back(rng() % r.number);
      break;
    case 3:
      r.kind = RingSpec::Kind::Product;
      r.rings = {random_ring(rng, depth - 1), random_ring(rng, depth - 1)};
      break;
    case 4:
      r.kind = RingSpec::Kind::Quotient;
      r.rings = {random_ring(rng, depth - 1)};
      r.values = {rng() % 7};
      break;
    default:
      r.kind = RingSpec::Kind::Trivial;
      r.rings = {random_ring(rng, depth - 1)};
      r.module = {random_module(rng, depth - 1)};
  }
  return r;
}

ParseError parse_error(const std::string& text) {
  try {
    parse_ring_spec(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("no parse error for " << text);
  throw;
}

}  // namespace

TEST_CASE("spec strings evaluate to rings of the expected order") {
  CHECK(ring_from_spec("Triv(Z/4, Self)")->order() == 16);
  CHECK(ring_from_spec("Prod(Z/2, Z/3)")->order() == 6);
  CHECK(ring_from_spec("Triv(GF(2), ExtMod(GF(4)))")->order() == 8);
  CHECK(ring_from_spec("Triv(Z/4, QuotMod(2))")->order() == 8);
  CHECK(ring_from_spec("Triv(Z/2, Sum(Self, Self))")->order() == 8);
  CHECK(ring_from_spec("Quot(Z/12, 4)")->order() == 4);
  CHECK(ring_from_spec("PolyQ(2, 0, 0, 1)")->order() == 4);
  CHECK(ring_from_spec("  Prod( Z/2 ,GF(9) ) ")->order() == 18);
}

TEST_CASE("evaluated ring spec equals the canonical print") {
  for (const char* text : {"Z/6", "GF(8)", "PolyQ(3, 0, 0, 1)", "Prod(Z/2, GF(4))", "Quot(Z/12, 4)",
                           "Triv(Z/4, Self)", "Triv(Z/4, QuotMod(2))", "Triv(GF(2), ExtMod(GF(4)))",
                           "Triv(Z/2, Sum(Self, QuotMod(1)))"}) {
    CAPTURE(text);
    const auto ast = parse_ring_spec(text);
    CHECK(print(ast) == text);
    CHECK(eval_spec(ast)->spec() == text);
  }
}

TEST_CASE("print then parse is the identity on random syntax trees") {
  std::mt19937 rng(17);
  for (int k = 0; k < 500; ++k) {
    const auto ast = random_ring(rng, 3);
    const auto text = print(ast);
    CAPTURE(text);
    CHECK(parse_ring_spec(text) == ast);
    CHECK(print(parse_ring_spec(text)) == text);
  }
}

TEST_CASE("parse errors report position and expected tokens") {
  auto e = parse_error("Prod(Z/2 Z/3)");
  CHECK(e.position() == 9);
  CHECK(e.expected() == std::set<std::string>{","});
  CHECK(e.found() == "Z");

  e = parse_error("Foo(2)");
  CHECK(e.position() == 0);
  CHECK(e.expected().contains("Z/"));
  CHECK(e.expected().contains("Triv("));
  CHECK(e.found() == "Foo");

  e = parse_error("Triv(Z/4, Selfie)");
  CHECK(e.position() == 10);
  CHECK(e.expected() == std::set<std::string>{"Self", "QuotMod(", "Sum(", "ExtMod("});

  e = parse_error("Z/4 extra");
  CHECK(e.position() == 4);
  CHECK(e.expected() == std::set<std::string>{"end of input"});

  e = parse_error("GF(4");
  CHECK(e.position() == 4);
  CHECK(e.found() == "end of input");

  e = parse_error("Z/");
  CHECK(e.expected() == std::set<std::string>{"integer"});
}

TEST_CASE("semantic errors") {
  auto position_of = [](const std::string& text) -> std::size_t {
    try {
      ring_from_spec(text);
    } catch (const SemanticError& e) {
      return e.position();
    }
    return std::string::npos;
  };
  CHECK(position_of("Z/0") == 2);
  CHECK(position_of("Prod(Z/2, GF(6))") == 13);
  CHECK(position_of("GF(128)") == 3);
  CHECK(position_of("PolyQ(4, 1, 1)") == 6);
  CHECK(position_of("Z/99999999999999999999") == 2);
  CHECK(position_of("Triv(Z/4, QuotMod(7))") == 10);
  CHECK(position_of("Quot(Z/4, 4)") == 0);
  // ExtMod needs an additively cyclic base of matching characteristic
  CHECK(position_of("Triv(GF(4), ExtMod(GF(4)))") == 12);
  CHECK(position_of("Triv(Z/3, ExtMod(GF(4)))") == 10);
}

TEST_CASE("every Galois field in the table is a field of the stated order") {
  for (std::uint64_t q = 2; q <= 64; ++q) {
    const auto modulus = galois_field_modulus(q);
    CAPTURE(q);
    if (!modulus) {
      CHECK_THROWS_AS(ring_from_spec("GF(" + std::to_string(q) + ")"), SemanticError);
      continue;
    }
    auto f = make_galois_field(q);
    CHECK(f->order() == q);
    CHECK(f->is_field());
    CHECK(f->characteristic() == modulus->first);
  }
  CHECK(galois_field_modulus(2));
  CHECK(!galois_field_modulus(6));
  CHECK(!galois_field_modulus(12));
}

TEST_CASE("GF(4) from the table is isomorphic to the hand-written PolyQ(2, 1, 1, 1)") {
  CHECK(oracle::ring_isomorphism(*ring_from_spec("GF(4)"), *ring_from_spec("PolyQ(2, 1, 1, 1)")));
  CHECK(!oracle::ring_isomorphism(*ring_from_spec("GF(4)"), *ring_from_spec("Z/4")));
}
