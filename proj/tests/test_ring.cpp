#include <doctest.h>

#include <array>

#include "oracles.hpp"
#include "pruferlab/ideal.hpp"
#include "pruferlab/module.hpp"
#include "pruferlab/ring.hpp"

using namespace pruferlab;

namespace {

std::vector<Index> members(const ElementSet& s) { return s.to_vector(); }

RingPtr gf4() {
  const std::array<std::uint64_t, 3> m{1, 1, 1};
  return make_poly_quotient_ring(2, m);
}

RingPtr triv_self(std::uint64_t n) {
  auto a = make_cyclic_ring(n);
  return make_trivial_extension(a, make_regular_module(a));
}

}  // namespace

TEST_CASE("cyclic rings") {
  auto z4 = make_cyclic_ring(4);
  CHECK(z4->order() == 4);
  CHECK(members(z4->units()) == std::vector<Index>{1, 3});
  CHECK(members(z4->nilpotents()) == std::vector<Index>{0, 2});
  CHECK(z4->is_local());

  auto z1 = make_cyclic_ring(1);
  CHECK(z1->zero() == z1->one());
  CHECK(z1->is_zero_ring());
  CHECK(z1->primitive_idempotents().empty());

  CHECK_THROWS_AS(make_cyclic_ring(0), InvalidArgument);
}

TEST_CASE("idempotents of Z/6 match an exhaustive e^2 = e scan") {
  auto z6 = make_cyclic_ring(6);
  std::vector<Index> scan;
  for (Index e = 0; e < 6; ++e)
    if ((e * e) % 6 == e) scan.push_back(e);
  CHECK(scan == std::vector<Index>{0, 1, 3, 4});
  CHECK(members(z6->idempotents()) == scan);
}

TEST_CASE("polynomial quotient rings") {
  auto f4 = gf4();
  CHECK(f4->order() == 4);
  CHECK(f4->is_field());
  // exhaustive inverse search
  for (Index a = 1; a < 4; ++a) {
    bool found = false;
    for (Index b = 0; b < 4; ++b) found |= f4->mul(a, b) == f4->one();
    CHECK(found);
  }

  const std::array<std::uint64_t, 3> t2{0, 0, 1};
  auto dual = make_poly_quotient_ring(2, t2);
  CHECK(members(dual->nilpotents()) == std::vector<Index>{0, 2});
  CHECK(dual->label(2) == "t");

  const std::array<std::uint64_t, 2> lin{0, 1};
  auto f3 = make_poly_quotient_ring(3, lin);
  CHECK(f3->is_field());
  CHECK(f3->order() == 3);

  const std::array<std::uint64_t, 2> not_monic{1, 2};
  CHECK_THROWS_AS(make_poly_quotient_ring(3, not_monic), InvalidArgument);
  const std::array<std::uint64_t, 1> constant{1};
  CHECK_THROWS_AS(make_poly_quotient_ring(3, constant), InvalidArgument);
  CHECK_THROWS_AS(make_poly_quotient_ring(4, lin), InvalidArgument);
}

TEST_CASE("products") {
  auto z2 = make_cyclic_ring(2), z3 = make_cyclic_ring(3);
  auto p = make_product_ring(z2, z3);
  CHECK(oracle::ring_isomorphism(*p, *make_cyclic_ring(6)).has_value());
  CHECK(oracle::ring_isomorphism(*make_product_ring(z3, make_cyclic_ring(1)), *z3).has_value());
  auto f2f2 = make_product_ring(z2, z2);
  // (1,0) and (0,1) have indices 2 and 1
  CHECK(members(f2f2->idempotents()) == std::vector<Index>{0, 1, 2, 3});
  CHECK_FALSE(oracle::ring_isomorphism(*f2f2, *make_cyclic_ring(4)).has_value());
  CHECK_FALSE(oracle::ring_isomorphism(*f2f2, *gf4()).has_value());
}

TEST_CASE("quotients") {
  auto z4 = make_cyclic_ring(4);
  auto q = make_quotient_ring(z4, ideal_generated_by(z4, {2}));
  CHECK(q.ring->order() == 2);
  CHECK(oracle::ring_isomorphism(*q.ring, *make_cyclic_ring(2)).has_value());
  CHECK(q.surjection == std::vector<Index>{0, 1, 0, 1});

  auto same = make_quotient_ring(z4, zero_ideal(z4));
  CHECK(oracle::ring_isomorphism(*same.ring, *z4).has_value());
  CHECK(make_quotient_ring(z4, unit_ideal(z4)).ring->is_zero_ring());

  auto z6 = make_cyclic_ring(6);
  CHECK_THROWS_AS(make_quotient_ring(z6, unit_ideal(z4)), RingMismatch);
}

TEST_CASE("trivial extension multiplication law") {
  auto r = triv_self(4);
  auto idx = [](Index a, Index e) { return a * 4 + e; };
  CHECK(r->mul(idx(2, 0), idx(2, 1)) == idx(0, 2));
  CHECK(r->mul(idx(2, 1), idx(2, 1)) == idx(0, 0));

  auto f2 = make_cyclic_ring(2);
  auto k = make_trivial_extension(f2, make_regular_module(f2));
  for (Index a = 0; a < 2; ++a)
    for (Index e = 0; e < 2; ++e) CHECK(k->mul(a * 2 + e, 1) == a);  // (a,e)(0,1) = (0,a)

  // (0 ∝ E)^2 = 0
  for (Index e = 0; e < 4; ++e)
    for (Index f = 0; f < 4; ++f) CHECK(r->mul(idx(0, e), idx(0, f)) == 0);

  auto z3 = make_cyclic_ring(3);
  CHECK_THROWS_AS(make_trivial_extension(z3, make_regular_module(make_cyclic_ring(4))), RingMismatch);
}

TEST_CASE("modules") {
  auto z4 = make_cyclic_ring(4);
  auto m = ideal_generated_by(z4, {2});
  auto q = make_quotient_module(m);
  CHECK(q->order() == 2);
  for (Index e = 0; e < 2; ++e) CHECK(q->act(2, e) == q->zero());
  CHECK(make_regular_module(z4)->order() == 4);

  const std::array<ModulePtr, 2> parts{q, q};
  auto s = make_direct_sum(z4, parts);
  CHECK(s->order() == 4);
  for (Index e = 0; e < 4; ++e) CHECK(s->act(2, e) == s->zero());
  CHECK(s->spec() == "Sum(QuotMod(2), QuotMod(2))");
  CHECK_FALSE(check_module_axioms(*s).has_value());

  auto f2 = make_cyclic_ring(2);
  auto ext = make_extension_module(f2, gf4());
  CHECK(ext->order() == 4);
  CHECK(ext->spec() == "ExtMod(PolyQ(2, 1, 1, 1))");
  CHECK_THROWS_AS(make_extension_module(make_cyclic_ring(3), gf4()), InvalidArgument);
}

TEST_CASE("element classification") {
  auto z12 = make_cyclic_ring(12);
  auto c = element_classification(*z12);
  CHECK(members(c.nilradical) == std::vector<Index>{0, 6});
  CHECK(nilradical(z12) == ideal_generated_by(z12, {6}));

  auto r = triv_self(4);
  auto rc = element_classification(*r);
  CHECK((rc.units | rc.zero_divisors) == r->all());
  CHECK_FALSE(rc.units.intersects(rc.zero_divisors));
  CHECK(rc.regular == rc.units);

  auto f4 = gf4();
  auto fc = element_classification(*f4);
  CHECK(members(fc.zero_divisors) == std::vector<Index>{0});
  CHECK(fc.units.count() == 3);
}

TEST_CASE("maximal ideals and locality") {
  auto z12 = make_cyclic_ring(12);
  auto mi = maximal_ideals_and_locality(z12);
  CHECK_FALSE(mi.is_local);
  REQUIRE(mi.ideals.size() == 2);
  std::vector<Ideal> expected{ideal_generated_by(z12, {2}), ideal_generated_by(z12, {3})};
  CHECK(((mi.ideals[0] == expected[0] && mi.ideals[1] == expected[1]) ||
         (mi.ideals[0] == expected[1] && mi.ideals[1] == expected[0])));

  auto f2 = make_cyclic_ring(2);
  auto r = make_trivial_extension(f2, make_extension_module(f2, gf4()));
  auto mr = maximal_ideals_and_locality(r);
  CHECK(mr.is_local);
  // 0 ∝ F4: indices 0..3
  CHECK(members(mr.ideals[0].elements()) == std::vector<Index>{0, 1, 2, 3});

  auto t = triv_self(4);
  auto mt = maximal_ideals_and_locality(t);
  CHECK(mt.is_local);
  // 2Z/4 ∝ Z/4: a in {0,2}
  CHECK(members(mt.ideals[0].elements()) == std::vector<Index>{0, 1, 2, 3, 8, 9, 10, 11});
}

TEST_CASE("local decomposition") {
  auto z12 = make_cyclic_ring(12);
  auto f = local_decomposition(z12);
  REQUIRE(f.size() == 2);
  std::vector<std::size_t> orders{f[0].ring->order(), f[1].ring->order()};
  std::sort(orders.begin(), orders.end());
  CHECK(orders == std::vector<std::size_t>{3, 4});
  for (const auto& x : f)
    CHECK(oracle::ring_isomorphism(*x.ring, *make_cyclic_ring(x.ring->order())).has_value());

  CHECK(local_decomposition(triv_self(4)).size() == 1);

  auto z2 = make_cyclic_ring(2), z3 = make_cyclic_ring(3);
  auto three = make_product_ring(make_product_ring(z2, z2), z3);
  auto g = local_decomposition(three);
  CHECK(g.size() == 3);
  for (const auto& x : g) CHECK(x.ring->is_field());
  CHECK(local_decomposition(make_cyclic_ring(1)).empty());
}

TEST_CASE("property: axioms, partition, locality and decomposition on a ring family") {
  std::vector<RingPtr> rings;
  for (std::uint64_t n = 1; n <= 64; ++n) rings.push_back(make_cyclic_ring(n));
  rings.push_back(gf4());
  rings.push_back(triv_self(4));
  rings.push_back(triv_self(8));
  auto z4 = make_cyclic_ring(4), z2 = make_cyclic_ring(2);
  rings.push_back(make_trivial_extension(z4, make_quotient_module(ideal_generated_by(z4, {2}))));
  rings.push_back(make_product_ring(z4, gf4()));
  rings.push_back(make_product_ring(make_product_ring(z2, z4), z2));
  auto t4 = triv_self(4);
  rings.push_back(make_quotient_ring(t4, ideal_generated_by(t4, {1})).ring);
  for (const auto& r : rings) {
    CAPTURE(r->spec());
    CHECK_FALSE(check_ring_axioms(*r).has_value());
    CHECK((r->units() | r->zero_divisors()) == r->all());
    CHECK_FALSE(r->units().intersects(r->zero_divisors()));

    // local iff the non-units form an ideal
    ElementSet non_units(r->order());
    for (Index x = 0; x < r->order(); ++x)
      if (!r->is_unit(x)) non_units.insert(x);
    bool closed = !r->is_zero_ring();
    for (Index x : non_units.to_vector())
      for (Index y = 0; y < r->order() && closed; ++y)
        if (!non_units.contains(r->mul(x, y)) || (non_units.contains(y) && !non_units.contains(r->add(x, y))))
          closed = false;
    CHECK(closed == r->is_local());

    // maximal ideals via idempotents agree with the powerset scan on small rings
    if (r->order() <= 16) {
      auto all = oracle::powerset_ideals(*r);
      std::vector<std::uint64_t> maximal;
      const std::uint64_t whole = (r->order() == 64) ? ~0ull : (1ull << r->order()) - 1;
      for (auto m : all) {
        if (m == whole) continue;
        bool is_max = true;
        for (auto n : all)
          if (n != whole && n != m && (m & n) == m) is_max = false;
        if (is_max) maximal.push_back(m);
      }
      std::vector<std::uint64_t> mine;
      for (const auto& s : r->maximal_ideals()) {
        std::uint64_t m = 0;
        s.for_each([&](Index x) { m |= 1ull << x; });
        mine.push_back(m);
      }
      std::sort(maximal.begin(), maximal.end());
      std::sort(mine.begin(), mine.end());
      CHECK(mine == maximal);
    }

    std::size_t prod = 1;
    for (const auto& f : local_decomposition(r)) {
      CHECK(f.ring->is_local());
      prod *= f.ring->order();
    }
    CHECK(prod == r->order());
  }
}
