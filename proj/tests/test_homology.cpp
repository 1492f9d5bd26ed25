#include <doctest.h>

#include <array>
#include <set>

#include "pruferlab/homology.hpp"

using namespace pruferlab;

namespace {

RingPtr gf4() {
  const std::array<std::uint64_t, 3> m{1, 1, 1};
  return make_poly_quotient_ring(2, m);
}

RingPtr triv_self(const RingPtr& a) { return make_trivial_extension(a, make_regular_module(a)); }

std::vector<RingPtr> small_family() {
  auto z2 = make_cyclic_ring(2), z4 = make_cyclic_ring(4);
  const std::array<std::uint64_t, 3> t2{0, 0, 1};
  return {make_cyclic_ring(1),
          z2,
          z4,
          make_cyclic_ring(6),
          make_cyclic_ring(8),
          make_cyclic_ring(9),
          make_cyclic_ring(12),
          gf4(),
          make_poly_quotient_ring(2, t2),
          triv_self(z2),
          triv_self(z4),
          make_trivial_extension(z2, make_extension_module(z2, gf4())),
          make_trivial_extension(z4, make_quotient_module(ideal_generated_by(z4, {2}))),
          make_product_ring(z2, z4),
          make_product_ring(z2, triv_self(z2))};
}

}  // namespace

TEST_CASE("group decomposition") {
  auto z12 = make_cyclic_ring(12);
  CHECK(decompose_group(*z12).invariant_factors == std::vector<std::int64_t>{12});
  auto z2 = make_cyclic_ring(2);
  auto k = make_product_ring(make_product_ring(z2, z2), make_cyclic_ring(4));
  CHECK(decompose_group(*k).invariant_factors == std::vector<std::int64_t>{2, 2, 4});
  CHECK(decompose_group(*make_cyclic_ring(1)).invariant_factors.empty());

  for (const auto& r : small_family()) {
    CAPTURE(r->spec());
    const auto g = decompose_group(*r);
    // coordinates form a group isomorphism onto ⊕ Z/d_j
    std::set<std::vector<std::int64_t>> seen;
    for (Index x = 0; x < r->order(); ++x) {
      seen.insert(g.coordinates[x]);
      for (Index y = 0; y < r->order(); ++y) {
        const auto& cx = g.coordinates[x];
        const auto& cy = g.coordinates[y];
        const auto& cs = g.coordinates[r->add(x, y)];
        for (std::size_t j = 0; j < g.rank(); ++j)
          CHECK(cs[j] == (cx[j] + cy[j]) % g.invariant_factors[j]);
      }
    }
    CHECK(seen.size() == r->order());
  }
}

TEST_CASE("tensor products") {
  auto z4 = make_cyclic_ring(4);
  auto half = make_quotient_module(ideal_generated_by(z4, {2}));
  CHECK(tensor_over_ring(*half, *half).invariant_factors == std::vector<std::int64_t>{2});

  auto f2 = make_cyclic_ring(2);
  auto ff = make_regular_module(f2);
  CHECK(tensor_over_ring(*ff, *ff).invariant_factors == std::vector<std::int64_t>{2});

  CHECK_THROWS_AS(tensor_over_ring(*half, *ff), RingMismatch);

  for (const auto& r : small_family()) {
    CAPTURE(r->spec());
    const auto self = make_regular_module(r);
    for (const auto& i : enumerate_ideals(r)) {
      const auto m = make_quotient_module(i);
      const auto im = make_ideal_module(i);
      // R ⊗ N ≅ N
      CHECK(tensor_over_ring(*self, *m).invariant_factors == decompose_group(*m).invariant_factors);
      CHECK(tensor_over_ring(*im, *self).order() == im->order());
      // symmetry
      CHECK(tensor_over_ring(*m, *im).invariant_factors == tensor_over_ring(*im, *m).invariant_factors);
      // R/I ⊗ R/J ≅ R/(I+J)
      for (const auto& j : enumerate_ideals(r)) {
        const auto mj = make_quotient_module(j);
        CHECK(tensor_over_ring(*m, *mj).order() == make_quotient_module(ideal_sum(i, j))->order());
      }
    }
  }
}

TEST_CASE("flatness") {
  auto z4 = make_cyclic_ring(4);
  auto two = ideal_generated_by(z4, {2});
  auto f = is_flat_ideal(two);
  CHECK_FALSE(f.flat);
  REQUIRE(f.witness);
  CHECK(*f.witness == two);
  CHECK(f.tensor_order == 2);
  CHECK(f.product_order == 1);

  auto k = gf4();
  for (const auto& i : enumerate_ideals(k)) CHECK(is_flat_ideal(i).flat);

  auto f2 = make_cyclic_ring(2);
  auto d = triv_self(f2);
  CHECK_FALSE(is_flat_ideal(ideal_generated_by(d, {1})).flat);
}

TEST_CASE("resolution probe") {
  auto f2 = make_cyclic_ring(2);
  auto d = triv_self(f2);
  auto c = resolution_cycle_probe(ideal_generated_by(d, {1}), 4);
  CHECK(c.outcome == ProbeOutcome::Periodic);
  CHECK(c.step == 1);
  CHECK(c.matches == 0);
  CHECK(c.period() == 1);

  auto k = gf4();
  auto cf = resolution_cycle_probe(unit_ideal(k), 4);
  CHECK(cf.outcome == ProbeOutcome::FiniteDimension);
  CHECK(cf.flat_dimension == 0);

  auto z4 = make_cyclic_ring(4);
  auto cz = resolution_cycle_probe(ideal_generated_by(z4, {2}), 4);
  CHECK(cz.outcome == ProbeOutcome::Periodic);
  CHECK(cz.step == 1);

  CHECK(resolution_cycle_probe(zero_ideal(z4), 2).outcome == ProbeOutcome::FiniteDimension);
  CHECK_THROWS_AS(resolution_cycle_probe(unit_ideal(make_cyclic_ring(6)), 2), InvalidArgument);
  CHECK_THROWS_AS(resolution_cycle_probe(unit_ideal(z4), 0), InvalidArgument);
}

TEST_CASE("property: flat ideals never get an infinite certificate; local flat ideals are 0 or R") {
  for (const auto& r : small_family()) {
    CAPTURE(r->spec());
    const auto all = enumerate_ideals(r);
    for (const auto& i : all) {
      const bool flat = is_flat_ideal(i, all).flat;
      if (r->is_local()) {
        CHECK(flat == (i.is_zero() || i.is_whole()));
        const auto c = resolution_cycle_probe(i, 3);
        if (flat) CHECK(c.outcome == ProbeOutcome::FiniteDimension);
        else CHECK(c.outcome != ProbeOutcome::FiniteDimension);
      }
    }
  }
}
