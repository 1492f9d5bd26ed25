#pragma once

// Small ring fixtures shared by the test files.

#include <array>

#include "pruferlab/ideal.hpp"
#include "pruferlab/module.hpp"
#include "pruferlab/ring.hpp"

namespace fixtures {

using namespace pruferlab;

inline RingPtr gf4() {
  const std::array<std::uint64_t, 3> m{1, 1, 1};
  return make_poly_quotient_ring(2, m);
}

inline RingPtr triv_self(const RingPtr& a) { return make_trivial_extension(a, make_regular_module(a)); }
inline RingPtr triv_self(std::uint64_t n) { return triv_self(make_cyclic_ring(n)); }

/// A ∝ A/(g)
inline RingPtr triv_quot(std::uint64_t n, Index g) {
  auto a = make_cyclic_ring(n);
  return make_trivial_extension(a, make_quotient_module(ideal_generated_by(a, {g})));
}

/// F2 ∝ F4
inline RingPtr f2_f4() {
  auto f2 = make_cyclic_ring(2);
  return make_trivial_extension(f2, make_extension_module(f2, gf4()));
}

/// Index of (a, e) in A ∝ E.
inline Index pair(const RingPtr& r, Index a, Index e) {
  return static_cast<Index>(a * r->construction().module->order() + e);
}

}  // namespace fixtures
