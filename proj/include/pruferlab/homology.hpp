#pragma once

/**
 * @file homology.hpp
 * @brief Finite-module homological oracles reduced to integer Smith normal
 * form: abelian group decomposition, tensor products over a finite ring,
 * flatness of ideals and a minimal-resolution periodicity probe.
 */

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pruferlab/ideal.hpp"
#include "pruferlab/module.hpp"
#include "pruferlab/snf.hpp"

namespace pruferlab {

/// A finite abelian group written as Z/d_1 ⊕ ... ⊕ Z/d_s with 1 < d_1 | d_2 | ... | d_s.
struct GroupDecomposition {
  std::vector<std::int64_t> invariant_factors;
  /// coordinates[x][j] in [0, d_j) for every element x.
  std::vector<std::vector<std::int64_t>> coordinates;
  /// generators[j] has coordinate vector e_j.
  std::vector<Index> generators;

  std::size_t rank() const noexcept { return invariant_factors.size(); }
};

GroupDecomposition decompose_group(const FiniteModule& m);
GroupDecomposition decompose_group(const FiniteRing& r);

/// A finitely presented module: Z^generators modulo the row span of `relations`.
struct PresentedModule {
  RingPtr base;
  std::size_t generator_count = 0;
  IntMatrix relations;
  std::vector<std::int64_t> invariant_factors;  ///< > 1 only

  std::uint64_t order() const;
};

/// M ⊗_R N generated by e_i ⊗ f_j over additive generators of M and N, modulo
/// additive orders and the balance relations r·e_i ⊗ f_j = e_i ⊗ r·f_j.
PresentedModule tensor_over_ring(const FiniteModule& m, const FiniteModule& n);

struct FlatnessResult {
  bool flat = true;
  std::optional<Ideal> witness;  ///< J with |J ⊗ I| != |JI|
  std::uint64_t tensor_order = 0;
  std::uint64_t product_order = 0;
};

/// I is flat iff J ⊗ I -> JI is injective for every ideal J, i.e. |J ⊗ I| = |JI|.
FlatnessResult is_flat_ideal(const Ideal& i, std::span<const Ideal> all_ideals);
FlatnessResult is_flat_ideal(const Ideal& i, const Limits& limits = {});

enum class ProbeOutcome { FiniteDimension, Periodic, Inconclusive };

struct ProbeCertificate {
  ProbeOutcome outcome = ProbeOutcome::Inconclusive;
  int step = 0;            ///< syzygy index where the outcome was decided
  int flat_dimension = 0;  ///< for FiniteDimension
  int matches = 0;         ///< for Periodic: earlier syzygy index isomorphic to syzygy `step`
  std::vector<std::size_t> syzygy_orders;
  std::vector<std::size_t> syzygy_generators;
  std::string explanation;

  int period() const noexcept { return step - matches; }
};

/// Builds the minimal free resolution of I over a local ring step by step. A
/// free syzygy gives a finite flat dimension; a syzygy isomorphic to an
/// earlier non-free one proves the resolution is periodic, hence fd = ∞.
/// Throws InvalidArgument for non-local rings.
ProbeCertificate resolution_cycle_probe(const Ideal& i, int max_steps, const Limits& limits = {});

std::string to_string(ProbeOutcome o);

}  // namespace pruferlab
