#pragma once

/**
 * @file ring.hpp
 * @brief Finite commutative unital rings stored as flat addition and
 * multiplication tables, plus the constructors used throughout the library.
 *
 * Every ring is immutable after construction. Element-level structure (units,
 * zero divisors, nilpotents, idempotents, principal ideals, maximal ideals) is
 * computed once in the constructor, so a `RingPtr` may be shared freely across
 * threads.
 *
 * Element indexing is part of the public contract because the ring-spec DSL
 * refers to elements by index:
 *  - `Z/n`: index = residue.
 *  - `(Z/p)[t]/(m)`: index = sum of c_i p^i over the coefficient vector.
 *  - `A x B` and `A ∝ E`: index = a * |B| + b (resp. a * |E| + e).
 *  - `A / I`: cosets ordered by their smallest representative.
 */

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pruferlab/common.hpp"

namespace pruferlab {

class FiniteRing;
class FiniteModule;
class Ideal;
using RingPtr = std::shared_ptr<const FiniteRing>;
using ModulePtr = std::shared_ptr<const FiniteModule>;

enum class ConstructionKind { Cyclic, PolyQuotient, Product, Quotient, TrivialExtension, Corner };

/// Provenance of a ring: how it was built and from what.
struct Construction {
  ConstructionKind kind = ConstructionKind::Cyclic;
  std::uint64_t modulus = 0;        ///< n for Z/n, p for polynomial quotients
  std::vector<Index> coefficients;  ///< modulus coefficients, ideal generators or the corner idempotent
  std::vector<RingPtr> children;    ///< factors / base ring / parent
  ModulePtr module;                 ///< the module of a trivial extension
};

/// Element handle tagged with the identity of its ring.
struct Element {
  std::uint64_t ring_id = 0;
  Index index = 0;
  friend bool operator==(const Element&, const Element&) = default;
};

struct RingData {
  std::size_t order = 0;
  std::vector<Index> add;  ///< order*order, row-major
  std::vector<Index> mul;  ///< order*order, row-major
  Index zero = 0;
  Index one = 0;
  std::vector<std::string> labels;
  std::string spec;
  Construction construction;
};

class FiniteRing {
 public:
  explicit FiniteRing(RingData data);

  std::uint64_t id() const noexcept { return id_; }
  std::size_t order() const noexcept { return order_; }
  Index zero() const noexcept { return zero_; }
  Index one() const noexcept { return one_; }
  bool is_zero_ring() const noexcept { return order_ == 1; }

  Index add(Index a, Index b) const noexcept { return add_[a * order_ + b]; }
  Index mul(Index a, Index b) const noexcept { return mul_[a * order_ + b]; }
  Index neg(Index a) const noexcept { return neg_[a]; }
  Index sub(Index a, Index b) const noexcept { return add(a, neg(b)); }
  Index pow(Index a, std::uint64_t k) const noexcept;
  /// k-fold sum 1 + ... + 1 (k reduced modulo the additive order of 1).
  Index integer(std::uint64_t k) const noexcept;

  Element element(Index i) const;
  Index index_of(const Element& e) const;

  const std::string& label(Index i) const { return labels_.at(i); }
  const std::string& spec() const noexcept { return spec_; }
  const Construction& construction() const noexcept { return construction_; }

  bool is_unit(Index a) const noexcept { return units_.contains(a); }
  bool is_zero_divisor(Index a) const noexcept { return zero_divisors_.contains(a); }
  bool is_nilpotent(Index a) const noexcept { return nilpotents_.contains(a); }
  bool is_idempotent(Index a) const noexcept { return idempotents_.contains(a); }
  /// Multiplicative inverse; only meaningful for units.
  Index inverse(Index a) const noexcept { return inverse_[a]; }

  const ElementSet& units() const noexcept { return units_; }
  const ElementSet& zero_divisors() const noexcept { return zero_divisors_; }
  const ElementSet& nilpotents() const noexcept { return nilpotents_; }
  const ElementSet& idempotents() const noexcept { return idempotents_; }
  const ElementSet& all() const noexcept { return all_; }
  /// The principal ideal R·a as an element set.
  const ElementSet& principal(Index a) const noexcept { return principal_[a]; }

  /// Primitive idempotents in increasing index order; one per local factor.
  const std::vector<Index>& primitive_idempotents() const noexcept { return primitive_; }
  /// Maximal ideals, aligned with primitive_idempotents().
  const std::vector<ElementSet>& maximal_ideals() const noexcept { return maximal_; }
  bool is_local() const noexcept { return maximal_.size() == 1; }
  bool is_field() const noexcept { return order_ > 1 && units_.count() + 1 == order_; }

  /// Additive order of 1.
  std::uint64_t characteristic() const noexcept { return characteristic_; }

  /// Smallest additive subgroup containing both sets (both assumed subgroups).
  ElementSet subgroup_sum(const ElementSet& a, const ElementSet& b) const;
  /// Additive subgroup generated by the given elements.
  ElementSet additive_span(std::span<const Index> gens) const;

 private:
  void compute_structure();

  std::uint64_t id_;
  std::size_t order_;
  std::vector<Index> add_, mul_, neg_, inverse_;
  Index zero_, one_;
  std::vector<std::string> labels_;
  std::string spec_;
  Construction construction_;

  ElementSet all_, units_, zero_divisors_, nilpotents_, idempotents_;
  std::vector<ElementSet> principal_;
  std::vector<Index> primitive_;
  std::vector<ElementSet> maximal_;
  std::uint64_t characteristic_ = 1;
};

/// Z/n. Throws InvalidArgument for n = 0.
RingPtr make_cyclic_ring(std::uint64_t n, const Limits& limits = {});

/// (Z/p)[t]/(modulus) with the modulus given constant term first. The modulus
/// must be monic of degree >= 1.
RingPtr make_poly_quotient_ring(std::uint64_t p, std::span<const std::uint64_t> modulus,
                                const Limits& limits = {});

/// (p, modulus) of the shipped GF(q) table: fixed irreducible moduli for the
/// prime powers 4, 8, 9, 16, 25, 27, 32, 49, 64, and the modulus t for primes.
std::optional<std::pair<std::uint64_t, std::vector<std::uint64_t>>> galois_field_modulus(std::uint64_t q);

/// GF(q) from the modulus table, with spec "GF(q)". Throws InvalidArgument for
/// orders outside the table.
RingPtr make_galois_field(std::uint64_t q, const Limits& limits = {});

RingPtr make_product_ring(const RingPtr& a, const RingPtr& b, const Limits& limits = {});

struct QuotientRing {
  RingPtr ring;
  std::vector<Index> surjection;  ///< element of A -> coset index
};

/// A / I together with the quotient map. Throws RingMismatch if I is an ideal of another ring.
QuotientRing make_quotient_ring(const RingPtr& a, const Ideal& ideal);

/// A ∝ E with (a,e)(a',e') = (aa', ae' + a'e).
RingPtr make_trivial_extension(const RingPtr& a, const ModulePtr& e, const Limits& limits = {});

/// eR for an idempotent e, a ring with identity e. Elements keep the labels of R.
RingPtr make_corner_ring(const RingPtr& r, Index e);

struct ElementClassification {
  ElementSet units;
  ElementSet zero_divisors;
  ElementSet regular;  ///< non-zero-divisors
  ElementSet nilradical;
  ElementSet idempotents;
};

/// Units, zero divisors, regular elements, nilradical and idempotents.
/// Throws InternalError if some regular element is not a unit (impossible in a
/// finite ring; checked rather than assumed).
ElementClassification element_classification(const FiniteRing& r);

struct LocalFactor {
  RingPtr ring;
  Index idempotent = 0;            ///< e with ring = eR
  std::vector<Index> projection;   ///< R -> factor, x -> e·x
  std::vector<Index> embedding;    ///< factor -> R (the subset eR)
};

/// Splits R recursively at nontrivial idempotents e into eR x (1-e)R until every
/// factor is local. Factors are ordered by their idempotent's index in R. The
/// combined projection is verified to be bijective.
std::vector<LocalFactor> local_decomposition(const RingPtr& r);

/// Exhaustive table scan of the commutative ring axioms. Returns a description
/// of the first failure.
std::optional<std::string> check_ring_axioms(const FiniteRing& r);

bool is_prime(std::uint64_t n) noexcept;

}  // namespace pruferlab
