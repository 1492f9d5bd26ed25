#pragma once

/**
 * @file ideal.hpp
 * @brief Ideals of finite rings as generator lists plus element bit-masks,
 * ideal arithmetic, predicates and the full ideal lattice.
 */

#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "pruferlab/ring.hpp"

namespace pruferlab {

class Ideal {
 public:
  /// Unchecked: `elements` must be the ideal generated by `generators`.
  Ideal(RingPtr ring, std::vector<Index> generators, ElementSet elements);

  /// Validates closure under addition and ring multiplication; throws InvalidArgument.
  static Ideal from_elements(const RingPtr& ring, const ElementSet& elements);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Index>& generators() const noexcept { return generators_; }
  const ElementSet& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.count(); }
  bool contains(Index a) const noexcept { return elements_.contains(a); }
  bool is_zero() const noexcept { return size() == 1; }
  bool is_whole() const noexcept { return size() == ring_->order(); }
  bool is_subset_of(const Ideal& other) const;

  /// "(g1, g2)" using element labels.
  std::string describe() const;
  /// "{x1, x2, ...}" using element labels.
  std::string describe_elements() const;

  friend bool operator==(const Ideal& a, const Ideal& b) {
    return a.ring_->id() == b.ring_->id() && a.elements_ == b.elements_;
  }

 private:
  RingPtr ring_;
  std::vector<Index> generators_;
  ElementSet elements_;
};

/// Smallest ideal containing gens: the additive span of the principal ideals R·g.
Ideal ideal_generated_by(const RingPtr& ring, std::span<const Index> gens);
Ideal ideal_generated_by(const RingPtr& ring, std::initializer_list<Index> gens);
Ideal zero_ideal(const RingPtr& ring);
Ideal unit_ideal(const RingPtr& ring);

/// Every ideal of R, duplicate free, sorted by (size, element mask). Computed by
/// closing the set of principal ideals under sums. Throws CapExceeded when
/// |R| > limits.enumeration_order.
std::vector<Ideal> enumerate_ideals(const RingPtr& ring, const Limits& limits = {});

Ideal ideal_sum(const Ideal& i, const Ideal& j);
Ideal ideal_product(const Ideal& i, const Ideal& j);
Ideal ideal_intersection(const Ideal& i, const Ideal& j);
/// (I : J) = { x : xJ ⊆ I }.
Ideal ideal_colon(const Ideal& i, const Ideal& j);
/// Ann(I) = (0 : I).
Ideal annihilator(const Ideal& i);
Ideal annihilator(const RingPtr& ring, Index a);

/// A generator g with Rg = I, if one exists (smallest index wins).
std::optional<Index> principal_generator(const Ideal& i);

struct IdealPredicates {
  bool is_principal = false;
  bool is_regular = false;  ///< contains a non-zero-divisor (R itself counts)
  bool is_dense = false;    ///< Ann(I) = 0
  bool is_proper = false;
  std::optional<Index> generator;
  std::optional<Index> regular_element;
};
IdealPredicates ideal_predicates(const Ideal& i);

struct InvertibilityCertificate {
  bool invertible = false;
  Ideal colon;    ///< (R : I), integral because a finite ring is its own total quotient ring
  Ideal product;  ///< I·(R : I)
  std::string note;
};
InvertibilityCertificate is_invertible(const Ideal& i);

struct LocalPrincipality {
  bool locally_principal = true;
  /// Per local factor: a generator of the image (factor index), or nullopt.
  std::vector<std::optional<Index>> generators;
  std::optional<std::size_t> failing_factor;
};

/// Image e·I of I in a local factor eR, as an ideal of the factor ring.
Ideal image_in_factor(const Ideal& i, const LocalFactor& factor);

LocalPrincipality is_locally_principal(const Ideal& i, std::span<const LocalFactor> factors);
LocalPrincipality is_locally_principal(const Ideal& i);

/// Maximal ideals (derived from the primitive idempotents) and the locality flag.
struct MaximalIdeals {
  std::vector<Ideal> ideals;
  bool is_local = false;
};
MaximalIdeals maximal_ideals_and_locality(const RingPtr& ring);

Ideal nilradical(const RingPtr& ring);

/// The set of ideals of one ring with memoized sum/product tables over ideal ids.
/// Not thread-safe (memo tables are filled lazily); build one per thread.
class IdealLattice {
 public:
  explicit IdealLattice(RingPtr ring, const Limits& limits = {});

  const RingPtr& ring() const noexcept { return ring_; }
  std::size_t size() const noexcept { return ideals_.size(); }
  const Ideal& operator[](std::size_t id) const { return ideals_[id]; }
  const std::vector<Ideal>& ideals() const noexcept { return ideals_; }

  /// Id of an element set that is an ideal; throws InvalidArgument otherwise.
  std::size_t id_of(const ElementSet& s) const;
  std::size_t id_of(const Ideal& i) const { return id_of(i.elements()); }
  std::size_t principal_id(Index a) const noexcept { return principal_[a]; }
  std::size_t zero_id() const noexcept { return 0; }
  std::size_t whole_id() const noexcept { return ideals_.size() - 1; }

  bool subset(std::size_t i, std::size_t j) const {
    return ideals_[i].elements().is_subset_of(ideals_[j].elements());
  }
  std::size_t sum(std::size_t i, std::size_t j);
  std::size_t product(std::size_t i, std::size_t j);

 private:
  RingPtr ring_;
  std::vector<Ideal> ideals_;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> lookup_;
  std::vector<std::size_t> principal_;
  std::vector<std::int32_t> sum_memo_, product_memo_;
};

}  // namespace pruferlab
