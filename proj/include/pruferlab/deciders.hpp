#pragma once

/**
 * @file deciders.hpp
 * @brief Deciders for the Prüfer-like hierarchy on finite rings, each
 * returning a witness for a negative answer, and the PropertyReport that
 * assembles them.
 *
 * Every finite ring is its own total quotient ring (regular elements are
 * units), so several flags are constant on the finite universe. They are
 * still decided by scanning rather than assumed.
 */

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pruferlab/homology.hpp"
#include "pruferlab/ideal.hpp"
#include "pruferlab/polynomial.hpp"

namespace pruferlab {

struct TotalQuotientResult {
  bool holds = true;
  std::optional<Index> regular_non_unit;
};

/// Every element is a unit or a zero divisor.
TotalQuotientResult is_total_quotient_ring(const FiniteRing& r);

struct PruferResult {
  bool holds = true;
  std::size_t two_generated = 0;  ///< distinct two-generated ideals examined
  std::size_t regular = 0;        ///< of which regular
  std::optional<Ideal> witness;   ///< regular, two-generated, not invertible
  std::string certificate;
};

/// Every two-generated regular ideal is invertible. Throws CapExceeded above
/// the enumeration cap.
PruferResult is_prufer(const RingPtr& r, const Limits& limits = {});

struct GaussianResult {
  bool holds = true;
  std::size_t factor = 0;                         ///< local factor of the witness
  std::optional<std::pair<Index, Index>> witness;  ///< (a, b) in R, both in that factor's maximal ideal
  int failed_condition = 0;  ///< 1: (a,b)^2 is neither (a^2) nor (b^2); 2: (a,b)^2 = (a^2), ab = 0, b^2 != 0
  std::string detail;
};

/// Tsang's criterion on every local factor: for all a, b in the maximal ideal,
/// (a,b)^2 = (a^2) or (b^2), and (a,b)^2 = (a^2) with ab = 0 forces b^2 = 0.
GaussianResult is_gaussian(const RingPtr& r);

struct FactorizationOracle {
  bool holds = true;
  std::optional<std::pair<Ideal, Ideal>> witness;  ///< I ⊆ J with I != HJ for every H
};

/// R is arithmetical iff every pair of ideals I ⊆ J admits H with I = HJ.
FactorizationOracle arithmetical_by_factorization(const RingPtr& r, const Limits& limits = {});

struct ArithmeticalResult {
  bool holds = true;
  std::optional<Ideal> witness;  ///< two-generated, not locally principal
  bool oracle_ran = false;
  std::string detail;
};

/// Every two-generated ideal is locally principal (which, by induction on the
/// number of generators, covers all finitely generated ideals). Up to
/// oracle_order the factorization oracle also runs; disagreement throws
/// InternalError.
ArithmeticalResult is_arithmetical(const RingPtr& r, const Limits& limits = {});

struct FlatnessOracle {
  bool holds = true;
  std::optional<Ideal> non_flat;
  std::optional<Ideal> test_ideal;  ///< J with |J ⊗ I| != |JI|
};

/// Every ideal is flat, by the tensor-order test against every ideal.
FlatnessOracle all_ideals_flat(const RingPtr& r, const Limits& limits = {});

struct WdimResult {
  bool wdim_le_one = true;
  bool semihereditary = true;
  /// true: an infinite flat dimension was certified; false: wdim <= 1; empty: not certified.
  std::optional<bool> wdim_infinite_certified;
  std::optional<std::size_t> non_field_factor;
  std::optional<Index> non_field_witness;  ///< nonzero nilpotent of R inside that factor
  bool oracle_ran = false;
  std::optional<Ideal> probed_ideal;
  std::optional<ProbeCertificate> probe;
  std::string detail;
};

/// wdim(R) <= 1 iff every local factor is a field (a finite reduced ring). Up to
/// oracle_order the all-ideals flatness test runs as a cross-check.
WdimResult wdim_classification(const RingPtr& r, const Limits& limits = {});

struct StrongPruferResult {
  bool strongly_prufer = true;
  bool ch_ring = true;
  std::size_t dense_ideals = 0;
  std::optional<Ideal> dense_not_locally_principal;
  std::optional<Ideal> proper_with_zero_annihilator;
};

/// Strongly Prüfer: every dense ideal is locally principal. (CH): every proper
/// ideal has a nonzero annihilator.
StrongPruferResult strongly_prufer_and_ch(const RingPtr& r, const Limits& limits = {});

/// Verdict on the Prüfer property of the Nagata ring A(X), derived from the
/// criterion "A(X) is Prüfer iff A is strongly Prüfer". A(X) itself is never built.
std::string nagata_prufer_report(const RingPtr& a, const Limits& limits = {});

/// Certificate for a negative flag.
struct Witness {
  std::string kind;  ///< element | element_pair | ideal | ideal_pair | polynomial_pair
  std::vector<std::string> items;
  std::string description;
};

struct PropertyReport {
  std::string spec;
  std::size_t order = 0;
  bool is_local = false;
  std::size_t local_factors = 0;

  bool semihereditary = true;
  bool wdim_le_one = true;
  std::optional<bool> wdim_infinite_certified;
  bool arithmetical = true;
  bool gaussian = true;
  bool prufer = true;
  bool total_quotient_ring = true;
  bool strongly_prufer = true;
  bool ch_ring = true;

  std::map<std::string, Witness> witnesses;
  std::map<std::string, std::string> certificates;
  std::vector<std::string> notes;
  std::vector<std::string> oracles;  ///< cross-checks that ran and agreed
  std::map<std::string, double> timings_ms;
};

/// Names of the boolean flags, in report order.
const std::vector<std::string>& flag_names();
/// Value of a flag by name; wdim_infinite_certified reads as false unless
/// certified. Throws InvalidArgument for an unknown name.
bool flag_value(const PropertyReport& report, std::string_view name);

/// First violated implication among the hierarchy chain and the side
/// implications (total quotient ⇒ Prüfer, (CH) ⇒ strongly Prüfer ⇒ Prüfer).
std::optional<std::string> chain_violation(const PropertyReport& report);

/// Runs every decider. Throws InternalError on a chain violation or an oracle
/// disagreement; caps propagate.
PropertyReport classify_ring(const RingPtr& r, const Limits& limits = {});

}  // namespace pruferlab
