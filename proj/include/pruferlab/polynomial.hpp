#pragma once

/**
 * @file polynomial.hpp
 * @brief Polynomials over a finite ring as coefficient vectors, content ideals
 * and the exhaustive content-multiplicativity scan used to cross-check the
 * Gaussian decider.
 */

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pruferlab/ideal.hpp"

namespace pruferlab {

/// Coefficients constant term first, trailing zeros trimmed; the zero
/// polynomial has no coefficients and degree -1.
class Polynomial {
 public:
  Polynomial(RingPtr ring, std::vector<Index> coefficients);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Index>& coefficients() const noexcept { return coeffs_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  Index coefficient(std::size_t k) const noexcept { return k < coeffs_.size() ? coeffs_[k] : ring_->zero(); }

  /// "a + bX + cX^2" with element labels, "0" for the zero polynomial.
  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.ring_->id() == b.ring_->id() && a.coeffs_ == b.coeffs_;
  }

 private:
  RingPtr ring_;
  std::vector<Index> coeffs_;
};

Polynomial poly_add(const Polynomial& f, const Polynomial& g);
Polynomial poly_mul(const Polynomial& f, const Polynomial& g);

/// C(f): the ideal generated by the coefficients of f.
Ideal content_ideal(const Polynomial& f);

/// C(fg) = C(f)C(g) for this pair. Throws InternalError if C(fg) ⊄ C(f)C(g).
bool content_identity_holds(const Polynomial& f, const Polynomial& g);

struct ContentScan {
  bool holds = true;
  std::optional<std::pair<Polynomial, Polynomial>> witness;  ///< first failing pair
  std::uint64_t pairs_checked = 0;
};

/// Every pair (f, g) with deg f <= max_deg_f and deg g <= max_deg_g, in
/// lexicographic order of coefficient vectors (constant term least
/// significant); returns the first pair with C(fg) != C(f)C(g). When the
/// degree bounds are equal only pairs with f <= g are visited, which keeps the
/// first witness unchanged because the identity is symmetric. Throws
/// CapExceeded when |R| > scan_order or the pair count exceeds scan_budget.
ContentScan content_equality_scan(const RingPtr& ring, int max_deg_f, int max_deg_g, const Limits& limits = {});

}  // namespace pruferlab
