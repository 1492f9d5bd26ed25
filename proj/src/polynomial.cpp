#include "pruferlab/polynomial.hpp"

namespace pruferlab {

namespace {

void require_same_ring(const Polynomial& f, const Polynomial& g) {
  if (f.ring()->id() != g.ring()->id()) throw RingMismatch("polynomials over different rings combined");
}

std::uint64_t checked_power(std::uint64_t base, int exp, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (int k = 0; k < exp; ++k) {
    if (base != 0 && r > cap / base) return cap + 1;
    r *= base;
  }
  return r;
}

}  // namespace

Polynomial::Polynomial(RingPtr ring, std::vector<Index> coefficients)
    : ring_(std::move(ring)), coeffs_(std::move(coefficients)) {
  for (Index c : coeffs_)
    if (c >= ring_->order()) throw InvalidArgument("coefficient index " + std::to_string(c) + " out of range");
  while (!coeffs_.empty() && coeffs_.back() == ring_->zero()) coeffs_.pop_back();
}

std::string Polynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == ring_->zero()) continue;
    if (!out.empty()) out += " + ";
    out += ring_->label(coeffs_[k]);
    if (k == 1) out += "X";
    if (k > 1) out += "X^" + std::to_string(k);
  }
  return out;
}

Polynomial poly_add(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f, g);
  const auto& r = *f.ring();
  std::vector<Index> c(std::max(f.coefficients().size(), g.coefficients().size()));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = r.add(f.coefficient(k), g.coefficient(k));
  return Polynomial(f.ring(), std::move(c));
}

Polynomial poly_mul(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f, g);
  if (f.is_zero() || g.is_zero()) return Polynomial(f.ring(), {});
  const auto& r = *f.ring();
  const auto& a = f.coefficients();
  const auto& b = g.coefficients();
  std::vector<Index> c(a.size() + b.size() - 1, r.zero());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = r.add(c[i + j], r.mul(a[i], b[j]));
  return Polynomial(f.ring(), std::move(c));
}

Ideal content_ideal(const Polynomial& f) { return ideal_generated_by(f.ring(), f.coefficients()); }

bool content_identity_holds(const Polynomial& f, const Polynomial& g) {
  const auto lhs = content_ideal(poly_mul(f, g));
  const auto rhs = ideal_product(content_ideal(f), content_ideal(g));
  if (!lhs.is_subset_of(rhs))
    throw InternalError("C(fg) not contained in C(f)C(g) for f = " + f.to_string() + ", g = " + g.to_string());
  return lhs == rhs;
}

ContentScan content_equality_scan(const RingPtr& ring, int max_deg_f, int max_deg_g, const Limits& limits) {
  if (max_deg_f < 0 || max_deg_g < 0) throw InvalidArgument("degree bounds must be non-negative");
  const std::uint64_t n = ring->order();
  if (n > limits.scan_order) throw CapExceeded("content scan over " + ring->spec(), limits.scan_order);
  const std::uint64_t nf = checked_power(n, max_deg_f + 1, limits.scan_budget);
  const std::uint64_t ng = checked_power(n, max_deg_g + 1, limits.scan_budget);
  if (nf > limits.scan_budget || ng > limits.scan_budget || nf * ng > limits.scan_budget)
    throw CapExceeded("content scan pair count for degrees (" + std::to_string(max_deg_f) + ", " +
                          std::to_string(max_deg_g) + ")",
                      limits.scan_budget);

  IdealLattice lattice(ring, Limits{.enumeration_order = std::max<std::size_t>(n, 1)});
  const auto& r = *ring;
  const int df = max_deg_f + 1, dg = max_deg_g + 1;

  // Content ideal id of every polynomial code, built incrementally: the content
  // of code c is the sum of the content of c / n and (lowest digit).
  auto content_ids = [&](std::uint64_t count) {
    std::vector<std::uint32_t> ids(count);
    for (std::uint64_t c = 0; c < count; ++c) {
      const auto digit = static_cast<Index>(c % n);
      ids[c] = static_cast<std::uint32_t>(c < n ? lattice.principal_id(digit)
                                                : lattice.sum(ids[c / n], lattice.principal_id(digit)));
    }
    return ids;
  };
  const auto cf = content_ids(nf);
  const auto cg = dg == df ? cf : content_ids(ng);

  // Coefficient digits of every code, flattened.
  auto digit_table = [&](std::uint64_t count, int len) {
    std::vector<Index> t(count * static_cast<std::uint64_t>(len));
    for (std::uint64_t c = 0; c < count; ++c) {
      std::uint64_t code = c;
      for (int k = 0; k < len; ++k, code /= n) t[c * len + k] = static_cast<Index>(code % n);
    }
    return t;
  };
  const auto fdig = digit_table(nf, df);
  const auto gdig = dg == df ? fdig : digit_table(ng, dg);

  ContentScan scan;
  std::vector<Index> prod(static_cast<std::size_t>(df + dg - 1));
  const bool symmetric = df == dg;
  for (std::uint64_t fc = 0; fc < nf; ++fc) {
    const Index* a = &fdig[fc * df];
    for (std::uint64_t gc = symmetric ? fc : 0; gc < ng; ++gc) {
      ++scan.pairs_checked;
      const Index* b = &gdig[gc * dg];
      std::fill(prod.begin(), prod.end(), r.zero());
      for (int i = 0; i < df; ++i) {
        if (a[i] == r.zero()) continue;
        for (int j = 0; j < dg; ++j) prod[i + j] = r.add(prod[i + j], r.mul(a[i], b[j]));
      }
      std::size_t lhs = lattice.zero_id();
      for (Index c : prod) lhs = lattice.sum(lhs, lattice.principal_id(c));
      const std::size_t rhs = lattice.product(cf[fc], cg[gc]);
      if (lhs == rhs) continue;
      if (!lattice.subset(lhs, rhs))
        throw InternalError("C(fg) not contained in C(f)C(g) over " + ring->spec());
      scan.holds = false;
      scan.witness.emplace(Polynomial(ring, std::vector<Index>(a, a + df)),
                           Polynomial(ring, std::vector<Index>(b, b + dg)));
      return scan;
    }
  }
  return scan;
}

}  // namespace pruferlab
