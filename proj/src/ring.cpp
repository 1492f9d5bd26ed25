#include "pruferlab/ring.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <sstream>

#include "pruferlab/ideal.hpp"
#include "pruferlab/module.hpp"

namespace pruferlab {

namespace {

std::atomic<std::uint64_t> next_ring_id{1};

void check_order(std::uint64_t order, const Limits& limits, const char* what) {
  if (order > limits.construction_order)
    throw CapExceeded(std::string(what) + " of order " + std::to_string(order) + " exceeds construction limit",
                      limits.construction_order);
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (k) out += sep;
    out += parts[k];
  }
  return out;
}

std::string poly_label(const std::vector<std::uint64_t>& c) {
  std::vector<std::string> terms;
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k] == 0) continue;
    std::string coef = c[k] == 1 && k > 0 ? "" : std::to_string(c[k]);
    if (k == 0)
      terms.push_back(coef);
    else if (k == 1)
      terms.push_back(coef + "t");
    else
      terms.push_back(coef + "t^" + std::to_string(k));
  }
  return terms.empty() ? "0" : join(terms, "+");
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FiniteRing::FiniteRing(RingData data)
    : id_(next_ring_id.fetch_add(1)),
      order_(data.order),
      add_(std::move(data.add)),
      mul_(std::move(data.mul)),
      zero_(data.zero),
      one_(data.one),
      labels_(std::move(data.labels)),
      spec_(std::move(data.spec)),
      construction_(std::move(data.construction)) {
  if (order_ == 0) throw InvalidArgument("ring order must be positive");
  if (add_.size() != order_ * order_ || mul_.size() != order_ * order_)
    throw InvalidArgument("ring tables must be order x order");
  if (zero_ >= order_ || one_ >= order_) throw InvalidArgument("zero/one index out of range");
  if (labels_.size() != order_) {
    labels_.resize(order_);
    for (std::size_t k = 0; k < order_; ++k) labels_[k] = std::to_string(k);
  }
  compute_structure();
}

void FiniteRing::compute_structure() {
  const auto n = order_;
  neg_.assign(n, 0);
  inverse_.assign(n, 0);
  all_ = ElementSet(n);
  units_ = ElementSet(n);
  zero_divisors_ = ElementSet(n);
  nilpotents_ = ElementSet(n);
  idempotents_ = ElementSet(n);
  principal_.assign(n, ElementSet(n));

  for (Index a = 0; a < n; ++a) {
    all_.insert(a);
    for (Index b = 0; b < n; ++b) {
      if (add(a, b) == zero_) neg_[a] = b;
      const Index p = mul(a, b);
      if (p == one_) {
        units_.insert(a);
        inverse_[a] = b;
      }
      if (p == zero_ && b != zero_) zero_divisors_.insert(a);
      principal_[a].insert(p);
    }
    if (mul(a, a) == a) idempotents_.insert(a);
    Index x = a;
    for (std::size_t k = 0; k <= n; ++k) {
      if (x == zero_) {
        nilpotents_.insert(a);
        break;
      }
      x = mul(x, a);
    }
  }

  characteristic_ = 1;
  for (Index x = one_; x != zero_; x = add(x, one_)) ++characteristic_;

  // Atoms of the Boolean algebra of idempotents.
  primitive_.clear();
  idempotents_.for_each([&](Index e) {
    if (e == zero_) return;
    bool minimal = true;
    idempotents_.for_each([&](Index f) {
      if (f != zero_ && f != e && mul(f, e) == f) minimal = false;
    });
    if (minimal) primitive_.push_back(e);
  });

  // In the local factor eR the non-units are exactly the nilpotents.
  maximal_.clear();
  for (Index e : primitive_) {
    ElementSet m(n);
    for (Index x = 0; x < n; ++x)
      if (nilpotents_.contains(mul(e, x))) m.insert(x);
    maximal_.push_back(std::move(m));
  }
}

Index FiniteRing::pow(Index a, std::uint64_t k) const noexcept {
  Index result = one_;
  Index base = a;
  while (k) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

Index FiniteRing::integer(std::uint64_t k) const noexcept {
  k %= characteristic_;
  Index x = zero_;
  for (std::uint64_t j = 0; j < k; ++j) x = add(x, one_);
  return x;
}

Element FiniteRing::element(Index i) const {
  if (i >= order_) throw InvalidArgument("element index " + std::to_string(i) + " out of range for " + spec_);
  return Element{id_, i};
}

Index FiniteRing::index_of(const Element& e) const {
  if (e.ring_id != id_) throw RingMismatch("element belongs to a different ring than " + spec_);
  if (e.index >= order_) throw InvalidArgument("element index out of range");
  return e.index;
}

ElementSet FiniteRing::subgroup_sum(const ElementSet& a, const ElementSet& b) const {
  ElementSet result = a;
  const auto a_elems = a.to_vector();
  b.for_each([&](Index y) {
    if (result.contains(y)) return;
    for (Index x : a_elems) result.insert(add(x, y));
  });
  return result;
}

ElementSet FiniteRing::additive_span(std::span<const Index> gens) const {
  ElementSet result(order_);
  result.insert(zero_);
  for (Index g : gens) {
    if (result.contains(g)) continue;
    ElementSet cyclic(order_);
    Index x = zero_;
    do {
      cyclic.insert(x);
      x = add(x, g);
    } while (x != zero_);
    result = subgroup_sum(result, cyclic);
  }
  return result;
}

RingPtr make_cyclic_ring(std::uint64_t n, const Limits& limits) {
  if (n == 0) throw InvalidArgument("Z/n requires n >= 1");
  check_order(n, limits, "Z/n");
  RingData d;
  d.order = n;
  d.add.resize(n * n);
  d.mul.resize(n * n);
  for (std::uint64_t a = 0; a < n; ++a)
    for (std::uint64_t b = 0; b < n; ++b) {
      d.add[a * n + b] = static_cast<Index>((a + b) % n);
      d.mul[a * n + b] = static_cast<Index>((a * b) % n);
    }
  d.zero = 0;
  d.one = static_cast<Index>(1 % n);
  d.labels.resize(n);
  for (std::uint64_t a = 0; a < n; ++a) d.labels[a] = std::to_string(a);
  d.spec = "Z/" + std::to_string(n);
  d.construction.kind = ConstructionKind::Cyclic;
  d.construction.modulus = n;
  return std::make_shared<const FiniteRing>(std::move(d));
}

namespace {

RingData poly_quotient_data(std::uint64_t p, std::span<const std::uint64_t> modulus, const Limits& limits) {
  if (!is_prime(p)) throw InvalidArgument("PolyQ requires a prime characteristic, got " + std::to_string(p));
  std::vector<std::uint64_t> m(modulus.begin(), modulus.end());
  for (auto& c : m) c %= p;
  while (!m.empty() && m.back() == 0) m.pop_back();
  if (m.size() < 2) throw InvalidArgument("PolyQ modulus must have degree >= 1");
  if (m.back() != 1) throw InvalidArgument("PolyQ modulus must be monic");
  const std::size_t deg = m.size() - 1;

  std::uint64_t order = 1;
  for (std::size_t k = 0; k < deg; ++k) {
    order *= p;
    check_order(order, limits, "PolyQ");
  }

  auto decode = [&](std::uint64_t x) {
    std::vector<std::uint64_t> c(deg);
    for (std::size_t k = 0; k < deg; ++k, x /= p) c[k] = x % p;
    return c;
  };
  auto encode = [&](const std::vector<std::uint64_t>& c) {
    std::uint64_t x = 0;
    for (std::size_t k = deg; k-- > 0;) x = x * p + c[k];
    return static_cast<Index>(x);
  };

  RingData d;
  d.order = order;
  d.add.resize(order * order);
  d.mul.resize(order * order);
  d.labels.resize(order);
  std::vector<std::vector<std::uint64_t>> digits(order);
  for (std::uint64_t x = 0; x < order; ++x) {
    digits[x] = decode(x);
    d.labels[x] = poly_label(digits[x]);
  }
  std::vector<std::uint64_t> prod(2 * deg);
  for (std::uint64_t a = 0; a < order; ++a)
    for (std::uint64_t b = 0; b < order; ++b) {
      const auto& ca = digits[a];
      const auto& cb = digits[b];
      std::vector<std::uint64_t> s(deg);
      for (std::size_t k = 0; k < deg; ++k) s[k] = (ca[k] + cb[k]) % p;
      d.add[a * order + b] = encode(s);

      std::fill(prod.begin(), prod.end(), 0);
      for (std::size_t i = 0; i < deg; ++i)
        for (std::size_t j = 0; j < deg; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p;
      for (std::size_t k = 2 * deg - 1; k-- > deg;) {
        const std::uint64_t c = prod[k];
        if (!c) continue;
        for (std::size_t i = 0; i <= deg; ++i) prod[k - deg + i] = (prod[k - deg + i] + (p - c) * m[i]) % p;
      }
      std::vector<std::uint64_t> r(prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(deg));
      d.mul[a * order + b] = encode(r);
    }
  d.zero = 0;
  d.one = 1 % static_cast<Index>(order);
  std::string spec = "PolyQ(" + std::to_string(p);
  for (auto c : m) spec += ", " + std::to_string(c);
  d.spec = spec + ")";
  d.construction.kind = ConstructionKind::PolyQuotient;
  d.construction.modulus = p;
  for (auto c : m) d.construction.coefficients.push_back(static_cast<Index>(c));
  return d;
}

}  // namespace

RingPtr make_poly_quotient_ring(std::uint64_t p, std::span<const std::uint64_t> modulus, const Limits& limits) {
  return std::make_shared<const FiniteRing>(poly_quotient_data(p, modulus, limits));
}

std::optional<std::pair<std::uint64_t, std::vector<std::uint64_t>>> galois_field_modulus(std::uint64_t q) {
  // Irreducible moduli, constant term first.
  static const std::map<std::uint64_t, std::pair<std::uint64_t, std::vector<std::uint64_t>>> table{
      {4, {2, {1, 1, 1}}},          {8, {2, {1, 1, 0, 1}}},       {16, {2, {1, 1, 0, 0, 1}}},
      {32, {2, {1, 0, 1, 0, 0, 1}}}, {64, {2, {1, 1, 0, 1, 1, 0, 1}}}, {9, {3, {2, 2, 1}}},
      {27, {3, {1, 2, 0, 1}}},      {25, {5, {2, 4, 1}}},         {49, {7, {3, 6, 1}}},
  };
  if (auto it = table.find(q); it != table.end()) return it->second;
  if (is_prime(q)) return std::pair<std::uint64_t, std::vector<std::uint64_t>>{q, {0, 1}};
  return std::nullopt;
}

RingPtr make_galois_field(std::uint64_t q, const Limits& limits) {
  const auto m = galois_field_modulus(q);
  if (!m) throw InvalidArgument("GF(" + std::to_string(q) + "): no field of this order in the modulus table");
  auto d = poly_quotient_data(m->first, m->second, limits);
  d.spec = "GF(" + std::to_string(q) + ")";
  return std::make_shared<const FiniteRing>(std::move(d));
}

RingPtr make_product_ring(const RingPtr& a, const RingPtr& b, const Limits& limits) {
  const std::size_t na = a->order(), nb = b->order(), n = na * nb;
  check_order(n, limits, "product ring");
  RingData d;
  d.order = n;
  d.add.resize(n * n);
  d.mul.resize(n * n);
  d.labels.resize(n);
  for (Index x = 0; x < n; ++x) {
    const Index xa = x / nb, xb = x % nb;
    d.labels[x] = "(" + a->label(xa) + "," + b->label(xb) + ")";
    for (Index y = 0; y < n; ++y) {
      const Index ya = y / nb, yb = y % nb;
      d.add[x * n + y] = static_cast<Index>(a->add(xa, ya) * nb + b->add(xb, yb));
      d.mul[x * n + y] = static_cast<Index>(a->mul(xa, ya) * nb + b->mul(xb, yb));
    }
  }
  d.zero = static_cast<Index>(a->zero() * nb + b->zero());
  d.one = static_cast<Index>(a->one() * nb + b->one());
  d.spec = "Prod(" + a->spec() + ", " + b->spec() + ")";
  d.construction.kind = ConstructionKind::Product;
  d.construction.children = {a, b};
  return std::make_shared<const FiniteRing>(std::move(d));
}

QuotientRing make_quotient_ring(const RingPtr& a, const Ideal& ideal) {
  if (ideal.ring()->id() != a->id()) throw RingMismatch("quotient ideal does not belong to " + a->spec());
  const std::size_t na = a->order();
  constexpr Index unset = ~Index{0};
  std::vector<Index> surj(na, unset);
  std::vector<Index> reps;
  const auto members = ideal.elements().to_vector();
  for (Index x = 0; x < na; ++x) {
    if (surj[x] != unset) continue;
    const auto c = static_cast<Index>(reps.size());
    reps.push_back(x);
    for (Index i : members) surj[a->add(x, i)] = c;
  }
  const std::size_t n = reps.size();
  RingData d;
  d.order = n;
  d.add.resize(n * n);
  d.mul.resize(n * n);
  d.labels.resize(n);
  for (Index x = 0; x < n; ++x) {
    d.labels[x] = "[" + a->label(reps[x]) + "]";
    for (Index y = 0; y < n; ++y) {
      d.add[x * n + y] = surj[a->add(reps[x], reps[y])];
      d.mul[x * n + y] = surj[a->mul(reps[x], reps[y])];
    }
  }
  d.zero = surj[a->zero()];
  d.one = surj[a->one()];
  std::string spec = "Quot(" + a->spec();
  for (Index g : ideal.generators()) spec += ", " + std::to_string(g);
  d.spec = spec + ")";
  d.construction.kind = ConstructionKind::Quotient;
  d.construction.children = {a};
  d.construction.coefficients = ideal.generators();
  return QuotientRing{std::make_shared<const FiniteRing>(std::move(d)), std::move(surj)};
}

RingPtr make_trivial_extension(const RingPtr& a, const ModulePtr& e, const Limits& limits) {
  if (e->base()->id() != a->id())
    throw RingMismatch("module " + e->spec() + " is not a module over " + a->spec());
  const std::size_t na = a->order(), ne = e->order(), n = na * ne;
  check_order(n, limits, "trivial extension");
  RingData d;
  d.order = n;
  d.add.resize(n * n);
  d.mul.resize(n * n);
  d.labels.resize(n);
  for (Index x = 0; x < n; ++x) {
    const Index xa = x / ne, xe = x % ne;
    d.labels[x] = "(" + a->label(xa) + "," + e->label(xe) + ")";
    for (Index y = 0; y < n; ++y) {
      const Index ya = y / ne, ye = y % ne;
      d.add[x * n + y] = static_cast<Index>(a->add(xa, ya) * ne + e->add(xe, ye));
      // (a,e)(a',e') = (aa', ae' + a'e)
      d.mul[x * n + y] = static_cast<Index>(a->mul(xa, ya) * ne + e->add(e->act(xa, ye), e->act(ya, xe)));
    }
  }
  d.zero = static_cast<Index>(a->zero() * ne);
  d.one = static_cast<Index>(a->one() * ne);
  d.spec = "Triv(" + a->spec() + ", " + e->spec() + ")";
  d.construction.kind = ConstructionKind::TrivialExtension;
  d.construction.children = {a};
  d.construction.module = e;
  return std::make_shared<const FiniteRing>(std::move(d));
}

RingPtr make_corner_ring(const RingPtr& r, Index e) {
  if (!r->is_idempotent(e)) throw InvalidArgument("corner ring requires an idempotent");
  const auto members = r->principal(e).to_vector();  // eR, sorted
  const std::size_t n = members.size();
  std::vector<Index> pos(r->order(), 0);
  for (Index k = 0; k < n; ++k) pos[members[k]] = k;
  RingData d;
  d.order = n;
  d.add.resize(n * n);
  d.mul.resize(n * n);
  d.labels.resize(n);
  for (Index x = 0; x < n; ++x) {
    d.labels[x] = r->label(members[x]);
    for (Index y = 0; y < n; ++y) {
      d.add[x * n + y] = pos[r->add(members[x], members[y])];
      d.mul[x * n + y] = pos[r->mul(members[x], members[y])];
    }
  }
  d.zero = pos[r->zero()];
  d.one = pos[e];
  d.spec = "Corner(" + r->spec() + ", " + std::to_string(e) + ")";
  d.construction.kind = ConstructionKind::Corner;
  d.construction.children = {r};
  d.construction.coefficients = {e};
  return std::make_shared<const FiniteRing>(std::move(d));
}

ElementClassification element_classification(const FiniteRing& r) {
  ElementClassification c;
  c.units = r.units();
  c.zero_divisors = r.zero_divisors();
  c.regular = ElementSet(r.order());
  for (Index a = 0; a < r.order(); ++a)
    if (!r.is_zero_divisor(a)) c.regular.insert(a);
  c.nilradical = r.nilpotents();
  c.idempotents = r.idempotents();
  if (!c.regular.is_subset_of(c.units))
    throw InternalError("regular non-unit found in finite ring " + r.spec());
  if (c.units.intersects(c.zero_divisors)) throw InternalError("unit that is a zero divisor in " + r.spec());
  return c;
}

namespace {

void split(const RingPtr& ring, const std::vector<Index>& proj, const std::vector<Index>& embed,
           std::vector<LocalFactor>& out) {
  Index e = ring->order();
  ring->idempotents().for_each([&](Index x) {
    if (e == ring->order() && x != ring->zero() && x != ring->one()) e = x;
  });
  if (e == ring->order()) {
    out.push_back(LocalFactor{ring, embed[ring->one()], proj, embed});
    return;
  }
  for (Index f : {e, ring->sub(ring->one(), e)}) {
    auto corner = make_corner_ring(ring, f);
    const auto members = ring->principal(f).to_vector();
    std::vector<Index> pos(ring->order(), 0);
    for (Index k = 0; k < members.size(); ++k) pos[members[k]] = k;
    std::vector<Index> sub_proj(proj.size());
    for (std::size_t x = 0; x < proj.size(); ++x) sub_proj[x] = pos[ring->mul(f, proj[x])];
    std::vector<Index> sub_embed(members.size());
    for (std::size_t k = 0; k < members.size(); ++k) sub_embed[k] = embed[members[k]];
    split(corner, sub_proj, sub_embed, out);
  }
}

}  // namespace

std::vector<LocalFactor> local_decomposition(const RingPtr& r) {
  std::vector<LocalFactor> out;
  if (r->is_zero_ring()) return out;
  std::vector<Index> identity(r->order());
  for (Index x = 0; x < r->order(); ++x) identity[x] = x;
  split(r, identity, identity, out);
  std::sort(out.begin(), out.end(),
            [](const LocalFactor& a, const LocalFactor& b) { return a.idempotent < b.idempotent; });

  std::uint64_t prod = 1;
  for (const auto& f : out) prod *= f.ring->order();
  if (prod != r->order()) throw InternalError("local factor orders do not multiply to |R| for " + r->spec());
  std::map<std::vector<Index>, Index> seen;
  for (Index x = 0; x < r->order(); ++x) {
    std::vector<Index> key;
    for (const auto& f : out) key.push_back(f.projection[x]);
    if (!seen.emplace(std::move(key), x).second)
      throw InternalError("local decomposition is not injective for " + r->spec());
  }
  return out;
}

std::optional<std::string> check_ring_axioms(const FiniteRing& r) {
  const auto n = static_cast<Index>(r.order());
  auto fail = [&](const std::string& what, Index a, Index b, Index c) {
    std::ostringstream os;
    os << what << " fails at (" << r.label(a) << ", " << r.label(b) << ", " << r.label(c) << ")";
    return os.str();
  };
  if (n > 1 && r.zero() == r.one()) return std::string("zero equals one in a ring of order > 1");
  for (Index a = 0; a < n; ++a) {
    if (r.add(a, r.zero()) != a) return fail("additive identity", a, 0, 0);
    if (r.mul(a, r.one()) != a) return fail("multiplicative identity", a, 0, 0);
    if (r.add(a, r.neg(a)) != r.zero()) return fail("additive inverse", a, 0, 0);
    for (Index b = 0; b < n; ++b) {
      if (r.add(a, b) != r.add(b, a)) return fail("additive commutativity", a, b, 0);
      if (r.mul(a, b) != r.mul(b, a)) return fail("multiplicative commutativity", a, b, 0);
      for (Index c = 0; c < n; ++c) {
        if (r.add(r.add(a, b), c) != r.add(a, r.add(b, c))) return fail("additive associativity", a, b, c);
        if (r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c))) return fail("multiplicative associativity", a, b, c);
        if (r.mul(a, r.add(b, c)) != r.add(r.mul(a, b), r.mul(a, c))) return fail("distributivity", a, b, c);
      }
    }
  }
  return std::nullopt;
}

}  // namespace pruferlab
