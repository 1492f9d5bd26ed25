#include "pruferlab/ideal.hpp"

#include <algorithm>
#include <deque>

namespace pruferlab {

namespace {

void require_same_ring(const Ideal& i, const Ideal& j) {
  if (i.ring()->id() != j.ring()->id())
    throw RingMismatch("ideals of " + i.ring()->spec() + " and " + j.ring()->spec() + " combined");
}

/// Ideal generated by `gens`, keeping only the generators that enlarge it.
Ideal pruned(const RingPtr& r, const std::vector<Index>& gens) {
  ElementSet acc(r->order());
  acc.insert(r->zero());
  std::vector<Index> kept;
  for (Index g : gens) {
    if (acc.contains(g)) continue;
    acc = r->subgroup_sum(acc, r->principal(g));
    kept.push_back(g);
  }
  return Ideal(r, std::move(kept), std::move(acc));
}

/// Greedy generating set of an ideal given as an element set.
std::vector<Index> greedy_generators(const FiniteRing& r, const ElementSet& s) {
  ElementSet acc(r.order());
  acc.insert(r.zero());
  std::vector<Index> gens;
  // Prefer elements with large principal ideals so generator lists stay short.
  auto members = s.to_vector();
  std::stable_sort(members.begin(), members.end(),
                   [&](Index a, Index b) { return r.principal(a).count() > r.principal(b).count(); });
  for (Index g : members) {
    if (acc.contains(g)) continue;
    acc = r.subgroup_sum(acc, r.principal(g));
    gens.push_back(g);
    if (acc == s) break;
  }
  return gens;
}

}  // namespace

Ideal::Ideal(RingPtr ring, std::vector<Index> generators, ElementSet elements)
    : ring_(std::move(ring)), generators_(std::move(generators)), elements_(std::move(elements)) {}

Ideal Ideal::from_elements(const RingPtr& ring, const ElementSet& elements) {
  if (elements.universe() != ring->order()) throw InvalidArgument("element set has the wrong universe size");
  if (!elements.contains(ring->zero())) throw InvalidArgument("subset does not contain 0, not an ideal");
  const auto members = elements.to_vector();
  for (Index x : members) {
    if (!ring->principal(x).is_subset_of(elements))
      throw InvalidArgument("subset not closed under multiplication at " + ring->label(x));
    for (Index y : members)
      if (!elements.contains(ring->add(x, y)))
        throw InvalidArgument("subset not closed under addition at " + ring->label(x) + " + " + ring->label(y));
  }
  return Ideal(ring, greedy_generators(*ring, elements), elements);
}

bool Ideal::is_subset_of(const Ideal& other) const {
  require_same_ring(*this, other);
  return elements_.is_subset_of(other.elements_);
}

std::string Ideal::describe() const {
  std::string out = "(";
  if (generators_.empty()) out += ring_->label(ring_->zero());
  for (std::size_t k = 0; k < generators_.size(); ++k) {
    if (k) out += ", ";
    out += ring_->label(generators_[k]);
  }
  return out + ")";
}

std::string Ideal::describe_elements() const {
  std::string out = "{";
  bool first = true;
  elements_.for_each([&](Index x) {
    if (!first) out += ", ";
    first = false;
    out += ring_->label(x);
  });
  return out + "}";
}

Ideal ideal_generated_by(const RingPtr& ring, std::span<const Index> gens) {
  ElementSet acc(ring->order());
  acc.insert(ring->zero());
  for (Index g : gens) {
    if (g >= ring->order()) throw InvalidArgument("generator index " + std::to_string(g) + " out of range");
    if (!acc.contains(g)) acc = ring->subgroup_sum(acc, ring->principal(g));
  }
  return Ideal(ring, std::vector<Index>(gens.begin(), gens.end()), std::move(acc));
}

Ideal ideal_generated_by(const RingPtr& ring, std::initializer_list<Index> gens) {
  return ideal_generated_by(ring, std::span<const Index>(gens.begin(), gens.size()));
}

Ideal zero_ideal(const RingPtr& ring) {
  ElementSet s(ring->order());
  s.insert(ring->zero());
  return Ideal(ring, {}, std::move(s));
}

Ideal unit_ideal(const RingPtr& ring) { return Ideal(ring, {ring->one()}, ring->all()); }

std::vector<Ideal> enumerate_ideals(const RingPtr& ring, const Limits& limits) {
  if (ring->order() > limits.enumeration_order)
    throw CapExceeded("ideal enumeration of " + ring->spec() + " (order " + std::to_string(ring->order()) + ")",
                      limits.enumeration_order);
  struct Entry {
    ElementSet elements;
    std::vector<Index> gens;
  };
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> index;
  std::vector<Entry> found;
  std::deque<std::size_t> queue;
  auto add = [&](ElementSet s, std::vector<Index> gens) {
    if (index.contains(s)) return;
    index.emplace(s, found.size());
    queue.push_back(found.size());
    found.push_back(Entry{std::move(s), std::move(gens)});
  };

  std::vector<Index> principal_reps;
  for (Index a = 0; a < ring->order(); ++a) {
    if (index.contains(ring->principal(a))) continue;
    principal_reps.push_back(a);
    add(ring->principal(a), a == ring->zero() ? std::vector<Index>{} : std::vector<Index>{a});
  }
  while (!queue.empty()) {
    const std::size_t k = queue.front();
    queue.pop_front();
    for (Index a : principal_reps) {
      const ElementSet& p = ring->principal(a);
      if (p.is_subset_of(found[k].elements)) continue;
      ElementSet s = ring->subgroup_sum(found[k].elements, p);
      if (index.contains(s)) continue;
      auto gens = found[k].gens;
      gens.push_back(a);
      add(std::move(s), std::move(gens));
    }
  }

  std::sort(found.begin(), found.end(), [](const Entry& a, const Entry& b) {
    const auto ca = a.elements.count(), cb = b.elements.count();
    if (ca != cb) return ca < cb;
    return a.elements < b.elements;
  });
  std::vector<Ideal> out;
  out.reserve(found.size());
  for (auto& e : found) out.emplace_back(ring, std::move(e.gens), std::move(e.elements));
  return out;
}

Ideal ideal_sum(const Ideal& i, const Ideal& j) {
  require_same_ring(i, j);
  std::vector<Index> gens = i.generators();
  gens.insert(gens.end(), j.generators().begin(), j.generators().end());
  Ideal result = pruned(i.ring(), gens);
  return result;
}

Ideal ideal_product(const Ideal& i, const Ideal& j) {
  require_same_ring(i, j);
  const auto& r = i.ring();
  std::vector<Index> gens;
  for (Index a : i.generators())
    for (Index b : j.generators()) gens.push_back(r->mul(a, b));
  return pruned(r, gens);
}

Ideal ideal_intersection(const Ideal& i, const Ideal& j) {
  require_same_ring(i, j);
  const auto s = i.elements() & j.elements();
  return Ideal(i.ring(), greedy_generators(*i.ring(), s), s);
}

Ideal ideal_colon(const Ideal& i, const Ideal& j) {
  require_same_ring(i, j);
  const auto& r = i.ring();
  ElementSet s(r->order());
  for (Index x = 0; x < r->order(); ++x) {
    bool ok = true;
    for (Index g : j.generators())
      if (!i.contains(r->mul(x, g))) {
        ok = false;
        break;
      }
    if (ok) s.insert(x);
  }
  return Ideal(r, greedy_generators(*r, s), s);
}

Ideal annihilator(const Ideal& i) { return ideal_colon(zero_ideal(i.ring()), i); }

Ideal annihilator(const RingPtr& ring, Index a) { return annihilator(ideal_generated_by(ring, {a})); }

std::optional<Index> principal_generator(const Ideal& i) {
  const auto& r = *i.ring();
  const auto n = i.size();
  std::optional<Index> gen;
  i.elements().for_each([&](Index x) {
    if (!gen && r.principal(x).count() == n) gen = x;
  });
  return gen;
}

IdealPredicates ideal_predicates(const Ideal& i) {
  const auto& r = *i.ring();
  IdealPredicates p;
  p.generator = principal_generator(i);
  p.is_principal = p.generator.has_value();
  i.elements().for_each([&](Index x) {
    if (!p.regular_element && !r.is_zero_divisor(x)) p.regular_element = x;
  });
  p.is_regular = p.regular_element.has_value();
  p.is_dense = annihilator(i).is_zero();
  p.is_proper = !i.is_whole();
  return p;
}

InvertibilityCertificate is_invertible(const Ideal& i) {
  const auto whole = unit_ideal(i.ring());
  auto colon = ideal_colon(whole, i);
  auto product = ideal_product(i, colon);
  InvertibilityCertificate c{product.is_whole(), colon, product,
                             "fractional ideals of a finite ring are integral: every regular element is a unit, "
                             "so (R : I) is computed inside R"};
  return c;
}

Ideal image_in_factor(const Ideal& i, const LocalFactor& factor) {
  std::vector<Index> gens;
  for (Index g : i.generators()) gens.push_back(factor.projection[g]);
  ElementSet s(factor.ring->order());
  i.elements().for_each([&](Index x) { s.insert(factor.projection[x]); });
  return Ideal(factor.ring, std::move(gens), std::move(s));
}

LocalPrincipality is_locally_principal(const Ideal& i, std::span<const LocalFactor> factors) {
  LocalPrincipality lp;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    auto g = principal_generator(image_in_factor(i, factors[k]));
    lp.generators.push_back(g);
    if (!g && lp.locally_principal) {
      lp.locally_principal = false;
      lp.failing_factor = k;
    }
  }
  return lp;
}

LocalPrincipality is_locally_principal(const Ideal& i) {
  const auto factors = local_decomposition(i.ring());
  return is_locally_principal(i, factors);
}

MaximalIdeals maximal_ideals_and_locality(const RingPtr& ring) {
  MaximalIdeals m;
  for (const auto& s : ring->maximal_ideals()) m.ideals.push_back(Ideal::from_elements(ring, s));
  m.is_local = m.ideals.size() == 1;
  return m;
}

Ideal nilradical(const RingPtr& ring) { return Ideal::from_elements(ring, ring->nilpotents()); }

IdealLattice::IdealLattice(RingPtr ring, const Limits& limits)
    : ring_(std::move(ring)), ideals_(enumerate_ideals(ring_, limits)) {
  for (std::size_t k = 0; k < ideals_.size(); ++k) lookup_.emplace(ideals_[k].elements(), k);
  principal_.resize(ring_->order());
  for (Index a = 0; a < ring_->order(); ++a) principal_[a] = lookup_.at(ring_->principal(a));
  sum_memo_.assign(ideals_.size() * ideals_.size(), -1);
  product_memo_.assign(ideals_.size() * ideals_.size(), -1);
}

std::size_t IdealLattice::id_of(const ElementSet& s) const {
  auto it = lookup_.find(s);
  if (it == lookup_.end()) throw InvalidArgument("element set is not an ideal of " + ring_->spec());
  return it->second;
}

std::size_t IdealLattice::sum(std::size_t i, std::size_t j) {
  auto& slot = sum_memo_[i * ideals_.size() + j];
  if (slot < 0) {
    slot = static_cast<std::int32_t>(id_of(ring_->subgroup_sum(ideals_[i].elements(), ideals_[j].elements())));
    sum_memo_[j * ideals_.size() + i] = slot;
  }
  return static_cast<std::size_t>(slot);
}

std::size_t IdealLattice::product(std::size_t i, std::size_t j) {
  auto& slot = product_memo_[i * ideals_.size() + j];
  if (slot < 0) {
    slot = static_cast<std::int32_t>(id_of(ideal_product(ideals_[i], ideals_[j])));
    product_memo_[j * ideals_.size() + i] = slot;
  }
  return static_cast<std::size_t>(slot);
}

}  // namespace pruferlab
