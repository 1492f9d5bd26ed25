#include "pruferlab/homology.hpp"

#include <numeric>
#include <sstream>

namespace pruferlab {

namespace {

/// Polycyclic decomposition of a finite abelian group on indices [0, n), then
/// Smith normal form of its s x s relation matrix.
template <typename Add>
GroupDecomposition decompose(std::size_t n, Index zero, Add add) {
  std::vector<std::vector<std::int64_t>> raw(n);
  std::vector<char> in_h(n, 0);
  std::vector<Index> members{zero};
  in_h[zero] = 1;
  std::vector<Index> gens;
  std::vector<std::vector<std::int64_t>> relations;

  for (Index x = 0; x < n && members.size() < n; ++x) {
    if (in_h[x]) continue;
    const std::size_t col = gens.size();
    std::int64_t m = 1;
    Index y = x;
    while (!in_h[y]) {
      y = add(y, x);
      ++m;
    }
    // m·x = y ∈ H
    std::vector<std::int64_t> rel = raw[y];
    for (auto& c : rel) c = -c;
    rel.resize(col + 1, 0);
    rel[col] = m;
    relations.push_back(std::move(rel));

    const std::size_t old = members.size();
    Index kx = x;
    for (std::int64_t k = 1; k < m; ++k, kx = add(kx, x))
      for (std::size_t h = 0; h < old; ++h) {
        const Index z = add(members[h], kx);
        raw[z] = raw[members[h]];
        raw[z].resize(col + 1, 0);
        raw[z][col] = k;
        in_h[z] = 1;
        members.push_back(z);
      }
    gens.push_back(x);
  }

  const auto s = static_cast<Eigen::Index>(gens.size());
  IntMatrix k = IntMatrix::Zero(s, s);
  for (Eigen::Index i = 0; i < s; ++i)
    for (std::size_t j = 0; j < relations[i].size(); ++j) k(i, static_cast<Eigen::Index>(j)) = relations[i][j];
  const auto snf = smith_normal_form(k);

  GroupDecomposition g;
  std::vector<Eigen::Index> keep;
  for (Eigen::Index j = 0; j < s; ++j)
    if (snf.D(j, j) > 1) {
      keep.push_back(j);
      g.invariant_factors.push_back(snf.D(j, j));
    }
  g.coordinates.resize(n);
  for (Index x = 0; x < n; ++x) {
    auto c = raw[x];
    c.resize(static_cast<std::size_t>(s), 0);
    for (Eigen::Index j : keep) {
      std::int64_t v = 0;
      for (Eigen::Index i = 0; i < s; ++i) v = detail::checked_add(v, detail::checked_mul(c[i], snf.V(i, j)));
      const std::int64_t d = snf.D(j, j);
      g.coordinates[x].push_back(((v % d) + d) % d);
    }
  }
  g.generators.assign(keep.size(), zero);
  for (std::size_t j = 0; j < keep.size(); ++j)
    for (Index x = 0; x < n; ++x) {
      const auto& c = g.coordinates[x];
      bool unit = true;
      for (std::size_t i = 0; i < c.size(); ++i) unit &= c[i] == (i == j ? 1 : 0);
      if (unit) {
        g.generators[j] = x;
        break;
      }
    }
  return g;
}

ModulePtr ideal_module_unchecked(const Ideal& ideal) {
  const auto& a = ideal.ring();
  const auto members = ideal.elements().to_vector();
  const std::size_t n = members.size(), na = a->order();
  std::vector<Index> pos(na, 0);
  for (Index k = 0; k < n; ++k) pos[members[k]] = k;
  ModuleData d;
  d.base = a;
  d.order = n;
  d.add.resize(n * n);
  d.action.resize(na * n);
  for (Index x = 0; x < n; ++x) {
    d.labels.push_back(a->label(members[x]));
    for (Index y = 0; y < n; ++y) d.add[x * n + y] = pos[a->add(members[x], members[y])];
  }
  for (Index r = 0; r < na; ++r)
    for (Index x = 0; x < n; ++x) d.action[r * n + x] = pos[a->mul(r, members[x])];
  d.spec = "IdealMod";
  d.kind = ModuleKind::Ideal;
  return std::make_shared<const FiniteModule>(std::move(d));
}

PresentedModule tensor_impl(const RingPtr& base, const GroupDecomposition& ring_group, const FiniteModule& m,
                            const GroupDecomposition& gm, const FiniteModule& n, const GroupDecomposition& gn) {
  PresentedModule out;
  out.base = base;
  const std::size_t s = gm.rank(), t = gn.rank();
  out.generator_count = s * t;
  if (s == 0 || t == 0) {
    out.relations = IntMatrix::Zero(0, 0);
    return out;
  }
  const std::size_t cols = s * t;
  const std::size_t rows = 2 * cols + ring_group.generators.size() * cols;
  IntMatrix rel = IntMatrix::Zero(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  auto col = [t](std::size_t i, std::size_t j) { return static_cast<Eigen::Index>(i * t + j); };
  Eigen::Index row = 0;
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < t; ++j) {
      rel(row++, col(i, j)) = gm.invariant_factors[i];
      rel(row++, col(i, j)) = gn.invariant_factors[j];
    }
  for (Index r : ring_group.generators)
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t j = 0; j < t; ++j) {
        // (r·m_i) ⊗ n_j − m_i ⊗ (r·n_j)
        const auto& cm = gm.coordinates[m.act(r, gm.generators[i])];
        const auto& cn = gn.coordinates[n.act(r, gn.generators[j])];
        for (std::size_t ii = 0; ii < s; ++ii) rel(row, col(ii, j)) += cm[ii];
        for (std::size_t jj = 0; jj < t; ++jj) rel(row, col(i, jj)) -= cn[jj];
        ++row;
      }
  const auto snf = smith_normal_form(rel);
  if (snf.rank() != static_cast<Eigen::Index>(cols)) throw InternalError("tensor presentation is not of finite order");
  for (auto d : snf.diagonal())
    if (d > 1) out.invariant_factors.push_back(d);
  out.relations = std::move(rel);
  return out;
}

/// R^rank with elements encoded as base-|R| integers.
class FreeSpace {
 public:
  FreeSpace(const FiniteRing& r, std::size_t rank) : r_(&r), rank_(rank), size_(1) {
    for (std::size_t k = 0; k < rank; ++k) size_ *= r.order();
  }
  std::size_t rank() const noexcept { return rank_; }
  std::size_t size() const noexcept { return size_; }

  Index add(Index x, Index y) const noexcept {
    const Index n = static_cast<Index>(r_->order());
    Index out = 0, scale = 1;
    for (std::size_t k = 0; k < rank_; ++k, x /= n, y /= n, scale *= n) out += r_->add(x % n, y % n) * scale;
    return out;
  }
  Index act(Index a, Index x) const noexcept {
    const Index n = static_cast<Index>(r_->order());
    Index out = 0, scale = 1;
    for (std::size_t k = 0; k < rank_; ++k, x /= n, scale *= n) out += r_->mul(a, x % n) * scale;
    return out;
  }
  Index digit(Index x, std::size_t k) const noexcept {
    const Index n = static_cast<Index>(r_->order());
    for (std::size_t j = 0; j < k; ++j) x /= n;
    return x % n;
  }

  ElementSet cyclic(Index g) const {
    ElementSet s(size_);
    for (Index a = 0; a < r_->order(); ++a) s.insert(act(a, g));
    return s;
  }
  ElementSet sum(const ElementSet& a, const ElementSet& b) const {
    ElementSet result = a;
    const auto a_elems = a.to_vector();
    b.for_each([&](Index y) {
      if (result.contains(y)) return;
      for (Index x : a_elems) result.insert(add(x, y));
    });
    return result;
  }
  ElementSet span(std::span<const Index> gens) const {
    ElementSet s(size_);
    s.insert(0);
    for (Index g : gens)
      if (!s.contains(g)) s = sum(s, cyclic(g));
    return s;
  }
  std::vector<Index> greedy_generators(const ElementSet& target) const {
    ElementSet acc(size_);
    acc.insert(0);
    std::vector<Index> gens;
    target.for_each([&](Index x) {
      if (acc.contains(x)) return;
      acc = sum(acc, cyclic(x));
      gens.push_back(x);
    });
    return gens;
  }

 private:
  const FiniteRing* r_;
  std::size_t rank_;
  std::size_t size_;
};

struct Syzygy {
  FreeSpace space;
  ElementSet members;
  std::vector<Index> minimal_generators;
  ElementSet outside_mx;  ///< members not in M·X
  std::vector<std::int64_t> group_invariants;
  std::vector<Index> kernel_generators;  ///< generators of ker(R^μ -> X), filled once computed
};

Syzygy make_syzygy(const std::vector<Index>& max_gens, FreeSpace space, ElementSet members) {
  Syzygy s{space, std::move(members), {}, ElementSet(space.size()), {}, {}};
  const auto gens = s.space.greedy_generators(s.members);
  std::vector<Index> products;
  for (Index m : max_gens)
    for (Index g : gens) products.push_back(s.space.act(m, g));
  const ElementSet mx = s.space.span(products);
  ElementSet acc = mx;
  for (Index g : gens) {
    if (acc.contains(g)) continue;
    acc = s.space.sum(acc, s.space.cyclic(g));
    s.minimal_generators.push_back(g);
  }
  s.members.for_each([&](Index x) {
    if (!mx.contains(x)) s.outside_mx.insert(x);
  });
  const auto elems = s.members.to_vector();
  std::vector<Index> pos(s.space.size(), 0);
  for (Index k = 0; k < elems.size(); ++k) pos[elems[k]] = k;
  const auto& sp = s.space;
  s.group_invariants = decompose(elems.size(), pos[0], [&](Index a, Index b) { return pos[sp.add(elems[a], elems[b])]; })
                           .invariant_factors;
  return s;
}

/// ker(R^μ -> X), (r_1..r_μ) ↦ Σ r_i g_i.
ElementSet kernel_of(const Syzygy& x, const FreeSpace& domain) {
  ElementSet k(domain.size());
  const std::size_t mu = x.minimal_generators.size();
  for (Index code = 0; code < domain.size(); ++code) {
    Index acc = 0;
    for (std::size_t i = 0; i < mu; ++i) acc = x.space.add(acc, x.space.act(domain.digit(code, i), x.minimal_generators[i]));
    if (acc == 0) k.insert(code);
  }
  return k;
}

enum class IsoAnswer { Yes, No, Unknown };

/// Is `a` isomorphic to `b`? `a.kernel_generators` must be known. Any
/// isomorphism sends a minimal generating set of a to one of b, i.e. to
/// elements outside M·b; the induced map R^μ -> b must kill ker(R^μ -> a) and
/// be onto, which for equal orders makes it bijective.
IsoAnswer isomorphic(const FiniteRing& r, const Syzygy& a, const Syzygy& b, std::uint64_t budget = 1u << 20) {
  if (a.members.count() != b.members.count() || a.minimal_generators.size() != b.minimal_generators.size() ||
      a.group_invariants != b.group_invariants)
    return IsoAnswer::No;
  const std::size_t mu = a.minimal_generators.size();
  if (mu == 0) return IsoAnswer::Yes;
  if (a.members.count() > 64) return IsoAnswer::Unknown;
  const auto candidates = b.outside_mx.to_vector();
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < mu; ++k) {
    total *= candidates.size();
    if (total > budget) return IsoAnswer::Unknown;
  }
  const FreeSpace domain(r, mu);
  const std::size_t target = b.members.count();
  std::vector<std::size_t> choice(mu, 0);
  std::vector<Index> images(mu);
  for (std::uint64_t trial = 0; trial < total; ++trial) {
    for (std::size_t i = 0; i < mu; ++i) images[i] = candidates[choice[i]];
    bool ok = true;
    for (Index k : a.kernel_generators) {
      Index acc = 0;
      for (std::size_t i = 0; i < mu; ++i) acc = b.space.add(acc, b.space.act(domain.digit(k, i), images[i]));
      if (acc != 0) {
        ok = false;
        break;
      }
    }
    if (ok && b.space.span(images).count() == target) return IsoAnswer::Yes;
    for (std::size_t i = 0; i < mu; ++i) {
      if (++choice[i] < candidates.size()) break;
      choice[i] = 0;
    }
  }
  return IsoAnswer::No;
}

}  // namespace

std::uint64_t PresentedModule::order() const {
  std::uint64_t o = 1;
  for (auto d : invariant_factors) o *= static_cast<std::uint64_t>(d);
  return o;
}

GroupDecomposition decompose_group(const FiniteModule& m) {
  return decompose(m.order(), m.zero(), [&](Index a, Index b) { return m.add(a, b); });
}

GroupDecomposition decompose_group(const FiniteRing& r) {
  return decompose(r.order(), r.zero(), [&](Index a, Index b) { return r.add(a, b); });
}

PresentedModule tensor_over_ring(const FiniteModule& m, const FiniteModule& n) {
  if (m.base()->id() != n.base()->id()) throw RingMismatch("tensor product of modules over different rings");
  return tensor_impl(m.base(), decompose_group(*m.base()), m, decompose_group(m), n, decompose_group(n));
}

FlatnessResult is_flat_ideal(const Ideal& i, std::span<const Ideal> all_ideals) {
  const auto& r = i.ring();
  const auto ring_group = decompose_group(*r);
  const auto mi = ideal_module_unchecked(i);
  const auto gi = decompose_group(*mi);
  FlatnessResult result;
  for (const auto& j : all_ideals) {
    if (j.ring()->id() != r->id()) throw RingMismatch("flatness test ideal over a different ring");
    if (j.is_zero()) continue;
    const auto mj = ideal_module_unchecked(j);
    const auto t = tensor_impl(r, ring_group, *mj, decompose_group(*mj), *mi, gi);
    const auto product = ideal_product(j, i);
    if (t.order() != product.size()) {
      result.flat = false;
      result.witness = j;
      result.tensor_order = t.order();
      result.product_order = product.size();
      return result;
    }
  }
  return result;
}

FlatnessResult is_flat_ideal(const Ideal& i, const Limits& limits) {
  const auto all = enumerate_ideals(i.ring(), limits);
  return is_flat_ideal(i, all);
}

std::string to_string(ProbeOutcome o) {
  switch (o) {
    case ProbeOutcome::FiniteDimension: return "finite";
    case ProbeOutcome::Periodic: return "periodic";
    case ProbeOutcome::Inconclusive: return "inconclusive";
  }
  return "?";
}

ProbeCertificate resolution_cycle_probe(const Ideal& i, int max_steps, const Limits& limits) {
  const auto& r = *i.ring();
  if (!r.is_local()) throw InvalidArgument("resolution probe needs a local ring; " + r.spec() + " is not local");
  if (max_steps < 1) throw InvalidArgument("resolution probe needs max_steps >= 1");
  if (r.zero() != 0) throw InternalError("free-space encoding assumes the zero element has index 0");
  const auto max_gens = Ideal::from_elements(i.ring(), r.maximal_ideals().front()).generators();

  ProbeCertificate cert;
  std::vector<Syzygy> syz;
  syz.push_back(make_syzygy(max_gens, FreeSpace(r, 1), i.elements()));
  std::ostringstream why;
  for (int k = 0;; ++k) {
    Syzygy& x = syz.back();
    const std::size_t mu = x.minimal_generators.size();
    cert.syzygy_orders.push_back(x.members.count());
    cert.syzygy_generators.push_back(mu);
    FreeSpace domain(r, mu);
    if (x.members.count() == domain.size()) {
      cert.outcome = ProbeOutcome::FiniteDimension;
      cert.step = k;
      cert.flat_dimension = k;
      why << "syzygy " << k << " is free of rank " << mu << ", so fd = " << k;
      break;
    }
    if (k == max_steps) {
      cert.outcome = ProbeOutcome::Inconclusive;
      cert.step = k;
      why << "no free or repeated syzygy within " << max_steps << " steps";
      break;
    }
    if (domain.size() > limits.probe_space) {
      cert.outcome = ProbeOutcome::Inconclusive;
      cert.step = k;
      why << "free module R^" << mu << " exceeds the probe space limit";
      break;
    }
    ElementSet kernel = kernel_of(x, domain);
    x.kernel_generators = domain.greedy_generators(kernel);
    syz.push_back(make_syzygy(max_gens, domain, std::move(kernel)));
    bool periodic = false;
    for (int j = 0; j <= k; ++j) {
      if (isomorphic(r, syz[static_cast<std::size_t>(j)], syz.back()) == IsoAnswer::Yes) {
        cert.outcome = ProbeOutcome::Periodic;
        cert.step = k + 1;
        cert.matches = j;
        periodic = true;
        break;
      }
    }
    if (periodic) {
      cert.syzygy_orders.push_back(syz.back().members.count());
      cert.syzygy_generators.push_back(syz.back().minimal_generators.size());
      why << "syzygy " << cert.step << " is isomorphic to syzygy " << cert.matches
          << " (non-free), so the minimal resolution is periodic with period " << cert.period() << " and fd = inf";
      break;
    }
  }
  cert.explanation = why.str();
  return cert;
}

}  // namespace pruferlab
