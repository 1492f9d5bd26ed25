#include "pruferlab/module.hpp"

#include <sstream>

#include "pruferlab/ideal.hpp"

namespace pruferlab {

namespace {

std::string generator_list(const std::vector<Index>& gens) {
  if (gens.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (k) out += ", ";
    out += std::to_string(gens[k]);
  }
  return out;
}

ModulePtr finish(ModuleData d) {
  auto m = std::make_shared<const FiniteModule>(std::move(d));
  if (auto err = check_module_axioms(*m)) throw InvalidArgument("module " + m->spec() + ": " + *err);
  return m;
}

}  // namespace

FiniteModule::FiniteModule(ModuleData data)
    : base_(std::move(data.base)),
      order_(data.order),
      add_(std::move(data.add)),
      action_(std::move(data.action)),
      labels_(std::move(data.labels)),
      spec_(std::move(data.spec)),
      kind_(data.kind) {
  if (!base_) throw InvalidArgument("module without base ring");
  if (order_ == 0) throw InvalidArgument("module order must be positive");
  if (add_.size() != order_ * order_ || action_.size() != base_->order() * order_)
    throw InvalidArgument("module tables have the wrong shape");
  if (labels_.size() != order_) {
    labels_.resize(order_);
    for (std::size_t k = 0; k < order_; ++k) labels_[k] = std::to_string(k);
  }
}

ModulePtr make_regular_module(const RingPtr& a) {
  const std::size_t n = a->order();
  ModuleData d;
  d.base = a;
  d.order = n;
  d.add.resize(n * n);
  d.action.resize(n * n);
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y) {
      d.add[x * n + y] = a->add(x, y);
      d.action[x * n + y] = a->mul(x, y);
    }
  for (Index x = 0; x < n; ++x) d.labels.push_back(a->label(x));
  d.spec = "Self";
  d.kind = ModuleKind::Regular;
  return finish(std::move(d));
}

ModulePtr make_quotient_module(const Ideal& ideal) {
  const auto& a = ideal.ring();
  const std::size_t na = a->order();
  constexpr Index unset = ~Index{0};
  std::vector<Index> cls(na, unset);
  std::vector<Index> reps;
  const auto members = ideal.elements().to_vector();
  for (Index x = 0; x < na; ++x) {
    if (cls[x] != unset) continue;
    const auto c = static_cast<Index>(reps.size());
    reps.push_back(x);
    for (Index i : members) cls[a->add(x, i)] = c;
  }
  const std::size_t n = reps.size();
  ModuleData d;
  d.base = a;
  d.order = n;
  d.add.resize(n * n);
  d.action.resize(na * n);
  for (Index x = 0; x < n; ++x) {
    d.labels.push_back("[" + a->label(reps[x]) + "]");
    for (Index y = 0; y < n; ++y) d.add[x * n + y] = cls[a->add(reps[x], reps[y])];
  }
  for (Index r = 0; r < na; ++r)
    for (Index x = 0; x < n; ++x) d.action[r * n + x] = cls[a->mul(r, reps[x])];
  d.spec = "QuotMod(" + generator_list(ideal.generators()) + ")";
  d.kind = ModuleKind::Quotient;
  return finish(std::move(d));
}

ModulePtr make_direct_sum(const RingPtr& a, std::span<const ModulePtr> parts) {
  if (parts.empty()) return make_quotient_module(unit_ideal(a));
  for (const auto& p : parts)
    if (p->base()->id() != a->id()) throw RingMismatch("direct summand " + p->spec() + " over another ring");
  if (parts.size() == 1) return parts.front();

  const ModulePtr& head = parts.front();
  const ModulePtr tail = make_direct_sum(a, parts.subspan(1));
  const std::size_t nh = head->order(), nt = tail->order(), n = nh * nt, na = a->order();
  if (n > Limits{}.construction_order)
    throw CapExceeded("direct sum of order " + std::to_string(n), Limits{}.construction_order);
  ModuleData d;
  d.base = a;
  d.order = n;
  d.add.resize(n * n);
  d.action.resize(na * n);
  for (Index x = 0; x < n; ++x) {
    const Index xh = x / nt, xt = x % nt;
    d.labels.push_back("(" + head->label(xh) + "," + tail->label(xt) + ")");
    for (Index y = 0; y < n; ++y)
      d.add[x * n + y] = static_cast<Index>(head->add(xh, y / nt) * nt + tail->add(xt, y % nt));
    for (Index r = 0; r < na; ++r) d.action[r * n + x] = static_cast<Index>(head->act(r, xh) * nt + tail->act(r, xt));
  }
  d.spec = "Sum(" + head->spec() + ", " + tail->spec() + ")";
  d.kind = ModuleKind::DirectSum;
  return finish(std::move(d));
}

ModulePtr make_extension_module(const RingPtr& a, const RingPtr& k, const Limits& limits) {
  if (a->characteristic() != a->order())
    throw InvalidArgument("ExtMod requires a base ring generated additively by 1, got " + a->spec());
  if (a->order() % k->characteristic() != 0)
    throw InvalidArgument("ExtMod: characteristic of " + k->spec() + " does not divide |" + a->spec() + "|");
  if (k->order() > limits.construction_order)
    throw CapExceeded("ExtMod of order " + std::to_string(k->order()), limits.construction_order);
  const std::size_t na = a->order(), n = k->order();
  // a = j·1_A  ↦  j·1_K
  std::vector<Index> image(na);
  Index x = a->zero();
  for (std::uint64_t j = 0; j < na; ++j, x = a->add(x, a->one())) image[x] = k->integer(j);

  ModuleData d;
  d.base = a;
  d.order = n;
  d.add.resize(n * n);
  d.action.resize(na * n);
  for (Index s = 0; s < n; ++s) {
    d.labels.push_back(k->label(s));
    for (Index t = 0; t < n; ++t) d.add[s * n + t] = k->add(s, t);
  }
  for (Index r = 0; r < na; ++r)
    for (Index s = 0; s < n; ++s) d.action[r * n + s] = k->mul(image[r], s);
  d.spec = "ExtMod(" + k->spec() + ")";
  d.kind = ModuleKind::Extension;
  return finish(std::move(d));
}

ModulePtr make_ideal_module(const Ideal& ideal) {
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
  d.spec = "IdealMod(" + generator_list(ideal.generators()) + ")";
  d.kind = ModuleKind::Ideal;
  return finish(std::move(d));
}

std::optional<std::string> check_module_axioms(const FiniteModule& m, std::uint64_t budget) {
  const auto& a = *m.base();
  const auto n = static_cast<Index>(m.order());
  const auto na = static_cast<Index>(a.order());
  auto fail = [&](const std::string& what, const std::string& x, const std::string& y) {
    std::ostringstream os;
    os << what << " fails at (" << x << ", " << y << ")";
    return os.str();
  };
  for (Index e = 0; e < n; ++e) {
    if (m.add(m.zero(), e) != e) return fail("zero", m.label(e), "");
    if (m.act(a.one(), e) != e) return fail("1e = e", m.label(e), "");
    bool has_neg = false;
    for (Index f = 0; f < n; ++f) {
      if (m.add(e, f) != m.add(f, e)) return fail("commutativity", m.label(e), m.label(f));
      if (m.add(e, f) == m.zero()) has_neg = true;
    }
    if (!has_neg) return fail("additive inverse", m.label(e), "");
  }
  if (std::uint64_t{na} * n * n <= budget)
    for (Index r = 0; r < na; ++r)
      for (Index e = 0; e < n; ++e)
        for (Index f = 0; f < n; ++f)
          if (m.act(r, m.add(e, f)) != m.add(m.act(r, e), m.act(r, f)))
            return fail("a(e+e') = ae + ae'", a.label(r), m.label(e) + "," + m.label(f));
  if (std::uint64_t{na} * na * n > budget) return std::nullopt;
  for (Index r = 0; r < na; ++r)
    for (Index s = 0; s < na; ++s)
      for (Index e = 0; e < n; ++e) {
        if (m.act(a.add(r, s), e) != m.add(m.act(r, e), m.act(s, e)))
          return fail("(a+a')e = ae + a'e", a.label(r) + "," + a.label(s), m.label(e));
        if (m.act(a.mul(r, s), e) != m.act(r, m.act(s, e)))
          return fail("(aa')e = a(a'e)", a.label(r) + "," + a.label(s), m.label(e));
      }
  if (std::uint64_t{n} * n * n <= budget)
    for (Index e = 0; e < n; ++e)
      for (Index f = 0; f < n; ++f)
        for (Index g = 0; g < n; ++g)
          if (m.add(m.add(e, f), g) != m.add(e, m.add(f, g)))
            return fail("associativity", m.label(e) + "," + m.label(f), m.label(g));
  return std::nullopt;
}

}  // namespace pruferlab
