#include "pruferlab/deciders.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>
#include <sstream>

#include "pruferlab/module.hpp"

namespace pruferlab {

namespace {

void require_enumerable(const FiniteRing& r, const Limits& limits, const char* what) {
  if (r.order() > limits.enumeration_order)
    throw CapExceeded(std::string(what) + " on " + r.spec() + " (order " + std::to_string(r.order()) + ")",
                      limits.enumeration_order);
}

/// Principal iff some member generates an ideal of the same size.
bool is_principal_set(const FiniteRing& r, const ElementSet& s) {
  const auto n = s.count();
  bool found = false;
  s.for_each([&](Index x) { found = found || r.principal(x).count() == n; });
  return found;
}

ElementSet two_generated(const FiniteRing& r, Index a, Index b) {
  return r.subgroup_sum(r.principal(a), r.principal(b));
}

}  // namespace

TotalQuotientResult is_total_quotient_ring(const FiniteRing& r) {
  TotalQuotientResult t;
  for (Index x = 0; x < r.order(); ++x)
    if (!r.is_unit(x) && !r.is_zero_divisor(x)) {
      t.holds = false;
      t.regular_non_unit = x;
      break;
    }
  return t;
}

PruferResult is_prufer(const RingPtr& ring, const Limits& limits) {
  const auto& r = *ring;
  require_enumerable(r, limits, "Prüfer decision");
  PruferResult p;
  ElementSet regular(r.order());
  for (Index x = 0; x < r.order(); ++x)
    if (!r.is_zero_divisor(x)) regular.insert(x);
  std::set<ElementSet> seen;
  for (Index a = 0; a < r.order() && p.holds; ++a)
    for (Index b = a; b < r.order(); ++b) {
      auto s = two_generated(r, a, b);
      if (!seen.insert(s).second) continue;
      ++p.two_generated;
      if (!s.intersects(regular)) continue;
      ++p.regular;
      const Ideal i(ring, {a, b}, std::move(s));
      if (!is_invertible(i).invertible) {
        p.holds = false;
        p.witness = i;
        break;
      }
    }
  std::ostringstream c;
  c << p.regular << " of " << p.two_generated << " two-generated ideals are regular";
  if (p.holds) c << "; all are invertible";
  if (p.regular == 1) c << " (the only regular ideal is R: every regular element is a unit)";
  p.certificate = c.str();
  return p;
}

GaussianResult is_gaussian(const RingPtr& ring) {
  GaussianResult g;
  const auto factors = local_decomposition(ring);
  for (std::size_t k = 0; k < factors.size() && g.holds; ++k) {
    const auto& f = *factors[k].ring;
    const auto m = f.maximal_ideals().front().to_vector();
    for (Index a : m) {
      for (Index b : m) {
        const Index a2 = f.mul(a, a), b2 = f.mul(b, b), ab = f.mul(a, b);
        const ElementSet sq = f.subgroup_sum(f.subgroup_sum(f.principal(a2), f.principal(ab)), f.principal(b2));
        const bool is_a2 = sq == f.principal(a2);
        const bool is_b2 = sq == f.principal(b2);
        int failed = 0;
        if (!is_a2 && !is_b2) failed = 1;
        else if (is_a2 && ab == f.zero() && b2 != f.zero()) failed = 2;
        if (!failed) continue;
        g.holds = false;
        g.factor = k;
        g.failed_condition = failed;
        const Index ra = factors[k].embedding[a], rb = factors[k].embedding[b];
        g.witness = {ra, rb};
        std::ostringstream d;
        d << "a = " << ring->label(ra) << ", b = " << ring->label(rb) << " in the maximal ideal of local factor " << k
          << ": ";
        if (failed == 1) d << "(a,b)^2 is neither (a^2) nor (b^2)";
        else d << "(a,b)^2 = (a^2) and ab = 0 but b^2 != 0";
        g.detail = d.str();
        break;
      }
      if (!g.holds) break;
    }
  }
  if (g.holds)
    g.detail = "Tsang's conditions hold for every pair in the maximal ideal of each of " +
               std::to_string(factors.size()) + " local factor(s)";
  return g;
}

FactorizationOracle arithmetical_by_factorization(const RingPtr& ring, const Limits& limits) {
  IdealLattice lat(ring, limits);
  FactorizationOracle o;
  const std::size_t n = lat.size();
  for (std::size_t j = 0; j < n && o.holds; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      if (!lat.subset(i, j)) continue;
      bool found = false;
      for (std::size_t h = 0; h < n && !found; ++h) found = lat.product(h, j) == i;
      if (!found) {
        o.holds = false;
        o.witness.emplace(lat[i], lat[j]);
        break;
      }
    }
  return o;
}

ArithmeticalResult is_arithmetical(const RingPtr& ring, const Limits& limits) {
  ArithmeticalResult a;
  const auto factors = local_decomposition(ring);
  for (std::size_t k = 0; k < factors.size() && a.holds; ++k) {
    const auto& f = *factors[k].ring;
    const auto m = f.maximal_ideals().front().to_vector();
    for (std::size_t x = 0; x < m.size() && a.holds; ++x)
      for (std::size_t y = x + 1; y < m.size(); ++y) {
        if (is_principal_set(f, two_generated(f, m[x], m[y]))) continue;
        a.holds = false;
        a.witness = ideal_generated_by(ring, {factors[k].embedding[m[x]], factors[k].embedding[m[y]]});
        a.detail = "the ideal " + a.witness->describe() + " = " + a.witness->describe_elements() +
                   " is not principal in local factor " + std::to_string(k);
        break;
      }
  }
  if (a.holds)
    a.detail = "every two-generated ideal is principal in each of " + std::to_string(factors.size()) +
               " local factor(s)";

  if (ring->order() <= limits.oracle_order && ring->order() <= limits.enumeration_order) {
    const auto o = arithmetical_by_factorization(ring, limits);
    a.oracle_ran = true;
    if (o.holds != a.holds)
      throw InternalError("arithmetical deciders disagree on " + ring->spec() + ": local principality says " +
                          (a.holds ? "true" : "false") + ", ideal factorization says " +
                          (o.holds ? "true" : "false"));
  }
  return a;
}

FlatnessOracle all_ideals_flat(const RingPtr& ring, const Limits& limits) {
  FlatnessOracle o;
  const auto all = enumerate_ideals(ring, limits);
  for (const auto& i : all) {
    auto f = is_flat_ideal(i, all);
    if (!f.flat) {
      o.holds = false;
      o.non_flat = i;
      o.test_ideal = f.witness;
      break;
    }
  }
  return o;
}

WdimResult wdim_classification(const RingPtr& ring, const Limits& limits) {
  WdimResult w;
  const auto factors = local_decomposition(ring);
  for (std::size_t k = 0; k < factors.size(); ++k) {
    if (factors[k].ring->is_field()) continue;
    w.wdim_le_one = false;
    w.non_field_factor = k;
    const auto& f = *factors[k].ring;
    f.nilpotents().for_each([&](Index x) {
      if (!w.non_field_witness && x != f.zero()) w.non_field_witness = factors[k].embedding[x];
    });
    break;
  }
  w.semihereditary = w.wdim_le_one;

  if (ring->order() <= limits.oracle_order && ring->order() <= limits.enumeration_order) {
    const auto o = all_ideals_flat(ring, limits);
    w.oracle_ran = true;
    if (o.holds != w.wdim_le_one)
      throw InternalError("wdim deciders disagree on " + ring->spec() + ": product of fields says " +
                          (w.wdim_le_one ? "true" : "false") + ", all-ideals flatness says " +
                          (o.holds ? "true" : "false"));
  }

  if (ring->construction().kind == ConstructionKind::TrivialExtension &&
      ring->construction().module->order() > 1 && w.wdim_le_one)
    throw InternalError("trivial extension " + ring->spec() + " by a nonzero module has wdim <= 1");

  if (w.wdim_le_one) {
    w.wdim_infinite_certified = false;
    w.detail = "every local factor is a field, so every ideal is flat and wdim <= 1 (in fact 0)";
    return w;
  }

  std::ostringstream d;
  d << "local factor " << *w.non_field_factor << " is not a field (nonzero nilpotent "
    << ring->label(*w.non_field_witness) << "), so some ideal is not flat and wdim > 1";

  // Search for a periodic minimal resolution of a principal ideal inside a
  // non-field local factor; smaller ideals first.
  constexpr std::size_t max_attempts = 6;
  std::size_t attempts = 0;
  for (std::size_t k = 0; k < factors.size() && !w.wdim_infinite_certified; ++k) {
    const auto& fr = factors[k].ring;
    if (fr->is_field()) continue;
    std::vector<Index> candidates;
    std::set<ElementSet> seen;
    fr->maximal_ideals().front().for_each([&](Index x) {
      if (x != fr->zero() && seen.insert(fr->principal(x)).second) candidates.push_back(x);
    });
    std::stable_sort(candidates.begin(), candidates.end(),
                     [&](Index a, Index b) { return fr->principal(a).count() < fr->principal(b).count(); });
    for (Index x : candidates) {
      if (attempts++ == max_attempts) break;
      const auto i = ideal_generated_by(fr, {x});
      auto c = resolution_cycle_probe(i, limits.probe_steps, limits);
      if (c.outcome == ProbeOutcome::Periodic) {
        w.wdim_infinite_certified = true;
        w.probed_ideal = ideal_generated_by(ring, {factors[k].embedding[x]});
        w.probe = std::move(c);
        d << "; the ideal " << w.probed_ideal->describe() << " has a periodic minimal resolution in local factor "
          << k << " (" << w.probe->explanation << ")";
        break;
      }
    }
  }
  if (!w.wdim_infinite_certified) d << "; no periodic resolution found within the probe budget";
  w.detail = d.str();
  return w;
}

StrongPruferResult strongly_prufer_and_ch(const RingPtr& ring, const Limits& limits) {
  StrongPruferResult s;
  const auto all = enumerate_ideals(ring, limits);
  const auto factors = local_decomposition(ring);
  for (const auto& i : all) {
    const bool dense = annihilator(i).is_zero();
    if (dense) {
      ++s.dense_ideals;
      if (s.strongly_prufer && !is_locally_principal(i, factors).locally_principal) {
        s.strongly_prufer = false;
        s.dense_not_locally_principal = i;
      }
      if (s.ch_ring && !i.is_whole()) {
        s.ch_ring = false;
        s.proper_with_zero_annihilator = i;
      }
    }
  }
  if (s.ch_ring && !s.strongly_prufer)
    throw InternalError("(CH) ring " + ring->spec() + " is not strongly Prüfer");
  return s;
}

std::string nagata_prufer_report(const RingPtr& a, const Limits& limits) {
  const auto s = strongly_prufer_and_ch(a, limits);
  std::ostringstream out;
  out << "A = " << a->spec() << " is " << (s.strongly_prufer ? "" : "not ") << "strongly Prüfer ("
      << s.dense_ideals << " dense ideal(s), ";
  if (s.strongly_prufer) out << "all locally principal";
  else out << "including " << s.dense_not_locally_principal->describe() << ", not locally principal";
  out << "), hence A(X) is " << (s.strongly_prufer ? "" : "not ") << "Prüfer.\n"
      << "Criterion-based: A(X) is Prüfer iff A is strongly Prüfer; the Nagata ring A(X) is not constructed.\n"
      << "Descent along the retract A ⊆ A(X): if A(X) is Gaussian (resp. arithmetical) then so is A; "
      << "if A(X) is Prüfer and the kernel is torsion-free then A is Prüfer.\n";
  if (s.ch_ring) out << "A is a (CH) ring, which already implies strongly Prüfer.\n";
  return out.str();
}

const std::vector<std::string>& flag_names() {
  static const std::vector<std::string> names{"semihereditary",  "wdim_le_one",     "wdim_infinite_certified",
                                              "arithmetical",    "gaussian",        "prufer",
                                              "total_quotient_ring", "strongly_prufer", "ch_ring"};
  return names;
}

bool flag_value(const PropertyReport& r, std::string_view name) {
  if (name == "semihereditary") return r.semihereditary;
  if (name == "wdim_le_one") return r.wdim_le_one;
  if (name == "wdim_infinite_certified") return r.wdim_infinite_certified.value_or(false);
  if (name == "arithmetical") return r.arithmetical;
  if (name == "gaussian") return r.gaussian;
  if (name == "prufer") return r.prufer;
  if (name == "total_quotient_ring") return r.total_quotient_ring;
  if (name == "strongly_prufer") return r.strongly_prufer;
  if (name == "ch_ring") return r.ch_ring;
  throw InvalidArgument("unknown flag '" + std::string(name) + "'");
}

std::optional<std::string> chain_violation(const PropertyReport& r) {
  const std::pair<const char*, const char*> implications[] = {
      {"semihereditary", "wdim_le_one"}, {"wdim_le_one", "arithmetical"},     {"arithmetical", "gaussian"},
      {"gaussian", "prufer"},            {"total_quotient_ring", "prufer"},   {"ch_ring", "strongly_prufer"},
      {"strongly_prufer", "prufer"},
  };
  for (const auto& [from, to] : implications)
    if (flag_value(r, from) && !flag_value(r, to))
      return r.spec + ": " + from + " holds but " + to + " does not";
  if (r.wdim_infinite_certified.value_or(false) && r.wdim_le_one)
    return r.spec + ": wdim <= 1 and an infinite flat dimension both reported";
  return std::nullopt;
}

PropertyReport classify_ring(const RingPtr& ring, const Limits& limits) {
  using clock = std::chrono::steady_clock;
  PropertyReport rep;
  rep.spec = ring->spec();
  rep.order = ring->order();
  rep.is_local = ring->is_local();
  rep.local_factors = ring->primitive_idempotents().size();
  const auto& r = *ring;

  auto timed = [&](const char* name, auto&& fn) {
    const auto t0 = clock::now();
    fn();
    rep.timings_ms[name] = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
  };
  auto witness = [&](const std::string& flag, std::string kind, std::vector<std::string> items, std::string text) {
    rep.witnesses[flag] = Witness{std::move(kind), std::move(items), std::move(text)};
  };
  auto ideal_items = [&](const Ideal& i) {
    std::vector<std::string> items;
    for (Index g : i.generators()) items.push_back(r.label(g));
    return items;
  };

  timed("total_quotient_ring", [&] {
    const auto t = is_total_quotient_ring(r);
    rep.total_quotient_ring = t.holds;
    if (t.holds) rep.certificates["total_quotient_ring"] = "every element is a unit or a zero divisor";
    else
      witness("total_quotient_ring", "element", {r.label(*t.regular_non_unit)},
              "regular element that is not a unit");
  });

  timed("prufer", [&] {
    const auto p = is_prufer(ring, limits);
    rep.prufer = p.holds;
    if (p.holds) rep.certificates["prufer"] = p.certificate;
    else
      witness("prufer", "ideal", ideal_items(*p.witness),
              "regular two-generated ideal " + p.witness->describe() + " is not invertible");
  });

  timed("gaussian", [&] {
    const auto g = is_gaussian(ring);
    rep.gaussian = g.holds;
    if (g.holds) rep.certificates["gaussian"] = g.detail;
    else
      witness("gaussian", "element_pair", {r.label(g.witness->first), r.label(g.witness->second)}, g.detail);

    if (r.order() <= limits.scan_order) {
      const auto scan = content_equality_scan(ring, 1, 1, limits);
      if (!scan.holds && g.holds)
        throw InternalError("content scan refutes Gaussian on " + rep.spec + " but Tsang's criterion accepts it");
      rep.oracles.push_back("content scan, degrees (1, 1)");
      if (!scan.holds)
        witness("gaussian_polynomials", "polynomial_pair",
                {scan.witness->first.to_string(), scan.witness->second.to_string()},
                "C(fg) != C(f)C(g) for f = " + scan.witness->first.to_string() +
                    ", g = " + scan.witness->second.to_string());
    }
  });

  timed("arithmetical", [&] {
    const auto a = is_arithmetical(ring, limits);
    rep.arithmetical = a.holds;
    if (a.holds) rep.certificates["arithmetical"] = a.detail;
    else witness("arithmetical", "ideal", ideal_items(*a.witness), a.detail);
    if (a.oracle_ran) rep.oracles.push_back("ideal factorization I = HJ");
  });

  timed("wdim", [&] {
    const auto w = wdim_classification(ring, limits);
    rep.wdim_le_one = w.wdim_le_one;
    rep.semihereditary = w.semihereditary;
    rep.wdim_infinite_certified = w.wdim_infinite_certified;
    if (w.wdim_le_one) {
      rep.certificates["wdim_le_one"] = w.detail;
      rep.certificates["semihereditary"] = "finitely generated flat ideals of a finite ring are projective";
    } else {
      witness("wdim_le_one", "element", {r.label(*w.non_field_witness)}, w.detail);
      witness("semihereditary", "element", {r.label(*w.non_field_witness)},
              "not semihereditary: wdim > 1 and semihereditary coincides with wdim <= 1 on finite rings");
    }
    if (w.wdim_infinite_certified.value_or(false))
      rep.certificates["wdim_infinite_certified"] = w.probed_ideal->describe() + ": " + w.probe->explanation;
    if (w.oracle_ran) rep.oracles.push_back("all-ideals flatness");
  });

  timed("strongly_prufer_ch", [&] {
    const auto s = strongly_prufer_and_ch(ring, limits);
    rep.strongly_prufer = s.strongly_prufer;
    rep.ch_ring = s.ch_ring;
    if (s.strongly_prufer)
      rep.certificates["strongly_prufer"] =
          std::to_string(s.dense_ideals) + " dense ideal(s), all locally principal";
    else
      witness("strongly_prufer", "ideal", ideal_items(*s.dense_not_locally_principal),
              "dense ideal " + s.dense_not_locally_principal->describe() + " is not locally principal");
    if (s.ch_ring) rep.certificates["ch_ring"] = "every proper ideal has a nonzero annihilator";
    else
      witness("ch_ring", "ideal", ideal_items(*s.proper_with_zero_annihilator),
              "proper ideal " + s.proper_with_zero_annihilator->describe() + " has zero annihilator");
  });

  rep.notes = {
      "regular ideal: contains a non-zero-divisor (R itself included)",
      "invertibility uses integral colon ideals: a finite ring is its own total quotient ring",
      "semihereditary coincides with wdim <= 1 on finite rings",
      "(CH) is quantified over proper ideals",
  };
  if (!rep.wdim_le_one && !rep.wdim_infinite_certified)
    rep.notes.push_back("wdim > 1; no infinite flat dimension certified within the probe budget");

  if (auto v = chain_violation(rep)) throw InternalError("hierarchy violated: " + *v);
  return rep;
}

}  // namespace pruferlab
