#include "pruferlab/retract.hpp"

#include <sstream>

namespace pruferlab {

namespace {

[[noreturn]] void axiom_failure(const std::string& axiom, const std::string& where) {
  throw InvalidArgument("retract axiom '" + axiom + "' fails at " + where);
}

ModulePtr kernel_as_module(const SubringRetract& ret) {
  const auto members = ret.kernel.to_vector();
  const std::size_t n = members.size(), na = ret.a->order();
  std::vector<Index> pos(ret.r->order(), 0);
  for (Index k = 0; k < n; ++k) pos[members[k]] = k;
  ModuleData d;
  d.base = ret.a;
  d.order = n;
  d.add.resize(n * n);
  d.action.resize(na * n);
  for (Index x = 0; x < n; ++x) {
    d.labels.push_back(ret.r->label(members[x]));
    for (Index y = 0; y < n; ++y) d.add[x * n + y] = pos[ret.r->add(members[x], members[y])];
  }
  for (Index a = 0; a < na; ++a)
    for (Index x = 0; x < n; ++x) d.action[a * n + x] = pos[ret.r->mul(ret.embed[a], members[x])];
  d.spec = "Ker";
  d.kind = ModuleKind::Ideal;
  auto m = std::make_shared<const FiniteModule>(std::move(d));
  if (auto err = check_module_axioms(*m)) throw InternalError("kernel of a valid retraction is not an A-module: " + *err);
  return m;
}

/// Some maximal ideal M of A with M·E = 0 and |E| = |A/M|, i.e. E ≅ A/M.
std::optional<std::size_t> residue_module_index(const FiniteRing& a, const FiniteModule& e) {
  const auto& maximal = a.maximal_ideals();
  for (std::size_t k = 0; k < maximal.size(); ++k) {
    const auto& m = maximal[k];
    if (e.order() * m.count() != a.order()) continue;
    bool kills = true;
    m.for_each([&](Index x) {
      for (Index v = 0; v < e.order() && kills; ++v) kills = e.act(x, v) == e.zero();
    });
    if (kills) return k;
  }
  return std::nullopt;
}

}  // namespace

SubringRetract build_retract(const RingPtr& a, const RingPtr& r, std::vector<Index> embed,
                             std::vector<Index> retraction) {
  const std::size_t na = a->order(), nr = r->order();
  if (embed.size() != na) throw InvalidArgument("embedding must have one image per element of A");
  if (retraction.size() != nr) throw InvalidArgument("retraction must have one image per element of R");
  for (Index x : embed)
    if (x >= nr) throw InvalidArgument("embedding image out of range");
  for (Index x : retraction)
    if (x >= na) throw InvalidArgument("retraction image out of range");

  const auto& A = *a;
  const auto& R = *r;
  if (embed[A.one()] != R.one()) axiom_failure("ι(1) = 1", A.label(A.one()));
  std::vector<char> hit(nr, 0);
  for (Index x = 0; x < na; ++x) {
    if (hit[embed[x]]) axiom_failure("ι injective", A.label(x));
    hit[embed[x]] = 1;
    for (Index y = 0; y < na; ++y) {
      if (embed[A.add(x, y)] != R.add(embed[x], embed[y]))
        axiom_failure("ι(a + b) = ι(a) + ι(b)", "(" + A.label(x) + ", " + A.label(y) + ")");
      if (embed[A.mul(x, y)] != R.mul(embed[x], embed[y]))
        axiom_failure("ι(ab) = ι(a)ι(b)", "(" + A.label(x) + ", " + A.label(y) + ")");
    }
    if (retraction[embed[x]] != x) axiom_failure("φ∘ι = id", A.label(x));
  }
  for (Index x = 0; x < nr; ++x) {
    for (Index y = 0; y < nr; ++y)
      if (retraction[R.add(x, y)] != A.add(retraction[x], retraction[y]))
        axiom_failure("φ(x + y) = φ(x) + φ(y)", "(" + R.label(x) + ", " + R.label(y) + ")");
    for (Index s = 0; s < na; ++s)
      if (retraction[R.mul(embed[s], x)] != A.mul(s, retraction[x]))
        axiom_failure("φ(ι(a)x) = aφ(x)", "(" + A.label(s) + ", " + R.label(x) + ")");
  }

  SubringRetract ret{a, r, std::move(embed), std::move(retraction), ElementSet(nr), nullptr, nullptr};
  for (Index x = 0; x < nr; ++x)
    if (ret.retraction[x] == A.zero()) ret.kernel.insert(x);
  ret.kernel_module = kernel_as_module(ret);
  return ret;
}

SubringRetract canonical_trivial_retract(const RingPtr& a, const ModulePtr& e, const Limits& limits) {
  auto r = make_trivial_extension(a, e, limits);
  const auto ne = static_cast<Index>(e->order());
  std::vector<Index> embed(a->order()), retraction(r->order());
  for (Index x = 0; x < a->order(); ++x) embed[x] = x * ne;
  for (Index x = 0; x < r->order(); ++x) retraction[x] = x / ne;
  auto ret = build_retract(a, r, std::move(embed), std::move(retraction));
  ret.extension_module = e;
  return ret;
}

KernelConditions kernel_conditions(const SubringRetract& ret) {
  const auto& A = *ret.a;
  const auto& R = *ret.r;
  KernelConditions c;
  const auto kernel = ret.kernel.to_vector();
  for (Index s = 0; s < A.order() && c.torsion_free; ++s) {
    if (A.is_zero_divisor(s)) continue;
    for (Index k : kernel)
      if (k != R.zero() && R.mul(ret.embed[s], k) == R.zero()) {
        c.torsion_free = false;
        c.torsion_witness = {s, k};
        break;
      }
  }
  if (A.is_local()) c.maximal_ideal_kills_kernel = maximal_ideal_kills_kernel(ret);
  c.kernel_in_nilradical = ret.kernel.is_subset_of(R.nilpotents());
  for (Index x : kernel)
    for (Index y : kernel) c.kernel_square_zero = c.kernel_square_zero && R.mul(x, y) == R.zero();
  c.note =
      "torsion-free is read as: ι(a)k = 0 implies k = 0 for regular a in A acting through ι; "
      "over a finite A every regular element is a unit, so this always holds";
  return c;
}

bool maximal_ideal_kills_kernel(const SubringRetract& ret) {
  const auto& A = *ret.a;
  const auto& R = *ret.r;
  if (!A.is_local()) throw InvalidArgument("M·Ker(φ) needs a local ring A; " + A.spec() + " is not local");
  bool kills = true;
  A.maximal_ideals().front().for_each([&](Index m) {
    ret.kernel.for_each([&](Index k) { kills = kills && R.mul(ret.embed[m], k) == R.zero(); });
  });
  return kills;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "HOLDS";
    case Verdict::Vacuous: return "VACUOUS";
    case Verdict::Violated: return "VIOLATED";
  }
  return "?";
}

bool TransferCheck::any_violated() const {
  for (const auto& v : verdicts)
    if (v.verdict == Verdict::Violated) return true;
  return false;
}

TransferCheck verify_transfer_theorems(const SubringRetract& ret, const Limits& limits) {
  TransferCheck t;
  t.a_report = classify_ring(ret.a, limits);
  t.r_report = classify_ring(ret.r, limits);
  t.kernel = kernel_conditions(ret);
  const auto& ra = t.a_report;
  const auto& rr = t.r_report;

  auto yes = [](bool b) { return b ? "true" : "false"; };
  auto implication = [&](std::string name, std::string statement, bool applies, bool hypothesis, bool conclusion,
                         std::string detail) {
    TransferVerdict v{std::move(name), std::move(statement), Verdict::Vacuous, std::move(detail)};
    if (applies && hypothesis) v.verdict = conclusion ? Verdict::Holds : Verdict::Violated;
    t.verdicts.push_back(std::move(v));
  };

  implication("gaussian_descent", "If R is Gaussian then so is A.", true, rr.gaussian, ra.gaussian,
              std::string("gaussian(R) = ") + yes(rr.gaussian) + ", gaussian(A) = " + yes(ra.gaussian));

  {
    TransferVerdict v{"gaussian_iff_residue_module",
                      "If R = A ∝ A/M for a maximal ideal M of A, then R is Gaussian iff A is.", Verdict::Vacuous, ""};
    std::optional<std::size_t> m;
    if (ret.extension_module) m = residue_module_index(*ret.a, *ret.extension_module);
    if (m) {
      v.verdict = rr.gaussian == ra.gaussian ? Verdict::Holds : Verdict::Violated;
      v.detail = std::string("E ≅ A/M for maximal ideal ") + std::to_string(*m) + (ret.a->is_local() ? " (A local)" : "") +
                 "; gaussian(R) = " + yes(rr.gaussian) + ", gaussian(A) = " + yes(ra.gaussian);
    } else {
      v.detail = "not of the form A ∝ A/M";
    }
    t.verdicts.push_back(std::move(v));
  }

  implication("prufer_descent", "If Ker(φ) is torsion-free and R is Prüfer, then A is Prüfer.", true,
              t.kernel.torsion_free && rr.prufer, ra.prufer,
              std::string("kernel torsion-free = ") + yes(t.kernel.torsion_free) + ", prufer(R) = " + yes(rr.prufer) +
                  ", prufer(A) = " + yes(ra.prufer));

  {
    const bool m_kills = t.kernel.maximal_ideal_kills_kernel.value_or(false);
    implication("total_quotient_ascent",
                "If (A, M) is a local total quotient ring, M·Ker(φ) = 0 and Ker(φ) ⊆ Nil(R), then R is a total "
                "quotient ring.",
                ret.a->is_local(), ra.total_quotient_ring && m_kills && t.kernel.kernel_in_nilradical,
                rr.total_quotient_ring,
                std::string("A local = ") + yes(ret.a->is_local()) + ", M·Ker = 0: " + yes(m_kills) +
                    ", Ker ⊆ Nil(R): " + yes(t.kernel.kernel_in_nilradical) + ", total_quotient_ring(R) = " +
                    yes(rr.total_quotient_ring));
  }

  implication("arithmetical_descent", "If R is arithmetical then so is A.", true, rr.arithmetical, ra.arithmetical,
              std::string("arithmetical(R) = ") + yes(rr.arithmetical) + ", arithmetical(A) = " + yes(ra.arithmetical));

  {
    const bool trivial = ret.extension_module != nullptr;
    const bool local = ret.a->is_local();
    bool me_zero = false;
    if (trivial && local) {
      me_zero = true;
      const auto& e = *ret.extension_module;
      ret.a->maximal_ideals().front().for_each([&](Index m) {
        for (Index v = 0; v < e.order() && me_zero; ++v) me_zero = e.act(m, v) == e.zero();
      });
    }
    const std::string hyp = std::string("trivial extension = ") + yes(trivial) + ", A local = " + yes(local) +
                            ", ME = 0: " + yes(me_zero);
    implication("trivial_extension_total_quotient",
                "If (A, M) is local and ME = 0, then A ∝ E is a total quotient ring, in particular Prüfer.",
                trivial && local, me_zero, rr.total_quotient_ring && rr.prufer,
                hyp + ", total_quotient_ring(R) = " + yes(rr.total_quotient_ring) + ", prufer(R) = " + yes(rr.prufer));
    implication("trivial_extension_ch",
                "If (A, M) is local and ME = 0, then A ∝ E is a (CH) ring, in particular strongly Prüfer.",
                trivial && local, me_zero, rr.ch_ring && rr.strongly_prufer,
                hyp + ", ch_ring(R) = " + yes(rr.ch_ring) + ", strongly_prufer(R) = " + yes(rr.strongly_prufer));
    const bool nonzero = trivial && ret.extension_module->order() > 1;
    implication("wdim_exceeds_one", "If E != 0 then wdim(A ∝ E) > 1.", trivial, nonzero, !rr.wdim_le_one,
                std::string("E != 0: ") + yes(nonzero) + ", wdim_le_one(R) = " + yes(rr.wdim_le_one));
  }
  return t;
}

}  // namespace pruferlab
