#include "pruferlab/suite.hpp"

#include <chrono>

#include "pruferlab/homology.hpp"
#include "pruferlab/ideal.hpp"
#include "pruferlab/polynomial.hpp"

namespace pruferlab {

namespace {

class Recorder {
 public:
  explicit Recorder(std::string name) : start_(std::chrono::steady_clock::now()) { result_.name = std::move(name); }

  bool check(std::string what, bool passed, std::string detail = {}) {
    result_.checks.push_back(Check{std::move(what), passed, std::move(detail)});
    return passed;
  }

  /// Runs `body`, turning a library error into a failed check.
  template <class F>
  FixtureResult run(F&& body) {
    try {
      body(*this);
    } catch (const Error& e) {
      check("fixture completes", false, e.what());
    }
    result_.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    return std::move(result_);
  }

 private:
  FixtureResult result_;
  std::chrono::steady_clock::time_point start_;
};

std::string yes_no(bool b) { return b ? "true" : "false"; }

/// Index of (a, e) in A ∝ E.
Index pair_index(std::size_t module_order, Index x, Index e) {
  return static_cast<Index>(x * module_order + e);
}

SubringRetract retract_of(const RingSpec& triv, const Limits& limits) {
  const auto a = eval_spec(triv.rings.at(0), limits);
  return canonical_trivial_retract(a, eval_module_spec(triv.module.at(0), a, limits), limits);
}

}  // namespace

bool FixtureResult::passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return !checks.empty();
}

FixtureResult square_zero_content_fixture(int i, const Limits& limits) {
  const std::uint64_t n = std::uint64_t{1} << i, h = n / 2;
  const std::string spec = "Triv(Z/" + std::to_string(n) + ", Self)";
  return Recorder(spec + ": square-zero polynomial with non-nilpotent content").run([&](Recorder& rec) {
    const auto r = ring_from_spec(spec, limits);
    const Polynomial f(r, {pair_index(n, h, 0), pair_index(n, h, 1)});
    rec.check("f^2 = 0", poly_mul(f, f).is_zero(), "f = " + f.to_string());

    const auto c = content_ideal(f);
    const auto c2 = ideal_product(c, c);
    const auto expected = ideal_generated_by(r, {pair_index(n, 0, h)});
    rec.check("C(f)^2 = R(0, " + std::to_string(h) + ")", c2 == expected,
              "C(f)^2 = " + c2.describe_elements());
    rec.check("C(f)^2 != 0", !c2.is_zero());
    rec.check("C(f^2) != C(f)^2", !content_identity_holds(f, f));

    const auto g = is_gaussian(r);
    rec.check("gaussian = false", !g.holds, g.detail);
    const auto& m = r->maximal_ideals().front();
    rec.check("Gaussian witness lies in the maximal ideal",
              g.witness && m.contains(g.witness->first) && m.contains(g.witness->second));
    rec.check("total_quotient_ring = true", is_total_quotient_ring(*r).holds);
    const auto p = is_prufer(r, limits);
    rec.check("prufer = true", p.holds, p.certificate);
  });
}

FixtureResult self_idealization_fixture(const Limits& limits) {
  return Recorder("Triv(Z/2, Self): arithmetical with infinite flat dimension").run([&](Recorder& rec) {
    const auto r = ring_from_spec("Triv(Z/2, Self)", limits);
    const auto a = is_arithmetical(r, limits);
    rec.check("arithmetical = true", a.holds, a.detail);
    const auto w = wdim_classification(r, limits);
    rec.check("wdim_le_one = false", !w.wdim_le_one, w.detail);

    const auto i = ideal_generated_by(r, {pair_index(2, 0, 1)});
    const auto probe = resolution_cycle_probe(i, limits.probe_steps, limits);
    rec.check("resolution of R(0,1) is periodic", probe.outcome == ProbeOutcome::Periodic, probe.explanation);
    rec.check("period 1", probe.outcome == ProbeOutcome::Periodic && probe.period() == 1,
              "period " + std::to_string(probe.period()));
    rec.check("report certifies fd = infinity", w.wdim_infinite_certified == true);
  });
}

FixtureResult field_extension_fixture(const Limits& limits) {
  return Recorder("Triv(Z/2, ExtMod(GF(4))): Gaussian, not arithmetical").run([&](Recorder& rec) {
    const auto r = ring_from_spec("Triv(Z/2, ExtMod(GF(4)))", limits);
    const auto g = is_gaussian(r);
    rec.check("gaussian = true", g.holds, g.detail);
    const auto a = is_arithmetical(r, limits);
    rec.check("arithmetical = false", !a.holds, a.detail);
    ElementSet kernel(r->order());
    for (Index e = 0; e < 4; ++e) kernel.insert(pair_index(4, 0, e));
    rec.check("witness ideal is 0 ∝ F4", a.witness && a.witness->elements() == kernel,
              a.witness ? a.witness->describe_elements() : "no witness");
  });
}

FixtureResult residue_module_fixture(const Limits& limits) {
  return Recorder("Z/4 with its residue field as module").run([&](Recorder& rec) {
    const auto r = ring_from_spec("Triv(Z/4, QuotMod(2))", limits);
    const auto a = make_cyclic_ring(4, limits);
    const bool gr = is_gaussian(r).holds, ga = is_gaussian(a).holds;
    rec.check("gaussian(Triv(Z/4, QuotMod(2))) = gaussian(Z/4)", gr == ga, yes_no(gr) + " vs " + yes_no(ga));
    rec.check("gaussian(Z/4) = true", ga);
    // Z/2 as a Z/4-module through the prime-ring map, the same module as Z/4/(2)
    const auto s = ring_from_spec("Triv(Z/4, ExtMod(Z/2))", limits);
    rec.check("Triv(Z/4, ExtMod(Z/2)) is a total quotient ring", is_total_quotient_ring(*s).holds);
    rec.check("Triv(Z/4, QuotMod(2)) is a total quotient ring", is_total_quotient_ring(*r).holds);
  });
}

FixtureResult minimal_witness_degree_fixture(const Limits& limits) {
  return Recorder("minimal content witness degrees, order <= 16").run([&](Recorder& rec) {
    std::size_t non_gaussian = 0;
    for (const auto& u : enumerate_universe({16, 2}, limits)) {
      const auto r = eval_spec(u.ast, limits);
      if (is_gaussian(r).holds) continue;
      ++non_gaussian;
      const auto constant = content_equality_scan(r, 0, 3, limits);
      const auto linear = content_equality_scan(r, 1, 1, limits);
      std::string detail = "no witness";
      if (linear.witness)
        detail = "f = " + linear.witness->first.to_string() + ", g = " + linear.witness->second.to_string();
      rec.check(u.spec + ": no witness with a constant factor", constant.holds);
      rec.check(u.spec + ": witness at degrees (1, 1)", !linear.holds, detail);
    }
    rec.check("non-Gaussian rings found", non_gaussian > 0, std::to_string(non_gaussian));

    // the documented square-zero pair is itself a witness
    const auto r = ring_from_spec("Triv(Z/4, Self)", limits);
    const Polynomial f(r, {pair_index(4, 2, 0), pair_index(4, 2, 1)});
    rec.check("Triv(Z/4, Self): f = g = (2,0) + (2,1)X is a witness", !content_identity_holds(f, f), f.to_string());
  });
}

TransferAudit transfer_audit(const std::vector<UniverseEntry>& universe, const Limits& limits) {
  TransferAudit audit;
  for (const auto& u : universe) {
    if (u.ast.kind != RingSpec::Kind::Trivial) continue;
    try {
      const auto check = verify_transfer_theorems(retract_of(u.ast, limits), limits);
      ++audit.retracts;
      for (const auto& v : check.verdicts) {
        if (v.verdict == Verdict::Holds) ++audit.holds;
        if (v.verdict == Verdict::Vacuous) ++audit.vacuous;
        if (v.verdict == Verdict::Violated) {
          ++audit.violated;
          audit.violations.push_back(u.spec + ": " + v.name + ": " + v.detail);
        }
      }
    } catch (const CapExceeded& e) {
      audit.errors.push_back(u.spec + ": " + e.what());
    }
  }
  return audit;
}

FixtureResult transfer_harness_fixture(const UniverseParams& params, const Limits& limits) {
  return Recorder("transfer harness over canonical retracts, order <= " + std::to_string(params.max_order))
      .run([&](Recorder& rec) {
        const auto audit = transfer_audit(enumerate_universe(params, limits), limits);
        rec.check("retracts examined", audit.retracts > 0, std::to_string(audit.retracts));
        std::string detail = std::to_string(audit.holds) + " HOLDS, " + std::to_string(audit.vacuous) + " VACUOUS";
        if (!audit.violations.empty()) detail += "; first: " + audit.violations.front();
        rec.check("no VIOLATED verdict", audit.violated == 0, detail);
        rec.check("no retract skipped", audit.errors.empty(), audit.errors.empty() ? "" : audit.errors.front());
      });
}

HierarchyAudit hierarchy_audit(const Catalog& catalog) {
  HierarchyAudit audit;
  for (const auto& e : catalog.entries) {
    if (!e.report) {
      audit.errors.push_back(e.spec + ": " + e.error);
      continue;
    }
    ++audit.rings;
    if (auto v = chain_violation(*e.report)) audit.violations.push_back(e.spec + ": " + *v);
  }
  return audit;
}

std::vector<FixtureResult> run_suite(const Limits& limits) {
  std::vector<FixtureResult> out;
  out.push_back(square_zero_content_fixture(2, limits));
  out.push_back(square_zero_content_fixture(3, limits));
  out.push_back(self_idealization_fixture(limits));
  out.push_back(field_extension_fixture(limits));
  out.push_back(residue_module_fixture(limits));
  out.push_back(minimal_witness_degree_fixture(limits));
  out.push_back(transfer_harness_fixture({16, 2}, limits));
  return out;
}

}  // namespace pruferlab
