#pragma once

/**
 * @file suite.hpp
 * @brief Named ring fixtures with their expected flags and witnesses, the
 * transfer harness over canonical retracts, and the universe audits.
 */

#include <string>
#include <vector>

#include "pruferlab/retract.hpp"
#include "pruferlab/zoo.hpp"

namespace pruferlab {

struct Check {
  std::string what;
  bool passed = false;
  std::string detail;
};

struct FixtureResult {
  std::string name;
  std::vector<Check> checks;
  double ms = 0;

  bool passed() const;
};

/// R = Z/2^i ∝ Z/2^i and f = (2^{i-1}, 0) + (2^{i-1}, 1)X: f^2 = 0 while
/// C(f)^2 = R(0, 2^{i-1}) != 0, so R is Prüfer and a total quotient ring but not Gaussian.
FixtureResult square_zero_content_fixture(int i, const Limits& limits = {});

/// F2 ∝ F2 is arithmetical with wdim > 1; the resolution of R(0,1) is periodic of period 1.
FixtureResult self_idealization_fixture(const Limits& limits = {});

/// F2 ∝ F4 is Gaussian but not arithmetical; 0 ∝ F4 is not principal.
FixtureResult field_extension_fixture(const Limits& limits = {});

/// Z/4 ∝ Z/4/(2) is Gaussian exactly as Z/4 is; Z/4 ∝ Z/2 is a total quotient ring.
FixtureResult residue_module_fixture(const Limits& limits = {});

/// Every non-Gaussian universe ring of order <= 16 has a content witness of
/// degrees (1, 1) and none with a constant factor; lists each first witness.
FixtureResult minimal_witness_degree_fixture(const Limits& limits = {});

struct TransferAudit {
  std::size_t retracts = 0;
  std::size_t holds = 0;
  std::size_t vacuous = 0;
  std::size_t violated = 0;
  std::vector<std::string> violations;  ///< "spec: verdict name: detail"
  std::vector<std::string> errors;      ///< retracts skipped on a resource cap
};

/// verify_transfer_theorems on the canonical retract of every Triv entry.
TransferAudit transfer_audit(const std::vector<UniverseEntry>& universe, const Limits& limits = {});

FixtureResult transfer_harness_fixture(const UniverseParams& params, const Limits& limits = {});

struct HierarchyAudit {
  std::size_t rings = 0;
  std::vector<std::string> violations;  ///< "spec: implication"
  std::vector<std::string> errors;
};

HierarchyAudit hierarchy_audit(const Catalog& catalog);

/// All fixtures in a fixed order; the transfer harness runs over the order <= 16 universe.
std::vector<FixtureResult> run_suite(const Limits& limits = {});

}  // namespace pruferlab
