#pragma once

/**
 * @file retract.hpp
 * @brief Subring retracts A ⊆ R with an A-linear retraction φ: R -> A that is
 * the identity on A, their kernel conditions, and a mechanical check of the
 * property transfer statements on a concrete retract.
 */

#include <optional>
#include <string>
#include <vector>

#include "pruferlab/deciders.hpp"
#include "pruferlab/module.hpp"

namespace pruferlab {

struct SubringRetract {
  RingPtr a;
  RingPtr r;
  std::vector<Index> embed;       ///< ι: A -> R
  std::vector<Index> retraction;  ///< φ: R -> A
  ElementSet kernel;              ///< Ker(φ) ⊆ R
  ModulePtr kernel_module;        ///< Ker(φ) as an A-module, A acting through ι
  ModulePtr extension_module;     ///< E when R = A ∝ E was built canonically, else null
};

/// Validates ι as an injective unital ring homomorphism, φ∘ι = id and the
/// A-linearity φ(ι(a)x + y) = aφ(x) + φ(y). Throws InvalidArgument naming the
/// first failing axiom and its witness elements.
SubringRetract build_retract(const RingPtr& a, const RingPtr& r, std::vector<Index> embed,
                             std::vector<Index> retraction);

/// R = A ∝ E with ι(a) = (a, 0) and φ(a, e) = a; the kernel is 0 ∝ E.
SubringRetract canonical_trivial_retract(const RingPtr& a, const ModulePtr& e, const Limits& limits = {});

struct KernelConditions {
  /// ι(a)·k = 0 ⇒ k = 0 for every regular a ∈ A and k ∈ Ker(φ).
  bool torsion_free = true;
  std::optional<std::pair<Index, Index>> torsion_witness;  ///< (a in A, k in R)
  /// ι(M)·Ker(φ) = 0; empty unless A is local.
  std::optional<bool> maximal_ideal_kills_kernel;
  bool kernel_in_nilradical = true;
  bool kernel_square_zero = true;
  std::string note;
};

KernelConditions kernel_conditions(const SubringRetract& ret);

/// ι(M)·Ker(φ) = 0. Throws InvalidArgument when A is not local.
bool maximal_ideal_kills_kernel(const SubringRetract& ret);

enum class Verdict { Holds, Vacuous, Violated };
std::string to_string(Verdict v);

struct TransferVerdict {
  std::string name;
  std::string statement;
  Verdict verdict = Verdict::Vacuous;
  std::string detail;
};

struct TransferCheck {
  std::vector<TransferVerdict> verdicts;
  PropertyReport a_report;
  PropertyReport r_report;
  KernelConditions kernel;

  bool any_violated() const;
};

/// Evaluates each transfer statement as an implication between decided flags:
/// Holds when hypotheses and conclusion hold, Vacuous when a hypothesis fails
/// or the statement does not apply to this retract, Violated otherwise.
TransferCheck verify_transfer_theorems(const SubringRetract& ret, const Limits& limits = {});

}  // namespace pruferlab
