#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pruferlab/ring.hpp"

namespace pruferlab {

enum class ModuleKind { Regular, Quotient, DirectSum, Extension, Ideal };

struct ModuleData {
  RingPtr base;
  std::size_t order = 0;
  std::vector<Index> add;     ///< order*order
  std::vector<Index> action;  ///< |base|*order, entry [a*order + e] = a·e
  std::vector<std::string> labels;
  std::string spec;
  ModuleKind kind = ModuleKind::Regular;
};

/// A finite module over a finite ring, stored as tables. Element 0 is the zero.
class FiniteModule {
 public:
  explicit FiniteModule(ModuleData data);

  const RingPtr& base() const noexcept { return base_; }
  std::size_t order() const noexcept { return order_; }
  bool is_zero() const noexcept { return order_ == 1; }
  ModuleKind kind() const noexcept { return kind_; }
  const std::string& spec() const noexcept { return spec_; }
  const std::string& label(Index e) const { return labels_.at(e); }

  Index zero() const noexcept { return 0; }
  Index add(Index e, Index f) const noexcept { return add_[e * order_ + f]; }
  Index act(Index a, Index e) const noexcept { return action_[a * order_ + e]; }

 private:
  RingPtr base_;
  std::size_t order_;
  std::vector<Index> add_, action_;
  std::vector<std::string> labels_;
  std::string spec_;
  ModuleKind kind_;
};

/// A as a module over itself ("Self").
ModulePtr make_regular_module(const RingPtr& a);

/// A / I ("QuotMod"). The spec lists the generators of I.
ModulePtr make_quotient_module(const Ideal& ideal);

/// Direct sum; an empty list gives the zero module.
ModulePtr make_direct_sum(const RingPtr& a, std::span<const ModulePtr> parts);

/// A ring K viewed as an A-module through the prime-ring map A -> K, k·1_A ↦ k·1_K
/// ("ExtMod"). Requires the additive group of A to be generated by 1 and the
/// characteristic of K to divide |A|; throws InvalidArgument otherwise.
ModulePtr make_extension_module(const RingPtr& a, const RingPtr& k, const Limits& limits = {});

/// An ideal viewed as an A-module (elements in increasing index order).
ModulePtr make_ideal_module(const Ideal& ideal);

/// Exhaustive scan of the module axioms. Checks needing |A|^2 |E| work are
/// skipped when that exceeds `budget`.
std::optional<std::string> check_module_axioms(const FiniteModule& m,
                                               std::uint64_t budget = std::uint64_t{1} << 26);

}  // namespace pruferlab
