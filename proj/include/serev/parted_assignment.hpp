#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>

#include "serev/model_set.hpp"
#include "serev/prop_revision.hpp"
#include "serev/se_set.hpp"
#include "serev/selection.hpp"

namespace serev {

/// Preorder provider: sees only mod(P).
using ModPreorderFn = std::function<TotalPreorder(const ModelSet& models)>;
/// Here provider: sees only SE(P) and Y, returns P(Y).
using HereFn = std::function<ModelSet(const SESet& se, Interpretation y)>;

/// A failing condition of an assignment together with the interpretations
/// that witness it. Unused coordinates are empty.
struct AssignmentWitness {
  std::string condition;
  Interpretation x;
  Interpretation y;
  Interpretation z;
  std::string message;
};

/// Pair of a preorder provider P ↦ ≤P and a here provider (P, Y) ↦ P(Y).
/// Programs enter only through mod(P) and SE(P), so the result can never
/// depend on syntax. Copies share the validation cache.
class PartedAssignment {
 public:
  PartedAssignment(std::string name, ModPreorderFn preorder, HereFn here);

  /// P(Y) = SE(P)(Y) when Y ⊨ P, f(Y) otherwise; ≤P taken from `op`.
  static PartedAssignment from_prop_based(const PropOperator& op, const SelectionFunction& f);

  const std::string& name() const;

  /// Unchecked provider calls.
  TotalPreorder preorder(const ModelSet& models) const;
  ModelSet here(const SESet& se, Interpretation y) const;

  /// First violation, for SE(P) = `se`, of
  ///   (1) models of P are equally plausible,
  ///   (2) models of P are strictly below non-models,
  ///   (a) Y ∈ P(Y), (b) P(Y) ⊆ 2^Y,
  ///   (c) (X, Y) ∈ SE(P) implies X ∈ P(Y),
  ///   (d) Y ⊨ P and (X, Y) ∉ SE(P) imply X ∉ P(Y).
  std::optional<AssignmentWitness> find_violation(const SESet& se) const;
  /// Throws AssignmentViolation on the first violation. Results are cached
  /// per SE set.
  void check(const SESet& se) const;

  /// (f): X ∈ P(Y), Y ≃P Z and Y ⊆ Z imply X ∈ P(Z).
  std::optional<AssignmentWitness> check_complete(const SESet& se) const;
  /// (g): X, Y ∈ P(Z) imply X ∩ Y ∈ P(Z).
  std::optional<AssignmentWitness> check_normal(const SESet& se) const;

 private:
  struct State;
  std::shared_ptr<State> state_;
};

}  // namespace serev
