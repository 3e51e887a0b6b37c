#pragma once

#include <memory>
#include <optional>
#include <string>

#include "serev/parted_assignment.hpp"
#include "serev/program.hpp"
#include "serev/prop_revision.hpp"
#include "serev/se_set.hpp"
#include "serev/selection.hpp"

namespace serev {

/// SE(P) ∩ SE(Q).
SESet expand(const SESet& p, const SESet& q);
/// Program with SE(P) ∩ SE(Q), synthesized in the join of the input classes.
Program expand(const Program& p, const Program& q);

/// SE(P) ∩ SE(Q) if nonempty, else SE(Q).
SESet drastic_lp_revise(const SESet& p, const SESet& q);

/// Expansion when consistent, else
/// {(X, Y) ∈ SE(Q) | Y ∈ mod(P) ∘ mod(Q), X ∈ f(Y)}.
/// No validation of f.
SESet prop_based_revise(const PropOperator& circ, const SelectionFunction& f, const SESet& p, const SESet& q);

/// {(X, Y) ∈ SE(Q) | Y ∈ mod(P) ∘Dal mod(Q), and X ⊊ Y implies
///  X ∈ α(P,Y) ∘Dal 2^Y}, α(P,Y) = {X | (X, Y') ∈ SE(P), Y' ∈ {Y} ∘Dal mod(P)}.
SESet cardinality_revise(const SESet& p, const SESet& q);

/// {(X, Y) ∈ SE(Q) | Y ∈ min(mod(Q), ≤P), X ∈ P(Y)}. Checks the assignment
/// for P first (throws AssignmentViolation).
SESet parted_revise(const PartedAssignment& a, const SESet& p, const SESet& q);

/// parted_revise restricted to DLPs (complete sets) or NLPs (here-closed
/// sets). Additionally checks (f), and (g) for NLP; throws
/// AssignmentViolation naming the condition and witness, or
/// PreconditionViolation when an input is outside the class.
SESet class_revise(const PartedAssignment& a, const SESet& p, const SESet& q, ProgramClass c);

/// Revision operator on programs, computed on SE sets.
class LPOperator {
 public:
  enum class Kind { drastic_lp, prop_based, cardinality, parted, dlp, nlp };

  static LPOperator drastic_lp();
  /// apply() throws AssignmentViolation naming the offending Y when f is not
  /// a valid selection function at the input width.
  static LPOperator prop_based(PropOperator circ, SelectionFunction f);
  /// Same operator without validating f.
  static LPOperator prop_based_unchecked(PropOperator circ, SelectionFunction f);
  static LPOperator cardinality();
  static LPOperator parted(PartedAssignment a);
  static LPOperator dlp(PartedAssignment a);
  static LPOperator nlp(PartedAssignment a);

  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  ProgramClass class_domain() const;

  SESet apply(const SESet& p, const SESet& q) const;

  /// Revised program, synthesized in the most specific class of the result
  /// (never more general than class_domain()). Throws AlphabetMismatch on
  /// different alphabets.
  Program revise(const Program& p, const Program& q) const;

  const PropOperator* prop_operator() const { return circ_ ? &*circ_ : nullptr; }
  const SelectionFunction* selection() const { return f_ ? &*f_ : nullptr; }
  const PartedAssignment* assignment() const { return assignment_ ? &*assignment_ : nullptr; }

 private:
  LPOperator(Kind kind, std::string name) : kind_(kind), name_(std::move(name)) {}
  void validate_selection(std::size_t width) const;

  Kind kind_;
  std::string name_;
  std::optional<PropOperator> circ_;
  std::optional<SelectionFunction> f_;
  std::optional<PartedAssignment> assignment_;
  bool check_f_ = false;
  struct Cache;
  std::shared_ptr<Cache> cache_;
};

/// Does (X, Y) belong to SE(op(P, Q))?
bool mc_se(const LPOperator& op, const Program& p, const Program& q, SEInterpretation pair);

}  // namespace serev
