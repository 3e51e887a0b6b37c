#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "serev/alphabet.hpp"
#include "serev/lp_revision.hpp"
#include "serev/parted_assignment.hpp"
#include "serev/prop_revision.hpp"
#include "serev/se_set.hpp"

namespace serev {

struct CheckMode {
  bool exhaustive = true;
  std::uint64_t seed = 0;
  std::size_t count = 10000;
  /// 0 means one worker per hardware thread.
  unsigned threads = 0;

  static CheckMode all() { return {}; }
  static CheckMode seeded(std::uint64_t seed, std::size_t count) { return {false, seed, count, 0}; }
};

struct KmCase {
  ModelSet phi;
  ModelSet psi1;
  ModelSet psi2;
};

/// For RA1-RA4 only p and q matter.
struct RaCase {
  SESet p;
  SESet q;
  SESet r;
};

struct PostulateReport {
  std::string id;
  bool pass = true;
  std::size_t cases = 0;
  std::optional<KmCase> km_witness;
  std::optional<RaCase> ra_witness;
};

/// Is postulate `id` ("R1".."R6") violated on this case?
bool km_violated(const std::string& id, const PropOperator& op, const KmCase& c);
/// Is postulate `id` ("RA1".."RA6", or "WD" for a result that is not
/// well-defined) violated on this case?
bool ra_violated(const std::string& id, const LPOperator& op, const RaCase& c);

/// Re-evaluates a failing report's witness. True when the failure reproduces.
bool replay(const PropOperator& op, const PostulateReport& r);
bool replay(const LPOperator& op, const PostulateReport& r);

/// R1-R6. Exhaustive mode needs width <= 2 and ranges over all model-set
/// triples; R1-R4 are evaluated on (φ, ψ1) only.
std::vector<PostulateReport> check_km(const PropOperator& op, std::size_t width, CheckMode mode);

/// RA1-RA6 over SE sets of the operator's class (inputs are the SE models of
/// synthesized programs). Exhaustive mode needs width <= 2. RA4 compares each
/// canonical program with a strongly equivalent variant carrying an extra
/// tautology. An extra "WD" report is appended only when some result is not
/// well-defined. Reports are identical for any worker count.
std::vector<PostulateReport> check_ra(const LPOperator& op, std::size_t width, CheckMode mode);

bool all_pass(const std::vector<PostulateReport>& reports);

/// Reads a parted assignment off an operator:
///   Y ≤P Y'  iff  Y ∈ mod(op(P, {(Y,Y), (Y',Y')}))
///   P(Y) = {X ⊆ Y | (X, Y) ∈ op(P, {(X,Y), (Y,Y)})}
/// where P's SE set for a model set is its diagonal (closed to the
/// operator's class). Providers evaluate lazily and throw AssignmentViolation
/// ("total" or "transitive") when the relation is not a total preorder.
PartedAssignment extract_assignment(const LPOperator& op, std::size_t width);

/// Total preorder over SE interpretations, as one rank per canonical index.
class CompliantPreorder {
 public:
  CompliantPreorder(std::size_t width, std::vector<std::uint32_t> ranks);
  std::size_t width() const { return width_; }
  std::uint32_t rank(SEInterpretation p) const { return ranks_.at(se_index(width_, p)); }
  SESet min(const SESet& s) const;
  /// Same relation, ignoring the rank values themselves.
  bool same_order(const CompliantPreorder& other) const;
  const std::vector<std::uint32_t>& ranks() const { return ranks_; }

 private:
  std::size_t width_;
  std::vector<std::uint32_t> ranks_;
};

/// rank(X, Y) = rank of Y under ≤P when X ∈ P(Y), else one above the top
/// rank. Checks the assignment for P first.
CompliantPreorder compliant_from_parted(const PartedAssignment& a, const SESet& p);

/// Further preorders inducing the same revisions for P: the pairs
/// (X, Y) with X ∉ P(Y) are moved to other levels above (Y, Y). Returns the
/// base preorder followed by three such variants.
std::vector<CompliantPreorder> compliant_variants(const PartedAssignment& a, const SESet& p);

/// First violated condition among
///   (1) SE models of P share one rank, (2) they lie strictly below the rest,
///   (4) (Y, Y) ≤ (X, Y);
/// empty when all hold.
std::optional<std::string> compliant_violation(const CompliantPreorder& c, const SESet& p);

/// (i) (Y,Y) ≤* (Y',Y') iff Y ≤P Y', and (ii) (X,Y) ≤* (Y,Y) iff X ∈ P(Y).
bool sigma_related(const CompliantPreorder& c, const PartedAssignment& a, const SESet& p);

/// First Q (by position) where min(Q, ≤*) differs from the parted
/// comprehension.
std::optional<std::size_t> compliant_mismatch(const CompliantPreorder& c, const PartedAssignment& a,
                                              const SESet& p, const std::vector<SESet>& qs);

/// A pair of programs (as SE sets) on which two propositional-based operators
/// differ, built as in the uniqueness argument: for different selection
/// functions Q = {(X,Y), (Y,Y)} and P avoids Y; for different propositional
/// operators P and Q are diagonals of separating model sets. Empty when the
/// operators coincide at this width.
struct ProgramPair {
  SESet p;
  SESet q;
};
std::optional<ProgramPair> distinguishing_pair(const LPOperator& a, const LPOperator& b, std::size_t width);

/// When f1 ⋢ f2: a pair with AS(P ⋆1 Q) ⊄ AS(P ⋆2 Q) for the operators built
/// from f1, f2 and any KM operator. Empty when f1 ⊑ f2.
std::optional<ProgramPair> lattice_witness(const SelectionFunction& f1, const SelectionFunction& f2,
                                           std::size_t width);

/// When f is not skeptical: a pair with AS(P ⋆ Q) ⊄ AS(Q). Empty otherwise.
std::optional<ProgramPair> skeptical_witness(const SelectionFunction& f, std::size_t width);

}  // namespace serev
