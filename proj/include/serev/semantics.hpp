#pragma once

#include "serev/alphabet.hpp"
#include "serev/model_set.hpp"
#include "serev/program.hpp"
#include "serev/se_set.hpp"

namespace serev {

/// Classical satisfaction: if B+ ⊆ Y and B- ∩ Y = ∅ then H+ ∩ Y ≠ ∅ or H- ⊄ Y.
bool satisfies(Interpretation y, const Rule& r);
bool satisfies(Interpretation y, const Program& p);

ModelSet classical_models(const Program& p);

/// {H+ :- B+ | H- ⊆ Y, B- ∩ Y = ∅}.
Program reduct(const Program& p, Interpretation y);

/// Y such that Y is a ⊆-minimal model of the reduct relative to Y.
ModelSet answer_sets(const Program& p);
/// Same result read off an SE set: (Y, Y) ∈ S with no (X, Y) ∈ S, X ⊊ Y.
ModelSet answer_sets_from_se(const SESet& s);

/// {(X, Y) | X ⊆ Y, Y ⊨ P, X ⊨ P^Y}.
SESet se_models(const Program& p);

/// {X | (X, Y) ∈ SE(P) for some Y}.
ModelSet here_projection(const Program& p);

SEProperties se_set_properties(const SESet& s);

enum class ClosureTarget { complete, hi_closed };

/// Least superset of `s` with the target property. Throws
/// PreconditionViolation unless `s` is well-defined.
SESet closure(const SESet& s, ClosureTarget target);

/// Most specific class whose programs can express `s`: NLP when here-closed,
/// DLP when complete, GLP otherwise. Throws PreconditionViolation when `s` is
/// not well-defined.
ProgramClass expressible_class(const SESet& s);

/// Program of class `c` over `alphabet` whose SE models are exactly `s`.
/// Rules are emitted in a fixed order: one constraint
///   :- Y, not (A∖Y).
/// per missing there-world Y, then one rule per missing (X, Y) with (Y, Y) ∈ s
/// in (Y, X) order:
///   GLP  (Y∖X) ; not Y :- X, not (A∖Y).
///   DLP  (Y∖X) :- X, not (A∖Y).
///   NLP  a :- X, not (A∖Y), where a is the least atom of T∖X and T is the
///        intersection of all U ⊇ X with (U, Y) ∈ s.
/// Throws PreconditionViolation naming the missing property when `s` is not
/// well-defined (GLP), complete (DLP) or here-closed (NLP).
Program synthesize(const SESet& s, ProgramClass c, const Alphabet& alphabet);

/// Synthesizes in expressible_class(s).
Program synthesize(const SESet& s, const Alphabet& alphabet);

/// SE(P) = SE(Q). Throws AlphabetMismatch on different alphabets.
bool strong_equiv(const Program& p, const Program& q);
/// SE(P) ⊆ SE(Q). Throws AlphabetMismatch on different alphabets.
bool se_subset(const Program& p, const Program& q);

}  // namespace serev
