#pragma once

#include "serev/parser.hpp"
#include "serev/parted_assignment.hpp"
#include "serev/prop_revision.hpp"
#include "serev/selection.hpp"
#include "serev/semantics.hpp"

namespace fixture {

using namespace serev;

// Parted assignment for the program {p ← not q, ⊥ ← p, q}:
// p ≃ q < pq < ∅ and P(∅) = {∅}, P(p) = {p}, P(q) = {∅, q}, P(pq) = {p, pq}.
// Dalal/skeptical for every other program.
inline PartedAssignment tied_pq_assignment() {
  const SESet focus = se_models(parse_program("p :- not q.\n:- p, q.", Alphabet({"p", "q"})));
  const PartedAssignment base = PartedAssignment::from_prop_based(PropOperator::dalal(), SelectionFunction::skeptical());
  return PartedAssignment(
      "tied-pq",
      [focus, base](const ModelSet& m) {
        if (m == focus.there_worlds()) return TotalPreorder(2, {2, 0, 0, 1});
        return base.preorder(m);
      },
      [focus, base](const SESet& s, Interpretation y) {
        if (s != focus) return base.here(s, y);
        switch (y.bits) {
          case 0: return ModelSet(2, {AtomSet{0}});
          case 1: return ModelSet(2, {AtomSet{1}});
          case 2: return ModelSet(2, {AtomSet{0}, AtomSet{2}});
          default: return ModelSet(2, {AtomSet{1}, AtomSet{3}});
        }
      });
}

}  // namespace fixture
