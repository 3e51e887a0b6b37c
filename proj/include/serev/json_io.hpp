#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "serev/alphabet.hpp"
#include "serev/model_set.hpp"
#include "serev/parted_assignment.hpp"
#include "serev/prop_revision.hpp"
#include "serev/se_set.hpp"
#include "serev/verify.hpp"

namespace serev {

using Json = nlohmann::ordered_json;

Json atoms_json(const Alphabet& a, AtomSet set);
AtomSet atoms_from_json(const Json& j, const Alphabet& a);

/// {"atoms": [...], "pairs": [{"here": [...], "there": [...]}, ...],
///  "flags": {"well_defined": b, "complete": b, "hi_closed": b}}
/// Pairs in canonical order.
Json to_json(const SESet& s, const Alphabet& a);
/// Reads the "pairs" member; "flags" is ignored.
SESet se_set_from_json(const Json& j, const Alphabet& a);

/// {"atoms": [...], "models": [[...], ...]}
Json to_json(const ModelSet& m, const Alphabet& a);
ModelSet model_set_from_json(const Json& j, const Alphabet& a);

/// [{"postulate", "pass", "cases", "witness"?}, ...]. RA witnesses list the
/// SE sets of P, Q (and R for RA5/RA6) and their canonical programs.
Json to_json(const std::vector<PostulateReport>& reports, const Alphabet& a);

/// Faithful assignment file:
///   {"assignments": [{"phi_models": [[...], ...], "ranks": {"{p,q}": 1, ...}}, ...],
///    "fallback": "dalal" | "drastic"}
/// A single {"phi_models", "ranks"} object is also accepted. Formulas whose
/// model set is not listed use the fallback (dalal by default). Interpretations
/// missing from "ranks" get the rank one above the largest listed rank.
PropOperator faithful_from_json(const Json& j, const Alphabet& a, std::string name);

/// Parted assignment file:
///   {"preorders": [{"models": [[...], ...], "ranks": {"{}": 2, ...}}, ...],
///    "here": [{"se": [{"here": [...], "there": [...]}, ...],
///              "sets": {"{q}": [[], ["q"]], ...}}, ...],
///    "fallback": "<selection>:<operator>"}
/// Preorders are keyed by mod(P), here tables by SE(P). Anything not listed
/// falls back to the propositional-based assignment named by "fallback"
/// (default "skeptical:dalal").
PartedAssignment parted_from_json(const Json& j, const Alphabet& a, std::string name);

/// "<selection>:<operator>" with selection skeptical|brave and operator
/// drastic|dalal.
PartedAssignment prop_based_assignment(const std::string& spec);

}  // namespace serev
