#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "serev/alphabet.hpp"
#include "serev/model_set.hpp"
#include "serev/program.hpp"

namespace serev {

/// Parses program text:
///
///   program   := (directive | rule)*
///   directive := "#atoms" name ("," name)* "."
///   rule      := [head] [":-" body] "."
///   head      := lit (";" lit)*
///   body      := lit ("," lit)*
///   lit       := atom | "not" atom | "true" | "false" | "not true" | "not false"
///
/// `%` starts a comment. Constants are removed on the fly:
///   body: true, not false      dropped
///   body: false, not true      rule deleted
///   head: true, not false      rule deleted
///   head: false, not true      dropped
/// Without `alphabet`, the alphabet is the sorted set of atoms in the text and
/// in `#atoms` directives. With it, every atom must belong to it.
/// Throws ParseError (with line/column), AlphabetMismatch or Error.
Program parse_program(std::string_view text, const std::optional<Alphabet>& alphabet = std::nullopt);

/// Atoms mentioned in program text, including `#atoms` directives. Sorted,
/// without duplicates.
std::vector<std::string> program_atoms(std::string_view text);

/// Parses a propositional formula over ~ & | -> <-> ( ) true false, binding
/// from tightest to loosest in that order; -> associates to the right.
/// Returns its models over `alphabet`.
ModelSet parse_formula(std::string_view text, const Alphabet& alphabet);

/// Atoms mentioned in formula text. Sorted, without duplicates.
std::vector<std::string> formula_atoms(std::string_view text);

/// One rule per line, no trailing newline. A `#atoms` line comes first when
/// some atom of the alphabet occurs in no rule. Constants are never emitted
/// except `false` for an empty head.
std::string render_program(const Program& p);
std::string render_rule(const Rule& r, const Alphabet& alphabet);

/// Canonical DNF of a model set: "false", "true", or minterms in increasing
/// order, e.g. "(p & ~q) | (~p & q)".
std::string render_dnf(const ModelSet& models, const Alphabet& alphabet);

}  // namespace serev
