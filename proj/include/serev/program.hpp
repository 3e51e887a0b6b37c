#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "serev/alphabet.hpp"

namespace serev {

/// Syntactic class, ordered by generality: NLP ⊂ DLP ⊂ GLP.
enum class ProgramClass { nlp = 0, dlp = 1, glp = 2 };

std::string_view to_string(ProgramClass c);
/// Accepts "nlp", "dlp", "glp" in any case.
ProgramClass parse_program_class(std::string_view text);

inline ProgramClass join(ProgramClass a, ProgramClass b) { return a < b ? b : a; }

/// H+ ; not H- :- B+, not B-.  Constants never appear after normalization; an
/// empty head is a constraint.
struct Rule {
  AtomSet head_pos;
  AtomSet head_neg;
  AtomSet body_pos;
  AtomSet body_neg;

  bool negation_free() const { return head_neg.empty() && body_neg.empty(); }
  AtomSet atoms() const { return head_pos | head_neg | body_pos | body_neg; }

  friend auto operator<=>(const Rule&, const Rule&) = default;
};

/// Most specific class a single rule belongs to.
ProgramClass classify(const Rule& r);

/// Finite set of rules over a fixed alphabet. Immutable after construction.
class Program {
 public:
  Program() = default;
  /// Duplicate rules are dropped, first occurrence order is kept. Throws
  /// AlphabetMismatch if a rule mentions a position outside the alphabet.
  Program(Alphabet alphabet, std::vector<Rule> rules);

  const Alphabet& alphabet() const { return alphabet_; }
  std::span<const Rule> rules() const { return rules_; }
  std::size_t size() const { return rules_.size(); }
  bool empty() const { return rules_.empty(); }
  ProgramClass class_tag() const { return class_; }

  /// Same alphabet and same set of rules, ignoring order.
  bool same_rules(const Program& other) const;

 private:
  Alphabet alphabet_;
  std::vector<Rule> rules_;
  ProgramClass class_ = ProgramClass::nlp;
};

ProgramClass classify(const Program& p);

/// Same rules plus `a :- a.` for the first atom; unchanged over an empty
/// alphabet.
Program with_tautology(const Program& p);

}  // namespace serev
