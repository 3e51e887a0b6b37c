#include "serev/program.hpp"

#include <algorithm>
#include <cctype>

#include "serev/errors.hpp"

namespace serev {

std::string_view to_string(ProgramClass c) {
  switch (c) {
    case ProgramClass::nlp: return "NLP";
    case ProgramClass::dlp: return "DLP";
    case ProgramClass::glp: return "GLP";
  }
  return "GLP";
}

ProgramClass parse_program_class(std::string_view text) {
  std::string lower(text);
  for (auto& c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (lower == "nlp") return ProgramClass::nlp;
  if (lower == "dlp") return ProgramClass::dlp;
  if (lower == "glp") return ProgramClass::glp;
  throw Error("unknown program class '" + std::string(text) + "' (expected nlp, dlp or glp)");
}

ProgramClass classify(const Rule& r) {
  if (!r.head_neg.empty()) return ProgramClass::glp;
  if (r.head_pos.size() > 1) return ProgramClass::dlp;
  return ProgramClass::nlp;
}

Program::Program(Alphabet alphabet, std::vector<Rule> rules) : alphabet_(std::move(alphabet)) {
  const AtomSet all = universe(alphabet_.size());
  rules_.reserve(rules.size());
  for (const auto& r : rules) {
    if (!r.atoms().subset_of(all)) throw AlphabetMismatch("rule mentions an atom outside the alphabet");
    if (std::find(rules_.begin(), rules_.end(), r) == rules_.end()) rules_.push_back(r);
  }
  for (const auto& r : rules_) class_ = join(class_, classify(r));
}

bool Program::same_rules(const Program& other) const {
  if (!(alphabet_ == other.alphabet_) || rules_.size() != other.rules_.size()) return false;
  auto a = rules_;
  auto b = other.rules_;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

ProgramClass classify(const Program& p) { return p.class_tag(); }

Program with_tautology(const Program& p) {
  std::vector<Rule> rules(p.rules().begin(), p.rules().end());
  if (p.alphabet().size() > 0) {
    // a :- a.
    rules.push_back(Rule{AtomSet::singleton(0), {}, AtomSet::singleton(0), {}});
  }
  return Program(p.alphabet(), std::move(rules));
}

}  // namespace serev
