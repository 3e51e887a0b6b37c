#include "serev/parser.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "serev/errors.hpp"

namespace serev {
namespace {

enum class Tok {
  ident, kw_not, kw_true, kw_false, kw_atoms,
  arrow_if, dot, comma, semi,
  tilde, amp, bar, implies, iff, lparen, rparen,
  end
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::string describe(const Token& t) {
  if (t.kind == Tok::end) return "end of input";
  return "'" + t.text + "'";
}

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1, i = 0;
  auto advance = [&](std::size_t k) {
    for (std::size_t j = 0; j < k; ++j) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  auto starts = [&](std::string_view s) { return src.substr(i, s.size()) == s; };
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '%') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    Token t{Tok::end, "", line, col};
    if (std::islower(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      t.text = std::string(src.substr(i, j - i));
      t.kind = t.text == "not" ? Tok::kw_not
             : t.text == "true" ? Tok::kw_true
             : t.text == "false" ? Tok::kw_false
             : Tok::ident;
      advance(j - i);
      out.push_back(std::move(t));
      continue;
    }
    struct Sym { std::string_view text; Tok kind; };
    static constexpr Sym syms[] = {
        {"#atoms", Tok::kw_atoms}, {"<->", Tok::iff}, {"->", Tok::implies}, {":-", Tok::arrow_if},
        {".", Tok::dot}, {",", Tok::comma}, {";", Tok::semi}, {"~", Tok::tilde},
        {"&", Tok::amp}, {"|", Tok::bar}, {"(", Tok::lparen}, {")", Tok::rparen},
    };
    bool matched = false;
    for (const auto& s : syms) {
      if (starts(s.text)) {
        t.kind = s.kind;
        t.text = std::string(s.text);
        advance(s.text.size());
        out.push_back(std::move(t));
        matched = true;
        break;
      }
    }
    if (matched) continue;
    if (std::isupper(static_cast<unsigned char>(c)) || std::isdigit(static_cast<unsigned char>(c)) || c == '_') {
      throw ParseError("atom names must start with a lowercase letter", line, col);
    }
    throw ParseError(std::string("unexpected character '") + c + "'", line, col);
  }
  out.push_back(Token{Tok::end, "", line, col});
  return out;
}

class Cursor {
 public:
  explicit Cursor(std::vector<Token> toks) : toks_(std::move(toks)) {}
  const Token& peek() const { return toks_[pos_]; }
  bool at(Tok k) const { return peek().kind == k; }
  Token take() { return toks_[pos_ == toks_.size() - 1 ? pos_ : pos_++]; }
  bool accept(Tok k) {
    if (!at(k)) return false;
    take();
    return true;
  }
  Token expect(Tok k, const char* what) {
    if (!at(k)) fail(std::string("expected ") + what + ", found " + describe(peek()));
    return take();
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, peek().line, peek().column);
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

// Program front-end. Literals keep their source position so alphabet errors
// can point at them.
enum class LitKind { atom, top, bottom };

struct RawLit {
  LitKind kind;
  bool negated;
  std::string name;
  std::size_t line;
  std::size_t column;
};

struct RawRule {
  std::vector<RawLit> head;
  std::vector<RawLit> body;
};

struct RawProgram {
  std::vector<RawRule> rules;
  std::vector<Token> declared;
};

RawLit parse_lit(Cursor& cur) {
  const Token& first = cur.peek();
  RawLit lit{LitKind::atom, false, "", first.line, first.column};
  if (cur.accept(Tok::kw_not)) lit.negated = true;
  Token t = cur.take();
  switch (t.kind) {
    case Tok::ident: lit.name = t.text; break;
    case Tok::kw_true: lit.kind = LitKind::top; break;
    case Tok::kw_false: lit.kind = LitKind::bottom; break;
    default:
      throw ParseError("expected an atom, 'true' or 'false', found " + describe(t), t.line, t.column);
  }
  return lit;
}

RawProgram parse_raw(std::string_view text) {
  Cursor cur(lex(text));
  RawProgram out;
  while (!cur.at(Tok::end)) {
    if (cur.accept(Tok::kw_atoms)) {
      do {
        out.declared.push_back(cur.expect(Tok::ident, "an atom name"));
      } while (cur.accept(Tok::comma));
      cur.expect(Tok::dot, "'.'");
      continue;
    }
    RawRule rule;
    if (!cur.at(Tok::arrow_if) && !cur.at(Tok::dot)) {
      do {
        rule.head.push_back(parse_lit(cur));
      } while (cur.accept(Tok::semi));
    }
    if (cur.accept(Tok::arrow_if)) {
      do {
        rule.body.push_back(parse_lit(cur));
      } while (cur.accept(Tok::comma));
    }
    cur.expect(Tok::dot, "'.'");
    out.rules.push_back(std::move(rule));
  }
  return out;
}

// A constant literal is "true" when it denotes ⊤: `true` or `not false`.
bool denotes_top(const RawLit& l) {
  return (l.kind == LitKind::top && !l.negated) || (l.kind == LitKind::bottom && l.negated);
}

std::optional<Rule> normalize(const RawRule& raw, const Alphabet& alphabet) {
  Rule r;
  auto bit = [&](const RawLit& l) {
    auto idx = alphabet.index_of(l.name);
    if (!idx) {
      throw AlphabetMismatch(std::to_string(l.line) + ":" + std::to_string(l.column) + ": atom '" +
                             l.name + "' is not in the alphabet");
    }
    return AtomSet::singleton(*idx);
  };
  for (const auto& l : raw.head) {
    if (l.kind != LitKind::atom) {
      if (denotes_top(l)) return std::nullopt;
      continue;
    }
    (l.negated ? r.head_neg : r.head_pos) = (l.negated ? r.head_neg : r.head_pos) | bit(l);
  }
  for (const auto& l : raw.body) {
    if (l.kind != LitKind::atom) {
      if (!denotes_top(l)) return std::nullopt;
      continue;
    }
    (l.negated ? r.body_neg : r.body_pos) = (l.negated ? r.body_neg : r.body_pos) | bit(l);
  }
  return r;
}

std::vector<std::string> sorted_unique(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<std::string> raw_atoms(const RawProgram& raw) {
  std::vector<std::string> names;
  for (const auto& t : raw.declared) names.push_back(t.text);
  for (const auto& r : raw.rules) {
    for (const auto* part : {&r.head, &r.body}) {
      for (const auto& l : *part) {
        if (l.kind == LitKind::atom) names.push_back(l.name);
      }
    }
  }
  return sorted_unique(std::move(names));
}

// Formula front-end: recursive descent, evaluated directly to model sets.
class FormulaParser {
 public:
  FormulaParser(std::string_view text, const Alphabet& alphabet)
      : cur_(lex(text)), alphabet_(alphabet), width_(alphabet.size()) {}

  ModelSet parse() {
    ModelSet m = iff();
    if (!cur_.at(Tok::end)) cur_.fail("unexpected " + describe(cur_.peek()));
    return m;
  }

 private:
  ModelSet iff() {
    ModelSet lhs = implies();
    while (cur_.accept(Tok::iff)) {
      ModelSet rhs = implies();
      lhs = (lhs & rhs) | (lhs.complement() & rhs.complement());
    }
    return lhs;
  }

  ModelSet implies() {
    ModelSet lhs = disj();
    if (cur_.accept(Tok::implies)) return lhs.complement() | implies();
    return lhs;
  }

  ModelSet disj() {
    ModelSet lhs = conj();
    while (cur_.accept(Tok::bar)) lhs |= conj();
    return lhs;
  }

  ModelSet conj() {
    ModelSet lhs = unary();
    while (cur_.accept(Tok::amp)) lhs &= unary();
    return lhs;
  }

  ModelSet unary() {
    if (cur_.accept(Tok::tilde)) return unary().complement();
    if (cur_.accept(Tok::lparen)) {
      ModelSet m = iff();
      cur_.expect(Tok::rparen, "')'");
      return m;
    }
    if (cur_.accept(Tok::kw_true)) return ModelSet::all(width_);
    if (cur_.accept(Tok::kw_false)) return ModelSet(width_);
    const Token& t = cur_.peek();
    if (t.kind != Tok::ident) cur_.fail("expected a formula, found " + describe(t));
    auto idx = alphabet_.index_of(t.text);
    if (!idx) {
      throw AlphabetMismatch(std::to_string(t.line) + ":" + std::to_string(t.column) + ": atom '" +
                             t.text + "' is not in the alphabet");
    }
    cur_.take();
    ModelSet m(width_);
    for (std::uint32_t i = 0; i < interpretation_count(width_); ++i) {
      if ((i >> *idx) & 1u) m.insert(Interpretation{i});
    }
    return m;
  }

  Cursor cur_;
  const Alphabet& alphabet_;
  std::size_t width_;
};

void append_atoms(std::string& out, const Alphabet& a, AtomSet set, const char* sep, bool negated,
                  bool& first) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!set.contains(i)) continue;
    if (!first) out += sep;
    first = false;
    if (negated) out += "not ";
    out += a.name(i);
  }
}

}  // namespace

Program parse_program(std::string_view text, const std::optional<Alphabet>& alphabet) {
  RawProgram raw = parse_raw(text);
  Alphabet alpha;
  if (alphabet) {
    alpha = *alphabet;
    for (const auto& t : raw.declared) {
      if (!alpha.index_of(t.text)) {
        throw AlphabetMismatch(std::to_string(t.line) + ":" + std::to_string(t.column) + ": atom '" +
                               t.text + "' is not in the alphabet");
      }
    }
  } else {
    auto names = raw_atoms(raw);
    if (names.size() > kMaxAtoms) {
      throw Error("program mentions " + std::to_string(names.size()) + " atoms; at most " +
                  std::to_string(kMaxAtoms) + " are supported");
    }
    alpha = Alphabet(std::move(names));
  }
  std::vector<Rule> rules;
  for (const auto& r : raw.rules) {
    if (auto n = normalize(r, alpha)) rules.push_back(*n);
  }
  return Program(std::move(alpha), std::move(rules));
}

std::vector<std::string> program_atoms(std::string_view text) { return raw_atoms(parse_raw(text)); }

ModelSet parse_formula(std::string_view text, const Alphabet& alphabet) {
  return FormulaParser(text, alphabet).parse();
}

std::vector<std::string> formula_atoms(std::string_view text) {
  std::vector<std::string> names;
  for (const auto& t : lex(text)) {
    if (t.kind == Tok::ident) names.push_back(t.text);
  }
  return sorted_unique(std::move(names));
}

std::string render_rule(const Rule& r, const Alphabet& a) {
  std::string out;
  bool first = true;
  append_atoms(out, a, r.head_pos, "; ", false, first);
  append_atoms(out, a, r.head_neg, "; ", true, first);
  if (first) out += "false";
  if (!r.body_pos.empty() || !r.body_neg.empty()) {
    out += " :- ";
    first = true;
    append_atoms(out, a, r.body_pos, ", ", false, first);
    append_atoms(out, a, r.body_neg, ", ", true, first);
  }
  out += ".";
  return out;
}

std::string render_program(const Program& p) {
  const Alphabet& a = p.alphabet();
  AtomSet used;
  for (const auto& r : p.rules()) used = used | r.atoms();
  std::string out;
  if (used != universe(a.size())) {
    out += "#atoms ";
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i) out += ", ";
      out += a.name(i);
    }
    out += ".";
  }
  for (const auto& r : p.rules()) {
    if (!out.empty()) out += "\n";
    out += render_rule(r, a);
  }
  return out;
}

std::string render_dnf(const ModelSet& models, const Alphabet& a) {
  if (models.width() != a.size()) throw AlphabetMismatch("model set width differs from the alphabet");
  if (models.empty()) return "false";
  if (models.size() == interpretation_count(a.size())) return "true";
  std::string out;
  models.for_each([&](Interpretation m) {
    if (!out.empty()) out += " | ";
    std::string term;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!term.empty()) term += " & ";
      if (!m.contains(i)) term += "~";
      term += a.name(i);
    }
    out += a.size() > 1 ? "(" + term + ")" : term;
  });
  return out;
}

}  // namespace serev
