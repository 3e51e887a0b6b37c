#include "serev/semantics.hpp"

#include <string>
#include <vector>

#include "serev/errors.hpp"

namespace serev {
namespace {

// Positive part of a rule that survives the reduct.
struct PositiveRule {
  AtomSet head;
  AtomSet body;
};

std::vector<PositiveRule> positive_reduct(const Program& p, Interpretation y) {
  std::vector<PositiveRule> out;
  for (const auto& r : p.rules()) {
    if (r.head_neg.subset_of(y) && !r.body_neg.intersects(y)) out.push_back({r.head_pos, r.body_pos});
  }
  return out;
}

bool satisfies(Interpretation x, const std::vector<PositiveRule>& rules) {
  for (const auto& r : rules) {
    if (r.body.subset_of(x) && !r.head.intersects(x)) return false;
  }
  return true;
}

}  // namespace

bool satisfies(Interpretation y, const Rule& r) {
  if (!r.body_pos.subset_of(y) || r.body_neg.intersects(y)) return true;
  return r.head_pos.intersects(y) || !r.head_neg.subset_of(y);
}

bool satisfies(Interpretation y, const Program& p) {
  for (const auto& r : p.rules()) {
    if (!satisfies(y, r)) return false;
  }
  return true;
}

ModelSet classical_models(const Program& p) {
  const std::size_t n = p.alphabet().size();
  ModelSet out(n);
  for (std::uint32_t y = 0; y < interpretation_count(n); ++y) {
    if (satisfies(Interpretation{y}, p)) out.insert(Interpretation{y});
  }
  return out;
}

Program reduct(const Program& p, Interpretation y) {
  std::vector<Rule> rules;
  for (const auto& r : positive_reduct(p, y)) rules.push_back(Rule{r.head, {}, r.body, {}});
  return Program(p.alphabet(), std::move(rules));
}

ModelSet answer_sets(const Program& p) {
  const std::size_t n = p.alphabet().size();
  ModelSet out(n);
  for (std::uint32_t bits = 0; bits < interpretation_count(n); ++bits) {
    Interpretation y{bits};
    auto red = positive_reduct(p, y);
    if (!satisfies(y, red)) continue;
    bool minimal = true;
    for_each_subset(y, [&](AtomSet x) {
      if (minimal && x != y && satisfies(x, red)) minimal = false;
    });
    if (minimal) out.insert(y);
  }
  return out;
}

ModelSet answer_sets_from_se(const SESet& s) {
  ModelSet out(s.width());
  s.there_worlds().for_each([&](Interpretation y) {
    if (s.heres_of(y).size() == 1) out.insert(y);
  });
  return out;
}

SESet se_models(const Program& p) {
  const std::size_t n = p.alphabet().size();
  SESet out(n);
  for (std::uint32_t bits = 0; bits < interpretation_count(n); ++bits) {
    Interpretation y{bits};
    if (!satisfies(y, p)) continue;
    auto red = positive_reduct(p, y);
    for_each_subset(y, [&](AtomSet x) {
      if (satisfies(x, red)) out.insert({x, y});
    });
  }
  return out;
}

ModelSet here_projection(const Program& p) { return se_models(p).here_worlds(); }

SEProperties se_set_properties(const SESet& s) { return s.properties(); }

SESet closure(const SESet& s, ClosureTarget target) {
  if (!s.well_defined()) throw PreconditionViolation("closure needs a well-defined SE set");
  const std::size_t n = s.width();
  const AtomSet all = universe(n);
  const ModelSet worlds = s.there_worlds();
  auto complete = [&](const SESet& in) {
    SESet out = in;
    in.for_each([&](SEInterpretation p) {
      for_each_subset(all - p.there, [&](AtomSet extra) {
        Interpretation z = p.there | extra;
        if (worlds.contains(z)) out.insert({p.here, z});
      });
    });
    return out;
  };
  SESet cur = complete(s);
  if (target == ClosureTarget::complete) return cur;
  while (true) {
    SESet next = cur;
    worlds.for_each([&](Interpretation z) {
      auto heres = cur.heres_of(z).members();
      for (std::size_t i = 0; i < heres.size(); ++i) {
        for (std::size_t j = i + 1; j < heres.size(); ++j) next.insert({heres[i] & heres[j], z});
      }
    });
    next = complete(next);
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

ProgramClass expressible_class(const SESet& s) {
  if (s.hi_closed()) return ProgramClass::nlp;
  if (s.complete()) return ProgramClass::dlp;
  if (s.well_defined()) return ProgramClass::glp;
  throw PreconditionViolation("SE set is not well-defined");
}

Program synthesize(const SESet& s, ProgramClass c, const Alphabet& alphabet) {
  const std::size_t n = alphabet.size();
  if (s.width() != n) throw AlphabetMismatch("SE set width differs from the alphabet");
  if (!s.well_defined()) throw PreconditionViolation("cannot synthesize: SE set is not well-defined");
  if (c == ProgramClass::dlp && !s.complete()) {
    throw PreconditionViolation("cannot synthesize a DLP: SE set is not complete");
  }
  if (c == ProgramClass::nlp && !s.hi_closed()) {
    throw PreconditionViolation("cannot synthesize an NLP: SE set is not closed under here-intersection");
  }
  const AtomSet all = universe(n);
  const ModelSet worlds = s.there_worlds();
  std::vector<Rule> rules;
  for (std::uint32_t bits = 0; bits < interpretation_count(n); ++bits) {
    Interpretation y{bits};
    if (!worlds.contains(y)) rules.push_back(Rule{{}, {}, y, all - y});
  }
  worlds.for_each([&](Interpretation y) {
    const ModelSet heres = s.heres_of(y);
    for_each_subset(y, [&](AtomSet x) {
      if (x == y || heres.contains(x)) return;
      Rule r{{}, {}, x, all - y};
      switch (c) {
        case ProgramClass::glp:
          r.head_pos = y - x;
          r.head_neg = y;
          break;
        case ProgramClass::dlp:
          r.head_pos = y - x;
          break;
        case ProgramClass::nlp: {
          AtomSet t = y;
          heres.for_each([&](Interpretation u) {
            if (x.subset_of(u)) t = t & u;
          });
          AtomSet diff = t - x;
          r.head_pos = AtomSet{diff.bits & (~diff.bits + 1u)};
          break;
        }
      }
      rules.push_back(r);
    });
  });
  return Program(alphabet, std::move(rules));
}

Program synthesize(const SESet& s, const Alphabet& alphabet) {
  return synthesize(s, expressible_class(s), alphabet);
}

bool strong_equiv(const Program& p, const Program& q) {
  require_same_alphabet(p.alphabet(), q.alphabet());
  return se_models(p) == se_models(q);
}

bool se_subset(const Program& p, const Program& q) {
  require_same_alphabet(p.alphabet(), q.alphabet());
  return se_models(p).subset_of(se_models(q));
}

}  // namespace serev
