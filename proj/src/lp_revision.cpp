#include "serev/lp_revision.hpp"

#include <mutex>
#include <set>

#include "serev/errors.hpp"
#include "serev/semantics.hpp"

namespace serev {
namespace {

void same_width(const SESet& p, const SESet& q) {
  if (p.width() != q.width()) throw AlphabetMismatch("revision operands have different widths");
}

std::string format_bits(Interpretation i) {
  std::string out = "{";
  for (std::size_t b = 0; b < 32; ++b) {
    if (i.contains(b)) {
      if (out.size() > 1) out += ",";
      out += std::to_string(b);
    }
  }
  return out + "}";
}

}  // namespace

SESet expand(const SESet& p, const SESet& q) {
  same_width(p, q);
  return p & q;
}

Program expand(const Program& p, const Program& q) {
  require_same_alphabet(p.alphabet(), q.alphabet());
  return synthesize(expand(se_models(p), se_models(q)), join(p.class_tag(), q.class_tag()), p.alphabet());
}

SESet drastic_lp_revise(const SESet& p, const SESet& q) {
  SESet both = expand(p, q);
  return both.empty() ? q : both;
}

SESet prop_based_revise(const PropOperator& circ, const SelectionFunction& f, const SESet& p, const SESet& q) {
  SESet both = expand(p, q);
  if (!both.empty()) return both;
  const ModelSet worlds = circ.revise(p.there_worlds(), q.there_worlds());
  SESet out(q.width());
  worlds.for_each([&](Interpretation y) {
    const ModelSet chosen = f.eval(y, q.width());
    q.heres_of(y).for_each([&](Interpretation x) {
      if (chosen.contains(x)) out.insert({x, y});
    });
  });
  return out;
}

SESet cardinality_revise(const SESet& p, const SESet& q) {
  same_width(p, q);
  const std::size_t n = q.width();
  const PropOperator dalal = PropOperator::dalal();
  const ModelSet mod_p = p.there_worlds();
  const ModelSet worlds = dalal.revise(mod_p, q.there_worlds());
  SESet out(n);
  worlds.for_each([&](Interpretation y) {
    ModelSet alpha_py(n);
    dalal.revise(ModelSet(n, {y}), mod_p).for_each([&](Interpretation y2) { alpha_py |= p.heres_of(y2); });
    ModelSet alpha_y(n);
    for_each_subset(y, [&](AtomSet x) { alpha_y.insert(x); });
    const ModelSet allowed = dalal.revise(alpha_py, alpha_y);
    q.heres_of(y).for_each([&](Interpretation x) {
      if (x == y || allowed.contains(x)) out.insert({x, y});
    });
  });
  return out;
}

SESet parted_revise(const PartedAssignment& a, const SESet& p, const SESet& q) {
  same_width(p, q);
  a.check(p);
  const ModelSet worlds = a.preorder(p.there_worlds()).min(q.there_worlds());
  SESet out(q.width());
  worlds.for_each([&](Interpretation y) {
    const ModelSet chosen = a.here(p, y);
    q.heres_of(y).for_each([&](Interpretation x) {
      if (chosen.contains(x)) out.insert({x, y});
    });
  });
  return out;
}

SESet class_revise(const PartedAssignment& a, const SESet& p, const SESet& q, ProgramClass c) {
  if (c == ProgramClass::glp) return parted_revise(a, p, q);
  const bool nlp = c == ProgramClass::nlp;
  for (const SESet* s : {&p, &q}) {
    if (nlp ? !s->hi_closed() : !s->complete()) {
      throw PreconditionViolation(std::string(s == &p ? "first" : "second") + " operand is not " +
                                  (nlp ? "an NLP (SE set not closed under here-intersection)"
                                       : "a DLP (SE set not complete)"));
    }
  }
  a.check(p);
  auto w = a.check_complete(p);
  if (!w && nlp) w = a.check_normal(p);
  if (w) {
    throw AssignmentViolation(w->condition, "assignment '" + a.name() + "' violates condition " + w->condition +
                                                " at X=" + format_bits(w->x) + ", Y=" + format_bits(w->y) +
                                                ", Z=" + format_bits(w->z) + ": " + w->message);
  }
  return parted_revise(a, p, q);
}

struct LPOperator::Cache {
  std::mutex mutex;
  std::set<std::size_t> validated;
};

LPOperator LPOperator::drastic_lp() { return LPOperator(Kind::drastic_lp, "drastic-lp"); }

LPOperator LPOperator::prop_based(PropOperator circ, SelectionFunction f) {
  LPOperator op = prop_based_unchecked(std::move(circ), std::move(f));
  op.check_f_ = true;
  return op;
}

LPOperator LPOperator::prop_based_unchecked(PropOperator circ, SelectionFunction f) {
  LPOperator op(Kind::prop_based, f.name() + ":" + circ.name());
  op.circ_ = std::move(circ);
  op.f_ = std::move(f);
  op.cache_ = std::make_shared<Cache>();
  return op;
}

LPOperator LPOperator::cardinality() { return LPOperator(Kind::cardinality, "cardinality"); }

LPOperator LPOperator::parted(PartedAssignment a) {
  LPOperator op(Kind::parted, "parted:" + a.name());
  op.assignment_ = std::move(a);
  return op;
}

LPOperator LPOperator::dlp(PartedAssignment a) {
  LPOperator op(Kind::dlp, "dlp:" + a.name());
  op.assignment_ = std::move(a);
  return op;
}

LPOperator LPOperator::nlp(PartedAssignment a) {
  LPOperator op(Kind::nlp, "nlp:" + a.name());
  op.assignment_ = std::move(a);
  return op;
}

ProgramClass LPOperator::class_domain() const {
  switch (kind_) {
    case Kind::dlp: return ProgramClass::dlp;
    case Kind::nlp: return ProgramClass::nlp;
    default: return ProgramClass::glp;
  }
}

void LPOperator::validate_selection(std::size_t width) const {
  {
    std::lock_guard lock(cache_->mutex);
    if (cache_->validated.count(width)) return;
  }
  if (auto v = f_->violation(width)) {
    throw AssignmentViolation("selection", "selection function '" + f_->name() + "' is invalid at Y=" +
                                               format_bits(v->y) + ": " + v->reason);
  }
  std::lock_guard lock(cache_->mutex);
  cache_->validated.insert(width);
}

SESet LPOperator::apply(const SESet& p, const SESet& q) const {
  switch (kind_) {
    case Kind::drastic_lp:
      return drastic_lp_revise(p, q);
    case Kind::prop_based:
      if (check_f_) validate_selection(q.width());
      return prop_based_revise(*circ_, *f_, p, q);
    case Kind::cardinality:
      return cardinality_revise(p, q);
    case Kind::parted:
      return parted_revise(*assignment_, p, q);
    case Kind::dlp:
      return class_revise(*assignment_, p, q, ProgramClass::dlp);
    case Kind::nlp:
      return class_revise(*assignment_, p, q, ProgramClass::nlp);
  }
  throw Error("unknown operator kind");
}

Program LPOperator::revise(const Program& p, const Program& q) const {
  require_same_alphabet(p.alphabet(), q.alphabet());
  SESet out = apply(se_models(p), se_models(q));
  ProgramClass c = expressible_class(out);
  return synthesize(out, c, p.alphabet());
}

bool mc_se(const LPOperator& op, const Program& p, const Program& q, SEInterpretation pair) {
  require_same_alphabet(p.alphabet(), q.alphabet());
  return op.apply(se_models(p), se_models(q)).contains(pair);
}

}  // namespace serev
