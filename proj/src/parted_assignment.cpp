#include "serev/parted_assignment.hpp"

#include <mutex>
#include <set>

#include "serev/errors.hpp"

namespace serev {

struct PartedAssignment::State {
  std::string name;
  ModPreorderFn preorder;
  HereFn here;
  std::mutex mutex;
  std::set<SESet> verified;
};

PartedAssignment::PartedAssignment(std::string name, ModPreorderFn preorder, HereFn here)
    : state_(std::make_shared<State>()) {
  state_->name = std::move(name);
  state_->preorder = std::move(preorder);
  state_->here = std::move(here);
}

const std::string& PartedAssignment::name() const { return state_->name; }

TotalPreorder PartedAssignment::preorder(const ModelSet& models) const { return state_->preorder(models); }

ModelSet PartedAssignment::here(const SESet& se, Interpretation y) const { return state_->here(se, y); }

PartedAssignment PartedAssignment::from_prop_based(const PropOperator& op, const SelectionFunction& f) {
  if (!op.has_preorder()) throw Error("operator '" + op.name() + "' has no faithful preorder");
  return PartedAssignment(
      f.name() + ":" + op.name(),
      [op](const ModelSet& models) { return op.preorder(models); },
      [f](const SESet& se, Interpretation y) {
        if (se.contains({y, y})) return se.heres_of(y);
        return f.eval(y, se.width());
      });
}

std::optional<AssignmentWitness> PartedAssignment::find_violation(const SESet& se) const {
  const std::size_t n = se.width();
  const ModelSet models = se.there_worlds();
  const TotalPreorder order = preorder(models);
  if (order.width() != n) return AssignmentWitness{"(1)", {}, {}, {}, "preorder has the wrong width"};
  if (!models.empty()) {
    const Interpretation first = models.members().front();
    const std::uint32_t base = order.rank(first);
    for (std::uint32_t bits = 0; bits < interpretation_count(n); ++bits) {
      Interpretation y{bits};
      if (models.contains(y) && order.rank(y) != base) {
        return AssignmentWitness{"(1)", {}, first, y, "models of P are not equally plausible"};
      }
      if (!models.contains(y) && order.rank(y) <= base) {
        return AssignmentWitness{"(2)", {}, first, y, "a non-model is not strictly above the models"};
      }
    }
  }
  for (std::uint32_t bits = 0; bits < interpretation_count(n); ++bits) {
    Interpretation y{bits};
    ModelSet chosen = here(se, y);
    if (chosen.width() != n) return AssignmentWitness{"(b)", {}, y, {}, "P(Y) has the wrong width"};
    if (!chosen.contains(y)) return AssignmentWitness{"(a)", y, y, {}, "Y is not in P(Y)"};
    std::optional<AssignmentWitness> bad;
    chosen.for_each([&](Interpretation x) {
      if (!bad && !x.subset_of(y)) bad = AssignmentWitness{"(b)", x, y, {}, "P(Y) contains a non-subset of Y"};
    });
    if (bad) return bad;
    const bool model = models.contains(y);
    for_each_subset(y, [&](AtomSet x) {
      if (bad) return;
      const bool in_se = se.contains({x, y});
      if (in_se && !chosen.contains(x)) {
        bad = AssignmentWitness{"(c)", x, y, {}, "(X, Y) is an SE model of P but X is not in P(Y)"};
      } else if (model && !in_se && chosen.contains(x)) {
        bad = AssignmentWitness{"(d)", x, y, {}, "Y is a model of P, (X, Y) is not an SE model, yet X is in P(Y)"};
      }
    });
    if (bad) return bad;
  }
  return std::nullopt;
}

void PartedAssignment::check(const SESet& se) const {
  {
    std::lock_guard lock(state_->mutex);
    if (state_->verified.count(se)) return;
  }
  if (auto w = find_violation(se)) {
    throw AssignmentViolation(w->condition, "assignment '" + name() + "' violates condition " + w->condition +
                                                ": " + w->message);
  }
  std::lock_guard lock(state_->mutex);
  state_->verified.insert(se);
}

std::optional<AssignmentWitness> PartedAssignment::check_complete(const SESet& se) const {
  const std::size_t n = se.width();
  const std::size_t count = interpretation_count(n);
  const TotalPreorder order = preorder(se.there_worlds());
  std::vector<ModelSet> chosen;
  for (std::uint32_t y = 0; y < count; ++y) chosen.push_back(here(se, Interpretation{y}));
  for (std::uint32_t y = 0; y < count; ++y) {
    for (std::uint32_t z = 0; z < count; ++z) {
      if ((y & ~z) != 0 || !order.equivalent(Interpretation{y}, Interpretation{z})) continue;
      std::optional<AssignmentWitness> bad;
      chosen[y].for_each([&](Interpretation x) {
        if (!bad && !chosen[z].contains(x)) {
          bad = AssignmentWitness{"(f)", x, Interpretation{y}, Interpretation{z},
                                  "X is in P(Y), Y and Z are equally plausible, Y ⊆ Z, but X is not in P(Z)"};
        }
      });
      if (bad) return bad;
    }
  }
  return std::nullopt;
}

std::optional<AssignmentWitness> PartedAssignment::check_normal(const SESet& se) const {
  const std::size_t n = se.width();
  for (std::uint32_t z = 0; z < interpretation_count(n); ++z) {
    auto members = here(se, Interpretation{z}).members();
    ModelSet chosen(n, members);
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        if (!chosen.contains(members[i] & members[j])) {
          return AssignmentWitness{"(g)", members[i], members[j], Interpretation{z},
                                   "X and Y are in P(Z) but X ∩ Y is not"};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace serev
