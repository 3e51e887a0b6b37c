#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "serev/alphabet.hpp"
#include "serev/model_set.hpp"

namespace serev {

/// Here-world selection f: Y ↦ f(Y). Valid when Y ∈ f(Y) and f(Y) ⊆ 2^Y for
/// every Y; validity is not enforced here (see violation()).
class SelectionFunction {
 public:
  using Fn = std::function<ModelSet(Interpretation y, std::size_t width)>;

  SelectionFunction(std::string name, Fn fn) : name_(std::move(name)), fn_(std::move(fn)) {}

  /// f(Y) = 2^Y.
  static SelectionFunction skeptical();
  /// f(Y) = {Y}.
  static SelectionFunction brave();
  /// f(Y) = table[Y]; the table has one entry per interpretation of `width`.
  static SelectionFunction from_table(std::string name, std::size_t width, std::vector<ModelSet> table);

  const std::string& name() const { return name_; }
  ModelSet eval(Interpretation y, std::size_t width) const { return fn_(y, width); }

  struct Violation {
    Interpretation y;
    std::string reason;
  };
  /// First Y (in increasing order) where f breaks Y ∈ f(Y) or f(Y) ⊆ 2^Y.
  std::optional<Violation> violation(std::size_t width) const;

 private:
  std::string name_;
  Fn fn_;
};

/// f1 ⊑ f2: f2(Y) ⊆ f1(Y) for every Y.
bool lattice_leq(const SelectionFunction& f1, const SelectionFunction& f2, std::size_t width);

/// Every valid selection function over `width` atoms (width <= 2), as tables,
/// in a fixed order.
std::vector<SelectionFunction> all_selection_functions(std::size_t width);

}  // namespace serev
