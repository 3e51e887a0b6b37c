#include "serev/selection.hpp"

#include "serev/errors.hpp"

namespace serev {

SelectionFunction SelectionFunction::skeptical() {
  return SelectionFunction("skeptical", [](Interpretation y, std::size_t width) {
    ModelSet out(width);
    for_each_subset(y, [&](AtomSet x) { out.insert(x); });
    return out;
  });
}

SelectionFunction SelectionFunction::brave() {
  return SelectionFunction("brave", [](Interpretation y, std::size_t width) {
    return ModelSet(width, {y});
  });
}

SelectionFunction SelectionFunction::from_table(std::string name, std::size_t width,
                                                std::vector<ModelSet> table) {
  if (table.size() != interpretation_count(width)) {
    throw Error("selection table needs one entry per interpretation");
  }
  return SelectionFunction(std::move(name), [width, table = std::move(table)](Interpretation y, std::size_t w) {
    if (w != width) throw AlphabetMismatch("selection table built for another alphabet width");
    return table.at(y.bits);
  });
}

std::optional<SelectionFunction::Violation> SelectionFunction::violation(std::size_t width) const {
  for (std::uint32_t bits = 0; bits < interpretation_count(width); ++bits) {
    Interpretation y{bits};
    ModelSet f = eval(y, width);
    if (!f.contains(y)) return Violation{y, "Y is not in f(Y)"};
    bool inside = true;
    f.for_each([&](Interpretation x) { inside = inside && x.subset_of(y); });
    if (!inside) return Violation{y, "f(Y) contains a non-subset of Y"};
  }
  return std::nullopt;
}

bool lattice_leq(const SelectionFunction& f1, const SelectionFunction& f2, std::size_t width) {
  for (std::uint32_t bits = 0; bits < interpretation_count(width); ++bits) {
    if (!f2.eval(Interpretation{bits}, width).subset_of(f1.eval(Interpretation{bits}, width))) return false;
  }
  return true;
}

std::vector<SelectionFunction> all_selection_functions(std::size_t width) {
  if (width > 2) throw Error("selection functions are only enumerated up to 2 atoms");
  const std::size_t count = interpretation_count(width);
  // For each Y, the optional members are the proper subsets of Y.
  std::vector<std::vector<Interpretation>> optional(count);
  std::size_t total_bits = 0;
  for (std::uint32_t y = 0; y < count; ++y) {
    for_each_subset(Interpretation{y}, [&](AtomSet x) {
      if (x.bits != y) optional[y].push_back(x);
    });
    total_bits += optional[y].size();
  }
  std::vector<SelectionFunction> out;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << total_bits); ++code) {
    std::vector<ModelSet> table;
    std::size_t bit = 0;
    for (std::uint32_t y = 0; y < count; ++y) {
      ModelSet f(width, {Interpretation{y}});
      for (auto x : optional[y]) {
        if ((code >> bit++) & 1u) f.insert(x);
      }
      table.push_back(std::move(f));
    }
    out.push_back(SelectionFunction::from_table("f" + std::to_string(code), width, std::move(table)));
  }
  return out;
}

}  // namespace serev
