#include "serev/prop_revision.hpp"

#include <algorithm>
#include <limits>

#include "serev/errors.hpp"

namespace serev {

TotalPreorder::TotalPreorder(std::size_t width, std::vector<std::uint32_t> ranks)
    : width_(width), ranks_(std::move(ranks)) {
  if (ranks_.size() != interpretation_count(width)) {
    throw Error("preorder needs one rank per interpretation");
  }
}

std::uint32_t TotalPreorder::max_rank() const {
  return ranks_.empty() ? 0 : *std::max_element(ranks_.begin(), ranks_.end());
}

ModelSet TotalPreorder::min(const ModelSet& f) const {
  if (f.width() != width_) throw AlphabetMismatch("preorder and model set widths differ");
  std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
  f.for_each([&](Interpretation i) { best = std::min(best, rank(i)); });
  ModelSet out(width_);
  f.for_each([&](Interpretation i) {
    if (rank(i) == best) out.insert(i);
  });
  return out;
}

TotalPreorder TotalPreorder::normalized() const {
  std::vector<std::uint32_t> levels = ranks_;
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  std::vector<std::uint32_t> out(ranks_.size());
  for (std::size_t i = 0; i < ranks_.size(); ++i) {
    out[i] = static_cast<std::uint32_t>(std::lower_bound(levels.begin(), levels.end(), ranks_[i]) -
                                        levels.begin());
  }
  return TotalPreorder(width_, std::move(out));
}

bool TotalPreorder::same_order(const TotalPreorder& other) const {
  return width_ == other.width_ && normalized().ranks_ == other.normalized().ranks_;
}

TotalPreorder drastic_preorder(const ModelSet& phi) {
  std::vector<std::uint32_t> ranks(interpretation_count(phi.width()), 1);
  phi.for_each([&](Interpretation i) { ranks[i.bits] = 0; });
  return TotalPreorder(phi.width(), std::move(ranks));
}

TotalPreorder dalal_preorder(const ModelSet& phi) {
  const std::size_t n = phi.width();
  const std::size_t count = interpretation_count(n);
  if (phi.empty()) return TotalPreorder(n, std::vector<std::uint32_t>(count, 0));
  // Multi-source breadth-first search over the hypercube.
  constexpr std::uint32_t unseen = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> dist(count, unseen);
  std::vector<std::uint32_t> frontier;
  phi.for_each([&](Interpretation i) {
    dist[i.bits] = 0;
    frontier.push_back(i.bits);
  });
  for (std::uint32_t d = 1; !frontier.empty(); ++d) {
    std::vector<std::uint32_t> next;
    for (auto v : frontier) {
      for (std::size_t b = 0; b < n; ++b) {
        std::uint32_t w = v ^ (1u << b);
        if (dist[w] == unseen) {
          dist[w] = d;
          next.push_back(w);
        }
      }
    }
    frontier = std::move(next);
  }
  return TotalPreorder(n, std::move(dist));
}

void check_faithful(const TotalPreorder& order, const ModelSet& phi) {
  if (order.width() != phi.width()) throw AlphabetMismatch("preorder and formula widths differ");
  if (phi.empty()) return;
  const std::uint32_t base = order.rank(phi.members().front());
  for (std::uint32_t i = 0; i < interpretation_count(phi.width()); ++i) {
    Interpretation x{i};
    if (phi.contains(x) && order.rank(x) != base) {
      throw AssignmentViolation("(a)", "models of the formula must be equally plausible");
    }
    if (!phi.contains(x) && order.rank(x) <= base) {
      throw AssignmentViolation("(b)", "non-models must be strictly less plausible than models");
    }
  }
}

PropOperator PropOperator::drastic() { return PropOperator(Kind::drastic, "drastic"); }

PropOperator PropOperator::dalal() { return PropOperator(Kind::dalal, "dalal"); }

PropOperator PropOperator::distance(std::string name, Distance d) {
  PropOperator op(Kind::distance, std::move(name));
  op.distance_ = std::move(d);
  return op;
}

PropOperator PropOperator::faithful(std::string name, PreorderProvider provider) {
  PropOperator op(Kind::faithful, std::move(name));
  op.provider_ = std::move(provider);
  return op;
}

PropOperator PropOperator::custom(std::string name, RevisionFunction f) {
  PropOperator op(Kind::custom, std::move(name));
  op.custom_ = std::move(f);
  return op;
}

TotalPreorder PropOperator::preorder(const ModelSet& phi) const {
  switch (kind_) {
    case Kind::drastic:
      return drastic_preorder(phi);
    case Kind::dalal:
      return dalal_preorder(phi);
    case Kind::distance: {
      const std::size_t n = phi.width();
      std::vector<std::uint32_t> ranks(interpretation_count(n), 0);
      if (!phi.empty()) {
        auto models = phi.members();
        for (std::uint32_t j = 0; j < ranks.size(); ++j) {
          std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
          for (auto i : models) best = std::min(best, distance_(i, Interpretation{j}));
          ranks[j] = best;
        }
      }
      return TotalPreorder(n, std::move(ranks));
    }
    case Kind::faithful: {
      TotalPreorder order = provider_(phi);
      check_faithful(order, phi);
      return order;
    }
    case Kind::custom:
      break;
  }
  throw Error("operator '" + name_ + "' has no faithful preorder");
}

ModelSet PropOperator::revise(const ModelSet& phi, const ModelSet& psi) const {
  if (phi.width() != psi.width()) throw AlphabetMismatch("revision operands have different widths");
  switch (kind_) {
    case Kind::drastic: {
      ModelSet both = phi & psi;
      return both.empty() ? psi : both;
    }
    case Kind::custom:
      return custom_(phi, psi);
    default:
      return preorder(phi).min(psi);
  }
}

ModelSet revise(const PropOperator& op, const ModelSet& phi, const ModelSet& psi) {
  return op.revise(phi, psi);
}

bool mc_prop(const PropOperator& op, const ModelSet& phi, const ModelSet& psi, Interpretation i) {
  return op.revise(phi, psi).contains(i);
}

}  // namespace serev
