#pragma once

#include <cstdint>
#include <bit>
#include <functional>
#include <string>
#include <vector>

#include "serev/alphabet.hpp"
#include "serev/model_set.hpp"

namespace serev {

/// Total preorder over the interpretations of a fixed width, given by ranks
/// (lower is more plausible).
class TotalPreorder {
 public:
  TotalPreorder() = default;
  /// `ranks` has one entry per interpretation, indexed by its bits.
  TotalPreorder(std::size_t width, std::vector<std::uint32_t> ranks);

  std::size_t width() const { return width_; }
  std::uint32_t rank(Interpretation i) const { return ranks_.at(i.bits); }
  bool leq(Interpretation a, Interpretation b) const { return rank(a) <= rank(b); }
  bool equivalent(Interpretation a, Interpretation b) const { return rank(a) == rank(b); }
  std::uint32_t max_rank() const;
  /// Members of `f` of least rank.
  ModelSet min(const ModelSet& f) const;
  const std::vector<std::uint32_t>& ranks() const { return ranks_; }

  /// Same relation (ranks may differ by a monotone relabelling).
  bool same_order(const TotalPreorder& other) const;
  /// Ranks renumbered to 0, 1, 2, ... without gaps.
  TotalPreorder normalized() const;

  friend bool operator==(const TotalPreorder&, const TotalPreorder&) = default;

 private:
  std::size_t width_ = 0;
  std::vector<std::uint32_t> ranks_;
};

/// Number of atoms on which I and J differ.
inline std::uint32_t hamming(Interpretation i, Interpretation j) {
  return static_cast<std::uint32_t>(std::popcount(i.bits ^ j.bits));
}

/// Rank 0 on φ, 1 elsewhere.
TotalPreorder drastic_preorder(const ModelSet& phi);
/// Rank = Hamming distance to the nearest model of φ; all 0 when φ = ∅.
TotalPreorder dalal_preorder(const ModelSet& phi);

using Distance = std::function<std::uint32_t(Interpretation, Interpretation)>;
using PreorderProvider = std::function<TotalPreorder(const ModelSet& phi)>;
using RevisionFunction = std::function<ModelSet(const ModelSet& phi, const ModelSet& psi)>;

/// Propositional revision operator over model sets.
class PropOperator {
 public:
  enum class Kind { drastic, dalal, distance, faithful, custom };

  static PropOperator drastic();
  static PropOperator dalal();
  /// {J ∈ ψ | d(J, φ) minimal}, d(J, φ) = min over I ∈ φ of d(I, J), 0 when φ = ∅.
  static PropOperator distance(std::string name, Distance d);
  /// min(ψ, ≤φ). The provider's preorders are checked on every call: models
  /// of φ share the least rank and lie strictly below non-models.
  static PropOperator faithful(std::string name, PreorderProvider provider);
  /// Arbitrary function; used for operators that are not KM operators.
  static PropOperator custom(std::string name, RevisionFunction f);

  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }

  /// Throws AlphabetMismatch on different widths.
  ModelSet revise(const ModelSet& phi, const ModelSet& psi) const;

  /// Faithful preorder behind the operator. Available for every kind except
  /// custom (throws Error).
  TotalPreorder preorder(const ModelSet& phi) const;
  bool has_preorder() const { return kind_ != Kind::custom; }

 private:
  PropOperator(Kind kind, std::string name) : kind_(kind), name_(std::move(name)) {}

  Kind kind_;
  std::string name_;
  Distance distance_;
  PreorderProvider provider_;
  RevisionFunction custom_;
};

ModelSet revise(const PropOperator& op, const ModelSet& phi, const ModelSet& psi);

/// Does I belong to φ ∘ ψ?
bool mc_prop(const PropOperator& op, const ModelSet& phi, const ModelSet& psi, Interpretation i);

/// Throws AssignmentViolation ("(a)" or "(b)") unless `order` is faithful to φ.
void check_faithful(const TotalPreorder& order, const ModelSet& phi);

}  // namespace serev
