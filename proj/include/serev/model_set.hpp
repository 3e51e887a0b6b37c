#pragma once

#include <boost/dynamic_bitset.hpp>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "serev/alphabet.hpp"

namespace serev {

/// Extensional propositional formula: a set of interpretations over a fixed
/// number of atoms. Two formulas with the same ModelSet are identified.
class ModelSet {
 public:
  using Bits = boost::dynamic_bitset<std::uint64_t>;

  ModelSet() : ModelSet(0) {}
  explicit ModelSet(std::size_t width);
  ModelSet(std::size_t width, std::initializer_list<Interpretation> members);
  ModelSet(std::size_t width, const std::vector<Interpretation>& members);

  static ModelSet all(std::size_t width);
  /// Members are the interpretations whose index bit is set in `bits`.
  static ModelSet from_bits(std::size_t width, Bits bits);
  /// For width <= 6 only: bit i of `mask` selects interpretation i.
  static ModelSet from_mask(std::size_t width, std::uint64_t mask);

  std::size_t width() const { return width_; }
  std::size_t size() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }
  bool contains(Interpretation i) const { return bits_.test(i.bits); }

  void insert(Interpretation i) { bits_.set(i.bits); }
  void erase(Interpretation i) { bits_.reset(i.bits); }

  /// Members in increasing order.
  std::vector<Interpretation> members() const;

  template <typename F>
  void for_each(F&& f) const {
    for (auto i = bits_.find_first(); i != Bits::npos; i = bits_.find_next(i)) {
      f(Interpretation{static_cast<std::uint32_t>(i)});
    }
  }

  bool subset_of(const ModelSet& other) const;
  ModelSet complement() const;

  ModelSet& operator&=(const ModelSet& other);
  ModelSet& operator|=(const ModelSet& other);
  ModelSet& operator-=(const ModelSet& other);
  friend ModelSet operator&(ModelSet a, const ModelSet& b) { return a &= b; }
  friend ModelSet operator|(ModelSet a, const ModelSet& b) { return a |= b; }
  friend ModelSet operator-(ModelSet a, const ModelSet& b) { return a -= b; }

  friend bool operator==(const ModelSet& a, const ModelSet& b) {
    return a.width_ == b.width_ && a.bits_ == b.bits_;
  }
  friend bool operator<(const ModelSet& a, const ModelSet& b) {
    return a.width_ != b.width_ ? a.width_ < b.width_ : a.bits_ < b.bits_;
  }

  const Bits& bits() const { return bits_; }

 private:
  void check_width(const ModelSet& other) const;

  std::size_t width_;
  Bits bits_;
};

}  // namespace serev
