#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace serev {

inline constexpr std::size_t kMaxAtoms = 16;

/// A set of atoms, one bit per alphabet position. Used both for rule parts
/// (H+, H-, B+, B-) and for interpretations (the atoms assigned true).
struct AtomSet {
  std::uint32_t bits = 0;

  constexpr AtomSet() = default;
  constexpr explicit AtomSet(std::uint32_t b) : bits(b) {}

  static constexpr AtomSet singleton(std::size_t atom) { return AtomSet{1u << atom}; }

  constexpr bool empty() const { return bits == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits)); }
  constexpr bool contains(std::size_t atom) const { return (bits >> atom) & 1u; }
  constexpr bool subset_of(AtomSet other) const { return (bits & ~other.bits) == 0; }
  constexpr bool proper_subset_of(AtomSet other) const {
    return subset_of(other) && bits != other.bits;
  }
  constexpr bool intersects(AtomSet other) const { return (bits & other.bits) != 0; }

  friend constexpr AtomSet operator&(AtomSet a, AtomSet b) { return AtomSet{a.bits & b.bits}; }
  friend constexpr AtomSet operator|(AtomSet a, AtomSet b) { return AtomSet{a.bits | b.bits}; }
  friend constexpr AtomSet operator-(AtomSet a, AtomSet b) { return AtomSet{a.bits & ~b.bits}; }
  friend constexpr auto operator<=>(AtomSet, AtomSet) = default;
};

using Interpretation = AtomSet;

/// Full set of atoms over `width` positions.
constexpr AtomSet universe(std::size_t width) {
  return AtomSet{width >= 32 ? ~0u : ((1u << width) - 1u)};
}

/// Number of interpretations over `width` atoms.
constexpr std::size_t interpretation_count(std::size_t width) { return std::size_t{1} << width; }

/// Calls f(X) for every X ⊆ set, in increasing integer order.
template <typename F>
void for_each_subset(AtomSet set, F&& f) {
  std::uint32_t x = 0;
  while (true) {
    f(AtomSet{x});
    if (x == set.bits) break;
    x = (x - set.bits) & set.bits;
  }
}

/// Compresses the bits of `x` selected by `mask` into the low bits (software
/// PEXT). The rank of X among the subsets of Y in increasing order is
/// compress_bits(X, Y).
constexpr std::uint32_t compress_bits(std::uint32_t x, std::uint32_t mask) {
  std::uint32_t out = 0;
  std::uint32_t k = 0;
  while (mask != 0) {
    std::uint32_t low = mask & (~mask + 1u);
    if (x & low) out |= (1u << k);
    ++k;
    mask &= mask - 1u;
  }
  return out;
}

/// Finite, sorted set of atom names. Position i in `names()` is bit i of every
/// AtomSet built over this alphabet.
class Alphabet {
 public:
  Alphabet() = default;

  /// Sorts and deduplicates. Throws serev::Error on an invalid name or when
  /// more than kMaxAtoms atoms are given.
  explicit Alphabet(std::vector<std::string> names);

  static bool valid_name(std::string_view name);

  std::size_t size() const { return atoms_.size(); }
  std::span<const std::string> names() const { return atoms_; }
  const std::string& name(std::size_t i) const { return atoms_.at(i); }
  std::optional<std::size_t> index_of(std::string_view name) const;

  /// Throws AlphabetMismatch for an unknown name.
  AtomSet atoms(std::span<const std::string> names) const;
  std::vector<std::string> names_of(AtomSet set) const;

  /// "{}" or "{p,q}".
  std::string format(AtomSet set) const;
  /// Inverse of format(); also accepts the bare forms "" and "p,q".
  AtomSet parse_set(std::string_view text) const;

  Alphabet merged(const Alphabet& other) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<std::string> atoms_;
};

/// Throws AlphabetMismatch unless a == b.
void require_same_alphabet(const Alphabet& a, const Alphabet& b);

}  // namespace serev
