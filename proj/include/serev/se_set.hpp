#pragma once

#include <atomic>
#include <boost/dynamic_bitset.hpp>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "serev/alphabet.hpp"
#include "serev/model_set.hpp"

namespace serev {

/// SE interpretation (X, Y) with X ⊆ Y. Ordered by (there, here) as unsigned
/// integers, which is the canonical output order everywhere.
struct SEInterpretation {
  Interpretation here;
  Interpretation there;

  constexpr bool valid() const { return here.subset_of(there); }

  friend constexpr auto operator<=>(const SEInterpretation& a, const SEInterpretation& b) {
    if (auto c = a.there <=> b.there; c != 0) return c;
    return a.here <=> b.here;
  }
  friend constexpr bool operator==(const SEInterpretation&, const SEInterpretation&) = default;
};

/// Expands the low bits of `x` into the positions of `mask` (inverse of
/// compress_bits).
constexpr std::uint32_t deposit_bits(std::uint32_t x, std::uint32_t mask) {
  std::uint32_t out = 0;
  std::uint32_t k = 0;
  while (mask != 0) {
    std::uint32_t low = mask & (~mask + 1u);
    if ((x >> k) & 1u) out |= low;
    ++k;
    mask &= mask - 1u;
  }
  return out;
}

/// offsets[Y] = number of SE interpretations with there-world < Y; the table
/// has 2^width + 1 entries, the last one being 3^width.
std::span<const std::uint32_t> se_offsets(std::size_t width);

/// Dense index of (X, Y) among the 3^width SE interpretations, in canonical
/// order.
inline std::size_t se_index(std::size_t width, SEInterpretation p) {
  return se_offsets(width)[p.there.bits] + compress_bits(p.here.bits, p.there.bits);
}

struct SEProperties {
  bool well_defined;
  bool complete;
  bool hi_closed;
  friend bool operator==(const SEProperties&, const SEProperties&) = default;
};

/// Finite set of SE interpretations over `width` atoms, stored as a bitset
/// over the 3^width canonical indices. The three structural flags are
/// computed on first request and cached.
class SESet {
 public:
  using Bits = boost::dynamic_bitset<std::uint64_t>;

  SESet() : SESet(0) {}
  explicit SESet(std::size_t width);
  SESet(std::size_t width, std::initializer_list<SEInterpretation> pairs);
  SESet(std::size_t width, const std::vector<SEInterpretation>& pairs);
  SESet(const SESet& other);
  SESet(SESet&& other) noexcept;
  SESet& operator=(const SESet& other);
  SESet& operator=(SESet&& other) noexcept;

  /// All 3^width SE interpretations.
  static SESet all(std::size_t width);
  /// {(Y, Y) | Y ∈ worlds}.
  static SESet diagonal(const ModelSet& worlds);

  std::size_t width() const { return width_; }
  std::size_t size() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }
  bool contains(SEInterpretation p) const { return bits_.test(se_index(width_, p)); }

  /// Throws PreconditionViolation when here ⊄ there.
  void insert(SEInterpretation p);
  void erase(SEInterpretation p);

  std::vector<SEInterpretation> members() const;

  template <typename F>
  void for_each(F&& f) const {
    auto offs = se_offsets(width_);
    for (auto i = bits_.find_first(); i != Bits::npos; i = bits_.find_next(i)) {
      std::uint32_t y = locate_there(offs, static_cast<std::uint32_t>(i));
      std::uint32_t x = deposit_bits(static_cast<std::uint32_t>(i) - offs[y], y);
      f(SEInterpretation{Interpretation{x}, Interpretation{y}});
    }
  }

  /// {Y | (Y, Y) ∈ S}.
  ModelSet there_worlds() const;
  /// {X | (X, Y) ∈ S for some Y}.
  ModelSet here_worlds() const;
  /// {X | (X, Y) ∈ S} for a fixed Y.
  ModelSet heres_of(Interpretation there) const;

  bool subset_of(const SESet& other) const;

  SESet& operator&=(const SESet& other);
  SESet& operator|=(const SESet& other);
  friend SESet operator&(SESet a, const SESet& b) { return a &= b; }
  friend SESet operator|(SESet a, const SESet& b) { return a |= b; }

  friend bool operator==(const SESet& a, const SESet& b) {
    return a.width_ == b.width_ && a.bits_ == b.bits_;
  }
  friend bool operator<(const SESet& a, const SESet& b) {
    return a.width_ != b.width_ ? a.width_ < b.width_ : a.bits_ < b.bits_;
  }

  bool well_defined() const;
  bool complete() const;
  bool hi_closed() const;
  SEProperties properties() const { return {well_defined(), complete(), hi_closed()}; }

  const Bits& bits() const { return bits_; }

 private:
  static std::uint32_t locate_there(std::span<const std::uint32_t> offs, std::uint32_t index);
  void check_width(const SESet& other) const;
  void invalidate() { flags_.store(0, std::memory_order_relaxed); }
  bool cached(int slot, bool (SESet::*compute)() const) const;

  bool compute_well_defined() const;
  bool compute_complete() const;
  bool compute_hi_closed() const;

  std::size_t width_;
  Bits bits_;
  // Bit k: flag k computed; bit k+3: its value.
  mutable std::atomic<std::uint8_t> flags_{0};
};

}  // namespace serev
