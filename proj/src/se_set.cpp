#include "serev/se_set.hpp"

#include <algorithm>
#include <array>
#include <mutex>

#include "serev/errors.hpp"

namespace serev {

std::span<const std::uint32_t> se_offsets(std::size_t width) {
  static std::array<std::vector<std::uint32_t>, kMaxAtoms + 1> tables;
  static std::array<std::once_flag, kMaxAtoms + 1> once;
  if (width > kMaxAtoms) throw Error("SE sets support at most 16 atoms");
  std::call_once(once[width], [width] {
    auto n = interpretation_count(width);
    auto& t = tables[width];
    t.resize(n + 1);
    t[0] = 0;
    for (std::size_t y = 0; y < n; ++y) {
      t[y + 1] = t[y] + (1u << std::popcount(static_cast<std::uint32_t>(y)));
    }
  });
  return tables[width];
}

SESet::SESet(std::size_t width) : width_(width), bits_(se_offsets(width).back()) {}

SESet::SESet(std::size_t width, std::initializer_list<SEInterpretation> pairs) : SESet(width) {
  for (auto p : pairs) insert(p);
}

SESet::SESet(std::size_t width, const std::vector<SEInterpretation>& pairs) : SESet(width) {
  for (auto p : pairs) insert(p);
}

SESet::SESet(const SESet& other)
    : width_(other.width_), bits_(other.bits_), flags_(other.flags_.load(std::memory_order_relaxed)) {}

SESet::SESet(SESet&& other) noexcept
    : width_(other.width_),
      bits_(std::move(other.bits_)),
      flags_(other.flags_.load(std::memory_order_relaxed)) {}

SESet& SESet::operator=(const SESet& other) {
  if (this != &other) {
    width_ = other.width_;
    bits_ = other.bits_;
    flags_.store(other.flags_.load(std::memory_order_relaxed), std::memory_order_relaxed);
  }
  return *this;
}

SESet& SESet::operator=(SESet&& other) noexcept {
  width_ = other.width_;
  bits_ = std::move(other.bits_);
  flags_.store(other.flags_.load(std::memory_order_relaxed), std::memory_order_relaxed);
  return *this;
}

SESet SESet::all(std::size_t width) {
  SESet out(width);
  out.bits_.set();
  return out;
}

SESet SESet::diagonal(const ModelSet& worlds) {
  SESet out(worlds.width());
  worlds.for_each([&](Interpretation y) { out.insert({y, y}); });
  return out;
}

void SESet::insert(SEInterpretation p) {
  if (!p.valid()) throw PreconditionViolation("SE interpretation needs here ⊆ there");
  if (!p.there.subset_of(universe(width_))) throw AlphabetMismatch("SE interpretation out of range");
  bits_.set(se_index(width_, p));
  invalidate();
}

void SESet::erase(SEInterpretation p) {
  if (!p.valid()) return;
  bits_.reset(se_index(width_, p));
  invalidate();
}

std::uint32_t SESet::locate_there(std::span<const std::uint32_t> offs, std::uint32_t index) {
  auto it = std::upper_bound(offs.begin(), offs.end(), index);
  return static_cast<std::uint32_t>((it - offs.begin()) - 1);
}

std::vector<SEInterpretation> SESet::members() const {
  std::vector<SEInterpretation> out;
  out.reserve(size());
  for_each([&](SEInterpretation p) { out.push_back(p); });
  return out;
}

ModelSet SESet::there_worlds() const {
  ModelSet out(width_);
  auto offs = se_offsets(width_);
  for (std::uint32_t y = 0; y < interpretation_count(width_); ++y) {
    // (Y, Y) is the last slot of Y's slice.
    if (bits_.test(offs[y + 1] - 1)) out.insert(Interpretation{y});
  }
  return out;
}

ModelSet SESet::here_worlds() const {
  ModelSet out(width_);
  for_each([&](SEInterpretation p) { out.insert(p.here); });
  return out;
}

ModelSet SESet::heres_of(Interpretation there) const {
  ModelSet out(width_);
  auto offs = se_offsets(width_);
  std::uint32_t begin = offs[there.bits];
  std::uint32_t end = offs[there.bits + 1];
  for (std::uint32_t i = begin; i < end; ++i) {
    if (bits_.test(i)) out.insert(Interpretation{deposit_bits(i - begin, there.bits)});
  }
  return out;
}

bool SESet::subset_of(const SESet& other) const {
  check_width(other);
  return bits_.is_subset_of(other.bits_);
}

SESet& SESet::operator&=(const SESet& other) {
  check_width(other);
  bits_ &= other.bits_;
  invalidate();
  return *this;
}

SESet& SESet::operator|=(const SESet& other) {
  check_width(other);
  bits_ |= other.bits_;
  invalidate();
  return *this;
}

void SESet::check_width(const SESet& other) const {
  if (width_ != other.width_) {
    throw AlphabetMismatch("SE sets over " + std::to_string(width_) + " and " +
                           std::to_string(other.width_) + " atoms");
  }
}

bool SESet::cached(int slot, bool (SESet::*compute)() const) const {
  auto state = flags_.load(std::memory_order_relaxed);
  if (state & (1u << slot)) return (state >> (slot + 3)) & 1u;
  bool value = (this->*compute)();
  flags_.fetch_or(static_cast<std::uint8_t>((1u << slot) | (value ? 1u << (slot + 3) : 0u)),
                  std::memory_order_relaxed);
  return value;
}

bool SESet::well_defined() const { return cached(0, &SESet::compute_well_defined); }
bool SESet::complete() const { return cached(1, &SESet::compute_complete); }
bool SESet::hi_closed() const { return cached(2, &SESet::compute_hi_closed); }

bool SESet::compute_well_defined() const {
  bool ok = true;
  for_each([&](SEInterpretation p) {
    if (ok && !contains({p.there, p.there})) ok = false;
  });
  return ok;
}

bool SESet::compute_complete() const {
  if (!well_defined()) return false;
  const ModelSet worlds = there_worlds();
  const AtomSet all = universe(width_);
  bool ok = true;
  for_each([&](SEInterpretation p) {
    if (!ok) return;
    for_each_subset(all - p.there, [&](AtomSet extra) {
      Interpretation z = p.there | extra;
      if (ok && worlds.contains(z) && !contains({p.here, z})) ok = false;
    });
  });
  return ok;
}

bool SESet::compute_hi_closed() const {
  if (!complete()) return false;
  for (std::uint32_t z = 0; z < interpretation_count(width_); ++z) {
    auto heres = heres_of(Interpretation{z}).members();
    for (std::size_t i = 0; i < heres.size(); ++i) {
      for (std::size_t j = i + 1; j < heres.size(); ++j) {
        if (!contains({heres[i] & heres[j], Interpretation{z}})) return false;
      }
    }
  }
  return true;
}

}  // namespace serev
