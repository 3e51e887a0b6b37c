#include "serev/model_set.hpp"

#include "serev/errors.hpp"

namespace serev {

ModelSet::ModelSet(std::size_t width) : width_(width), bits_(interpretation_count(width)) {
  if (width > kMaxAtoms) throw Error("model sets support at most 16 atoms");
}

ModelSet::ModelSet(std::size_t width, std::initializer_list<Interpretation> members)
    : ModelSet(width) {
  for (auto m : members) insert(m);
}

ModelSet::ModelSet(std::size_t width, const std::vector<Interpretation>& members)
    : ModelSet(width) {
  for (auto m : members) insert(m);
}

ModelSet ModelSet::all(std::size_t width) {
  ModelSet out(width);
  out.bits_.set();
  return out;
}

ModelSet ModelSet::from_bits(std::size_t width, Bits bits) {
  ModelSet out(width);
  if (bits.size() != out.bits_.size()) throw AlphabetMismatch("model set bit width mismatch");
  out.bits_ = std::move(bits);
  return out;
}

ModelSet ModelSet::from_mask(std::size_t width, std::uint64_t mask) {
  if (width > 6) throw Error("from_mask needs width <= 6");
  ModelSet out(width);
  for (std::size_t i = 0; i < out.bits_.size(); ++i) {
    if ((mask >> i) & 1u) out.bits_.set(i);
  }
  return out;
}

std::vector<Interpretation> ModelSet::members() const {
  std::vector<Interpretation> out;
  out.reserve(size());
  for_each([&](Interpretation i) { out.push_back(i); });
  return out;
}

bool ModelSet::subset_of(const ModelSet& other) const {
  check_width(other);
  return bits_.is_subset_of(other.bits_);
}

ModelSet ModelSet::complement() const {
  ModelSet out(*this);
  out.bits_.flip();
  return out;
}

ModelSet& ModelSet::operator&=(const ModelSet& other) {
  check_width(other);
  bits_ &= other.bits_;
  return *this;
}

ModelSet& ModelSet::operator|=(const ModelSet& other) {
  check_width(other);
  bits_ |= other.bits_;
  return *this;
}

ModelSet& ModelSet::operator-=(const ModelSet& other) {
  check_width(other);
  bits_ -= other.bits_;
  return *this;
}

void ModelSet::check_width(const ModelSet& other) const {
  if (width_ != other.width_) {
    throw AlphabetMismatch("model sets over " + std::to_string(width_) + " and " +
                           std::to_string(other.width_) + " atoms");
  }
}

}  // namespace serev
