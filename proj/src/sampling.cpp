#include "serev/sampling.hpp"

#include <random>

#include "serev/errors.hpp"
#include "serev/semantics.hpp"

namespace serev {
namespace {

bool in_class(const SESet& s, ProgramClass c) {
  switch (c) {
    case ProgramClass::nlp: return s.hi_closed();
    case ProgramClass::dlp: return s.complete();
    case ProgramClass::glp: return s.well_defined();
  }
  return false;
}

// Draws bits one at a time from a 64-bit engine.
class BitSource {
 public:
  explicit BitSource(std::uint64_t seed) : engine_(seed) {}
  bool next() {
    if (left_ == 0) {
      word_ = engine_();
      left_ = 64;
    }
    bool b = word_ & 1u;
    word_ >>= 1;
    --left_;
    return b;
  }

 private:
  std::mt19937_64 engine_;
  std::uint64_t word_ = 0;
  int left_ = 0;
};

}  // namespace

std::vector<SESet> enumerate_sets(std::size_t width, ProgramClass c) {
  if (width > 2) throw Error("SE sets are only enumerated up to 2 atoms");
  const std::size_t count = interpretation_count(width);
  // Choices per there-world Y: absent, or present with any subset of the
  // proper subsets of Y as further here-worlds.
  std::vector<std::vector<Interpretation>> proper(count);
  std::vector<std::uint64_t> radix(count);
  for (std::uint32_t y = 0; y < count; ++y) {
    for_each_subset(Interpretation{y}, [&](AtomSet x) {
      if (x.bits != y) proper[y].push_back(x);
    });
    radix[y] = 1 + (std::uint64_t{1} << proper[y].size());
  }
  std::uint64_t total = 1;
  for (auto r : radix) total *= r;
  std::vector<SESet> out;
  for (std::uint64_t code = 0; code < total; ++code) {
    SESet s(width);
    std::uint64_t rest = code;
    for (std::uint32_t y = 0; y < count; ++y) {
      std::uint64_t digit = rest % radix[y];
      rest /= radix[y];
      if (digit == 0) continue;
      std::uint64_t mask = digit - 1;
      Interpretation there{y};
      s.insert({there, there});
      for (std::size_t k = 0; k < proper[y].size(); ++k) {
        if ((mask >> k) & 1u) s.insert({proper[y][k], there});
      }
    }
    if (in_class(s, c)) out.push_back(std::move(s));
  }
  return out;
}

std::vector<ModelSet> enumerate_model_sets(std::size_t width) {
  if (width > 3) throw Error("model sets are only enumerated up to 3 atoms");
  std::vector<ModelSet> out;
  const std::uint64_t total = std::uint64_t{1} << interpretation_count(width);
  for (std::uint64_t mask = 0; mask < total; ++mask) out.push_back(ModelSet::from_mask(width, mask));
  return out;
}

std::vector<SESet> sample_sets(std::size_t width, ProgramClass c, std::uint64_t seed, std::size_t count) {
  BitSource bits(seed);
  const std::size_t n = interpretation_count(width);
  std::vector<SESet> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    SESet s(width);
    for (std::uint32_t y = 0; y < n; ++y) {
      Interpretation there{y};
      bool keep = bits.next();
      for_each_subset(there, [&](AtomSet x) {
        if (x == there) return;
        bool pair = bits.next();
        if (keep && pair) s.insert({x, there});
      });
      if (keep) s.insert({there, there});
    }
    if (c != ProgramClass::glp) {
      s = closure(s, c == ProgramClass::dlp ? ClosureTarget::complete : ClosureTarget::hi_closed);
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<ModelSet> sample_model_sets(std::size_t width, std::uint64_t seed, std::size_t count) {
  BitSource bits(seed);
  std::vector<ModelSet> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    ModelSet m(width);
    for (std::uint32_t y = 0; y < interpretation_count(width); ++y) {
      if (bits.next()) m.insert(Interpretation{y});
    }
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<Program> sample_programs(const Alphabet& alphabet, ProgramClass c, std::uint64_t seed,
                                     std::size_t count) {
  std::vector<Program> out;
  for (const auto& s : sample_sets(alphabet.size(), c, seed, count)) out.push_back(synthesize(s, c, alphabet));
  return out;
}

std::vector<Program> enumerate_programs(const Alphabet& alphabet, ProgramClass c) {
  std::vector<Program> out;
  for (const auto& s : enumerate_sets(alphabet.size(), c)) out.push_back(synthesize(s, c, alphabet));
  return out;
}

}  // namespace serev
