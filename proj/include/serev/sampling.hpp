#pragma once

#include <cstdint>
#include <vector>

#include "serev/alphabet.hpp"
#include "serev/model_set.hpp"
#include "serev/program.hpp"
#include "serev/se_set.hpp"

namespace serev {

/// Every SE set over `width` atoms (width <= 2) expressible in class `c`:
/// well-defined (GLP), complete (DLP) or here-closed (NLP). Fixed order.
std::vector<SESet> enumerate_sets(std::size_t width, ProgramClass c);

/// Every model set over `width` atoms (width <= 3), by increasing bit mask.
std::vector<ModelSet> enumerate_model_sets(std::size_t width);

/// Deterministic stream of `count` SE sets. Each there-world is kept with
/// probability 1/2, each pair (X, Y) with X ⊊ Y and Y kept with probability
/// 1/2; the draw is then closed to the class.
std::vector<SESet> sample_sets(std::size_t width, ProgramClass c, std::uint64_t seed, std::size_t count);

/// Each interpretation kept with probability 1/2.
std::vector<ModelSet> sample_model_sets(std::size_t width, std::uint64_t seed, std::size_t count);

/// sample_sets followed by synthesis in class `c`.
std::vector<Program> sample_programs(const Alphabet& alphabet, ProgramClass c, std::uint64_t seed,
                                     std::size_t count);

/// One program per set of enumerate_sets (width <= 2).
std::vector<Program> enumerate_programs(const Alphabet& alphabet, ProgramClass c);

}  // namespace serev
