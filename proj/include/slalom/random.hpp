#pragma once

#include <cstdint>
#include <random>

#include "slalom/braid.hpp"
#include "slalom/word.hpp"

namespace slalom {

/// Reduced word with length uniform in [0, max_len] and exponents uniform in
/// [-max_exp, max_exp] \ {0}. Generators alternate, starting at random.
FreeWord random_reduced_word(std::mt19937_64& rng, std::size_t max_len, std::int64_t max_exp = 3);

/// Pure braid with at most `max_len` letters, drawn by rejection sampling
/// over uniformly random letter sequences.
BraidWord random_pure_braid(std::mt19937_64& rng, std::size_t max_len);

/// Braid with exactly `len` uniformly random letters (not necessarily pure).
BraidWord random_braid(std::mt19937_64& rng, std::size_t len);

}  // namespace slalom
