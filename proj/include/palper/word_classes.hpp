#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "palper/word.hpp"

namespace palper {

// Witness that a binary word is not finite-Sturmian: both 0u0 and 1u1 occur
// in it. u has minimal length; ties are broken by the leftmost 0u0
// occurrence. Positions are the leftmost occurrence of each factor.
struct PathologicalPair {
  Word u;
  std::size_t pos_0u0;
  std::size_t pos_1u1;
};

// Minimal pathological pair of a binary word, or nullopt if the word is
// finite-Sturmian. Throws on non-binary input.
std::optional<PathologicalPair> pathological_pair(const Word& w);

// Coven-Hedlund criterion: a binary word is finite-Sturmian iff it has no
// pathological pair. Throws on non-binary or empty input.
bool is_finite_sturmian(const Word& w);

// Number of distinct length-n factors of w. Throws if n > |w|.
std::size_t factor_complexity(const Word& w, std::size_t n);

// factor_complexity for every length at once: profile[n] = number of
// distinct length-n factors, n in [0, |w|].
std::vector<std::size_t> factor_complexity_profile(const Word& w);

// At most n+1 distinct factors of every length n. Trapezoidal words are
// binary by definition; non-binary input throws.
bool is_trapezoidal(const Word& w);

// u is central iff 0u0, 0u1, 1u0 and 1u1 are all finite-Sturmian. The empty
// word is central. Throws on non-binary input.
bool is_central(const Word& u);

// w is standard iff w = u01 or w = u10 for a central u. Throws if |w| < 2
// or w is non-binary.
bool is_standard_sturmian(const Word& w);

// Number of distinct nonempty palindromic factors of w.
std::size_t distinct_palindromic_factors(const Word& w);

// A length-n word is rich iff it has n distinct nonempty palindromic
// factors.
bool is_rich(const Word& w);

// w is closed iff |w| = 1 or some nonempty border of w has no internal
// occurrence. Throws on the empty word.
bool is_closed(const Word& w);

}  // namespace palper
