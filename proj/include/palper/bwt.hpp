#pragma once

#include "palper/word.hpp"

namespace palper {

// Burrows-Wheeler transform: last letters of the lexicographically sorted
// conjugate multiset (duplicate rotations of non-primitive words kept).
// Throws on the empty word.
Word bwt(const Word& w);

// BWT(w) lies in (k-1)^* ... 1^* 0^*, i.e. its symbols are nonincreasing.
// Throws if some symbol of w is >= alphabet_size.
bool is_perfectly_clustered(const Word& w, int alphabet_size);

}  // namespace palper
