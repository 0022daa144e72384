#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "palper/word.hpp"

namespace palper::search {

// Letters renamed by order of first occurrence; idempotent and
// pp-count-preserving.
Word canonical_form(const Word& w);

// Number of distinct nonempty factors of w that are palindromic
// periodicities. The empty word is never counted.
std::size_t pp_factor_count(const Word& w);

struct SearchReport {
  std::size_t threshold = 0;
  std::size_t length_cap = 0;
  int fixed_alphabet = 0;  // 0 = growing alphabet
  bool closed = false;     // frontier emptied at or before the cap
  std::size_t final_length = 0;  // last length with survivors
  std::vector<std::size_t> frontier_sizes;  // canonical survivors per length,
                                            // index i = length i+1
  std::vector<Word> extremal;  // words at final_length, sorted; in fixed-k
                               // mode expanded to all k-letter relabelings
};

// Level-by-level extension of canonical words, pruning once the distinct
// pp-factor count exceeds the threshold (counts are monotone under
// extension, so pruning is sound). With fixed_alphabet = 0 the alphabet
// grows with the word, capped at 10 letters. Progress, when given, receives
// a note every few million nodes.
SearchReport bfs_longest(std::size_t threshold, std::size_t length_cap,
                         int fixed_alphabet = 0,
                         std::ostream* progress = nullptr);

// All distinct nonempty palindromic-periodicity factors of block^omega.
// Factors are probed up to cap_multiplier * |block| symbols; if pp factors
// are still appearing at that horizon the set is presumed unbounded and
// CapExceeded is thrown (e.g. when block is a palindrome).
std::vector<Word> periodic_pp_set(const Word& block,
                                  std::size_t cap_multiplier = 8);

// One family of words x y^i z (i >= 1), with x, y, z drawn from the listed
// alternatives. Callers wanting conjugacy-closed blocks expand them first.
struct PatternFamily {
  std::vector<Word> prefixes;
  std::vector<Word> blocks;
  std::vector<Word> suffixes;
};

struct FormsReport {
  std::size_t threshold = 0;
  std::size_t len_lo = 0, len_hi = 0;
  std::size_t checked = 0;          // survivors in the length range
  std::vector<Word> violations;     // survivors matching no family
};

// Enumerates every canonical word in [len_lo, len_hi] with pp_factor_count
// <= threshold and reports the ones outside all families. fixed_alphabet
// as in bfs_longest (0 = growing).
FormsReport verify_structural_forms(std::size_t threshold, std::size_t len_lo,
                                    std::size_t len_hi,
                                    const std::vector<PatternFamily>& families,
                                    int fixed_alphabet = 0);

// Number of binary words of length n that are palindromic periodicities;
// both alphabet labelings counted.
std::uint64_t count_binary_pp_words(std::size_t n);

std::string to_json_string(const SearchReport& report);
std::string to_json_string(const FormsReport& report);

}  // namespace palper::search
