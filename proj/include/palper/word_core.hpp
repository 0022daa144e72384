#pragma once

#include <optional>
#include <vector>

#include "palper/word.hpp"

namespace palper {

// Classic failure function. border(l) is the length of the longest proper
// border of the prefix of length l; iterating border() from any prefix
// length enumerates all of that prefix's borders, hence all its periods as
// {l - |b| : b border}.
class BorderTable {
public:
  BorderTable() = default;
  explicit BorderTable(const Word& w) { reset(w); }
  void reset(const Word& w);

  std::size_t size() const { return fail_.empty() ? 0 : fail_.size() - 1; }
  std::size_t border(std::size_t prefix_len) const { return fail_[prefix_len]; }

  // Periods of the prefix of length len, ascending; always ends with len.
  std::vector<std::size_t> periods_of_prefix(std::size_t len) const;
  std::vector<std::size_t> periods() const { return periods_of_prefix(size()); }

private:
  std::vector<std::uint32_t> fail_;
};

// Manacher radius arrays; answers "is w[pos..pos+len) a palindrome" in
// constant time after linear construction.
class PalindromeOracle {
public:
  PalindromeOracle() = default;
  explicit PalindromeOracle(const Word& w) { reset(w); }
  void reset(const Word& w);

  std::size_t size() const { return odd_.size(); }

  bool is_palindrome(std::size_t pos, std::size_t len) const {
    if (len <= 1) return true;
    const std::size_t c = pos + len / 2;
    if (len & 1) return odd_[c] >= (len + 1) / 2;
    return even_[c] >= len / 2;
  }

private:
  std::vector<std::uint32_t> odd_, even_;
};

// Certificate that a word is a palindromic periodicity: p and s are
// palindromes, the word has period |p|+|s| and is at least that long.
struct PPWitness {
  Word p;
  Word s;
  std::size_t period() const { return p.size() + s.size(); }

  friend bool operator==(const PPWitness&, const PPWitness&) = default;
};

Word reverse(const Word& w);
bool is_palindrome(const Word& w);

// All periods of w, ascending; |w| is always one of them. Throws on the
// empty word.
std::vector<std::size_t> periods(const Word& w);

// Prefix of length min(periods(w)). Throws on the empty word.
Word fractional_root(const Word& w);

// True iff w is not u^k for any k >= 2. Throws on the empty word.
bool is_primitive(const Word& w);

// Smallest m in [0, |w|] such that w[0..m) and w[m..|w|) are both
// palindromes, or nullopt if w is not a product of two palindromes. Every
// palindrome (and the empty word) yields m = 0.
std::optional<std::size_t> is_symmetric(const Word& w);

// The |w| rotations of w in rotation order starting at offset 0; duplicates
// kept. Throws on the empty word.
std::vector<Word> conjugates(const Word& w);

// Palindromic-periodicity decision with witness extraction: present iff
// some period p of w has a symmetric prefix w[0..p). The witness uses the
// smallest such p and the smallest symmetric split of that prefix; when the
// prefix is itself a palindrome the witness is (prefix, empty). The empty
// word is not a palindromic periodicity.
std::optional<PPWitness> is_pal_periodicity(const Word& w);

// All periods p of w whose prefix w[0..p) is symmetric, ascending; nonempty
// iff is_pal_periodicity(w) is present. Throws on the empty word.
std::vector<std::size_t> symmetric_word_periods(const Word& w);

// Reusable checker for palindromic-periodicity queries on ranges of a fixed
// host word. Buffers are reused across reset() calls, so tight enumeration
// loops run without per-word allocation. Not safe to share across threads.
class PPChecker {
public:
  PPChecker() = default;
  explicit PPChecker(const Word& host) { reset(host); }

  void reset(const Word& host);

  // Is host[pos..pos+len) a palindromic periodicity?
  bool is_pp(std::size_t pos, std::size_t len);

  // Witness for host[pos..pos+len), with the same determinism rules as
  // is_pal_periodicity.
  std::optional<PPWitness> witness(std::size_t pos, std::size_t len);

  const PalindromeOracle& oracle() const { return oracle_; }

private:
  // Smallest period of the range whose prefix is symmetric, with the split;
  // nullopt if none.
  std::optional<std::pair<std::size_t, std::size_t>> find_witness(
      std::size_t pos, std::size_t len);

  const Word* host_ = nullptr;
  PalindromeOracle oracle_;
  std::vector<std::uint32_t> fail_;
};

// Length of the shortest nonempty prefix of w that is NOT a palindromic
// periodicity, or nullopt if every nonempty prefix is one. Single pass over
// one border table and one oracle.
std::optional<std::size_t> first_non_pp_prefix(const Word& w);

}  // namespace palper
