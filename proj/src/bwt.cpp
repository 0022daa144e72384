#include "palper/bwt.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>
#include <stdexcept>

namespace palper {

Word bwt(const Word& w) {
  const std::size_t n = w.size();
  if (n == 0) throw std::invalid_argument("bwt undefined on empty word");
  // Rotations compared on a doubled copy; no per-rotation materialization.
  std::vector<Symbol> doubled(2 * n);
  std::memcpy(doubled.data(), w.data(), n);
  std::memcpy(doubled.data() + n, w.data(), n);
  std::vector<std::uint32_t> rot(n);
  std::iota(rot.begin(), rot.end(), 0);
  std::stable_sort(rot.begin(), rot.end(),
                   [&](std::uint32_t a, std::uint32_t b) {
                     return std::memcmp(doubled.data() + a, doubled.data() + b,
                                        n) < 0;
                   });
  std::vector<Symbol> last;
  last.reserve(n);
  for (std::uint32_t r : rot) last.push_back(doubled[r + n - 1]);
  return Word(std::move(last));
}

bool is_perfectly_clustered(const Word& w, int alphabet_size) {
  if (alphabet_size < 1 || alphabet_size > kMaxAlphabet)
    throw std::invalid_argument("alphabet size must be in [1, 10]");
  for (Symbol s : w)
    if (s >= alphabet_size)
      throw std::invalid_argument("symbol outside the declared alphabet");
  const Word b = bwt(w);
  for (std::size_t i = 0; i + 1 < b.size(); ++i)
    if (b[i] < b[i + 1]) return false;
  return true;
}

}  // namespace palper
