#include "palper/word_classes.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "palper/word_core.hpp"

namespace palper {

namespace {

void require_binary(const Word& w) {
  for (Symbol s : w)
    if (s > 1) throw std::invalid_argument("binary input required");
}

// Suffix list of w sorted lexicographically, plus LCP of sorted neighbours.
// Desk-scale words: plain comparison sort is plenty.
void sorted_suffixes(const Word& w, std::vector<std::uint32_t>& sa,
                     std::vector<std::uint32_t>& lcp) {
  const std::size_t n = w.size();
  sa.resize(n);
  std::iota(sa.begin(), sa.end(), 0);
  const Symbol* d = w.data();
  std::sort(sa.begin(), sa.end(), [&](std::uint32_t a, std::uint32_t b) {
    const std::size_t la = n - a, lb = n - b;
    const std::size_t l = std::min(la, lb);
    int c = std::memcmp(d + a, d + b, l);
    if (c != 0) return c < 0;
    return la < lb;
  });
  lcp.assign(n == 0 ? 0 : n - 1, 0);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const std::size_t a = sa[i], b = sa[i + 1];
    const std::size_t limit = n - std::max(a, b);
    std::size_t k = 0;
    while (k < limit && d[a + k] == d[b + k]) ++k;
    lcp[i] = static_cast<std::uint32_t>(k);
  }
}

}  // namespace

std::optional<PathologicalPair> pathological_pair(const Word& w) {
  require_binary(w);
  const std::size_t n = w.size();
  if (n < 2) return std::nullopt;
  // For each candidate length of u, occurrences of 0u0 keyed by the middle
  // factor, matched against middles of 1u1. Middles are compared in place.
  std::vector<std::uint32_t> zeros, ones;
  for (std::size_t ul = 0; ul + 2 <= n; ++ul) {
    zeros.clear();
    ones.clear();
    const std::size_t flen = ul + 2;
    for (std::size_t i = 0; i + flen <= n; ++i) {
      if (w[i] == 0 && w[i + flen - 1] == 0) zeros.push_back(i);
      if (w[i] == 1 && w[i + flen - 1] == 1) ones.push_back(i);
    }
    if (zeros.empty() || ones.empty()) continue;
    const Symbol* d = w.data();
    auto middle_less = [&](std::uint32_t a, std::uint32_t b) {
      return std::memcmp(d + a + 1, d + b + 1, ul) < 0;
    };
    std::sort(ones.begin(), ones.end(), middle_less);
    // zeros stays in position order so the leftmost matching 0u0 wins.
    for (std::uint32_t z : zeros) {
      auto it = std::lower_bound(ones.begin(), ones.end(), z, middle_less);
      if (it != ones.end() && std::memcmp(d + *it + 1, d + z + 1, ul) == 0) {
        // zeros is scanned in position order, so z is already the leftmost
        // 0u0 occurrence of the winning u. Take the leftmost 1u1 to match.
        std::size_t one_pos = *it;
        for (auto jt = it; jt != ones.end() &&
                           std::memcmp(d + *jt + 1, d + z + 1, ul) == 0;
             ++jt)
          one_pos = std::min<std::size_t>(one_pos, *jt);
        return PathologicalPair{w.subword(z + 1, ul), z, one_pos};
      }
    }
  }
  return std::nullopt;
}

bool is_finite_sturmian(const Word& w) {
  if (w.empty())
    throw std::invalid_argument("is_finite_sturmian undefined on empty word");
  return !pathological_pair(w).has_value();
}

std::vector<std::size_t> factor_complexity_profile(const Word& w) {
  const std::size_t n = w.size();
  std::vector<std::size_t> profile(n + 1, 0);
  profile[0] = 1;
  if (n == 0) return profile;
  std::vector<std::uint32_t> sa, lcp;
  sorted_suffixes(w, sa, lcp);
  // Distinct factors of length l = (number of suffixes of length >= l)
  // minus (number of adjacent sorted suffix pairs sharing a prefix >= l).
  std::vector<std::size_t> lcp_at_least(n + 2, 0);
  for (std::uint32_t v : lcp) ++lcp_at_least[std::min<std::size_t>(v, n)];
  for (std::size_t l = n; l >= 1; --l) lcp_at_least[l] += lcp_at_least[l + 1];
  for (std::size_t l = 1; l <= n; ++l)
    profile[l] = (n - l + 1) - lcp_at_least[l];
  return profile;
}

std::size_t factor_complexity(const Word& w, std::size_t n) {
  if (n > w.size())
    throw std::invalid_argument("factor length exceeds word length");
  return factor_complexity_profile(w)[n];
}

bool is_trapezoidal(const Word& w) {
  require_binary(w);
  if (w.empty())
    throw std::invalid_argument("is_trapezoidal undefined on empty word");
  auto profile = factor_complexity_profile(w);
  for (std::size_t l = 0; l < profile.size(); ++l)
    if (profile[l] > l + 1) return false;
  return true;
}

bool is_central(const Word& u) {
  require_binary(u);
  Word ext;
  ext.reserve(u.size() + 2);
  for (Symbol a : {Symbol{0}, Symbol{1}}) {
    for (Symbol b : {Symbol{0}, Symbol{1}}) {
      ext.clear();
      ext.push_back(a);
      ext.append(u);
      ext.push_back(b);
      if (pathological_pair(ext).has_value()) return false;
    }
  }
  return true;
}

bool is_standard_sturmian(const Word& w) {
  require_binary(w);
  const std::size_t n = w.size();
  if (n < 2)
    throw std::invalid_argument("is_standard_sturmian requires length >= 2");
  const Symbol a = w[n - 2], b = w[n - 1];
  if (a == b) return false;
  return is_central(w.subword(0, n - 2));
}

std::size_t distinct_palindromic_factors(const Word& w) {
  // Each prefix contributes at most one new palindrome: its longest
  // palindromic suffix.
  const std::size_t n = w.size();
  if (n == 0) return 0;
  PalindromeOracle oracle(w);
  std::unordered_set<Word, WordHash> pals;
  for (std::size_t end = 1; end <= n; ++end) {
    for (std::size_t len = end; len >= 1; --len) {
      if (oracle.is_palindrome(end - len, len)) {
        pals.insert(w.subword(end - len, len));
        break;
      }
    }
  }
  return pals.size();
}

bool is_rich(const Word& w) {
  return distinct_palindromic_factors(w) == w.size();
}

bool is_closed(const Word& w) {
  const std::size_t n = w.size();
  if (n == 0) throw std::invalid_argument("is_closed undefined on empty word");
  if (n == 1) return true;
  BorderTable bt(w);
  const Symbol* d = w.data();
  for (std::size_t b = bt.border(n); b > 0; b = bt.border(b)) {
    // Does the border w[0..b) occur anywhere besides positions 0 and n-b?
    bool internal = false;
    for (std::size_t i = 1; i + b <= n && !internal; ++i) {
      if (i == n - b) continue;
      if (std::memcmp(d, d + i, b) == 0) internal = true;
    }
    if (!internal) return true;
  }
  return false;
}

}  // namespace palper
