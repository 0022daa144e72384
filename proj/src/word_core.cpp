#include "palper/word_core.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace palper {

std::ostream& operator<<(std::ostream& os, const Word& w) {
  return os << w.str();
}

void BorderTable::reset(const Word& w) {
  const std::size_t n = w.size();
  fail_.assign(n + 1, 0);
  for (std::size_t i = 1; i < n; ++i) {
    std::uint32_t k = fail_[i];
    while (k > 0 && w[i] != w[k]) k = fail_[k];
    if (w[i] == w[k]) ++k;
    fail_[i + 1] = k;
  }
}

std::vector<std::size_t> BorderTable::periods_of_prefix(std::size_t len) const {
  std::vector<std::size_t> out;
  if (len == 0) return out;
  // Borders in decreasing length order give periods in increasing order.
  for (std::size_t b = fail_[len]; b > 0; b = fail_[b]) out.push_back(len - b);
  out.push_back(len);
  return out;
}

void PalindromeOracle::reset(const Word& w) {
  const std::size_t n = w.size();
  odd_.assign(n, 0);
  even_.assign(n, 0);
  // d1: palindromes of odd length, radius counts the center.
  for (std::size_t i = 0, l = 0, r = 0; i < n; ++i) {
    std::size_t k = 1;
    if (i < r) k = std::min<std::size_t>(odd_[l + r - i - 1], r - i);
    while (k <= i && i + k < n && w[i - k] == w[i + k]) ++k;
    odd_[i] = static_cast<std::uint32_t>(k);
    if (i + k > r) {
      l = i + 1 - k;
      r = i + k;
    }
  }
  // d2: palindromes of even length centered between i-1 and i.
  for (std::size_t i = 0, l = 0, r = 0; i < n; ++i) {
    std::size_t k = 0;
    if (i < r) k = std::min<std::size_t>(even_[l + r - i], r - i);
    while (k < i && i + k < n && w[i - k - 1] == w[i + k]) ++k;
    even_[i] = static_cast<std::uint32_t>(k);
    if (i + k > r) {
      l = i - k;
      r = i + k;
    }
  }
}

Word reverse(const Word& w) {
  std::vector<Symbol> syms(w.begin(), w.end());
  std::reverse(syms.begin(), syms.end());
  return Word(std::move(syms));
}

bool is_palindrome(const Word& w) {
  const std::size_t n = w.size();
  for (std::size_t i = 0; 2 * i + 1 < n; ++i)
    if (w[i] != w[n - 1 - i]) return false;
  return true;
}

namespace {

void require_nonempty(const Word& w, const char* op) {
  if (w.empty())
    throw std::invalid_argument(std::string(op) + " undefined on empty word");
}

}  // namespace

std::vector<std::size_t> periods(const Word& w) {
  require_nonempty(w, "periods");
  return BorderTable(w).periods();
}

Word fractional_root(const Word& w) {
  require_nonempty(w, "fractional_root");
  BorderTable bt(w);
  std::size_t shortest = w.size() - bt.border(w.size());
  return w.subword(0, shortest);
}

bool is_primitive(const Word& w) {
  require_nonempty(w, "is_primitive");
  BorderTable bt(w);
  const std::size_t n = w.size();
  const std::size_t p = n - bt.border(n);
  return !(p < n && n % p == 0);
}

std::optional<std::size_t> is_symmetric(const Word& w) {
  PalindromeOracle oracle(w);
  const std::size_t n = w.size();
  for (std::size_t m = 0; m <= n; ++m)
    if (oracle.is_palindrome(0, m) && oracle.is_palindrome(m, n - m)) return m;
  return std::nullopt;
}

std::vector<Word> conjugates(const Word& w) {
  require_nonempty(w, "conjugates");
  const std::size_t n = w.size();
  std::vector<Word> out;
  out.reserve(n);
  for (std::size_t r = 0; r < n; ++r) {
    std::vector<Symbol> syms;
    syms.reserve(n);
    for (std::size_t i = 0; i < n; ++i) syms.push_back(w[(r + i) % n]);
    out.emplace_back(std::move(syms));
  }
  return out;
}

void PPChecker::reset(const Word& host) {
  host_ = &host;
  oracle_.reset(host);
}

std::optional<std::pair<std::size_t, std::size_t>> PPChecker::find_witness(
    std::size_t pos, std::size_t len) {
  if (len == 0) return std::nullopt;
  const Word& w = *host_;
  // Failure function of the range, computed into the reused buffer.
  if (fail_.size() < len + 1) fail_.resize(len + 1);
  fail_[0] = fail_[1] = 0;
  for (std::size_t i = 1; i < len; ++i) {
    std::uint32_t k = fail_[i];
    while (k > 0 && w[pos + i] != w[pos + k]) k = fail_[k];
    if (w[pos + i] == w[pos + k]) ++k;
    fail_[i + 1] = k;
  }
  // Walk periods in ascending order; for each, scan splits of the period
  // prefix smallest-first.
  std::size_t b = fail_[len];
  while (true) {
    const std::size_t p = len - b;
    for (std::size_t m = 0; m <= p; ++m)
      if (oracle_.is_palindrome(pos, m) && oracle_.is_palindrome(pos + m, p - m))
        return std::make_pair(p, m);
    if (b == 0) break;
    b = fail_[b];
  }
  return std::nullopt;
}

bool PPChecker::is_pp(std::size_t pos, std::size_t len) {
  return find_witness(pos, len).has_value();
}

std::optional<PPWitness> PPChecker::witness(std::size_t pos, std::size_t len) {
  auto hit = find_witness(pos, len);
  if (!hit) return std::nullopt;
  auto [p, m] = *hit;
  // A palindromic period prefix (split 0) is reported as (prefix, empty).
  if (m == 0) return PPWitness{host_->subword(pos, p), Word{}};
  return PPWitness{host_->subword(pos, m), host_->subword(pos + m, p - m)};
}

std::optional<PPWitness> is_pal_periodicity(const Word& w) {
  if (w.empty()) return std::nullopt;
  PPChecker checker(w);
  return checker.witness(0, w.size());
}

std::vector<std::size_t> symmetric_word_periods(const Word& w) {
  require_nonempty(w, "symmetric_word_periods");
  PalindromeOracle oracle(w);
  std::vector<std::size_t> out;
  for (std::size_t p : periods(w)) {
    for (std::size_t m = 0; m <= p; ++m) {
      if (oracle.is_palindrome(0, m) && oracle.is_palindrome(m, p - m)) {
        out.push_back(p);
        break;
      }
    }
  }
  return out;
}

std::optional<std::size_t> first_non_pp_prefix(const Word& w) {
  BorderTable bt(w);
  PalindromeOracle oracle(w);
  for (std::size_t n = 1; n <= w.size(); ++n) {
    bool pp = false;
    for (std::size_t p : bt.periods_of_prefix(n)) {
      for (std::size_t m = 0; m <= p; ++m) {
        if (oracle.is_palindrome(0, m) && oracle.is_palindrome(m, p - m)) {
          pp = true;
          break;
        }
      }
      if (pp) break;
    }
    if (!pp) return n;
  }
  return std::nullopt;
}

}  // namespace palper
