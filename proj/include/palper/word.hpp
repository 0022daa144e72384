#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace palper {

using Symbol = std::uint8_t;

// Words are read and written as digit strings, so symbols stay below 10.
inline constexpr int kMaxAlphabet = 10;

// A finite word over the alphabet {0..9}. The universal value type of the
// library: comparison is lexicographic in natural symbol order, the empty
// word is a valid value.
class Word {
public:
  Word() = default;
  explicit Word(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {}

  // Parses a digit string ("0120" -> word 0,1,2,0). Throws
  // std::invalid_argument on anything that is not a digit.
  static Word parse(std::string_view digits) {
    std::vector<Symbol> syms;
    syms.reserve(digits.size());
    for (char c : digits) {
      if (c < '0' || c > '9')
        throw std::invalid_argument("word must consist of digits 0-9, got '" +
                                    std::string(digits) + "'");
      syms.push_back(static_cast<Symbol>(c - '0'));
    }
    return Word(std::move(syms));
  }

  static Word repeat(const Word& block, std::size_t count) {
    std::vector<Symbol> syms;
    syms.reserve(block.size() * count);
    for (std::size_t i = 0; i < count; ++i)
      syms.insert(syms.end(), block.symbols_.begin(), block.symbols_.end());
    return Word(std::move(syms));
  }

  std::size_t size() const { return symbols_.size(); }
  bool empty() const { return symbols_.empty(); }
  Symbol operator[](std::size_t i) const { return symbols_[i]; }
  const Symbol* data() const { return symbols_.data(); }

  auto begin() const { return symbols_.begin(); }
  auto end() const { return symbols_.end(); }

  void push_back(Symbol s) { symbols_.push_back(s); }
  void pop_back() { symbols_.pop_back(); }
  void append(const Word& w) {
    symbols_.insert(symbols_.end(), w.symbols_.begin(), w.symbols_.end());
  }
  void clear() { symbols_.clear(); }
  void reserve(std::size_t n) { symbols_.reserve(n); }
  void resize(std::size_t n) { symbols_.resize(n); }
  Symbol& at_mut(std::size_t i) { return symbols_[i]; }

  Word subword(std::size_t pos, std::size_t len) const {
    return Word(std::vector<Symbol>(symbols_.begin() + pos,
                                    symbols_.begin() + pos + len));
  }

  Symbol max_symbol() const {
    Symbol m = 0;
    for (Symbol s : symbols_)
      if (s > m) m = s;
    return m;
  }

  std::string str() const {
    std::string out;
    out.reserve(symbols_.size());
    for (Symbol s : symbols_) out.push_back(static_cast<char>('0' + s));
    return out;
  }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

private:
  std::vector<Symbol> symbols_;
};

std::ostream& operator<<(std::ostream& os, const Word& w);

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (Symbol s : w) {
      h ^= s;
      h *= 1099511628211ull;
    }
    h ^= w.size();
    h *= 1099511628211ull;
    return static_cast<std::size_t>(h);
  }
};

// Thrown when a stabilization or search resource cap is hit; the CLI maps it
// to exit code 3.
struct CapExceeded : std::runtime_error {
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace palper
