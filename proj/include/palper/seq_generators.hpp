#pragma once

#include <array>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "palper/word.hpp"

namespace palper::seq {

// Letter-to-word substitution over the digit alphabet.
class Morphism {
public:
  Morphism(std::initializer_list<std::pair<int, std::string_view>> images);

  bool has_image(Symbol s) const {
    return s < kMaxAlphabet && images_[s].has_value();
  }
  const Word& image(Symbol s) const;

  // Concatenation of the images of w's letters, in order. Throws if a
  // letter has no image.
  Word apply(const Word& w) const;

private:
  std::array<std::optional<Word>, kMaxAlphabet> images_;
};

// A recipe producing arbitrarily long prefixes of one infinite word.
// Prefixes are stable: prefix(a) is a prefix of prefix(b) whenever a <= b.
class SequenceSpec {
public:
  // Fixed point of m starting from seed; m(seed) must start with seed and
  // have length >= 2, and every reachable letter needs a nonempty image.
  static SequenceSpec fixed_point(Morphism m, Symbol seed);

  // outer applied to the base word, letter by letter.
  static SequenceSpec morphic_image(Morphism outer, SequenceSpec base);

  // Self-contained prefix generator (Rudin-Shapiro counting rule,
  // paperfolding unfolding, ...). gen(len) must return exactly len symbols.
  static SequenceSpec direct_rule(std::string id,
                                  std::function<Word(std::size_t)> gen);

  // preperiod . period . period . ...; period must be nonempty.
  static SequenceSpec eventually_periodic(Word preperiod, Word period);

  // First len symbols of the infinite word.
  Word prefix(std::size_t len) const;

  // Symbols i .. i+n-1, generating a sufficient prefix internally.
  Word factor(std::size_t i, std::size_t n) const;

  const std::string& describe() const { return description_; }

private:
  SequenceSpec() = default;

  struct FixedPoint {
    Morphism morphism;
    Symbol seed;
  };
  struct MorphicImage {
    Morphism outer;
    std::shared_ptr<const SequenceSpec> base;
  };
  struct DirectRule {
    std::function<Word(std::size_t)> gen;
  };
  struct EventuallyPeriodic {
    Word preperiod, period;
  };

  std::string description_;
  std::shared_ptr<FixedPoint> fixed_;
  std::shared_ptr<MorphicImage> image_;
  std::shared_ptr<DirectRule> rule_;
  std::shared_ptr<EventuallyPeriodic> periodic_;
};

// The named words the library ships with: thue_morse, period_doubling,
// rudin_shapiro, paperfolding, fibonacci, tribonacci, tau_f, phi_f.
SequenceSpec builtin(std::string_view name);
const std::vector<std::string>& builtin_names();

// True iff no factor of the length-prefix_len prefix is a k-th power.
bool check_no_kth_power(const SequenceSpec& spec, unsigned k,
                        std::size_t prefix_len);

}  // namespace palper::seq
