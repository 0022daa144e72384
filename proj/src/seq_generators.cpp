#include "palper/seq_generators.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace palper::seq {

Morphism::Morphism(
    std::initializer_list<std::pair<int, std::string_view>> images) {
  for (const auto& [letter, digits] : images) {
    if (letter < 0 || letter >= kMaxAlphabet)
      throw std::invalid_argument("morphism letter out of range");
    images_[letter] = Word::parse(digits);
  }
}

const Word& Morphism::image(Symbol s) const {
  if (!has_image(s))
    throw std::invalid_argument("morphism has no image for symbol " +
                                std::to_string(int(s)));
  return *images_[s];
}

Word Morphism::apply(const Word& w) const {
  std::size_t total = 0;
  for (Symbol s : w) total += image(s).size();
  Word out;
  out.reserve(total);
  for (Symbol s : w) out.append(image(s));
  return out;
}

SequenceSpec SequenceSpec::fixed_point(Morphism m, Symbol seed) {
  const Word& seed_image = m.image(seed);
  if (seed_image.empty() || seed_image[0] != seed)
    throw std::invalid_argument(
        "fixed point requires the seed's image to start with the seed");
  if (seed_image.size() < 2)
    throw std::invalid_argument(
        "fixed point requires the seed's image to have length >= 2");
  SequenceSpec spec;
  spec.description_ = "fixed point from " + std::to_string(int(seed));
  spec.fixed_ = std::make_shared<FixedPoint>(FixedPoint{std::move(m), seed});
  return spec;
}

SequenceSpec SequenceSpec::morphic_image(Morphism outer, SequenceSpec base) {
  SequenceSpec spec;
  spec.description_ = "morphic image of " + base.describe();
  spec.image_ = std::make_shared<MorphicImage>(MorphicImage{
      std::move(outer), std::make_shared<SequenceSpec>(std::move(base))});
  return spec;
}

SequenceSpec SequenceSpec::direct_rule(std::string id,
                                       std::function<Word(std::size_t)> gen) {
  SequenceSpec spec;
  spec.description_ = std::move(id);
  spec.rule_ = std::make_shared<DirectRule>(DirectRule{std::move(gen)});
  return spec;
}

SequenceSpec SequenceSpec::eventually_periodic(Word preperiod, Word period) {
  if (period.empty())
    throw std::invalid_argument("eventually periodic word needs a period");
  SequenceSpec spec;
  spec.description_ =
      "eventually periodic " + preperiod.str() + "(" + period.str() + ")*";
  spec.periodic_ = std::make_shared<EventuallyPeriodic>(
      EventuallyPeriodic{std::move(preperiod), std::move(period)});
  return spec;
}

Word SequenceSpec::prefix(std::size_t len) const {
  if (fixed_) {
    Word w;
    w.push_back(fixed_->seed);
    while (w.size() < len) w = fixed_->morphism.apply(w);
    w.resize(len);
    return w;
  }
  if (image_) {
    // With nonempty images, len base letters already yield >= len symbols;
    // the loop only matters for erasing outer morphisms.
    std::size_t base_len = len;
    Word out = image_->outer.apply(image_->base->prefix(base_len));
    while (out.size() < len) {
      base_len = base_len * 2 + 1;
      Word longer = image_->outer.apply(image_->base->prefix(base_len));
      if (longer.size() == out.size())
        throw std::invalid_argument(
            "outer morphism erases the base word; prefix unavailable");
      out = std::move(longer);
    }
    out.resize(len);
    return out;
  }
  if (rule_) {
    Word out = rule_->gen(len);
    if (out.size() != len)
      throw std::invalid_argument("direct rule produced wrong length");
    return out;
  }
  if (periodic_) {
    Word out;
    out.reserve(len);
    const Word& pre = periodic_->preperiod;
    const Word& per = periodic_->period;
    for (std::size_t i = 0; i < len && i < pre.size(); ++i)
      out.push_back(pre[i]);
    while (out.size() < len)
      out.push_back(per[(out.size() - pre.size()) % per.size()]);
    return out;
  }
  throw std::invalid_argument("empty sequence spec");
}

Word SequenceSpec::factor(std::size_t i, std::size_t n) const {
  if (n == 0) return Word{};
  return prefix(i + n).subword(i, n);
}

namespace {

Word rudin_shapiro_prefix(std::size_t len) {
  // Parity of the number of (possibly overlapping) 11 blocks in binary(n).
  Word out;
  out.reserve(len);
  for (std::size_t n = 0; n < len; ++n)
    out.push_back(static_cast<Symbol>(
        std::popcount(static_cast<std::uint64_t>(n) & (n >> 1)) & 1));
  return out;
}

Word paperfolding_prefix(std::size_t len) {
  // p_0 = 0, p_{k+1} = p_k . 0 . complement(p_k)^R, unfolded until long
  // enough.
  Word p;
  p.push_back(0);
  while (p.size() < len) {
    Word next = p;
    next.reserve(2 * p.size() + 1);
    next.push_back(0);
    for (std::size_t i = p.size(); i-- > 0;)
      next.push_back(static_cast<Symbol>(1 - p[i]));
    p = std::move(next);
  }
  p.resize(len);
  return p;
}

SequenceSpec make_builtin(std::string_view name) {
  if (name == "thue_morse")
    return SequenceSpec::fixed_point(Morphism{{0, "01"}, {1, "10"}}, 0);
  if (name == "period_doubling")
    return SequenceSpec::fixed_point(Morphism{{1, "10"}, {0, "11"}}, 1);
  if (name == "fibonacci")
    return SequenceSpec::fixed_point(Morphism{{0, "01"}, {1, "0"}}, 0);
  if (name == "tribonacci")
    return SequenceSpec::fixed_point(Morphism{{0, "01"}, {1, "02"}, {2, "0"}},
                                     0);
  if (name == "rudin_shapiro")
    return SequenceSpec::direct_rule("rudin_shapiro", rudin_shapiro_prefix);
  if (name == "paperfolding")
    return SequenceSpec::direct_rule("paperfolding", paperfolding_prefix);
  if (name == "tau_f")
    return SequenceSpec::morphic_image(Morphism{{0, "0"}, {1, "12"}},
                                       builtin("fibonacci"));
  if (name == "phi_f")
    return SequenceSpec::morphic_image(Morphism{{0, "0"}, {1, "01101"}},
                                       builtin("fibonacci"));
  std::ostringstream msg;
  msg << "unknown word '" << name << "'; valid names:";
  for (const auto& n : builtin_names()) msg << ' ' << n;
  throw std::invalid_argument(msg.str());
}

}  // namespace

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = {
      "thue_morse", "period_doubling", "rudin_shapiro", "paperfolding",
      "fibonacci",  "tribonacci",      "tau_f",         "phi_f"};
  return names;
}

SequenceSpec builtin(std::string_view name) { return make_builtin(name); }

bool check_no_kth_power(const SequenceSpec& spec, unsigned k,
                        std::size_t prefix_len) {
  if (k < 2) throw std::invalid_argument("power order must be >= 2");
  if (prefix_len == 0) throw std::invalid_argument("prefix length must be >= 1");
  const Word w = spec.prefix(prefix_len);
  const std::size_t n = w.size();
  // A k-th power with period p exists iff some run of w[t] == w[t+p]
  // matches reaches length (k-1)*p.
  for (std::size_t p = 1; k * p <= n; ++p) {
    std::size_t run = 0;
    const std::size_t need = (k - 1) * p;
    for (std::size_t t = 0; t + p < n; ++t) {
      run = (w[t] == w[t + p]) ? run + 1 : 0;
      if (run >= need) return false;
    }
  }
  return true;
}

}  // namespace palper::seq
