#include "palper/extremal_search.hpp"

#include <algorithm>
#include <array>
#include <ostream>
#include <stdexcept>
#include <unordered_set>

#include <json.hpp>

#include "palper/parallel.hpp"
#include "palper/word_core.hpp"

namespace palper::search {

namespace {

using ordered_json = nlohmann::ordered_json;

// Exact nibble packing of a short word; sound dedup key for the search
// sets. 4 bits per symbol plus a length byte fits length <= 30 in 128 bits.
// Longer pp factors (long runs near a high threshold) are rare and kept as
// plain words.
using PackedWord = unsigned __int128;
constexpr std::size_t kMaxPackedLen = 30;

PackedWord pack(const Word& w, std::size_t pos, std::size_t len) {
  PackedWord key = len;
  for (std::size_t i = 0; i < len; ++i) key = (key << 4) | w[pos + i];
  return key;
}

// The pp-factor set of one node of the survivor tree.
struct PPSet {
  std::vector<PackedWord> packed;  // sorted, factors of length <= 30
  std::vector<Word> longer;        // sorted, the rest

  std::size_t size() const { return packed.size() + longer.size(); }

  bool contains(const Word& w, std::size_t pos, std::size_t len) const {
    if (len <= kMaxPackedLen)
      return std::binary_search(packed.begin(), packed.end(),
                                pack(w, pos, len));
    const Word factor = w.subword(pos, len);
    return std::binary_search(longer.begin(), longer.end(), factor);
  }
};

struct LevelStats {
  std::size_t best = 0;          // deepest length reached
  std::vector<Word> best_words;  // survivors at that length
};

// Shared depth-first walk over the canonical survivor tree. visit(word,
// depth) is called for every survivor; pruning on the pp-factor count makes
// the walk finite.
class SurvivorWalk {
public:
  SurvivorWalk(std::size_t threshold, std::size_t length_cap, int fixed_k,
               std::ostream* progress)
      : threshold_(threshold),
        length_cap_(length_cap),
        fixed_k_(fixed_k),
        progress_(progress) {}

  template <typename Visit>
  void run(Visit&& visit) {
    Word w;
    PPSet pps;
    extend(w, pps, visit);
  }

private:
  template <typename Visit>
  void extend(Word& w, const PPSet& pps, Visit&& visit) {
    if (w.size() == length_cap_) return;
    const int used = w.empty() ? 0 : int(w.max_symbol()) + 1;
    const int limit = fixed_k_ > 0 ? std::min(fixed_k_, used + 1)
                                   : std::min(kMaxAlphabet, used + 1);
    for (int letter = 0; letter < limit; ++letter) {
      w.push_back(static_cast<Symbol>(letter));
      checker_.reset(w);
      std::vector<PackedWord> added;
      std::vector<Word> added_long;
      const std::size_t len = w.size();
      for (std::size_t i = 0; i < len; ++i) {
        if (checker_.is_pp(i, len - i) && !pps.contains(w, i, len - i)) {
          if (len - i <= kMaxPackedLen)
            added.push_back(pack(w, i, len - i));
          else
            added_long.push_back(w.subword(i, len - i));
        }
      }
      std::sort(added.begin(), added.end());
      std::sort(added_long.begin(), added_long.end());
      if (pps.size() + added.size() + added_long.size() <= threshold_) {
        PPSet child;
        child.packed.reserve(pps.packed.size() + added.size());
        std::merge(pps.packed.begin(), pps.packed.end(), added.begin(),
                   added.end(), std::back_inserter(child.packed));
        child.longer.reserve(pps.longer.size() + added_long.size());
        std::merge(pps.longer.begin(), pps.longer.end(), added_long.begin(),
                   added_long.end(), std::back_inserter(child.longer));
        if (progress_ && ++visited_ % (1u << 22) == 0)
          *progress_ << "  ... " << visited_ << " canonical words visited, at "
                     << w.str() << "\n";
        visit(w, w.size());
        extend(w, child, visit);
      }
      w.pop_back();
    }
  }

  std::size_t threshold_, length_cap_;
  int fixed_k_;
  std::ostream* progress_;
  PPChecker checker_;
  std::uint64_t visited_ = 0;
};

// Distinct relabelings of a canonical word over a k-letter alphabet.
void relabelings(const Word& w, int k, std::vector<Word>& out) {
  const int used = w.empty() ? 0 : int(w.max_symbol()) + 1;
  std::vector<Symbol> map(used, 0);
  std::vector<bool> taken(k, false);
  auto rec = [&](auto&& self, int next) -> void {
    if (next == used) {
      Word relabeled;
      relabeled.reserve(w.size());
      for (Symbol s : w) relabeled.push_back(map[s]);
      out.push_back(std::move(relabeled));
      return;
    }
    for (int target = 0; target < k; ++target) {
      if (taken[target]) continue;
      taken[target] = true;
      map[next] = static_cast<Symbol>(target);
      self(self, next + 1);
      taken[target] = false;
    }
  };
  rec(rec, 0);
}

}  // namespace

Word canonical_form(const Word& w) {
  std::array<int, kMaxAlphabet> map;
  map.fill(-1);
  int next = 0;
  Word out;
  out.reserve(w.size());
  for (Symbol s : w) {
    if (map[s] < 0) map[s] = next++;
    out.push_back(static_cast<Symbol>(map[s]));
  }
  return out;
}

std::size_t pp_factor_count(const Word& w) {
  const std::size_t n = w.size();
  if (n == 0) return 0;
  PPChecker checker(w);
  std::unordered_set<Word, WordHash> pps;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t len = 1; i + len <= n; ++len)
      if (checker.is_pp(i, len)) pps.insert(w.subword(i, len));
  return pps.size();
}

SearchReport bfs_longest(std::size_t threshold, std::size_t length_cap,
                         int fixed_alphabet, std::ostream* progress) {
  if (threshold < 1) throw std::invalid_argument("threshold must be >= 1");
  if (length_cap < 1 || length_cap > 10000)
    throw std::invalid_argument("length cap must be in [1, 10000]");
  if (fixed_alphabet < 0 || fixed_alphabet > kMaxAlphabet)
    throw std::invalid_argument("fixed alphabet size must be in [0, 10]");

  SearchReport report;
  report.threshold = threshold;
  report.length_cap = length_cap;
  report.fixed_alphabet = fixed_alphabet;
  report.frontier_sizes.assign(length_cap, 0);

  LevelStats stats;
  SurvivorWalk walk(threshold, length_cap, fixed_alphabet, progress);
  walk.run([&](const Word& w, std::size_t depth) {
    ++report.frontier_sizes[depth - 1];
    if (depth > stats.best) {
      stats.best = depth;
      stats.best_words.clear();
    }
    if (depth == stats.best) stats.best_words.push_back(w);
  });

  report.final_length = stats.best;
  report.frontier_sizes.resize(stats.best);
  report.closed = stats.best < length_cap;

  if (fixed_alphabet > 0) {
    for (const Word& w : stats.best_words)
      relabelings(w, fixed_alphabet, report.extremal);
  } else {
    report.extremal = std::move(stats.best_words);
  }
  std::sort(report.extremal.begin(), report.extremal.end());
  return report;
}

std::vector<Word> periodic_pp_set(const Word& block,
                                  std::size_t cap_multiplier) {
  if (block.empty())
    throw std::invalid_argument("periodic_pp_set needs a nonempty block");
  if (cap_multiplier < 2)
    throw std::invalid_argument("cap multiplier must be >= 2");
  const std::size_t b = block.size();
  const std::size_t horizon = cap_multiplier * b;
  // Enough copies that every length-<=horizon factor of block^omega shows
  // up as a window starting in the first b positions.
  const Word unrolled = Word::repeat(block, horizon / b + 2);
  PPChecker checker(unrolled);
  std::unordered_set<Word, WordHash> seen;
  std::vector<Word> out;
  for (std::size_t len = 1; len <= horizon; ++len) {
    bool pp_at_len = false;
    for (std::size_t i = 0; i < b; ++i) {
      if (!checker.is_pp(i, len)) continue;
      pp_at_len = true;
      Word factor = unrolled.subword(i, len);
      if (seen.insert(factor).second) out.push_back(std::move(factor));
    }
    if (pp_at_len && len == horizon)
      throw CapExceeded(
          "palindromic-periodicity factors of the periodic word keep growing "
          "past " +
          std::to_string(horizon) + " symbols; the set is presumed unbounded");
  }
  std::sort(out.begin(), out.end(), [](const Word& a, const Word& b2) {
    if (a.size() != b2.size()) return a.size() < b2.size();
    return a < b2;
  });
  return out;
}

FormsReport verify_structural_forms(
    std::size_t threshold, std::size_t len_lo, std::size_t len_hi,
    const std::vector<PatternFamily>& families, int fixed_alphabet) {
  if (len_lo < 1 || len_lo > len_hi || len_hi > 10000)
    throw std::invalid_argument("length range must satisfy 1 <= lo <= hi <= 10000");
  if (fixed_alphabet < 0 || fixed_alphabet > kMaxAlphabet)
    throw std::invalid_argument("fixed alphabet size must be in [0, 10]");

  auto starts_with = [](const Word& w, const Word& p, std::size_t at) {
    if (at + p.size() > w.size()) return false;
    for (std::size_t i = 0; i < p.size(); ++i)
      if (w[at + i] != p[i]) return false;
    return true;
  };
  auto matches_family = [&](const Word& w, const PatternFamily& fam) {
    for (const Word& x : fam.prefixes) {
      if (!starts_with(w, x, 0)) continue;
      for (const Word& y : fam.blocks) {
        if (y.empty()) continue;
        std::size_t pos = x.size();
        while (starts_with(w, y, pos)) {
          pos += y.size();
          for (const Word& z : fam.suffixes)
            if (pos + z.size() == w.size() && starts_with(w, z, pos))
              return true;
        }
      }
    }
    return false;
  };

  FormsReport report;
  report.threshold = threshold;
  report.len_lo = len_lo;
  report.len_hi = len_hi;

  SurvivorWalk walk(threshold, len_hi, fixed_alphabet, nullptr);
  walk.run([&](const Word& w, std::size_t depth) {
    if (depth < len_lo) return;
    ++report.checked;
    for (const PatternFamily& fam : families)
      if (matches_family(w, fam)) return;
    report.violations.push_back(w);
  });
  std::sort(report.violations.begin(), report.violations.end());
  return report;
}

std::uint64_t count_binary_pp_words(std::size_t n) {
  if (n < 1) throw std::invalid_argument("count_binary_pp_words needs n >= 1");
  if (n > 26)
    throw CapExceeded(
        "count_binary_pp_words enumerates 2^n words; n > 26 is not practical");
  std::vector<std::uint64_t> partial(worker_count(), 0);
  parallel_blocks(std::uint64_t{1} << n,
                  [&](std::uint64_t begin, std::uint64_t end, unsigned worker) {
                    Word w;
                    w.resize(n);
                    PPChecker checker;
                    std::uint64_t count = 0;
                    for (std::uint64_t mask = begin; mask < end; ++mask) {
                      for (std::size_t i = 0; i < n; ++i)
                        w.at_mut(i) = static_cast<Symbol>((mask >> i) & 1);
                      checker.reset(w);
                      if (checker.is_pp(0, n)) ++count;
                    }
                    partial[worker] = count;
                  });
  std::uint64_t total = 0;
  for (std::uint64_t c : partial) total += c;
  return total;
}

std::string to_json_string(const SearchReport& report) {
  ordered_json obj;
  obj["threshold"] = report.threshold;
  obj["length_cap"] = report.length_cap;
  obj["alphabet"] = report.fixed_alphabet == 0
                        ? ordered_json("growing")
                        : ordered_json(report.fixed_alphabet);
  obj["closed"] = report.closed;
  obj["final_length"] = report.final_length;
  obj["frontier_sizes"] = report.frontier_sizes;
  ordered_json words = ordered_json::array();
  for (const Word& w : report.extremal) words.push_back(w.str());
  obj["extremal"] = std::move(words);
  return obj.dump();
}

std::string to_json_string(const FormsReport& report) {
  ordered_json obj;
  obj["threshold"] = report.threshold;
  obj["len_lo"] = report.len_lo;
  obj["len_hi"] = report.len_hi;
  obj["checked"] = report.checked;
  ordered_json words = ordered_json::array();
  for (const Word& w : report.violations) words.push_back(w.str());
  obj["violations"] = std::move(words);
  return obj.dump();
}

}  // namespace palper::search
