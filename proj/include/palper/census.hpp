#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "palper/seq_generators.hpp"
#include "palper/word.hpp"

namespace palper::census {

// Finite stand-in for infinite-word claims: grow a prefix until the
// measured statistics stop changing across two consecutive growth steps;
// the cap converts nontermination into a diagnosable error (CapExceeded).
struct StabilizationPolicy {
  std::size_t initial = 4096;
  std::size_t growth = 2;
  std::size_t cap = std::size_t{1} << 22;
};

struct CensusRow {
  std::size_t n = 0;
  std::size_t factors = 0;  // distinct length-n factors
  std::size_t pp = 0;       // of which palindromic periodicities
  std::optional<long long> formula;
  std::optional<bool> match;

  friend bool operator==(const CensusRow&, const CensusRow&) = default;
};

// Per-length palindromic-periodicity counts of the stabilized prefix, for
// n in [n_lo, n_hi]. The initial prefix is raised to at least n_hi + 1.
std::vector<CensusRow> pp_census(const seq::SequenceSpec& spec,
                                 std::size_t n_lo, std::size_t n_hi,
                                 StabilizationPolicy policy = {});

// All distinct nonempty palindromic-periodicity factors, any length, sorted
// by (length, lex). Probes lengths up to probe_len; if a pp factor of
// exactly the probe length survives, the inventory may be infinite and
// CapExceeded is thrown.
std::vector<Word> pp_inventory(const seq::SequenceSpec& spec,
                               StabilizationPolicy policy = {},
                               std::size_t probe_len = 64);

struct MaxPPReport {
  std::size_t max_len = 0;
  std::vector<Word> witnesses;  // all pp factors of the maximum length, sorted
};

MaxPPReport max_pp_factor(const seq::SequenceSpec& spec,
                          StabilizationPolicy policy = {},
                          std::size_t probe_len = 64);

// Restriction of max_pp_factor to the two words whose pp factors are known
// to die out; throws for other names.
MaxPPReport rs_pf_max_length(std::string_view name,
                             StabilizationPolicy policy = {});

class TribonacciNumbers {
public:
  // literal: T0=0, T1=1, T2=2, recurrence from n >= 3 (0,1,2,3,6,11,...)
  // standard: seeds 0,1,2,4, recurrence from n >= 4 (0,1,2,4,7,13,24,...)
  enum class Convention { literal, standard };

  explicit TribonacciNumbers(Convention c = Convention::standard);

  long long at(long long k) const;         // 0 for k < 0
  long long index_for(long long n) const;  // largest k with T_k <= n; n >= 0
  Convention convention() const { return conv_; }

private:
  void grow_to(std::size_t k) const;
  Convention conv_;
  mutable std::vector<long long> vals_;
};

// Closed-form factor counts from the per-word theorems. f_pd is total;
// f_tm is defined for n >= 3 and throws below that.
long long f_pd(long long n);
long long f_tm(long long n);

// Value and the 1-based case index that produced it.
std::pair<long long, int> f_tr_with_case(long long n,
                                         const TribonacciNumbers& trib);
long long f_tr(long long n, const TribonacciNumbers& trib);

enum class FormulaKind { none, period_doubling, thue_morse, tribonacci };

// Fills formula/match on rows where the formula is defined; other rows keep
// nullopt. Mismatches are reported, not asserted.
void annotate(std::vector<CensusRow>& rows, FormulaKind kind,
              const TribonacciNumbers& trib = TribonacciNumbers{});

FormulaKind formula_for(std::string_view builtin_name);

// Stored rational lower approximation of the real zero of
// X^3 + 2X^2 + 4X - 8 (the Tribonacci growth bound): 1.0873780253841527.
inline constexpr long long kTribAlphaNum = 10873780253841527LL;
inline constexpr long long kTribAlphaDen = 10000000000000000LL;

struct BoundCheck {
  std::string label;
  std::size_t from = 0;                 // first n the bound applies to
  std::vector<std::size_t> violations;  // n where the bound fails
  std::vector<std::size_t> equalities;  // n where it holds with equality
};

struct BoundsReport {
  std::string word;
  std::size_t n_lo = 0, n_hi = 0;
  std::vector<BoundCheck> bounds;
  bool all_hold() const;
};

// Per-n verification of the published inequalities for period_doubling,
// thue_morse or tribonacci, against census values.
BoundsReport verify_bounds(std::string_view name, std::size_t n_lo,
                           std::size_t n_hi, StabilizationPolicy policy = {});

// Serialization; column order is fixed: n, factors, pp, formula, match.
std::string to_csv(const std::vector<CensusRow>& rows);
std::string to_json_string(const std::vector<CensusRow>& rows);
std::string to_json_string(const BoundsReport& report);

}  // namespace palper::census
