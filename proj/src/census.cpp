#include "palper/census.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "palper/word_core.hpp"

namespace palper::census {

namespace {

using ordered_json = nlohmann::ordered_json;

// Double polynomial hashing mod 2^61-1 for duplicate-window detection.
// Fixed bases keep runs byte-stable; two independent hashes over at most a
// few million windows make collisions a non-issue.
constexpr std::uint64_t kMersenne61 = (std::uint64_t{1} << 61) - 1;

std::uint64_t mulmod61(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  std::uint64_t lo = static_cast<std::uint64_t>(p & kMersenne61);
  std::uint64_t hi = static_cast<std::uint64_t>(p >> 61);
  std::uint64_t s = lo + hi;
  if (s >= kMersenne61) s -= kMersenne61;
  return s;
}

class SubstringHasher {
public:
  explicit SubstringHasher(const Word& w) {
    const std::size_t n = w.size();
    for (int h = 0; h < 2; ++h) {
      pow_[h].resize(n + 1);
      pre_[h].resize(n + 1);
      pow_[h][0] = 1;
      pre_[h][0] = 0;
      for (std::size_t i = 0; i < n; ++i) {
        pow_[h][i + 1] = mulmod61(pow_[h][i], kBase[h]);
        std::uint64_t v = mulmod61(pre_[h][i], kBase[h]) + w[i] + 1;
        if (v >= kMersenne61) v -= kMersenne61;
        pre_[h][i + 1] = v;
      }
    }
  }

  std::pair<std::uint64_t, std::uint64_t> hash(std::size_t pos,
                                               std::size_t len) const {
    return {one(0, pos, len), one(1, pos, len)};
  }

private:
  static constexpr std::uint64_t kBase[2] = {131ull, 1000003ull};

  std::uint64_t one(int h, std::size_t pos, std::size_t len) const {
    std::uint64_t whole = pre_[h][pos + len];
    std::uint64_t head = mulmod61(pre_[h][pos], pow_[h][len]);
    std::uint64_t v = whole + kMersenne61 - head;
    if (v >= kMersenne61) v -= kMersenne61;
    return v;
  }

  std::vector<std::uint64_t> pow_[2], pre_[2];
};

struct WindowKey {
  std::uint64_t h1, h2;
  std::uint32_t pos;
  friend bool operator<(const WindowKey& a, const WindowKey& b) {
    if (a.h1 != b.h1) return a.h1 < b.h1;
    if (a.h2 != b.h2) return a.h2 < b.h2;
    return a.pos < b.pos;
  }
};

// Positions of the first occurrence of each distinct length-n factor.
void novel_positions(const SubstringHasher& hasher, std::size_t host_len,
                     std::size_t n, std::vector<WindowKey>& scratch,
                     std::vector<std::uint32_t>& out) {
  scratch.clear();
  out.clear();
  for (std::size_t i = 0; i + n <= host_len; ++i) {
    auto [h1, h2] = hasher.hash(i, n);
    scratch.push_back({h1, h2, static_cast<std::uint32_t>(i)});
  }
  std::sort(scratch.begin(), scratch.end());
  for (std::size_t i = 0; i < scratch.size(); ++i) {
    if (i == 0 || scratch[i].h1 != scratch[i - 1].h1 ||
        scratch[i].h2 != scratch[i - 1].h2)
      out.push_back(scratch[i].pos);
  }
}

std::vector<CensusRow> census_at(const Word& prefix, std::size_t n_lo,
                                 std::size_t n_hi) {
  SubstringHasher hasher(prefix);
  PPChecker checker(prefix);
  std::vector<WindowKey> scratch;
  std::vector<std::uint32_t> novel;
  std::vector<CensusRow> rows;
  rows.reserve(n_hi - n_lo + 1);
  for (std::size_t n = n_lo; n <= n_hi; ++n) {
    novel_positions(hasher, prefix.size(), n, scratch, novel);
    std::size_t pp = 0;
    for (std::uint32_t pos : novel)
      if (checker.is_pp(pos, n)) ++pp;
    rows.push_back(CensusRow{n, novel.size(), pp, std::nullopt, std::nullopt});
  }
  return rows;
}

void validate_policy(const StabilizationPolicy& policy) {
  if (policy.growth < 2)
    throw std::invalid_argument("stabilization growth factor must be >= 2");
  if (policy.cap < policy.initial)
    throw std::invalid_argument("stabilization cap below initial prefix");
}

// Runs compute on growing prefixes until the result is unchanged across two
// consecutive growth steps (one stabilizing doubling plus one confirming).
template <typename Result, typename Compute>
Result stabilize(const seq::SequenceSpec& spec, std::size_t start,
                 const StabilizationPolicy& policy, Compute compute) {
  validate_policy(policy);
  std::size_t len = std::max(start, policy.initial);
  if (len > policy.cap)
    throw CapExceeded("requested range needs a prefix longer than the cap " +
                      std::to_string(policy.cap));
  Result prev = compute(spec.prefix(len));
  int stable_steps = 0;
  while (stable_steps < 2) {
    if (len > policy.cap / policy.growth)
      throw CapExceeded("did not stabilize within the prefix cap " +
                        std::to_string(policy.cap));
    len *= policy.growth;
    Result cur = compute(spec.prefix(len));
    if (cur == prev) {
      ++stable_steps;
    } else {
      stable_steps = 0;
      prev = std::move(cur);
    }
  }
  return prev;
}

}  // namespace

std::vector<CensusRow> pp_census(const seq::SequenceSpec& spec,
                                 std::size_t n_lo, std::size_t n_hi,
                                 StabilizationPolicy policy) {
  if (n_lo < 1 || n_lo > n_hi)
    throw std::invalid_argument("census range must satisfy 1 <= n_lo <= n_hi");
  return stabilize<std::vector<CensusRow>>(
      spec, n_hi + 1, policy,
      [&](const Word& prefix) { return census_at(prefix, n_lo, n_hi); });
}

namespace {

std::vector<Word> inventory_at(const Word& prefix, std::size_t probe_len) {
  SubstringHasher hasher(prefix);
  PPChecker checker(prefix);
  std::vector<WindowKey> scratch;
  std::vector<std::uint32_t> novel;
  std::vector<Word> found;
  const std::size_t top = std::min(probe_len, prefix.size());
  for (std::size_t n = 1; n <= top; ++n) {
    novel_positions(hasher, prefix.size(), n, scratch, novel);
    for (std::uint32_t pos : novel) {
      if (checker.is_pp(pos, n)) {
        if (n == probe_len)
          throw CapExceeded(
              "palindromic-periodicity factors reach the probe length " +
              std::to_string(probe_len) + "; inventory may be infinite");
        found.push_back(prefix.subword(pos, n));
      }
    }
  }
  std::sort(found.begin(), found.end(), [](const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return found;
}

}  // namespace

std::vector<Word> pp_inventory(const seq::SequenceSpec& spec,
                               StabilizationPolicy policy,
                               std::size_t probe_len) {
  if (probe_len < 2) throw std::invalid_argument("probe length must be >= 2");
  return stabilize<std::vector<Word>>(
      spec, probe_len + 1, policy,
      [&](const Word& prefix) { return inventory_at(prefix, probe_len); });
}

MaxPPReport max_pp_factor(const seq::SequenceSpec& spec,
                          StabilizationPolicy policy, std::size_t probe_len) {
  std::vector<Word> inv = pp_inventory(spec, policy, probe_len);
  MaxPPReport report;
  for (const Word& w : inv) report.max_len = std::max(report.max_len, w.size());
  for (const Word& w : inv)
    if (w.size() == report.max_len) report.witnesses.push_back(w);
  return report;
}

MaxPPReport rs_pf_max_length(std::string_view name,
                             StabilizationPolicy policy) {
  if (name != "rudin_shapiro" && name != "paperfolding")
    throw std::invalid_argument(
        "max-length report is defined for rudin_shapiro and paperfolding");
  return max_pp_factor(seq::builtin(name), policy);
}

TribonacciNumbers::TribonacciNumbers(Convention c) : conv_(c) {
  if (c == Convention::literal)
    vals_ = {0, 1, 2};
  else
    vals_ = {0, 1, 2, 4};
}

void TribonacciNumbers::grow_to(std::size_t k) const {
  while (vals_.size() <= k) {
    const std::size_t m = vals_.size();
    vals_.push_back(vals_[m - 1] + vals_[m - 2] + vals_[m - 3]);
  }
}

long long TribonacciNumbers::at(long long k) const {
  if (k < 0) return 0;
  grow_to(static_cast<std::size_t>(k));
  return vals_[static_cast<std::size_t>(k)];
}

long long TribonacciNumbers::index_for(long long n) const {
  if (n < 0) throw std::invalid_argument("index_for needs n >= 0");
  long long k = 0;
  while (at(k + 1) <= n) ++k;
  return k;
}

long long f_pd(long long n) {
  if (n < 0) throw std::invalid_argument("f_pd needs n >= 0");
  if (n == 0) return 0;
  if (n == 1) return 2;
  long long x = 1;
  while (x * 2 <= n) x *= 2;
  const long long r = n - x;
  if (4 * r < x) return 3 * x / 2;
  if (2 * r < x) return 2 * x;
  if (4 * r < 3 * x) return 3 * x - r;
  return 7 * x / 2 - r;
}

long long f_tm(long long n) {
  if (n < 3) throw std::invalid_argument("formula defined for n >= 3");
  long long x = 1;
  int k = 0;
  while (x * 2 <= n) {
    x *= 2;
    ++k;
  }
  const long long r = n - x;
  if (k % 2 == 0) {
    if (4 * r < x) return 2 * x + 2 - 2 * r;
    if (2 * r <= x) return 3 * x + 2 - 2 * r;
    if (4 * r < 3 * x) return 4 * x + 4 - 4 * r;
    return 5 * x + 4 - 4 * r;
  }
  if (8 * r < x) return 3 * x / 2 + 2 - 2 * r;
  if (2 * r < x) return 2 * x + 2 - 2 * r;
  if (2 * r == x) return 4 * x - 2;
  return 6 * x + 4 - 4 * r;
}

std::pair<long long, int> f_tr_with_case(long long n,
                                         const TribonacciNumbers& trib) {
  if (n < 0) throw std::invalid_argument("f_tr needs n >= 0");
  const long long k = trib.index_for(n);
  const long long tk = trib.at(k);
  const long long tk1 = trib.at(k + 1);
  const long long tkm1 = trib.at(k - 1);
  if (2 * n <= tk1 - tkm1 - 1) return {2 * n + 1, 1};
  if (n < tk + tkm1) return {2 * tk1 + 2 * tkm1 - (2 * n + 1), 2};
  return {tk1 + tkm1, 3};
}

long long f_tr(long long n, const TribonacciNumbers& trib) {
  return f_tr_with_case(n, trib).first;
}

FormulaKind formula_for(std::string_view builtin_name) {
  if (builtin_name == "period_doubling") return FormulaKind::period_doubling;
  if (builtin_name == "thue_morse") return FormulaKind::thue_morse;
  if (builtin_name == "tribonacci") return FormulaKind::tribonacci;
  return FormulaKind::none;
}

void annotate(std::vector<CensusRow>& rows, FormulaKind kind,
              const TribonacciNumbers& trib) {
  for (CensusRow& row : rows) {
    std::optional<long long> value;
    switch (kind) {
      case FormulaKind::none:
        break;
      case FormulaKind::period_doubling:
        value = f_pd(static_cast<long long>(row.n));
        break;
      case FormulaKind::thue_morse:
        if (row.n >= 3) value = f_tm(static_cast<long long>(row.n));
        break;
      case FormulaKind::tribonacci:
        value = f_tr(static_cast<long long>(row.n), trib);
        break;
    }
    row.formula = value;
    if (value)
      row.match = (*value == static_cast<long long>(row.pp));
    else
      row.match = std::nullopt;
  }
}

bool BoundsReport::all_hold() const {
  for (const BoundCheck& b : bounds)
    if (!b.violations.empty()) return false;
  return true;
}

BoundsReport verify_bounds(std::string_view name, std::size_t n_lo,
                           std::size_t n_hi, StabilizationPolicy policy) {
  if (name != "period_doubling" && name != "thue_morse" &&
      name != "tribonacci")
    throw std::invalid_argument(
        "bounds are defined for period_doubling, thue_morse, tribonacci");
  BoundsReport report;
  report.word = std::string(name);
  report.n_lo = n_lo;
  report.n_hi = n_hi;
  auto rows = pp_census(seq::builtin(name), n_lo, n_hi, policy);

  auto check = [&](std::string label, std::size_t from,
                   auto holds, auto equal) {
    BoundCheck bc;
    bc.label = std::move(label);
    bc.from = from;
    for (const CensusRow& row : rows) {
      if (row.n < from) continue;
      const long long n = static_cast<long long>(row.n);
      const long long pp = static_cast<long long>(row.pp);
      if (!holds(n, pp)) bc.violations.push_back(row.n);
      if (equal(n, pp)) bc.equalities.push_back(row.n);
    }
    report.bounds.push_back(std::move(bc));
  };

  if (name == "period_doubling") {
    check("pp <= 5n/3", 2,
          [](long long n, long long pp) { return 3 * pp <= 5 * n; },
          [](long long n, long long pp) { return 3 * pp == 5 * n; });
    check("pp >= (6n+6)/5", 3,
          [](long long n, long long pp) { return 5 * pp >= 6 * n + 6; },
          [](long long n, long long pp) { return 5 * pp == 6 * n + 6; });
  } else if (name == "thue_morse") {
    check("pp <= (8n-6)/3", 6,
          [](long long n, long long pp) { return 3 * pp <= 8 * n - 6; },
          [](long long n, long long pp) { return 3 * pp == 8 * n - 6; });
    check("pp >= (n+17)/2", 12,
          [](long long n, long long pp) { return 2 * pp >= n + 17; },
          [](long long n, long long pp) { return 2 * pp == n + 17; });
  } else {
    check("pp <= 2n+1", 1,
          [](long long n, long long pp) { return pp <= 2 * n + 1; },
          [](long long n, long long pp) { return pp == 2 * n + 1; });
    check("pp > alpha*n", 1,
          [](long long n, long long pp) {
            return static_cast<__int128>(pp) * kTribAlphaDen >
                   static_cast<__int128>(n) * kTribAlphaNum;
          },
          [](long long, long long) { return false; });
  }
  return report;
}

std::string to_csv(const std::vector<CensusRow>& rows) {
  std::ostringstream out;
  out << "n,factors,pp,formula,match\n";
  for (const CensusRow& row : rows) {
    out << row.n << ',' << row.factors << ',' << row.pp << ',';
    if (row.formula) out << *row.formula;
    out << ',';
    if (row.match) out << (*row.match ? "true" : "false");
    out << '\n';
  }
  return out.str();
}

std::string to_json_string(const std::vector<CensusRow>& rows) {
  ordered_json arr = ordered_json::array();
  for (const CensusRow& row : rows) {
    ordered_json obj;
    obj["n"] = row.n;
    obj["factors"] = row.factors;
    obj["pp"] = row.pp;
    obj["formula"] = row.formula ? ordered_json(*row.formula) : nullptr;
    obj["match"] = row.match ? ordered_json(*row.match) : nullptr;
    arr.push_back(std::move(obj));
  }
  return arr.dump();
}

std::string to_json_string(const BoundsReport& report) {
  ordered_json obj;
  obj["word"] = report.word;
  obj["n_lo"] = report.n_lo;
  obj["n_hi"] = report.n_hi;
  obj["all_hold"] = report.all_hold();
  ordered_json bounds = ordered_json::array();
  for (const BoundCheck& b : report.bounds) {
    ordered_json jb;
    jb["label"] = b.label;
    jb["from"] = b.from;
    jb["violations"] = b.violations;
    jb["equalities"] = b.equalities;
    bounds.push_back(std::move(jb));
  }
  obj["bounds"] = std::move(bounds);
  return obj.dump();
}

}  // namespace palper::census
