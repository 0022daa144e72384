#include "palper/census.hpp"

#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "palper/seq_generators.hpp"

using namespace palper;
using namespace palper::census;

namespace {

Word W(const char* digits) { return Word::parse(digits); }

// Census recount that only uses the brute-force oracle and direct prefix
// enumeration.
std::pair<std::size_t, std::size_t> naive_census(const Word& prefix,
                                                 std::size_t n) {
  std::set<Word> factors = oracle::factors(prefix, n);
  std::size_t pp = 0;
  for (const Word& f : factors)
    if (oracle::is_pp(f)) ++pp;
  return {factors.size(), pp};
}

}  // namespace

TEST_CASE("tribonacci number conventions") {
  TribonacciNumbers lit(TribonacciNumbers::Convention::literal);
  CHECK(lit.at(-2) == 0);
  CHECK(lit.at(0) == 0);
  CHECK(lit.at(1) == 1);
  CHECK(lit.at(2) == 2);
  CHECK(lit.at(3) == 3);
  CHECK(lit.at(4) == 6);
  CHECK(lit.at(5) == 11);
  CHECK(lit.at(6) == 20);

  TribonacciNumbers std_conv;
  CHECK(std_conv.at(3) == 4);
  CHECK(std_conv.at(4) == 7);
  CHECK(std_conv.at(5) == 13);
  CHECK(std_conv.at(6) == 24);
  CHECK(std_conv.index_for(0) == 0);
  CHECK(std_conv.index_for(1) == 1);
  CHECK(std_conv.index_for(3) == 2);
  CHECK(std_conv.index_for(4) == 3);
  CHECK(std_conv.index_for(23) == 5);
}

TEST_CASE("period-doubling formula values") {
  CHECK(f_pd(0) == 0);
  CHECK(f_pd(1) == 2);
  CHECK(f_pd(2) == 3);
  CHECK(f_pd(3) == 5);
  CHECK(f_pd(4) == 6);
}

TEST_CASE("thue-morse formula values") {
  CHECK_THROWS_AS(f_tm(2), std::invalid_argument);
  CHECK(f_tm(3) == 6);
  CHECK(f_tm(4) == 10);
  CHECK(f_tm(31) == 24);
  CHECK(f_tm(12) == 30);  // (8n-6)/3 attained
  CHECK(f_tm(48) == 126);
}

TEST_CASE("tribonacci formula values") {
  TribonacciNumbers std_conv;
  CHECK(f_tr(2, std_conv) == 5);
  CHECK(f_tr(3, std_conv) == 5);
  // Documented boundary mismatch: the formula yields 2 at n = 1 while the
  // census (all three letters occur) yields 3.
  CHECK(f_tr(1, std_conv) == 2);
  CHECK(f_tr(0, std_conv) == 1);

  // The first case of the theorem is unreachable for n >= 1 under either
  // convention; the comparison tool reports cases 2 and 3 only.
  for (auto conv : {TribonacciNumbers::Convention::literal,
                    TribonacciNumbers::Convention::standard}) {
    TribonacciNumbers t(conv);
    for (long long n = 1; n <= 200; ++n)
      CHECK(f_tr_with_case(n, t).second != 1);
  }
}

TEST_CASE("pd census rows match the naive recount and the formula") {
  auto rows = pp_census(seq::builtin("period_doubling"), 1, 24);
  REQUIRE(rows.size() == 24);

  CHECK(rows[1].n == 2);
  CHECK(rows[1].factors == 3);
  CHECK(rows[1].pp == 3);
  CHECK(rows[2].factors == 5);
  CHECK(rows[2].pp == 5);

  const Word prefix = seq::builtin("period_doubling").prefix(2048);
  for (std::size_t n = 1; n <= 10; ++n) {
    auto [factors, pp] = naive_census(prefix, n);
    CHECK(rows[n - 1].factors == factors);
    CHECK(rows[n - 1].pp == pp);
  }

  annotate(rows, FormulaKind::period_doubling);
  for (const CensusRow& row : rows) {
    REQUIRE(row.formula.has_value());
    CHECK(*row.formula == static_cast<long long>(row.pp));
    CHECK(row.match == true);
  }
}

TEST_CASE("thue-morse census matches the formula on a unit range") {
  auto rows = pp_census(seq::builtin("thue_morse"), 3, 24);
  annotate(rows, FormulaKind::thue_morse);
  for (const CensusRow& row : rows) CHECK(row.match == true);
  CHECK(rows[0].pp == 6);
}

TEST_CASE("census validates its inputs") {
  CHECK_THROWS_AS(pp_census(seq::builtin("thue_morse"), 0, 5),
                  std::invalid_argument);
  CHECK_THROWS_AS(pp_census(seq::builtin("thue_morse"), 5, 4),
                  std::invalid_argument);
  StabilizationPolicy bad;
  bad.growth = 1;
  CHECK_THROWS_AS(pp_census(seq::builtin("thue_morse"), 1, 4, bad),
                  std::invalid_argument);
  StabilizationPolicy tiny;
  tiny.initial = 8;
  tiny.cap = 16;
  CHECK_THROWS_AS(pp_census(seq::builtin("thue_morse"), 1, 4, tiny),
                  CapExceeded);
}

TEST_CASE("census is stable under policy refinement") {
  StabilizationPolicy p1;
  StabilizationPolicy p2;
  p2.initial = 8192;
  auto rows = pp_census(seq::builtin("tribonacci"), 1, 20, p1);
  CHECK(rows == pp_census(seq::builtin("tribonacci"), 1, 20, p2));
  for (const CensusRow& row : rows) CHECK(row.pp <= row.factors);
}

TEST_CASE("tau_f inventory is the nine quoted words") {
  auto inv = pp_inventory(seq::builtin("tau_f"));
  std::vector<std::string> got;
  for (const Word& w : inv) got.push_back(w.str());
  CHECK(got == std::vector<std::string>{"0", "1", "2", "00", "01", "12", "20",
                                        "001", "200"});
}

TEST_CASE("phi_f inventory has 44 elements, none longer than 9") {
  auto inv = pp_inventory(seq::builtin("phi_f"));
  CHECK(inv.size() == 44);
  std::size_t max_len = 0;
  for (const Word& w : inv) max_len = std::max(max_len, w.size());
  CHECK(max_len == 9);
}

TEST_CASE("inventory rejects words with unbounded pp factors") {
  auto zeros = seq::SequenceSpec::eventually_periodic(W(""), W("0"));
  CHECK_THROWS_AS(pp_inventory(zeros), CapExceeded);
  CHECK_THROWS_AS(pp_inventory(seq::builtin("tribonacci")), CapExceeded);
}

TEST_CASE("max length report is restricted to rs and paperfolding") {
  CHECK_THROWS_AS(rs_pf_max_length("thue_morse"), std::invalid_argument);
}

TEST_CASE("bounds reports") {
  auto pd = verify_bounds("period_doubling", 2, 48);
  CHECK(pd.all_hold());
  REQUIRE(pd.bounds.size() == 2);
  CHECK(pd.bounds[0].equalities == std::vector<std::size_t>{3, 6, 12, 24, 48});
  CHECK(pd.bounds[1].equalities == std::vector<std::size_t>{4, 9, 19, 39});

  auto tr = verify_bounds("tribonacci", 1, 30);
  CHECK(tr.all_hold());

  CHECK_THROWS_AS(verify_bounds("fibonacci", 1, 10), std::invalid_argument);
}

TEST_CASE("alpha constant is a lower approximation of the cubic root") {
  // X^3 + 2X^2 + 4X - 8 is strictly increasing, so a negative sign at the
  // stored rational proves it sits below the root. The value is about
  // -2.75e-16, far outside long double rounding error here.
  const long double a =
      static_cast<long double>(kTribAlphaNum) / kTribAlphaDen;
  const long double value = a * a * a + 2 * a * a + 4 * a - 8;
  CHECK(value < 0);
  CHECK(value > -1e-14L);
}

TEST_CASE("census serialization") {
  std::vector<CensusRow> rows{{2, 3, 3, std::nullopt, std::nullopt},
                              {3, 5, 5, 5, true}};
  CHECK(to_csv(rows) ==
        "n,factors,pp,formula,match\n"
        "2,3,3,,\n"
        "3,5,5,5,true\n");
  CHECK(to_json_string(rows) ==
        "[{\"n\":2,\"factors\":3,\"pp\":3,\"formula\":null,\"match\":null},"
        "{\"n\":3,\"factors\":5,\"pp\":5,\"formula\":5,\"match\":true}]");
}
