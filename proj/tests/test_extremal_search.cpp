#include "palper/extremal_search.hpp"

#include <doctest.h>

#include <cstdlib>
#include <random>

#include "oracles.hpp"
#include "palper/parallel.hpp"
#include "palper/word_core.hpp"

using namespace palper;
using namespace palper::search;

namespace {
Word W(const char* digits) { return Word::parse(digits); }
}  // namespace

TEST_CASE("canonical form") {
  CHECK(canonical_form(W("2101")).str() == "0121");
  CHECK(canonical_form(W("0012")).str() == "0012");
  CHECK(canonical_form(W("111")).str() == "000");
  CHECK(canonical_form(W("")).empty());
}

TEST_CASE("canonical form is idempotent and preserves pp counts") {
  std::size_t bad = 0;
  oracle::for_each_word_up_to(3, 8, [&](const Word& w) {
    const Word c = canonical_form(w);
    if (canonical_form(c) != c) ++bad;
    if (pp_factor_count(c) != pp_factor_count(w)) ++bad;
  });
  CHECK(bad == 0);
}

TEST_CASE("pp factor count") {
  CHECK(pp_factor_count(W("00000")) == 5);
  CHECK(pp_factor_count(W("012")) == 5);  // 0, 1, 2, 01, 12
  CHECK(pp_factor_count(W("")) == 0);

  std::size_t mismatches = 0;
  oracle::for_each_word_up_to(3, 8, [&](const Word& w) {
    if (pp_factor_count(w) != oracle::pp_factor_count(w)) ++mismatches;
  });
  CHECK(mismatches == 0);
}

TEST_CASE("pp factor count is monotone under extension") {
  std::mt19937 rng(997);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = 1 + rng() % 10;
    Word w;
    for (std::size_t i = 0; i < n; ++i)
      w.push_back(static_cast<Symbol>(rng() % 3));
    const std::size_t before = pp_factor_count(w);
    Word extended = w;
    extended.push_back(static_cast<Symbol>(rng() % 3));
    CHECK(before <= pp_factor_count(extended));
  }
}

TEST_CASE("growing-alphabet search closes at 00000 for threshold 5") {
  auto report = bfs_longest(5, 10, 0);
  CHECK(report.closed);
  CHECK(report.final_length == 5);
  REQUIRE(report.extremal.size() == 1);
  CHECK(report.extremal[0].str() == "00000");
  // Levels 1..5 all still have survivors.
  REQUIRE(report.frontier_sizes.size() == 5);
  for (std::size_t s : report.frontier_sizes) CHECK(s >= 1);
}

TEST_CASE("unary search with threshold 1 closes at length 1") {
  auto report = bfs_longest(1, 10, 1);
  CHECK(report.closed);
  CHECK(report.final_length == 1);
  REQUIRE(report.extremal.size() == 1);
  CHECK(report.extremal[0].str() == "0");
}

TEST_CASE("fixed-binary search reports both labelings") {
  // Small instance of the deep search: every binary word of length 7 has
  // at least 7 pp factors, and only the unary words reach exactly 7.
  auto report = bfs_longest(7, 12, 2);
  CHECK(report.closed);
  CHECK(report.final_length == 7);
  REQUIRE(report.extremal.size() == 2);
  CHECK(report.extremal[0].str() == "0000000");
  CHECK(report.extremal[1].str() == "1111111");
}

TEST_CASE("search reports open frontier at the cap") {
  auto report = bfs_longest(30, 6, 2);
  CHECK_FALSE(report.closed);
  CHECK(report.final_length == 6);
}

TEST_CASE("search input validation") {
  CHECK_THROWS_AS(bfs_longest(0, 5), std::invalid_argument);
  CHECK_THROWS_AS(bfs_longest(5, 0), std::invalid_argument);
  CHECK_THROWS_AS(bfs_longest(5, 20000), std::invalid_argument);
  CHECK_THROWS_AS(bfs_longest(5, 5, 11), std::invalid_argument);
  CHECK_THROWS_AS(count_binary_pp_words(0), std::invalid_argument);
  CHECK_THROWS_AS(count_binary_pp_words(27), palper::CapExceeded);
}

TEST_CASE("periodic pp sets") {
  auto words = periodic_pp_set(W("012"));
  std::vector<std::string> got;
  for (const Word& w : words) got.push_back(w.str());
  CHECK(got ==
        std::vector<std::string>{"0", "1", "2", "01", "12", "20"});

  CHECK_THROWS_AS(periodic_pp_set(W("01")), CapExceeded);
  CHECK_THROWS_AS(periodic_pp_set(W("0")), CapExceeded);
  CHECK_THROWS_AS(periodic_pp_set(W("")), std::invalid_argument);
}

TEST_CASE("periodic pp set of 001011 has the 30 published words") {
  auto words = periodic_pp_set(W("001011"));
  CHECK(words.size() == 30);
  bool has_longest = false;
  for (const Word& w : words)
    if (w.str() == "10010110") has_longest = true;
  CHECK(has_longest);
}

TEST_CASE("structural form verification flags survivors outside families") {
  // With no families at all, every survivor is a violation.
  auto empty_forms = verify_structural_forms(5, 5, 5, {});
  CHECK(empty_forms.checked == 1);
  REQUIRE(empty_forms.violations.size() == 1);
  CHECK(empty_forms.violations[0].str() == "00000");

  // One family covering the sole survivor: no violations.
  PatternFamily unary{{W("")}, {W("0")}, {W(""), W("0")}};
  auto ok = verify_structural_forms(5, 5, 5, {unary});
  CHECK(ok.checked == 1);
  CHECK(ok.violations.empty());
}

namespace {

std::vector<PatternFamily> binary43_families() {
  std::vector<Word> blocks;
  for (const char* base :
       {"001011", "001101", "0001011", "0001101", "0010111", "0011101",
        "00001011", "00001101", "00010111", "00011101", "00101011",
        "00101111", "00110101", "00111101"}) {
    for (const Word& c : conjugates(Word::parse(base))) blocks.push_back(c);
  }
  std::vector<Word> ends;
  ends.push_back(Word{});
  for (std::size_t len = 1; len <= 5; ++len)
    oracle::for_each_word(2, len, [&](const Word& w) { ends.push_back(w); });
  return {{ends, blocks, ends}};
}

}  // namespace

TEST_CASE("binary threshold-43 forms: short-period words violate below 44") {
  auto report = verify_structural_forms(43, 12, 16, binary43_families(), 2);
  CHECK(report.checked > report.violations.size());
  CHECK_FALSE(report.violations.empty());
  // 0^12 keeps only 12 pp factors but matches no family.
  CHECK(std::find(report.violations.begin(), report.violations.end(),
                  Word::repeat(W("0"), 12)) != report.violations.end());
}

TEST_CASE("binary threshold-43 forms hold from length 44 on") {
  auto report = verify_structural_forms(43, 44, 46, binary43_families(), 2);
  CHECK(report.checked > 0);
  CHECK(report.violations.empty());
}

TEST_CASE("worker count follows PALPER_THREADS and results do not") {
  setenv("PALPER_THREADS", "3", 1);
  CHECK(worker_count() == 3);
  const std::uint64_t sharded = count_binary_pp_words(10);
  unsetenv("PALPER_THREADS");
  CHECK(count_binary_pp_words(10) == sharded);
}

TEST_CASE("binary pp word counts against the oracle") {
  std::vector<std::uint64_t> expect;
  for (std::size_t n = 1; n <= 12; ++n) {
    std::uint64_t count = 0;
    oracle::for_each_word(2, n, [&](const Word& w) {
      if (oracle::is_pp(w)) ++count;
    });
    expect.push_back(count);
  }
  for (std::size_t n = 1; n <= 12; ++n)
    CHECK(count_binary_pp_words(n) == expect[n - 1]);
  // All eight length-3 binary words are symmetric.
  CHECK(count_binary_pp_words(3) == 8);
}
