#include "palper/word_core.hpp"

#include <doctest.h>

#include <random>

#include "oracles.hpp"

using namespace palper;

namespace {
Word W(const char* digits) { return Word::parse(digits); }
}  // namespace

TEST_CASE("word parsing and printing") {
  CHECK(W("0120").str() == "0120");
  CHECK(W("").empty());
  CHECK(W("9").max_symbol() == 9);
  CHECK_THROWS_AS(Word::parse("01a"), std::invalid_argument);
  CHECK(W("01") < W("0100"));
  CHECK(W("01") < W("02"));
}

TEST_CASE("reverse") {
  CHECK(reverse(W("")) == W(""));
  CHECK(reverse(W("011")) == W("110"));
  CHECK(reverse(W("121")) == W("121"));
}

TEST_CASE("is_palindrome") {
  CHECK(is_palindrome(W("3443")));
  CHECK_FALSE(is_palindrome(W("01")));
  CHECK(is_palindrome(W("")));
  CHECK(is_palindrome(W("5")));
}

TEST_CASE("border table") {
  // Longest border of 0100110 is "0", frozen from the brute-force oracle.
  CHECK(oracle::longest_border(W("0100110")) == 1);
  CHECK(BorderTable(W("0100110")).border(7) == 1);

  BorderTable unary(W("0000"));
  for (std::size_t l = 1; l <= 4; ++l) CHECK(unary.border(l) == l - 1);

  CHECK(BorderTable(W("012")).border(3) == 0);
}

TEST_CASE("border table matches oracle on all short binary and ternary words") {
  for (int k : {2, 3}) {
    oracle::for_each_word_up_to(k, 9, [&](const Word& w) {
      CHECK(BorderTable(w).border(w.size()) == oracle::longest_border(w));
    });
  }
}

TEST_CASE("periods") {
  // entente over {e,n,t} -> 0120120
  CHECK(oracle::periods(W("0120120")) == std::vector<std::size_t>{3, 6, 7});
  CHECK(periods(W("0120120")) == std::vector<std::size_t>{3, 6, 7});
  CHECK(periods(W("0000")) == std::vector<std::size_t>{1, 2, 3, 4});
  CHECK(oracle::periods(W("010110")) == std::vector<std::size_t>{5, 6});
  CHECK(periods(W("010110")) == std::vector<std::size_t>{5, 6});
  CHECK_THROWS_AS(periods(W("")), std::invalid_argument);

  for (int k : {2, 3}) {
    oracle::for_each_word_up_to(k, 9, [&](const Word& w) {
      CHECK(periods(w) == oracle::periods(w));
    });
  }
}

TEST_CASE("fractional root") {
  CHECK(fractional_root(W("0120120")).str() == "012");  // entente -> ent
  CHECK(fractional_root(W("0100110")).str() == "010011");
  CHECK(fractional_root(W("012")).str() == "012");
  CHECK_THROWS_AS(fractional_root(W("")), std::invalid_argument);
}

TEST_CASE("is_primitive") {
  CHECK_FALSE(is_primitive(W("0101")));
  CHECK(is_primitive(W("010")));
  CHECK(is_primitive(W("010110")));
  CHECK_THROWS_AS(is_primitive(W("")), std::invalid_argument);
}

TEST_CASE("is_symmetric") {
  auto m = is_symmetric(W("0100110"));
  REQUIRE(m.has_value());
  CHECK(*m == 3);  // 010 . 0110

  CHECK_FALSE(is_symmetric(W("010011")).has_value());

  auto m2 = is_symmetric(W("1100"));
  REQUIRE(m2.has_value());
  CHECK(*m2 == 2);  // 11 . 00

  CHECK(is_symmetric(W("")).value() == 0);
  CHECK(is_symmetric(W("121")).value() == 0);  // palindromes split at 0
}

TEST_CASE("conjugates") {
  auto c = conjugates(W("0120"));
  REQUIRE(c.size() == 4);
  CHECK(c[0].str() == "0120");
  CHECK(c[1].str() == "1200");
  CHECK(c[2].str() == "2001");
  CHECK(c[3].str() == "0012");

  auto cc = conjugates(W("00"));
  REQUIRE(cc.size() == 2);
  CHECK(cc[0] == cc[1]);

  auto cb = conjugates(W("01"));
  CHECK(cb[0].str() == "01");
  CHECK(cb[1].str() == "10");
  CHECK_THROWS_AS(conjugates(W("")), std::invalid_argument);
}

TEST_CASE("is_pal_periodicity on the definitional examples") {
  auto w1 = is_pal_periodicity(W("121344312134"));
  REQUIRE(w1.has_value());
  CHECK(w1->p.str() == "121");
  CHECK(w1->s.str() == "3443");
  CHECK(w1->period() == 7);

  CHECK(is_pal_periodicity(W("010110")).has_value());
  CHECK_FALSE(is_pal_periodicity(W("010110010110")).has_value());
  CHECK_FALSE(is_pal_periodicity(W("102")).has_value());

  auto single = is_pal_periodicity(W("5"));
  REQUIRE(single.has_value());
  CHECK(single->p.str() == "5");
  CHECK(single->s.empty());

  CHECK_FALSE(is_pal_periodicity(W("")).has_value());
}

TEST_CASE("witness really certifies the word") {
  // For every accepted word: p and s are palindromes, |ps| is a period and
  // the word is long enough.
  for (int k : {2, 3}) {
    oracle::for_each_word_up_to(k, 10, [&](const Word& w) {
      auto witness = is_pal_periodicity(w);
      if (!witness) return;
      CHECK(oracle::is_palindrome(witness->p));
      CHECK(oracle::is_palindrome(witness->s));
      CHECK(witness->period() >= 1);
      CHECK(witness->period() <= w.size());
      CHECK(oracle::has_period(w, witness->period()));
    });
  }
}

TEST_CASE("symmetric word periods") {
  auto sp = symmetric_word_periods(W("0100110"));
  CHECK(std::count(sp.begin(), sp.end(), 7) == 1);
  CHECK(symmetric_word_periods(W("010011")).empty());
  CHECK(symmetric_word_periods(W("0000")) ==
        std::vector<std::size_t>{1, 2, 3, 4});
  CHECK_THROWS_AS(symmetric_word_periods(W("")), std::invalid_argument);
}

TEST_CASE("pp decision agrees with the naive oracle exhaustively") {
  std::size_t mismatches = 0;
  oracle::for_each_word_up_to(2, 16, [&](const Word& w) {
    if (is_pal_periodicity(w).has_value() != oracle::is_pp(w)) ++mismatches;
  });
  oracle::for_each_word_up_to(3, 10, [&](const Word& w) {
    if (is_pal_periodicity(w).has_value() != oracle::is_pp(w)) ++mismatches;
  });
  CHECK(mismatches == 0);
}

TEST_CASE("pp present iff some symmetric word period exists") {
  for (int k : {2, 3}) {
    oracle::for_each_word_up_to(k, 11, [&](const Word& w) {
      CHECK(is_pal_periodicity(w).has_value() ==
            !symmetric_word_periods(w).empty());
    });
  }
}

TEST_CASE("palindrome implies symmetric implies pp") {
  for (int k : {2, 3}) {
    oracle::for_each_word_up_to(k, 11, [&](const Word& w) {
      if (is_palindrome(w)) CHECK(is_symmetric(w).has_value());
      if (is_symmetric(w)) CHECK(is_pal_periodicity(w).has_value());
    });
  }
}

TEST_CASE("symmetric iff conjugate to its reverse") {
  for (int k : {2, 3}) {
    std::size_t mismatches = 0;
    oracle::for_each_word_up_to(k, 14, [&](const Word& w) {
      // w is a conjugate of rev iff w occurs in rev.rev.
      const Word rev = reverse(w);
      Word doubled = rev;
      doubled.append(rev);
      bool conj_of_reverse = false;
      for (std::size_t r = 0; r < w.size() && !conj_of_reverse; ++r) {
        bool eq = true;
        for (std::size_t i = 0; i < w.size() && eq; ++i)
          if (doubled[r + i] != w[i]) eq = false;
        conj_of_reverse = eq;
      }
      if (is_symmetric(w).has_value() != conj_of_reverse) ++mismatches;
    });
    CHECK(mismatches == 0);
  }
}

TEST_CASE("symmetric iff powers are symmetric") {
  for (int k : {2, 3}) {
    oracle::for_each_word_up_to(k, 8, [&](const Word& w) {
      const bool sym = is_symmetric(w).has_value();
      for (std::size_t e : {2, 3}) {
        CHECK(is_symmetric(Word::repeat(w, e)).has_value() == sym);
      }
    });
  }
}

TEST_CASE("non-symmetric root forces a long symmetric period") {
  // Fine and Wilf consequence: if w is a pp whose fractional root is not
  // symmetric, its smallest symmetric period exceeds |w|/2.
  oracle::for_each_word_up_to(2, 16, [&](const Word& w) {
    auto witness = is_pal_periodicity(w);
    if (!witness) return;
    if (is_symmetric(fractional_root(w)).has_value()) return;
    auto sp = symmetric_word_periods(w);
    REQUIRE(!sp.empty());
    CHECK(2 * sp.front() > w.size());
  });
}

TEST_CASE("palindrome oracle agrees with direct reversal on random ranges") {
  std::mt19937 rng(20240817);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 60;
    Word w;
    for (std::size_t i = 0; i < n; ++i)
      w.push_back(static_cast<Symbol>(rng() % 4));
    PalindromeOracle oraclev(w);
    for (int q = 0; q < 50; ++q) {
      std::size_t i = rng() % n;
      std::size_t j = i + rng() % (n - i);
      const std::size_t len = j - i + 1;
      CHECK(oraclev.is_palindrome(i, len) ==
            oracle::range_is_palindrome(w, i, len));
    }
  }
}

TEST_CASE("first_non_pp_prefix") {
  // 0 1 0 0 1 1 : prefixes 0, 01, 010, 0100, 01001 are pps; 010011 is not.
  CHECK(first_non_pp_prefix(W("010011")).value() == 6);
  CHECK_FALSE(first_non_pp_prefix(W("0000")).has_value());
  for (int k : {2, 3}) {
    oracle::for_each_word_up_to(k, 9, [&](const Word& w) {
      std::optional<std::size_t> expect;
      for (std::size_t n = 1; n <= w.size() && !expect; ++n)
        if (!oracle::is_pp(w.subword(0, n))) expect = n;
      CHECK(first_non_pp_prefix(w) == expect);
    });
  }
}
