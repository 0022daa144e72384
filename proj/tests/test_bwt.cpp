#include "palper/bwt.hpp"

#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "palper/word_classes.hpp"
#include "palper/word_core.hpp"

using namespace palper;

namespace {

Word W(const char* digits) { return Word::parse(digits); }

// Reference transform: materialize, sort, take last letters.
Word bwt_reference(const Word& w) {
  std::vector<Word> rots = conjugates(w);
  std::sort(rots.begin(), rots.end());
  Word out;
  for (const Word& r : rots) out.push_back(r[r.size() - 1]);
  return out;
}

}  // namespace

TEST_CASE("bwt on the worked examples") {
  CHECK(bwt(W("0120")).str() == "2001");
  CHECK(bwt(W("0000")).str() == "0000");
  // Sorted rotations of 0110: 0011, 0110, 1001, 1100 -> last letters 1010.
  CHECK(bwt(W("0110")).str() == "1010");
  CHECK_THROWS_AS(bwt(W("")), std::invalid_argument);
}

TEST_CASE("bwt equals the reference transform") {
  std::size_t mismatches = 0;
  oracle::for_each_word_up_to(3, 8, [&](const Word& w) {
    if (bwt(w) != bwt_reference(w)) ++mismatches;
  });
  CHECK(mismatches == 0);
}

TEST_CASE("perfect clustering") {
  CHECK_FALSE(is_perfectly_clustered(W("0120"), 3));
  CHECK(is_perfectly_clustered(W("01"), 2));
  CHECK(is_perfectly_clustered(W("0"), 1));
  CHECK_THROWS_AS(is_perfectly_clustered(W("012"), 2), std::invalid_argument);
}

TEST_CASE("bwt is invariant under conjugation") {
  // One cyclic shift per word suffices: the scan covers every word of each
  // length, so equality along single shifts chains to the whole orbit.
  std::size_t mismatches = 0;
  oracle::for_each_word_up_to(3, 12, [&](const Word& w) {
    Word shifted;
    shifted.reserve(w.size());
    for (std::size_t i = 1; i <= w.size(); ++i)
      shifted.push_back(w[i % w.size()]);
    if (bwt(w) != bwt(shifted)) ++mismatches;
  });
  CHECK(mismatches == 0);
}

TEST_CASE("clustered implies symmetric implies pp at unit depth") {
  std::size_t bad = 0;
  for (int k : {2, 3}) {
    oracle::for_each_word_up_to(k, 10, [&](const Word& w) {
      if (!is_perfectly_clustered(w, k)) return;
      if (!is_symmetric(w).has_value()) ++bad;
      if (!is_pal_periodicity(w).has_value()) ++bad;
    });
  }
  CHECK(bad == 0);
}

TEST_CASE("binary clustered words are powers of standard word conjugates") {
  std::size_t bad = 0;
  oracle::for_each_word_up_to(2, 12, [&](const Word& w) {
    if (w.size() < 2 || !is_primitive(w)) return;
    if (!is_perfectly_clustered(w, 2)) return;
    bool some_standard_rotation = false;
    for (const Word& c : conjugates(w))
      if (is_standard_sturmian(c)) some_standard_rotation = true;
    if (!some_standard_rotation) ++bad;
  });
  CHECK(bad == 0);

  // Converse: standard words (and their powers) have clustered BWT.
  std::size_t bad2 = 0;
  oracle::for_each_word_up_to(2, 8, [&](const Word& u) {
    if (!is_central(u)) return;
    for (const char* tail : {"01", "10"}) {
      Word std_word = u;
      std_word.append(W(tail));
      if (!is_perfectly_clustered(std_word, 2)) ++bad2;
      if (!is_perfectly_clustered(Word::repeat(std_word, 2), 2)) ++bad2;
    }
  });
  CHECK(bad2 == 0);
}
