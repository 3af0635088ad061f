#include <doctest.h>

#include <algorithm>
#include <random>
#include <string>

#include "ctxspell/edit_distance.hpp"
#include "ctxspell/utf8.hpp"
#include "../support/oracles.hpp"

using namespace ctxspell;

TEST_CASE("known distances") {
  CHECK(dl_distance("goint", "going") == 1);   // substitution
  CHECK(dl_distance("x", "x") == 0);
  CHECK(dl_distance("phebilitis", "phlebitis") == 3);
  CHECK(dl_distance("chornic", "chronic") == 1);  // transposition
  CHECK(dl_distance("unchanged", "unchainged") == 1);  // insertion
  CHECK(dl_distance("", "abc") == 3);
  CHECK(dl_distance("abc", "") == 3);
}

TEST_CASE("restricted variant: a transposed pair is never edited again") {
  // The classic witness: CA -> AC -> ABC would cost 2, but OSA forbids
  // editing inside the transposed pair, so the distance is 3.
  CHECK(dl_distance("ca", "abc") == 3);
  CHECK(oracle::osa_distance(std::string("ca"), std::string("abc")) == 3);
}

TEST_CASE("operates on code points, not bytes") {
  CHECK(dl_distance("naïve", "naive") == 1);
  CHECK(dl_distance("zürich", "zurich") == 1);
}

TEST_CASE("banded lookup equals the full distance when within cap") {
  CHECK(dl_within("goint", "going", 2) == 1);
  CHECK(dl_within("a", "abcdef", 2) == std::nullopt);
  CHECK(dl_within("x", "x", 0) == 0);
  CHECK(dl_within("chornic", "chronic", 1) == 1);
}

TEST_CASE("agrees with the full-matrix oracle on random pairs") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 1500; ++i) {
    const std::string a = oracle::random_word(rng, 1, 12);
    const std::string b = i % 3 == 0 ? oracle::random_word(rng, 1, 12)
                                     : oracle::perturb(rng, a, i % 4);
    const std::size_t expected = oracle::osa_distance(a, b);
    CAPTURE(a);
    CAPTURE(b);
    CHECK(dl_distance(a, b) == expected);

    for (std::size_t cap = 0; cap <= 3; ++cap) {
      const auto banded = dl_within(a, b, cap);
      if (expected <= cap) {
        CHECK(banded == expected);
      } else {
        CHECK(banded == std::nullopt);
      }
    }
  }
}

TEST_CASE("symmetry and bounds") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 1000; ++i) {
    const std::string a = oracle::random_word(rng, 0, 10);
    const std::string b = oracle::perturb(rng, a, i % 5);
    const std::size_t d = dl_distance(a, b);
    CHECK(d == dl_distance(b, a));
    const std::size_t la = a.size(), lb = b.size();
    CHECK(d >= std::max(la, lb) - std::min(la, lb));
    CHECK(d <= std::max(la, lb));
    CHECK((d == 0) == (a == b));
  }
}

TEST_CASE("single edit is distance one") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 500; ++i) {
    const std::string a = oracle::random_word(rng, 4, 10);
    const std::string b = oracle::perturb(rng, a, 1);
    if (a == b) continue;  // substitution may redraw the same letter
    CHECK(dl_distance(a, b) == 1);
  }
}
