#include <doctest.h>

#include <string>
#include <vector>

#include "ctxspell/text_norm.hpp"

using namespace ctxspell;

TEST_CASE("tokenize drops digit-bearing tokens whole") {
  const auto tokens = tokenize_line("Pt going to OR at 9am.");
  CHECK(tokens == std::vector<std::string>{"pt", "going", "to", "or", "at"});
}

TEST_CASE("tokenize of empty input") {
  CHECK(tokenize_line("").empty());
  CHECK(tokenize_line("   \t ").empty());
  CHECK(tokenize_line("123 42").empty());
}

TEST_CASE("hyphens are kept inside tokens, case is folded") {
  CHECK(tokenize_line("X-ray X-RAY") ==
        std::vector<std::string>{"x-ray", "x-ray"});
}

TEST_CASE("punctuation separates, edge hyphens are trimmed") {
  CHECK(tokenize_line("re-admit, (please)!") ==
        std::vector<std::string>{"re-admit", "please"});
  CHECK(tokenize_line("-edge- --") == std::vector<std::string>{"edge"});
}

TEST_CASE("malformed bytes poison the token they touch") {
  const auto tokens = tokenize_line("good b\xff" "d good2 fine");
  CHECK(tokens == std::vector<std::string>{"good", "fine"});
}

TEST_CASE("normalize_token") {
  CHECK(normalize_token("Going") == "going");
  CHECK(normalize_token("-x-") == "x");
  CHECK(normalize_token("X-RAY") == "x-ray");
  CHECK(normalize_token("9am") == std::nullopt);
  CHECK(normalize_token("a b") == std::nullopt);  // never splits
  CHECK(normalize_token("--") == std::nullopt);
  CHECK(normalize_token("") == std::nullopt);
  CHECK(normalize_token("naïve") == "naïve");
}

TEST_CASE("is_normalized_token matches normalize_token's fixed points") {
  const std::string samples[] = {"going", "x-ray", "Pt", "9am", "-a",
                                 "a-",    "",      "ok", "naïve"};
  for (const auto& s : samples) {
    CAPTURE(s);
    CHECK(is_normalized_token(s) == (normalize_token(s) == s));
  }
}

TEST_CASE("tokenize output is already normalized and stable") {
  const auto tokens =
      tokenize_line("The Pt's IV-line was FLUSHED; note: afebrile today.");
  for (const auto& t : tokens) {
    CAPTURE(t);
    CHECK(is_normalized_token(t));
    // Re-tokenizing a clean token yields itself.
    CHECK(tokenize_line(t) == std::vector<std::string>{t});
  }
}
