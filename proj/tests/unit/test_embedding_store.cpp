#include <doctest.h>

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "ctxspell/embedding_store.hpp"
#include "ctxspell/errors.hpp"
#include "../support/tmpfile.hpp"

using namespace ctxspell;

namespace {

EmbeddingStore parse(const std::string& words, const std::string& ngrams) {
  oracle::TempFile w(words);
  oracle::TempFile n(ngrams);
  return load_store(w.path(), n.path());
}

}  // namespace

TEST_CASE("plain parse") {
  const auto store = parse("2 3\ngoing 1 0 0\npoint 0 1 0\n",
                           "1 3 3 6\n<go 0 0 1\n");
  CHECK(store.dim() == 3);
  CHECK(store.word_count() == 2);
  CHECK(store.ngram_count() == 1);
  CHECK(store.minn() == 3);
  CHECK(store.maxn() == 6);
  CHECK(store.has_word("going"));
  REQUIRE(store.word_vector("going") != nullptr);
  CHECK(*store.word_vector("going") == Vector{1, 0, 0});
  CHECK(store.ngram_vector("<go") != nullptr);
  CHECK(store.word_vector("absent") == nullptr);
}

TEST_CASE("format violations carry the line number") {
  CHECK_THROWS_AS(parse("2 3\ngoing 1 0\npoint 0 1 0\n", "0 3 3 6\n"),
                  FormatError);
  CHECK_THROWS_WITH(parse("2 3\ngoing 1 0\npoint 0 1 0\n", "0 3 3 6\n"),
                    doctest::Contains(":2"));
  // duplicate word
  CHECK_THROWS_AS(parse("2 3\nx 1 0 0\nx 0 1 0\n", "0 3 3 6\n"), FormatError);
  // non-finite component
  CHECK_THROWS_AS(parse("1 3\nx 1 nan 0\n", "0 3 3 6\n"), FormatError);
  // n-gram dimensionality disagrees with the word file
  CHECK_THROWS_AS(parse("1 3\nx 1 0 0\n", "1 2 3 6\n<ab 1 0\n"), FormatError);
  // malformed float
  CHECK_THROWS_AS(parse("1 3\nx 1 zz 0\n", "0 3 3 6\n"), FormatError);
  // missing file
  CHECK_THROWS_AS(load_store("/nonexistent.vec", "/nonexistent.vec"), IoError);
}

TEST_CASE("n-gram extraction") {
  CHECK(extract_ngrams("cat", 3, 3) ==
        std::vector<std::string>{"<ca", "cat", "at>"});
  CHECK(extract_ngrams("a", 3, 3) == std::vector<std::string>{"<a>"});

  const auto grams = extract_ngrams("goint", 3, 6);
  CHECK(grams.size() == 14);
  // Position-major: every length at one start before the next start.
  const std::vector<std::string> expect{
      "<go", "<goi", "<goin", "<goint", "goi",  "goin", "goint",
      "goint>", "oin", "oint", "oint>", "int", "int>", "nt>"};
  CHECK(grams == expect);

  // Duplicates are kept.
  const auto rep = extract_ngrams("aaaa", 3, 3);
  CHECK(rep == std::vector<std::string>{"<aa", "aaa", "aaa", "aa>"});

  // Multibyte letters count as single positions.
  CHECK(extract_ngrams("éa", 3, 3) ==
        std::vector<std::string>{"<éa", "éa>"});
}

TEST_CASE("vector_for: stored row, n-gram mean, or absent") {
  EmbeddingStore store(3, 3, 6);
  store.add_word_vector("going", {1, 0, 0});
  store.add_ngram_vector("<oo", {1, 0, 0});
  store.add_ngram_vector("oov", {0, 1, 0});

  const auto known = store.vector_for("going");
  REQUIRE(known.has_value());
  CHECK(known->in_vocab);
  CHECK(known->vec == Vector{1, 0, 0});

  const auto composed = store.vector_for("oov");  // "<oov>": <oo, oov, ov> known: 2
  REQUIRE(composed.has_value());
  CHECK_FALSE(composed->in_vocab);
  CHECK(composed->vec[0] == doctest::Approx(0.5));
  CHECK(composed->vec[1] == doctest::Approx(0.5));
  CHECK(composed->vec[2] == doctest::Approx(0.0));

  CHECK_FALSE(store.vector_for("zzz").has_value());
}

TEST_CASE("cosine") {
  CHECK(cosine({1, 0}, {1, 0}) == doctest::Approx(1.0));
  CHECK(cosine({1, 0}, {0, 1}) == doctest::Approx(0.0));
  CHECK(cosine({1, 1}, {1, 0}) == doctest::Approx(0.70710678).epsilon(1e-9));
  CHECK(cosine({0, 0}, {1, 0}) == 0.0);
  CHECK(cosine({1, 2}, {-1, -2}) == doctest::Approx(-1.0));
  CHECK_THROWS_AS(cosine({1, 0}, {1, 0, 0}), ContractError);
}

TEST_CASE("cosine is scale-invariant and symmetric") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<float> dist(-1, 1);
  for (int i = 0; i < 200; ++i) {
    Vector u(8), v(8);
    for (auto& x : u) x = dist(rng);
    for (auto& x : v) x = dist(rng);
    const double c = cosine(u, v);
    CHECK(c == doctest::Approx(cosine(v, u)));
    Vector u3 = u;
    for (auto& x : u3) x *= 3.0f;
    CHECK(cosine(u3, v) == doctest::Approx(c).epsilon(1e-6));
    CHECK(std::abs(c) <= 1.0 + 1e-9);
  }
}

TEST_CASE("save/load round trip") {
  EmbeddingStore store(4, 2, 5);
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<float> dist(-2, 2);
  for (int w = 0; w < 40; ++w) {
    Vector v(4);
    for (auto& x : v) x = dist(rng);
    store.add_word_vector("w" + std::to_string(w), v);
  }
  for (int g = 0; g < 25; ++g) {
    Vector v(4);
    for (auto& x : v) x = dist(rng);
    store.add_ngram_vector("<g" + std::to_string(g), v);
  }

  oracle::TempFile wf("");
  oracle::TempFile nf("");
  save_store(store, wf.path(), nf.path());
  const auto loaded = load_store(wf.path(), nf.path());

  CHECK(loaded.dim() == 4);
  CHECK(loaded.minn() == 2);
  CHECK(loaded.maxn() == 5);
  REQUIRE(loaded.word_count() == store.word_count());
  REQUIRE(loaded.ngram_count() == store.ngram_count());
  for (const auto& [word, vec] : store.word_vectors()) {
    const Vector* got = loaded.word_vector(word);
    REQUIRE(got != nullptr);
    for (std::size_t i = 0; i < vec.size(); ++i) {
      CHECK(std::abs((*got)[i] - vec[i]) <= 1e-6);
    }
  }
}

TEST_CASE("frequency table") {
  FrequencyTable t;
  t.add("going", 100);
  t.add("point", 1000);
  CHECK(t.count_of("going") == 100);
  CHECK(t.count_of("absent") == 0);
  CHECK(t.total() == 1100);
  CHECK(t.vocab_size() == 2);

  oracle::TempFile f("going\t100\npoint\t1000\n");
  const auto loaded = load_frequency_table(f.path());
  CHECK(loaded.count_of("point") == 1000);
  CHECK(loaded.total() == 1100);

  oracle::TempFile bad("going\tmany\n");
  CHECK_THROWS_AS(load_frequency_table(bad.path()), FormatError);
}
