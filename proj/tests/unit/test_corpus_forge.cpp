#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ctxspell/corpus_forge.hpp"
#include "ctxspell/edit_distance.hpp"
#include "ctxspell/errors.hpp"
#include "ctxspell/text_norm.hpp"
#include "ctxspell/utf8.hpp"
#include "../support/oracles.hpp"
#include "../support/tmpfile.hpp"

using namespace ctxspell;

namespace {

ErrorSpec plain_spec() {
  ErrorSpec spec;
  spec.alphabet = U"abcdefghijklmnopqrstuvwxyz";
  return spec;
}

const char* kCorpus =
    "the patient walked to the clinic today\n"
    "severe anemia was noted on admission\n"
    "the wound looked clean and dry\n"
    "patient reports feeling dizzy since yesterday\n"
    "follow up with cardiology next week\n";

std::vector<std::string> corpus_words() {
  return {"the",     "patient", "walked",  "to",        "clinic",
          "today",   "severe",  "anemia",  "was",       "noted",
          "on",      "admission", "wound", "looked",    "clean",
          "and",     "dry",     "reports", "feeling",   "dizzy",
          "since",   "yesterday", "follow", "up",       "with",
          "cardiology", "next", "week"};
}

}  // namespace

TEST_CASE("uniform_below basics") {
  std::mt19937_64 rng(1);
  CHECK(uniform_below(rng, 1) == 0);
  CHECK_THROWS_AS(uniform_below(rng, 0), ContractError);
  for (int i = 0; i < 1000; ++i) {
    CHECK(uniform_below(rng, 7) < 7);
  }
  std::mt19937_64 a(42), b(42);
  for (int i = 0; i < 100; ++i) {
    CHECK(uniform_below(a, 1000) == uniform_below(b, 1000));
  }
}

TEST_CASE("uniform_below is roughly uniform") {
  std::mt19937_64 rng(3);
  std::vector<int> buckets(8, 0);
  const int draws = 80000;
  for (int i = 0; i < draws; ++i) ++buckets[uniform_below(rng, 8)];
  for (int count : buckets) {
    CHECK(count > draws / 8 - 600);
    CHECK(count < draws / 8 + 600);
  }
}

TEST_CASE("induced errors are nearby well-formed non-words") {
  const Lexicon lex(corpus_words());
  const auto spec = plain_spec();
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const auto out = induce_error("patient", spec, lex, seed);
    CAPTURE(out);
    CHECK(is_normalized_token(out));
    CHECK_FALSE(lex.contains_normalized(out));
    const auto d = dl_distance("patient", out);
    CHECK(d >= 1);
    CHECK(d <= 2);
    CHECK(d == oracle::osa_distance(std::string("patient"), out));
  }
}

TEST_CASE("unchanged can yield unchainged") {
  Lexicon lex({"unchanged"});
  const auto spec = plain_spec();
  bool found = false;
  for (std::uint64_t seed = 0; seed < 30000 && !found; ++seed) {
    found = induce_error("unchanged", spec, lex, seed) == "unchainged";
  }
  CHECK(found);
}

TEST_CASE("one-op share is honored") {
  const Lexicon lex(corpus_words());
  const auto spec = plain_spec();
  int ones = 0;
  const int n = 2000;
  for (std::uint64_t seed = 0; seed < n; ++seed) {
    ones += dl_distance("cardiology", induce_error("cardiology", spec, lex,
                                                   seed)) == 1;
  }
  const double share = static_cast<double>(ones) / n;
  CHECK(share > 0.76);
  CHECK(share < 0.84);
}

TEST_CASE("induce_error contract violations") {
  const Lexicon lex(corpus_words());
  ErrorSpec spec = plain_spec();
  CHECK_THROWS_AS(induce_error("notinlexicon", spec, lex, 1), ContractError);
  CHECK_THROWS_AS(induce_error("patient", ErrorSpec{}, lex, 1), ContractError);
  const Lexicon with_single({"a", "patient"});
  CHECK_THROWS_AS(induce_error("a", spec, with_single, 1), ContractError);
}

TEST_CASE("retry exhaustion raises a generation error") {
  // Lexicon covering every string over {a,b} of length <= 4 leaves no
  // reachable non-word for a 2-letter base over that alphabet.
  std::vector<std::string> all;
  const std::string letters = "ab";
  std::vector<std::string> frontier{""};
  for (int len = 0; len < 4; ++len) {
    std::vector<std::string> next;
    for (const auto& s : frontier) {
      for (char ch : letters) next.push_back(s + ch);
    }
    for (const auto& s : next) all.push_back(s);
    frontier = std::move(next);
  }
  const Lexicon lex(all);
  ErrorSpec spec;
  spec.alphabet = U"ab";
  CHECK_THROWS_AS(induce_error("ab", spec, lex, 9), GenerationError);
}

TEST_CASE("same seed reproduces, different seeds vary") {
  const Lexicon lex(corpus_words());
  const auto spec = plain_spec();
  CHECK(induce_error("admission", spec, lex, 77) ==
        induce_error("admission", spec, lex, 77));
  std::set<std::string> outputs;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    outputs.insert(induce_error("admission", spec, lex, seed));
  }
  CHECK(outputs.size() > 5);
}

TEST_CASE("generate_corpus honors filters and context bounds") {
  oracle::TempFile corpus(kCorpus);
  const Lexicon lex(corpus_words());
  EmbeddingStore store(2, 3, 6);
  for (const char* w : {"patient", "anemia", "clinic", "cardiology", "wound",
                        "admission", "yesterday", "severe"}) {
    store.add_word_vector(w, {1, 0});
  }
  ErrorSpec spec = plain_spec();

  SUBCASE("in-vocabulary golds") {
    SetupFilter filter;  // in_vector_vocab
    const auto instances =
        generate_corpus(corpus.path(), lex, store, filter, 5, spec, 99);
    REQUIRE(instances.size() == 5);
    for (const auto& inst : instances) {
      CAPTURE(inst.gold);
      CHECK(store.has_word(inst.gold));
      CHECK(lex.contains_normalized(inst.gold));
      CHECK_FALSE(lex.contains_normalized(inst.misspelling));
      CHECK(inst.left.size() <= 10);
      CHECK(inst.right.size() <= 10);
      const auto d = dl_distance(inst.gold, inst.misspelling);
      CHECK(d >= 1);
      CHECK(d <= 2);
    }
  }

  SUBCASE("oov-only golds") {
    SetupFilter filter;
    filter.mode = SetupFilter::Mode::oov_only;
    const auto instances =
        generate_corpus(corpus.path(), lex, store, filter, 5, spec, 99);
    REQUIRE(instances.size() == 5);
    for (const auto& inst : instances) {
      CHECK_FALSE(store.has_word(inst.gold));
      CHECK(lex.contains_normalized(inst.gold));
    }
  }

  SUBCASE("byte-identical under a fixed seed") {
    SetupFilter filter;
    const auto a =
        generate_corpus(corpus.path(), lex, store, filter, 5, spec, 7);
    const auto b =
        generate_corpus(corpus.path(), lex, store, filter, 5, spec, 7);
    CHECK(instances_to_tsv(a) == instances_to_tsv(b));
    const auto c =
        generate_corpus(corpus.path(), lex, store, filter, 5, spec, 8);
    CHECK(instances_to_tsv(a) != instances_to_tsv(c));
  }

  SUBCASE("target beyond capacity carries the achieved count") {
    SetupFilter filter;
    try {
      generate_corpus(corpus.path(), lex, store, filter, 500, spec, 7);
      FAIL("expected GenerationError");
    } catch (const GenerationError& e) {
      CHECK(e.achieved > 0);
      CHECK(e.achieved < 500);
    }
  }
}

TEST_CASE("short lines yield short contexts, never padded") {
  oracle::TempFile corpus("anemia noted\n");
  const Lexicon lex({"anemia", "noted"});
  EmbeddingStore store(2, 3, 6);
  store.add_word_vector("anemia", {1, 0});
  store.add_word_vector("noted", {0, 1});
  ErrorSpec spec = plain_spec();
  const auto instances =
      generate_corpus(corpus.path(), lex, store, SetupFilter{}, 1, spec, 3);
  REQUIRE(instances.size() == 1);
  CHECK(instances[0].left.size() + instances[0].right.size() == 1);
}

TEST_CASE("detection flags rare unknown tokens in corpus order") {
  std::string text;
  for (int i = 0; i < 5; ++i) text += "misspeled common\n";
  for (int i = 0; i < 6; ++i) text += "frequentt common\n";
  text += "rare common\n";
  oracle::TempFile corpus(text);
  const Lexicon lex({"common", "rare"});

  const auto flagged = detect_misspellings(corpus.path(), lex, 5);
  REQUIRE(flagged.size() == 5);
  for (const auto& inst : flagged) {
    CHECK(inst.misspelling == "misspeled");  // freq 5, unknown -> flagged
    CHECK(inst.gold.empty());
  }
  // freq 6 escapes the cap; in-lexicon "rare" (freq 1) is never flagged.
}

TEST_CASE("detection respects a custom cap") {
  oracle::TempFile corpus("odd odd odd\n");
  const Lexicon lex({"even"});
  CHECK(detect_misspellings(corpus.path(), lex, 2).empty());
  CHECK(detect_misspellings(corpus.path(), lex, 3).size() == 3);
}

TEST_CASE("corpus_alphabet collects observed letters plus hyphen") {
  oracle::TempFile corpus("abc de 42\nxyz-q\n");
  const auto alphabet = corpus_alphabet(corpus.path());
  const std::set<char32_t> set(alphabet.begin(), alphabet.end());
  for (char32_t cp : U"abcdexyzq-") {
    if (cp == U'\0') break;
    CAPTURE(static_cast<int>(cp));
    CHECK(set.count(cp) == 1);
  }
  CHECK(set.count(U'4') == 0);
  CHECK(set.count(U' ') == 0);
}

TEST_CASE("instance TSV round trip") {
  std::vector<MisspellingInstance> instances(2);
  instances[0].left = {"severe", "acute"};
  instances[0].misspelling = "anemmia";
  instances[0].gold = "anemia";
  instances[0].right = {"noted"};
  instances[1].misspelling = "wond";
  instances[1].gold = "wound";  // both contexts empty

  CHECK(instances_to_tsv(instances) ==
        "severe acute\tanemmia\tanemia\tnoted\n\twond\twound\t\n");

  oracle::TempFile f("");
  write_instances(instances, f.path());
  const auto back = read_instances(f.path());
  REQUIRE(back.size() == 2);
  CHECK(back[0].left == instances[0].left);
  CHECK(back[0].misspelling == "anemmia");
  CHECK(back[0].gold == "anemia");
  CHECK(back[0].right == instances[0].right);
  CHECK(back[1].left.empty());
  CHECK(back[1].gold == "wound");
}

TEST_CASE("malformed instance rows carry the line number") {
  oracle::TempFile bad("a\tb\tc\n");  // three columns
  CHECK_THROWS_AS(read_instances(bad.path()), FormatError);
  CHECK_THROWS_WITH(read_instances(bad.path()), doctest::Contains(":1"));

  oracle::TempFile empty_miss("ctx\t\tgold\tctx\n");
  CHECK_THROWS_AS(read_instances(empty_miss.path()), FormatError);

  oracle::TempFile wide("a b c d e f g h i j k\tm\tg\t\n");  // 11 left tokens
  CHECK_THROWS_AS(read_instances(wide.path()), FormatError);
}
