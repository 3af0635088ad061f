#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "ctxspell/errors.hpp"
#include "ctxspell/lexicon.hpp"
#include "../support/oracles.hpp"
#include "../support/tmpfile.hpp"

using namespace ctxspell;

TEST_CASE("union of files, normalized and deduplicated") {
  oracle::TempFile a("Going\npoint\n");
  oracle::TempFile b("point\nanemia\n");
  const auto lex = load_lexicon({a.path(), b.path()});
  CHECK(lex.size() == 3);
  CHECK(lex.contains("going"));
  CHECK(lex.contains("point"));
  CHECK(lex.contains("anemia"));
  CHECK(lex.source_count() == 2);
}

TEST_CASE("single-file lookups") {
  oracle::TempFile f("sclerosing\n");
  const auto lex = load_lexicon({f.path()});
  CHECK(lex.contains("sclerosing"));
}

TEST_CASE("contains normalizes its query") {
  const Lexicon lex({"going"});
  CHECK(lex.contains("GOING"));
  CHECK(lex.contains("-going-"));
  CHECK_FALSE(lex.contains("goint"));
  CHECK(lex.contains_normalized("going"));
  CHECK_FALSE(lex.contains_normalized("GOING"));  // exact lookup only
}

TEST_CASE("empty file yields empty lexicon") {
  oracle::TempFile f("");
  const auto lex = load_lexicon({f.path()});
  CHECK(lex.size() == 0);
  CHECK_FALSE(lex.contains("anything"));
}

TEST_CASE("union is idempotent and order-insensitive") {
  const Lexicon ab({"alpha", "beta"});
  const Lexicon ba({"beta", "alpha", "beta"});
  CHECK(ab.forms() == ba.forms());
  CHECK(ab.size() == 2);
}

TEST_CASE("comments, blank lines, and multi-word lines") {
  oracle::TempFile f("# a comment\n\nfirst second\nthird\n");
  const auto lex = load_lexicon({f.path()});
  CHECK(lex.size() == 3);
  CHECK(lex.contains("first"));
  CHECK(lex.contains("second"));
  CHECK(lex.contains("third"));
}

TEST_CASE("entries that do not survive normalization are dropped") {
  const Lexicon lex({"ok", "9am", "--", ""});
  CHECK(lex.size() == 1);
  CHECK(lex.contains("ok"));
}

TEST_CASE("missing file errors with the path") {
  CHECK_THROWS_AS(load_lexicon({"/nonexistent/lexicon.txt"}), IoError);
  CHECK_THROWS_WITH(load_lexicon({"/nonexistent/lexicon.txt"}),
                    doctest::Contains("/nonexistent/lexicon.txt"));
}

TEST_CASE("malformed UTF-8 errors with the line number") {
  oracle::TempFile f("fine\nb\xffoken\n");
  CHECK_THROWS_AS(load_lexicon({f.path()}), FormatError);
  CHECK_THROWS_WITH(load_lexicon({f.path()}), doctest::Contains(":2"));
}

TEST_CASE("length buckets are sorted and bounded") {
  const Lexicon lex({"dd", "aa", "ccc", "bbbb", "naïve"});
  CHECK(lex.forms_of_length(2) == std::vector<std::string>{"aa", "dd"});
  CHECK(lex.forms_of_length(3) == std::vector<std::string>{"ccc"});
  // naïve has five code points although six bytes
  CHECK(lex.forms_of_length(5) == std::vector<std::string>{"naïve"});
  CHECK(lex.forms_of_length(99).empty());
  CHECK(lex.max_form_length() == 5);
}

TEST_CASE("augmented returns a grown copy, original untouched") {
  const Lexicon lex({"base"});
  const Lexicon grown = lex.augmented({"phlebitis"});
  CHECK(grown.contains("phlebitis"));
  CHECK(grown.contains("base"));
  CHECK_FALSE(lex.contains("phlebitis"));
  CHECK(lex.size() == 1);
}

TEST_CASE("load/contains round trip") {
  oracle::TempFile f("Alpha\nBETA-\ngamma delta\n#skip\nx9\n");
  const auto lex = load_lexicon({f.path()});
  for (const char* w : {"alpha", "beta", "gamma", "delta"}) {
    CAPTURE(w);
    CHECK(lex.contains(w));
  }
  CHECK(lex.size() == 4);  // x9 dropped, comment skipped
}
