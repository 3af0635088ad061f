#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace ctxspell {

// Deduplicated union of reference word lists. Immutable after construction;
// augmented() returns a grown copy, leaving the original untouched.
class Lexicon {
 public:
  Lexicon() = default;
  // Forms are normalized on the way in; entries that do not survive
  // normalization are dropped.
  explicit Lexicon(const std::vector<std::string>& forms,
                   std::size_t source_count = 0);

  // Normalizes the query before lookup, so contains("GOING") is true when
  // "going" is stored.
  bool contains(std::string_view form) const;
  // Exact lookup for already-normalized forms (the hot path).
  bool contains_normalized(const std::string& form) const;

  std::size_t size() const { return forms_.size(); }
  std::size_t source_count() const { return source_count_; }
  const std::unordered_set<std::string>& forms() const { return forms_; }

  // Forms grouped by code-point length, sorted within each bucket; serves the
  // banded candidate scan. Lengths beyond max_form_length() yield an empty
  // bucket.
  const std::vector<std::string>& forms_of_length(std::size_t length) const;
  std::size_t max_form_length() const;

  Lexicon augmented(const std::vector<std::string>& extra) const;

 private:
  void insert(std::string_view raw);
  void rebuild_buckets();

  std::unordered_set<std::string> forms_;
  std::vector<std::vector<std::string>> by_length_;
  std::size_t source_count_ = 0;
};

// Fuses word-list files by union. One entry per line; `#`-prefixed lines are
// comments; lines with whitespace are split and each part stored.
Lexicon load_lexicon(const std::vector<std::string>& paths);

}  // namespace ctxspell
