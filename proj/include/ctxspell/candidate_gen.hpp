#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ctxspell/embedding_store.hpp"
#include "ctxspell/lexicon.hpp"

namespace ctxspell {

// A replacement candidate for one misspelling. dl is the edit distance to
// the misspelling (always >= 1), dm_dl the smallest edit distance between any
// pair of their phonetic codes.
struct Candidate {
  std::string form;
  std::size_t dl = 0;
  std::size_t dm_dl = 0;
  bool in_embedding_vocab = false;
  std::uint64_t frequency = 0;

  bool operator==(const Candidate&) const = default;
};

// Phonetic code -> lexicon forms bearing it (under primary or alternate).
class PhoneticIndex {
 public:
  PhoneticIndex() = default;
  explicit PhoneticIndex(
      std::vector<std::pair<std::string, std::vector<std::string>>> entries);

  // Forms under a code; nullptr when the code is unknown.
  const std::vector<std::string>* forms_for(const std::string& code) const;
  // All (code, forms) pairs, sorted by code; the phase-two scan order.
  const std::vector<std::pair<std::string, std::vector<std::string>>>&
  entries() const {
    return entries_;
  }

 private:
  std::vector<std::pair<std::string, std::vector<std::string>>> entries_;
};

PhoneticIndex build_phonetic_index(const Lexicon& lexicon);

// Two-phase generation: lexicon forms within edit distance 2, united with
// forms whose phonetic code lies within distance 1 of the misspelling's
// (either code on either side). Deduplicated by form, sorted by form.
// Asking about a word the lexicon contains is a contract violation.
std::vector<Candidate> generate_candidates(const std::string& misspelling,
                                           const Lexicon& lexicon,
                                           const PhoneticIndex& index,
                                           const FrequencyTable& freqs,
                                           const EmbeddingStore& store);

}  // namespace ctxspell
