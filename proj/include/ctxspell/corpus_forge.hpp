#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ctxspell/embedding_store.hpp"
#include "ctxspell/lexicon.hpp"
#include "ctxspell/rankers.hpp"

namespace ctxspell {

// Unbiased draw in [0, n) by rejection. mt19937_64's output sequence is
// pinned by the standard, unlike the std distributions, so seeded runs
// reproduce byte-identically across platforms.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n);

// How induced errors are drawn: 1 op with probability one_op_share, else 2;
// operation type uniform over insert/delete/substitute/transpose; inserted
// and substituted characters uniform over alphabet.
struct ErrorSpec {
  double one_op_share = 0.8;
  std::u32string alphabet;
  std::size_t retry_budget = 100;
};

struct SetupFilter {
  enum class Mode { in_vector_vocab, oov_only } mode = Mode::in_vector_vocab;
};

// Corrupts a lexicon word into a nearby non-word: dl from the original equals
// the drawn op count, and the result is still a well-formed token. Retries
// placements until that holds; exhausting the budget is a generation error.
std::string induce_error(const std::string& word, const ErrorSpec& spec,
                         const Lexicon& lexicon, std::uint64_t rng_seed);
std::string induce_error(const std::string& word, const ErrorSpec& spec,
                         const Lexicon& lexicon, std::mt19937_64& rng);

// Builds a self-induced error corpus: samples corpus lines without
// replacement, picks one eligible word per line (lexicon member, length >= 2,
// passing the filter against the store's word vocabulary), corrupts it, and
// keeps up to 10 context tokens per side. Falling short of target is a
// generation error carrying the achieved count.
std::vector<MisspellingInstance> generate_corpus(
    const std::string& corpus_path, const Lexicon& lexicon,
    const EmbeddingStore& store, const SetupFilter& filter, std::size_t target,
    const ErrorSpec& spec, std::uint64_t rng_seed);

// Flags corpus tokens with whole-corpus frequency <= freq_cap that the
// lexicon does not know; gold left empty for annotation. One instance per
// occurrence, in corpus order.
std::vector<MisspellingInstance> detect_misspellings(
    const std::string& corpus_path, const Lexicon& lexicon,
    std::uint64_t freq_cap = 5);

// The observed letters of a corpus plus '-': the induction alphabet.
std::u32string corpus_alphabet(const std::string& corpus_path);

// Instance TSV: left context (space-joined), misspelling, gold (may be
// empty), right context.
std::vector<MisspellingInstance> read_instances(const std::string& path);
void write_instances(const std::vector<MisspellingInstance>& instances,
                     const std::string& path);
std::string instances_to_tsv(const std::vector<MisspellingInstance>& instances);

}  // namespace ctxspell
