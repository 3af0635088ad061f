#pragma once

#include <memory>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "ctxspell/candidate_gen.hpp"
#include "ctxspell/embedding_store.hpp"

namespace ctxspell {

// One misspelling in context. left holds the preceding tokens nearest-last,
// right the following tokens nearest-first; each side carries at most 10
// tokens. gold is empty when the correction is unknown.
struct MisspellingInstance {
  std::vector<std::string> left;
  std::string misspelling;
  std::vector<std::string> right;
  std::string gold;
};

enum class Composition { addition, multiplication, max };
enum class EditPenalty { dl, dm, dl_plus_dm, spell_score };
enum class Language { en, nl };

using StopwordSet = std::unordered_set<std::string>;

struct RankingConfig {
  int window = 9;  // context positions considered per side, 1..10
  Composition composition = Composition::addition;
  bool reciprocal_weighting = true;
  bool remove_stopwords = true;
  std::shared_ptr<const StopwordSet> stopwords;  // may be null (nothing removed)
  bool include_misspelling_vector = false;
  EditPenalty edit_penalty = EditPenalty::dl;
  double oov_penalty = 1.0;   // >= 1; divides scores of OOV candidates
  double spell_lambda = 0.5;  // edit-distance weight inside spell_score
};

// Figure-1 defaults; Dutch widens the window to 10.
RankingConfig default_config(Language lang);

// One token per line.
std::shared_ptr<const StopwordSet> load_stopwords(const std::string& path);

struct ScoredCandidate {
  Candidate candidate;
  double score = 0.0;
};

struct RankedList {
  std::vector<ScoredCandidate> entries;  // best first
  // Which rule separated first from second place: "score", "dl",
  // "frequency", "form", "single", or "" for an empty list.
  std::string tie_break_trace;
};

// Weighted combination of the context word vectors. Context tokens are used
// only when present in the word vocabulary (no subword composition here);
// stopwords are dropped when configured; reciprocal weights count distance
// over original token positions, so skipped tokens still widen the gap.
// Absent when no usable vector exists.
std::optional<Vector> compose_context(const MisspellingInstance& instance,
                                      const RankingConfig& config,
                                      const EmbeddingStore& store);

// Clamped cosine against the context, divided by the configured edit penalty
// (spell_score mode multiplies instead) and by oov_penalty for candidates
// outside the word vocabulary. Absent when the candidate has no composable
// vector; the caller then falls back to the deterministic tie chain.
std::optional<double> score_candidate(const Candidate& candidate,
                                      const Vector& context_vec,
                                      const std::string& misspelling,
                                      const RankingConfig& config,
                                      const EmbeddingStore& store);

// Blended likelihood: spell_lambda weights the edit-distance term against
// the phonetic term, both normalized by worst-case length and clamped to
// [0, 1].
double spell_score(const Candidate& candidate, const std::string& misspelling,
                   double lambda = 0.5);

// Context-sensitive ranking. Candidates without usable vectors (or with no
// context at all) score 0 and fall to the tie chain: lower dl, higher
// frequency, lexicographic form. Empty candidate set yields an empty list
// (the "no candidates" outcome).
RankedList rank_context(const MisspellingInstance& instance,
                        const std::vector<Candidate>& candidates,
                        const RankingConfig& config,
                        const EmbeddingStore& store);

// Noisy-channel baseline: add-one-smoothed corpus prior times spell_score.
// Context never enters.
RankedList rank_noisy_channel(const MisspellingInstance& instance,
                              const std::vector<Candidate>& candidates,
                              const FrequencyTable& freqs,
                              double lambda = 0.5);

}  // namespace ctxspell
