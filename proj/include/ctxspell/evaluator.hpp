#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "ctxspell/candidate_gen.hpp"
#include "ctxspell/embedding_store.hpp"
#include "ctxspell/lexicon.hpp"
#include "ctxspell/rankers.hpp"

namespace ctxspell {

enum class RankerKind { context, noisy_channel };
enum class EvalMode { true_lexicon, upper_bound };

std::string_view to_string(RankerKind kind);
std::string_view to_string(EvalMode mode);
std::string_view to_string(Composition composition);
std::string_view to_string(EditPenalty penalty);

struct BinStats {
  std::size_t total = 0;
  std::size_t correct = 0;
  double accuracy() const;
};

// First-best accuracy with the relative-frequency breakdown. Instances whose
// gold never reaches the candidate set still count as incorrect; they are
// tallied outside the bins, so
// bins + gold_not_in_candidates + no_candidate_count == total.
struct EvalReport {
  std::string mode;
  std::string ranker;
  std::size_t total = 0;
  std::size_t correct_first = 0;
  double accuracy = 0.0;  // percent
  BinStats bin_one, bin_two, bin_beyond;
  std::size_t gold_not_in_candidates = 0;
  std::size_t no_candidate_count = 0;
};

// Where the gold correction's corpus frequency ranks among the candidate
// set's distinct frequencies: highest, second highest, or lower. Ties share
// the better rank. Gold must be among the candidates.
enum class RelFreqBin { one, two, beyond };
RelFreqBin rel_freq_bin(const std::string& gold,
                        const std::vector<Candidate>& candidates);

// Runs one ranker over an instance corpus. upper_bound mode augments the
// lexicon with every gold form (and rebuilds the phonetic index) before
// generating candidates, removing dictionary shortcomings from the measure.
// restrict_to_vector_vocab drops candidates outside the word vocabulary, as
// the development grid search requires.
EvalReport evaluate(const std::vector<MisspellingInstance>& instances,
                    RankerKind ranker, const Lexicon& lexicon, EvalMode mode,
                    const EmbeddingStore& store, const FrequencyTable& freqs,
                    const RankingConfig& config,
                    bool restrict_to_vector_vocab = false);

// Exhaustive sweep of the context ranker's parameter space:
// composition {addition, multiplication, max} x penalty {dl, dm, dl+dm,
// spell_score} x window {1..10} x reciprocal {on, off} x stopword removal
// {on, off} x misspelling vector {on, off} - 960 configurations, scored by
// the unweighted mean of Setup-1 and Setup-2 accuracy. Candidates are
// restricted to the vector vocabulary. Ties keep the earliest row in
// enumeration order.
struct GridResult {
  struct Row {
    RankingConfig config;
    double acc_setup1 = 0.0;
    double acc_setup2 = 0.0;
    double mean = 0.0;
  };
  RankingConfig best;
  double best_mean = 0.0;
  std::vector<Row> rows;
};
GridResult grid_search(const std::vector<MisspellingInstance>& setup1,
                       const std::vector<MisspellingInstance>& setup2,
                       const Lexicon& lexicon, const EmbeddingStore& store,
                       const FrequencyTable& freqs,
                       const RankingConfig& base);

// Picks the OOV penalty maximizing the weighted accuracy over Setups 1-3
// (weights normalized to sum 1). OOV candidates stay admitted here.
struct TuneResult {
  struct Row {
    double penalty = 0.0;
    double acc_setup1 = 0.0;
    double acc_setup2 = 0.0;
    double acc_setup3 = 0.0;
    double weighted = 0.0;
  };
  double best_penalty = 1.0;
  std::array<double, 3> weights{};  // normalized
  std::vector<Row> rows;
};
TuneResult tune_oov_penalty(const std::vector<MisspellingInstance>& setup1,
                            const std::vector<MisspellingInstance>& setup2,
                            const std::vector<MisspellingInstance>& setup3,
                            const Lexicon& lexicon, const EmbeddingStore& store,
                            const FrequencyTable& freqs,
                            const RankingConfig& config,
                            const std::vector<double>& penalty_grid,
                            const std::array<double, 3>& weights);

nlohmann::json to_json(const RankingConfig& config);
nlohmann::json to_json(const EvalReport& report);
nlohmann::json to_json(const GridResult& result);
nlohmann::json to_json(const TuneResult& result);

}  // namespace ctxspell
