#include "ctxspell/evaluator.hpp"

#include <algorithm>
#include <set>

#include "ctxspell/errors.hpp"

namespace ctxspell {

std::string_view to_string(RankerKind kind) {
  return kind == RankerKind::context ? "context" : "noisy";
}

std::string_view to_string(EvalMode mode) {
  return mode == EvalMode::true_lexicon ? "true" : "upper_bound";
}

std::string_view to_string(Composition composition) {
  switch (composition) {
    case Composition::addition: return "addition";
    case Composition::multiplication: return "multiplication";
    case Composition::max: return "max";
  }
  return "?";
}

std::string_view to_string(EditPenalty penalty) {
  switch (penalty) {
    case EditPenalty::dl: return "dl";
    case EditPenalty::dm: return "dm";
    case EditPenalty::dl_plus_dm: return "dl_plus_dm";
    case EditPenalty::spell_score: return "spell_score";
  }
  return "?";
}

double BinStats::accuracy() const {
  return total == 0 ? 0.0
                    : 100.0 * static_cast<double>(correct) /
                          static_cast<double>(total);
}

RelFreqBin rel_freq_bin(const std::string& gold,
                        const std::vector<Candidate>& candidates) {
  const Candidate* gold_candidate = nullptr;
  for (const auto& c : candidates) {
    if (c.form == gold) {
      gold_candidate = &c;
      break;
    }
  }
  if (!gold_candidate) {
    throw ContractError("rel_freq_bin: gold \"" + gold +
                        "\" is not among the candidates");
  }
  // Dense ranking over distinct frequency values; ties share the better rank.
  std::set<std::uint64_t> higher;
  for (const auto& c : candidates) {
    if (c.frequency > gold_candidate->frequency) higher.insert(c.frequency);
  }
  if (higher.empty()) return RelFreqBin::one;
  if (higher.size() == 1) return RelFreqBin::two;
  return RelFreqBin::beyond;
}

namespace {

RankedList run_ranker(RankerKind kind, const MisspellingInstance& inst,
                      const std::vector<Candidate>& candidates,
                      const RankingConfig& config, const EmbeddingStore& store,
                      const FrequencyTable& freqs) {
  if (kind == RankerKind::context) {
    return rank_context(inst, candidates, config, store);
  }
  return rank_noisy_channel(inst, candidates, freqs, config.spell_lambda);
}

std::vector<Candidate> vocab_only(std::vector<Candidate> candidates) {
  std::erase_if(candidates,
                [](const Candidate& c) { return !c.in_embedding_vocab; });
  return candidates;
}

}  // namespace

EvalReport evaluate(const std::vector<MisspellingInstance>& instances,
                    RankerKind ranker, const Lexicon& lexicon, EvalMode mode,
                    const EmbeddingStore& store, const FrequencyTable& freqs,
                    const RankingConfig& config,
                    bool restrict_to_vector_vocab) {
  for (const auto& inst : instances) {
    if (inst.gold.empty()) {
      throw ContractError("evaluate: instance for \"" + inst.misspelling +
                          "\" has no gold correction");
    }
  }

  const Lexicon* lex = &lexicon;
  Lexicon augmented;
  if (mode == EvalMode::upper_bound) {
    std::vector<std::string> golds;
    golds.reserve(instances.size());
    for (const auto& inst : instances) golds.push_back(inst.gold);
    augmented = lexicon.augmented(golds);
    lex = &augmented;
  }
  const PhoneticIndex index = build_phonetic_index(*lex);

  EvalReport report;
  report.mode = to_string(mode);
  report.ranker = to_string(ranker);
  report.total = instances.size();

  for (const auto& inst : instances) {
    std::vector<Candidate> candidates =
        generate_candidates(inst.misspelling, *lex, index, freqs, store);
    if (restrict_to_vector_vocab) candidates = vocab_only(std::move(candidates));
    if (candidates.empty()) {
      ++report.no_candidate_count;
      continue;
    }
    const bool gold_reachable =
        std::any_of(candidates.begin(), candidates.end(),
                    [&](const Candidate& c) { return c.form == inst.gold; });
    if (!gold_reachable) {
      ++report.gold_not_in_candidates;
      continue;
    }

    const RankedList ranked =
        run_ranker(ranker, inst, candidates, config, store, freqs);
    const bool correct = ranked.entries.front().candidate.form == inst.gold;
    if (correct) ++report.correct_first;

    BinStats* bin = nullptr;
    switch (rel_freq_bin(inst.gold, candidates)) {
      case RelFreqBin::one: bin = &report.bin_one; break;
      case RelFreqBin::two: bin = &report.bin_two; break;
      case RelFreqBin::beyond: bin = &report.bin_beyond; break;
    }
    ++bin->total;
    if (correct) ++bin->correct;
  }

  report.accuracy = report.total == 0
                        ? 0.0
                        : 100.0 * static_cast<double>(report.correct_first) /
                              static_cast<double>(report.total);
  return report;
}

namespace {

// Candidate sets do not depend on the ranking configuration, so sweeps
// prepare them once per instance.
struct Prepared {
  const MisspellingInstance* inst;
  std::vector<Candidate> candidates;
};

std::vector<Prepared> prepare(const std::vector<MisspellingInstance>& instances,
                              const Lexicon& lexicon,
                              const PhoneticIndex& index,
                              const EmbeddingStore& store,
                              const FrequencyTable& freqs,
                              bool restrict_to_vector_vocab) {
  std::vector<Prepared> out;
  out.reserve(instances.size());
  for (const auto& inst : instances) {
    if (inst.gold.empty()) {
      throw ContractError("grid corpus: instance for \"" + inst.misspelling +
                          "\" has no gold correction");
    }
    std::vector<Candidate> candidates =
        generate_candidates(inst.misspelling, lexicon, index, freqs, store);
    if (restrict_to_vector_vocab) candidates = vocab_only(std::move(candidates));
    out.push_back({&inst, std::move(candidates)});
  }
  return out;
}

double accuracy_over(const std::vector<Prepared>& prepared,
                     const RankingConfig& config, const EmbeddingStore& store) {
  if (prepared.empty()) return 0.0;
  std::size_t correct = 0;
  for (const auto& p : prepared) {
    if (p.candidates.empty()) continue;
    const RankedList ranked =
        rank_context(*p.inst, p.candidates, config, store);
    if (ranked.entries.front().candidate.form == p.inst->gold) ++correct;
  }
  return 100.0 * static_cast<double>(correct) /
         static_cast<double>(prepared.size());
}

}  // namespace

GridResult grid_search(const std::vector<MisspellingInstance>& setup1,
                       const std::vector<MisspellingInstance>& setup2,
                       const Lexicon& lexicon, const EmbeddingStore& store,
                       const FrequencyTable& freqs,
                       const RankingConfig& base) {
  if (setup1.empty() || setup2.empty()) {
    throw ContractError("grid_search: both development corpora must be "
                        "non-empty");
  }
  const PhoneticIndex index = build_phonetic_index(lexicon);
  const auto prepared1 = prepare(setup1, lexicon, index, store, freqs, true);
  const auto prepared2 = prepare(setup2, lexicon, index, store, freqs, true);

  constexpr Composition kCompositions[] = {
      Composition::addition, Composition::multiplication, Composition::max};
  constexpr EditPenalty kPenalties[] = {EditPenalty::dl, EditPenalty::dm,
                                        EditPenalty::dl_plus_dm,
                                        EditPenalty::spell_score};
  constexpr bool kBools[] = {true, false};

  GridResult result;
  result.rows.reserve(static_cast<std::size_t>(3 * 4 * 10 * 2 * 2 * 2));
  bool have_best = false;
  for (const Composition composition : kCompositions) {
    for (const EditPenalty penalty : kPenalties) {
      for (int window = 1; window <= 10; ++window) {
        for (const bool reciprocal : kBools) {
          for (const bool stopwords : kBools) {
            for (const bool missp_vec : kBools) {
              RankingConfig config = base;
              config.composition = composition;
              config.edit_penalty = penalty;
              config.window = window;
              config.reciprocal_weighting = reciprocal;
              config.remove_stopwords = stopwords;
              config.include_misspelling_vector = missp_vec;

              GridResult::Row row;
              row.config = config;
              row.acc_setup1 = accuracy_over(prepared1, config, store);
              row.acc_setup2 = accuracy_over(prepared2, config, store);
              row.mean = (row.acc_setup1 + row.acc_setup2) / 2.0;
              if (!have_best || row.mean > result.best_mean) {
                result.best = config;
                result.best_mean = row.mean;
                have_best = true;
              }
              result.rows.push_back(std::move(row));
            }
          }
        }
      }
    }
  }
  return result;
}

TuneResult tune_oov_penalty(const std::vector<MisspellingInstance>& setup1,
                            const std::vector<MisspellingInstance>& setup2,
                            const std::vector<MisspellingInstance>& setup3,
                            const Lexicon& lexicon, const EmbeddingStore& store,
                            const FrequencyTable& freqs,
                            const RankingConfig& config,
                            const std::vector<double>& penalty_grid,
                            const std::array<double, 3>& weights) {
  if (penalty_grid.empty()) {
    throw ContractError("tune_oov_penalty: empty penalty grid");
  }
  for (const double p : penalty_grid) {
    if (p < 1.0) {
      throw ContractError("tune_oov_penalty: penalties must be >= 1");
    }
  }
  const double weight_sum = weights[0] + weights[1] + weights[2];
  if (weight_sum <= 0.0) {
    throw ContractError("tune_oov_penalty: weights must sum to a positive "
                        "value");
  }

  TuneResult result;
  for (std::size_t i = 0; i < 3; ++i) result.weights[i] = weights[i] / weight_sum;

  const PhoneticIndex index = build_phonetic_index(lexicon);
  const auto prepared1 = prepare(setup1, lexicon, index, store, freqs, false);
  const auto prepared2 = prepare(setup2, lexicon, index, store, freqs, false);
  const auto prepared3 = prepare(setup3, lexicon, index, store, freqs, false);

  bool have_best = false;
  double best_weighted = 0.0;
  for (const double penalty : penalty_grid) {
    RankingConfig tuned = config;
    tuned.oov_penalty = penalty;
    TuneResult::Row row;
    row.penalty = penalty;
    row.acc_setup1 = accuracy_over(prepared1, tuned, store);
    row.acc_setup2 = accuracy_over(prepared2, tuned, store);
    row.acc_setup3 = accuracy_over(prepared3, tuned, store);
    row.weighted = result.weights[0] * row.acc_setup1 +
                   result.weights[1] * row.acc_setup2 +
                   result.weights[2] * row.acc_setup3;
    if (!have_best || row.weighted > best_weighted) {
      best_weighted = row.weighted;
      result.best_penalty = penalty;
      have_best = true;
    }
    result.rows.push_back(row);
  }
  return result;
}

nlohmann::json to_json(const RankingConfig& config) {
  return {
      {"window", config.window},
      {"composition", to_string(config.composition)},
      {"reciprocal_weighting", config.reciprocal_weighting},
      {"remove_stopwords", config.remove_stopwords},
      {"include_misspelling_vector", config.include_misspelling_vector},
      {"edit_penalty", to_string(config.edit_penalty)},
      {"oov_penalty", config.oov_penalty},
      {"spell_lambda", config.spell_lambda},
  };
}

namespace {

nlohmann::json to_json(const BinStats& bin) {
  return {{"count", bin.total},
          {"correct", bin.correct},
          {"accuracy", bin.accuracy()}};
}

}  // namespace

nlohmann::json to_json(const EvalReport& report) {
  return {
      {"mode", report.mode},
      {"ranker", report.ranker},
      {"total", report.total},
      {"correct_first", report.correct_first},
      {"accuracy", report.accuracy},
      {"per_bin",
       {{"relfreq_1", to_json(report.bin_one)},
        {"relfreq_2", to_json(report.bin_two)},
        {"relfreq_gt2", to_json(report.bin_beyond)}}},
      {"gold_not_in_candidates", report.gold_not_in_candidates},
      {"no_candidate_count", report.no_candidate_count},
  };
}

nlohmann::json to_json(const GridResult& result) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : result.rows) {
    rows.push_back({{"config", to_json(row.config)},
                    {"acc_setup1", row.acc_setup1},
                    {"acc_setup2", row.acc_setup2},
                    {"mean", row.mean}});
  }
  return {{"best", to_json(result.best)},
          {"best_mean", result.best_mean},
          {"rows", std::move(rows)}};
}

nlohmann::json to_json(const TuneResult& result) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : result.rows) {
    rows.push_back({{"penalty", row.penalty},
                    {"acc_setup1", row.acc_setup1},
                    {"acc_setup2", row.acc_setup2},
                    {"acc_setup3", row.acc_setup3},
                    {"weighted", row.weighted}});
  }
  return {{"best_penalty", result.best_penalty},
          {"weights", result.weights},
          {"rows", std::move(rows)}};
}

}  // namespace ctxspell
