#include "ctxspell/rankers.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "ctxspell/errors.hpp"
#include "ctxspell/phonetics.hpp"
#include "ctxspell/text_norm.hpp"
#include "ctxspell/utf8.hpp"

namespace ctxspell {

RankingConfig default_config(Language lang) {
  RankingConfig config;
  config.window = lang == Language::nl ? 10 : 9;
  return config;
}

std::shared_ptr<const StopwordSet> load_stopwords(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open stopword file: " + path);
  auto set = std::make_shared<StopwordSet>();
  std::string line;
  while (std::getline(in, line)) {
    if (auto norm = normalize_token(line)) set->insert(*std::move(norm));
  }
  return set;
}

namespace {

// Fold one weighted vector into the running composition.
void combine(Vector& acc, bool& first, const Vector& v, double weight,
             Composition composition) {
  if (first) {
    acc.resize(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      acc[i] = static_cast<float>(weight * v[i]);
    }
    first = false;
    return;
  }
  switch (composition) {
    case Composition::addition:
      for (std::size_t i = 0; i < v.size(); ++i) {
        acc[i] += static_cast<float>(weight * v[i]);
      }
      break;
    case Composition::multiplication:
      for (std::size_t i = 0; i < v.size(); ++i) {
        acc[i] *= static_cast<float>(weight * v[i]);
      }
      break;
    case Composition::max:
      for (std::size_t i = 0; i < v.size(); ++i) {
        acc[i] = std::max(acc[i], static_cast<float>(weight * v[i]));
      }
      break;
  }
}

bool is_stopword(const RankingConfig& config, const std::string& token) {
  return config.remove_stopwords && config.stopwords &&
         config.stopwords->count(token) > 0;
}

}  // namespace

std::optional<Vector> compose_context(const MisspellingInstance& instance,
                                      const RankingConfig& config,
                                      const EmbeddingStore& store) {
  Vector acc;
  bool first = true;

  // One side of the window: tokens ordered nearest first, distance d = 1, 2,
  // ... over original positions whether or not a token gets used.
  const auto side = [&](auto begin, auto end) {
    int d = 0;
    for (auto it = begin; it != end && d < config.window; ++it) {
      ++d;
      const std::string& token = *it;
      if (is_stopword(config, token)) continue;
      const Vector* v = store.word_vector(token);
      if (!v) continue;
      const double weight = config.reciprocal_weighting ? 1.0 / d : 1.0;
      combine(acc, first, *v, weight, config.composition);
    }
  };

  side(instance.left.rbegin(), instance.left.rend());
  side(instance.right.begin(), instance.right.end());

  if (config.include_misspelling_vector) {
    if (const auto composed = store.vector_for(instance.misspelling)) {
      combine(acc, first, composed->vec, 1.0, config.composition);
    }
  }

  if (first) return std::nullopt;
  return acc;
}

double spell_score(const Candidate& candidate, const std::string& misspelling,
                   double lambda) {
  const auto clamp01 = [](double x) { return std::clamp(x, 0.0, 1.0); };

  const std::size_t len_c = utf8::decode(candidate.form).size();
  const std::size_t len_m = utf8::decode(misspelling).size();
  const std::size_t maxlen = std::max(len_c, len_m);
  const double edit_term =
      maxlen == 0 ? 1.0
                  : clamp01(1.0 - static_cast<double>(candidate.dl) /
                                      static_cast<double>(maxlen));

  const std::size_t code_c = double_metaphone(candidate.form).primary.size();
  const std::size_t code_m = double_metaphone(misspelling).primary.size();
  const std::size_t max_code_len = std::max(code_c, code_m);
  const double phon_term =
      max_code_len == 0 ? 1.0
                        : clamp01(1.0 - static_cast<double>(candidate.dm_dl) /
                                            static_cast<double>(max_code_len));

  return lambda * edit_term + (1.0 - lambda) * phon_term;
}

std::optional<double> score_candidate(const Candidate& candidate,
                                      const Vector& context_vec,
                                      const std::string& misspelling,
                                      const RankingConfig& config,
                                      const EmbeddingStore& store) {
  const auto composed = store.vector_for(candidate.form);
  if (!composed) return std::nullopt;

  double score = std::max(cosine(composed->vec, context_vec), 0.0);
  switch (config.edit_penalty) {
    case EditPenalty::dl:
      score /= static_cast<double>(candidate.dl);
      break;
    case EditPenalty::dm:
      // +1 keeps identical codes from dividing by zero.
      score /= static_cast<double>(candidate.dm_dl + 1);
      break;
    case EditPenalty::dl_plus_dm:
      score /= static_cast<double>(candidate.dl + candidate.dm_dl);
      break;
    case EditPenalty::spell_score:
      score *= spell_score(candidate, misspelling, config.spell_lambda);
      break;
  }
  if (!candidate.in_embedding_vocab) score /= config.oov_penalty;
  return score;
}

namespace {

bool ranks_before(const ScoredCandidate& a, const ScoredCandidate& b) {
  if (a.score != b.score) return a.score > b.score;
  if (a.candidate.dl != b.candidate.dl) return a.candidate.dl < b.candidate.dl;
  if (a.candidate.frequency != b.candidate.frequency) {
    return a.candidate.frequency > b.candidate.frequency;
  }
  return a.candidate.form < b.candidate.form;
}

RankedList finish(std::vector<ScoredCandidate> scored) {
  std::sort(scored.begin(), scored.end(), ranks_before);
  RankedList out;
  out.entries = std::move(scored);
  if (out.entries.empty()) {
    out.tie_break_trace = "";
  } else if (out.entries.size() == 1) {
    out.tie_break_trace = "single";
  } else {
    const auto& a = out.entries[0];
    const auto& b = out.entries[1];
    if (a.score != b.score) {
      out.tie_break_trace = "score";
    } else if (a.candidate.dl != b.candidate.dl) {
      out.tie_break_trace = "dl";
    } else if (a.candidate.frequency != b.candidate.frequency) {
      out.tie_break_trace = "frequency";
    } else {
      out.tie_break_trace = "form";
    }
  }
  return out;
}

}  // namespace

RankedList rank_context(const MisspellingInstance& instance,
                        const std::vector<Candidate>& candidates,
                        const RankingConfig& config,
                        const EmbeddingStore& store) {
  std::vector<ScoredCandidate> scored;
  scored.reserve(candidates.size());
  const auto context = compose_context(instance, config, store);
  for (const auto& c : candidates) {
    double s = 0.0;
    if (context) {
      s = score_candidate(c, *context, instance.misspelling, config, store)
              .value_or(0.0);
    }
    scored.push_back({c, s});
  }
  return finish(std::move(scored));
}

RankedList rank_noisy_channel(const MisspellingInstance& instance,
                              const std::vector<Candidate>& candidates,
                              const FrequencyTable& freqs, double lambda) {
  std::vector<ScoredCandidate> scored;
  scored.reserve(candidates.size());
  const double denom = static_cast<double>(freqs.total()) +
                       static_cast<double>(freqs.vocab_size());
  for (const auto& c : candidates) {
    const double prior =
        denom == 0.0 ? 1.0
                     : static_cast<double>(c.frequency + 1) / denom;
    scored.push_back({c, prior * spell_score(c, instance.misspelling, lambda)});
  }
  return finish(std::move(scored));
}

}  // namespace ctxspell
