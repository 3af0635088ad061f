// Batch front end: candidate generation + ranking over misspelling corpora,
// self-induced corpus generation, evaluation, parameter sweeps, detection.
#include <array>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ctxspell/candidate_gen.hpp"
#include "ctxspell/corpus_forge.hpp"
#include "ctxspell/embedding_store.hpp"
#include "ctxspell/errors.hpp"
#include "ctxspell/evaluator.hpp"
#include "ctxspell/lexicon.hpp"
#include "ctxspell/rankers.hpp"
#include "ctxspell/text_norm.hpp"

namespace {

constexpr const char* kVersion = "ctxspell 0.1.0";

struct Options {
  std::vector<std::string> lexicons;
  std::string vectors;
  std::string ngrams;
  std::string freqs;
  std::string stopwords;
  std::string lang = "en";
  std::string out;
  std::uint64_t seed = 7;

  // Ranking overrides; window 0 means "use the language default".
  int window = 0;
  std::string composition = "addition";
  std::string penalty = "dl";
  bool no_reciprocal = false;
  bool no_stopword_removal = false;
  bool include_misspelling_vector = false;
  double oov_penalty = 1.0;
  double spell_lambda = 0.5;
};

void add_shared(CLI::App* cmd, Options& opt) {
  cmd->add_option("--lexicon", opt.lexicons, "Lexicon file (repeatable)");
  cmd->add_option("--vectors", opt.vectors, "Word-vector file");
  cmd->add_option("--ngrams", opt.ngrams, "N-gram-vector file");
  cmd->add_option("--freqs", opt.freqs, "Frequency file (word<TAB>count)");
  cmd->add_option("--stopwords", opt.stopwords, "Stopword list");
  cmd->add_option("--lang", opt.lang, "Language profile")
      ->check(CLI::IsMember({"en", "nl"}));
  cmd->add_option("--seed", opt.seed, "RNG seed");
  cmd->add_option("--out", opt.out, "Output path (default stdout)");
}

void add_ranking(CLI::App* cmd, Options& opt) {
  cmd->add_option("--window", opt.window, "Context window 1-10")
      ->check(CLI::Range(1, 10));
  cmd->add_option("--composition", opt.composition, "Context composition")
      ->check(CLI::IsMember({"addition", "multiplication", "max"}));
  cmd->add_option("--penalty", opt.penalty, "Edit penalty")
      ->check(CLI::IsMember({"dl", "dm", "dl_plus_dm", "spell_score"}));
  cmd->add_flag("--no-reciprocal", opt.no_reciprocal,
                "Disable reciprocal distance weighting");
  cmd->add_flag("--no-stopword-removal", opt.no_stopword_removal,
                "Keep stopwords in the context");
  cmd->add_flag("--include-misspelling-vector",
                opt.include_misspelling_vector,
                "Add the misspelling's own vector to the context");
  cmd->add_option("--oov-penalty", opt.oov_penalty, "OOV score divisor (>= 1)")
      ->check(CLI::Range(1.0, 1e9));
  cmd->add_option("--spell-lambda", opt.spell_lambda,
                  "Edit-distance weight inside spell_score")
      ->check(CLI::Range(0.0, 1.0));
}

ctxspell::Language language(const Options& opt) {
  return opt.lang == "nl" ? ctxspell::Language::nl : ctxspell::Language::en;
}

ctxspell::RankingConfig make_config(const Options& opt) {
  ctxspell::RankingConfig config = ctxspell::default_config(language(opt));
  if (opt.window != 0) config.window = opt.window;
  if (opt.composition == "multiplication") {
    config.composition = ctxspell::Composition::multiplication;
  } else if (opt.composition == "max") {
    config.composition = ctxspell::Composition::max;
  }
  if (opt.penalty == "dm") {
    config.edit_penalty = ctxspell::EditPenalty::dm;
  } else if (opt.penalty == "dl_plus_dm") {
    config.edit_penalty = ctxspell::EditPenalty::dl_plus_dm;
  } else if (opt.penalty == "spell_score") {
    config.edit_penalty = ctxspell::EditPenalty::spell_score;
  }
  config.reciprocal_weighting = !opt.no_reciprocal;
  config.remove_stopwords = !opt.no_stopword_removal;
  config.include_misspelling_vector = opt.include_misspelling_vector;
  config.oov_penalty = opt.oov_penalty;
  config.spell_lambda = opt.spell_lambda;

  if (!opt.stopwords.empty()) {
    config.stopwords = ctxspell::load_stopwords(opt.stopwords);
  } else {
    const std::string fallback = "data/stopwords_" + opt.lang + ".txt";
    if (std::filesystem::exists(fallback)) {
      config.stopwords = ctxspell::load_stopwords(fallback);
    } else if (config.remove_stopwords) {
      std::cerr << "note: no stopword list found (looked for " << fallback
                << "); none will be removed\n";
    }
  }
  return config;
}

ctxspell::Lexicon require_lexicon(const Options& opt) {
  if (opt.lexicons.empty()) {
    throw ctxspell::ContractError("at least one --lexicon is required");
  }
  return ctxspell::load_lexicon(opt.lexicons);
}

ctxspell::EmbeddingStore require_store(const Options& opt) {
  if (opt.vectors.empty() || opt.ngrams.empty()) {
    throw ctxspell::ContractError("--vectors and --ngrams are required");
  }
  return ctxspell::load_store(opt.vectors, opt.ngrams);
}

ctxspell::FrequencyTable require_freqs(const Options& opt) {
  if (opt.freqs.empty()) {
    throw ctxspell::ContractError("--freqs is required");
  }
  return ctxspell::load_frequency_table(opt.freqs);
}

// All data to the output target; diagnostics go to stderr.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw ctxspell::IoError("cannot write output: " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

void write_json(const Options& opt, nlohmann::json j) {
  Output out(opt.out);
  out.stream() << j.dump(2) << '\n';
}

std::string format_score(double score) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", score);
  return buf;
}

void emit_suggestions(std::ostream& os, const std::string& misspelling,
                      const ctxspell::RankedList& ranked, std::size_t top_k) {
  os << misspelling;
  const std::size_t n = std::min(top_k, ranked.entries.size());
  for (std::size_t i = 0; i < n; ++i) {
    os << '\t' << ranked.entries[i].candidate.form << '\t'
       << format_score(ranked.entries[i].score);
  }
  os << '\n';
}

int cmd_correct(const Options& opt, const std::string& input,
                const std::string& format, const std::string& ranker,
                std::size_t top_k) {
  const auto lexicon = require_lexicon(opt);
  const auto store = require_store(opt);
  const auto freqs = require_freqs(opt);
  const auto config = make_config(opt);
  const auto index = ctxspell::build_phonetic_index(lexicon);
  const bool context = ranker == "context";

  std::vector<ctxspell::MisspellingInstance> instances;
  if (format == "tsv") {
    instances = ctxspell::read_instances(input);
  } else {
    // Raw text: flag lexicon-absent tokens, correct them in line context.
    std::ifstream in(input, std::ios::binary);
    if (!in) throw ctxspell::IoError("cannot open input: " + input);
    std::string line;
    while (std::getline(in, line)) {
      const auto tokens = ctxspell::tokenize_line(line);
      for (std::size_t pos = 0; pos < tokens.size(); ++pos) {
        if (lexicon.contains_normalized(tokens[pos])) continue;
        ctxspell::MisspellingInstance inst;
        const std::size_t from = pos > 10 ? pos - 10 : 0;
        inst.left.assign(tokens.begin() + from, tokens.begin() + pos);
        inst.right.assign(tokens.begin() + pos + 1,
                          tokens.begin() +
                              std::min(pos + 11, tokens.size()));
        inst.misspelling = tokens[pos];
        instances.push_back(std::move(inst));
      }
    }
  }

  Output out(opt.out);
  for (const auto& inst : instances) {
    const auto candidates = ctxspell::generate_candidates(
        inst.misspelling, lexicon, index, freqs, store);
    const ctxspell::RankedList ranked =
        context ? ctxspell::rank_context(inst, candidates, config, store)
                : ctxspell::rank_noisy_channel(inst, candidates, freqs,
                                               config.spell_lambda);
    emit_suggestions(out.stream(), inst.misspelling, ranked, top_k);
  }
  return 0;
}

int cmd_generate(const Options& opt, const std::string& corpus, int setup,
                 std::size_t target, double one_op_share) {
  const auto lexicon = require_lexicon(opt);
  const auto store = require_store(opt);

  ctxspell::ErrorSpec spec;
  spec.one_op_share = one_op_share;
  spec.alphabet = ctxspell::corpus_alphabet(corpus);
  ctxspell::SetupFilter filter;
  filter.mode = setup == 3 ? ctxspell::SetupFilter::Mode::oov_only
                           : ctxspell::SetupFilter::Mode::in_vector_vocab;

  const auto instances = ctxspell::generate_corpus(
      corpus, lexicon, store, filter, target, spec, opt.seed);
  Output out(opt.out);
  out.stream() << ctxspell::instances_to_tsv(instances);
  std::cerr << "generated " << instances.size() << " instances (setup "
            << setup << ", seed " << opt.seed << ")\n";
  return 0;
}

int cmd_evaluate(const Options& opt, const std::string& corpus,
                 const std::string& ranker, const std::string& mode) {
  const auto lexicon = require_lexicon(opt);
  const auto store = require_store(opt);
  const auto freqs = require_freqs(opt);
  const auto config = make_config(opt);

  const auto instances = ctxspell::read_instances(corpus);
  const auto report = ctxspell::evaluate(
      instances,
      ranker == "context" ? ctxspell::RankerKind::context
                          : ctxspell::RankerKind::noisy_channel,
      lexicon,
      mode == "upper_bound" ? ctxspell::EvalMode::upper_bound
                            : ctxspell::EvalMode::true_lexicon,
      store, freqs, config);

  nlohmann::json j = ctxspell::to_json(report);
  j["config"] = ctxspell::to_json(config);
  j["tool"] = kVersion;
  j["corpus"] = corpus;
  j["seed"] = opt.seed;
  write_json(opt, std::move(j));
  return 0;
}

int cmd_grid(const Options& opt, const std::string& setup1_path,
             const std::string& setup2_path) {
  const auto lexicon = require_lexicon(opt);
  const auto store = require_store(opt);
  const auto freqs = require_freqs(opt);
  const auto base = make_config(opt);

  const auto result = ctxspell::grid_search(
      ctxspell::read_instances(setup1_path),
      ctxspell::read_instances(setup2_path), lexicon, store, freqs, base);

  nlohmann::json j = ctxspell::to_json(result);
  j["tool"] = kVersion;
  j["setup1"] = setup1_path;
  j["setup2"] = setup2_path;
  j["seed"] = opt.seed;
  write_json(opt, std::move(j));
  std::cerr << "grid: " << result.rows.size() << " configurations, best mean "
            << result.best_mean << "\n";
  return 0;
}

int cmd_tune_oov(const Options& opt, const std::string& setup1_path,
                 const std::string& setup2_path, const std::string& setup3_path,
                 const std::vector<double>& penalties,
                 const std::vector<double>& weights) {
  const auto lexicon = require_lexicon(opt);
  const auto store = require_store(opt);
  const auto freqs = require_freqs(opt);
  const auto config = make_config(opt);

  if (weights.size() != 3) {
    throw ctxspell::ContractError("--weights needs exactly 3 values");
  }
  const auto result = ctxspell::tune_oov_penalty(
      ctxspell::read_instances(setup1_path),
      ctxspell::read_instances(setup2_path),
      ctxspell::read_instances(setup3_path), lexicon, store, freqs, config,
      penalties, {weights[0], weights[1], weights[2]});

  nlohmann::json j = ctxspell::to_json(result);
  j["tool"] = kVersion;
  j["seed"] = opt.seed;
  write_json(opt, std::move(j));
  std::cerr << "tune-oov: best penalty " << result.best_penalty << "\n";
  return 0;
}

int cmd_detect(const Options& opt, const std::string& corpus,
               std::uint64_t freq_cap) {
  const auto lexicon = require_lexicon(opt);
  const auto flagged =
      ctxspell::detect_misspellings(corpus, lexicon, freq_cap);
  Output out(opt.out);
  out.stream() << ctxspell::instances_to_tsv(flagged);
  std::cerr << "flagged " << flagged.size() << " occurrences\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Context-sensitive spelling correction for noisy clinical "
               "text"};
  app.set_version_flag("--version", kVersion);
  app.set_config("--config", "", "Key-value config file; flags win");
  app.require_subcommand(1);

  Options opt;

  auto* correct = app.add_subcommand("correct", "Rank corrections");
  std::string correct_input;
  std::string correct_format = "tsv";
  std::string correct_ranker = "context";
  std::size_t top_k = 5;
  correct->add_option("input", correct_input, "Instance TSV or text file")
      ->required();
  correct->add_option("--format", correct_format, "Input format")
      ->check(CLI::IsMember({"tsv", "text"}));
  correct->add_option("--ranker", correct_ranker, "Ranking model")
      ->check(CLI::IsMember({"context", "noisy"}));
  correct->add_option("--top-k", top_k, "Suggestions per misspelling");
  add_shared(correct, opt);
  add_ranking(correct, opt);

  auto* generate = app.add_subcommand("generate", "Self-induce an error "
                                                  "corpus");
  std::string gen_corpus;
  int gen_setup = 1;
  std::size_t gen_target = 1000;
  double gen_one_op_share = 0.8;
  generate->add_option("corpus", gen_corpus, "Reference text corpus")
      ->required();
  generate->add_option("--setup", gen_setup, "Setup 1/2: in-vocabulary "
                                             "golds; setup 3: OOV golds")
      ->check(CLI::IsMember({1, 2, 3}));
  generate->add_option("--target", gen_target, "Instance count")->required();
  generate->add_option("--one-op-share", gen_one_op_share,
                       "Probability of a single edit")
      ->check(CLI::Range(0.0, 1.0));
  add_shared(generate, opt);

  auto* evaluate = app.add_subcommand("evaluate", "First-best accuracy over "
                                                  "an instance corpus");
  std::string eval_corpus;
  std::string eval_ranker = "context";
  std::string eval_mode = "true";
  evaluate->add_option("corpus", eval_corpus, "Instance TSV")->required();
  evaluate->add_option("--ranker", eval_ranker, "Ranking model")
      ->check(CLI::IsMember({"context", "noisy"}));
  evaluate->add_option("--mode", eval_mode, "Lexicon mode")
      ->check(CLI::IsMember({"true", "upper_bound"}));
  add_shared(evaluate, opt);
  add_ranking(evaluate, opt);

  auto* grid = app.add_subcommand("grid", "Exhaustive parameter sweep");
  std::string grid_setup1, grid_setup2;
  grid->add_option("setup1", grid_setup1, "Setup-1 instance TSV")->required();
  grid->add_option("setup2", grid_setup2, "Setup-2 instance TSV")->required();
  add_shared(grid, opt);
  add_ranking(grid, opt);

  auto* tune = app.add_subcommand("tune-oov", "Pick the OOV penalty");
  std::string tune_setup1, tune_setup2, tune_setup3;
  std::vector<double> tune_penalties{1.0, 1.5, 2.0, 3.0, 4.0, 6.0, 8.0, 12.0};
  std::vector<double> tune_weights{0.25, 0.25, 0.5};
  tune->add_option("setup1", tune_setup1, "Setup-1 instance TSV")->required();
  tune->add_option("setup2", tune_setup2, "Setup-2 instance TSV")->required();
  tune->add_option("setup3", tune_setup3, "Setup-3 instance TSV")->required();
  tune->add_option("--penalties", tune_penalties, "Penalty grid (>= 1)");
  tune->add_option("--weights", tune_weights, "Setup weights (normalized)");
  add_shared(tune, opt);
  add_ranking(tune, opt);

  auto* detect = app.add_subcommand("detect", "Flag likely non-word "
                                              "misspellings");
  std::string detect_corpus;
  std::uint64_t detect_cap = 5;
  detect->add_option("corpus", detect_corpus, "Text corpus")->required();
  detect->add_option("--freq-cap", detect_cap,
                     "Flag tokens at or below this corpus frequency");
  add_shared(detect, opt);

  CLI11_PARSE(app, argc, argv);

  try {
    if (correct->parsed()) {
      return cmd_correct(opt, correct_input, correct_format, correct_ranker,
                         top_k);
    }
    if (generate->parsed()) {
      return cmd_generate(opt, gen_corpus, gen_setup, gen_target,
                          gen_one_op_share);
    }
    if (evaluate->parsed()) {
      return cmd_evaluate(opt, eval_corpus, eval_ranker, eval_mode);
    }
    if (grid->parsed()) return cmd_grid(opt, grid_setup1, grid_setup2);
    if (tune->parsed()) {
      return cmd_tune_oov(opt, tune_setup1, tune_setup2, tune_setup3,
                          tune_penalties, tune_weights);
    }
    if (detect->parsed()) return cmd_detect(opt, detect_corpus, detect_cap);
  } catch (const ctxspell::GenerationError& e) {
    std::cerr << "error: " << e.what() << " (achieved " << e.achieved << ")\n";
    return 1;
  } catch (const ctxspell::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
