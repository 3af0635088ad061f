#include "ctxspell/corpus_forge.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "ctxspell/edit_distance.hpp"
#include "ctxspell/errors.hpp"
#include "ctxspell/text_norm.hpp"
#include "ctxspell/utf8.hpp"

namespace ctxspell {

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  if (n == 0) throw ContractError("uniform_below: empty range");
  const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % n;
  std::uint64_t draw;
  do {
    draw = rng();
  } while (draw >= limit);
  return draw % n;
}

namespace {

constexpr std::size_t kContextWindow = 10;

// One random edit in place. Degenerate draws (substituting a character with
// itself, transposing equal characters) may leave the string unchanged; the
// caller's distance check rejects those.
void apply_random_op(std::u32string& w, const ErrorSpec& spec,
                     std::mt19937_64& rng) {
  const std::uint64_t op = uniform_below(rng, 4);
  const std::size_t len = w.size();
  switch (op) {
    case 0: {  // insert
      const auto pos = static_cast<std::size_t>(uniform_below(rng, len + 1));
      const char32_t c =
          spec.alphabet[uniform_below(rng, spec.alphabet.size())];
      w.insert(w.begin() + static_cast<std::ptrdiff_t>(pos), c);
      break;
    }
    case 1: {  // delete
      if (len == 0) break;
      const auto pos = static_cast<std::size_t>(uniform_below(rng, len));
      w.erase(w.begin() + static_cast<std::ptrdiff_t>(pos));
      break;
    }
    case 2: {  // substitute
      if (len == 0) break;
      const auto pos = static_cast<std::size_t>(uniform_below(rng, len));
      w[pos] = spec.alphabet[uniform_below(rng, spec.alphabet.size())];
      break;
    }
    default: {  // transpose adjacent
      if (len < 2) break;
      const auto pos = static_cast<std::size_t>(uniform_below(rng, len - 1));
      std::swap(w[pos], w[pos + 1]);
      break;
    }
  }
}

std::size_t draw_op_count(const ErrorSpec& spec, std::mt19937_64& rng) {
  const auto threshold =
      static_cast<std::uint64_t>(spec.one_op_share * 1e6 + 0.5);
  return uniform_below(rng, 1000000) < threshold ? 1 : 2;
}

void read_lines(const std::string& path, std::vector<std::string>& lines) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open corpus file: " + path);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
}

MisspellingInstance instance_at(const std::vector<std::string>& tokens,
                                std::size_t pos, std::string misspelling,
                                std::string gold) {
  MisspellingInstance inst;
  const std::size_t from = pos > kContextWindow ? pos - kContextWindow : 0;
  inst.left.assign(tokens.begin() + static_cast<std::ptrdiff_t>(from),
                   tokens.begin() + static_cast<std::ptrdiff_t>(pos));
  const std::size_t to = std::min(pos + 1 + kContextWindow, tokens.size());
  inst.right.assign(tokens.begin() + static_cast<std::ptrdiff_t>(pos) + 1,
                    tokens.begin() + static_cast<std::ptrdiff_t>(to));
  inst.misspelling = std::move(misspelling);
  inst.gold = std::move(gold);
  return inst;
}

}  // namespace

std::string induce_error(const std::string& word, const ErrorSpec& spec,
                         const Lexicon& lexicon, std::uint64_t rng_seed) {
  std::mt19937_64 rng(rng_seed);
  return induce_error(word, spec, lexicon, rng);
}

std::string induce_error(const std::string& word, const ErrorSpec& spec,
                         const Lexicon& lexicon, std::mt19937_64& rng) {
  if (spec.alphabet.empty()) throw ContractError("induce_error: empty alphabet");
  if (!lexicon.contains_normalized(word)) {
    throw ContractError("induce_error: \"" + word + "\" is not in the lexicon");
  }
  const std::u32string original = utf8::decode(word);
  if (original.size() < 2) {
    throw ContractError("induce_error: \"" + word + "\" is shorter than 2");
  }

  // The op count is drawn once; retries only re-place the operations, so the
  // 80/20 split is exact per call.
  const std::size_t ops = draw_op_count(spec, rng);
  for (std::size_t attempt = 0; attempt < spec.retry_budget; ++attempt) {
    std::u32string corrupted = original;
    for (std::size_t k = 0; k < ops; ++k) apply_random_op(corrupted, spec, rng);
    if (dl_distance(original, corrupted) != ops) continue;
    const std::string encoded = utf8::encode(corrupted);
    if (!is_normalized_token(encoded)) continue;
    if (lexicon.contains_normalized(encoded)) continue;
    return encoded;
  }
  throw GenerationError("no non-word within " +
                            std::to_string(spec.retry_budget) +
                            " attempts for \"" + word + "\"",
                        0);
}

std::vector<MisspellingInstance> generate_corpus(
    const std::string& corpus_path, const Lexicon& lexicon,
    const EmbeddingStore& store, const SetupFilter& filter, std::size_t target,
    const ErrorSpec& spec, std::uint64_t rng_seed) {
  std::vector<std::string> lines;
  read_lines(corpus_path, lines);

  std::mt19937_64 rng(rng_seed);
  // Fisher-Yates with the portable draw: the visiting order of lines is part
  // of the reproducible stream.
  std::vector<std::size_t> order(lines.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  for (std::size_t i = order.size(); i > 1; --i) {
    std::swap(order[i - 1], order[uniform_below(rng, i)]);
  }

  std::vector<MisspellingInstance> out;
  out.reserve(target);
  for (const std::size_t line_idx : order) {
    if (out.size() == target) break;
    const std::vector<std::string> tokens = tokenize_line(lines[line_idx]);
    std::vector<std::size_t> eligible;
    for (std::size_t pos = 0; pos < tokens.size(); ++pos) {
      const std::string& tok = tokens[pos];
      if (!lexicon.contains_normalized(tok)) continue;
      if (utf8::decode(tok).size() < 2) continue;
      const bool in_vocab = store.has_word(tok);
      if (filter.mode == SetupFilter::Mode::in_vector_vocab ? !in_vocab
                                                            : in_vocab) {
        continue;
      }
      eligible.push_back(pos);
    }
    if (eligible.empty()) continue;
    const std::size_t pos =
        eligible[uniform_below(rng, eligible.size())];
    std::string misspelling;
    try {
      misspelling = induce_error(tokens[pos], spec, lexicon, rng);
    } catch (const GenerationError&) {
      continue;  // word resists corruption; the line yields nothing
    }
    out.push_back(instance_at(tokens, pos, std::move(misspelling),
                              tokens[pos]));
  }

  if (out.size() < target) {
    throw GenerationError("corpus exhausted at " + std::to_string(out.size()) +
                              " of " + std::to_string(target) + " instances",
                          out.size());
  }
  return out;
}

std::vector<MisspellingInstance> detect_misspellings(
    const std::string& corpus_path, const Lexicon& lexicon,
    std::uint64_t freq_cap) {
  std::vector<std::string> lines;
  read_lines(corpus_path, lines);

  FrequencyTable freqs;
  std::vector<std::vector<std::string>> tokenized;
  tokenized.reserve(lines.size());
  for (const auto& line : lines) {
    tokenized.push_back(tokenize_line(line));
    for (const auto& tok : tokenized.back()) freqs.add(tok, 1);
  }

  std::vector<MisspellingInstance> out;
  for (const auto& tokens : tokenized) {
    for (std::size_t pos = 0; pos < tokens.size(); ++pos) {
      const std::string& tok = tokens[pos];
      if (freqs.count_of(tok) > freq_cap) continue;
      if (lexicon.contains_normalized(tok)) continue;
      out.push_back(instance_at(tokens, pos, tok, ""));
    }
  }
  return out;
}

std::u32string corpus_alphabet(const std::string& corpus_path) {
  std::vector<std::string> lines;
  read_lines(corpus_path, lines);
  std::set<char32_t> letters;
  for (const auto& line : lines) {
    for (const auto& tok : tokenize_line(line)) {
      for (char32_t c : utf8::decode(tok)) {
        if (utf8::is_letter(c)) letters.insert(c);
      }
    }
  }
  letters.insert(U'-');
  return std::u32string(letters.begin(), letters.end());
}

namespace {

std::vector<std::string> split_tokens(std::string_view field) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start < field.size()) {
    std::size_t end = field.find(' ', start);
    if (end == std::string_view::npos) end = field.size();
    if (end > start) out.emplace_back(field.substr(start, end - start));
    start = end + 1;
  }
  return out;
}

std::string join_tokens(const std::vector<std::string>& tokens) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i) out += ' ';
    out += tokens[i];
  }
  return out;
}

}  // namespace

std::vector<MisspellingInstance> read_instances(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open instance file: " + path);
  std::vector<MisspellingInstance> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> cols;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= line.size(); ++i) {
      if (i == line.size() || line[i] == '\t') {
        cols.push_back(line.substr(start, i - start));
        start = i + 1;
      }
    }
    const auto fail = [&](const std::string& msg) {
      throw FormatError(path + ":" + std::to_string(line_no) + ": " + msg);
    };
    if (cols.size() != 4) {
      fail("expected 4 tab-separated columns, got " +
           std::to_string(cols.size()));
    }
    MisspellingInstance inst;
    inst.left = split_tokens(cols[0]);
    inst.misspelling = cols[1];
    inst.gold = cols[2];
    inst.right = split_tokens(cols[3]);
    if (inst.misspelling.empty()) fail("empty misspelling column");
    if (inst.left.size() > kContextWindow ||
        inst.right.size() > kContextWindow) {
      fail("context wider than " + std::to_string(kContextWindow) + " tokens");
    }
    out.push_back(std::move(inst));
  }
  return out;
}

std::string instances_to_tsv(
    const std::vector<MisspellingInstance>& instances) {
  std::string out;
  for (const auto& inst : instances) {
    out += join_tokens(inst.left);
    out += '\t';
    out += inst.misspelling;
    out += '\t';
    out += inst.gold;
    out += '\t';
    out += join_tokens(inst.right);
    out += '\n';
  }
  return out;
}

void write_instances(const std::vector<MisspellingInstance>& instances,
                     const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write instance file: " + path);
  out << instances_to_tsv(instances);
}

}  // namespace ctxspell
