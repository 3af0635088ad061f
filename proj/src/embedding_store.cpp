#include "ctxspell/embedding_store.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "ctxspell/errors.hpp"
#include "ctxspell/utf8.hpp"

namespace ctxspell {

double cosine(const Vector& u, const Vector& v) {
  if (u.size() != v.size()) {
    throw ContractError("cosine: dimension mismatch (" +
                        std::to_string(u.size()) + " vs " +
                        std::to_string(v.size()) + ")");
  }
  double dot = 0.0, nu = 0.0, nv = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    dot += static_cast<double>(u[i]) * v[i];
    nu += static_cast<double>(u[i]) * u[i];
    nv += static_cast<double>(v[i]) * v[i];
  }
  if (nu == 0.0 || nv == 0.0) return 0.0;
  return dot / (std::sqrt(nu) * std::sqrt(nv));
}

std::vector<std::string> extract_ngrams(std::string_view word,
                                        std::size_t minn, std::size_t maxn) {
  const std::u32string marked = U"<" + utf8::decode(word) + U">";
  std::vector<std::string> out;
  for (std::size_t start = 0; start < marked.size(); ++start) {
    const std::size_t longest = std::min(maxn, marked.size() - start);
    for (std::size_t n = minn; n <= longest; ++n) {
      out.push_back(utf8::encode(
          std::u32string_view(marked).substr(start, n)));
    }
  }
  return out;
}

void FrequencyTable::add(std::string word, std::uint64_t count) {
  counts_[std::move(word)] += count;
  total_ += count;
}

std::uint64_t FrequencyTable::count_of(const std::string& word) const {
  const auto it = counts_.find(word);
  return it == counts_.end() ? 0 : it->second;
}

FrequencyTable load_frequency_table(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open frequency file: " + path);
  FrequencyTable table;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos || tab == 0) {
      throw FormatError(path + ":" + std::to_string(line_no) +
                        ": expected \"word<TAB>count\"");
    }
    std::uint64_t count = 0;
    const char* first = line.data() + tab + 1;
    const char* last = line.data() + line.size();
    if (last > first && last[-1] == '\r') --last;
    const auto [ptr, ec] = std::from_chars(first, last, count);
    if (ec != std::errc() || ptr != last) {
      throw FormatError(path + ":" + std::to_string(line_no) +
                        ": malformed count");
    }
    table.add(line.substr(0, tab), count);
  }
  return table;
}

EmbeddingStore::EmbeddingStore(std::size_t dim, std::size_t minn,
                               std::size_t maxn)
    : dim_(dim), minn_(minn), maxn_(maxn) {
  if (minn_ < 1 || minn_ > maxn_) {
    throw ContractError("embedding store: need 1 <= minn <= maxn");
  }
}

void EmbeddingStore::check_dim(const Vector& v, const std::string& key) const {
  if (v.size() != dim_) {
    throw ContractError("vector for \"" + key + "\" has " +
                        std::to_string(v.size()) + " components, expected " +
                        std::to_string(dim_));
  }
}

void EmbeddingStore::add_word_vector(std::string word, Vector v) {
  check_dim(v, word);
  words_[std::move(word)] = std::move(v);
}

void EmbeddingStore::add_ngram_vector(std::string gram, Vector v) {
  check_dim(v, gram);
  ngrams_[std::move(gram)] = std::move(v);
}

bool EmbeddingStore::has_word(const std::string& word) const {
  return words_.count(word) > 0;
}

const Vector* EmbeddingStore::word_vector(const std::string& word) const {
  const auto it = words_.find(word);
  return it == words_.end() ? nullptr : &it->second;
}

const Vector* EmbeddingStore::ngram_vector(const std::string& gram) const {
  const auto it = ngrams_.find(gram);
  return it == ngrams_.end() ? nullptr : &it->second;
}

std::optional<EmbeddingStore::Composed> EmbeddingStore::vector_for(
    const std::string& word) const {
  if (const Vector* v = word_vector(word)) return Composed{*v, true};
  if (word.empty()) return std::nullopt;
  std::vector<double> acc(dim_, 0.0);
  std::size_t known = 0;
  for (const auto& gram : extract_ngrams(word, minn_, maxn_)) {
    if (const Vector* g = ngram_vector(gram)) {
      for (std::size_t i = 0; i < dim_; ++i) acc[i] += (*g)[i];
      ++known;
    }
  }
  if (known == 0) return std::nullopt;
  Vector mean(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    mean[i] = static_cast<float>(acc[i] / static_cast<double>(known));
  }
  return Composed{std::move(mean), false};
}

namespace {

// Shared row parser for the two vector-file flavors.
struct VecFile {
  std::ifstream in;
  std::string path;
  std::size_t line_no = 0;
  std::string line;

  explicit VecFile(const std::string& p) : in(p, std::ios::binary), path(p) {
    if (!in) throw IoError("cannot open vector file: " + p);
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw FormatError(path + ":" + std::to_string(line_no) + ": " + msg);
  }

  bool next_line() {
    if (!std::getline(in, line)) return false;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return true;
  }

  // Header: the declared fields, all non-negative integers.
  std::vector<std::size_t> header(std::size_t n_fields) {
    if (!next_line()) fail("missing header");
    std::vector<std::size_t> out;
    const char* p = line.data();
    const char* end = line.data() + line.size();
    for (std::size_t k = 0; k < n_fields; ++k) {
      while (p < end && *p == ' ') ++p;
      std::size_t value = 0;
      const auto [ptr, ec] = std::from_chars(p, end, value);
      if (ec != std::errc()) fail("malformed header");
      out.push_back(value);
      p = ptr;
    }
    while (p < end && *p == ' ') ++p;
    if (p != end) fail("trailing data in header");
    return out;
  }

  // Row: key followed by exactly `dim` finite floats.
  bool row(std::size_t dim, std::string& key, Vector& v) {
    if (!next_line()) return false;
    const auto space = line.find(' ');
    if (space == std::string::npos || space == 0) {
      fail("expected \"<key> v1 ... v_dim\"");
    }
    key.assign(line, 0, space);
    v.clear();
    v.reserve(dim);
    const char* p = line.data() + space;
    const char* end = line.data() + line.size();
    while (p < end) {
      while (p < end && *p == ' ') ++p;
      if (p == end) break;
      float value = 0.0f;
      const auto [ptr, ec] = std::from_chars(p, end, value);
      if (ec != std::errc()) fail("malformed float");
      if (!std::isfinite(value)) fail("non-finite component");
      v.push_back(value);
      p = ptr;
    }
    if (v.size() != dim) {
      fail("row has " + std::to_string(v.size()) +
           " components, header declares " + std::to_string(dim));
    }
    return true;
  }
};

}  // namespace

EmbeddingStore load_store(const std::string& word_vec_path,
                          const std::string& ngram_vec_path) {
  VecFile wf(word_vec_path);
  const auto wh = wf.header(2);
  const std::size_t dim = wh[1];

  VecFile nf(ngram_vec_path);
  const auto nh = nf.header(4);
  if (nh[1] != dim) {
    nf.fail("dimension " + std::to_string(nh[1]) +
            " disagrees with word file dimension " + std::to_string(dim));
  }

  EmbeddingStore store(dim, nh[2], nh[3]);
  std::string key;
  Vector v;
  while (wf.row(dim, key, v)) {
    if (store.has_word(key)) wf.fail("duplicate word \"" + key + "\"");
    store.add_word_vector(key, v);
  }
  while (nf.row(dim, key, v)) {
    if (store.ngram_vector(key) != nullptr) {
      nf.fail("duplicate n-gram \"" + key + "\"");
    }
    store.add_ngram_vector(key, v);
  }
  return store;
}

namespace {

void write_rows(std::ofstream& out,
                const std::unordered_map<std::string, Vector>& rows) {
  // Sorted output keeps the files diffable run to run.
  std::vector<const std::string*> keys;
  keys.reserve(rows.size());
  for (const auto& [k, v] : rows) keys.push_back(&k);
  std::sort(keys.begin(), keys.end(),
            [](const auto* a, const auto* b) { return *a < *b; });
  char buf[64];
  for (const auto* k : keys) {
    out << *k;
    for (float x : rows.at(*k)) {
      std::snprintf(buf, sizeof buf, " %.8g", static_cast<double>(x));
      out << buf;
    }
    out << '\n';
  }
}

}  // namespace

void save_store(const EmbeddingStore& store, const std::string& word_vec_path,
                const std::string& ngram_vec_path) {
  std::ofstream wf(word_vec_path, std::ios::binary);
  if (!wf) throw IoError("cannot write vector file: " + word_vec_path);
  wf << store.word_count() << ' ' << store.dim() << '\n';
  write_rows(wf, store.word_vectors());

  std::ofstream nf(ngram_vec_path, std::ios::binary);
  if (!nf) throw IoError("cannot write vector file: " + ngram_vec_path);
  nf << store.ngram_count() << ' ' << store.dim() << ' ' << store.minn() << ' '
     << store.maxn() << '\n';
  write_rows(nf, store.ngram_vectors());
}

}  // namespace ctxspell
