#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace ctxspell {

using Vector = std::vector<float>;

// Cosine similarity in [-1, 1]. Dimension mismatch is a contract violation;
// a zero vector yields 0 (no information must not outrank anything).
double cosine(const Vector& u, const Vector& v);

// All substrings of "<word>" (boundary markers added) with code-point length
// in [minn, maxn], position-major; the full marked word is included when it
// fits the range. Duplicates are kept.
std::vector<std::string> extract_ngrams(std::string_view word,
                                        std::size_t minn, std::size_t maxn);

// Corpus unigram counts backing the noisy-channel prior and the
// relative-frequency analysis.
class FrequencyTable {
 public:
  void add(std::string word, std::uint64_t count);
  std::uint64_t count_of(const std::string& word) const;
  std::uint64_t total() const { return total_; }
  std::size_t vocab_size() const { return counts_.size(); }
  const std::unordered_map<std::string, std::uint64_t>& counts() const {
    return counts_;
  }

 private:
  std::unordered_map<std::string, std::uint64_t> counts_;
  std::uint64_t total_ = 0;
};

// Rows "<word>\t<count>".
FrequencyTable load_frequency_table(const std::string& path);

// Word vectors plus character-n-gram vectors for composing vectors of words
// outside the trained vocabulary.
class EmbeddingStore {
 public:
  EmbeddingStore() = default;
  EmbeddingStore(std::size_t dim, std::size_t minn, std::size_t maxn);

  std::size_t dim() const { return dim_; }
  std::size_t minn() const { return minn_; }
  std::size_t maxn() const { return maxn_; }
  std::size_t word_count() const { return words_.size(); }
  std::size_t ngram_count() const { return ngrams_.size(); }

  void add_word_vector(std::string word, Vector v);
  void add_ngram_vector(std::string gram, Vector v);

  bool has_word(const std::string& word) const;
  const Vector* word_vector(const std::string& word) const;
  const Vector* ngram_vector(const std::string& gram) const;

  struct Composed {
    Vector vec;
    bool in_vocab;
  };
  // Stored row for in-vocabulary words; otherwise the mean of the vectors of
  // the word's known n-grams. Absent when nothing is known at all.
  std::optional<Composed> vector_for(const std::string& word) const;

  const std::unordered_map<std::string, Vector>& word_vectors() const {
    return words_;
  }
  const std::unordered_map<std::string, Vector>& ngram_vectors() const {
    return ngrams_;
  }

 private:
  void check_dim(const Vector& v, const std::string& key) const;

  std::size_t dim_ = 0;
  std::size_t minn_ = 3;
  std::size_t maxn_ = 6;
  std::unordered_map<std::string, Vector> words_;
  std::unordered_map<std::string, Vector> ngrams_;
};

// Interchange format. Word file: header "<count> <dim>", rows
// "<word> v1 ... v_dim". N-gram file: header "<count> <dim> <minn> <maxn>",
// rows alike with '<'/'>'-marked n-gram strings.
EmbeddingStore load_store(const std::string& word_vec_path,
                          const std::string& ngram_vec_path);
void save_store(const EmbeddingStore& store, const std::string& word_vec_path,
                const std::string& ngram_vec_path);

}  // namespace ctxspell
