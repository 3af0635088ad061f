#include "ctxspell/lexicon.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "ctxspell/errors.hpp"
#include "ctxspell/text_norm.hpp"
#include "ctxspell/utf8.hpp"

namespace ctxspell {

Lexicon::Lexicon(const std::vector<std::string>& forms,
                 std::size_t source_count)
    : source_count_(source_count) {
  for (const auto& f : forms) insert(f);
  rebuild_buckets();
}

void Lexicon::insert(std::string_view raw) {
  if (auto norm = normalize_token(raw)) forms_.insert(*std::move(norm));
}

void Lexicon::rebuild_buckets() {
  by_length_.clear();
  for (const auto& form : forms_) {
    const std::size_t len = utf8::decode(form).size();
    if (len >= by_length_.size()) by_length_.resize(len + 1);
    by_length_[len].push_back(form);
  }
  for (auto& bucket : by_length_) std::sort(bucket.begin(), bucket.end());
}

bool Lexicon::contains(std::string_view form) const {
  const auto norm = normalize_token(form);
  return norm && forms_.count(*norm) > 0;
}

bool Lexicon::contains_normalized(const std::string& form) const {
  return forms_.count(form) > 0;
}

const std::vector<std::string>& Lexicon::forms_of_length(
    std::size_t length) const {
  static const std::vector<std::string> empty;
  return length < by_length_.size() ? by_length_[length] : empty;
}

std::size_t Lexicon::max_form_length() const {
  return by_length_.empty() ? 0 : by_length_.size() - 1;
}

Lexicon Lexicon::augmented(const std::vector<std::string>& extra) const {
  Lexicon grown;
  grown.forms_ = forms_;
  grown.source_count_ = source_count_;
  for (const auto& f : extra) grown.insert(f);
  grown.rebuild_buckets();
  return grown;
}

Lexicon load_lexicon(const std::vector<std::string>& paths) {
  std::vector<std::string> entries;
  for (const auto& path : paths) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open lexicon file: " + path);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.front() == '#') continue;
      std::u32string decoded;
      try {
        decoded = utf8::decode(line);
      } catch (const FormatError& e) {
        throw FormatError(path + ":" + std::to_string(line_no) + ": " +
                          e.what());
      }
      // Multi-word entries (common in merged clinical resources) are split
      // and each part stored.
      std::u32string part;
      const auto flush = [&] {
        if (!part.empty()) {
          entries.push_back(utf8::encode(part));
          part.clear();
        }
      };
      for (char32_t c : decoded) {
        if (utf8::is_whitespace(c)) {
          flush();
        } else {
          part.push_back(c);
        }
      }
      flush();
    }
  }
  return Lexicon(entries, paths.size());
}

}  // namespace ctxspell
