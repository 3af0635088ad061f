#include "ctxspell/candidate_gen.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ctxspell/edit_distance.hpp"
#include "ctxspell/errors.hpp"
#include "ctxspell/phonetics.hpp"
#include "ctxspell/utf8.hpp"

namespace ctxspell {

PhoneticIndex::PhoneticIndex(
    std::vector<std::pair<std::string, std::vector<std::string>>> entries)
    : entries_(std::move(entries)) {}

const std::vector<std::string>* PhoneticIndex::forms_for(
    const std::string& code) const {
  const auto it = std::lower_bound(
      entries_.begin(), entries_.end(), code,
      [](const auto& entry, const std::string& c) { return entry.first < c; });
  if (it == entries_.end() || it->first != code) return nullptr;
  return &it->second;
}

PhoneticIndex build_phonetic_index(const Lexicon& lexicon) {
  std::map<std::string, std::set<std::string>> grouped;
  for (const auto& form : lexicon.forms()) {
    const PhoneticCode code = double_metaphone(form);
    grouped[code.primary].insert(form);
    if (code.alternate != code.primary) grouped[code.alternate].insert(form);
  }
  std::vector<std::pair<std::string, std::vector<std::string>>> entries;
  entries.reserve(grouped.size());
  for (auto& [code, forms] : grouped) {
    entries.emplace_back(code,
                         std::vector<std::string>(forms.begin(), forms.end()));
  }
  return PhoneticIndex(std::move(entries));
}

namespace {

std::size_t min_code_distance(const PhoneticCode& a, const PhoneticCode& b) {
  std::size_t best = dl_distance(a.primary, b.primary);
  best = std::min(best, dl_distance(a.primary, b.alternate));
  best = std::min(best, dl_distance(a.alternate, b.primary));
  return std::min(best, dl_distance(a.alternate, b.alternate));
}

}  // namespace

std::vector<Candidate> generate_candidates(const std::string& misspelling,
                                           const Lexicon& lexicon,
                                           const PhoneticIndex& index,
                                           const FrequencyTable& freqs,
                                           const EmbeddingStore& store) {
  if (lexicon.contains(misspelling)) {
    throw ContractError("\"" + misspelling +
                        "\" is in the lexicon; only non-words have "
                        "replacement candidates");
  }

  const std::u32string mis = utf8::decode(misspelling);
  std::set<std::string> forms;

  // Phase one: edit-distance sweep. Distance <= 2 bounds the length
  // difference, so only nearby buckets need scanning.
  const std::size_t mlen = mis.size();
  const std::size_t lo = mlen > 2 ? mlen - 2 : 1;
  const std::size_t hi = std::min(mlen + 2, lexicon.max_form_length());
  for (std::size_t len = lo; len <= hi; ++len) {
    for (const auto& form : lexicon.forms_of_length(len)) {
      if (dl_within(mis, utf8::decode(form), 2)) forms.insert(form);
    }
  }

  // Phase two: phonetic matching widens recall past the edit budget.
  const PhoneticCode mcode = double_metaphone(misspelling);
  const std::u32string mpri = utf8::decode(mcode.primary);
  const std::u32string malt = utf8::decode(mcode.alternate);
  for (const auto& [code, members] : index.entries()) {
    const std::u32string c = utf8::decode(code);
    if (dl_within(mpri, c, 1) || dl_within(malt, c, 1)) {
      forms.insert(members.begin(), members.end());
    }
  }

  std::vector<Candidate> out;
  out.reserve(forms.size());
  for (const auto& form : forms) {
    Candidate c;
    c.form = form;
    c.dl = dl_distance(mis, utf8::decode(form));
    c.dm_dl = min_code_distance(mcode, double_metaphone(form));
    c.in_embedding_vocab = store.has_word(form);
    c.frequency = freqs.count_of(form);
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace ctxspell
