#include "oracles.hpp"

#include <algorithm>
#include <set>

#include "ctxspell/phonetics.hpp"
#include "ctxspell/utf8.hpp"

namespace oracle {

std::size_t osa_distance(const std::u32string& a, const std::u32string& b) {
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  std::vector<std::vector<std::size_t>> d(n + 1,
                                          std::vector<std::size_t>(m + 1));
  for (std::size_t i = 0; i <= n; ++i) d[i][0] = i;
  for (std::size_t j = 0; j <= m; ++j) d[0][j] = j;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      const std::size_t sub = a[i - 1] == b[j - 1] ? 0 : 1;
      d[i][j] = std::min({d[i - 1][j] + 1, d[i][j - 1] + 1,
                          d[i - 1][j - 1] + sub});
      if (i > 1 && j > 1 && a[i - 1] == b[j - 2] && a[i - 2] == b[j - 1]) {
        d[i][j] = std::min(d[i][j], d[i - 2][j - 2] + 1);
      }
    }
  }
  return d[n][m];
}

std::size_t osa_distance(const std::string& a_utf8,
                         const std::string& b_utf8) {
  return osa_distance(ctxspell::utf8::decode(a_utf8),
                      ctxspell::utf8::decode(b_utf8));
}

namespace {

std::u32string ascii_to_u32(const std::string& s) {
  return std::u32string(s.begin(), s.end());
}

std::size_t code_distance(const ctxspell::PhoneticCode& a,
                          const ctxspell::PhoneticCode& b) {
  const std::u32string ap = ascii_to_u32(a.primary);
  const std::u32string aa = ascii_to_u32(a.alternate);
  const std::u32string bp = ascii_to_u32(b.primary);
  const std::u32string ba = ascii_to_u32(b.alternate);
  return std::min({osa_distance(ap, bp), osa_distance(ap, ba),
                   osa_distance(aa, bp), osa_distance(aa, ba)});
}

}  // namespace

std::vector<std::string> candidate_forms(
    const std::string& misspelling, const std::vector<std::string>& forms) {
  const std::u32string mis = ctxspell::utf8::decode(misspelling);
  const ctxspell::PhoneticCode mis_code = ctxspell::double_metaphone(misspelling);
  std::set<std::string> out;
  for (const auto& form : forms) {
    if (osa_distance(mis, ctxspell::utf8::decode(form)) <= 2) {
      out.insert(form);
      continue;
    }
    if (code_distance(mis_code, ctxspell::double_metaphone(form)) <= 1) {
      out.insert(form);
    }
  }
  return {out.begin(), out.end()};
}

std::string random_word(std::mt19937_64& rng, std::size_t min_len,
                        std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len_dist(min_len, max_len);
  std::uniform_int_distribution<int> letter('a', 'z');
  std::string word(len_dist(rng), '\0');
  for (auto& ch : word) ch = static_cast<char>(letter(rng));
  return word;
}

std::string perturb(std::mt19937_64& rng, const std::string& word,
                    std::size_t ops) {
  std::uniform_int_distribution<int> letter('a', 'z');
  std::string w = word;
  for (std::size_t k = 0; k < ops; ++k) {
    std::uniform_int_distribution<std::size_t> pick(0, 3);
    switch (pick(rng)) {
      case 0: {  // insert
        std::uniform_int_distribution<std::size_t> pos(0, w.size());
        w.insert(w.begin() + static_cast<std::ptrdiff_t>(pos(rng)),
                 static_cast<char>(letter(rng)));
        break;
      }
      case 1: {  // delete
        if (w.size() < 2) break;
        std::uniform_int_distribution<std::size_t> pos(0, w.size() - 1);
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(pos(rng)));
        break;
      }
      case 2: {  // substitute
        if (w.empty()) break;
        std::uniform_int_distribution<std::size_t> pos(0, w.size() - 1);
        w[pos(rng)] = static_cast<char>(letter(rng));
        break;
      }
      default: {  // transpose
        if (w.size() < 2) break;
        std::uniform_int_distribution<std::size_t> pos(0, w.size() - 2);
        const std::size_t i = pos(rng);
        std::swap(w[i], w[i + 1]);
        break;
      }
    }
  }
  return w;
}

std::string test_data_path(const std::string& name) {
  return std::string(CTXSPELL_TEST_DATA_DIR) + "/" + name;
}

}  // namespace oracle
