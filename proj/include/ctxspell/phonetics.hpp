#pragma once

#include <string>
#include <string_view>

namespace ctxspell {

// Primary and alternate Double Metaphone codes. Codes are uppercase ASCII
// plus '0' for the th sound; they may be equal.
struct PhoneticCode {
  std::string primary;
  std::string alternate;

  bool operator==(const PhoneticCode&) const = default;
};

// Double Metaphone (Philips 2000), untruncated: codes keep their full length
// so long words stay distinguishable. Case-insensitive; diacritics fold to
// their base letters before encoding (ç and ñ keep their dedicated rules).
// Empty input yields empty codes.
PhoneticCode double_metaphone(std::string_view word);

}  // namespace ctxspell
