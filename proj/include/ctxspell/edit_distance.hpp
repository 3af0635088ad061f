#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace ctxspell {

// Restricted Damerau-Levenshtein (optimal string alignment) distance over
// Unicode code points: unit-cost insertions, deletions, substitutions and
// adjacent transpositions, where a transposed pair is never edited again.
// Not a metric (the triangle inequality can fail), so nothing here may be
// fed into a metric-tree index.
std::size_t dl_distance(std::u32string_view a, std::u32string_view b);
std::size_t dl_distance(std::string_view a, std::string_view b);

// Banded variant: returns the distance when it is <= cap, nullopt when it
// provably exceeds cap. Whenever a value comes back it equals dl_distance.
std::optional<std::size_t> dl_within(std::u32string_view a, std::u32string_view b,
                                     std::size_t cap);
std::optional<std::size_t> dl_within(std::string_view a, std::string_view b,
                                     std::size_t cap);

} // namespace ctxspell
