#include "ctxspell/edit_distance.hpp"
#include "ctxspell/utf8.hpp"

#include <algorithm>
#include <limits>
#include <vector>

namespace ctxspell {

namespace {

constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max() / 2;

} // namespace

std::size_t dl_distance(std::u32string_view a, std::u32string_view b) {
    const std::size_t n = a.size();
    const std::size_t m = b.size();
    if (n == 0)
        return m;
    if (m == 0)
        return n;

    // Three rolling rows; prev2 backs the transposition case.
    std::vector<std::size_t> prev2(m + 1), prev(m + 1), cur(m + 1);
    for (std::size_t j = 0; j <= m; ++j)
        prev[j] = j;

    for (std::size_t i = 1; i <= n; ++i) {
        cur[0] = i;
        for (std::size_t j = 1; j <= m; ++j) {
            const bool same = a[i - 1] == b[j - 1];
            std::size_t best = std::min({prev[j] + 1,             // delete
                                         cur[j - 1] + 1,          // insert
                                         prev[j - 1] + (same ? 0 : 1)});
            if (i > 1 && j > 1 && a[i - 1] == b[j - 2] && a[i - 2] == b[j - 1])
                best = std::min(best, prev2[j - 2] + 1); // transpose
            cur[j] = best;
        }
        std::swap(prev2, prev);
        std::swap(prev, cur);
    }
    return prev[m];
}

std::size_t dl_distance(std::string_view a, std::string_view b) {
    return dl_distance(utf8::decode_lenient(a), utf8::decode_lenient(b));
}

std::optional<std::size_t> dl_within(std::u32string_view a, std::u32string_view b,
                                     std::size_t cap) {
    const std::size_t n = a.size();
    const std::size_t m = b.size();
    const std::size_t diff = n > m ? n - m : m - n;
    if (diff > cap)
        return std::nullopt;
    if (n == 0 || m == 0)
        return diff <= cap ? std::optional<std::size_t>(std::max(n, m)) : std::nullopt;

    // Every unit operation shifts the i-j diagonal by at most one, so any
    // alignment of cost <= cap stays inside the band |i - j| <= cap.
    std::vector<std::size_t> prev2(m + 2, kInf), prev(m + 2, kInf), cur(m + 2, kInf);
    for (std::size_t j = 0; j <= std::min(m, cap); ++j)
        prev[j] = j;

    std::size_t prev_row_min = 0;
    for (std::size_t i = 1; i <= n; ++i) {
        const std::size_t lo = i > cap ? i - cap : 1;
        const std::size_t hi = std::min(m, i + cap);
        std::fill(cur.begin(), cur.end(), kInf);
        if (i <= cap)
            cur[0] = i;
        std::size_t row_min = cur[0];
        for (std::size_t j = lo; j <= hi; ++j) {
            const bool same = a[i - 1] == b[j - 1];
            std::size_t best = std::min({prev[j] + 1,
                                         cur[j - 1] + 1,
                                         prev[j - 1] + (same ? 0 : 1)});
            if (i > 1 && j > 1 && a[i - 1] == b[j - 2] && a[i - 2] == b[j - 1])
                best = std::min(best, prev2[j - 2] + 1);
            cur[j] = best;
            row_min = std::min(row_min, best);
        }
        // A transposition step skips one row, so an alignment can bridge a
        // single over-cap row but never two in a row.
        if (row_min > cap && prev_row_min > cap)
            return std::nullopt;
        prev_row_min = row_min;
        std::swap(prev2, prev);
        std::swap(prev, cur);
    }
    const std::size_t result = prev[m];
    if (result > cap)
        return std::nullopt;
    return result;
}

std::optional<std::size_t> dl_within(std::string_view a, std::string_view b,
                                     std::size_t cap) {
    return dl_within(utf8::decode_lenient(a), utf8::decode_lenient(b), cap);
}

} // namespace ctxspell
