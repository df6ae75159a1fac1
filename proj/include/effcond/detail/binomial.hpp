#ifndef EFFCOND_DETAIL_BINOMIAL_HPP
#define EFFCOND_DETAIL_BINOMIAL_HPP

#include <vector>

namespace effcond::detail {

/// Exact binomial C(n, k) built by Pascal's triangle in 128-bit
/// arithmetic, converted to double once at lookup.
inline double binomial(int n, int k) {
    static thread_local std::vector<std::vector<unsigned __int128>> rows{{1}};
    while (static_cast<int>(rows.size()) <= n) {
        const auto& prev = rows.back();
        std::vector<unsigned __int128> next(prev.size() + 1, 1);
        for (std::size_t i = 1; i < prev.size(); ++i) next[i] = prev[i - 1] + prev[i];
        rows.push_back(std::move(next));
    }
    return static_cast<double>(rows[n][k]);
}

} // namespace effcond::detail

#endif
