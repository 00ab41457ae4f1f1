#ifndef SPECDATA_NUMUTIL_HPP
#define SPECDATA_NUMUTIL_HPP

#include <cstdint>
#include <vector>

namespace specdata {

/// Exact binomial coefficient; arguments small enough that int64 never
/// overflows at the sizes this library targets.
inline std::int64_t binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

/// multinomial(|e|; e) = |e|! / (e_1! ... e_d!).
inline std::int64_t multinomial(const std::vector<int>& e) {
    std::int64_t total = 0;
    std::int64_t r = 1;
    for (int part : e) {
        total += part;
        r *= binomial(total, part);
    }
    return r;
}

/// All e in N^d with |e| = degree, in lexicographic order.
inline std::vector<std::vector<int>> exponent_vectors(int dim, int degree) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<std::size_t>(dim), 0);
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == dim - 1) {
            cur[static_cast<std::size_t>(pos)] = remaining;
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            cur[static_cast<std::size_t>(pos)] = v;
            self(self, pos + 1, remaining - v);
        }
    };
    if (dim >= 1) rec(rec, 0, degree);
    return out;
}

}  // namespace specdata

#endif
