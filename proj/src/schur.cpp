#include "schur.hpp"

#include <algorithm>

namespace fva {

Int weyl_dim(const RootSystemA& rs, const Weight& mu) {
    if (mu.rank() != rs.rank()) throw std::invalid_argument("weyl_dim: rank mismatch");
    if (!mu.is_dominant()) throw std::invalid_argument("weyl_dim: weight not dominant");
    Int num = 1;
    Int den = 1;
    for (int i = 1; i < rs.n; ++i) {
        Int run = 0;  // a_i + ... + a_{j-1}
        for (int j = i + 1; j <= rs.n; ++j) {
            run += mu.coeffs[static_cast<size_t>(j - 2)];
            num *= run + Int(j - i);
            den *= Int(j - i);
        }
    }
    return num / den;
}

Int euler_char(const RootSystemA& rs, const Weight& mu) {
    if (mu.rank() != rs.rank()) throw std::invalid_argument("euler_char: rank mismatch");
    std::vector<Int> b = to_l_coordinates(mu + rho(rs));
    // Singular wall: repeated entry kills the character.
    for (size_t x = 0; x < b.size(); ++x)
        for (size_t y = x + 1; y < b.size(); ++y)
            if (b[x] == b[y]) return 0;
    // Sort strictly descending, tracking the permutation parity by inversion
    // count; no Weyl group element is materialized.
    long inversions = 0;
    for (size_t x = 0; x < b.size(); ++x)
        for (size_t y = x + 1; y < b.size(); ++y)
            if (b[x] < b[y]) ++inversions;
    std::sort(b.begin(), b.end(), [](const Int& u, const Int& v) { return u > v; });
    Weight nu = weight_from_l_coordinates(b) - rho(rs);
    const Int d = weyl_dim(rs, nu);
    return (inversions % 2 == 0) ? d : -d;
}

namespace {

// Sum over all rows interlacing `upper`, recursing down to a single entry.
Int gt_count_below(const std::vector<long>& upper) {
    if (upper.size() == 1) return 1;
    Int total = 0;
    // Enumerate rows with upper[k] >= row[k] >= upper[k+1], depth-first.
    std::vector<long> cur(upper.size() - 1);
    auto rec = [&](auto&& self, size_t k) -> void {
        if (k == cur.size()) {
            total += gt_count_below(cur);
            return;
        }
        for (long v = upper[k + 1]; v <= upper[k]; ++v) {
            cur[k] = v;
            self(self, k + 1);
        }
    };
    rec(rec, 0);
    return total;
}

}  // namespace

Int gt_pattern_count(const RootSystemA& rs, const Weight& mu) {
    if (mu.rank() != rs.rank()) throw std::invalid_argument("gt_pattern_count: rank mismatch");
    if (!mu.is_dominant()) throw std::invalid_argument("gt_pattern_count: weight not dominant");
    std::vector<Int> b = to_l_coordinates(mu);
    std::vector<long> top(b.size());
    for (size_t k = 0; k < b.size(); ++k) {
        if (b[k] > Int(1000000)) throw std::invalid_argument("gt_pattern_count: entry too large");
        top[k] = static_cast<long>(b[k]);
    }
    return gt_count_below(top);
}

}  // namespace fva
