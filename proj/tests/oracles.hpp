// Test-only oracles, kept independent of the library's production paths:
// resultants via Sylvester determinant with cofactor expansion, and small
// deterministic sample generators.
#pragma once

#include <ramify/mpoly.hpp>
#include <ramify/rng.hpp>
#include <ramify/upoly.hpp>

#include <functional>
#include <vector>

namespace oracles {

using ramify::Int;
using ramify::MPoly;
using ramify::UPoly;
using ramify::is_zero;
using ramify::zero_like;

template <class C>
C det_cofactor(const std::vector<std::vector<C>>& m) {
    std::size_t n = m.size();
    if (n == 1) return m[0][0];
    C acc = zero_like(m[0][0]);
    int sign = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (!is_zero(m[i][0])) {
            std::vector<std::vector<C>> sub;
            sub.reserve(n - 1);
            for (std::size_t r = 0; r < n; ++r) {
                if (r == i) continue;
                sub.emplace_back(m[r].begin() + 1, m[r].end());
            }
            C term = C(m[i][0] * det_cofactor(sub));
            acc = sign > 0 ? C(acc + term) : C(acc - term);
        }
        sign = -sign;
    }
    return acc;
}

/// det of the (m+n) x (m+n) Sylvester matrix of f, g.
template <class C>
C sylvester_resultant(const UPoly<C>& f, const UPoly<C>& g) {
    int m = f.degree(), n = g.degree();
    C z = zero_like(f.lc());
    std::size_t size = static_cast<std::size_t>(m + n);
    std::vector<std::vector<C>> mat(size, std::vector<C>(size, z));
    for (int row = 0; row < n; ++row)
        for (int j = 0; j <= m; ++j) mat[static_cast<std::size_t>(row)][static_cast<std::size_t>(row + j)] = f[static_cast<std::size_t>(m - j)];
    for (int row = 0; row < m; ++row)
        for (int j = 0; j <= n; ++j) mat[static_cast<std::size_t>(n + row)][static_cast<std::size_t>(row + j)] = g[static_cast<std::size_t>(n - j)];
    return det_cofactor(mat);
}

inline Int random_small_int(ramify::SplitMix64& rng, int height) {
    return Int(static_cast<long long>(rng.below(static_cast<std::uint64_t>(2 * height + 1))) - height);
}

inline MPoly random_mpoly(ramify::SplitMix64& rng, int n, int tdeg, int height) {
    MPoly p(n);
    // dense over all monomials of per-variable degree <= tdeg
    std::vector<ramify::ExpVec> exps;
    ramify::ExpVec cur(static_cast<std::size_t>(n), 0);
    std::function<void(int)> walk = [&](int i) {
        if (i == n) {
            exps.push_back(cur);
            return;
        }
        for (int e = 0; e <= tdeg; ++e) {
            cur[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(e);
            walk(i + 1);
        }
        cur[static_cast<std::size_t>(i)] = 0;
    };
    walk(0);
    for (auto& ev : exps) p.add_term(ev, random_small_int(rng, height));
    return p;
}

inline UPoly<Int> random_upoly_int(ramify::SplitMix64& rng, int maxdeg, int height) {
    std::vector<Int> c;
    std::uint64_t deg = rng.below(static_cast<std::uint64_t>(maxdeg + 1));
    for (std::uint64_t i = 0; i <= deg; ++i) c.push_back(random_small_int(rng, height));
    return UPoly<Int>(std::move(c));
}

inline UPoly<MPoly> random_upoly_mpoly(ramify::SplitMix64& rng, int n, int maxdeg, int tdeg, int height) {
    std::vector<MPoly> c;
    std::uint64_t deg = rng.below(static_cast<std::uint64_t>(maxdeg + 1));
    for (std::uint64_t i = 0; i <= deg; ++i) c.push_back(random_mpoly(rng, n, tdeg, height));
    return UPoly<MPoly>(std::move(c));
}

}  // namespace oracles
