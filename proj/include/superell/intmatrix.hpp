/*
   Copyright 2026 the superell authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef SUPERELL_INTMATRIX_HPP
#define SUPERELL_INTMATRIX_HPP

#include <stdexcept>
#include <vector>

#include "integers.hpp"
#include "intpoly.hpp"

namespace superell {

using BigMat = std::vector<std::vector<BigInt>>;

/// Diagonal of the Smith normal form of an integer matrix (entries >= 0,
/// divisibility chain d_i | d_{i+1}; zeros trail for rank-deficient input).
inline std::vector<BigInt> smith_diagonal(BigMat a) {
    const size_t m = a.size();
    const size_t n = m ? a[0].size() : 0;
    const size_t r = std::min(m, n);
    auto abs_ = [](const BigInt& x) { return x < 0 ? BigInt(-x) : x; };

    for (size_t t = 0; t < r; ++t) {
        // find a nonzero entry of minimal absolute value in the submatrix
        size_t pi = t, pj = t;
        bool found = false;
        BigInt best = 0;
        for (size_t i = t; i < m; ++i)
            for (size_t j = t; j < n; ++j)
                if (a[i][j] != 0 && (!found || abs_(a[i][j]) < best)) {
                    best = abs_(a[i][j]);
                    pi = i;
                    pj = j;
                    found = true;
                }
        if (!found) break;
        std::swap(a[t], a[pi]);
        for (size_t i = 0; i < m; ++i) std::swap(a[i][t], a[i][pj]);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (size_t i = t + 1; i < m; ++i) {
                while (a[i][t] != 0) {
                    BigInt q = a[i][t] / a[t][t];
                    for (size_t j = t; j < n; ++j) a[i][j] -= q * a[t][j];
                    if (a[i][t] != 0) {
                        std::swap(a[i], a[t]);
                        clean = false;
                    }
                }
            }
            for (size_t j = t + 1; j < n; ++j) {
                while (a[t][j] != 0) {
                    BigInt q = a[t][j] / a[t][t];
                    for (size_t i = t; i < m; ++i) a[i][j] -= q * a[i][t];
                    if (a[t][j] != 0) {
                        for (size_t i = t; i < m; ++i) std::swap(a[i][j], a[i][t]);
                        clean = false;
                    }
                }
            }
            if (clean) {
                // pivot must divide every remaining entry; if not, fold the
                // offending row in and redo the elimination
                for (size_t i = t + 1; i < m && clean; ++i)
                    for (size_t j = t + 1; j < n && clean; ++j)
                        if (a[i][j] % a[t][t] != 0) {
                            for (size_t k = t; k < n; ++k) a[t][k] += a[i][k];
                            clean = false;
                        }
            }
        }
    }

    std::vector<BigInt> d(r, 0);
    for (size_t t = 0; t < r; ++t) d[t] = abs_(a[t][t]);
    // enforce the divisibility chain among nonzero entries
    for (size_t i = 0; i < r; ++i)
        for (size_t j = i + 1; j < r; ++j) {
            if (d[i] == 0 || d[j] == 0) continue;
            if (d[j] % d[i] != 0) {
                BigInt g = boost::multiprecision::gcd(d[i], d[j]);
                d[j] = d[i] / g * d[j];
                d[i] = g;
            }
        }
    // move zeros (rank deficiency) to the end
    std::stable_partition(d.begin(), d.end(), [](const BigInt& x) { return x != 0; });
    return d;
}

/// Invariant factors d_1 | ... | d_r (the nontrivial ones, i.e. > 1) of the
/// finite abelian group Z[T]/(F, G), presented by multiplication-by-G acting
/// on the rank-deg(F) lattice Z[T]/(F).
struct InvariantFactorization {
    std::vector<BigInt> factors;
    BigInt group_order = 1;
};

inline InvariantFactorization invariant_factors(const IntPoly& F, const IntPoly& G) {
    if (!F.is_monic() || !G.is_monic()) throw std::invalid_argument("invariant_factors: F, G must be monic");
    const size_t d = static_cast<size_t>(F.degree());
    if (d == 0) return {};
    BigMat mat(d, std::vector<BigInt>(d, 0));
    IntPoly gi = divmod_monic(G, F).second;  // G mod F
    for (size_t i = 0; i < d; ++i) {
        for (size_t k = 0; k < d; ++k) mat[k][i] = gi[k];
        // multiply by T, reduce mod F
        std::vector<BigInt> next(d + 1, 0);
        for (size_t k = 0; k < d; ++k) next[k + 1] = gi[k];
        IntPoly np(std::move(next));
        gi = divmod_monic(np, F).second;
    }
    auto diag = smith_diagonal(std::move(mat));
    InvariantFactorization out;
    for (auto& x : diag) {
        if (x == 0) throw std::invalid_argument("invariant_factors: F and G are not coprime");
        out.group_order *= x;
        if (x > 1) out.factors.push_back(x);
    }
    return out;
}

}  // namespace superell

#endif
