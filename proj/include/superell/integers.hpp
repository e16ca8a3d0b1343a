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

#ifndef SUPERELL_INTEGERS_HPP
#define SUPERELL_INTEGERS_HPP

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace superell {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline std::string to_string(const BigInt& x) { return x.str(); }

inline BigInt big_pow(BigInt base, uint64_t e) {
    BigInt r = 1;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

inline uint64_t gcd_u64(uint64_t a, uint64_t b) {
    while (b) {
        uint64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline uint64_t lcm_u64(uint64_t a, uint64_t b) { return a / gcd_u64(a, b) * b; }

inline uint64_t pow_u64(uint64_t base, uint64_t e) {
    uint64_t r = 1;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

inline uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline uint64_t powmod_u64(uint64_t base, uint64_t e, uint64_t m) {
    uint64_t r = 1 % m;
    base %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, base, m);
        base = mulmod_u64(base, base, m);
        e >>= 1;
    }
    return r;
}

/// Deterministic Miller-Rabin, valid for all 64-bit inputs.
inline bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

/// Trial-division factorization, (prime, exponent) pairs in increasing prime order.
inline std::vector<std::pair<uint64_t, int>> factorize_u64(uint64_t n) {
    if (n == 0) throw std::invalid_argument("factorize_u64: n must be positive");
    std::vector<std::pair<uint64_t, int>> out;
    for (uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            out.emplace_back(p, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

inline std::vector<uint64_t> prime_divisors(uint64_t n) {
    std::vector<uint64_t> ps;
    for (auto& [p, e] : factorize_u64(n)) ps.push_back(p);
    return ps;
}

/// All positive divisors of n, increasing.
inline std::vector<uint64_t> divisors_of(uint64_t n) {
    auto f = factorize_u64(n);
    std::vector<uint64_t> ds{1};
    for (auto& [p, e] : f) {
        size_t sz = ds.size();
        uint64_t pk = 1;
        for (int i = 1; i <= e; ++i) {
            pk *= p;
            for (size_t j = 0; j < sz; ++j) ds.push_back(ds[j] * pk);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

inline uint64_t euler_phi(uint64_t m) {
    if (m == 0) throw std::invalid_argument("euler_phi: m must be positive");
    uint64_t r = m;
    for (auto& [p, e] : factorize_u64(m)) r -= r / p;
    return r;
}

/// Moebius function, in {-1, 0, 1}.
inline int mobius(uint64_t m) {
    if (m == 0) throw std::invalid_argument("mobius: m must be positive");
    int sign = 1;
    for (auto& [p, e] : factorize_u64(m)) {
        if (e > 1) return 0;
        sign = -sign;
    }
    return sign;
}

/// Number of distinct prime factors.
inline int omega(uint64_t m) { return static_cast<int>(factorize_u64(m).size()); }

/// Largest e with p^e | x (x != 0).
inline int valuation(BigInt x, const BigInt& p) {
    if (x == 0) throw std::invalid_argument("valuation of zero");
    int v = 0;
    while (x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

}  // namespace superell

#endif
