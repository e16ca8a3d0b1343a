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

#ifndef SUPERELL_INTPOLY_HPP
#define SUPERELL_INTPOLY_HPP

#include <initializer_list>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "integers.hpp"

namespace superell {

/// Dense univariate polynomial over Z. coeffs[i] is the coefficient of T^i;
/// normalized representation (no stored leading zeros, zero = empty vector).
class IntPoly {
   public:
    IntPoly() = default;
    IntPoly(std::initializer_list<BigInt> c) : coeffs_(c) { normalize(); }
    explicit IntPoly(std::vector<BigInt> c) : coeffs_(std::move(c)) { normalize(); }

    static IntPoly zero() { return IntPoly(); }
    static IntPoly constant(BigInt c) {
        IntPoly p;
        if (c != 0) p.coeffs_.push_back(std::move(c));
        return p;
    }
    static IntPoly monomial(size_t deg, BigInt c = 1) {
        IntPoly p;
        if (c != 0) {
            p.coeffs_.assign(deg + 1, 0);
            p.coeffs_[deg] = std::move(c);
        }
        return p;
    }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const BigInt& lc() const {
        if (is_zero()) throw std::logic_error("lc of zero polynomial");
        return coeffs_.back();
    }
    bool is_monic() const { return !is_zero() && coeffs_.back() == 1; }
    const BigInt& operator[](size_t i) const {
        static const BigInt kZero = 0;
        return i < coeffs_.size() ? coeffs_[i] : kZero;
    }
    const std::vector<BigInt>& coeffs() const { return coeffs_; }

    void set_coeff(size_t i, BigInt c) {
        if (i >= coeffs_.size()) {
            if (c == 0) return;
            coeffs_.resize(i + 1, 0);
        }
        coeffs_[i] = std::move(c);
        normalize();
    }

    BigInt operator()(const BigInt& x) const {
        BigInt v = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) v = v * x + *it;
        return v;
    }

    IntPoly derivative() const {
        if (coeffs_.size() <= 1) return IntPoly();
        std::vector<BigInt> d(coeffs_.size() - 1);
        for (size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * i;
        return IntPoly(std::move(d));
    }

    IntPoly operator-() const {
        IntPoly r(*this);
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    IntPoly& operator+=(const IntPoly& o) {
        if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
        for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        normalize();
        return *this;
    }
    IntPoly& operator-=(const IntPoly& o) {
        if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
        for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        normalize();
        return *this;
    }
    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }

    friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
        if (a.is_zero() || b.is_zero()) return IntPoly();
        std::vector<BigInt> r(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
        for (size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return IntPoly(std::move(r));
    }
    IntPoly& operator*=(const IntPoly& o) { return *this = *this * o; }
    friend IntPoly operator*(const IntPoly& a, const BigInt& s) {
        IntPoly r(a);
        for (auto& c : r.coeffs_) c *= s;
        r.normalize();
        return r;
    }

    IntPoly pow(uint64_t e) const {
        IntPoly r = IntPoly::constant(1), b = *this;
        while (e) {
            if (e & 1) r *= b;
            if (e >>= 1) b *= b;
        }
        return r;
    }

    bool operator==(const IntPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const IntPoly& o) const { return coeffs_ != o.coeffs_; }

    /// In-place multiplication by T^d - 1 (linear time).
    void mul_binomial(size_t d) {
        if (is_zero()) return;
        std::vector<BigInt> r(coeffs_.size() + d, 0);
        for (size_t i = 0; i < coeffs_.size(); ++i) {
            r[i + d] += coeffs_[i];
            r[i] -= coeffs_[i];
        }
        coeffs_ = std::move(r);
        normalize();
    }

    /// In-place exact division by T^d - 1 (linear time; throws if inexact).
    void div_binomial(size_t d) {
        if (is_zero()) return;
        if (coeffs_.size() <= d) throw std::invalid_argument("div_binomial: not divisible");
        std::vector<BigInt> q(coeffs_.size() - d, 0);
        for (size_t i = 0; i < q.size(); ++i) {
            BigInt qi = -coeffs_[i];
            if (i >= d) qi += q[i - d];
            q[i] = std::move(qi);
        }
        for (size_t i = q.size(); i < coeffs_.size(); ++i) {
            const BigInt expect = (i >= d) ? q[i - d] : BigInt(0);
            if (coeffs_[i] != expect) throw std::invalid_argument("div_binomial: not divisible");
        }
        coeffs_ = std::move(q);
        normalize();
    }

    std::string str(const std::string& var = "T") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (size_t k = coeffs_.size(); k-- > 0;) {
            const BigInt& c = coeffs_[k];
            if (c == 0) continue;
            BigInt a = c;
            if (first) {
                if (a < 0) {
                    os << "-";
                    a = -a;
                }
                first = false;
            } else {
                os << (a < 0 ? " - " : " + ");
                if (a < 0) a = -a;
            }
            if (k == 0 || a != 1) os << a.str();
            if (k > 0) {
                os << var;
                if (k > 1) os << "^" << k;
            }
        }
        return os.str();
    }
    friend std::ostream& operator<<(std::ostream& os, const IntPoly& p) { return os << p.str(); }

   private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
    std::vector<BigInt> coeffs_;
};

/// Quotient and remainder by a monic divisor (stays over Z).
inline std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& a, const IntPoly& b) {
    if (!b.is_monic()) throw std::invalid_argument("divmod_monic: divisor not monic");
    if (a.degree() < b.degree()) return {IntPoly(), a};
    std::vector<BigInt> r = a.coeffs();
    size_t db = static_cast<size_t>(b.degree());
    std::vector<BigInt> q(r.size() - db, 0);
    for (size_t i = r.size(); i-- > db;) {
        if (r[i] == 0) continue;
        BigInt c = r[i];
        q[i - db] = c;
        for (size_t j = 0; j <= db; ++j) r[i - db + j] -= c * b[j];
    }
    return {IntPoly(std::move(q)), IntPoly(std::move(r))};
}

inline IntPoly exact_div(const IntPoly& a, const BigInt& d) {
    if (d == 0) throw std::invalid_argument("exact_div by zero");
    std::vector<BigInt> c(a.coeffs());
    for (auto& x : c) {
        if (x % d != 0) throw std::logic_error("exact_div: not divisible");
        x /= d;
    }
    return IntPoly(std::move(c));
}

inline BigInt content(const IntPoly& a) {
    BigInt g = 0;
    for (auto& c : a.coeffs()) g = boost::multiprecision::gcd(g, c);
    return g == 0 ? BigInt(1) : g;
}

/// Pseudo-remainder: lc(B)^{deg A - deg B + 1} A = Q B + prem(A, B).
inline IntPoly prem(const IntPoly& A, const IntPoly& B) {
    int dB = B.degree();
    const BigInt lb = B.lc();
    IntPoly R = A;
    int e = A.degree() - dB + 1;
    while (!R.is_zero() && R.degree() >= dB) {
        IntPoly S = IntPoly::monomial(static_cast<size_t>(R.degree() - dB), R.lc());
        R = R * lb - S * B;
        --e;
    }
    for (; e > 0; --e) R = R * lb;
    return R;
}

/// Resultant over Z by the fraction-free subresultant PRS.
/// Conventions: Res(F, G) = prod of (x - y) over roots for monic F, G;
/// Res(F, 0) = 0 for deg F >= 1; Res(F, c) = c^{deg F}.
inline BigInt resultant(const IntPoly& F, const IntPoly& G) {
    if (F.is_zero()) throw std::invalid_argument("resultant: F is the zero polynomial");
    if (G.is_zero()) return F.degree() == 0 ? BigInt(1) : BigInt(0);
    if (F.degree() == 0) return big_pow(F.lc(), static_cast<uint64_t>(G.degree()));
    if (G.degree() == 0) return big_pow(G.lc(), static_cast<uint64_t>(F.degree()));

    IntPoly A = F, B = G;
    BigInt s = 1;
    if (A.degree() < B.degree()) {
        if ((A.degree() & 1) && (B.degree() & 1)) s = -s;
        std::swap(A, B);
    }
    BigInt ca = content(A), cb = content(B);
    A = exact_div(A, ca);
    B = exact_div(B, cb);
    BigInt t = big_pow(ca, static_cast<uint64_t>(B.degree())) * big_pow(cb, static_cast<uint64_t>(A.degree()));
    BigInt g = 1, h = 1;
    while (true) {
        int dA = A.degree(), dB = B.degree();
        int delta = dA - dB;
        if ((dA & 1) && (dB & 1)) s = -s;
        IntPoly R = prem(A, B);
        A = B;
        if (R.is_zero()) return 0;  // nonconstant gcd
        B = exact_div(R, g * big_pow(h, static_cast<uint64_t>(delta)));
        g = A.lc();
        if (delta > 0) h = big_pow(g, static_cast<uint64_t>(delta)) / big_pow(h, static_cast<uint64_t>(delta - 1));
        if (B.degree() == 0) break;
    }
    uint64_t dA = static_cast<uint64_t>(A.degree());
    BigInt res = big_pow(B.lc(), dA);
    if (dA >= 1) res /= big_pow(h, dA - 1);
    return s * t * res;
}

/// Disc(F) = (-1)^{d(d-1)/2} Res(F, F') / lc(F), for monic F of degree >= 1.
inline BigInt discriminant(const IntPoly& F) {
    if (F.degree() < 1) throw std::invalid_argument("discriminant: deg F >= 1 required");
    if (!F.is_monic()) throw std::invalid_argument("discriminant: F must be monic");
    uint64_t d = static_cast<uint64_t>(F.degree());
    BigInt r = (d == 1) ? BigInt(1) : resultant(F, F.derivative());
    return ((d * (d - 1) / 2) % 2 == 0) ? r : -r;
}

/// D-th cyclotomic polynomial via the Moebius product of T^d - 1 binomials.
inline IntPoly cyclotomic(uint64_t D) {
    if (D == 0) throw std::invalid_argument("cyclotomic: D must be positive");
    IntPoly r = IntPoly::constant(1);
    std::vector<uint64_t> denoms;
    for (uint64_t d : divisors_of(D)) {
        int mu = mobius(D / d);
        if (mu == 1) r.mul_binomial(d);
        else if (mu == -1) denoms.push_back(d);
    }
    for (uint64_t d : denoms) r.div_binomial(d);
    return r;
}

/// P_N(T) = (T^N - 1)/(T - 1) = 1 + T + ... + T^{N-1}. Computed both as the
/// sum and as the product of cyclotomic(D) over D | N, D > 1; they must agree.
inline IntPoly pn_poly(uint64_t N) {
    if (N < 2) throw std::invalid_argument("pn_poly: N >= 2 required");
    IntPoly sum(std::vector<BigInt>(N, 1));
    IntPoly prod = IntPoly::constant(1);
    for (uint64_t d : divisors_of(N))
        if (d > 1) prod *= cyclotomic(d);
    if (sum != prod) throw std::logic_error("pn_poly: sum and product forms disagree");
    return sum;
}

/// Q_{N,D}(T) = (T^N - 1)/(T^D - 1) for D | N, 1 <= D < N.
inline IntPoly qnd_poly(uint64_t N, uint64_t D) {
    if (N < 2 || D == 0 || D >= N || N % D != 0)
        throw std::invalid_argument("qnd_poly: need D | N and 1 <= D < N");
    std::vector<BigInt> c(N - D + 1, 0);
    for (uint64_t i = 0; i + D <= N; i += D) c[i] = 1;
    IntPoly sum(std::move(c));
    IntPoly prod = IntPoly::constant(1);
    for (uint64_t d : divisors_of(N))
        if (D % d != 0) prod *= cyclotomic(d);
    if (sum != prod) throw std::logic_error("qnd_poly: sum and product forms disagree");
    return sum;
}

/// a F + b G = Res(F, G) with deg a < deg G, deg b < deg F (unique).
/// Non-coprime inputs are signaled by res = 0 (a, b empty).
struct BezoutIdentity {
    IntPoly a, b;
    BigInt res;
};

namespace detail {

using RatPoly = std::vector<BigRat>;

inline void rp_trim(RatPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}
inline int rp_deg(const RatPoly& p) { return static_cast<int>(p.size()) - 1; }

inline RatPoly rp_from(const IntPoly& p) {
    RatPoly r(p.coeffs().size());
    for (size_t i = 0; i < r.size(); ++i) r[i] = BigRat(p[i]);
    return r;
}

inline RatPoly rp_mul(const RatPoly& a, const RatPoly& b) {
    if (a.empty() || b.empty()) return {};
    RatPoly r(a.size() + b.size() - 1, BigRat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    rp_trim(r);
    return r;
}

inline RatPoly rp_sub(RatPoly a, const RatPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), BigRat(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    rp_trim(a);
    return a;
}

/// quotient of a by b (b nonzero)
inline RatPoly rp_div(RatPoly a, const RatPoly& b) {
    RatPoly q;
    int db = rp_deg(b);
    if (rp_deg(a) >= db) q.assign(a.size() - b.size() + 1, BigRat(0));
    while (rp_deg(a) >= db && !a.empty()) {
        BigRat c = a.back() / b.back();
        size_t k = a.size() - b.size();
        q[k] = c;
        for (size_t j = 0; j < b.size(); ++j) a[k + j] -= c * b[j];
        rp_trim(a);
    }
    return q;
}

}  // namespace detail

inline BezoutIdentity bezout(const IntPoly& F, const IntPoly& G) {
    if (!F.is_monic() || !G.is_monic()) throw std::invalid_argument("bezout: F and G must be monic");
    BigInt res = resultant(F, G);
    if (res == 0) return {IntPoly(), IntPoly(), 0};

    using namespace detail;
    RatPoly r0 = rp_from(F), r1 = rp_from(G);
    RatPoly s0 = {BigRat(1)}, s1 = {};
    while (!r1.empty()) {
        RatPoly q = rp_div(r0, r1);
        RatPoly r2 = rp_sub(r0, rp_mul(q, r1));
        RatPoly s2 = rp_sub(s0, rp_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 is a nonzero constant: (s0/r0) F + (t0/r0) G = 1
    BigRat scale = BigRat(res) / r0[0];
    RatPoly u = s0;
    for (auto& c : u) c *= scale;
    // normalize deg u < deg G
    if (rp_deg(u) >= G.degree()) {
        RatPoly q = rp_div(u, rp_from(G));
        u = rp_sub(u, rp_mul(q, rp_from(G)));
    }
    std::vector<BigInt> ac(u.size());
    for (size_t i = 0; i < u.size(); ++i) {
        if (boost::multiprecision::denominator(u[i]) != 1)
            throw std::logic_error("bezout: non-integral cofactor");
        ac[i] = boost::multiprecision::numerator(u[i]);
    }
    IntPoly a(std::move(ac));
    // b = (res - a F) / G, exact over Z since G is monic
    auto [b, rem] = divmod_monic(IntPoly::constant(res) - a * F, G);
    if (!rem.is_zero()) throw std::logic_error("bezout: identity failed");
    return {std::move(a), std::move(b), std::move(res)};
}

}  // namespace superell

#endif
