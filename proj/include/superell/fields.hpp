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

#ifndef SUPERELL_FIELDS_HPP
#define SUPERELL_FIELDS_HPP

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "integers.hpp"

namespace superell {

/// F_p for a machine-word prime p < 2^31 (so products fit in uint64_t).
/// Field contexts own the arithmetic; elements are plain values.
struct PrimeField {
    using Elem = uint64_t;
    uint64_t p;

    explicit PrimeField(uint64_t p_) : p(p_) {
        if (p_ < 2 || p_ >= (1ull << 31) || !is_prime_u64(p_))
            throw std::invalid_argument("PrimeField: modulus must be a prime < 2^31");
    }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    bool is_zero(const Elem& a) const { return a == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    Elem add(Elem a, Elem b) const {
        uint64_t s = a + b;
        return s >= p ? s - p : s;
    }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p - b; }
    Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
    Elem mul(Elem a, Elem b) const { return (a * b) % p; }
    Elem pow(Elem a, uint64_t e) const {
        Elem r = 1, b = a;
        while (e) {
            if (e & 1) r = mul(r, b);
            b = mul(b, b);
            e >>= 1;
        }
        return r;
    }
    Elem inv(Elem a) const {
        if (a == 0) throw std::domain_error("PrimeField: inverse of zero");
        return pow(a, p - 2);
    }
    Elem from_int(int64_t v) const {
        int64_t m = v % static_cast<int64_t>(p);
        if (m < 0) m += static_cast<int64_t>(p);
        return static_cast<Elem>(m);
    }
    Elem from_big(const BigInt& v) const {
        BigInt m = v % p;
        if (m < 0) m += p;
        return static_cast<Elem>(m);
    }
    uint64_t characteristic() const { return p; }
    BigInt cardinality() const { return p; }
    BigInt index_of(const Elem& a) const { return a; }
    Elem from_index(const BigInt& i) const { return static_cast<Elem>(i); }
    std::string to_str(const Elem& a) const { return std::to_string(a); }
};

/// Dense polynomial helpers over an arbitrary field context F. Polynomials
/// are coefficient vectors (index = degree), trimmed.
namespace pv {

template <class F>
using Vec = std::vector<typename F::Elem>;

template <class F>
void trim(const F& f, Vec<F>& a) {
    while (!a.empty() && f.is_zero(a.back())) a.pop_back();
}

template <class F>
int deg(const Vec<F>& a) {
    return static_cast<int>(a.size()) - 1;
}

template <class F>
bool is_zero(const Vec<F>& a) {
    return a.empty();
}

template <class F>
Vec<F> constant(const F& f, typename F::Elem c) {
    Vec<F> r;
    if (!f.is_zero(c)) r.push_back(c);
    return r;
}

template <class F>
Vec<F> x_power(const F& f, size_t k) {
    Vec<F> r(k + 1, f.zero());
    r[k] = f.one();
    return r;
}

template <class F>
Vec<F> add(const F& f, Vec<F> a, const Vec<F>& b) {
    if (a.size() < b.size()) a.resize(b.size(), f.zero());
    for (size_t i = 0; i < b.size(); ++i) a[i] = f.add(a[i], b[i]);
    trim(f, a);
    return a;
}

template <class F>
Vec<F> sub(const F& f, Vec<F> a, const Vec<F>& b) {
    if (a.size() < b.size()) a.resize(b.size(), f.zero());
    for (size_t i = 0; i < b.size(); ++i) a[i] = f.sub(a[i], b[i]);
    trim(f, a);
    return a;
}

template <class F>
Vec<F> scal(const F& f, Vec<F> a, const typename F::Elem& c) {
    if (f.is_zero(c)) return {};
    for (auto& x : a) x = f.mul(x, c);
    trim(f, a);
    return a;
}

template <class F>
Vec<F> mul(const F& f, const Vec<F>& a, const Vec<F>& b) {
    if (a.empty() || b.empty()) return {};
    Vec<F> r(a.size() + b.size() - 1, f.zero());
    for (size_t i = 0; i < a.size(); ++i) {
        if (f.is_zero(a[i])) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
    }
    trim(f, r);
    return r;
}

template <class F>
std::pair<Vec<F>, Vec<F>> divmod(const F& f, Vec<F> a, const Vec<F>& b) {
    if (b.empty()) throw std::domain_error("pv::divmod by zero");
    if (a.size() < b.size()) return {{}, std::move(a)};
    typename F::Elem linv = f.inv(b.back());
    const size_t db = b.size() - 1;
    Vec<F> q(a.size() - db, f.zero());
    for (size_t i = a.size(); i-- > db;) {
        if (f.is_zero(a[i])) continue;
        typename F::Elem c = f.mul(a[i], linv);
        q[i - db] = c;
        for (size_t j = 0; j <= db; ++j) a[i - db + j] = f.sub(a[i - db + j], f.mul(c, b[j]));
    }
    trim(f, a);
    return {std::move(q), std::move(a)};
}

template <class F>
Vec<F> mod(const F& f, Vec<F> a, const Vec<F>& b) {
    return divmod(f, std::move(a), b).second;
}

template <class F>
Vec<F> make_monic(const F& f, Vec<F> a) {
    if (a.empty()) return a;
    typename F::Elem linv = f.inv(a.back());
    for (auto& x : a) x = f.mul(x, linv);
    return a;
}

template <class F>
Vec<F> gcd(const F& f, Vec<F> a, Vec<F> b) {
    while (!b.empty()) {
        Vec<F> r = mod(f, std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(f, std::move(a));
}

/// g = gcd(a, b) monic, with u a + v b = g.
template <class F>
void xgcd(const F& f, Vec<F> a, Vec<F> b, Vec<F>& g, Vec<F>& u, Vec<F>& v) {
    Vec<F> u0 = constant(f, f.one()), u1 = {};
    Vec<F> v0 = {}, v1 = constant(f, f.one());
    while (!b.empty()) {
        auto [q, r] = divmod(f, std::move(a), b);
        a = std::move(b);
        b = std::move(r);
        Vec<F> u2 = sub(f, std::move(u0), mul(f, q, u1));
        u0 = std::move(u1);
        u1 = std::move(u2);
        Vec<F> v2 = sub(f, std::move(v0), mul(f, q, v1));
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    if (!a.empty()) {
        typename F::Elem linv = f.inv(a.back());
        for (auto& x : a) x = f.mul(x, linv);
        for (auto& x : u0) x = f.mul(x, linv);
        for (auto& x : v0) x = f.mul(x, linv);
    }
    g = std::move(a);
    u = std::move(u0);
    v = std::move(v0);
}

template <class F>
typename F::Elem eval(const F& f, const Vec<F>& a, const typename F::Elem& x) {
    typename F::Elem v = f.zero();
    for (size_t i = a.size(); i-- > 0;) v = f.add(f.mul(v, x), a[i]);
    return v;
}

template <class F>
Vec<F> derivative(const F& f, const Vec<F>& a) {
    if (a.size() <= 1) return {};
    Vec<F> d(a.size() - 1, f.zero());
    for (size_t i = 1; i < a.size(); ++i) {
        typename F::Elem fi = f.from_big(BigInt(i));
        d[i - 1] = f.mul(a[i], fi);
    }
    trim(f, d);
    return d;
}

template <class F>
Vec<F> powmod(const F& f, Vec<F> base, BigInt e, const Vec<F>& m) {
    Vec<F> r = constant(f, f.one());
    base = mod(f, std::move(base), m);
    while (e > 0) {
        if ((e & 1) != 0) r = mod(f, mul(f, r, base), m);
        e >>= 1;
        if (e > 0) base = mod(f, mul(f, base, base), m);
    }
    return r;
}

}  // namespace pv

/// B[t]/(modulus) for monic irreducible modulus over the base context B.
/// Instantiated as ExtField<PrimeField> for working fields F_{p^k}, and as
/// ExtField<ExtField<PrimeField>> for relative extensions during splitting.
template <class B>
struct ExtField {
    using BaseElem = typename B::Elem;
    using Elem = std::vector<BaseElem>;  // length deg, coefficient of t^i at i

    B base;
    std::vector<BaseElem> modulus;  // monic, length deg + 1
    size_t deg;

    ExtField(B base_, std::vector<BaseElem> modulus_)
        : base(std::move(base_)), modulus(std::move(modulus_)), deg(modulus.size() - 1) {
        if (modulus.size() < 2 || !base.eq(modulus.back(), base.one()))
            throw std::invalid_argument("ExtField: modulus must be monic of degree >= 1");
    }

    Elem zero() const { return Elem(deg, base.zero()); }
    Elem one() const {
        Elem e(deg, base.zero());
        e[0] = base.one();
        return e;
    }
    bool is_zero(const Elem& a) const {
        for (auto& c : a)
            if (!base.is_zero(c)) return false;
        return true;
    }
    bool eq(const Elem& a, const Elem& b) const {
        for (size_t i = 0; i < deg; ++i)
            if (!base.eq(a[i], b[i])) return false;
        return true;
    }
    Elem add(const Elem& a, const Elem& b) const {
        Elem r(deg);
        for (size_t i = 0; i < deg; ++i) r[i] = base.add(a[i], b[i]);
        return r;
    }
    Elem sub(const Elem& a, const Elem& b) const {
        Elem r(deg);
        for (size_t i = 0; i < deg; ++i) r[i] = base.sub(a[i], b[i]);
        return r;
    }
    Elem neg(const Elem& a) const {
        Elem r(deg);
        for (size_t i = 0; i < deg; ++i) r[i] = base.neg(a[i]);
        return r;
    }
    Elem mul(const Elem& a, const Elem& b) const {
        std::vector<BaseElem> prod(2 * deg - 1, base.zero());
        for (size_t i = 0; i < deg; ++i) {
            if (base.is_zero(a[i])) continue;
            for (size_t j = 0; j < deg; ++j) prod[i + j] = base.add(prod[i + j], base.mul(a[i], b[j]));
        }
        reduce(prod);
        prod.resize(deg, base.zero());
        return prod;
    }
    Elem pow(Elem a, BigInt e) const {
        Elem r = one();
        while (e > 0) {
            if ((e & 1) != 0) r = mul(r, a);
            e >>= 1;
            if (e > 0) a = mul(a, a);
        }
        return r;
    }
    Elem inv(const Elem& a) const {
        if (is_zero(a)) throw std::domain_error("ExtField: inverse of zero");
        std::vector<BaseElem> av(a);
        pv::trim(base, av);
        pv::Vec<B> g, u, v;
        pv::xgcd(base, av, modulus, g, u, v);
        if (pv::deg<B>(g) != 0) throw std::logic_error("ExtField: modulus not irreducible");
        u.resize(deg, base.zero());
        return u;
    }
    Elem from_int(int64_t v) const {
        Elem e = zero();
        e[0] = base.from_int(v);
        return e;
    }
    Elem from_big(const BigInt& v) const {
        Elem e = zero();
        e[0] = base.from_big(v);
        return e;
    }
    /// the residue class of t
    Elem gen() const {
        if (deg == 1) return Elem{base.neg(modulus[0])};
        Elem e = zero();
        e[1] = base.one();
        return e;
    }
    /// lift a base-field element
    Elem from_base(const BaseElem& c) const {
        Elem e = zero();
        e[0] = c;
        return e;
    }

    uint64_t characteristic() const { return base.characteristic(); }
    BigInt cardinality() const { return big_pow(base.cardinality(), deg); }
    BigInt index_of(const Elem& a) const {
        BigInt idx = 0;
        for (size_t i = deg; i-- > 0;) idx = idx * base.cardinality() + base.index_of(a[i]);
        return idx;
    }
    Elem from_index(BigInt i) const {
        Elem e(deg);
        for (size_t k = 0; k < deg; ++k) {
            e[k] = base.from_index(i % base.cardinality());
            i /= base.cardinality();
        }
        return e;
    }
    std::string to_str(const Elem& a) const {
        std::ostringstream os;
        os << "[";
        for (size_t i = 0; i < deg; ++i) {
            if (i) os << ",";
            os << base.to_str(a[i]);
        }
        os << "]";
        return os.str();
    }

   private:
    void reduce(std::vector<BaseElem>& prod) const {
        for (size_t i = prod.size(); i-- > deg;) {
            if (base.is_zero(prod[i])) continue;
            BaseElem c = prod[i];
            prod[i] = base.zero();
            for (size_t j = 0; j < deg; ++j) prod[i - deg + j] = base.sub(prod[i - deg + j], base.mul(c, modulus[j]));
        }
    }
};

using Fq = ExtField<PrimeField>;
using FqElem = Fq::Elem;

/// Irreducibility over an arbitrary field context: x^{Q^d} = x mod f and
/// gcd(x^{Q^{d/l}} - x, f) = 1 for prime l | d.
template <class F>
bool is_irreducible(const F& f, const pv::Vec<F>& poly) {
    int d = pv::deg<F>(poly);
    if (d < 1) return false;
    if (d == 1) return true;
    const BigInt Q = f.cardinality();
    pv::Vec<F> x = pv::x_power(f, 1);
    // xq[j] = x^{Q^{j+1}} mod poly
    pv::Vec<F> t = x;
    std::vector<pv::Vec<F>> frob(d);
    for (int j = 0; j < d; ++j) {
        t = pv::powmod(f, t, Q, poly);
        frob[j] = t;
    }
    if (pv::deg<F>(pv::sub(f, frob[d - 1], x)) >= 0) return false;
    for (uint64_t l : prime_divisors(static_cast<uint64_t>(d))) {
        int j = d / static_cast<int>(l);
        pv::Vec<F> diff = pv::sub(f, frob[j - 1], x);
        if (pv::deg<F>(pv::gcd(f, diff, poly)) != 0) return false;
    }
    return true;
}

/// Deterministic monic irreducible of degree d over F: minimal weight
/// (number of nonzero coefficients), ties broken lexicographically on the
/// coefficient word (c_{d-1}, ..., c_0) with elements ordered by index.
/// The constant term of an irreducible of degree >= 2 is nonzero, so every
/// support contains position 0.
template <class F>
pv::Vec<F> find_irreducible(const F& f, size_t d) {
    if (d == 0) throw std::invalid_argument("find_irreducible: degree must be >= 1");
    if (d == 1) return pv::x_power(f, 1);
    const BigInt Q = f.cardinality();
    const BigInt value_cap = (Q > (1 << 16)) ? BigInt(1 << 8) : Q;  // keep search bounded over big fields
    for (size_t w = 1; w <= d; ++w) {
        // all w-subsets of {0..d-1} containing 0
        std::vector<std::vector<size_t>> supports;
        std::vector<size_t> cur{0};
        auto gen = [&](auto&& self, size_t start, size_t need) -> void {
            if (need == 0) {
                supports.push_back(cur);
                return;
            }
            for (size_t q = start; q + need <= d; ++q) {
                cur.push_back(q);
                self(self, q + 1, need - 1);
                cur.pop_back();
            }
        };
        gen(gen, 1, w - 1);
        // word-lex order: compare positions from the top down (a support whose
        // high coefficients are zero comes first)
        std::sort(supports.begin(), supports.end(), [](const std::vector<size_t>& a, const std::vector<size_t>& b) {
            std::vector<size_t> ra(a.rbegin(), a.rend()), rb(b.rbegin(), b.rend());
            return ra < rb;
        });
        for (const auto& sup : supports) {
            // positions sorted descending: most significant value digit first
            std::vector<size_t> positions(sup.rbegin(), sup.rend());
            std::vector<BigInt> vals(positions.size(), 1);
            while (true) {
                pv::Vec<F> cand(d + 1, f.zero());
                cand[d] = f.one();
                for (size_t i = 0; i < positions.size(); ++i) cand[positions[i]] = f.from_index(vals[i]);
                if (is_irreducible(f, cand)) return cand;
                size_t i = vals.size();
                bool rolled = true;
                while (i-- > 0) {
                    if (++vals[i] < value_cap) {
                        rolled = false;
                        break;
                    }
                    vals[i] = 1;
                }
                if (rolled) break;  // exhausted this support
            }
        }
    }
    throw std::logic_error("find_irreducible: no irreducible found (should not happen)");
}

/// F_{p^k} as a flat extension of F_p with the deterministic modulus.
inline Fq make_fq(uint64_t p, size_t k) {
    PrimeField fp(p);
    if (k == 1) {
        std::vector<uint64_t> m = {0, 1};  // F_p[t]/(t)
        return Fq(fp, std::move(m));
    }
    return Fq(fp, find_irreducible(fp, k));
}

}  // namespace superell

#endif
