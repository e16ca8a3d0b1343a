// Exact integer polynomial arithmetic: cyclotomics, resultants,
// discriminants, Bezout identities and invariant factors.

#include <gtest/gtest.h>

#include <random>

#include "superell/integers.hpp"
#include "superell/intmatrix.hpp"
#include "superell/intpoly.hpp"
#include "superell/poly_checks.hpp"

using namespace superell;

namespace {

// ---- independent oracles (kept free of the library's algorithm choices) ----

uint64_t phi_by_counting(uint64_t m) {
    uint64_t c = 0;
    for (uint64_t i = 1; i <= m; ++i)
        if (gcd_u64(i, m) == 1) ++c;
    return c;
}

int mobius_by_definition(uint64_t m) {
    // factor by trial division, squarefree sign
    int w = 0;
    for (uint64_t p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            m /= p;
            if (m % p == 0) return 0;
            ++w;
        }
    }
    if (m > 1) ++w;
    return (w % 2 == 0) ? 1 : -1;
}

// Sylvester-matrix resultant via Bareiss fraction-free elimination.
BigInt sylvester_resultant(const IntPoly& f, const IntPoly& g) {
    int m = f.degree(), n = g.degree();
    if (m < 0 || n < 0) return 0;
    int sz = m + n;
    if (sz == 0) return 1;
    std::vector<std::vector<BigInt>> a(sz, std::vector<BigInt>(sz, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) a[i][i + j] = f[m - j];
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) a[n + i][i + j] = g[n - j];
    BigInt sign = 1, prev = 1;
    for (int k = 0; k < sz - 1; ++k) {
        if (a[k][k] == 0) {
            int piv = -1;
            for (int i = k + 1; i < sz; ++i)
                if (a[i][k] != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0) return 0;
            std::swap(a[k], a[piv]);
            sign = -sign;
        }
        for (int i = k + 1; i < sz; ++i)
            for (int j = k + 1; j < sz; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[sz - 1][sz - 1];
}

IntPoly random_monic(std::mt19937_64& rng, int deg, int lo = -5, int hi = 5) {
    std::vector<BigInt> c(deg + 1);
    for (int i = 0; i < deg; ++i) c[i] = static_cast<int64_t>(rng() % (hi - lo + 1)) + lo;
    c[deg] = 1;
    return IntPoly(std::move(c));
}

}  // namespace

TEST(EulerPhi, MatchesCountingOracle) {
    EXPECT_EQ(euler_phi(1), 1u);
    EXPECT_EQ(euler_phi(12), 4u);  // brute force: 1,5,7,11
    EXPECT_EQ(euler_phi(9), 6u);
    for (uint64_t m = 1; m <= 300; ++m) EXPECT_EQ(euler_phi(m), phi_by_counting(m)) << m;
}

TEST(Mobius, MatchesDefinition) {
    EXPECT_EQ(mobius(1), 1);
    EXPECT_EQ(mobius(6), 1);
    EXPECT_EQ(mobius(12), 0);
    for (uint64_t m = 1; m <= 300; ++m) EXPECT_EQ(mobius(m), mobius_by_definition(m)) << m;
}

TEST(Cyclotomic, KnownValues) {
    EXPECT_EQ(cyclotomic(1), (IntPoly{-1, 1}));
    EXPECT_EQ(cyclotomic(12), (IntPoly{1, 0, -1, 0, 1}));        // T^4 - T^2 + 1
    EXPECT_EQ(cyclotomic(5), (IntPoly{1, 1, 1, 1, 1}));          // (T^5-1)/(T-1)
    EXPECT_EQ(cyclotomic(2), (IntPoly{1, 1}));
}

TEST(Cyclotomic, ProductOverDivisorsIsBinomial) {
    for (uint64_t D : {12u, 30u, 36u, 49u, 101u}) {
        IntPoly prod = IntPoly::constant(1);
        for (uint64_t d : divisors_of(D)) prod *= cyclotomic(d);
        IntPoly bin = IntPoly::monomial(D);
        bin.set_coeff(0, -1);
        EXPECT_EQ(prod, bin) << D;
    }
}

TEST(Cyclotomic, DegreeIsPhiUpTo200) {
    for (uint64_t D = 1; D <= 200; ++D) EXPECT_EQ(cyclotomic(D).degree(), static_cast<int>(euler_phi(D))) << D;
}

TEST(PnPoly, SumEqualsProductForms) {
    EXPECT_EQ(pn_poly(2), (IntPoly{1, 1}));
    EXPECT_EQ(pn_poly(3), (IntPoly{1, 1, 1}));
    EXPECT_EQ(pn_poly(6), (IntPoly{1, 1, 1, 1, 1, 1}));
    for (uint64_t N = 2; N <= 30; ++N) EXPECT_NO_THROW(pn_poly(N)) << N;  // forms cross-checked inside
}

TEST(QndPoly, KnownValuesAndErrors) {
    EXPECT_EQ(qnd_poly(4, 2), (IntPoly{1, 0, 1}));
    EXPECT_EQ(qnd_poly(12, 4), (IntPoly{1, 0, 0, 0, 1, 0, 0, 0, 1}));
    EXPECT_EQ(qnd_poly(5, 1), pn_poly(5));
    EXPECT_EQ(qnd_poly(12, 4), cyclotomic(3) * cyclotomic(6) * cyclotomic(12));
    EXPECT_THROW(qnd_poly(12, 5), std::invalid_argument);
    EXPECT_THROW(qnd_poly(12, 12), std::invalid_argument);
}

TEST(Resultant, KnownValues) {
    // Res(T - a, G) = G(a)
    EXPECT_EQ(resultant(IntPoly{-1, 1}, cyclotomic(5)), 5);
    EXPECT_EQ(resultant(cyclotomic(2), cyclotomic(4)), 2);  // Phi_4(-1) = 2
    IntPoly F{-1, 0, 2, 1};
    EXPECT_EQ(resultant(F, F), 0);
    EXPECT_THROW(resultant(IntPoly::zero(), F), std::invalid_argument);
    EXPECT_EQ(resultant(F, IntPoly::zero()), 0);
    EXPECT_EQ(resultant(F, IntPoly::constant(3)), 27);
}

TEST(Resultant, EvaluationOracleOnSplitPolys) {
    // F = prod (T - x_i), G arbitrary: Res(F, G) = prod G(x_i)
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<int64_t> roots;
        IntPoly F = IntPoly::constant(1);
        for (int i = 0; i < 4; ++i) {
            int64_t r = static_cast<int64_t>(rng() % 11) - 5;
            roots.push_back(r);
            F *= IntPoly{-r, 1};
        }
        IntPoly G = random_monic(rng, 3);
        BigInt expect = 1;
        for (int64_t r : roots) expect *= G(r);
        EXPECT_EQ(resultant(F, G), expect);
    }
}

TEST(Resultant, MatchesSylvesterBareissOracle) {
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 200; ++trial) {
        int df = 1 + static_cast<int>(rng() % 6), dg = 1 + static_cast<int>(rng() % 6);
        IntPoly F = random_monic(rng, df), G = random_monic(rng, dg);
        EXPECT_EQ(resultant(F, G), sylvester_resultant(F, G)) << F.str() << " ; " << G.str();
    }
}

TEST(Resultant, SwapSymmetry) {
    std::mt19937_64 rng(999);
    for (int trial = 0; trial < 100; ++trial) {
        IntPoly F = random_monic(rng, 1 + static_cast<int>(rng() % 5));
        IntPoly G = random_monic(rng, 1 + static_cast<int>(rng() % 5));
        BigInt lhs = resultant(F, G);
        BigInt rhs = resultant(G, F);
        if ((F.degree() * G.degree()) % 2 == 1) rhs = -rhs;
        EXPECT_EQ(lhs, rhs);
    }
}

TEST(Resultant, DividesDiscriminantOfProduct) {
    std::mt19937_64 rng(4242);
    int done = 0;
    for (int trial = 0; trial < 400 && done < 100; ++trial) {
        IntPoly F = random_monic(rng, 1 + static_cast<int>(rng() % 3));
        IntPoly G = random_monic(rng, 1 + static_cast<int>(rng() % 3));
        IntPoly FG = F * G;
        if (resultant(FG, FG.derivative()) == 0) continue;  // not squarefree
        BigInt r = resultant(F, G);
        ASSERT_NE(r, 0);
        EXPECT_EQ(discriminant(FG) % r, 0);
        ++done;
    }
    EXPECT_GE(done, 100);
}

TEST(Discriminant, KnownValues) {
    EXPECT_EQ(discriminant(IntPoly{1, 1, 1}), -3);
    EXPECT_EQ(discriminant(IntPoly{1, 1, 1, 1}), -16);
    EXPECT_EQ(discriminant(IntPoly{-1, 0, 1}), 4);
    EXPECT_THROW(discriminant(IntPoly::constant(2)), std::invalid_argument);
}

TEST(DiscPn, ClosedFormUpTo30) {
    // spot values first
    EXPECT_EQ(discriminant(pn_poly(3)), -3);
    EXPECT_EQ(discriminant(pn_poly(4)), -16);
    EXPECT_EQ(discriminant(pn_poly(5)), 125);
    for (uint64_t N = 2; N <= 30; ++N) {
        CheckReport r = verify_disc_pn(N);
        EXPECT_TRUE(r.pass) << "N=" << N << " expected " << r.expected << " got " << r.actual;
    }
}

TEST(Bezout, KnownIdentity) {
    auto bz = bezout(IntPoly{-1, 1}, IntPoly{1, 1});
    EXPECT_EQ(bz.res, 2);
    EXPECT_EQ(bz.a, IntPoly::constant(-1));
    EXPECT_EQ(bz.b, IntPoly::constant(1));
}

TEST(Bezout, VerifiedBySubstitution) {
    auto bz = bezout(IntPoly{-1, 1}, cyclotomic(3));
    EXPECT_EQ(bz.res, 3);
    EXPECT_EQ(bz.a * IntPoly({-1, 1}) + bz.b * cyclotomic(3), IntPoly::constant(3));

    auto bz2 = bezout(cyclotomic(2), cyclotomic(4));
    EXPECT_EQ(bz2.res, 2);
    EXPECT_EQ(bz2.a * cyclotomic(2) + bz2.b * cyclotomic(4), IntPoly::constant(2));
}

TEST(Bezout, NonCoprimeSignaledByZero) {
    IntPoly F{-1, 0, 1};  // (T-1)(T+1)
    EXPECT_EQ(bezout(F, IntPoly{-1, 1}).res, 0);
}

TEST(InvariantFactors, KnownValues) {
    auto v = invariant_factors(IntPoly{-1, 1}, cyclotomic(5));
    ASSERT_EQ(v.factors.size(), 1u);
    EXPECT_EQ(v.factors[0], 5);
    EXPECT_EQ(v.group_order, 5);

    auto w = invariant_factors(cyclotomic(2), cyclotomic(4));
    ASSERT_EQ(w.factors.size(), 1u);
    EXPECT_EQ(w.factors[0], 2);

    auto t = invariant_factors(cyclotomic(3), cyclotomic(5));
    EXPECT_TRUE(t.factors.empty());
    EXPECT_EQ(t.group_order, 1);

    EXPECT_THROW(invariant_factors(IntPoly{-1, 0, 1}, IntPoly{-1, 1}), std::invalid_argument);
}

// Randomized suite covering the spec'd invariants: exact Bezout identity,
// |Res| = prod of invariant factors, d_r | Res, equal prime supports.
TEST(ExactPoly, RandomizedConsistencySuite) {
    std::mt19937_64 rng(20260811);
    int done = 0;
    for (int trial = 0; trial < 500 && done < 120; ++trial) {
        IntPoly F = random_monic(rng, 1 + static_cast<int>(rng() % 6));
        IntPoly G = random_monic(rng, 1 + static_cast<int>(rng() % 6));
        BigInt res = resultant(F, G);
        if (res == 0) continue;
        ++done;

        auto bz = bezout(F, G);
        EXPECT_EQ(bz.res, res);
        EXPECT_EQ(bz.a * F + bz.b * G, IntPoly::constant(res));
        EXPECT_LT(bz.a.degree(), G.degree());
        EXPECT_LT(bz.b.degree(), F.degree());

        auto inv = invariant_factors(F, G);
        BigInt absres = res < 0 ? BigInt(-res) : res;
        EXPECT_EQ(inv.group_order, absres);
        for (size_t i = 0; i + 1 < inv.factors.size(); ++i) EXPECT_EQ(inv.factors[i + 1] % inv.factors[i], 0);
        if (!inv.factors.empty()) {
            BigInt dr = inv.factors.back();
            EXPECT_EQ(absres % dr, 0);
            // equal prime supports: every prime dividing res divides d_r.
            BigInt rest = absres;
            for (BigInt p = 2; p * p <= rest;) {
                if (rest % p == 0) {
                    EXPECT_EQ(dr % p, 0) << "prime " << p << " divides Res but not d_r";
                    while (rest % p == 0) rest /= p;
                } else {
                    ++p;
                }
            }
            if (rest > 1) EXPECT_EQ(dr % rest, 0);
        } else {
            EXPECT_EQ(absres, 1);
        }
    }
    EXPECT_GE(done, 120);
}

TEST(Lemma44Shadow, CyclotomicPairsCoprimeOverZ) {
    // D1 < D2 <= 24 with D1 not dividing D2: trivial quotient
    for (uint64_t d1 = 1; d1 <= 24; ++d1)
        for (uint64_t d2 = d1 + 1; d2 <= 24; ++d2) {
            if (d2 % d1 == 0) continue;
            auto inv = invariant_factors(cyclotomic(d1), cyclotomic(d2));
            EXPECT_TRUE(inv.factors.empty()) << d1 << "," << d2;
        }
}
