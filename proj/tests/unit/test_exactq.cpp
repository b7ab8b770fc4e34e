#include "gen.hpp"

#include "sumset/errors.hpp"

#include <gtest/gtest.h>

using namespace sumset;
using namespace sumset::exactq;
using sumset::testing::Gen;

namespace {

// Power-basis helpers used as oracles; they never touch BinomPoly.
using Power = std::vector<Rational>;

Rational eval_power(const Power& a, const Rational& x) {
    Rational acc, xp(1);
    for (const auto& c : a) {
        acc += c * xp;
        xp *= x;
    }
    return acc;
}

long choose(long n, long k) {
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// P(x + r) in the power basis via the binomial theorem.
Power shift_power(const Power& a, const Rational& r) {
    Power out(a.size());
    for (std::size_t n = 0; n < a.size(); ++n)
        for (std::size_t i = 0; i <= n; ++i)
            out[i] += a[n] * Rational(choose(static_cast<long>(n), static_cast<long>(i))) *
                      pow(r, static_cast<unsigned long>(n - i));
    return out;
}

Power sub(Power a, const Power& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    while (!a.empty() && a.back().is_zero()) a.pop_back();
    return a;
}

// Stirling numbers of the second kind; x^n = sum_k S(n,k) k! C(x,k).
long stirling2(long n, long k) {
    if (n == 0 && k == 0) return 1;
    if (n == 0 || k == 0) return 0;
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1);
}

std::vector<Rational> stirling_binomial_coeffs(const Power& a) {
    std::vector<Rational> c(a.size());
    for (std::size_t n = 0; n < a.size(); ++n) {
        long fact = 1;
        for (std::size_t k = 0; k <= n; ++k) {
            if (k > 0) fact *= static_cast<long>(k);
            c[k] += a[n] * Rational(stirling2(static_cast<long>(n), static_cast<long>(k)) * fact);
        }
    }
    while (!c.empty() && c.back().is_zero()) c.pop_back();
    return c;
}

Power power_of(const BinomPoly& p) { return to_power(p).coeffs; }

}  // namespace

TEST(Rational, CanonicalForm) {
    EXPECT_EQ(Rational(6, -4).str(), "-3/2");
    EXPECT_EQ(Rational(0, 7).str(), "0/1");
    EXPECT_EQ(Rational::parse(" -10/4 "), Rational(-5, 2));
    EXPECT_EQ(Rational::parse("12"), Rational(12));
    EXPECT_THROW(Rational::parse("1/0"), Error);
    EXPECT_THROW(Rational::parse("x"), Error);
    EXPECT_THROW(Rational(1) / Rational(0), Error);
}

TEST(Rational, FloorFracAndDistance) {
    EXPECT_EQ(Rational(-7, 3).floor(), -3);
    EXPECT_EQ(Rational(-7, 3).frac(), Rational(2, 3));
    EXPECT_EQ(Rational(17, 16).dist_to_int(), Rational(1, 16));
    EXPECT_EQ(Rational(3, 4).dist_to_int(), Rational(1, 4));
}

TEST(Rational, Valuations) {
    EXPECT_EQ(valuation(Rational(12), 2), 2);
    EXPECT_EQ(valuation(Rational(5, 24), 2), -3);
    EXPECT_EQ(valuation(Rational(5, 24), 3), -1);
    EXPECT_EQ(prime_divisors(Integer(360)), (std::vector<unsigned long>{2, 3, 5}));
}

TEST(Binom, Examples) {
    EXPECT_EQ(binom(Rational(5), 2), Rational(10));
    EXPECT_EQ(binom(Rational(3, 7), 0), Rational(1));
    EXPECT_EQ(binom(Rational(1, 2), 2), Rational(-1, 8));
}

TEST(Binom, PascalRule) {
    Gen g(11);
    for (int i = 0; i < 500; ++i) {
        const Rational x = g.rational(50, 17);
        const auto j = static_cast<unsigned>(g.integer(1, 8));
        ASSERT_EQ(binom(x, j), binom(x - Rational(1), j) + binom(x - Rational(1), j - 1));
    }
}

TEST(EvalPoly, Examples) {
    EXPECT_EQ(eval_poly(BinomPoly::monomial(1), Rational(7)), Rational(7));
    EXPECT_EQ(eval_poly(BinomPoly::monomial(2), Rational(4)), Rational(6));
    const BinomPoly sq({Rational(0), Rational(1), Rational(2)});
    EXPECT_EQ(eval_poly(sq, Rational(1, 2)), eval_power({0, 0, 1}, Rational(1, 2)));
    EXPECT_EQ(eval_poly(sq, Rational(1, 2)), Rational(1, 4));
}

TEST(EvalPoly, AgreesWithPowerBasis) {
    Gen g(12);
    for (int i = 0; i < 200; ++i) {
        const BinomPoly p = g.binom_poly(6);
        const Rational x = g.rational();
        ASSERT_EQ(p(x), eval_power(power_of(p), x));
    }
}

TEST(ShiftDiff, Examples) {
    const BinomPoly sq = to_binomial(PowerPoly{{0, 0, 1}});
    EXPECT_EQ(power_of(shift_diff(sq, Rational(1))), (Power{1, 2}));
    EXPECT_TRUE(shift_diff(sq, Rational(0)).is_zero());

    const Power cube{0, 0, 0, 1};
    const Power expected = sub(shift_power(cube, Rational(2)), cube);
    EXPECT_EQ(expected, (Power{8, 12, 6}));
    EXPECT_EQ(power_of(shift_diff(to_binomial(PowerPoly{cube}), Rational(2))), expected);
}

TEST(ShiftDiff, MatchesPowerOracleAndDropsDegree) {
    Gen g(13);
    for (int i = 0; i < 200; ++i) {
        const BinomPoly p = g.binom_poly(6);
        const Rational r = g.rational();
        const BinomPoly q = shift_diff(p, r);
        ASSERT_EQ(power_of(q), sub(shift_power(power_of(p), r), power_of(p)));
        if (!r.is_zero() && p.degree() >= 1) ASSERT_EQ(q.degree(), p.degree() - 1);
    }
}

TEST(ShiftDiff, Cocycle) {
    Gen g(14);
    for (int i = 0; i < 200; ++i) {
        const BinomPoly p = g.binom_poly(6);
        const Rational r = g.rational(), s = g.rational(), q = g.rational();
        ASSERT_EQ(shift_diff(p, r + s)(q), shift_diff(p, r)(q + s) + shift_diff(p, s)(q));
    }
}

TEST(DerivedSequence, Examples) {
    const auto sq = derived_sequence(to_binomial(PowerPoly{{0, 0, 1}}));
    ASSERT_EQ(sq.size(), 2u);
    EXPECT_EQ(power_of(sq[1]), (Power{0, 2}));

    // Oracle: iterate the recurrence in the power basis.
    Power cur{0, 0, 0, 1};
    for (int j = 1; j < 3; ++j) {
        const Rational at1 = eval_power(cur, Rational(1));
        cur = sub(sub(shift_power(cur, Rational(1)), cur), Power{at1});
    }
    EXPECT_EQ(cur, (Power{0, 6}));
    EXPECT_EQ(power_of(derived_sequence(to_binomial(PowerPoly{{0, 0, 0, 1}})).back()), cur);

    const auto lin = derived_sequence(BinomPoly::monomial(1));
    ASSERT_EQ(lin.size(), 1u);
    EXPECT_EQ(lin[0], BinomPoly::monomial(1));
}

TEST(DerivedSequence, Errors) {
    try {
        derived_sequence(BinomPoly({Rational(0)}));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::ConstantPolynomial);
    }
    try {
        derived_sequence(BinomPoly({Rational(5)}));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::ConstantPolynomial);
    }
    try {
        derived_sequence(BinomPoly({Rational(1), Rational(1)}));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::PreconditionFailed);
    }
}

TEST(DerivedSequence, DegreeDrop) {
    Gen g(15);
    for (int i = 0; i < 200; ++i) {
        std::vector<Rational> c(static_cast<std::size_t>(g.integer(2, 7)));
        for (std::size_t j = 1; j < c.size(); ++j) c[j] = g.rational(9, 5);
        if (c.back().is_zero()) c.back() = Rational(1);
        const BinomPoly p{c};
        const auto seq = derived_sequence(p);
        const int d = p.degree();
        ASSERT_EQ(static_cast<int>(seq.size()), d);
        for (int j = 0; j < d; ++j) ASSERT_EQ(seq[static_cast<std::size_t>(j)].degree(), d - j);
    }
}

TEST(BasisConvert, Examples) {
    EXPECT_EQ(stirling_binomial_coeffs({0, 0, 1}), (std::vector<Rational>{0, 1, 2}));
    EXPECT_EQ(to_binomial(PowerPoly{{0, 0, 1}}).coeffs(), stirling_binomial_coeffs({0, 0, 1}));
    EXPECT_EQ(to_binomial(PowerPoly{{1}}).coeffs(), (std::vector<Rational>{1}));
}

TEST(BasisConvert, StirlingOracleAndRoundTrip) {
    Gen g(16);
    for (int i = 0; i < 100; ++i) {
        Power a(static_cast<std::size_t>(g.integer(1, 8)));
        for (auto& x : a) x = g.rational(9, 7);
        a = sub(a, {});
        ASSERT_EQ(to_binomial(PowerPoly{a}).coeffs(), stirling_binomial_coeffs(a));
        const BinomPoly p = g.binom_poly(7);
        ASSERT_EQ(to_binomial(to_power(p)), p);
    }
}

TEST(PowerPolyParse, Terms) {
    EXPECT_EQ(PowerPoly::parse("x^2").coeffs, (Power{0, 0, 1}));
    EXPECT_EQ(PowerPoly::parse("3/2 x^3 - x + 7").coeffs, (Power{7, -1, 0, Rational(3, 2)}));
    EXPECT_EQ(PowerPoly::parse("2*x^2+x").coeffs, (Power{0, 1, 2}));
    EXPECT_THROW(PowerPoly::parse("x^"), Error);
    EXPECT_THROW(PowerPoly::parse("2y"), Error);
    EXPECT_THROW(PowerPoly::parse(""), Error);
}
