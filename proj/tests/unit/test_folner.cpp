#include "gen.hpp"

#include "sumset/errors.hpp"
#include "sumset/folner.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using namespace sumset;
using namespace sumset::folner;
using sumset::testing::Gen;

namespace {

const FolnerFamily kHarmonic{FamilyKind::Harmonic};
const FolnerFamily kGrid{FamilyKind::FactorialGrid};

// Walk all (2N+1)^N coefficient tuples directly.
std::set<Rational> naive_harmonic(int N) {
    std::set<Rational> out;
    std::vector<int> a(static_cast<std::size_t>(N), -N);
    while (true) {
        Rational s;
        for (int n = 1; n <= N; ++n) s += Rational(a[static_cast<std::size_t>(n - 1)], n);
        out.insert(s);
        std::size_t i = 0;
        while (i < a.size() && a[i] == N) a[i++] = -N;
        if (i == a.size()) break;
        ++a[i];
    }
    return out;
}

Rational naive_defect(const std::vector<Rational>& phi, const Rational& x) {
    const std::set<Rational> base(phi.begin(), phi.end());
    std::set<Rational> shifted;
    for (const auto& q : phi) shifted.insert(q + x);
    long diff = 0;
    for (const auto& q : base) diff += shifted.contains(q) ? 0 : 1;
    for (const auto& q : shifted) diff += base.contains(q) ? 0 : 1;
    return Rational(diff, static_cast<long>(phi.size()));
}

}  // namespace

TEST(Enumerate, Examples) {
    EXPECT_EQ(enumerate(kHarmonic, 1), (std::vector<Rational>{-1, 0, 1}));
    EXPECT_EQ(naive_harmonic(2).size(), 13u);
    EXPECT_EQ(enumerate(kHarmonic, 2).size(), 13u);
    std::vector<Rational> grid2;
    for (long k = -4; k <= 4; ++k) grid2.emplace_back(k, 2);
    EXPECT_EQ(enumerate(kGrid, 2), grid2);
}

TEST(Enumerate, HarmonicMatchesTupleWalk) {
    for (int N = 1; N <= 4; ++N) {
        const auto naive = naive_harmonic(N);
        EXPECT_EQ(enumerate(kHarmonic, N), std::vector<Rational>(naive.begin(), naive.end())) << N;
    }
}

TEST(Enumerate, SizesAndCaps) {
    for (int N = 1; N <= 6; ++N) EXPECT_EQ(enumerate(kGrid, N).size(), [N] {
        long f = 1;
        for (int i = 2; i <= N; ++i) f *= i;
        return static_cast<std::size_t>(2 * N * f + 1);
    }());
    EXPECT_NO_THROW(enumerate(kHarmonic, 6));
    try {
        (void)enumerate(kHarmonic, 7);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::SizeCap);
    }
    FolnerFamily small{FamilyKind::FactorialGrid, 1000};
    EXPECT_THROW(enumerate(small, 5), Error);
    EXPECT_THROW(enumerate(kGrid, 0), Error);
    EXPECT_THROW(FolnerFamily::parse("cesaro"), Error);
    EXPECT_EQ(FolnerFamily::parse("harmonic").kind, FamilyKind::Harmonic);
}

TEST(Density, Examples) {
    EXPECT_EQ(density(everything(), kHarmonic, 3), Rational(1));
    EXPECT_EQ(density(nothing(), kGrid, 4), Rational(0));
    long integers = 0;
    for (const auto& q : naive_harmonic(2)) integers += (q.dist_to_int() < Rational(1, 4)) ? 1 : 0;
    EXPECT_EQ(integers, 7);
    EXPECT_EQ(density(return_time_set(Rational(1, 4)), kHarmonic, 2), Rational(7, 13));
}

TEST(Density, ReturnTimeSetsApproachTwiceDelta) {
    for (const Rational delta : {Rational(1, 8), Rational(1, 4), Rational(3, 8), Rational(1, 3), Rational(1, 2)})
        for (int N = 4; N <= 6; ++N)
            EXPECT_LE((density(return_time_set(delta), kGrid, N) - Rational(2) * delta).abs(), Rational(2, N));
}

TEST(ReturnTimeSet, Examples) {
    EXPECT_TRUE(return_time_set(Rational(1, 2))(Rational(1, 4)));
    EXPECT_FALSE(return_time_set(Rational(1, 4))(Rational(1, 2)));
    EXPECT_TRUE(return_time_set(Rational(1, 4))(Rational(17, 16)));
    EXPECT_THROW(return_time_set(Rational(3, 4)), Error);
}

TEST(FolnerDefect, Examples) {
    EXPECT_EQ(folner_defect(kGrid, 3, Rational(0)), Rational(0));
    EXPECT_EQ(folner_defect(kHarmonic, 3, Rational(0)), Rational(0));
    const Rational oracle = naive_defect(enumerate(kGrid, 3), Rational(1, 2));
    EXPECT_EQ(oracle, Rational(6, 37));
    EXPECT_EQ(folner_defect(kGrid, 3, Rational(1, 2)), oracle);
}

TEST(FolnerDefect, MatchesSetOracle) {
    Gen g(51);
    for (int i = 0; i < 40; ++i) {
        const bool harmonic = g.coin();
        const int N = static_cast<int>(g.integer(1, harmonic ? 4 : 5));
        const auto phi = enumerate(harmonic ? kHarmonic : kGrid, N);
        const Rational x = g.rational(8, 12);
        ASSERT_EQ(folner_defect(phi, x), naive_defect(phi, x));
    }
}

TEST(FolnerDefect, NonIncreasingForUnitShift) {
    Rational prev(2);
    for (int N = 1; N <= 6; ++N) {
        const Rational d = folner_defect(kGrid, N, Rational(1));
        EXPECT_LE(d, prev) << N;
        prev = d;
    }
}

TEST(Density, TranslationStableUpToDefect) {
    Gen g(52);
    for (int i = 0; i < 60; ++i) {
        const bool harmonic = g.coin();
        const FolnerFamily fam = harmonic ? kHarmonic : kGrid;
        const int N = static_cast<int>(g.integer(2, harmonic ? 4 : 5));
        const auto phi = enumerate(fam, N);
        const auto a = return_time_set(Rational(g.integer(1, 5), 10));
        const Rational x = g.rational(4, 6);
        ASSERT_LE((density(translate(a, x), phi) - density(a, phi)).abs(), folner_defect(phi, x));
    }
}
