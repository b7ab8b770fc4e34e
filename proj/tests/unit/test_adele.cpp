#include "gen.hpp"

#include "sumset/errors.hpp"

#include <gtest/gtest.h>

using namespace sumset;
using namespace sumset::adele;
using sumset::testing::Gen;

namespace {

AdeleClassElement real_class(const Rational& r) { return AdeleClassElement::from_real(r); }

AdeleClassElement part_class(unsigned long p, const Rational& x) {
    return AdeleClassElement::from_parts(Rational(0), {{p, PAdicNumber::exact(p, x)}});
}

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error thrown";
    return ErrorKind::ParseError;
}

}  // namespace

TEST(ReduceMod, RepresentativeProperties) {
    Gen g(21);
    for (int i = 0; i < 500; ++i) {
        const unsigned long p = std::vector<unsigned long>{2, 3, 5, 7}[g.integer(0, 3)];
        const Rational z = g.smooth_rational({p, 3, 11}, 500, 3);
        const long a = g.integer(-4, 6);
        const Rational r = reduce_mod(z, p, a);
        ASSERT_GE(r, Rational(0));
        const Rational bound = a >= 0 ? Rational(exactq::ipow(p, a)) : Rational(Integer(1), exactq::ipow(p, -a));
        ASSERT_LT(r, bound);
        ASSERT_EQ(exactq::prime_divisors(r.den()).size() <= 1, true);
        if (!r.is_zero() && r.den() != 1) ASSERT_EQ(exactq::prime_divisors(r.den()).front(), p);
        if (z != r) ASSERT_GE(exactq::valuation(z - r, p), a);
    }
}

TEST(PAdic, DigitsRoundTrip) {
    const auto x = PAdicNumber::from_digits(3, -2, {1, 0, 2, 2, 1});
    EXPECT_EQ(x.valuation(), -2);
    EXPECT_EQ(x.precision(), 5);
    EXPECT_EQ(x.digits(5), (std::vector<unsigned>{1, 0, 2, 2, 1}));
    EXPECT_EQ(x.frac(), Rational(1, 9));
    EXPECT_EQ(PAdicNumber::exact(2, Rational(-1)).digits(6), (std::vector<unsigned>(6, 1)));
    EXPECT_EQ(PAdicNumber::exact(5, Rational(1, 3)).digits(4), (std::vector<unsigned>{2, 3, 1, 3}));
}

TEST(PAdic, FracExamples) {
    EXPECT_EQ(frac_p(PAdicNumber::exact(2, Rational(1, 2))), Rational(1, 2));
    EXPECT_EQ(frac_p(PAdicNumber::exact(3, Rational(5))), Rational(0));
    EXPECT_EQ(frac_p(PAdicNumber::exact(2, Rational(3, 4))), Rational(3, 4));
    EXPECT_EQ(frac_p(PAdicNumber::exact(5, Rational(-1, 5))), Rational(4, 5));
    const auto shallow = PAdicNumber::from_digits(2, -3, {1}, 1);
    EXPECT_EQ(kind_of([&] { (void)shallow.frac(); }), ErrorKind::InsufficientPrecision);
}

TEST(PAdic, ScalingTracksPrecision) {
    const auto fixed = PAdicNumber::from_digits(2, 0, std::vector<unsigned>(20, 1));
    EXPECT_EQ(*fixed.scaled(Rational(1, 8)).abs_precision(), 17);
    EXPECT_EQ(*fixed.scaled(Rational(4)).abs_precision(), 22);
    const auto lazy = PAdicNumber::from_source(2, {"squares", 1}, 20);
    EXPECT_EQ(*lazy.scaled(Rational(1, 8)).abs_precision(), 20);
    EXPECT_TRUE(lazy.scaled(Rational(1, 8)).scaled(Rational(8)).agrees_with(lazy));
}

TEST(PAdic, SquaresSource) {
    const DigitSource s{"squares", 0};
    std::vector<unsigned> d;
    for (std::uint64_t j = 0; j < 10; ++j) d.push_back(s.digit(j, 2));
    EXPECT_EQ(d, (std::vector<unsigned>{1, 1, 0, 0, 1, 0, 0, 0, 0, 1}));
    EXPECT_EQ(kind_of([] { (void)DigitSource{"noise", 0}.digit(0, 2); }), ErrorKind::ConfigInvalid);
}

TEST(Canonicalize, Examples) {
    const Rational q(7, 3);
    EXPECT_TRUE(canonicalize(RawAdele{q, {}, q}).is_zero());

    const auto a = part_class(5, Rational(1, 5));
    const auto form = a.canonical();
    EXPECT_EQ(form.real_angle, Rational(4, 5));
    EXPECT_EQ(form.parts.at(5).frac(), Rational(0));
    EXPECT_EQ(form.tail, Rational(4, 5));

    EXPECT_EQ(real_class(Rational(3, 2)).real_angle(), Rational(1, 2));
}

TEST(Canonicalize, CanonicalViewIsIntegral) {
    Gen g(22);
    for (int i = 0; i < 300; ++i) {
        const auto a = g.adele();
        const auto form = a.canonical();
        ASSERT_GE(form.real_angle, Rational(0));
        ASSERT_LT(form.real_angle, Rational(1));
        for (const auto& [p, x] : form.parts) ASSERT_EQ(x.frac(), Rational(0));
        for (unsigned long l : exactq::prime_divisors(form.tail.den())) ASSERT_TRUE(form.parts.contains(l));
    }
}

TEST(CharacterEQ, Examples) {
    EXPECT_EQ(e_Q(AdeleClassElement::zero()).angle(), Rational(0));
    EXPECT_EQ(e_Q(real_class(Rational(1, 3))).angle(), Rational(1, 3));
    for (unsigned long p : {2ul, 3ul, 7ul})
        EXPECT_EQ(e_Q(part_class(p, Rational(1, static_cast<long>(p)))).angle(),
                  Rational(1) - Rational(1, static_cast<long>(p)));
    EXPECT_EQ(e_Q(real_class(Rational(1, 3)), CharacterSign::Flipped).angle(), Rational(2, 3));
}

TEST(ScalarMul, Examples) {
    Gen g(23);
    EXPECT_TRUE(scalar_mul(Rational(0), g.adele()).is_zero());
    EXPECT_EQ(scalar_mul(Rational(2), real_class(Rational(1, 3))).real_angle(), Rational(2, 3));
    const RawAdele diag_one{Rational(1), {{2, PAdicNumber::exact(2, Rational(1))}}, Rational(1)};
    EXPECT_TRUE(scalar_mul(Rational(1, 2), canonicalize(diag_one)).is_zero());
    EXPECT_EQ(kind_of([] {
                  const auto a = AdeleClassElement::from_parts(
                      Rational(0), {{2, PAdicNumber::from_digits(2, 0, {1, 0, 1})}});
                  (void)e_Q(scalar_mul(Rational(1, 16), a));
              }),
              ErrorKind::InsufficientPrecision);
}

TEST(Add, Examples) {
    Gen g(24);
    const auto a = g.adele();
    EXPECT_EQ(a + AdeleClassElement::zero(), a);
    EXPECT_TRUE((a + (-a)).is_zero());
    EXPECT_EQ((real_class(Rational(2, 3)) + real_class(Rational(2, 3))).real_angle(), Rational(1, 3));
}

TEST(GenericElement, DeterministicAndAperiodic) {
    const auto a = generic_element({2}, 64, 1);
    EXPECT_EQ(to_json(a).dump(), to_json(generic_element({2}, 64, 1)).dump());
    const auto d = a.part(2).truncated(64);
    std::vector<unsigned> digits;
    for (std::uint64_t j = 0; j < 64; ++j) digits.push_back(DigitSource{"squares", 1}.digit(j, 2));
    EXPECT_EQ(reduce_mod(d.value(), 2, 64), d.value());
    for (std::size_t period = 1; period <= 16; ++period) {
        bool periodic = true;
        for (std::size_t i = 0; i + period < digits.size(); ++i) periodic = periodic && digits[i] == digits[i + period];
        EXPECT_FALSE(periodic) << "period " << period;
    }
    EXPECT_TRUE(generic_element({}, 64, 3).is_zero());
    EXPECT_EQ(kind_of([] { (void)generic_element({2}, 8, 1); }), ErrorKind::PreconditionFailed);
}

TEST(AdeleProperties, WellDefinedOnClasses) {
    Gen g(25);
    for (int i = 0; i < 1000; ++i) {
        const auto a = g.adele();
        const Rational q = g.smooth_rational({2, 3, 5, 7, 11, 13}, 40, 2);
        const RawAdele shifted = with_diagonal(a, q);
        ASSERT_EQ(raw_character_angle(shifted), e_Q(a).angle());
        ASSERT_EQ(canonicalize(shifted), a);
    }
}

TEST(AdeleProperties, CharacterLaw) {
    Gen g(26);
    for (int i = 0; i < 1000; ++i) {
        const auto a = g.adele(), b = g.adele();
        ASSERT_EQ(e_Q(a + b), e_Q(a) + e_Q(b));
    }
}

TEST(AdeleProperties, RationalLinearity) {
    Gen g(27);
    for (int i = 0; i < 1000; ++i) {
        const auto a = g.adele();
        const Rational q1 = g.smooth_rational({2, 3, 5, 7}, 12, 1), q2 = g.smooth_rational({2, 3, 5, 7}, 12, 1);
        ASSERT_EQ(scalar_mul(q1 + q2, a), scalar_mul(q1, a) + scalar_mul(q2, a));
        ASSERT_EQ(scalar_mul(Rational(1), a), a);
        ASSERT_EQ(scalar_mul(q1 * q2, a), scalar_mul(q1, scalar_mul(q2, a)));
    }
}

TEST(AdeleProperties, CanonicalIdempotent) {
    Gen g(28);
    for (int i = 0; i < 1000; ++i) {
        const auto a = g.adele();
        const auto once = canonicalize(a.canonical());
        ASSERT_EQ(once, a);
        ASSERT_EQ(canonicalize(once.canonical()), once);
        ASSERT_EQ(once.canonical().real_angle, a.canonical().real_angle);
    }
}

TEST(AdeleJson, BitExactRoundTrip) {
    Gen g(29);
    for (int i = 0; i < 300; ++i) {
        const auto a = g.adele({2, 3, 5, 7});
        const std::string text = to_json(a).dump();
        const auto back = adele_from_json(nlohmann::json::parse(text));
        ASSERT_EQ(back, a);
        ASSERT_EQ(to_json(back).dump(), text);
    }
    const auto gen = generic_element({2, 3}, 64, 1);
    const auto j = to_json(gen);
    EXPECT_EQ(j["padic"]["2"]["source"]["kind"], "squares");
    EXPECT_EQ(j["padic"]["2"]["precision"], 64);
    EXPECT_EQ(adele_from_json(j).part(2).source()->seed, 1u);
}

TEST(AdeleJson, Rejects) {
    EXPECT_EQ(kind_of([] { (void)adele_from_json(nlohmann::json::parse(R"({"padic":{}})")); }), ErrorKind::ParseError);
    EXPECT_EQ(kind_of([] {
                  (void)adele_from_json(
                      nlohmann::json::parse(R"({"real":"0/1","padic":{"2":{"valuation":0,"digits":[2],"precision":1}}})"));
              }),
              ErrorKind::ParseError);
    EXPECT_EQ(kind_of([] {
                  (void)adele_from_json(nlohmann::json::parse(
                      R"({"real":"0/1","padic":{"2":{"valuation":0,"digits":[0,0],"precision":2,"source":{"kind":"squares","seed":0}}}})"));
              }),
              ErrorKind::ParseError);
}
