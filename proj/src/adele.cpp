#include "sumset/adele.hpp"

#include "sumset/errors.hpp"

#include <cmath>
#include <numbers>

namespace sumset::adele {

std::complex<double> CircleValue::to_complex() const {
    const double t = 2.0 * std::numbers::pi * angle_.to_double();
    return {std::cos(t), std::sin(t)};
}

Rational frac_p(const PAdicNumber& x) { return x.frac(); }

AdeleClassElement AdeleClassElement::from_real(const Rational& real) {
    AdeleClassElement a;
    a.real_ = real;
    return a;
}

AdeleClassElement AdeleClassElement::from_parts(const Rational& real, PartMap parts) {
    for (const auto& [p, x] : parts)
        if (x.prime() != p) fail(ErrorKind::PreconditionFailed, "p-adic part filed under the wrong prime");
    AdeleClassElement a;
    a.real_ = real;
    a.parts_ = std::move(parts);
    a.drop_exact_zeros();
    return a;
}

void AdeleClassElement::drop_exact_zeros() {
    std::erase_if(parts_, [](const auto& kv) { return kv.second.is_exact() && kv.second.is_zero(); });
}

PAdicNumber AdeleClassElement::part(unsigned long p) const {
    auto it = parts_.find(p);
    return it == parts_.end() ? PAdicNumber::exact(p, Rational(0)) : it->second;
}

Rational AdeleClassElement::real_angle() const {
    Rational t = real_;
    for (const auto& [p, x] : parts_) t -= x.frac();
    return t.frac();
}

CanonicalForm AdeleClassElement::canonical() const {
    CanonicalForm out;
    out.real_angle = real_angle();
    out.tail = out.real_angle - real_;
    for (const auto& [p, x] : parts_) out.parts.emplace(p, x.add_rational(out.tail));
    return out;
}

bool AdeleClassElement::is_zero() const { return *this == zero(); }

std::optional<long> AdeleClassElement::min_abs_precision() const {
    std::optional<long> out;
    for (const auto& [p, x] : parts_)
        if (auto a = x.abs_precision()) out = out ? std::min(*out, *a) : *a;
    return out;
}

AdeleClassElement AdeleClassElement::operator-() const {
    AdeleClassElement a;
    a.real_ = -real_;
    for (const auto& [p, x] : parts_) a.parts_.emplace(p, -x);
    return a;
}

AdeleClassElement operator+(const AdeleClassElement& a, const AdeleClassElement& b) {
    AdeleClassElement out;
    out.real_ = a.real_ + b.real_;
    out.parts_ = a.parts_;
    for (const auto& [p, y] : b.parts_) {
        auto it = out.parts_.find(p);
        if (it == out.parts_.end())
            out.parts_.emplace(p, y);
        else
            it->second = it->second + y;
    }
    out.drop_exact_zeros();
    return out;
}

bool operator==(const AdeleClassElement& a, const AdeleClassElement& b) {
    if (a.real_ != b.real_) return false;
    for (const auto& [p, x] : a.parts_)
        if (!x.agrees_with(b.part(p))) return false;
    for (const auto& [p, y] : b.parts_)
        if (!a.parts_.contains(p) && !y.agrees_with(a.part(p))) return false;
    return true;
}

AdeleClassElement canonicalize(const RawAdele& raw) {
    PartMap parts;
    for (const auto& [p, x] : raw.parts) parts.emplace(p, x.add_rational(-raw.tail));
    return AdeleClassElement::from_parts(raw.real - raw.tail, std::move(parts));
}

AdeleClassElement canonicalize(const CanonicalForm& form) {
    return canonicalize(RawAdele{form.real_angle, form.parts, form.tail});
}

Rational raw_character_angle(const RawAdele& raw) {
    Rational t = raw.real;
    for (const auto& [p, x] : raw.parts) t -= x.frac();
    if (!raw.tail.is_zero()) {
        for (unsigned long l : exactq::prime_divisors(raw.tail.den()))
            if (!raw.parts.contains(l)) t -= reduce_mod(raw.tail, l, 0);
    }
    return t.frac();
}

RawAdele with_diagonal(const AdeleClassElement& a, const Rational& q) {
    RawAdele raw{a.real() + q, {}, q};
    for (const auto& [p, x] : a.parts()) raw.parts.emplace(p, x.add_rational(q));
    return raw;
}

CircleValue e_Q(const AdeleClassElement& a, CharacterSign sign) {
    const CircleValue v(a.real_angle());
    return sign == CharacterSign::Standard ? v : -v;
}

AdeleClassElement scalar_mul(const Rational& q, const AdeleClassElement& a) {
    if (q.is_zero()) return AdeleClassElement::zero();
    PartMap parts;
    for (const auto& [p, x] : a.parts()) parts.emplace(p, x.scaled(q));
    return AdeleClassElement::from_parts(q * a.real(), std::move(parts));
}

AdeleClassElement generic_element(const std::vector<unsigned long>& primes, long precision, std::uint64_t seed) {
    if (precision < 16) fail(ErrorKind::PreconditionFailed, "generic_element needs precision >= 16");
    PartMap parts;
    for (unsigned long p : primes) parts.emplace(p, PAdicNumber::from_source(p, DigitSource{"squares", seed}, precision));
    return AdeleClassElement::from_parts(Rational(0), std::move(parts));
}

nlohmann::json to_json(const PAdicNumber& x) {
    if (x.is_exact()) return {{"exact", x.value().str()}};
    nlohmann::json j;
    j["valuation"] = x.valuation();
    j["precision"] = x.precision();
    j["digits"] = x.digits(x.precision());
    if (x.source()) j["source"] = {{"kind", x.source()->kind}, {"seed", x.source()->seed}};
    return j;
}

PAdicNumber padic_from_json(unsigned long prime, const nlohmann::json& j) {
    try {
        if (j.contains("exact")) return PAdicNumber::exact(prime, Rational::parse(j.at("exact").get<std::string>()));
        const long v = j.at("valuation").get<long>();
        const long n = j.at("precision").get<long>();
        const auto digits = j.at("digits").get<std::vector<unsigned>>();
        PAdicNumber x = PAdicNumber::from_digits(prime, v, digits, n);
        if (j.contains("source")) {
            const DigitSource src{j.at("source").at("kind").get<std::string>(),
                                  j.at("source").at("seed").get<std::uint64_t>()};
            if (v + n < 0) fail(ErrorKind::ParseError, "digit source with negative absolute precision");
            PAdicNumber y = PAdicNumber::from_source(prime, src, v + n);
            if (!y.agrees_with(x)) fail(ErrorKind::ParseError, "digits disagree with their declared source");
            x = y;
        }
        return x;
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorKind::ParseError, std::string("bad p-adic JSON: ") + e.what());
    }
}

nlohmann::json to_json(const AdeleClassElement& a) {
    nlohmann::json padic = nlohmann::json::object();
    for (const auto& [p, x] : a.parts()) padic[std::to_string(p)] = to_json(x);
    return {{"real", a.real().str()}, {"padic", padic}};
}

AdeleClassElement adele_from_json(const nlohmann::json& j) {
    try {
        const Rational real = Rational::parse(j.at("real").get<std::string>());
        PartMap parts;
        if (j.contains("padic")) {
            for (const auto& [key, val] : j.at("padic").items()) {
                const unsigned long p = std::stoul(key);
                parts.emplace(p, padic_from_json(p, val));
            }
        }
        return AdeleClassElement::from_parts(real, std::move(parts));
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorKind::ParseError, std::string("bad adele JSON: ") + e.what());
    } catch (const std::logic_error& e) {
        fail(ErrorKind::ParseError, std::string("bad adele JSON: ") + e.what());
    }
}

}  // namespace sumset::adele
