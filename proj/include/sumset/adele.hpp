#pragma once

#include "sumset/padic.hpp"

#include <complex>
#include <map>
#include <optional>
#include <vector>

#include <json.hpp>

namespace sumset::adele {

/// Point of the circle R/Z as an exact rational angle.
class CircleValue {
public:
    CircleValue() = default;
    explicit CircleValue(const Rational& angle) : angle_(angle.frac()) {}

    const Rational& angle() const noexcept { return angle_; }
    std::complex<double> to_complex() const;

    friend CircleValue operator+(const CircleValue& a, const CircleValue& b) { return CircleValue(a.angle_ + b.angle_); }
    friend CircleValue operator-(const CircleValue& a, const CircleValue& b) { return CircleValue(a.angle_ - b.angle_); }
    CircleValue operator-() const { return CircleValue(-angle_); }
    CircleValue& operator+=(const CircleValue& o) { return *this = *this + o; }
    friend bool operator==(const CircleValue&, const CircleValue&) = default;

private:
    Rational angle_;
};

using PartMap = std::map<unsigned long, PAdicNumber>;

/// Adele with a rational real part, finitely many listed Q_p parts, and the
/// same rational `tail` at every unlisted prime. Not reduced modulo Q.
struct RawAdele {
    Rational real;
    PartMap parts;
    Rational tail;
};

/// The unique representative with real part in [0,1) and every finite part in Z_p.
/// Unlisted primes all carry `tail`, which is p-integral there.
struct CanonicalForm {
    Rational real_angle;
    PartMap parts;
    Rational tail;
};

/// Point of A/Q. Stored as the unique representative that is zero at all
/// unlisted primes: real part in Q (any size) plus finitely many Q_p parts.
/// Exact-zero parts are dropped; approximate zeros are kept for their precision.
class AdeleClassElement {
public:
    AdeleClassElement() = default;

    static AdeleClassElement zero() { return {}; }
    static AdeleClassElement from_real(const Rational& real);
    static AdeleClassElement from_parts(const Rational& real, PartMap parts);

    const Rational& real() const noexcept { return real_; }
    const PartMap& parts() const noexcept { return parts_; }
    /// Listed part at p, or an exact zero.
    PAdicNumber part(unsigned long p) const;

    /// (real - sum_p frac_p(part_p)) mod 1; InsufficientPrecision if some
    /// negative-position digit is unknown.
    Rational real_angle() const;
    CanonicalForm canonical() const;
    bool is_zero() const;
    /// Smallest absolute precision over approximate parts.
    std::optional<long> min_abs_precision() const;

    AdeleClassElement operator-() const;
    friend AdeleClassElement operator+(const AdeleClassElement& a, const AdeleClassElement& b);
    friend AdeleClassElement operator-(const AdeleClassElement& a, const AdeleClassElement& b) { return a + (-b); }
    friend bool operator==(const AdeleClassElement& a, const AdeleClassElement& b);

private:
    void drop_exact_zeros();

    Rational real_;
    PartMap parts_;
};

enum class CharacterSign { Standard, Flipped };

Rational frac_p(const PAdicNumber& x);

AdeleClassElement canonicalize(const RawAdele& raw);
AdeleClassElement canonicalize(const CanonicalForm& form);
/// Character angle computed directly on a raw adele, without reducing it first.
Rational raw_character_angle(const RawAdele& raw);
/// The element a shifted by the diagonal image of q, as a raw adele.
RawAdele with_diagonal(const AdeleClassElement& a, const Rational& q);

CircleValue e_Q(const AdeleClassElement& a, CharacterSign sign = CharacterSign::Standard);
AdeleClassElement scalar_mul(const Rational& q, const AdeleClassElement& a);
inline AdeleClassElement add(const AdeleClassElement& a, const AdeleClassElement& b) { return a + b; }

/// Real part 0 and a "squares" digit stream at each listed prime, known to
/// `precision` digits. precision >= 16.
AdeleClassElement generic_element(const std::vector<unsigned long>& primes, long precision, std::uint64_t seed);

nlohmann::json to_json(const AdeleClassElement& a);
AdeleClassElement adele_from_json(const nlohmann::json& j);
nlohmann::json to_json(const PAdicNumber& x);
PAdicNumber padic_from_json(unsigned long prime, const nlohmann::json& j);

}  // namespace sumset::adele
