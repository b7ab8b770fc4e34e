#pragma once

#include "sumset/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sumset::adele {

using exactq::Integer;
using exactq::Rational;

/// Deterministic digit generator for lazily extended p-adic integers.
/// kind "squares": digit j is 1 when j + seed^2 is a perfect square, else 0,
/// so digit 0 is always 1 and every stream is a p-adic unit.
/// The gaps between squares grow, so the stream is never eventually periodic.
struct DigitSource {
    std::string kind = "squares";
    std::uint64_t seed = 0;

    unsigned digit(std::uint64_t index, unsigned long prime) const;
    friend bool operator==(const DigitSource&, const DigitSource&) = default;
};

/// Element of Q_p, either known exactly (a rational number) or known modulo
/// p^A for an absolute precision A (digits at positions < A are known).
///
/// Approximate values are stored through their unique representative r with
/// p-power denominator and 0 <= r < p^A. Operations that need digits beyond
/// what is known throw InsufficientPrecision.
class PAdicNumber {
public:
    PAdicNumber() = default;

    static PAdicNumber exact(unsigned long prime, const Rational& value);
    /// digits[i] is the coefficient of p^(valuation + i); precision defaults to digits.size().
    static PAdicNumber from_digits(unsigned long prime, long valuation, const std::vector<unsigned>& digits,
                                   std::optional<long> precision = std::nullopt);
    /// p-adic integer whose digit j is source.digit(j); known to `precision` digits.
    static PAdicNumber from_source(unsigned long prime, const DigitSource& source, long precision);

    unsigned long prime() const noexcept { return prime_; }
    bool is_exact() const noexcept { return !abs_precision_.has_value(); }
    const std::optional<DigitSource>& source() const noexcept { return source_; }
    /// Absolute precision A; nullopt for exact numbers.
    std::optional<long> abs_precision() const noexcept { return abs_precision_; }
    /// Position of the lowest nonzero digit; for a (known-)zero value, the absolute precision
    /// (or 0 for an exact zero).
    long valuation() const;
    /// Number of known digits from the valuation on (abs precision - valuation).
    long precision() const;
    /// The first `count` digits from the valuation on; count <= precision() for approximations.
    std::vector<unsigned> digits(long count) const;

    /// Exactly zero, or every known digit zero.
    bool is_zero() const;
    /// Unique r in [0, 1) with p-power denominator such that x - r lies in Z_p.
    Rational frac() const;
    /// Value reduced to absolute precision A (an approximation even if exact before).
    PAdicNumber truncated(long abs_precision) const;
    /// Copy with the digit stream regenerated to absolute precision A (requires a source).
    PAdicNumber extended(long abs_precision) const;

    PAdicNumber scaled(const Rational& q) const;
    PAdicNumber operator-() const;
    friend PAdicNumber operator+(const PAdicNumber& a, const PAdicNumber& b);
    friend PAdicNumber operator-(const PAdicNumber& a, const PAdicNumber& b) { return a + (-b); }
    PAdicNumber add_rational(const Rational& q) const;

    /// Equal modulo p^min(A_a, A_b); exact equality when both are exact.
    bool agrees_with(const PAdicNumber& other) const;
    /// Exact value, or the truncated representative for approximations.
    const Rational& value() const noexcept { return value_; }

    friend bool operator==(const PAdicNumber& a, const PAdicNumber& b) { return a.agrees_with(b); }

private:
    unsigned long prime_ = 2;
    Rational value_;
    std::optional<long> abs_precision_;  // empty: exact
    std::optional<DigitSource> source_;

    static PAdicNumber approx(unsigned long prime, const Rational& value, long abs_precision);
};

/// Representative of z modulo p^A: the unique r in [0, p^A) with p-power denominator.
Rational reduce_mod(const Rational& z, unsigned long prime, long abs_precision);

}  // namespace sumset::adele
