#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace sumset::exactq {

using Integer = mpz_class;

/// Exact rational number, always stored in lowest terms with a positive
/// denominator. Zero is 0/1.
class Rational {
public:
    Rational() = default;
    Rational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(const Integer& value) : q_(value) {}  // NOLINT
    Rational(const Integer& num, const Integer& den);
    Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}
    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    /// Parses "n", "-n" or "n/d" (d != 0).
    static Rational parse(std::string_view text);

    Integer num() const { return q_.get_num(); }
    Integer den() const { return q_.get_den(); }
    const mpq_class& raw() const noexcept { return q_; }

    bool is_zero() const noexcept { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const noexcept { return sgn(q_); }

    /// Largest integer <= *this.
    Integer floor() const;
    /// *this - floor(*this), in [0, 1).
    Rational frac() const;
    /// Distance to the nearest integer, in [0, 1/2].
    Rational dist_to_int() const;
    Rational abs() const;
    Rational inverse() const;

    double to_double() const { return q_.get_d(); }
    /// Text form "num/den" (denominator always present).
    std::string str() const;

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_class q_;
};

/// Exponent of the prime p in n (n != 0).
long valuation(const Integer& n, unsigned long p);
/// v_p of a nonzero rational.
long valuation(const Rational& r, unsigned long p);
/// p^e for e >= 0.
Integer ipow(unsigned long p, unsigned long e);
Rational pow(const Rational& base, unsigned long e);
/// Prime divisors of |n| in increasing order (trial division; n is small in practice).
std::vector<unsigned long> prime_divisors(Integer n);
bool is_prime(unsigned long n);

}  // namespace sumset::exactq

template <>
struct std::hash<sumset::exactq::Rational> {
    std::size_t operator()(const sumset::exactq::Rational& r) const noexcept;
};
