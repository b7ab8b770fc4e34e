#include "sumset/padic.hpp"

#include "sumset/errors.hpp"

#include <limits>

namespace sumset::adele {

using exactq::ipow;

namespace {

bool is_square(std::uint64_t n) {
    Integer z(static_cast<unsigned long>(n));
    return mpz_perfect_square_p(z.get_mpz_t()) != 0;
}

}  // namespace

unsigned DigitSource::digit(std::uint64_t index, unsigned long /*prime*/) const {
    if (kind != "squares") fail(ErrorKind::ConfigInvalid, "unknown digit source kind '" + kind + "'");
    return is_square(index + seed * seed) ? 1u : 0u;
}

Rational reduce_mod(const Rational& z, unsigned long prime, long abs_precision) {
    if (z.is_zero()) return Rational(0);
    const long den_exp = exactq::valuation(z.den(), prime);
    if (abs_precision + den_exp <= 0) return Rational(0);
    const Integer modulus = ipow(prime, static_cast<unsigned long>(abs_precision + den_exp));
    const Integer p_part = ipow(prime, static_cast<unsigned long>(den_exp));
    Integer unit_den = z.den() / p_part;
    Integer inv;
    mpz_invert(inv.get_mpz_t(), unit_den.get_mpz_t(), modulus.get_mpz_t());
    Integer m = z.num() * inv;
    mpz_mod(m.get_mpz_t(), m.get_mpz_t(), modulus.get_mpz_t());
    return Rational(m, p_part);
}

PAdicNumber PAdicNumber::exact(unsigned long prime, const Rational& value) {
    if (!exactq::is_prime(prime)) fail(ErrorKind::PreconditionFailed, "p-adic base must be prime");
    PAdicNumber x;
    x.prime_ = prime;
    x.value_ = value;
    return x;
}

PAdicNumber PAdicNumber::approx(unsigned long prime, const Rational& value, long abs_precision) {
    PAdicNumber x;
    x.prime_ = prime;
    x.abs_precision_ = abs_precision;
    x.value_ = reduce_mod(value, prime, abs_precision);
    return x;
}

PAdicNumber PAdicNumber::from_digits(unsigned long prime, long valuation, const std::vector<unsigned>& digits,
                                     std::optional<long> precision) {
    if (!exactq::is_prime(prime)) fail(ErrorKind::PreconditionFailed, "p-adic base must be prime");
    const long n = precision.value_or(static_cast<long>(digits.size()));
    if (n < static_cast<long>(digits.size()))
        fail(ErrorKind::ParseError, "more digits than the stated precision");
    Integer u;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
        if (*it >= prime) fail(ErrorKind::ParseError, "p-adic digit out of range");
        u = u * prime + *it;
    }
    const Rational scale = valuation >= 0 ? Rational(ipow(prime, valuation))
                                          : Rational(Integer(1), ipow(prime, -valuation));
    return approx(prime, Rational(u) * scale, valuation + n);
}

PAdicNumber PAdicNumber::from_source(unsigned long prime, const DigitSource& source, long precision) {
    if (!exactq::is_prime(prime)) fail(ErrorKind::PreconditionFailed, "p-adic base must be prime");
    if (precision < 0) fail(ErrorKind::PreconditionFailed, "negative precision");
    Integer u;
    for (long j = precision - 1; j >= 0; --j) u = u * prime + source.digit(static_cast<std::uint64_t>(j), prime);
    PAdicNumber x = approx(prime, Rational(u), precision);
    x.source_ = source;
    return x;
}

long PAdicNumber::valuation() const {
    if (value_.is_zero()) return abs_precision_.value_or(0);
    return exactq::valuation(value_, prime_);
}

long PAdicNumber::precision() const {
    if (is_exact()) return std::numeric_limits<long>::max();
    return *abs_precision_ - valuation();
}

std::vector<unsigned> PAdicNumber::digits(long count) const {
    if (count < 0) fail(ErrorKind::PreconditionFailed, "negative digit count");
    if (!is_exact() && count > precision())
        fail(ErrorKind::InsufficientPrecision, "requested digits beyond known precision");
    const long v = valuation();
    const Rational r = reduce_mod(value_, prime_, v + count);
    // r * p^-v is an integer
    Rational shifted = v >= 0 ? r / Rational(ipow(prime_, v)) : r * Rational(ipow(prime_, -v));
    Integer u = shifted.num();
    std::vector<unsigned> out(static_cast<std::size_t>(count));
    for (auto& d : out) {
        Integer q, rem;
        mpz_fdiv_qr_ui(q.get_mpz_t(), rem.get_mpz_t(), u.get_mpz_t(), prime_);
        d = static_cast<unsigned>(rem.get_ui());
        u = q;
    }
    return out;
}

bool PAdicNumber::is_zero() const { return value_.is_zero(); }

Rational PAdicNumber::frac() const {
    if (!is_exact() && *abs_precision_ < 0)
        fail(ErrorKind::InsufficientPrecision,
             "p-adic digits at negative positions are unknown (p = " + std::to_string(prime_) + ")");
    return reduce_mod(value_, prime_, 0);
}

PAdicNumber PAdicNumber::truncated(long abs_precision) const {
    const long a = is_exact() ? abs_precision : std::min(abs_precision, *abs_precision_);
    PAdicNumber x = approx(prime_, value_, a);
    if (source_ && a >= 0) x.source_ = source_;
    return x;
}

PAdicNumber PAdicNumber::extended(long abs_precision) const {
    if (!source_) fail(ErrorKind::InsufficientPrecision, "cannot extend digits without a digit source");
    return from_source(prime_, *source_, abs_precision);
}

PAdicNumber PAdicNumber::scaled(const Rational& q) const {
    if (q.is_zero()) return exact(prime_, Rational(0));
    if (is_exact()) return exact(prime_, q * value_);
    const long shift = exactq::valuation(q, prime_);
    const PAdicNumber base = (source_ && shift < 0) ? extended(*abs_precision_ - shift) : *this;
    return approx(prime_, q * base.value_, *base.abs_precision_ + shift);
}

PAdicNumber PAdicNumber::operator-() const {
    if (is_exact()) return exact(prime_, -value_);
    return approx(prime_, -value_, *abs_precision_);
}

PAdicNumber operator+(const PAdicNumber& a, const PAdicNumber& b) {
    if (a.prime_ != b.prime_) fail(ErrorKind::PreconditionFailed, "adding p-adic numbers of different primes");
    if (a.is_exact() && b.is_exact()) return PAdicNumber::exact(a.prime_, a.value_ + b.value_);
    const long prec = std::min(a.abs_precision_.value_or(std::numeric_limits<long>::max()),
                               b.abs_precision_.value_or(std::numeric_limits<long>::max()));
    return PAdicNumber::approx(a.prime_, a.value_ + b.value_, prec);
}

PAdicNumber PAdicNumber::add_rational(const Rational& q) const {
    if (is_exact()) return exact(prime_, value_ + q);
    return approx(prime_, value_ + q, *abs_precision_);
}

bool PAdicNumber::agrees_with(const PAdicNumber& other) const {
    if (prime_ != other.prime_) return false;
    if (is_exact() && other.is_exact()) return value_ == other.value_;
    const long prec = std::min(abs_precision_.value_or(std::numeric_limits<long>::max()),
                               other.abs_precision_.value_or(std::numeric_limits<long>::max()));
    return reduce_mod(value_ - other.value_, prime_, prec).is_zero();
}

}  // namespace sumset::adele
