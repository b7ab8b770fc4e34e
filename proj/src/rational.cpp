#include "sumset/rational.hpp"

#include "sumset/errors.hpp"

#include <ostream>

namespace sumset::exactq {

Rational::Rational(const Integer& num, const Integer& den) {
    if (den == 0) fail(ErrorKind::ParseError, "zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    while (!s.empty() && s.front() == ' ') s.erase(s.begin());
    while (!s.empty() && s.back() == ' ') s.pop_back();
    if (s.empty()) fail(ErrorKind::ParseError, "empty rational");
    const auto slash = s.find('/');
    Integer num, den(1);
    try {
        if (slash == std::string::npos) {
            num = Integer(s, 10);
        } else {
            num = Integer(s.substr(0, slash), 10);
            den = Integer(s.substr(slash + 1), 10);
        }
    } catch (const std::invalid_argument&) {
        fail(ErrorKind::ParseError, "malformed rational '" + s + "'");
    }
    if (den == 0) fail(ErrorKind::ParseError, "zero denominator in '" + s + "'");
    return Rational(num, den);
}

Integer Rational::floor() const {
    Integer out;
    mpz_fdiv_q(out.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return out;
}

Rational Rational::frac() const { return *this - Rational(floor()); }

Rational Rational::dist_to_int() const {
    const Rational f = frac();
    const Rational g = Rational(1) - f;
    return f < g ? f : g;
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational Rational::inverse() const {
    if (is_zero()) fail(ErrorKind::PreconditionFailed, "inverse of zero");
    return Rational(den(), num());
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) fail(ErrorKind::PreconditionFailed, "division by zero");
    q_ /= o.q_;
    return *this;
}

std::string Rational::str() const {
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

long valuation(const Integer& n, unsigned long p) {
    if (n == 0) fail(ErrorKind::PreconditionFailed, "valuation of zero");
    Integer m = n;
    long e = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
        mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
        ++e;
    }
    return e;
}

long valuation(const Rational& r, unsigned long p) {
    return valuation(r.num(), p) - valuation(r.den(), p);
}

Integer ipow(unsigned long p, unsigned long e) {
    Integer out;
    mpz_ui_pow_ui(out.get_mpz_t(), p, e);
    return out;
}

Rational pow(const Rational& base, unsigned long e) {
    Rational out(1);
    for (unsigned long i = 0; i < e; ++i) out *= base;
    return out;
}

std::vector<unsigned long> prime_divisors(Integer n) {
    std::vector<unsigned long> out;
    if (n < 0) n = -n;
    for (unsigned long p = 2; n > 1; ++p) {
        if (Integer(p) * p > n) {
            if (!n.fits_ulong_p()) fail(ErrorKind::PreconditionFailed, "prime factor too large");
            out.push_back(n.get_ui());
            break;
        }
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            out.push_back(p);
            while (mpz_divisible_ui_p(n.get_mpz_t(), p)) mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
        }
    }
    return out;
}

bool is_prime(unsigned long n) {
    if (n < 2) return false;
    for (unsigned long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace sumset::exactq

std::size_t std::hash<sumset::exactq::Rational>::operator()(
    const sumset::exactq::Rational& r) const noexcept {
    const std::size_t h1 = mpz_get_ui(r.raw().get_num_mpz_t());
    const std::size_t h2 = mpz_get_ui(r.raw().get_den_mpz_t());
    return h1 * 1000003u ^ h2 ^ static_cast<std::size_t>(r.sign() + 1);
}
