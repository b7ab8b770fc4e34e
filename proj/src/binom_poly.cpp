#include "sumset/binom_poly.hpp"

#include "sumset/errors.hpp"

#include <cctype>

namespace sumset::exactq {

Rational binom(const Rational& x, unsigned j) {
    Rational out(1);
    for (unsigned i = 0; i < j; ++i) out *= (x - Rational(static_cast<long>(i))) / Rational(static_cast<long>(i + 1));
    return out;
}

Rational PowerPoly::operator()(const Rational& x) const {
    Rational acc;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
}

namespace {

void add_term(std::vector<Rational>& coeffs, std::size_t exp, const Rational& c) {
    if (coeffs.size() <= exp) coeffs.resize(exp + 1);
    coeffs[exp] += c;
}

}  // namespace

PowerPoly PowerPoly::parse(std::string_view text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch)) && ch != '*') s.push_back(ch);
    if (s.empty()) fail(ErrorKind::ParseError, "empty polynomial");
    const auto bad = [&] { fail(ErrorKind::ParseError, "malformed polynomial '" + s + "'"); };

    PowerPoly out;
    std::size_t i = 0;
    while (i < s.size()) {
        bool negative = false;
        if (s[i] == '+' || s[i] == '-') {
            negative = s[i] == '-';
            ++i;
        } else if (i != 0) {
            bad();
        }
        const std::size_t start = i;
        while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/')) ++i;
        const bool has_coeff = i > start;
        const Rational c = has_coeff ? Rational::parse(s.substr(start, i - start)) : Rational(1);
        std::size_t exp = 0;
        if (i < s.size() && s[i] == 'x') {
            ++i;
            exp = 1;
            if (i < s.size() && s[i] == '^') {
                const std::size_t e0 = ++i;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
                if (i == e0) bad();
                exp = std::stoul(s.substr(e0, i - e0));
            }
        } else if (!has_coeff) {
            bad();
        }
        if (i < s.size() && s[i] != '+' && s[i] != '-') bad();
        add_term(out.coeffs, exp, negative ? -c : c);
    }
    while (!out.coeffs.empty() && out.coeffs.back().is_zero()) out.coeffs.pop_back();
    return out;
}

BinomPoly::BinomPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

BinomPoly BinomPoly::monomial(unsigned j, const Rational& c) {
    std::vector<Rational> v(j + 1);
    v[j] = c;
    return BinomPoly(std::move(v));
}

void BinomPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

bool BinomPoly::integer_valued() const {
    for (const auto& c : coeffs_)
        if (!c.is_integer()) return false;
    return true;
}

Rational BinomPoly::operator()(const Rational& x) const {
    Rational acc;
    Rational b(1);  // C(x, j), updated incrementally
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        if (j > 0) b = b * (x - Rational(static_cast<long>(j - 1))) / Rational(static_cast<long>(j));
        acc += coeffs_[j] * b;
    }
    return acc;
}

BinomPoly operator+(const BinomPoly& a, const BinomPoly& b) {
    std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = a.coeff(j) + b.coeff(j);
    return BinomPoly(std::move(out));
}

BinomPoly operator-(const BinomPoly& a, const BinomPoly& b) { return a + Rational(-1) * b; }

BinomPoly operator*(const Rational& s, const BinomPoly& p) {
    std::vector<Rational> out = p.coeffs_;
    for (auto& c : out) c *= s;
    return BinomPoly(std::move(out));
}

BinomPoly shift_diff(const BinomPoly& p, const Rational& r) {
    // C(q+r, j) = sum_i C(q, i) C(r, j-i)
    const auto& c = p.coeffs();
    std::vector<Rational> out(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        Rational acc;
        for (std::size_t j = i + 1; j < c.size(); ++j) acc += c[j] * binom(r, static_cast<unsigned>(j - i));
        out[i] = acc;
    }
    return BinomPoly(std::move(out));
}

Rational leading_power_coeff(const BinomPoly& p) {
    if (p.is_zero()) return Rational(0);
    Rational fact(1);
    for (int i = 2; i <= p.degree(); ++i) fact *= Rational(i);
    return p.coeffs().back() / fact;
}

std::vector<BinomPoly> derived_sequence(const BinomPoly& p) {
    const int d = p.degree();
    if (d < 1) fail(ErrorKind::ConstantPolynomial, "derived sequence needs a nonconstant polynomial");
    if (!p(Rational(0)).is_zero()) fail(ErrorKind::PreconditionFailed, "derived sequence needs P(0) = 0");

    std::vector<BinomPoly> seq{p};
    for (int j = 1; j < d; ++j) {
        const BinomPoly& prev = seq.back();
        BinomPoly next = shift_diff(prev, Rational(1)) - BinomPoly({prev(Rational(1))});
        seq.push_back(std::move(next));
    }

    Rational d_fact(1);
    for (int i = 2; i <= d; ++i) d_fact *= Rational(i);
    const BinomPoly expected({Rational(0), d_fact * leading_power_coeff(p)});
    if (!(seq.back() == expected))
        fail(ErrorKind::PreconditionFailed, "derived sequence did not end in d! a_d x");
    return seq;
}

BinomPoly to_binomial(const PowerPoly& p) {
    // c_j = (Delta^j P)(0), from values at 0..d.
    const std::size_t n = p.coeffs.size();
    std::vector<Rational> vals(n);
    for (std::size_t i = 0; i < n; ++i) vals[i] = p(Rational(static_cast<long>(i)));
    std::vector<Rational> out(n);
    for (std::size_t j = 0; j < n; ++j) {
        out[j] = vals[0];
        for (std::size_t i = 0; i + 1 < vals.size() - j; ++i) vals[i] = vals[i + 1] - vals[i];
    }
    return BinomPoly(std::move(out));
}

PowerPoly to_power(const BinomPoly& p) {
    PowerPoly out;
    out.coeffs.assign(p.coeffs().size(), Rational(0));
    std::vector<Rational> falling{Rational(1)};  // x(x-1)...(x-j+1) / j!
    for (std::size_t j = 0; j < p.coeffs().size(); ++j) {
        if (j > 0) {
            std::vector<Rational> next(falling.size() + 1);
            const Rational shift(static_cast<long>(j - 1));
            const Rational scale = Rational(1) / Rational(static_cast<long>(j));
            for (std::size_t i = 0; i < falling.size(); ++i) {
                next[i + 1] += falling[i] * scale;
                next[i] -= falling[i] * shift * scale;
            }
            falling = std::move(next);
        }
        for (std::size_t i = 0; i < falling.size(); ++i) out.coeffs[i] += p.coeffs()[j] * falling[i];
    }
    while (!out.coeffs.empty() && out.coeffs.back().is_zero()) out.coeffs.pop_back();
    return out;
}

}  // namespace sumset::exactq
