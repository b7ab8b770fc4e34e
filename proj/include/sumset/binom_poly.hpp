#pragma once

#include "sumset/rational.hpp"

#include <string_view>
#include <vector>

namespace sumset::exactq {

/// Generalized binomial coefficient x(x-1)...(x-j+1)/j!.
Rational binom(const Rational& x, unsigned j);

/// Polynomial in the power basis, coeffs[i] multiplies x^i. Used as a view
/// and for parsing; BinomPoly is the working representation.
struct PowerPoly {
    std::vector<Rational> coeffs;

    Rational operator()(const Rational& x) const;
    /// Parses sums of terms like "x^2", "3/2x^3", "-x", "7" (spaces allowed, '*' optional).
    static PowerPoly parse(std::string_view text);
};

/// P(x) = sum_j c_j * C(x, j). Trailing zero coefficients are trimmed, so
/// coeffs().size() - 1 is the degree; the zero polynomial has no coefficients.
class BinomPoly {
public:
    BinomPoly() = default;
    explicit BinomPoly(std::vector<Rational> coeffs);

    static BinomPoly monomial(unsigned j, const Rational& c = Rational(1));

    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
    Rational coeff(std::size_t j) const { return j < coeffs_.size() ? coeffs_[j] : Rational(0); }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    /// All c_j integral, i.e. P maps Z to Z.
    bool integer_valued() const;

    Rational operator()(const Rational& x) const;

    friend BinomPoly operator+(const BinomPoly& a, const BinomPoly& b);
    friend BinomPoly operator-(const BinomPoly& a, const BinomPoly& b);
    friend BinomPoly operator*(const Rational& s, const BinomPoly& p);
    friend bool operator==(const BinomPoly& a, const BinomPoly& b) = default;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

inline Rational eval_poly(const BinomPoly& p, const Rational& q) { return p(q); }

/// Q_r(q) = P(q + r) - P(q).
BinomPoly shift_diff(const BinomPoly& p, const Rational& r);

/// P_0 = P, P_j(x) = P_{j-1}(x+1) - P_{j-1}(x) - P_{j-1}(1), up to P_{d-1}.
/// Requires deg P >= 1 (ConstantPolynomial) and P(0) = 0 (PreconditionFailed).
/// The last element is checked to equal d! * a_d * x.
std::vector<BinomPoly> derived_sequence(const BinomPoly& p);

BinomPoly to_binomial(const PowerPoly& p);
PowerPoly to_power(const BinomPoly& p);

/// Leading power-basis coefficient a_d = c_d / d!.
Rational leading_power_coeff(const BinomPoly& p);

}  // namespace sumset::exactq
