#pragma once

#include "sumset/adele.hpp"

#include <span>
#include <vector>

namespace sumset::phasepoly {

using adele::AdeleClassElement;
using adele::CircleValue;
using exactq::Rational;

/// phi(q) = c * e_Q(sum_j C(q, j) a_j), coefficients a_1..a_k stored in
/// coeffs()[0..k-1]. Trailing zero coefficients are trimmed, so degree() is k.
class PhasePolynomial {
public:
    PhasePolynomial() = default;
    PhasePolynomial(CircleValue c, std::vector<AdeleClassElement> coeffs);

    static PhasePolynomial trivial() { return {}; }

    const CircleValue& constant() const noexcept { return c_; }
    const std::vector<AdeleClassElement>& coeffs() const noexcept { return coeffs_; }
    /// a_j for j >= 1 (zero beyond the degree).
    AdeleClassElement coeff(std::size_t j) const;
    int degree() const noexcept { return static_cast<int>(coeffs_.size()); }
    bool is_trivial() const;

    CircleValue operator()(const Rational& q) const;

    friend bool operator==(const PhasePolynomial& a, const PhasePolynomial& b);

private:
    CircleValue c_;
    std::vector<AdeleClassElement> coeffs_;
};

/// eta(q_1..q_k) = e_Q(q_1 ... q_k alpha).
struct MultilinearForm {
    int arity = 0;
    AdeleClassElement generator;

    CircleValue operator()(std::span<const Rational> q) const;
    bool is_zero() const { return generator.is_zero(); }
};

inline CircleValue eval_phase(const PhasePolynomial& phi, const Rational& q) { return phi(q); }

/// Delta_q phi as a tuple: constant phi(q) - c, a'_i = sum_{j>i} C(q, j-i) a_j.
/// A degree-0 phase has trivial derivative; with `strict`, asking a degree-0
/// phase for a nonzero-direction derivative throws ZeroDegree instead.
PhasePolynomial phase_derivative(const PhasePolynomial& phi, const Rational& q, bool strict = false);

/// sum over J in {1..k} of (-1)^(k-|J|) angle(phase(sum_{j in J} q_j)).
/// Any callable Rational -> CircleValue is accepted (lookup tables included).
template <class Phase>
CircleValue multilinearize(const Phase& phase, std::span<const Rational> q) {
    const std::size_t k = q.size();
    CircleValue acc;
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
        Rational s;
        std::size_t size = 0;
        for (std::size_t j = 0; j < k; ++j)
            if (mask >> j & 1) {
                s += q[j];
                ++size;
            }
        const CircleValue v = phase(s);
        acc += (k - size) % 2 == 0 ? v : -v;
    }
    return acc;
}

/// The form with generator a_k, k = deg phi.
MultilinearForm leading_coefficient(const PhasePolynomial& phi);

PhasePolynomial phase_product(const PhasePolynomial& a, const PhasePolynomial& b);
PhasePolynomial inverse(const PhasePolynomial& a);

nlohmann::json to_json(const PhasePolynomial& phi);
PhasePolynomial phase_from_json(const nlohmann::json& j);

}  // namespace sumset::phasepoly
