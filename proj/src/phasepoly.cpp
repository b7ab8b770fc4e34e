#include "sumset/phasepoly.hpp"

#include "sumset/binom_poly.hpp"
#include "sumset/errors.hpp"

namespace sumset::phasepoly {

using adele::e_Q;
using adele::scalar_mul;
using exactq::binom;

PhasePolynomial::PhasePolynomial(CircleValue c, std::vector<AdeleClassElement> coeffs)
    : c_(std::move(c)), coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

AdeleClassElement PhasePolynomial::coeff(std::size_t j) const {
    if (j == 0 || j > coeffs_.size()) return AdeleClassElement::zero();
    return coeffs_[j - 1];
}

bool PhasePolynomial::is_trivial() const { return coeffs_.empty() && c_.angle().is_zero(); }

CircleValue PhasePolynomial::operator()(const Rational& q) const {
    CircleValue acc = c_;
    for (std::size_t j = 1; j <= coeffs_.size(); ++j)
        acc += e_Q(scalar_mul(binom(q, static_cast<unsigned>(j)), coeffs_[j - 1]));
    return acc;
}

bool operator==(const PhasePolynomial& a, const PhasePolynomial& b) {
    return a.c_ == b.c_ && a.coeffs_ == b.coeffs_;
}

CircleValue MultilinearForm::operator()(std::span<const Rational> q) const {
    if (static_cast<int>(q.size()) != arity) fail(ErrorKind::PreconditionFailed, "multilinear form arity mismatch");
    Rational prod(1);
    for (const auto& x : q) prod *= x;
    return e_Q(scalar_mul(prod, generator));
}

PhasePolynomial phase_derivative(const PhasePolynomial& phi, const Rational& q, bool strict) {
    const std::size_t k = phi.coeffs().size();
    if (k == 0) {
        if (strict && !q.is_zero()) fail(ErrorKind::ZeroDegree, "cannot lower the degree of a constant phase");
        return PhasePolynomial::trivial();
    }
    std::vector<AdeleClassElement> next(k - 1);
    for (std::size_t i = 1; i < k; ++i)
        for (std::size_t j = i + 1; j <= k; ++j)
            next[i - 1] = next[i - 1] + scalar_mul(binom(q, static_cast<unsigned>(j - i)), phi.coeff(j));
    return PhasePolynomial(phi(q) - phi.constant(), std::move(next));
}

MultilinearForm leading_coefficient(const PhasePolynomial& phi) {
    const int k = phi.degree();
    return MultilinearForm{k, k == 0 ? AdeleClassElement::zero() : phi.coeffs().back()};
}

PhasePolynomial phase_product(const PhasePolynomial& a, const PhasePolynomial& b) {
    std::vector<AdeleClassElement> out(std::max(a.coeffs().size(), b.coeffs().size()));
    for (std::size_t j = 1; j <= out.size(); ++j) out[j - 1] = a.coeff(j) + b.coeff(j);
    return PhasePolynomial(a.constant() + b.constant(), std::move(out));
}

PhasePolynomial inverse(const PhasePolynomial& a) {
    std::vector<AdeleClassElement> out;
    for (const auto& x : a.coeffs()) out.push_back(-x);
    return PhasePolynomial(-a.constant(), std::move(out));
}

nlohmann::json to_json(const PhasePolynomial& phi) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& a : phi.coeffs()) coeffs.push_back(adele::to_json(a));
    return {{"c", phi.constant().angle().str()}, {"coeffs", coeffs}};
}

PhasePolynomial phase_from_json(const nlohmann::json& j) {
    try {
        std::vector<AdeleClassElement> coeffs;
        for (const auto& a : j.at("coeffs")) coeffs.push_back(adele::adele_from_json(a));
        return PhasePolynomial(CircleValue(Rational::parse(j.at("c").get<std::string>())), std::move(coeffs));
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorKind::ParseError, std::string("bad phase JSON: ") + e.what());
    }
}

}  // namespace sumset::phasepoly
