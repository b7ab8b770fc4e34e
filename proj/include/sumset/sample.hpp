#pragma once

#include "sumset/adele.hpp"
#include "sumset/binom_poly.hpp"
#include "sumset/dynsys.hpp"
#include "sumset/phasepoly.hpp"

#include <random>
#include <vector>

namespace sumset::sample {

using exactq::BinomPoly;
using exactq::Integer;
using exactq::Rational;

// Small seeded generators for tests, fixtures and the CLI.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
    bool coin() { return integer(0, 1) == 1; }
    std::mt19937_64& engine() { return rng_; }

    Rational rational(long max_num = 20, long max_den = 12) {
        return Rational(integer(-max_num, max_num), integer(1, max_den));
    }

    // Denominators built from the given primes only.
    Rational smooth_rational(const std::vector<unsigned long>& primes, long max_num = 20, int max_exp = 2) {
        Integer den = 1;
        for (unsigned long p : primes) den *= exactq::ipow(p, static_cast<unsigned long>(integer(0, max_exp)));
        return Rational(Integer(integer(-max_num, max_num)), den);
    }

    BinomPoly binom_poly(int max_degree, long max_num = 9, long max_den = 6) {
        std::vector<Rational> c(static_cast<std::size_t>(integer(0, max_degree)) + 1);
        for (auto& x : c) x = rational(max_num, max_den);
        return BinomPoly(std::move(c));
    }

    adele::PAdicNumber padic(unsigned long p) {
        switch (integer(0, 2)) {
        case 0:
            return adele::PAdicNumber::exact(p, smooth_rational({p, 7}));
        case 1:
            return adele::PAdicNumber::from_source(p, {"squares", static_cast<std::uint64_t>(integer(0, 50))}, 40);
        default: {
            std::vector<unsigned> d(static_cast<std::size_t>(integer(20, 40)));
            for (auto& x : d) x = static_cast<unsigned>(integer(0, static_cast<long>(p) - 1));
            return adele::PAdicNumber::from_digits(p, integer(-3, 2), d);
        }
        }
    }

    adele::AdeleClassElement adele(const std::vector<unsigned long>& primes = {2, 3, 5}) {
        adele::PartMap parts;
        for (unsigned long p : primes)
            if (coin()) parts.emplace(p, padic(p));
        return adele::AdeleClassElement::from_parts(rational(30, 30), std::move(parts));
    }

    /// r nonnegative rationals summing to 1.
    std::vector<Rational> unit_partition(unsigned r, long grain = 6) {
        std::vector<long> w(r);
        long total = 0;
        for (auto& x : w) total += (x = integer(0, grain));
        if (total == 0) w[0] = total = 1;
        std::vector<Rational> out;
        for (long x : w) out.emplace_back(x, total);
        return out;
    }

    phasepoly::PhasePolynomial phase(int degree) {
        std::vector<adele::AdeleClassElement> a;
        for (int j = 0; j < degree; ++j) a.push_back(adele());
        if (degree > 0 && a.back().is_zero()) a.back() = adele::AdeleClassElement::from_real(Rational(1, 7));
        return {adele::CircleValue(rational(10, 9)), std::move(a)};
    }

    dynsys::SkewSystem skew_system(int k, int l) {
        dynsys::Vec alpha;
        for (int c = 0; c < l; ++c) alpha.push_back(adele({2, 3}));
        return {l, k, alpha, dynsys::Variant::QAdelic};
    }

    dynsys::OrbitPoint orbit_point(int k, int l) {
        dynsys::OrbitPoint x;
        for (int i = 0; i < k; ++i) {
            dynsys::Vec vi;
            for (int c = 0; c < l; ++c) vi.push_back(adele({2, 3}));
            x.v.push_back(vi);
        }
        return x;
    }

    dynsys::CharacterObservable character(int k, int l) {
        auto w = dynsys::CharacterObservable::constant_one(k, l);
        for (auto& wi : w.w)
            for (auto& x : wi) x = smooth_rational({2, 3}, 5, 1);
        return w;
    }

private:
    std::mt19937_64 rng_;
};

}  // namespace sumset::sample
