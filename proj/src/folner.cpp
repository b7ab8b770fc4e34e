#include "sumset/folner.hpp"

#include "sumset/errors.hpp"

#include <algorithm>
#include <set>

namespace sumset::folner {

using exactq::Integer;

std::string FolnerFamily::name() const { return kind == FamilyKind::Harmonic ? "harmonic" : "factorial"; }

FolnerFamily FolnerFamily::parse(std::string_view text) {
    if (text == "harmonic") return {FamilyKind::Harmonic};
    if (text == "factorial" || text == "factorial-grid") return {FamilyKind::FactorialGrid};
    fail(ErrorKind::ConfigInvalid, "unknown Folner family '" + std::string(text) + "'");
}

namespace {

// (2N+1)^N, saturating at cap + 1.
std::uint64_t harmonic_tuple_count(int N, std::uint64_t cap) {
    std::uint64_t c = 1;
    for (int i = 0; i < N; ++i) {
        if (c > cap / static_cast<std::uint64_t>(2 * N + 1)) return cap + 1;
        c *= static_cast<std::uint64_t>(2 * N + 1);
    }
    return c;
}

std::vector<Rational> harmonic(int N) {
    Integer L = 1;
    for (int n = 2; n <= N; ++n) mpz_lcm_ui(L.get_mpz_t(), L.get_mpz_t(), static_cast<unsigned long>(n));
    // sum a_n / n = (sum a_n * L/n) / L; dedupe on the integer numerators.
    std::set<Integer> sums{Integer(0)};
    for (int n = 1; n <= N; ++n) {
        const Integer step = L / n;
        std::set<Integer> next;
        for (const auto& s : sums)
            for (int a = -N; a <= N; ++a) next.insert(s + a * step);
        sums = std::move(next);
    }
    std::vector<Rational> out;
    out.reserve(sums.size());
    for (const auto& s : sums) out.emplace_back(s, L);
    return out;
}

std::vector<Rational> factorial_grid(int N) {
    Integer fact = 1;
    for (int n = 2; n <= N; ++n) fact *= n;
    const long bound = static_cast<long>(N) * fact.get_si();
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(2 * bound + 1));
    for (long k = -bound; k <= bound; ++k) out.emplace_back(Integer(k), fact);
    return out;
}

}  // namespace

std::vector<Rational> enumerate(const FolnerFamily& family, int N) {
    if (N < 1) fail(ErrorKind::PreconditionFailed, "Folner index N must be >= 1");
    if (family.kind == FamilyKind::Harmonic) {
        if (harmonic_tuple_count(N, family.size_cap) > family.size_cap)
            fail(ErrorKind::SizeCap, "harmonic Phi_" + std::to_string(N) + " exceeds the size cap");
        return harmonic(N);
    }
    std::uint64_t fact = 1;
    for (int n = 2; n <= N; ++n) {
        fact *= static_cast<std::uint64_t>(n);
        if (fact > family.size_cap) break;
    }
    if (fact > family.size_cap || 2 * static_cast<std::uint64_t>(N) * fact + 1 > family.size_cap)
        fail(ErrorKind::SizeCap, "factorial grid Phi_" + std::to_string(N) + " exceeds the size cap");
    return factorial_grid(N);
}

RationalSetPredicate everything() {
    return {[](const Rational&) { return true; }, "all"};
}

RationalSetPredicate nothing() {
    return {[](const Rational&) { return false; }, "empty"};
}

RationalSetPredicate return_time_set(const Rational& delta) {
    if (delta <= Rational(0) || delta > Rational(1, 2))
        fail(ErrorKind::PreconditionFailed, "return-time radius must lie in (0, 1/2]");
    return {[delta](const Rational& q) { return q.dist_to_int() < delta; }, "delta:" + delta.str()};
}

RationalSetPredicate translate(const RationalSetPredicate& a, const Rational& x) {
    auto inner = a.contains;
    return {[inner, x](const Rational& q) { return inner(q - x); }, "(" + a.label + ")+" + x.str()};
}

Rational density(const RationalSetPredicate& a, const std::vector<Rational>& phi) {
    long count = 0;
    for (const auto& q : phi)
        if (a(q)) ++count;
    return Rational(count, static_cast<long>(phi.size()));
}

Rational density(const RationalSetPredicate& a, const FolnerFamily& family, int N) {
    return density(a, enumerate(family, N));
}

Rational folner_defect(const std::vector<Rational>& phi, const Rational& x) {
    // phi is sorted, so phi + x is too; count the two one-sided differences.
    std::size_t i = 0, j = 0, common = 0;
    while (i < phi.size() && j < phi.size()) {
        const Rational shifted = phi[j] + x;
        if (phi[i] < shifted) {
            ++i;
        } else if (shifted < phi[i]) {
            ++j;
        } else {
            ++common;
            ++i;
            ++j;
        }
    }
    return Rational(2 * static_cast<long>(phi.size() - common), static_cast<long>(phi.size()));
}

Rational folner_defect(const FolnerFamily& family, int N, const Rational& x) {
    return folner_defect(enumerate(family, N), x);
}

}  // namespace sumset::folner
