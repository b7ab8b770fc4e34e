#include "sumset/colorings.hpp"

#include "sumset/errors.hpp"

#include <algorithm>
#include <bit>

namespace sumset::colorings {

std::string_view to_string(Color c) noexcept {
    switch (c) {
        case Color::Odd: return "odd";
        case Color::Even00: return "even00";
        case Color::Even01: return "even01";
        case Color::Even10: return "even10";
        case Color::Even11: return "even11";
    }
    return "?";
}

std::string_view to_string(Case c) noexcept {
    switch (c) {
        case Case::OddMember: return "odd-member";
        case Case::EqualValuation: return "equal-valuation";
        case Case::Doubling: return "doubling";
        case Case::NoCaseApplies: return "none";
    }
    return "?";
}

unsigned v2(u64 n) {
    if (n == 0) fail(ErrorKind::PreconditionFailed, "v2 of 0");
    return static_cast<unsigned>(std::countr_zero(n));
}

unsigned c_bit(u64 n) {
    const unsigned pos = 2 * v2(n);
    return pos >= 64 ? 0u : static_cast<unsigned>((n >> pos) & 1u);
}

unsigned d_dyadic(u64 m) {
    if (m == 0) fail(ErrorKind::PreconditionFailed, "d of 0");
    return static_cast<unsigned>(std::bit_width(m) - 1) % 2;
}

Color five_color(u64 n) {
    if (n % 2 == 1) return Color::Odd;
    return static_cast<Color>(1 + 2 * c_bit(n) + d_dyadic(v2(n)));
}

Coloring five_coloring() {
    return {[](u64 n) { return static_cast<unsigned>(five_color(n)); }, 5, "five"};
}

Coloring parity_coloring() {
    return {[](u64 n) { return static_cast<unsigned>(n % 2); }, 2, "parity"};
}

Coloring constant_coloring() {
    return {[](u64) { return 0u; }, 1, "constant"};
}

std::vector<u64> pattern_values(const std::vector<u64>& B) {
    std::vector<u64> out(B);
    for (std::size_t i = 0; i < B.size(); ++i)
        for (std::size_t j = i + 1; j < B.size(); ++j) out.push_back(B[i] * B[i] + B[j]);
    return out;
}

std::vector<unsigned> pattern_colors(const Coloring& chi, const std::vector<u64>& B) {
    std::vector<unsigned> out;
    for (u64 v : pattern_values(B)) out.push_back(chi(v));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

void check_increasing(const std::vector<u64>& B) {
    if (B.empty() || B.front() == 0) fail(ErrorKind::PreconditionFailed, "B must be nonempty positive integers");
    for (std::size_t i = 1; i < B.size(); ++i)
        if (B[i] <= B[i - 1]) fail(ErrorKind::PreconditionFailed, "B must be strictly increasing");
}

CaseWitness classify(const u64* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        if (b[i] % 2 == 0) continue;
        for (std::size_t j = 0; j < n; ++j)
            if (j != i && b[j] % 2 == 0) return {Case::OddMember, b[i], b[j]};
        // all members odd
        return {Case::OddMember, b[i], i + 1 < n ? b[i] * b[i] + b[i + 1] : b[0] * b[0] + b[i]};
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (v2(b[i]) == v2(b[j])) return {Case::EqualValuation, b[i], b[j]};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (2 * v2(b[i]) < v2(b[j])) return {Case::Doubling, b[i], b[j]};
    return {};
}

}  // namespace

CaseWitness classify_case(const std::vector<u64>& B) {
    if (B.size() < 2) fail(ErrorKind::PreconditionFailed, "classify_case needs |B| >= 2");
    check_increasing(B);
    return classify(B.data(), B.size());
}

PatternReport pattern_report(const Coloring& chi, const std::vector<u64>& B) {
    check_increasing(B);
    PatternReport r{B, pattern_values(B), pattern_colors(chi, B), {}};
    if (B.size() >= 2) r.witness = classify(B.data(), B.size());
    return r;
}

std::optional<std::pair<u64, u64>> bergelson_triple_search(const Coloring& chi, u64 bound) {
    if (bound < 2) fail(ErrorKind::PreconditionFailed, "bound must be >= 2");
    for (u64 b1 = 1; b1 < bound; ++b1) {
        const unsigned c = chi(b1);
        for (u64 b2 = b1 + 1; b2 <= bound; ++b2)
            if (chi(b2) == c && chi(b1 * b1 + b2) == c) return std::pair{b1, b2};
    }
    return std::nullopt;
}

ColorCheckReport counterexample_check(u64 max, const std::vector<int>& sizes, unsigned max_doubling_valuation) {
    ColorCheckReport rep;
    for (int size : sizes) {
        if (size < 2 || static_cast<u64>(size) > max) fail(ErrorKind::ConfigInvalid, "sizes must lie in [2, max]");
        const auto n = static_cast<std::size_t>(size);
        std::vector<u64> b(n);
        for (std::size_t i = 0; i < n; ++i) b[i] = i + 1;
        while (true) {
            if (classify(b.data(), n).kind == Case::NoCaseApplies) {
                ++rep.sets_excluded;
            } else {
                ++rep.sets_checked;
                unsigned mask = 0;
                for (std::size_t i = 0; i < n; ++i) {
                    mask |= 1u << static_cast<unsigned>(five_color(b[i]));
                    for (std::size_t j = i + 1; j < n; ++j) mask |= 1u << static_cast<unsigned>(five_color(b[i] * b[i] + b[j]));
                }
                if (std::popcount(mask) < 2) rep.violations.push_back(b);
            }
            std::size_t i = n;
            while (i > 0 && b[i - 1] == max - (n - i)) --i;
            if (i == 0) break;
            ++b[i - 1];
            for (std::size_t j = i; j < n; ++j) b[j] = b[j - 1] + 1;
        }
    }

    for (u64 x = 2; x <= max; x += 2)
        for (u64 y = x + 2; y <= max; y += 2) {
            if (v2(x) != v2(y)) continue;
            ++rep.equal_pairs;
            const u64 z = x * x + y;
            if (v2(z) != v2(x) || c_bit(z) == c_bit(y) || five_color(z) == five_color(y)) rep.equal_failures.push_back({x, y});
        }

    for (u64 x = 2; x <= max; x += 2)
        for (unsigned e = 2 * v2(x) + 1; e <= max_doubling_valuation; ++e)
            for (u64 u = 1; u <= max; u += 2) {
                const u64 y = u << e;
                if (y <= x) continue;
                ++rep.doubling_pairs;
                const u64 z = x * x + y;
                if (v2(z) != 2 * v2(x) || d_dyadic(v2(z)) == d_dyadic(v2(x)) || five_color(z) == five_color(x))
                    rep.doubling_failures.push_back({x, y});
            }
    return rep;
}

}  // namespace sumset::colorings
