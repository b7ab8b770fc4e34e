#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sumset::colorings {

using u64 = std::uint64_t;

enum class Color : unsigned { Odd, Even00, Even01, Even10, Even11 };

std::string_view to_string(Color c) noexcept;

unsigned v2(u64 n);
/// Binary digit of n at position 2 v2(n).
unsigned c_bit(u64 n);
/// floor(log2 m) mod 2.
unsigned d_dyadic(u64 m);
/// odd, or even_{c(n) d(v2(n))}.
Color five_color(u64 n);

/// An arbitrary total coloring of the positive integers with `count` colors 0..count-1.
struct Coloring {
    std::function<unsigned(u64)> color;
    unsigned count = 1;
    std::string label;

    unsigned operator()(u64 n) const { return color(n); }
};

Coloring five_coloring();
Coloring parity_coloring();
Coloring constant_coloring();

/// {b_i} u {b_i^2 + b_j : i < j}, in that order (duplicates kept).
std::vector<u64> pattern_values(const std::vector<u64>& B);
/// Sorted distinct colors over the pattern.
std::vector<unsigned> pattern_colors(const Coloring& chi, const std::vector<u64>& B);

enum class Case { OddMember, EqualValuation, Doubling, NoCaseApplies };

std::string_view to_string(Case c) noexcept;

struct CaseWitness {
    Case kind = Case::NoCaseApplies;
    u64 x = 0, y = 0;  // OddMember: x odd, y an even pattern value
};

/// The first applicable case, tried in the order listed. PreconditionFailed if |B| < 2.
CaseWitness classify_case(const std::vector<u64>& B);

struct PatternReport {
    std::vector<u64> B;
    std::vector<u64> values;
    std::vector<unsigned> colors;
    CaseWitness witness;
};

PatternReport pattern_report(const Coloring& chi, const std::vector<u64>& B);

/// First lexicographic b1 < b2 <= bound with chi(b1) = chi(b2) = chi(b1^2 + b2).
std::optional<std::pair<u64, u64>> bergelson_triple_search(const Coloring& chi, u64 bound);

struct ColorCheckReport {
    u64 sets_checked = 0, sets_excluded = 0;
    std::vector<std::vector<u64>> violations;
    u64 equal_pairs = 0, doubling_pairs = 0;
    std::vector<std::pair<u64, u64>> equal_failures, doubling_failures;

    bool passed() const { return violations.empty() && equal_failures.empty() && doubling_failures.empty(); }
};

/// Every B in {1..max} with |B| in sizes and an applicable case spans >= 2 five_color colors;
/// plus the c-bit flip on even pairs x < y <= max with v2(x) = v2(y), and the dyadic flip on
/// even x <= max, x < y, 2 v2(x) < v2(y) <= max_doubling_valuation.
ColorCheckReport counterexample_check(u64 max, const std::vector<int>& sizes, unsigned max_doubling_valuation = 20);

}  // namespace sumset::colorings
