#pragma once

#include "sumset/rational.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sumset::folner {

using exactq::Rational;

enum class FamilyKind { Harmonic, FactorialGrid };

/// Harmonic:      Phi_N = { sum_{n<=N} a_n / n : |a_n| <= N }
/// FactorialGrid: Phi_N = { k / N! : |k| <= N * N! }
/// Both are Folner sequences; FactorialGrid is nested (hence tempered).
struct FolnerFamily {
    FamilyKind kind = FamilyKind::FactorialGrid;
    /// Bound on the pre-dedup tuple count (Harmonic) or the grid size (FactorialGrid).
    std::uint64_t size_cap = 10'000'000;

    std::string name() const;
    bool tempered() const { return kind == FamilyKind::FactorialGrid; }
    /// "harmonic" or "factorial"; ConfigInvalid otherwise.
    static FolnerFamily parse(std::string_view text);
};

/// Sorted, deduplicated Phi_N. SizeCap when the family's count exceeds size_cap.
std::vector<Rational> enumerate(const FolnerFamily& family, int N);

struct RationalSetPredicate {
    std::function<bool(const Rational&)> contains;
    std::string label;

    bool operator()(const Rational& q) const { return contains(q); }
};

RationalSetPredicate everything();
RationalSetPredicate nothing();
/// D_delta = { q : ||q|| < delta }, 0 < delta <= 1/2.
RationalSetPredicate return_time_set(const Rational& delta);
/// A + x.
RationalSetPredicate translate(const RationalSetPredicate& a, const Rational& x);

/// |A cap Phi_N| / |Phi_N|.
Rational density(const RationalSetPredicate& a, const FolnerFamily& family, int N);
Rational density(const RationalSetPredicate& a, const std::vector<Rational>& phi);
/// |(Phi_N + x) symdiff Phi_N| / |Phi_N|.
Rational folner_defect(const FolnerFamily& family, int N, const Rational& x);
Rational folner_defect(const std::vector<Rational>& phi, const Rational& x);

}  // namespace sumset::folner
