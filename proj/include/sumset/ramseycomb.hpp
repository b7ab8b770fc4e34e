#pragma once

#include "sumset/rational.hpp"

#include <json.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace sumset::ramseycomb {

using exactq::Rational;

/// Vertices 1..m in their natural order; edges are sorted l-subsets.
struct OrderedHypergraph {
    int m = 0;
    int l = 2;
    std::vector<std::vector<int>> edges;

    void validate() const;

    static OrderedHypergraph path3();
    static OrderedHypergraph single_edge(int l);
    static OrderedHypergraph complete(int m, int l);
    /// 2d-1 vertices, edges {1..d} and {d..2d-1}.
    static OrderedHypergraph efs(int d);
    /// "path3", "efs<d>", "edge<l>", "K<m>" or a JSON object.
    static OrderedHypergraph parse(const std::string& text);
};

nlohmann::json to_json(const OrderedHypergraph& h);
OrderedHypergraph hypergraph_from_json(const nlohmann::json& j);

/// An r-coloring of the edges of the complete ordered l-uniform K_n, n <= 16.
class EdgeColoring {
public:
    EdgeColoring(int n, int l, unsigned fill = 0);

    int n() const { return n_; }
    int l() const { return l_; }
    /// Edges of K_n in lexicographic order.
    const std::vector<std::vector<int>>& edges() const { return edges_; }
    unsigned color(const std::vector<int>& edge) const;
    unsigned color_at(std::size_t index) const { return colors_[index]; }
    void set(std::size_t index, unsigned c) { colors_[index] = c; }
    void set(const std::vector<int>& edge, unsigned c);

private:
    std::size_t slot(const std::vector<int>& edge) const;

    int n_, l_;
    std::vector<std::vector<int>> edges_;
    std::vector<unsigned> colors_;
    std::vector<std::uint32_t> index_;  // vertex bitmask -> position in edges_
};

bool contains_ordered_copy(const EdgeColoring& coloring, const OrderedHypergraph& h, unsigned color);

struct RamseyOptions {
    int cap = 8;
    /// Maximum number of colorings examined at a single n.
    std::uint64_t budget = 50'000'000;
};

/// Least n <= cap such that every r-coloring of K_n^(l) has a monochromatic ordered copy of h;
/// nullopt when above cap. BudgetExceeded if some n <= cap needs more colorings than the budget.
std::optional<int> ordered_ramsey_number(const OrderedHypergraph& h, unsigned r, const RamseyOptions& opts = {});

struct FiniteProbabilitySpace {
    std::vector<Rational> weights;

    static FiniteProbabilitySpace uniform(int n);
    int size() const { return static_cast<int>(weights.size()); }
    void validate() const;
};

/// phi_k : X^l -> [0,1], tables indexed by the base-|X| number x_1 x_2 ... x_l (points 0-based).
struct PhiFamily {
    int l = 2;
    std::vector<std::vector<Rational>> tables;

    unsigned r() const { return static_cast<unsigned>(tables.size()); }
};

/// sum_k int_{X^m} prod_{e in E(H)} phi_k(x_e) d mu^m. PartitionOfUnityViolated unless the
/// tables lie in [0,1] and sum to 1 pointwise.
Rational measure_ramsey_lhs(const FiniteProbabilitySpace& space, const PhiFamily& phi, const OrderedHypergraph& h);

struct MeasureRamseyReport {
    Rational lhs;
    std::optional<int> ramsey;  // R_<(H, r); nullopt above cap
    std::optional<Rational> rhs;  // 1 / C(R, m)
    bool holds = true;
};

MeasureRamseyReport measure_ramsey_bound_check(const FiniteProbabilitySpace& space, const PhiFamily& phi,
                                               const OrderedHypergraph& h, const RamseyOptions& opts = {});

/// F : (Z_n)^2 -> [0,1], row-major F[x * n + y].
struct CornersInstance {
    int n = 1;
    std::vector<Rational> F;

    const Rational& at(long x, long y) const;
    Rational mean() const;
};

/// (1/n^3) sum_{x,y,t} F(x,y) F(x+t,y) F(x,y+t).
Rational corners_count(const CornersInstance& inst);

struct MarkovReport {
    Rational mean, density_E, corners_F, corners_E, bound;
    bool density_ok = false, corners_ok = false;

    bool passed() const { return density_ok && corners_ok; }
};

/// E = {F >= eps/2}: checks m(E) >= eps/2 and corners(F) >= (eps/2)^3 corners(1_E).
/// MeanTooSmall if mean(F) < eps.
MarkovReport markov_level_set(const CornersInstance& inst, const Rational& eps);

/// A subset of the positive integers, known up to `horizon`.
struct IntegerSet {
    std::function<bool(std::uint64_t)> contains;
    std::uint64_t horizon = 100'000;
    std::string label;
};

struct GreedyOptions {
    std::size_t prefix_cap = 20;
};

struct GreedyResult {
    std::vector<std::uint64_t> c;  // the greedy prefix
    std::vector<std::uint64_t> B;  // empty when exhausted
    std::uint64_t t = 0;
    std::string exhausted;         // reason; empty on success

    bool found() const { return exhausted.empty(); }
};

/// c_1 = 1, c_{n+1} least with c_{n+1} + c_i^2 in T = A u (A-1) u ... u (A-k); pairs colored
/// by the least shift; B is a monochromatic m-subset of the prefix, so b_i^2 + b_j in A - t.
/// Exhausted when the horizon stops the prefix short of m or no such subset exists.
GreedyResult greedy_sumset_builder(const IntegerSet& A, unsigned k, std::size_t m, const GreedyOptions& opts = {});

struct DeltaOptions {
    std::uint64_t node_budget = 10'000'000;
};

/// Lexicographically first b_1 < ... < b_size from `grid` (sorted) with every b_j - b_i (i < j) in A.
std::optional<std::vector<Rational>> delta_set_search(const std::vector<Rational>& A, int size,
                                                      const std::vector<Rational>& grid, const DeltaOptions& opts = {});

}  // namespace sumset::ramseycomb
