#include "gen.hpp"

#include "sumset/errors.hpp"
#include "sumset/ramseycomb.hpp"

#include <gtest/gtest.h>

#include <array>
#include <numeric>

using namespace sumset;
using namespace sumset::ramseycomb;
using sumset::testing::Gen;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error thrown";
    return ErrorKind::ParseError;
}

// Adjacency-matrix brute force over all 2-colorings, no symmetry pruning.
using Matrix = std::array<std::array<int, 8>, 8>;

template <class Has>
int brute_ramsey(int max_n, Has has_mono) {
    for (int n = 1; n <= max_n; ++n) {
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) pairs.push_back({i, j});
        bool every = true;
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << pairs.size()) && every; ++bits) {
            Matrix c{};
            for (std::size_t e = 0; e < pairs.size(); ++e)
                c[pairs[e].first][pairs[e].second] = c[pairs[e].second][pairs[e].first] = static_cast<int>((bits >> e) & 1);
            every = has_mono(c, n);
        }
        if (every) return n;
    }
    return -1;
}

bool mono_path3(const Matrix& c, int n) {
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                if (c[i][j] == c[j][k]) return true;
    return false;
}

bool mono_triangle(const Matrix& c, int n) {
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (i != j && j != k && i != k && c[i][j] == c[j][k] && c[j][k] == c[i][k]) return true;
    return false;
}

// Direct sum over X^3 for path3: sum_k sum_{x} mu(x1)mu(x2)mu(x3) phi_k(x1,x2) phi_k(x2,x3).
Rational naive_path3_lhs(const FiniteProbabilitySpace& s, const PhiFamily& phi) {
    const int n = s.size();
    Rational total;
    for (const auto& t : phi.tables)
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    total += s.weights[a] * s.weights[b] * s.weights[c] * t[a * n + b] * t[b * n + c];
    return total;
}

PhiFamily random_phi(Gen& g, int n, unsigned r) {
    PhiFamily phi{2, std::vector<std::vector<Rational>>(r)};
    for (int cell = 0; cell < n * n; ++cell) {
        const auto part = g.unit_partition(r);
        for (unsigned k = 0; k < r; ++k) phi.tables[k].push_back(part[k]);
    }
    return phi;
}

FiniteProbabilitySpace random_space(Gen& g, int n) {
    const auto w = g.unit_partition(static_cast<unsigned>(n));
    return {w};
}

Rational naive_corners(const CornersInstance& inst) {
    const int n = inst.n;
    Rational s;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int t = 0; t < n; ++t)
                s += inst.F[x * n + y] * inst.F[((x + t) % n) * n + y] * inst.F[x * n + (y + t) % n];
    return s / Rational(n * n * n);
}

CornersInstance random_corners(Gen& g, int n) {
    CornersInstance inst{n, {}};
    for (int i = 0; i < n * n; ++i) inst.F.emplace_back(g.integer(0, 4), 4);
    return inst;
}

}  // namespace

TEST(Hypergraph, Shapes) {
    EXPECT_EQ(OrderedHypergraph::efs(2).edges, OrderedHypergraph::path3().edges);
    EXPECT_EQ(OrderedHypergraph::efs(3).m, 5);
    EXPECT_EQ(OrderedHypergraph::efs(3).edges, (std::vector<std::vector<int>>{{1, 2, 3}, {3, 4, 5}}));
    EXPECT_EQ(OrderedHypergraph::complete(4, 2).edges.size(), 6u);
    EXPECT_EQ(to_json(OrderedHypergraph::path3()).dump(), R"({"edges":[[1,2],[2,3]],"l":2,"m":3})");
    EXPECT_EQ(OrderedHypergraph::parse(R"({"m":3,"l":2,"edges":[[1,2],[2,3]]})").edges, OrderedHypergraph::path3().edges);
    EXPECT_EQ(kind_of([] { (void)OrderedHypergraph::parse(R"({"m":2,"l":2,"edges":[[2,1]]})"); }), ErrorKind::ConfigInvalid);
    EXPECT_EQ(kind_of([] { (void)OrderedHypergraph::parse("star9"); }), ErrorKind::ConfigInvalid);
}

TEST(OrderedCopy, Examples) {
    EdgeColoring k4(4, 2);
    // no monochromatic path 1-2-3 in either color
    for (auto [e, c] : std::vector<std::pair<std::vector<int>, unsigned>>{
             {{1, 2}, 0}, {{2, 3}, 1}, {{3, 4}, 0}, {{1, 3}, 1}, {{2, 4}, 1}, {{1, 4}, 0}})
        k4.set(e, c);
    EXPECT_FALSE(contains_ordered_copy(k4, OrderedHypergraph::path3(), 0));
    EXPECT_FALSE(contains_ordered_copy(k4, OrderedHypergraph::path3(), 1));
    k4.set({2, 4}, 0);  // now 1-2-4 is red
    EXPECT_TRUE(contains_ordered_copy(k4, OrderedHypergraph::path3(), 0));
    EXPECT_TRUE(contains_ordered_copy(k4, OrderedHypergraph::single_edge(2), 1));
    EXPECT_FALSE(contains_ordered_copy(k4, OrderedHypergraph::single_edge(2), 2));

    EdgeColoring k3(3, 2);
    k3.set({2, 3}, 1);
    EXPECT_FALSE(contains_ordered_copy(k3, OrderedHypergraph::path3(), 0));
    k3.set({2, 3}, 0);
    EXPECT_TRUE(contains_ordered_copy(k3, OrderedHypergraph::path3(), 0));
}

TEST(OrderedCopy, MatchesMatrixOracleOnK5) {
    Gen g(51);
    for (int rep = 0; rep < 300; ++rep) {
        EdgeColoring c(5, 2);
        Matrix m{};
        for (std::size_t i = 0; i < c.edges().size(); ++i) {
            const auto col = static_cast<unsigned>(g.integer(0, 1));
            c.set(i, col);
            const auto& e = c.edges()[i];
            m[e[0] - 1][e[1] - 1] = m[e[1] - 1][e[0] - 1] = static_cast<int>(col);
        }
        const bool oracle = mono_path3(m, 5);
        const auto h = OrderedHypergraph::path3();
        ASSERT_EQ(contains_ordered_copy(c, h, 0) || contains_ordered_copy(c, h, 1), oracle);
    }
}

TEST(OrderedRamsey, Examples) {
    EXPECT_EQ(ordered_ramsey_number(OrderedHypergraph::single_edge(2), 3), 2);
    EXPECT_EQ(ordered_ramsey_number(OrderedHypergraph::single_edge(3), 2), 3);
    const int oracle = brute_ramsey(6, mono_path3);
    EXPECT_EQ(oracle, 5);
    EXPECT_EQ(ordered_ramsey_number(OrderedHypergraph::path3(), 2), oracle);
    EXPECT_EQ(ordered_ramsey_number(OrderedHypergraph::efs(2), 2), oracle);
    EXPECT_FALSE(ordered_ramsey_number(OrderedHypergraph::path3(), 2, {4}).has_value());
    EXPECT_EQ(ordered_ramsey_number(OrderedHypergraph::path3(), 1), 3);
}

TEST(OrderedRamsey, CompleteGraphIsClassical) {
    const int oracle = brute_ramsey(6, mono_triangle);
    EXPECT_EQ(oracle, 6);
    EXPECT_EQ(ordered_ramsey_number(OrderedHypergraph::complete(3, 2), 2, {6}), oracle);
}

TEST(OrderedRamsey, Budget) {
    EXPECT_EQ(kind_of([] { (void)ordered_ramsey_number(OrderedHypergraph::complete(3, 2), 2, {6, 1000}); }),
              ErrorKind::BudgetExceeded);
}

TEST(MeasureRamsey, Examples) {
    const auto X2 = FiniteProbabilitySpace::uniform(2);
    const PhiFamily one{2, {std::vector<Rational>(4, Rational(1))}};
    EXPECT_EQ(measure_ramsey_lhs(X2, one, OrderedHypergraph::path3()), Rational(1));
    EXPECT_EQ(measure_ramsey_lhs(X2, one, OrderedHypergraph{3, 2, {}}), Rational(1));

    // phi_k(x1, x2) = [x1 == k]: sum over 8 triples of [x1 == x2] / 8
    const PhiFamily split{2, {{1, 1, 0, 0}, {0, 0, 1, 1}}};
    EXPECT_EQ(measure_ramsey_lhs(X2, split, OrderedHypergraph::path3()), Rational(1, 2));
    EXPECT_EQ(measure_ramsey_lhs(X2, split, OrderedHypergraph::path3()), naive_path3_lhs(X2, split));

    const PhiFamily broken{2, {{1, 1, 0, 0}, {0, 1, 1, 1}}};
    EXPECT_EQ(kind_of([&] { (void)measure_ramsey_lhs(X2, broken, OrderedHypergraph::path3()); }),
              ErrorKind::PartitionOfUnityViolated);
}

TEST(MeasureRamsey, BoundOnRandomInstances) {
    Gen g(52);
    const Rational rhs = Rational(1) / Rational(10);  // 1 / C(5, 3)
    for (int rep = 0; rep < 200; ++rep) {
        const int n = static_cast<int>(g.integer(1, 4));
        const auto space = random_space(g, n);
        const auto phi = random_phi(g, n, 2);
        const auto report = measure_ramsey_bound_check(space, phi, OrderedHypergraph::path3());
        ASSERT_EQ(report.lhs, naive_path3_lhs(space, phi));
        ASSERT_EQ(report.ramsey, 5);
        ASSERT_EQ(*report.rhs, rhs);
        ASSERT_TRUE(report.holds) << report.lhs;
    }
    const auto space = FiniteProbabilitySpace::uniform(4);
    const PhiFamily adversarial{2, {std::vector<Rational>(16, Rational(1)), std::vector<Rational>(16, Rational(0))}};
    EXPECT_TRUE(measure_ramsey_bound_check(space, adversarial, OrderedHypergraph::path3()).holds);
}

TEST(MeasureRamsey, RelabelingInvariance) {
    Gen g(53);
    for (int rep = 0; rep < 50; ++rep) {
        const int n = 4;
        const auto space = random_space(g, n);
        const auto phi = random_phi(g, n, 2);
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), g.engine());
        FiniteProbabilitySpace s2{std::vector<Rational>(n)};
        PhiFamily p2{2, std::vector<std::vector<Rational>>(2, std::vector<Rational>(n * n))};
        for (int a = 0; a < n; ++a) {
            s2.weights[perm[a]] = space.weights[a];
            for (int b = 0; b < n; ++b)
                for (int k = 0; k < 2; ++k) p2.tables[k][perm[a] * n + perm[b]] = phi.tables[k][a * n + b];
        }
        ASSERT_EQ(measure_ramsey_lhs(s2, p2, OrderedHypergraph::path3()), measure_ramsey_lhs(space, phi, OrderedHypergraph::path3()));
    }
}

TEST(Corners, Examples) {
    for (int n : {1, 3, 7}) {
        EXPECT_EQ(corners_count({n, std::vector<Rational>(n * n, Rational(1))}), Rational(1));
        EXPECT_EQ(corners_count({n, std::vector<Rational>(n * n, Rational(0))}), Rational(0));
        CornersInstance cell{n, std::vector<Rational>(n * n, Rational(0))};
        cell.F[n * n - 1] = Rational(1);
        EXPECT_EQ(corners_count(cell), Rational(1, n * n * n));
    }
}

TEST(Corners, MatchesTripleLoopOracle) {
    Gen g(54);
    for (int rep = 0; rep < 50; ++rep) {
        const auto inst = random_corners(g, static_cast<int>(g.integer(1, 12)));
        const Rational c = corners_count(inst);
        ASSERT_EQ(c, naive_corners(inst));
        Rational diag;
        for (const auto& f : inst.F) diag += f * f * f;
        ASSERT_GE(c, diag / Rational(inst.n * inst.n * inst.n));
    }
}

TEST(Markov, Examples) {
    const Rational eps(1, 3);
    const auto flat = markov_level_set({5, std::vector<Rational>(25, eps)}, eps);
    EXPECT_EQ(flat.density_E, Rational(1));
    EXPECT_TRUE(flat.passed());
    EXPECT_EQ(kind_of([&] { (void)markov_level_set({5, std::vector<Rational>(25, eps / Rational(4))}, eps); }),
              ErrorKind::MeanTooSmall);
}

TEST(Markov, ChainOnRandomInstances) {
    Gen g(55);
    int checked = 0;
    for (int rep = 0; rep < 200; ++rep) {
        auto inst = random_corners(g, static_cast<int>(g.integer(1, 12)));
        if (inst.mean() < Rational(1, 2)) continue;
        ++checked;
        const auto r = markov_level_set(inst, Rational(1, 2));
        ASSERT_TRUE(r.passed());
        ASSERT_EQ(r.corners_F, naive_corners(inst));
    }
    EXPECT_GT(checked, 20);
}

TEST(Greedy, Examples) {
    const IntegerSet naturals{[](std::uint64_t) { return true; }, 100000, "N"};
    const auto all = greedy_sumset_builder(naturals, 0, 4);
    ASSERT_TRUE(all.found());
    EXPECT_EQ(all.B, (std::vector<std::uint64_t>{1, 2, 3, 4}));
    EXPECT_EQ(all.t, 0u);

    const IntegerSet evens{[](std::uint64_t x) { return x % 2 == 0; }, 100000, "2Z"};
    const auto e = greedy_sumset_builder(evens, 1, 3);
    ASSERT_TRUE(e.found());
    for (std::size_t i = 0; i < e.B.size(); ++i)
        for (std::size_t j = i + 1; j < e.B.size(); ++j) EXPECT_EQ((e.B[i] * e.B[i] + e.B[j] + e.t) % 2, 0u);

    const IntegerSet small{[](std::uint64_t x) { return x <= 5; }, 100000, "{1..5}"};
    const auto ex = greedy_sumset_builder(small, 1, 3);
    EXPECT_FALSE(ex.found());
    EXPECT_TRUE(ex.B.empty());
}

TEST(Greedy, PrefixSatisfiesThickCondition) {
    const IntegerSet evens{[](std::uint64_t x) { return x % 2 == 0; }, 100000, "2Z"};
    const auto r = greedy_sumset_builder(evens, 1, 4);
    ASSERT_EQ(r.c.size(), 20u);
    for (std::size_t i = 0; i < r.c.size(); ++i)
        for (std::size_t j = i + 1; j < r.c.size(); ++j) {
            const auto v = r.c[i] * r.c[i] + r.c[j];
            ASSERT_TRUE(v % 2 == 0 || (v + 1) % 2 == 0);
        }
    EXPECT_TRUE(std::is_sorted(r.c.begin(), r.c.end()));
}

TEST(DeltaSet, Examples) {
    std::vector<Rational> grid;
    for (int i = 0; i <= 3; ++i) grid.emplace_back(i);
    const std::vector<Rational> A{Rational(1), Rational(2), Rational(3)};
    EXPECT_EQ(delta_set_search(A, 3, grid), (std::vector<Rational>{Rational(0), Rational(1), Rational(2)}));
    // {0,1,3} is also a valid answer, just not the lexicographically first
    const std::vector<Rational> alt{Rational(0), Rational(1), Rational(3)};
    for (std::size_t i = 0; i < alt.size(); ++i)
        for (std::size_t j = i + 1; j < alt.size(); ++j)
            EXPECT_NE(std::find(A.begin(), A.end(), alt[j] - alt[i]), A.end());
    EXPECT_FALSE(delta_set_search({Rational(1)}, 3, grid).has_value());
    EXPECT_EQ(delta_set_search({Rational(2)}, 2, grid), (std::vector<Rational>{Rational(0), Rational(2)}));
    EXPECT_EQ(delta_set_search({Rational(1, 2)}, 2, {Rational(0), Rational(1, 2)}),
              (std::vector<Rational>{Rational(0), Rational(1, 2)}));
    EXPECT_EQ(kind_of([&] { (void)delta_set_search(A, 3, grid, {2}); }), ErrorKind::BudgetExceeded);
}
