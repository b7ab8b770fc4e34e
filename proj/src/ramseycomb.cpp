#include "sumset/ramseycomb.hpp"

#include "sumset/binom_poly.hpp"
#include "sumset/errors.hpp"

#include <algorithm>
#include <regex>
#include <set>

namespace sumset::ramseycomb {

namespace {

// All strictly increasing k-tuples from {1..n}, lexicographic.
std::vector<std::vector<int>> combinations(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n) return out;
    std::vector<int> c(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) c[static_cast<std::size_t>(i)] = i + 1;
    while (true) {
        out.push_back(c);
        int i = k;
        while (i > 0 && c[static_cast<std::size_t>(i - 1)] == n - (k - i)) --i;
        if (i == 0) break;
        ++c[static_cast<std::size_t>(i - 1)];
        for (int j = i; j < k; ++j) c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

std::uint32_t mask_of(const std::vector<int>& e) {
    std::uint32_t m = 0;
    for (int v : e) m |= 1u << (v - 1);
    return m;
}

std::uint64_t ipow_u64(std::uint64_t base, std::uint64_t e, std::uint64_t limit) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < e; ++i) {
        if (r > limit / std::max<std::uint64_t>(base, 1)) return limit + 1;
        r *= base;
    }
    return r;
}

}  // namespace

void OrderedHypergraph::validate() const {
    if (m < 1 || l < 1) fail(ErrorKind::ConfigInvalid, "hypergraph needs m >= 1 and l >= 1");
    std::set<std::vector<int>> seen;
    for (const auto& e : edges) {
        if (static_cast<int>(e.size()) != l) fail(ErrorKind::ConfigInvalid, "edge size differs from l");
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] < 1 || e[i] > m) fail(ErrorKind::ConfigInvalid, "edge vertex out of range");
            if (i > 0 && e[i] <= e[i - 1]) fail(ErrorKind::ConfigInvalid, "edge not sorted");
        }
        if (!seen.insert(e).second) fail(ErrorKind::ConfigInvalid, "duplicate edge");
    }
}

OrderedHypergraph OrderedHypergraph::path3() { return {3, 2, {{1, 2}, {2, 3}}}; }

OrderedHypergraph OrderedHypergraph::single_edge(int l) {
    std::vector<int> e;
    for (int i = 1; i <= l; ++i) e.push_back(i);
    return {l, l, {e}};
}

OrderedHypergraph OrderedHypergraph::complete(int m, int l) { return {m, l, combinations(m, l)}; }

OrderedHypergraph OrderedHypergraph::efs(int d) {
    if (d < 1) fail(ErrorKind::ConfigInvalid, "efs hypergraph needs d >= 1");
    std::vector<int> a, b;
    for (int i = 1; i <= d; ++i) a.push_back(i), b.push_back(d - 1 + i);
    OrderedHypergraph h{2 * d - 1, d, {a}};
    if (b != a) h.edges.push_back(b);
    return h;
}

OrderedHypergraph OrderedHypergraph::parse(const std::string& text) {
    std::smatch mt;
    if (text == "path3") return path3();
    if (std::regex_match(text, mt, std::regex(R"(efs(\d+))"))) return efs(std::stoi(mt[1]));
    if (std::regex_match(text, mt, std::regex(R"(edge(\d+))"))) return single_edge(std::stoi(mt[1]));
    if (std::regex_match(text, mt, std::regex(R"(K(\d+))"))) return complete(std::stoi(mt[1]), 2);
    try {
        auto h = hypergraph_from_json(nlohmann::json::parse(text));
        return h;
    } catch (const nlohmann::json::exception&) {
        fail(ErrorKind::ConfigInvalid, "unknown hypergraph: " + text);
    }
}

nlohmann::json to_json(const OrderedHypergraph& h) { return {{"m", h.m}, {"l", h.l}, {"edges", h.edges}}; }

OrderedHypergraph hypergraph_from_json(const nlohmann::json& j) {
    try {
        OrderedHypergraph h{j.at("m").get<int>(), j.at("l").get<int>(), j.at("edges").get<std::vector<std::vector<int>>>()};
        h.validate();
        return h;
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorKind::ParseError, std::string("hypergraph: ") + e.what());
    }
}

EdgeColoring::EdgeColoring(int n, int l, unsigned fill) : n_(n), l_(l) {
    if (n < 0 || n > 16 || l < 1) fail(ErrorKind::ConfigInvalid, "EdgeColoring supports 0 <= n <= 16, l >= 1");
    edges_ = combinations(n, l);
    colors_.assign(edges_.size(), fill);
    index_.assign(std::size_t{1} << n, UINT32_MAX);
    for (std::size_t i = 0; i < edges_.size(); ++i) index_[mask_of(edges_[i])] = static_cast<std::uint32_t>(i);
}

std::size_t EdgeColoring::slot(const std::vector<int>& edge) const {
    if (static_cast<int>(edge.size()) != l_) fail(ErrorKind::PreconditionFailed, "edge size differs from l");
    for (int v : edge)
        if (v < 1 || v > n_) fail(ErrorKind::PreconditionFailed, "edge vertex out of range");
    const auto i = index_[mask_of(edge)];
    if (i == UINT32_MAX) fail(ErrorKind::PreconditionFailed, "not an edge");
    return i;
}

unsigned EdgeColoring::color(const std::vector<int>& edge) const { return colors_[slot(edge)]; }
void EdgeColoring::set(const std::vector<int>& edge, unsigned c) { colors_[slot(edge)] = c; }

bool contains_ordered_copy(const EdgeColoring& coloring, const OrderedHypergraph& h, unsigned color) {
    h.validate();
    if (h.l != coloring.l()) fail(ErrorKind::PreconditionFailed, "uniformity mismatch");
    for (const auto& f : combinations(coloring.n(), h.m)) {
        bool ok = true;
        for (const auto& e : h.edges) {
            std::vector<int> image;
            for (int v : e) image.push_back(f[static_cast<std::size_t>(v - 1)]);
            if (coloring.color(image) != color) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

std::optional<int> ordered_ramsey_number(const OrderedHypergraph& h, unsigned r, const RamseyOptions& opts) {
    h.validate();
    if (r < 1) fail(ErrorKind::ConfigInvalid, "r must be >= 1");
    if (opts.cap > 16) fail(ErrorKind::ConfigInvalid, "cap must be <= 16");
    for (int n = h.m; n <= opts.cap; ++n) {
        const EdgeColoring shape(n, h.l);
        const std::size_t E = shape.edges().size();
        // every embedding as a list of edge slots in K_n
        std::vector<std::vector<std::size_t>> copies;
        for (const auto& f : combinations(n, h.m)) {
            std::vector<std::size_t> slots;
            for (const auto& e : h.edges) {
                std::vector<int> image;
                for (int v : e) image.push_back(f[static_cast<std::size_t>(v - 1)]);
                slots.push_back(std::find(shape.edges().begin(), shape.edges().end(), image) - shape.edges().begin());
            }
            copies.push_back(std::move(slots));
        }
        const bool trivially = std::any_of(copies.begin(), copies.end(), [](const auto& s) { return s.empty(); });
        if (trivially) return n;
        if (copies.empty()) continue;

        // first edge fixed to color 0
        const std::uint64_t free_edges = E == 0 ? 0 : E - 1;
        const std::uint64_t total = ipow_u64(r, free_edges, opts.budget);
        if (total > opts.budget)
            fail(ErrorKind::BudgetExceeded, "ordered Ramsey search at n = " + std::to_string(n) + " exceeds the budget");
        std::vector<unsigned> col(E, 0);
        bool all_contain = true;
        for (std::uint64_t iter = 0; iter < total && all_contain; ++iter) {
            if (iter > 0) {
                std::size_t i = E - 1;
                while (++col[i] == r) col[i--] = 0;
            }
            bool mono = false;
            for (const auto& s : copies) {
                const unsigned c0 = col[s.front()];
                if (std::all_of(s.begin(), s.end(), [&](std::size_t e) { return col[e] == c0; })) {
                    mono = true;
                    break;
                }
            }
            all_contain = mono;
        }
        if (all_contain) return n;
    }
    return std::nullopt;
}

FiniteProbabilitySpace FiniteProbabilitySpace::uniform(int n) {
    if (n < 1) fail(ErrorKind::ConfigInvalid, "space needs at least one point");
    return {std::vector<Rational>(static_cast<std::size_t>(n), Rational(1, n))};
}

void FiniteProbabilitySpace::validate() const {
    if (weights.empty()) fail(ErrorKind::PreconditionFailed, "empty probability space");
    Rational sum;
    for (const auto& w : weights) {
        if (w < Rational(0)) fail(ErrorKind::PreconditionFailed, "negative weight");
        sum += w;
    }
    if (sum != Rational(1)) fail(ErrorKind::PreconditionFailed, "weights sum to " + sum.str());
}

Rational measure_ramsey_lhs(const FiniteProbabilitySpace& space, const PhiFamily& phi, const OrderedHypergraph& h) {
    space.validate();
    h.validate();
    const auto n = static_cast<std::size_t>(space.size());
    if (!h.edges.empty() && phi.l != h.l) fail(ErrorKind::PreconditionFailed, "uniformity mismatch");
    if (phi.tables.empty()) fail(ErrorKind::PartitionOfUnityViolated, "no functions given");
    std::size_t cells = 1;
    for (int i = 0; i < phi.l; ++i) cells *= n;
    for (const auto& t : phi.tables)
        if (t.size() != cells) fail(ErrorKind::PreconditionFailed, "table size differs from |X|^l");
    for (std::size_t c = 0; c < cells; ++c) {
        Rational s;
        for (const auto& t : phi.tables) {
            if (t[c] < Rational(0) || t[c] > Rational(1))
                fail(ErrorKind::PartitionOfUnityViolated, "phi value outside [0,1]");
            s += t[c];
        }
        if (s != Rational(1)) fail(ErrorKind::PartitionOfUnityViolated, "sum_k phi_k = " + s.str() + " at cell " + std::to_string(c));
    }

    const auto m = static_cast<std::size_t>(h.m);
    std::vector<std::size_t> x(m, 0);
    Rational total;
    while (true) {
        Rational weight(1);
        for (std::size_t v : x) weight *= space.weights[v];
        if (!weight.is_zero()) {
            for (const auto& t : phi.tables) {
                Rational prod = weight;
                for (const auto& e : h.edges) {
                    std::size_t cell = 0;
                    for (int v : e) cell = cell * n + x[static_cast<std::size_t>(v - 1)];
                    prod *= t[cell];
                    if (prod.is_zero()) break;
                }
                total += prod;
            }
        }
        std::size_t i = m;
        while (i > 0 && ++x[i - 1] == n) x[--i] = 0;
        if (i == 0) break;
    }
    return total;
}

MeasureRamseyReport measure_ramsey_bound_check(const FiniteProbabilitySpace& space, const PhiFamily& phi,
                                               const OrderedHypergraph& h, const RamseyOptions& opts) {
    MeasureRamseyReport rep;
    rep.lhs = measure_ramsey_lhs(space, phi, h);
    rep.ramsey = ordered_ramsey_number(h, phi.r(), opts);
    if (rep.ramsey) {
        rep.rhs = Rational(1) / exactq::binom(Rational(*rep.ramsey), static_cast<unsigned>(h.m));
        rep.holds = rep.lhs >= *rep.rhs;
    }
    return rep;
}

const Rational& CornersInstance::at(long x, long y) const {
    const long nn = n;
    const auto xm = static_cast<std::size_t>(((x % nn) + nn) % nn), ym = static_cast<std::size_t>(((y % nn) + nn) % nn);
    return F[xm * static_cast<std::size_t>(n) + ym];
}

Rational CornersInstance::mean() const {
    Rational s;
    for (const auto& f : F) s += f;
    return s / Rational(static_cast<long>(F.size()));
}

namespace {

void check_instance(const CornersInstance& inst) {
    if (inst.n < 1 || inst.F.size() != static_cast<std::size_t>(inst.n) * static_cast<std::size_t>(inst.n))
        fail(ErrorKind::PreconditionFailed, "F must be an n x n table");
    for (const auto& f : inst.F)
        if (f < Rational(0) || f > Rational(1)) fail(ErrorKind::PreconditionFailed, "F must take values in [0,1]");
}

}  // namespace

Rational corners_count(const CornersInstance& inst) {
    check_instance(inst);
    const long n = inst.n;
    Rational s;
    for (long x = 0; x < n; ++x)
        for (long y = 0; y < n; ++y) {
            const Rational& base = inst.at(x, y);
            if (base.is_zero()) continue;
            Rational row;
            for (long t = 0; t < n; ++t) row += inst.at(x + t, y) * inst.at(x, y + t);
            s += base * row;
        }
    return s / Rational(n * n * n);
}

MarkovReport markov_level_set(const CornersInstance& inst, const Rational& eps) {
    check_instance(inst);
    if (eps <= Rational(0)) fail(ErrorKind::PreconditionFailed, "eps must be positive");
    MarkovReport rep;
    rep.mean = inst.mean();
    if (rep.mean < eps) fail(ErrorKind::MeanTooSmall, "mean(F) = " + rep.mean.str() + " < eps = " + eps.str());
    const Rational half = eps / Rational(2);
    CornersInstance E{inst.n, {}};
    for (const auto& f : inst.F) E.F.push_back(f >= half ? Rational(1) : Rational(0));
    rep.density_E = E.mean();
    rep.corners_F = corners_count(inst);
    rep.corners_E = corners_count(E);
    rep.bound = half * half * half * rep.corners_E;
    rep.density_ok = rep.density_E >= half;
    rep.corners_ok = rep.corners_F >= rep.bound;
    return rep;
}

GreedyResult greedy_sumset_builder(const IntegerSet& A, unsigned k, std::size_t m, const GreedyOptions& opts) {
    if (m < 1) fail(ErrorKind::ConfigInvalid, "m must be >= 1");
    if (opts.prefix_cap < 1) fail(ErrorKind::ConfigInvalid, "prefix cap must be >= 1");
    using u64 = std::uint64_t;
    const u64 H = A.horizon;
    const auto in_A = [&](u64 x) { return x >= 1 && x <= H && A.contains(x); };
    const auto in_T = [&](u64 x) {
        for (u64 t = 0; t <= k; ++t)
            if (in_A(x + t)) return true;
        return false;
    };

    GreedyResult res;
    res.c.push_back(1);
    while (res.c.size() < opts.prefix_cap) {
        const u64 top = res.c.back() * res.c.back();
        bool placed = false;
        for (u64 c = res.c.back() + 1; c + top <= H; ++c) {
            if (std::all_of(res.c.begin(), res.c.end(), [&](u64 ci) { return in_T(c + ci * ci); })) {
                res.c.push_back(c);
                placed = true;
                break;
            }
        }
        if (!placed) break;
    }
    if (res.c.size() < m) {
        res.exhausted = "horizon " + std::to_string(H) + " sustains only " + std::to_string(res.c.size()) + " greedy terms";
        return res;
    }

    const std::size_t L = res.c.size();
    std::vector<std::vector<unsigned>> color(L, std::vector<unsigned>(L, 0));
    for (std::size_t i = 0; i < L; ++i)
        for (std::size_t j = i + 1; j < L; ++j) {
            const u64 v = res.c[i] * res.c[i] + res.c[j];
            unsigned t = 0;
            while (!in_A(v + t)) ++t;  // in_T(v) holds by construction
            color[i][j] = t;
        }

    std::vector<std::size_t> pick;
    std::optional<unsigned> chosen;
    const auto compatible = [&](std::size_t j, unsigned t) {
        return std::all_of(pick.begin(), pick.end(), [&](std::size_t i) { return color[i][j] == t; });
    };
    // exhaustive, lexicographic in indices, colors in increasing order
    std::function<bool(std::size_t, unsigned)> dfs = [&](std::size_t from, unsigned t) {
        if (pick.size() == m) return true;
        for (std::size_t j = from; j + (m - pick.size()) <= L; ++j) {
            if (!compatible(j, t)) continue;
            pick.push_back(j);
            if (dfs(j + 1, t)) return true;
            pick.pop_back();
        }
        return false;
    };
    for (unsigned t = 0; t <= k && !chosen; ++t) {
        pick.clear();
        if (m <= 6) {
            if (dfs(0, t)) chosen = t;
        } else {
            for (std::size_t start = 0; start < L && !chosen; ++start) {
                pick.assign(1, start);
                for (std::size_t j = start + 1; j < L && pick.size() < m; ++j)
                    if (compatible(j, t)) pick.push_back(j);
                if (pick.size() == m) chosen = t;
            }
        }
    }
    if (!chosen) {
        res.exhausted = "no monochromatic " + std::to_string(m) + "-subset among " + std::to_string(L) + " greedy terms";
        return res;
    }
    res.t = *chosen;
    for (std::size_t i : pick) res.B.push_back(res.c[i]);

    for (std::size_t i = 0; i < res.B.size(); ++i)
        for (std::size_t j = i + 1; j < res.B.size(); ++j)
            if (!A.contains(res.B[i] * res.B[i] + res.B[j] + res.t))
                throw std::logic_error("greedy_sumset_builder produced an unverified inclusion");
    return res;
}

std::optional<std::vector<Rational>> delta_set_search(const std::vector<Rational>& A, int size,
                                                      const std::vector<Rational>& grid, const DeltaOptions& opts) {
    if (size < 1) fail(ErrorKind::ConfigInvalid, "size must be >= 1");
    if (!std::is_sorted(grid.begin(), grid.end())) fail(ErrorKind::PreconditionFailed, "grid must be sorted");
    const std::set<Rational> diffs(A.begin(), A.end());
    std::vector<std::size_t> pick;
    std::uint64_t nodes = 0;
    std::function<bool(std::size_t)> dfs = [&](std::size_t from) {
        if (pick.size() == static_cast<std::size_t>(size)) return true;
        for (std::size_t j = from; j < grid.size(); ++j) {
            if (++nodes > opts.node_budget) fail(ErrorKind::BudgetExceeded, "delta_set_search node budget exceeded");
            if (!pick.empty() && grid[j] <= grid[pick.back()]) continue;
            const bool ok = std::all_of(pick.begin(), pick.end(), [&](std::size_t i) { return diffs.contains(grid[j] - grid[i]); });
            if (!ok) continue;
            pick.push_back(j);
            if (dfs(j + 1)) return true;
            pick.pop_back();
        }
        return false;
    };
    if (!dfs(0)) return std::nullopt;
    std::vector<Rational> out;
    for (std::size_t i : pick) out.push_back(grid[i]);
    return out;
}

}  // namespace sumset::ramseycomb
