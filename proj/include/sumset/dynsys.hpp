#pragma once

#include "sumset/adele.hpp"
#include "sumset/binom_poly.hpp"

#include <complex>
#include <functional>
#include <map>
#include <optional>
#include <vector>

namespace sumset::dynsys {

using adele::AdeleClassElement;
using adele::CircleValue;
using exactq::BinomPoly;
using exactq::Rational;

/// Element of V = (A/Q)^l.
using Vec = std::vector<AdeleClassElement>;

enum class Variant {
    QAdelic,    // S^q(v)_j = v_j + sum_{i<j} C(q, j-i) v_i + C(q, j) alpha
    ZTorus,     // same formula, integer time, real coordinates only
    Quadratic,  // k = 2: T^q(x, y) = (x + q alpha, y + 2 q x + q^2 alpha)
};

struct SkewSystem {
    int l = 1;
    int k = 1;
    Vec alpha;
    Variant variant = Variant::QAdelic;

    void validate() const;
};

/// Coordinates v_1..v_k, each in V.
struct OrbitPoint {
    std::vector<Vec> v;

    static OrbitPoint zero(int k, int l);
    friend bool operator==(const OrbitPoint&, const OrbitPoint&) = default;
};

OrbitPoint operator+(const OrbitPoint& a, const OrbitPoint& b);

/// g_w(v) = e_Q(sum_i w_i . v_i), w_i in Q^l.
struct CharacterObservable {
    std::vector<std::vector<Rational>> w;

    static CharacterObservable constant_one(int k, int l);
    bool is_trivial() const;
    friend bool operator==(const CharacterObservable&, const CharacterObservable&) = default;
};

OrbitPoint apply(const SkewSystem& sys, const Rational& q, const OrbitPoint& x);
CircleValue char_eval(const CharacterObservable& g, const OrbitPoint& x);
/// Character on V alone: e_Q(w . z).
CircleValue char_eval(const std::vector<Rational>& w, const Vec& z);

struct DerivativeIdentity {
    CircleValue constant;           // (sum_j C(q,j) w_j)(alpha)
    CharacterObservable shifted;    // w'(q)
    CircleValue lhs;                // g_w(S^q v) - g_w(v)
    CircleValue rhs;                // constant + g_{w'}(v)
    bool holds = false;
};

/// Delta_q g_w = (q w_1 + ... + C(q,k) w_k)(alpha) * g_{w'(q)}, w'_i = sum_{j>i} C(q, j-i) w_j.
DerivativeIdentity char_derivative_identity(const SkewSystem& sys, const CharacterObservable& g, const Rational& q,
                                            const OrbitPoint& x);

enum class AverageMode { Sigma, Lambda };

/// (1/|Phi|) sum_{q in Phi} f(S^q base) * g(R^{t(q)} v_1(base)), with R^t z = z + t alpha and
/// t(q) = P(q) (Lambda) or P(q) + q (Sigma). phi must be sorted.
std::complex<double> empirical_average(const SkewSystem& sys, const BinomPoly& P, const CharacterObservable& f,
                                       const std::vector<Rational>& g, const OrbitPoint& base,
                                       const std::vector<Rational>& phi, AverageMode mode);

/// (1/|Phi|) sum_q e_Q(sum_j q^j beta_j); betas[0] is beta_1.
std::complex<double> weyl_sum(const std::vector<AdeleClassElement>& betas, const std::vector<Rational>& phi);

/// Open arc (lo, lo + len) of R/Z, 0 < len <= 1; may wrap through 0. The whole circle when `full`.
struct Arc {
    Rational lo, len;
    bool full = true;

    static Arc whole() { return {}; }
    /// Requires lo < hi <= lo + 1, e.g. open(7/8, 9/8) wraps.
    static Arc open(const Rational& lo, const Rational& hi);
    Rational hi() const { return lo + len; }
    bool contains(const Rational& angle) const;
};

/// Basic open set on one coordinate of A/Q: the real angle of the canonical
/// representative lies in `arc`, and for each listed prime the canonical Z_p
/// part starts with the given digits.
struct CoordinateBox {
    Arc arc;
    std::map<unsigned long, std::vector<unsigned>> digits;

    bool contains(const AdeleClassElement& a) const;
    bool unconstrained() const { return arc.full && digits.empty(); }
};

/// Product of coordinate boxes over the flattened coordinates (v_1[0..l), v_2[0..l), ...).
/// Missing trailing coordinates are unconstrained.
struct OpenBox {
    std::vector<CoordinateBox> coords;

    static OpenBox whole() { return {}; }
    bool contains(const OrbitPoint& x) const;
    bool is_whole() const;
};

/// (V + U) cap U = empty, decided on the real arcs of a one-coordinate box.
bool sum_avoids(const CoordinateBox& v, const CoordinateBox& u);

struct EfsOptions {
    std::uint64_t node_budget = 100'000;
};

struct EfsResult {
    std::optional<std::vector<Rational>> chain;  // empty: NotFound
    std::uint64_t nodes = 0;
};

/// Distinct s_1..s_m from phi with S^{s_i} x0 in U for all i and
/// S^{P(s_i) + s_j} x0 in V for all i < j. Depth-first with backtracking; a
/// returned chain has been re-verified. BudgetExceeded past the node budget.
EfsResult efs_search(const SkewSystem& sys, const OrbitPoint& x0, const BinomPoly& P, const OpenBox& U,
                     const OpenBox& V, int m, const std::vector<Rational>& phi, const EfsOptions& opts = {});

/// Direct O(m^2) check of every membership an EFS chain claims.
bool verify_efs_chain(const SkewSystem& sys, const OrbitPoint& x0, const BinomPoly& P, const OpenBox& U,
                      const OpenBox& V, const std::vector<Rational>& chain);

struct RemarkReport {
    std::vector<Rational> A;
    std::size_t pairs_checked = 0;
    std::vector<std::pair<Rational, Rational>> violations;
    bool passed() const { return violations.empty(); }
};

/// A = { q in phi : q alpha in U, q^2 alpha in V }; checks b1^2 + b2 not in A for all b1, b2 in A.
/// PreconditionFailed unless (V + U) cap U = empty.
RemarkReport remark_counterexample_check(const AdeleClassElement& alpha, const CoordinateBox& U,
                                         const CoordinateBox& V, const std::vector<Rational>& phi);

/// The Remark system on (A/Q)^2 with the given alpha.
SkewSystem remark_system(const AdeleClassElement& alpha);

struct VdcReport {
    double mean_sq = 0;          // |(1/|Phi_N|) sum u(q)|^2
    double correlation = 0;      // mean over r in Phi_R of |z(r)|
    std::vector<std::pair<Rational, double>> z;  // |z(r)| per r
};

VdcReport vdc_diagnostic(const std::function<std::complex<double>(const Rational&)>& u,
                         const std::vector<Rational>& phi_N, const std::vector<Rational>& phi_R);

/// n-th continued-fraction convergent of sqrt(2): 1, 3/2, 7/5, 17/12, ...
Rational sqrt2_convergent(int n);

nlohmann::json to_json(const SkewSystem& sys);
SkewSystem system_from_json(const nlohmann::json& j);
nlohmann::json to_json(const OrbitPoint& x);
OrbitPoint point_from_json(const nlohmann::json& j);
nlohmann::json to_json(const OpenBox& box);
OpenBox box_from_json(const nlohmann::json& j);

}  // namespace sumset::dynsys
