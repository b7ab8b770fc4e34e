#include "sumset/dynsys.hpp"

#include "sumset/errors.hpp"

#include <set>

namespace sumset::dynsys {

using adele::e_Q;
using adele::scalar_mul;
using exactq::binom;

namespace {

Vec zero_vec(int l) { return Vec(static_cast<std::size_t>(l)); }

Vec add(const Vec& a, const Vec& b) {
    Vec out(a.size());
    for (std::size_t c = 0; c < a.size(); ++c) out[c] = a[c] + b[c];
    return out;
}

Vec scale(const Rational& q, const Vec& a) {
    Vec out(a.size());
    for (std::size_t c = 0; c < a.size(); ++c) out[c] = scalar_mul(q, a[c]);
    return out;
}

bool real_only(const Vec& a) {
    for (const auto& x : a)
        if (!x.parts().empty()) return false;
    return true;
}

void check_shape(const SkewSystem& sys, const OrbitPoint& x) {
    if (static_cast<int>(x.v.size()) != sys.k) fail(ErrorKind::PreconditionFailed, "orbit point has wrong height");
    for (const auto& vi : x.v)
        if (static_cast<int>(vi.size()) != sys.l) fail(ErrorKind::PreconditionFailed, "orbit point has wrong dimension");
}

OrbitPoint apply_binomial(const SkewSystem& sys, const Rational& q, const OrbitPoint& x) {
    OrbitPoint out;
    for (int j = 0; j < sys.k; ++j) {
        Vec acc = add(x.v[static_cast<std::size_t>(j)], scale(binom(q, static_cast<unsigned>(j + 1)), sys.alpha));
        for (int i = 0; i < j; ++i)
            acc = add(acc, scale(binom(q, static_cast<unsigned>(j - i)), x.v[static_cast<std::size_t>(i)]));
        out.v.push_back(std::move(acc));
    }
    return out;
}

// Integer-time torus skew product on rational angles.
OrbitPoint apply_torus(const SkewSystem& sys, const Rational& n, const OrbitPoint& x) {
    if (!n.is_integer()) fail(ErrorKind::PreconditionFailed, "torus skew product needs integer time");
    for (const auto& vi : x.v)
        if (!real_only(vi)) fail(ErrorKind::PreconditionFailed, "torus coordinates must be real angles");
    OrbitPoint out;
    for (int j = 0; j < sys.k; ++j) {
        Vec acc;
        for (int c = 0; c < sys.l; ++c) {
            const auto cc = static_cast<std::size_t>(c);
            Rational t = x.v[static_cast<std::size_t>(j)][cc].real() +
                         binom(n, static_cast<unsigned>(j + 1)) * sys.alpha[cc].real();
            for (int i = 0; i < j; ++i)
                t += binom(n, static_cast<unsigned>(j - i)) * x.v[static_cast<std::size_t>(i)][cc].real();
            acc.push_back(AdeleClassElement::from_real(t.frac()));
        }
        out.v.push_back(std::move(acc));
    }
    return out;
}

OrbitPoint apply_quadratic(const SkewSystem& sys, const Rational& q, const OrbitPoint& x) {
    OrbitPoint out;
    out.v.push_back(add(x.v[0], scale(q, sys.alpha)));
    out.v.push_back(add(add(x.v[1], scale(Rational(2) * q, x.v[0])), scale(q * q, sys.alpha)));
    return out;
}

}  // namespace

void SkewSystem::validate() const {
    if (l < 1 || k < 1) fail(ErrorKind::ConfigInvalid, "skew system needs l >= 1 and k >= 1");
    if (static_cast<int>(alpha.size()) != l) fail(ErrorKind::ConfigInvalid, "alpha must have l coordinates");
    if (variant == Variant::Quadratic && k != 2) fail(ErrorKind::ConfigInvalid, "the quadratic system has k = 2");
    if (variant == Variant::ZTorus && !real_only(alpha))
        fail(ErrorKind::ConfigInvalid, "torus alpha must be a real angle");
}

OrbitPoint OrbitPoint::zero(int k, int l) {
    return OrbitPoint{std::vector<Vec>(static_cast<std::size_t>(k), zero_vec(l))};
}

OrbitPoint operator+(const OrbitPoint& a, const OrbitPoint& b) {
    OrbitPoint out;
    for (std::size_t i = 0; i < a.v.size(); ++i) out.v.push_back(add(a.v[i], b.v[i]));
    return out;
}

CharacterObservable CharacterObservable::constant_one(int k, int l) {
    return {std::vector<std::vector<Rational>>(static_cast<std::size_t>(k),
                                               std::vector<Rational>(static_cast<std::size_t>(l)))};
}

bool CharacterObservable::is_trivial() const {
    for (const auto& wi : w)
        for (const auto& x : wi)
            if (!x.is_zero()) return false;
    return true;
}

OrbitPoint apply(const SkewSystem& sys, const Rational& q, const OrbitPoint& x) {
    check_shape(sys, x);
    switch (sys.variant) {
    case Variant::QAdelic:
        return apply_binomial(sys, q, x);
    case Variant::ZTorus:
        return apply_torus(sys, q, x);
    case Variant::Quadratic:
        return apply_quadratic(sys, q, x);
    }
    fail(ErrorKind::ConfigInvalid, "unknown system variant");
}

CircleValue char_eval(const std::vector<Rational>& w, const Vec& z) {
    CircleValue acc;
    for (std::size_t c = 0; c < w.size(); ++c)
        if (!w[c].is_zero()) acc += e_Q(scalar_mul(w[c], z[c]));
    return acc;
}

CircleValue char_eval(const CharacterObservable& g, const OrbitPoint& x) {
    CircleValue acc;
    for (std::size_t i = 0; i < g.w.size(); ++i) acc += char_eval(g.w[i], x.v[i]);
    return acc;
}

DerivativeIdentity char_derivative_identity(const SkewSystem& sys, const CharacterObservable& g, const Rational& q,
                                            const OrbitPoint& x) {
    if (sys.variant == Variant::Quadratic)
        fail(ErrorKind::PreconditionFailed, "the derivative identity is stated for the binomial skew product");
    const std::size_t k = static_cast<std::size_t>(sys.k);
    const std::size_t l = static_cast<std::size_t>(sys.l);
    if (g.w.size() != k) fail(ErrorKind::PreconditionFailed, "character height differs from the system's");

    std::vector<Rational> total(l);
    for (std::size_t j = 1; j <= k; ++j)
        for (std::size_t c = 0; c < l; ++c) total[c] += binom(q, static_cast<unsigned>(j)) * g.w[j - 1][c];

    DerivativeIdentity out;
    out.constant = char_eval(total, sys.alpha);
    out.shifted = CharacterObservable::constant_one(sys.k, sys.l);
    for (std::size_t i = 1; i < k; ++i)
        for (std::size_t j = i + 1; j <= k; ++j)
            for (std::size_t c = 0; c < l; ++c)
                out.shifted.w[i - 1][c] += binom(q, static_cast<unsigned>(j - i)) * g.w[j - 1][c];
    out.lhs = char_eval(g, apply(sys, q, x)) - char_eval(g, x);
    out.rhs = out.constant + char_eval(out.shifted, x);
    out.holds = out.lhs == out.rhs;
    return out;
}

std::complex<double> empirical_average(const SkewSystem& sys, const BinomPoly& P, const CharacterObservable& f,
                                       const std::vector<Rational>& g, const OrbitPoint& base,
                                       const std::vector<Rational>& phi, AverageMode mode) {
    check_shape(sys, base);
    if (phi.empty()) fail(ErrorKind::PreconditionFailed, "empty averaging set");
    const bool f_trivial = f.is_trivial();
    bool g_trivial = true;
    for (const auto& x : g) g_trivial = g_trivial && x.is_zero();
    if (f_trivial && g_trivial) return {1.0, 0.0};

    const Vec& z = base.v[0];
    std::complex<double> acc;
    for (const auto& q : phi) {
        CircleValue angle;
        if (!f_trivial) angle += char_eval(f, apply(sys, q, base));
        if (!g_trivial) {
            const Rational t = mode == AverageMode::Lambda ? P(q) : P(q) + q;
            angle += char_eval(g, add(z, scale(t, sys.alpha)));
        }
        acc += angle.to_complex();
    }
    return acc / static_cast<double>(phi.size());
}

std::complex<double> weyl_sum(const std::vector<AdeleClassElement>& betas, const std::vector<Rational>& phi) {
    if (betas.empty()) fail(ErrorKind::PreconditionFailed, "weyl_sum needs at least one beta");
    if (phi.empty()) fail(ErrorKind::PreconditionFailed, "empty averaging set");
    bool all_zero = true;
    for (const auto& b : betas) all_zero = all_zero && b.is_zero();
    if (all_zero) return {1.0, 0.0};

    std::complex<double> acc;
    for (const auto& q : phi) {
        CircleValue angle;
        Rational qj(1);
        for (const auto& b : betas) {
            qj *= q;
            if (!b.is_zero()) angle += e_Q(scalar_mul(qj, b));
        }
        acc += angle.to_complex();
    }
    return acc / static_cast<double>(phi.size());
}

Arc Arc::open(const Rational& lo, const Rational& hi) {
    if (!(lo < hi) || hi - lo > Rational(1)) fail(ErrorKind::ConfigInvalid, "arc needs lo < hi <= lo + 1");
    return Arc{lo.frac(), hi - lo, false};
}

bool Arc::contains(const Rational& angle) const {
    if (full) return true;
    const Rational d = (angle - lo).frac();
    return Rational(0) < d && d < len;
}

bool CoordinateBox::contains(const AdeleClassElement& a) const {
    if (unconstrained()) return true;
    if (!arc.contains(a.real_angle())) return false;
    if (digits.empty()) return true;
    const auto form = a.canonical();
    for (const auto& [p, pattern] : digits) {
        auto it = form.parts.find(p);
        const adele::PAdicNumber x = it != form.parts.end() ? it->second : adele::PAdicNumber::exact(p, form.tail);
        const long n = static_cast<long>(pattern.size());
        if (!x.is_exact() && *x.abs_precision() < n)
            fail(ErrorKind::InsufficientPrecision, "box digit pattern reaches past the known digits");
        exactq::Integer want = 0;
        for (auto d = pattern.rbegin(); d != pattern.rend(); ++d) want = want * p + *d;
        if (adele::reduce_mod(x.value(), p, n) != Rational(want)) return false;
    }
    return true;
}

bool OpenBox::contains(const OrbitPoint& x) const {
    std::size_t idx = 0;
    for (const auto& vi : x.v)
        for (const auto& a : vi) {
            if (idx < coords.size() && !coords[idx].contains(a)) return false;
            ++idx;
        }
    return true;
}

bool OpenBox::is_whole() const {
    for (const auto& c : coords)
        if (!c.unconstrained()) return false;
    return true;
}

bool sum_avoids(const CoordinateBox& v, const CoordinateBox& u) {
    if (v.arc.full || u.arc.full) return false;
    const Rational sum_lo = v.arc.lo + u.arc.lo;
    const Rational sum_len = v.arc.len + u.arc.len;
    if (sum_len >= Rational(1)) return false;
    // Open arcs (a, a+la) and (b, b+lb) are disjoint iff each starts outside the other.
    return (u.arc.lo - sum_lo).frac() >= sum_len && (sum_lo - u.arc.lo).frac() >= u.arc.len;
}

bool verify_efs_chain(const SkewSystem& sys, const OrbitPoint& x0, const BinomPoly& P, const OpenBox& U,
                      const OpenBox& V, const std::vector<Rational>& chain) {
    std::set<Rational> seen(chain.begin(), chain.end());
    if (seen.size() != chain.size()) return false;
    for (std::size_t j = 0; j < chain.size(); ++j) {
        if (!U.contains(apply(sys, chain[j], x0))) return false;
        for (std::size_t i = 0; i < j; ++i)
            if (!V.contains(apply(sys, P(chain[i]) + chain[j], x0))) return false;
    }
    return true;
}

EfsResult efs_search(const SkewSystem& sys, const OrbitPoint& x0, const BinomPoly& P, const OpenBox& U,
                     const OpenBox& V, int m, const std::vector<Rational>& phi, const EfsOptions& opts) {
    if (m < 1) fail(ErrorKind::PreconditionFailed, "EFS depth must be >= 1");
    std::vector<std::size_t> candidates;
    for (std::size_t i = 0; i < phi.size(); ++i)
        if (U.contains(apply(sys, phi[i], x0))) candidates.push_back(i);

    std::map<Rational, bool> in_v;
    const auto v_hit = [&](const Rational& t) {
        auto it = in_v.find(t);
        if (it == in_v.end()) it = in_v.emplace(t, V.contains(apply(sys, t, x0))).first;
        return it->second;
    };

    EfsResult result;
    std::vector<Rational> chain;
    std::vector<Rational> shifts;  // P(s_i)
    std::vector<bool> used(phi.size(), false);

    std::function<bool()> extend = [&]() -> bool {
        if (static_cast<int>(chain.size()) == m) return true;
        for (std::size_t idx : candidates) {
            if (used[idx]) continue;
            const Rational& s = phi[idx];
            bool ok = true;
            for (const auto& ps : shifts)
                if (!v_hit(ps + s)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            if (++result.nodes > opts.node_budget)
                fail(ErrorKind::BudgetExceeded, "EFS search exceeded its node budget");
            used[idx] = true;
            chain.push_back(s);
            shifts.push_back(P(s));
            if (extend()) return true;
            used[idx] = false;
            chain.pop_back();
            shifts.pop_back();
        }
        return false;
    };

    if (extend()) {
        if (!verify_efs_chain(sys, x0, P, U, V, chain))
            fail(ErrorKind::PreconditionFailed, "EFS chain failed re-verification");
        result.chain = chain;
    }
    return result;
}

SkewSystem remark_system(const AdeleClassElement& alpha) { return SkewSystem{1, 2, {alpha}, Variant::Quadratic}; }

RemarkReport remark_counterexample_check(const AdeleClassElement& alpha, const CoordinateBox& U,
                                         const CoordinateBox& V, const std::vector<Rational>& phi) {
    if (!sum_avoids(V, U)) fail(ErrorKind::PreconditionFailed, "(V + U) meets U; the counterexample needs them apart");
    const auto in_a = [&](const Rational& q) {
        return U.contains(scalar_mul(q, alpha)) && V.contains(scalar_mul(q * q, alpha));
    };
    RemarkReport report;
    for (const auto& q : phi)
        if (in_a(q)) report.A.push_back(q);
    for (const auto& b1 : report.A)
        for (const auto& b2 : report.A) {
            ++report.pairs_checked;
            if (in_a(b1 * b1 + b2)) report.violations.emplace_back(b1, b2);
        }
    return report;
}

VdcReport vdc_diagnostic(const std::function<std::complex<double>(const Rational&)>& u,
                         const std::vector<Rational>& phi_N, const std::vector<Rational>& phi_R) {
    if (phi_N.empty()) fail(ErrorKind::PreconditionFailed, "empty averaging set");
    const double n = static_cast<double>(phi_N.size());
    std::map<Rational, std::complex<double>> cache;
    const auto val = [&](const Rational& q) {
        auto it = cache.find(q);
        if (it == cache.end()) it = cache.emplace(q, u(q)).first;
        return it->second;
    };
    VdcReport report;
    std::complex<double> avg;
    for (const auto& q : phi_N) avg += val(q);
    avg /= n;
    report.mean_sq = std::norm(avg);
    for (const auto& r : phi_R) {
        std::complex<double> z;
        for (const auto& q : phi_N) z += val(q + r) * std::conj(val(q));
        const double mag = std::abs(z / n);
        report.z.emplace_back(r, mag);
        report.correlation += mag;
    }
    if (!phi_R.empty()) report.correlation /= static_cast<double>(phi_R.size());
    return report;
}

Rational sqrt2_convergent(int n) {
    exactq::Integer p = 1, q = 1;
    for (int i = 0; i < n; ++i) {
        exactq::Integer np = p + 2 * q;
        q = p + q;
        p = np;
    }
    return Rational(p, q);
}

namespace {

std::string variant_name(Variant v) {
    switch (v) {
    case Variant::QAdelic:
        return "qadelic";
    case Variant::ZTorus:
        return "ztorus";
    case Variant::Quadratic:
        return "quadratic";
    }
    return "?";
}

Variant variant_from(const std::string& s) {
    if (s == "qadelic") return Variant::QAdelic;
    if (s == "ztorus") return Variant::ZTorus;
    if (s == "quadratic") return Variant::Quadratic;
    fail(ErrorKind::ConfigInvalid, "unknown system variant '" + s + "'");
}

nlohmann::json vec_json(const Vec& a) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& x : a) out.push_back(adele::to_json(x));
    return out;
}

Vec vec_from(const nlohmann::json& j) {
    Vec out;
    for (const auto& x : j) out.push_back(adele::adele_from_json(x));
    return out;
}

}  // namespace

nlohmann::json to_json(const SkewSystem& sys) {
    return {{"variant", variant_name(sys.variant)}, {"l", sys.l}, {"k", sys.k}, {"alpha", vec_json(sys.alpha)}};
}

SkewSystem system_from_json(const nlohmann::json& j) {
    try {
        SkewSystem sys;
        sys.variant = variant_from(j.value("variant", std::string("qadelic")));
        sys.l = j.at("l").get<int>();
        sys.k = j.at("k").get<int>();
        sys.alpha = vec_from(j.at("alpha"));
        sys.validate();
        return sys;
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorKind::ConfigInvalid, std::string("bad system JSON: ") + e.what());
    }
}

nlohmann::json to_json(const OrbitPoint& x) {
    nlohmann::json v = nlohmann::json::array();
    for (const auto& vi : x.v) v.push_back(vec_json(vi));
    return {{"v", v}};
}

OrbitPoint point_from_json(const nlohmann::json& j) {
    try {
        OrbitPoint x;
        for (const auto& vi : j.at("v")) x.v.push_back(vec_from(vi));
        return x;
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorKind::ConfigInvalid, std::string("bad point JSON: ") + e.what());
    }
}

nlohmann::json to_json(const OpenBox& box) {
    nlohmann::json coords = nlohmann::json::array();
    for (const auto& c : box.coords) {
        nlohmann::json cj = nlohmann::json::object();
        if (!c.arc.full) cj["arc"] = {c.arc.lo.str(), c.arc.hi().str()};
        if (!c.digits.empty()) {
            nlohmann::json d = nlohmann::json::object();
            for (const auto& [p, pattern] : c.digits) d[std::to_string(p)] = pattern;
            cj["digits"] = d;
        }
        coords.push_back(cj);
    }
    return {{"coords", coords}};
}

OpenBox box_from_json(const nlohmann::json& j) {
    try {
        OpenBox box;
        for (const auto& cj : j.at("coords")) {
            CoordinateBox c;
            if (cj.contains("arc"))
                c.arc = Arc::open(Rational::parse(cj.at("arc").at(0).get<std::string>()),
                                  Rational::parse(cj.at("arc").at(1).get<std::string>()));
            if (cj.contains("digits"))
                for (const auto& [key, val] : cj.at("digits").items())
                    c.digits[std::stoul(key)] = val.get<std::vector<unsigned>>();
            box.coords.push_back(std::move(c));
        }
        return box;
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorKind::ConfigInvalid, std::string("bad box JSON: ") + e.what());
    }
}

}  // namespace sumset::dynsys
