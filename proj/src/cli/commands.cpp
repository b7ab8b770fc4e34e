#include "commands.hpp"

#include "sumset/colorings.hpp"
#include "sumset/dynsys.hpp"
#include "sumset/errors.hpp"
#include "sumset/folner.hpp"
#include "sumset/phasepoly.hpp"
#include "sumset/ramseycomb.hpp"
#include "sumset/sample.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

namespace sumset::cli {

namespace {

using exactq::BinomPoly;
using exactq::PowerPoly;
using exactq::Rational;
using report::Approx;
using report::Cell;
using report::Json;
using report::Report;
using I64 = std::int64_t;

// ---- parsing; malformed input is a configuration error

[[noreturn]] void bad(const std::string& what, const std::string& text) {
    fail(ErrorKind::ConfigInvalid, "invalid " + what + ": '" + text + "'");
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    if (s.empty()) return out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

Rational parse_q(const std::string& s, const std::string& what) {
    try {
        return Rational::parse(s);
    } catch (const Error&) {
        bad(what, s);
    }
}

long parse_int(const std::string& s, const std::string& what) {
    try {
        std::size_t used = 0;
        const long v = std::stol(s, &used);
        if (used != s.size()) bad(what, s);
        return v;
    } catch (const std::logic_error&) {
        bad(what, s);
    }
}

/// "a..b" (empty when b < a), "a,b,c" or "a".
std::vector<int> parse_range(const std::string& s, const std::string& what) {
    const auto dots = s.find("..");
    std::vector<int> out;
    if (dots != std::string::npos) {
        const long lo = parse_int(s.substr(0, dots), what), hi = parse_int(s.substr(dots + 2), what);
        for (long v = lo; v <= hi; ++v) out.push_back(static_cast<int>(v));
        return out;
    }
    for (const auto& part : split(s, ',')) out.push_back(static_cast<int>(parse_int(part, what)));
    return out;
}

/// Rational list, or an integer range "a..b".
std::vector<Rational> parse_rationals(const std::string& s, const std::string& what) {
    std::vector<Rational> out;
    if (s.find("..") != std::string::npos) {
        for (int v : parse_range(s, what)) out.emplace_back(v);
        return out;
    }
    for (const auto& part : split(s, ',')) out.push_back(parse_q(part, what));
    return out;
}

std::vector<unsigned long> parse_primes(const std::string& s) {
    std::vector<unsigned long> out;
    for (const auto& part : split(s, ',')) {
        const long p = parse_int(part, "prime");
        if (p < 2 || !exactq::is_prime(static_cast<unsigned long>(p))) bad("prime", part);
        out.push_back(static_cast<unsigned long>(p));
    }
    return out;
}

BinomPoly parse_poly(const std::string& s) {
    try {
        return exactq::to_binomial(PowerPoly::parse(s));
    } catch (const Error&) {
        bad("polynomial", s);
    }
}

folner::FolnerFamily parse_family(const std::string& s) { return folner::FolnerFamily::parse(s); }

/// "whole" or "lo,hi".
dynsys::CoordinateBox parse_box(const std::string& s) {
    if (s == "whole") return {};
    const auto parts = split(s, ',');
    if (parts.size() != 2) bad("arc", s);
    const Rational lo = parse_q(parts[0], "arc"), hi = parse_q(parts[1], "arc");
    if (!(lo < hi && hi <= lo + Rational(1))) bad("arc", s);
    return {dynsys::Arc::open(lo, hi), {}};
}

std::string power_string(const BinomPoly& p) {
    const auto pw = exactq::to_power(p);
    std::string out;
    for (std::size_t i = pw.coeffs.size(); i-- > 0;) {
        const Rational& c = pw.coeffs[i];
        if (c.is_zero()) continue;
        std::string coef = c.abs().str();
        if (coef.ends_with("/1")) coef.resize(coef.size() - 2);
        if (i > 0 && coef == "1") coef.clear();
        out += out.empty() ? (c.sign() < 0 ? "-" : "") : (c.sign() < 0 ? " - " : " + ");
        out += coef;
        if (i >= 1) out += "x";
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

Json rational_array(const std::vector<Rational>& v) {
    Json a = Json::array();
    for (const auto& q : v) a.push_back(q.str());
    return a;
}

template <class T>
Json int_array(const std::vector<T>& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(static_cast<I64>(x));
    return a;
}

/// Soft checks are assertions only under --assert.
void soft(Report& rep, const Common& c, std::string name, bool ok, Cell lhs, Cell rhs) {
    if (c.assert_mode) rep.check(std::move(name), ok, std::move(lhs), std::move(rhs));
    else rep.info(std::move(name) + (ok ? " [holds]" : " [does not hold]"), std::move(lhs), std::move(rhs));
}

// ---- shared option groups

struct AdelicOpts {
    std::string family = "factorial";
    std::string primes = "2,3,5";
    long precision = 64;

    void bind(CLI::App& app) {
        app.add_option("--family", family, "Folner family: factorial or harmonic");
        app.add_option("--primes", primes, "primes carrying the generic element");
        app.add_option("--precision", precision, "p-adic digits per prime");
    }
    adele::AdeleClassElement element(std::uint64_t seed) const {
        return adele::generic_element(parse_primes(primes), precision, seed);
    }
};

// ---- colorings

class ColorCheck : public Command {
    long max_ = 300;
    std::string sizes_ = "2,3";
    unsigned dval_ = 20;

public:
    const char* name() const override { return "color-check"; }
    const char* help() const override { return "exhaustive five-coloring counterexample check"; }
    void bind(CLI::App& app) override {
        app.add_option("--max", max_, "largest element of B");
        app.add_option("--sizes", sizes_, "sizes of B");
        app.add_option("--doubling-valuation", dval_, "largest v2(y) in the doubling sub-check");
    }
    void run(Report& rep, const Common&) override {
        if (max_ < 2) bad("max", std::to_string(max_));
        const auto sizes = parse_range(sizes_, "sizes");
        const auto r = colorings::counterexample_check(static_cast<colorings::u64>(max_), sizes, dval_);
        Json viol = Json::array();
        for (const auto& B : r.violations) viol.push_back(int_array(B));
        rep.columns = {"max", "sizes", "sets_checked", "sets_excluded", "violations", "equal_pairs", "doubling_pairs"};
        rep.add_row({I64{max_}, sizes_, static_cast<I64>(r.sets_checked), static_cast<I64>(r.sets_excluded), viol,
                     static_cast<I64>(r.equal_pairs), static_cast<I64>(r.doubling_pairs)});
        rep.check("pattern spans >= 2 colors", r.violations.empty(), static_cast<I64>(r.violations.size()), I64{0});
        rep.check("c-bit flip on equal valuations", r.equal_failures.empty(), static_cast<I64>(r.equal_failures.size()), I64{0});
        rep.check("dyadic flip on doubling pairs", r.doubling_failures.empty(), static_cast<I64>(r.doubling_failures.size()),
                  I64{0});
    }
};

class Bergelson : public Command {
    std::string coloring_ = "five";
    long bound_ = 10000;

public:
    const char* name() const override { return "bergelson"; }
    const char* help() const override { return "first monochromatic {b1, b2, b1^2 + b2}"; }
    void bind(CLI::App& app) override {
        app.add_option("--coloring", coloring_, "five, parity or constant");
        app.add_option("--bound", bound_, "search b1 < b2 <= bound");
    }
    void run(Report& rep, const Common&) override {
        colorings::Coloring chi;
        if (coloring_ == "five") chi = colorings::five_coloring();
        else if (coloring_ == "parity") chi = colorings::parity_coloring();
        else if (coloring_ == "constant") chi = colorings::constant_coloring();
        else bad("coloring", coloring_);
        if (bound_ < 2) bad("bound", std::to_string(bound_));
        const auto hit = colorings::bergelson_triple_search(chi, static_cast<colorings::u64>(bound_));
        rep.columns = {"coloring", "bound", "found", "b1", "b2", "b1^2+b2", "color"};
        if (hit) {
            const auto [b1, b2] = *hit;
            const std::string color = coloring_ == "five" ? std::string(colorings::to_string(colorings::five_color(b1)))
                                                          : std::to_string(chi(b1));
            rep.add_row({coloring_, I64{bound_}, true, static_cast<I64>(b1), static_cast<I64>(b2),
                         static_cast<I64>(b1 * b1 + b2), color});
            rep.info("monochromatic triple", static_cast<I64>(b1), static_cast<I64>(b2));
        } else {
            rep.add_row({coloring_, I64{bound_}, false, {}, {}, {}, {}});
            rep.info("no monochromatic triple within bound", I64{bound_}, {});
        }
    }
};

// ---- equidistribution

class Weyl : public Command {
    AdelicOpts ad_;
    std::string N_ = "3..6";
    int degree_ = 2;
    double tol_ = 0.15;
    bool demo_ = false;

public:
    const char* name() const override { return "weyl"; }
    const char* help() const override { return "Weyl sums of e_Q(q^d beta) over a Folner family"; }
    std::string default_format() const override { return demo_ ? "csv" : "json"; }
    void bind(CLI::App& app) override {
        ad_.bind(app);
        app.add_option("--N", N_, "range of N, e.g. 3..6");
        app.add_option("--degree", degree_, "d in q^d beta");
        app.add_option("--tol", tol_, "bound on |S_N| at the last N");
        app.add_flag("--demo", demo_, "the standard sweep, as CSV");
    }
    void run(Report& rep, const Common& c) override {
        if (degree_ < 1) bad("degree", std::to_string(degree_));
        const auto fam = parse_family(ad_.family);
        const auto beta = ad_.element(c.seed);
        std::vector<adele::AdeleClassElement> betas(static_cast<std::size_t>(degree_), adele::AdeleClassElement::zero());
        betas.back() = beta;
        rep.columns = {"N", "size", "abs_S", "re", "im"};
        std::vector<double> mags;
        for (int N : parse_range(N_, "N")) {
            const auto phi = folner::enumerate(fam, N);
            const auto s = dynsys::weyl_sum(betas, phi);
            mags.push_back(std::abs(s));
            rep.add_row({I64{N}, static_cast<I64>(phi.size()), Approx{std::abs(s)}, Approx{s.real()}, Approx{s.imag()}});
        }
        if (mags.size() >= 2)
            soft(rep, c, "|S| decreases from first to last N", mags.back() < mags.front(), Approx{mags.back()},
                 Approx{mags.front()});
        if (!mags.empty()) soft(rep, c, "|S| < tol at last N", mags.back() < tol_, Approx{mags.back()}, Approx{tol_});
    }
};

class RotationAvg : public Command {
    AdelicOpts ad_;
    std::string P_ = "x^2", mode_ = "lambda", w_ = "1", N_ = "6";
    double tol_ = 0.2;

public:
    const char* name() const override { return "rotation-avg"; }
    const char* help() const override { return "empirical averages g(R^{P(q)} x) or g(R^{P(q)+q} x) on the rotation"; }
    void bind(CLI::App& app) override {
        ad_.bind(app);
        app.add_option("--P", P_, "polynomial in x, e.g. x^3+x");
        app.add_option("--mode", mode_, "lambda (P(q)) or sigma (P(q)+q)");
        app.add_option("--w", w_, "character weight on the rotation coordinate");
        app.add_option("--N", N_, "range of N");
        app.add_option("--tol", tol_, "bound on the average at the last N");
    }
    void run(Report& rep, const Common& c) override {
        const auto fam = parse_family(ad_.family);
        const auto P = parse_poly(P_);
        const Rational w = parse_q(w_, "w");
        dynsys::AverageMode mode;
        if (mode_ == "lambda") mode = dynsys::AverageMode::Lambda;
        else if (mode_ == "sigma") mode = dynsys::AverageMode::Sigma;
        else bad("mode", mode_);
        const dynsys::SkewSystem sys{1, 1, {ad_.element(c.seed)}, dynsys::Variant::QAdelic};
        const auto f = dynsys::CharacterObservable::constant_one(1, 1);
        const auto base = dynsys::OrbitPoint::zero(1, 1);
        const bool constant = w.is_zero();
        rep.columns = {"N", "size", "abs_avg", "re", "im"};
        std::vector<std::complex<double>> vals;
        for (int N : parse_range(N_, "N")) {
            const auto phi = folner::enumerate(fam, N);
            const auto s = dynsys::empirical_average(sys, P, f, {w}, base, phi, mode);
            vals.push_back(s);
            rep.add_row({I64{N}, static_cast<I64>(phi.size()), Approx{std::abs(s)}, Approx{s.real()}, Approx{s.imag()}});
        }
        if (vals.empty()) return;
        if (constant)
            rep.check("constant observable averages to exactly 1", vals.back() == std::complex<double>(1.0, 0.0),
                      Approx{std::abs(vals.back())}, Approx{1.0});
        else
            soft(rep, c, "|average| < tol at last N", std::abs(vals.back()) < tol_, Approx{std::abs(vals.back())}, Approx{tol_});
    }
};

class Efs : public Command {
    AdelicOpts ad_;
    std::string system_ = "remark", P_ = "x^2", U_ = "0,1/8", V_ = "1/2,5/8";
    int m_ = 2, N_ = 4;
    std::uint64_t budget_ = 100'000;

public:
    const char* name() const override { return "efs"; }
    const char* help() const override { return "search for an EFS chain s_1..s_m inside a Folner set"; }
    void bind(CLI::App& app) override {
        ad_.bind(app);
        app.add_option("--system", system_, "remark or rotation");
        app.add_option("--P", P_, "polynomial");
        app.add_option("--U", U_, "arc lo,hi or whole");
        app.add_option("--V", V_, "arc lo,hi or whole");
        app.add_option("--m", m_, "chain length");
        app.add_option("--N", N_, "Folner index");
        app.add_option("--budget", budget_, "node budget");
    }
    void run(Report& rep, const Common& c) override {
        const auto fam = parse_family(ad_.family);
        const auto P = parse_poly(P_);
        const auto U = parse_box(U_), V = parse_box(V_);
        const auto alpha = ad_.element(c.seed);
        const auto phi = folner::enumerate(fam, N_);
        dynsys::SkewSystem sys;
        dynsys::OrbitPoint x0;
        dynsys::OpenBox bu, bv;
        if (system_ == "remark") {
            sys = dynsys::remark_system(alpha);
            x0 = dynsys::OrbitPoint::zero(2, 1);
            bu = bv = dynsys::OpenBox{{U, V}};
        } else if (system_ == "rotation") {
            sys = {1, 1, {alpha}, dynsys::Variant::QAdelic};
            x0 = dynsys::OrbitPoint::zero(1, 1);
            bu = dynsys::OpenBox{{U}};
            bv = dynsys::OpenBox{{V}};
        } else {
            bad("system", system_);
        }
        const auto res = dynsys::efs_search(sys, x0, P, bu, bv, m_, phi, {budget_});
        rep.columns = {"system", "m", "N", "found", "chain", "nodes"};
        rep.add_row({system_, I64{m_}, I64{N_}, res.chain.has_value(), res.chain ? Cell{rational_array(*res.chain)} : Cell{},
                     static_cast<I64>(res.nodes)});
        if (res.chain)
            rep.check("chain re-verifies", dynsys::verify_efs_chain(sys, x0, P, bu, bv, *res.chain),
                      static_cast<I64>(res.chain->size()), I64{m_});
        if (system_ == "remark" && m_ >= 2 && dynsys::sum_avoids(V, U))
            rep.check("no chain when (V+U) cap U is empty", !res.chain.has_value(), res.chain.has_value(), false);
        else
            rep.info(res.chain ? "chain found" : "no chain within the Folner set", static_cast<I64>(res.nodes), {});
    }
};

class RemarkCheck : public Command {
    AdelicOpts ad_;
    std::string U_ = "0,1/8", V_ = "1/2,5/8", N_ = "1..6";

public:
    const char* name() const override { return "remark-check"; }
    const char* help() const override { return "A = {q : q alpha in U, q^2 alpha in V} avoids b1^2 + b2"; }
    void bind(CLI::App& app) override {
        ad_.bind(app);
        app.add_option("--U", U_, "arc lo,hi");
        app.add_option("--V", V_, "arc lo,hi");
        app.add_option("--N", N_, "range of N");
    }
    void run(Report& rep, const Common& c) override {
        const auto fam = parse_family(ad_.family);
        const auto U = parse_box(U_), V = parse_box(V_);
        const auto alpha = ad_.element(c.seed);
        rep.columns = {"N", "size", "A_size", "pairs_checked", "violations"};
        I64 total = 0;
        for (int N : parse_range(N_, "N")) {
            const auto phi = folner::enumerate(fam, N);
            const auto r = dynsys::remark_counterexample_check(alpha, U, V, phi);
            Json viol = Json::array();
            for (const auto& [a, b] : r.violations) viol.push_back(Json::array({a.str(), b.str()}));
            total += static_cast<I64>(r.violations.size());
            rep.add_row({I64{N}, static_cast<I64>(phi.size()), static_cast<I64>(r.A.size()),
                         static_cast<I64>(r.pairs_checked), viol});
        }
        rep.check("b1^2 + b2 never in A", total == 0, total, I64{0});
    }
};

// ---- densities

class Density : public Command {
    std::string family_ = "factorial", delta_ = "1/8,1/4,3/8", N_ = "6", tol_;

public:
    const char* name() const override { return "density"; }
    const char* help() const override { return "density of D_delta = {q : ||q|| < delta} in Phi_N"; }
    void bind(CLI::App& app) override {
        app.add_option("--family", family_, "Folner family");
        app.add_option("--delta", delta_, "list of delta in (0, 1/2]");
        app.add_option("--N", N_, "range of N");
        app.add_option("--tol", tol_, "bound on |d - 2 delta| (default 2/N)");
    }
    void run(Report& rep, const Common& c) override {
        const auto fam = parse_family(family_);
        const auto deltas = parse_rationals(delta_, "delta");
        const auto Ns = parse_range(N_, "N");
        const std::optional<Rational> tol = tol_.empty() ? std::nullopt : std::optional(parse_q(tol_, "tol"));
        rep.columns = {"delta", "N", "size", "density", "two_delta", "error"};
        for (const auto& d : deltas) {
            const auto D = folner::return_time_set(d);
            for (int N : Ns) {
                const auto phi = folner::enumerate(fam, N);
                const Rational dens = folner::density(D, phi), err = (dens - Rational(2) * d).abs();
                rep.add_row({d, I64{N}, static_cast<I64>(phi.size()), dens, Rational(2) * d, err});
                const Rational bound = tol ? *tol : Rational(2, N);
                soft(rep, c, "|d - 2 delta| <= tol (delta " + d.str() + ", N " + std::to_string(N) + ")", err <= bound, err, bound);
            }
        }
    }
};

class Defect : public Command {
    std::string family_ = "factorial", x_ = "1", N_ = "2..6";

public:
    const char* name() const override { return "defect"; }
    const char* help() const override { return "Folner defect |(Phi_N + x) symdiff Phi_N| / |Phi_N|"; }
    void bind(CLI::App& app) override {
        app.add_option("--family", family_, "Folner family");
        app.add_option("--x", x_, "translation");
        app.add_option("--N", N_, "range of N");
    }
    void run(Report& rep, const Common& c) override {
        const auto fam = parse_family(family_);
        const Rational x = parse_q(x_, "x");
        rep.columns = {"N", "size", "defect"};
        std::vector<Rational> vals;
        for (int N : parse_range(N_, "N")) {
            const auto phi = folner::enumerate(fam, N);
            vals.push_back(folner::folner_defect(phi, x));
            rep.add_row({I64{N}, static_cast<I64>(phi.size()), vals.back()});
        }
        bool monotone = true;
        for (std::size_t i = 1; i < vals.size(); ++i) monotone = monotone && vals[i] <= vals[i - 1];
        if (vals.size() >= 2) soft(rep, c, "defect non-increasing in N", monotone, vals.back(), vals.front());
    }
};

// ---- combinatorics

class BuildSumset : public Command {
    std::string A_ = "even";
    int k_ = -1;
    std::size_t m_ = 4, prefix_ = 20;
    std::uint64_t horizon_ = 100'000;
    int gap_ = 5;

public:
    const char* name() const override { return "build-sumset"; }
    const char* help() const override { return "greedy {b_i^2 + b_j} inside A - t for a piecewise syndetic A"; }
    void bind(CLI::App& app) override {
        app.add_option("--A", A_, "even, mod3 (3Z u 3Z+1), syndetic (random, gaps <= --gap) or naturals");
        app.add_option("--k", k_, "syndeticity bound (default: gap - 1 of A)");
        app.add_option("--m", m_, "size of B");
        app.add_option("--horizon", horizon_, "A is known on 1..horizon");
        app.add_option("--gap", gap_, "largest gap of the random syndetic set");
        app.add_option("--prefix", prefix_, "length cap of the greedy sequence");
    }
    void run(Report& rep, const Common& c) override {
        ramseycomb::IntegerSet A;
        A.horizon = horizon_;
        A.label = A_;
        unsigned k = 0;
        if (A_ == "even") {
            A.contains = [](std::uint64_t x) { return x % 2 == 0; };
            k = 1;
        } else if (A_ == "mod3") {
            A.contains = [](std::uint64_t x) { return x % 3 != 2; };
            k = 1;
        } else if (A_ == "naturals") {
            A.contains = [](std::uint64_t) { return true; };
        } else if (A_ == "syndetic") {
            if (gap_ < 1) bad("gap", std::to_string(gap_));
            sample::Gen g(c.seed);
            auto member = std::make_shared<std::vector<bool>>(horizon_ + 1, false);
            for (std::uint64_t x = static_cast<std::uint64_t>(g.integer(1, gap_)); x <= horizon_;
                 x += static_cast<std::uint64_t>(g.integer(1, gap_)))
                (*member)[x] = true;
            A.contains = [member](std::uint64_t x) { return x < member->size() && (*member)[x]; };
            k = static_cast<unsigned>(gap_ - 1);
        } else {
            bad("A", A_);
        }
        if (k_ >= 0) k = static_cast<unsigned>(k_);
        const auto r = ramseycomb::greedy_sumset_builder(A, k, m_, {prefix_});
        rep.columns = {"A", "k", "m", "found", "t", "B", "prefix", "reason"};
        rep.add_row({A_, I64{k}, static_cast<I64>(m_), r.found(), r.found() ? Cell{static_cast<I64>(r.t)} : Cell{},
                     int_array(r.B), int_array(r.c), r.exhausted});
        if (r.found()) {
            I64 bad_count = 0;
            for (std::size_t i = 0; i < r.B.size(); ++i)
                for (std::size_t j = i + 1; j < r.B.size(); ++j)
                    if (!A.contains(r.B[i] * r.B[i] + r.B[j] + r.t)) ++bad_count;
            rep.check("b_i^2 + b_j + t in A for all i < j", bad_count == 0, bad_count, I64{0});
        } else {
            rep.info("exhausted", r.exhausted, {});
        }
    }
};

class DeltaFind : public Command {
    std::string A_ = "1,2,3", grid_ = "0..3";
    int size_ = 3;
    std::uint64_t budget_ = 10'000'000;

public:
    const char* name() const override { return "delta-find"; }
    const char* help() const override { return "b_1 < ... < b_size with all differences in A"; }
    void bind(CLI::App& app) override {
        app.add_option("--A", A_, "allowed differences");
        app.add_option("--size", size_, "number of b's");
        app.add_option("--grid", grid_, "candidate values, list or a..b");
        app.add_option("--budget", budget_, "node budget");
    }
    void run(Report& rep, const Common&) override {
        const auto A = parse_rationals(A_, "A");
        auto grid = parse_rationals(grid_, "grid");
        std::sort(grid.begin(), grid.end());
        const auto B = ramseycomb::delta_set_search(A, size_, grid, {budget_});
        rep.columns = {"size", "found", "B"};
        rep.add_row({I64{size_}, B.has_value(), B ? Cell{rational_array(*B)} : Cell{}});
        if (B) {
            const std::set<Rational> diffs(A.begin(), A.end());
            I64 missing = 0;
            for (std::size_t i = 0; i < B->size(); ++i)
                for (std::size_t j = i + 1; j < B->size(); ++j) missing += diffs.contains((*B)[j] - (*B)[i]) ? 0 : 1;
            rep.check("all differences in A", missing == 0, missing, I64{0});
        } else {
            rep.info("not found within grid", static_cast<I64>(grid.size()), {});
        }
    }
};

class Ramsey : public Command {
    std::string H_ = "path3";
    unsigned r_ = 2;
    int cap_ = 8;
    std::uint64_t budget_ = 50'000'000;

public:
    const char* name() const override { return "ramsey"; }
    const char* help() const override { return "ordered Ramsey number by exhaustive search"; }
    void bind(CLI::App& app) override {
        app.add_option("--H", H_, "path3, efs<d>, edge<l>, K<m> or hypergraph JSON");
        app.add_option("--r", r_, "number of colors");
        app.add_option("--cap", cap_, "largest n searched");
        app.add_option("--budget", budget_, "colorings per n");
    }
    void run(Report& rep, const Common&) override {
        const auto H = ramseycomb::OrderedHypergraph::parse(H_);
        const auto R = ramseycomb::ordered_ramsey_number(H, r_, {cap_, budget_});
        rep.columns = {"H", "r", "cap", "R", "above_cap"};
        rep.add_row({Json::parse(ramseycomb::to_json(H).dump()), I64{r_}, I64{cap_}, R ? Cell{I64{*R}} : Cell{}, !R.has_value()});
        rep.info(R ? "R_<(H, r)" : "above cap", R ? Cell{I64{*R}} : Cell{}, I64{cap_});
    }
};

class MeasureRamsey : public Command {
    std::string H_ = "path3";
    unsigned r_ = 2;
    int X_ = 4, instances_ = 200, cap_ = 8;
    long grain_ = 6;

public:
    const char* name() const override { return "measure-ramsey"; }
    const char* help() const override { return "sum_k int prod phi_k >= 1 / C(R, m) on random finite spaces"; }
    void bind(CLI::App& app) override {
        app.add_option("--H", H_, "hypergraph");
        app.add_option("--r", r_, "number of functions");
        app.add_option("--X", X_, "largest |X|");
        app.add_option("--instances", instances_, "random instances");
        app.add_option("--grain", grain_, "weights are k / total with k <= grain");
        app.add_option("--cap", cap_, "Ramsey search cap");
    }
    void run(Report& rep, const Common& c) override {
        const auto H = ramseycomb::OrderedHypergraph::parse(H_);
        if (X_ < 1 || r_ < 1 || instances_ < 0) bad("instance shape", std::to_string(X_));
        sample::Gen g(c.seed);
        rep.columns = {"instance", "X", "lhs", "rhs", "holds"};
        I64 failures = 0;
        std::optional<int> R;
        for (int i = 0; i < instances_; ++i) {
            const int n = static_cast<int>(g.integer(1, X_));
            const ramseycomb::FiniteProbabilitySpace space{g.unit_partition(static_cast<unsigned>(n), grain_)};
            ramseycomb::PhiFamily phi{H.l, std::vector<std::vector<Rational>>(r_)};
            std::size_t cells = 1;
            for (int j = 0; j < H.l; ++j) cells *= static_cast<std::size_t>(n);
            for (std::size_t cell = 0; cell < cells; ++cell) {
                const auto part = g.unit_partition(r_, grain_);
                for (unsigned k = 0; k < r_; ++k) phi.tables[k].push_back(part[k]);
            }
            const auto res = ramseycomb::measure_ramsey_bound_check(space, phi, H, {cap_});
            R = res.ramsey;
            failures += res.holds ? 0 : 1;
            rep.add_row({I64{i}, I64{n}, res.lhs, res.rhs ? Cell{*res.rhs} : Cell{}, res.holds});
        }
        if (instances_ > 0 && !R) rep.info("R_<(H, r) above cap; bound not asserted", I64{cap_}, {});
        else rep.check("lhs >= 1 / C(R, m) on every instance", failures == 0, failures, I64{0});
    }
};

class Corners : public Command {
    int n_ = 12;
    std::string density_ = "1/2", eps_;

public:
    const char* name() const override { return "corners"; }
    const char* help() const override { return "corner count of a random F on (Z_n)^2 and the Markov level-set chain"; }
    void bind(CLI::App& app) override {
        app.add_option("--n", n_, "modulus");
        app.add_option("--density", density_, "P(F(x,y) = 1)");
        app.add_option("--eps", eps_, "epsilon for the level set (default density/2)");
    }
    void run(Report& rep, const Common& c) override {
        if (n_ < 1 || n_ > 200) bad("n", std::to_string(n_));
        const Rational p = parse_q(density_, "density");
        if (p < Rational(0) || p > Rational(1)) bad("density", density_);
        const Rational eps = eps_.empty() ? p / Rational(2) : parse_q(eps_, "eps");
        sample::Gen g(c.seed);
        ramseycomb::CornersInstance inst{n_, {}};
        const long den = p.den().get_si(), num = p.num().get_si();
        for (int i = 0; i < n_ * n_; ++i) inst.F.emplace_back(g.integer(0, den - 1) < num ? 1 : 0);
        const auto r = ramseycomb::markov_level_set(inst, eps);
        rep.columns = {"n", "mean", "corners", "corners_approx", "E_density", "corners_E", "bound"};
        rep.add_row({I64{n_}, r.mean, r.corners_F, Approx{r.corners_F.to_double()}, r.density_E, r.corners_E, r.bound});
        Rational diag;
        for (const auto& f : inst.F) diag += f * f * f;
        diag /= Rational(n_) * Rational(n_) * Rational(n_);
        rep.check("corners >= t = 0 term", r.corners_F >= diag, r.corners_F, diag);
        rep.check("m(E) >= eps/2", r.density_ok, r.density_E, eps / Rational(2));
        rep.check("corners(F) >= (eps/2)^3 corners(E)", r.corners_ok, r.corners_F, r.bound);
    }
};

// ---- algebra

class PhaseCheck : public Command {
    int instances_ = 1000, kmax_ = 5, skew_ = 100;

public:
    const char* name() const override { return "phase-check"; }
    const char* help() const override { return "phase polynomial identities on random instances"; }
    void bind(CLI::App& app) override {
        app.add_option("--instances", instances_, "instances per identity");
        app.add_option("--kmax", kmax_, "largest degree");
        app.add_option("--skew-instances", skew_, "character-derivative instances");
    }
    void run(Report& rep, const Common& c) override {
        if (kmax_ < 1 || kmax_ > 6) bad("kmax", std::to_string(kmax_));
        sample::Gen g(c.seed);
        const auto small_q = [&] { return g.smooth_rational({2, 3}, 6, 1); };
        const auto args = [&](int k) {
            std::vector<Rational> q(static_cast<std::size_t>(k));
            for (auto& x : q) x = small_q();
            return q;
        };
        rep.columns = {"identity", "instances", "failures"};
        const auto record = [&](const std::string& name, int count, I64 fails) {
            rep.add_row({name, I64{count}, fails});
            rep.check(name, fails == 0, fails, I64{0});
        };

        I64 f = 0;
        for (int i = 0; i < instances_; ++i) {
            const auto phi = g.phase(static_cast<int>(g.integer(1, kmax_)));
            const Rational q = small_q(), t = small_q();
            const auto d = phasepoly::phase_derivative(phi, q);
            f += (d.degree() <= phi.degree() - 1 && d(t) == phi(t + q) - phi(t)) ? 0 : 1;
        }
        record("derivative recurrence", instances_, f);

        f = 0;
        for (int i = 0; i < instances_; ++i) {
            const int k = static_cast<int>(g.integer(1, std::min(kmax_, 4)));
            const auto phi = g.phase(k);
            auto q = args(k);
            const auto base = phasepoly::multilinearize(phi, std::span<const Rational>(q));
            std::sort(q.begin(), q.end());
            do {
                if (phasepoly::multilinearize(phi, std::span<const Rational>(q)) != base) {
                    ++f;
                    break;
                }
            } while (std::next_permutation(q.begin(), q.end()));
        }
        record("multilinearization symmetric", instances_, f);

        f = 0;
        for (int i = 0; i < instances_; ++i) {
            const int k = static_cast<int>(g.integer(1, kmax_));
            const auto phi = g.phase(static_cast<int>(g.integer(0, k - 1)));
            const auto q = args(k);
            f += phasepoly::multilinearize(phi, std::span<const Rational>(q)).angle().is_zero() ? 0 : 1;
        }
        record("deg <= k-1 kills D^k", instances_, f);

        f = 0;
        for (int i = 0; i < instances_; ++i) {
            const int k = static_cast<int>(g.integer(1, kmax_));
            const auto phi = g.phase(k);
            const auto q = args(k);
            const auto form = phasepoly::leading_coefficient(phi);
            f += form(std::span<const Rational>(q)) == phasepoly::multilinearize(phi, std::span<const Rational>(q)) ? 0 : 1;
        }
        record("leading coefficient is D^k", instances_, f);

        f = 0;
        for (int i = 0; i < skew_; ++i) {
            const int k = static_cast<int>(g.integer(1, 4)), l = static_cast<int>(g.integer(1, 2));
            const auto sys = g.skew_system(k, l);
            const auto w = g.character(k, l);
            const auto x = g.orbit_point(k, l);
            f += dynsys::char_derivative_identity(sys, w, small_q(), x).holds ? 0 : 1;
        }
        record("character derivative on skew products", skew_, f);
    }
};

class DerivedSeq : public Command {
    std::string P_ = "x^3";

public:
    const char* name() const override { return "derived-seq"; }
    const char* help() const override { return "P_j(x) = P_{j-1}(x+1) - P_{j-1}(x) - P_{j-1}(1)"; }
    void bind(CLI::App& app) override { app.add_option("--P", P_, "polynomial with P(0) = 0"); }
    void run(Report& rep, const Common&) override {
        const auto P = parse_poly(P_);
        const auto seq = exactq::derived_sequence(P);
        rep.columns = {"j", "degree", "binomial", "power"};
        for (std::size_t j = 0; j < seq.size(); ++j)
            rep.add_row({static_cast<I64>(j), I64{seq[j].degree()}, rational_array(seq[j].coeffs()), power_string(seq[j])});
        const int d = P.degree();
        Rational fact(1);
        for (int i = 2; i <= d; ++i) fact *= Rational(i);
        const Rational expected = fact * exactq::leading_power_coeff(P);
        const auto last = exactq::to_power(seq.back());
        const bool linear = last.coeffs.size() == 2 && last.coeffs[0].is_zero();
        rep.check("P_{d-1}(x) = d! a_d x", linear && last.coeffs[1] == expected, linear ? Cell{last.coeffs[1]} : Cell{power_string(seq.back())},
                  expected);
    }
};

class VdcReport : public Command {
    AdelicOpts ad_;
    std::string P_ = "x^2";
    int N_ = 4, R_ = 2;

public:
    const char* name() const override { return "vdc-report"; }
    const char* help() const override { return "van der Corput diagnostic for u(q) = e_Q(P(q) beta)"; }
    void bind(CLI::App& app) override {
        ad_.bind(app);
        app.add_option("--P", P_, "polynomial");
        app.add_option("--N", N_, "averaging index");
        app.add_option("--R", R_, "shift index");
    }
    void run(Report& rep, const Common& c) override {
        const auto fam = parse_family(ad_.family);
        const auto P = parse_poly(P_);
        const auto beta = ad_.element(c.seed);
        const auto u = [&](const Rational& q) { return adele::e_Q(adele::scalar_mul(P(q), beta)).to_complex(); };
        const auto r = dynsys::vdc_diagnostic(u, folner::enumerate(fam, N_), folner::enumerate(fam, R_));
        rep.columns = {"r", "abs_z"};
        for (const auto& [shift, z] : r.z) rep.add_row({shift, Approx{z}});
        rep.info("mean square / correlation", Approx{r.mean_sq}, Approx{r.correlation});
    }
};

}  // namespace

std::vector<std::unique_ptr<Command>> make_commands() {
    std::vector<std::unique_ptr<Command>> v;
    v.push_back(std::make_unique<ColorCheck>());
    v.push_back(std::make_unique<Bergelson>());
    v.push_back(std::make_unique<Weyl>());
    v.push_back(std::make_unique<RotationAvg>());
    v.push_back(std::make_unique<Efs>());
    v.push_back(std::make_unique<RemarkCheck>());
    v.push_back(std::make_unique<Density>());
    v.push_back(std::make_unique<Defect>());
    v.push_back(std::make_unique<BuildSumset>());
    v.push_back(std::make_unique<DeltaFind>());
    v.push_back(std::make_unique<Ramsey>());
    v.push_back(std::make_unique<MeasureRamsey>());
    v.push_back(std::make_unique<Corners>());
    v.push_back(std::make_unique<PhaseCheck>());
    v.push_back(std::make_unique<DerivedSeq>());
    v.push_back(std::make_unique<VdcReport>());
    return v;
}

}  // namespace sumset::cli
