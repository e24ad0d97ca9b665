#include "ggamma/verify.hpp"

#include "ggamma/bsato.hpp"
#include "ggamma/error.hpp"
#include "ggamma/gammaf.hpp"
#include "ggamma/zetabeta.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <tuple>

namespace ggamma {

namespace {

constexpr double kSingularDistance = 1e-6;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct Point {
    int k = 1;
    double b = 0.0;
    double c = 0.0;
    Complex s{};
    Complex q{};
    long n = 0;
};

struct Sides {
    Complex lhs;
    Complex rhs;
    double bound = 0.0;  // error bound of the truncated side (bounded mode)
};

struct Entry {
    IdentityInfo info;
    bool uses_n = false;
    std::function<bool(const Point&)> singular;
    std::function<Sides(const Point&, const QuadratureConfig&)> eval;
};

bool near_integer(Complex z) { return std::abs(z - std::round(z.real())) < kSingularDistance; }

bool near_gamma_pole(Complex z) { return z.real() < 0.5 && near_integer(z); }

bool near_b_root(int k, Complex s) {
    for (int j = 0; j < k; ++j)
        if (std::abs(s - static_cast<double>(j) / k) < kSingularDistance) return true;
    return false;
}

bool near_sin_zero(int k, Complex s) { return near_integer(static_cast<double>(k) * s); }

std::vector<Complex> real_grid(std::initializer_list<double> xs) { return {xs.begin(), xs.end()}; }

Grid monomial_grid(std::vector<int> ks, std::vector<Complex> ss, long n = 0) {
    Grid g;
    g.k = std::move(ks);
    g.s = std::move(ss);
    g.n = n;
    return g;
}

std::vector<Entry> build_registry() {
    std::vector<Entry> r;
    const auto closed = [](int k, Complex s) { return gamma_tk_closed(k, s).value; };

    {
        Entry e;
        e.info = {"functional_eq", IdentityFamily::monomial, ToleranceMode::relative, 1e-10,
                  monomial_grid({1, 2, 3}, {1.2, 1.5, 2.0, 2.5, {1.2, 1.0}, {1.5, 1.0}, {2.0, 1.0}, {2.5, 1.0}}),
                  "Gamma_{t^k}(s+1) = B(s) Gamma_{t^k}(s)"};
        e.singular = [](const Point& p) {
            return near_gamma_pole(monomial_gamma_argument(p.k, p.s)) ||
                   near_gamma_pole(monomial_gamma_argument(p.k, p.s + 1.0));
        };
        e.eval = [closed](const Point& p, const QuadratureConfig&) {
            return Sides{closed(p.k, p.s + 1.0), s_poly_eval(bsato_monomial_b(p.k), p.s) * closed(p.k, p.s)};
        };
        r.push_back(std::move(e));
    }
    {
        Entry e;
        e.info = {"limit_rep", IdentityFamily::monomial, ToleranceMode::bounded, 2.0,
                  monomial_grid({1, 2}, real_grid({1.5, 2.0, 2.5}), 1000),
                  "n! n^{x} / (x (x+1) ... (x+n)) -> Gamma_{t^k}(s), x = k(s-1)+1"};
        e.uses_n = true;
        e.singular = [](const Point& p) { return near_gamma_pole(monomial_gamma_argument(p.k, p.s)); };
        e.eval = [closed](const Point& p, const QuadratureConfig&) {
            const auto lim = gauss_limit_product(p.k, p.s, p.n);
            return Sides{lim.value, closed(p.k, p.s), lim.abs_err};
        };
        r.push_back(std::move(e));
    }
    {
        Entry e;
        e.info = {"weierstrass", IdentityFamily::monomial, ToleranceMode::bounded, 3.0,
                  monomial_grid({1, 2}, real_grid({0.75, 1.5, 2.0}), 100000),
                  "1/Gamma_{t^k}(s) = x e^{gamma x} prod (1 + x/n) e^{-x/n}"};
        e.uses_n = true;
        e.singular = [](const Point& p) { return near_gamma_pole(monomial_gamma_argument(p.k, p.s)); };
        e.eval = [closed](const Point& p, const QuadratureConfig&) {
            const auto prod = weierstrass_reciprocal(p.k, p.s, p.n);
            return Sides{prod.value, 1.0 / closed(p.k, p.s), prod.abs_err};
        };
        r.push_back(std::move(e));
    }
    {
        Entry e;
        e.info = {"reflection", IdentityFamily::monomial, ToleranceMode::relative, 1e-8,
                  monomial_grid({1, 2, 3}, {0.2, 0.3, 0.7, 1.3, {0.3, 0.5}}),
                  "Gamma_{t^k}(s) Gamma_{t^k}(1-s) = pi/sin(pi k s) prod 1/(k(s-1)+i)"};
        e.singular = [](const Point& p) { return near_sin_zero(p.k, p.s); };
        e.eval = [](const Point& p, const QuadratureConfig&) {
            return Sides{gamma_tk_continued(p.k, p.s).value * gamma_tk_continued(p.k, 1.0 - p.s).value,
                         reflection_rhs(p.k, p.s).value};
        };
        r.push_back(std::move(e));
    }
    const Grid quarter_grid = monomial_grid({1, 2, 3}, {0.1, 0.15, 0.2, 0.4, {0.1, 0.3}});
    {
        Entry e;
        e.info = {"quarter_reflection", IdentityFamily::monomial, ToleranceMode::relative, 1e-6, quarter_grid,
                  "Gamma_{t^k}(s) Gamma_{t^k}(1/k-s) = s(1-ks)/(B(s)B(1/k-s)) pi/sin(pi k s), as printed"};
        e.singular = [](const Point& p) { return near_sin_zero(p.k, p.s); };
        e.eval = [](const Point& p, const QuadratureConfig&) {
            const Complex partner = 1.0 / static_cast<double>(p.k) - p.s;
            return Sides{gamma_tk_continued(p.k, p.s).value * gamma_tk_continued(p.k, partner).value,
                         quarter_reflection_rhs(p.k, p.s).value};
        };
        r.push_back(std::move(e));
    }
    {
        Entry e;
        e.info = {"quarter_reflection_corrected", IdentityFamily::monomial, ToleranceMode::relative, 1e-6,
                  quarter_grid, "Gamma_{t^k}(s) Gamma_{t^k}(1/k-s) = k s(1-ks)/(B(s)B(1/k-s)) pi/sin(pi k s)"};
        e.singular = [](const Point& p) { return near_sin_zero(p.k, p.s); };
        e.eval = [](const Point& p, const QuadratureConfig&) {
            const Complex partner = 1.0 / static_cast<double>(p.k) - p.s;
            return Sides{gamma_tk_continued(p.k, p.s).value * gamma_tk_continued(p.k, partner).value,
                         quarter_reflection_rhs_corrected(p.k, p.s).value};
        };
        r.push_back(std::move(e));
    }
    {
        Entry e;
        e.info = {"kgamma_bridge", IdentityFamily::monomial, ToleranceMode::relative, 1e-6,
                  monomial_grid({1, 2, 3}, real_grid({1.0, 1.5, 2.0})),
                  "Gamma_{t^k}(s) = k^{ks} s / B(s) Gamma_{1/k}(s)"};
        e.singular = [](const Point& p) { return near_b_root(p.k, p.s); };
        e.eval = [closed](const Point& p, const QuadratureConfig& cfg) {
            return Sides{closed(p.k, p.s), gamma_tk_via_kgamma(p.k, p.s, cfg).value};
        };
        r.push_back(std::move(e));
    }
    {
        Entry e;
        e.info = {"kgamma_shift", IdentityFamily::monomial, ToleranceMode::relative, 1e-6,
                  monomial_grid({1, 2, 3}, real_grid({1.0, 1.5, 2.0})),
                  "Gamma_{t^k}(s+1) = k^{ks} Gamma_{1/k}(s + 1/k)"};
        e.singular = [](const Point& p) { return near_gamma_pole(monomial_gamma_argument(p.k, p.s + 1.0)); };
        e.eval = [closed](const Point& p, const QuadratureConfig& cfg) {
            const double kd = p.k;
            const Complex scale = checked_exp(kd * p.s * std::log(kd), "k^{ks}");
            return Sides{closed(p.k, p.s + 1.0), scale * k_gamma(1.0 / kd, p.s + 1.0 / kd, cfg).value};
        };
        r.push_back(std::move(e));
    }
    {
        Entry e;
        e.info = {"zeta_relation", IdentityFamily::monomial, ToleranceMode::bounded, 2.0,
                  monomial_grid({1, 2}, real_grid({1.5, 2.0, 2.5}), 1000),
                  "zeta_{t^k}(s) (series form) = zeta(k(s-1)+1)"};
        e.uses_n = true;
        e.singular = [](const Point&) { return false; };
        e.eval = [](const Point& p, const QuadratureConfig& cfg) {
            const auto dom = GammaDomain::make(RealPolynomial::monomial(p.k));
            const auto series = zeta_f_series(dom, p.s, p.n, cfg);
            return Sides{series.value, zeta_tk(p.k, p.s).value, series.abs_err};
        };
        r.push_back(std::move(e));
    }
    {
        Entry e;
        Grid g = monomial_grid({1, 2, 3}, real_grid({0.5, 1.0, 1.5, 2.0, 3.0}));
        g.q = {0.5, 1.0, 1.5, 2.0, 3.0};
        e.info = {"beta_relation", IdentityFamily::beta, ToleranceMode::relative, 1e-8, g,
                  "B_{t^k}(p,q) = kpq/(p+q) B(p+q)/(B(p)B(q)) Beta(kp,kq)"};
        e.singular = [](const Point& p) {
            return near_b_root(p.k, p.s) || near_b_root(p.k, p.q) || std::abs(p.s + p.q) < kSingularDistance;
        };
        e.eval = [](const Point& p, const QuadratureConfig& cfg) {
            const auto dom = GammaDomain::make(RealPolynomial::monomial(p.k));
            return Sides{beta_f(dom, p.s, p.q, cfg).value, beta_tk_relation_rhs(p.k, p.s, p.q).value};
        };
        r.push_back(std::move(e));
    }
    Grid quad_grid;
    quad_grid.bc = {{0.0, 1.0}, {1.0, 3.0}, {0.0, 4.0}};
    quad_grid.s = real_grid({1.0, 1.5, 2.0, 2.5});
    {
        Entry e;
        e.info = {"quadratic_printed", IdentityFamily::quadratic, ToleranceMode::relative, 1e-6, quad_grid,
                  "(1-2/(s+1)) Gamma_f(s+2) = B(s) Gamma_f(s) + 2(s-1)(2s+1) Gamma_f(s+1) + 2c^{s+1}/(s+1)"};
        e.singular = [](const Point& p) { return std::abs(p.s + 1.0) < kSingularDistance; };
        e.eval = [](const Point& p, const QuadratureConfig& cfg) {
            const auto [l, r] = quadratic_printed_sides(p.b, p.c, p.s, cfg);
            return Sides{l, r};
        };
        r.push_back(std::move(e));
    }
    {
        Entry e;
        e.info = {"quadratic_corrected", IdentityFamily::quadratic, ToleranceMode::relative, 1e-6, quad_grid,
                  "(1-2/(s+1)) Gamma_f(s+2) = B(s) Gamma_f(s) + 2(s-1)(2s+1) Gamma_f(s+1) - 2c^{s+1}/(s+1) "
                  "+ c^s (b(s-1)+c)"};
        e.singular = [](const Point& p) { return std::abs(p.s + 1.0) < kSingularDistance; };
        e.eval = [](const Point& p, const QuadratureConfig& cfg) {
            const auto [l, r] = quadratic_corrected_sides(p.b, p.c, p.s, cfg);
            return Sides{l, r};
        };
        r.push_back(std::move(e));
    }
    {
        Entry e;
        e.info = {"asymptotic_ratio", IdentityFamily::monomial, ToleranceMode::relative, 2e-2,
                  monomial_grid({1, 2, 3}, real_grid({5.0, 10.0, 20.0})),
                  "Gamma_{t^k}(s) ~ (2 pi)^{1/2} (ks)^{ks+1/2} e^{-ks} / B(s)"};
        e.singular = [](const Point& p) { return p.s.real() <= 0.0 || near_b_root(p.k, p.s); };
        e.eval = [closed](const Point& p, const QuadratureConfig&) {
            return Sides{closed(p.k, p.s), asymptotic_approx(p.k, p.s).value};
        };
        r.push_back(std::move(e));
    }
    return r;
}

const std::vector<Entry>& registry() {
    static const std::vector<Entry> r = build_registry();
    return r;
}

const Entry& find_entry(std::string_view name) {
    for (const auto& e : registry())
        if (e.info.name == name) return e;
    throw std::invalid_argument("unknown identity '" + std::string(name) + "'");
}

double parse_number(std::string_view tok) {
    double v = 0.0;
    const auto* last = tok.data() + tok.size();
    const auto res = std::from_chars(tok.data(), last, v);
    if (tok.empty() || res.ec != std::errc{} || res.ptr != last)
        throw std::invalid_argument("malformed number '" + std::string(tok) + "' in grid");
    return v;
}

long parse_integer(std::string_view tok) {
    long v = 0;
    const auto* last = tok.data() + tok.size();
    const auto res = std::from_chars(tok.data(), last, v);
    if (tok.empty() || res.ec != std::errc{} || res.ptr != last)
        throw std::invalid_argument("malformed integer '" + std::string(tok) + "' in grid");
    return v;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (true) {
        const auto next = text.find(sep, pos);
        out.push_back(text.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos));
        if (next == std::string_view::npos) break;
        pos = next + 1;
    }
    return out;
}

std::vector<double> parse_values(std::string_view v) {
    if (v.find(':') != std::string_view::npos) {
        const auto parts = split(v, ':');
        if (parts.size() != 3) throw std::invalid_argument("range must be START:STOP:STEP");
        const double start = parse_number(parts[0]);
        const double stop = parse_number(parts[1]);
        const double step = parse_number(parts[2]);
        if (!(step > 0.0) || stop < start) throw std::invalid_argument("range needs STEP > 0 and STOP >= START");
        const long count = static_cast<long>(std::floor((stop - start) / step + 1e-9)) + 1;
        std::vector<double> out;
        for (long i = 0; i < count; ++i) out.push_back(start + static_cast<double>(i) * step);
        return out;
    }
    std::vector<double> out;
    for (auto tok : split(v, ',')) out.push_back(parse_number(tok));
    return out;
}

bool report_less(const IdentityReport& a, const IdentityReport& b) {
    return std::tie(a.identity, a.param1, a.param2) < std::tie(b.identity, b.param1, b.param2) ||
           (std::tie(a.identity, a.param1, a.param2) == std::tie(b.identity, b.param1, b.param2) &&
            std::make_pair(a.s.real(), a.s.imag()) < std::make_pair(b.s.real(), b.s.imag()));
}

std::string csv_number(double x) { return std::isnan(x) ? "nan" : format_double(x); }

Complex principal_power(double base, Complex w) {
    if (w.imag() == 0.0) return std::pow(base, w.real());
    return std::exp(w * std::log(base));
}

struct QuadraticTerms {
    Complex lhs;
    Complex core;  // B(s) G(s) + 2(s-1)(2s+1) G(s+1)
};

QuadraticTerms quadratic_terms(double b, double c, Complex s, const QuadratureConfig& cfg) {
    if (!(c > 0.0)) throw DomainError("quadratic identity needs c > 0");
    if (s == -1.0) throw SingularPointError("quadratic identity is singular at s = -1");
    const BsatoResult bs = bsato_quadratic(b, c);
    if (bs.degenerate) throw DomainError("quadratic identity refuses the degenerate case b^2 = 4c");
    const auto dom = GammaDomain::make(RealPolynomial({c, b, 1.0}));
    const Complex g0 = gamma_f_quadrature(dom, s, cfg).value;
    const Complex g1 = gamma_f_quadrature(dom, s + 1.0, cfg).value;
    const Complex g2 = gamma_f_quadrature(dom, s + 2.0, cfg).value;
    QuadraticTerms t;
    t.lhs = (1.0 - 2.0 / (s + 1.0)) * g2;
    t.core = s_poly_eval(bs.big_b, s) * g0 + 2.0 * (s - 1.0) * (2.0 * s + 1.0) * g1;
    return t;
}

}  // namespace

std::string_view status_name(IdentityStatus s) noexcept {
    switch (s) {
        case IdentityStatus::pass: return "pass";
        case IdentityStatus::fail: return "fail";
        case IdentityStatus::skipped_singular: return "skipped_singular";
    }
    return "fail";
}

Grid Grid::parse(std::string_view spec) {
    Grid g;
    std::vector<double> re;
    std::vector<double> im;
    for (auto field : split(spec, ';')) {
        if (field.empty()) continue;
        const auto eq = field.find('=');
        if (eq == std::string_view::npos) throw std::invalid_argument("grid field without '=': " + std::string(field));
        const auto key = field.substr(0, eq);
        const auto val = field.substr(eq + 1);
        if (key == "s") {
            re = parse_values(val);
        } else if (key == "im") {
            im = parse_values(val);
        } else if (key == "k") {
            for (auto tok : split(val, ',')) {
                const long k = parse_integer(tok);
                if (k < 1 || k > kMaxMonomialDegree) throw std::invalid_argument("k out of range in grid");
                g.k.push_back(static_cast<int>(k));
            }
        } else if (key == "bc") {
            for (auto tok : split(val, ',')) {
                const auto pair = split(tok, ':');
                if (pair.size() != 2) throw std::invalid_argument("bc entries must be B:C");
                g.bc.emplace_back(parse_number(pair[0]), parse_number(pair[1]));
            }
        } else if (key == "q") {
            g.q = parse_values(val);
        } else if (key == "n") {
            g.n = parse_integer(val);
            if (g.n < 1) throw std::invalid_argument("n must be positive");
        } else {
            throw std::invalid_argument("unknown grid field '" + std::string(key) + "'");
        }
    }
    if (im.empty()) im.push_back(0.0);
    for (double r : re)
        for (double i : im) g.s.emplace_back(r, i);
    return g;
}

const std::vector<IdentityInfo>& registered_identities() {
    static const std::vector<IdentityInfo> infos = [] {
        std::vector<IdentityInfo> out;
        for (const auto& e : registry()) out.push_back(e.info);
        return out;
    }();
    return infos;
}

const IdentityInfo& identity_info(std::string_view name) { return find_entry(name).info; }

QuadratureConfig verify_quadrature() {
    QuadratureConfig cfg;
    cfg.rel_tol = 1e-12;
    cfg.abs_tol = 1e-14;
    cfg.max_panels = 8192;
    return cfg;
}

std::vector<IdentityReport> check_identity(std::string_view name, const Grid& grid, std::optional<double> tolerance,
                                           const QuadratureConfig& cfg) {
    const Entry& entry = find_entry(name);
    const Grid& def = entry.info.default_grid;
    const auto& svals = grid.s.empty() ? def.s : grid.s;
    const long n = grid.n > 0 ? grid.n : def.n;
    const double tol = tolerance.value_or(entry.info.tolerance);

    std::vector<std::tuple<double, double, Point>> points;
    switch (entry.info.family) {
        case IdentityFamily::monomial:
            for (int k : grid.k.empty() ? def.k : grid.k)
                for (Complex s : svals) {
                    Point p;
                    p.k = k;
                    p.s = s;
                    p.n = n;
                    points.emplace_back(k, entry.uses_n ? static_cast<double>(n) : 0.0, p);
                }
            break;
        case IdentityFamily::quadratic:
            for (auto [b, c] : grid.bc.empty() ? def.bc : grid.bc)
                for (Complex s : svals) {
                    Point p;
                    p.b = b;
                    p.c = c;
                    p.s = s;
                    points.emplace_back(b, c, p);
                }
            break;
        case IdentityFamily::beta: {
            std::vector<double> qs = grid.q;
            if (qs.empty() && !grid.s.empty())
                for (Complex s : grid.s) qs.push_back(s.real());
            if (qs.empty()) qs = def.q;
            for (int k : grid.k.empty() ? def.k : grid.k)
                for (Complex s : svals)
                    for (double q : qs) {
                        Point p;
                        p.k = k;
                        p.s = s;
                        p.q = q;
                        points.emplace_back(k, q, p);
                    }
            break;
        }
    }

    std::vector<IdentityReport> reports;
    reports.reserve(points.size());
    for (const auto& [p1, p2, pt] : points) {
        IdentityReport rep;
        rep.identity = entry.info.name;
        rep.param1 = p1;
        rep.param2 = p2;
        rep.s = pt.s;
        const auto skip = [&] {
            rep.lhs = rep.rhs = {kNaN, kNaN};
            rep.abs_residual = rep.rel_residual = kNaN;
            rep.status = IdentityStatus::skipped_singular;
        };
        if (entry.singular(pt)) {
            skip();
            reports.push_back(rep);
            continue;
        }
        try {
            const Sides sides = entry.eval(pt, cfg);
            rep.lhs = sides.lhs;
            rep.rhs = sides.rhs;
            rep.abs_residual = std::abs(sides.lhs - sides.rhs);
            rep.rel_residual =
                rep.abs_residual / std::max({std::abs(sides.lhs), std::abs(sides.rhs), 1e-300});
            const bool ok = entry.info.mode == ToleranceMode::relative ? rep.rel_residual <= tol
                                                                       : rep.abs_residual <= tol * sides.bound;
            rep.status = ok ? IdentityStatus::pass : IdentityStatus::fail;
        } catch (const Error& err) {
            if (err.kind() == ErrorKind::convergence || err.kind() == ErrorKind::overflow) {
                rep.lhs = rep.rhs = {kNaN, kNaN};
                rep.abs_residual = rep.rel_residual = kNaN;
                rep.status = IdentityStatus::fail;
            } else {
                skip();
            }
        }
        reports.push_back(rep);
    }
    std::stable_sort(reports.begin(), reports.end(), report_less);
    return reports;
}

std::pair<Complex, Complex> quadratic_printed_sides(double b, double c, Complex s, const QuadratureConfig& cfg) {
    const auto t = quadratic_terms(b, c, s, cfg);
    return {t.lhs, t.core + 2.0 * principal_power(c, s + 1.0) / (s + 1.0)};
}

std::pair<Complex, Complex> quadratic_corrected_sides(double b, double c, Complex s, const QuadratureConfig& cfg) {
    const auto t = quadratic_terms(b, c, s, cfg);
    return {t.lhs, t.core - 2.0 * principal_power(c, s + 1.0) / (s + 1.0) +
                       principal_power(c, s) * (b * (s - 1.0) + c)};
}

Complex quadratic_gap(double b, double c, Complex s) {
    return 4.0 * principal_power(c, s + 1.0) / (s + 1.0) - principal_power(c, s) * (b * (s - 1.0) + c);
}

std::string emit_reports(std::vector<IdentityReport> reports, ReportFormat format) {
    std::stable_sort(reports.begin(), reports.end(), report_less);
    if (format == ReportFormat::csv) {
        std::string out = "identity,param1,param2,s_re,s_im,lhs_re,lhs_im,rhs_re,rhs_im,abs_residual,rel_residual,status\n";
        for (const auto& r : reports) {
            out += r.identity;
            for (double x : {r.param1, r.param2, r.s.real(), r.s.imag(), r.lhs.real(), r.lhs.imag(), r.rhs.real(),
                             r.rhs.imag(), r.abs_residual, r.rel_residual}) {
                out += ',';
                out += csv_number(x);
            }
            out += ',';
            out += status_name(r.status);
            out += '\n';
        }
        return out;
    }
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
        nlohmann::ordered_json o;
        o["identity"] = r.identity;
        o["param1"] = r.param1;
        o["param2"] = r.param2;
        o["s_re"] = r.s.real();
        o["s_im"] = r.s.imag();
        o["lhs_re"] = r.lhs.real();
        o["lhs_im"] = r.lhs.imag();
        o["rhs_re"] = r.rhs.real();
        o["rhs_im"] = r.rhs.imag();
        o["abs_residual"] = r.abs_residual;
        o["rel_residual"] = r.rel_residual;
        o["status"] = std::string(status_name(r.status));
        arr.push_back(std::move(o));
    }
    return arr.dump(2) + "\n";
}

}  // namespace ggamma
