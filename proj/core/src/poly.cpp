#include "ggamma/poly.hpp"

#include "ggamma/error.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <charconv>
#include <cmath>

namespace ggamma {

namespace {

void strip_trailing_zeros(std::vector<double>& c) {
    while (c.size() > 1 && c.back() == 0.0) c.pop_back();
    if (c.empty()) c.push_back(0.0);
}

double horner(std::span<const double> c, double t) {
    double acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + *it;
    return acc;
}

Complex horner(std::span<const double> c, Complex s) {
    Complex acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * s + *it;
    return acc;
}

// Sturm-chain coefficients below this fraction of the largest one are
// treated as zero.
constexpr double kSturmZero = 1e-10;

std::vector<double> scaled_to_unit(std::vector<double> c) {
    double m = 0.0;
    for (double x : c) m = std::max(m, std::abs(x));
    if (m > 0.0)
        for (double& x : c) x /= m;
    return c;
}

// Remainder of a / b (ascending coefficients, deg b >= 0, b.back() != 0).
std::vector<double> poly_rem(std::vector<double> a, const std::vector<double>& b) {
    const std::size_t nb = b.size();
    while (a.size() >= nb) {
        const double q = a.back() / b.back();
        const std::size_t shift = a.size() - nb;
        for (std::size_t i = 0; i < nb; ++i) a[shift + i] -= q * b[i];
        a.pop_back();
    }
    return a;
}

int sign_changes(const std::vector<std::vector<double>>& chain, double x) {
    int changes = 0;
    int last = 0;
    for (const auto& p : chain) {
        const double v = horner(p, x);
        const int sg = v > 0.0 ? 1 : (v < 0.0 ? -1 : 0);
        if (sg == 0) continue;
        if (last != 0 && sg != last) ++changes;
        last = sg;
    }
    return changes;
}

std::vector<std::vector<double>> sturm_chain(const RealPolynomial& p) {
    std::vector<std::vector<double>> chain;
    chain.push_back(scaled_to_unit({p.coeffs().begin(), p.coeffs().end()}));
    const auto dp = derivative(p);
    if (dp.is_zero()) return chain;
    chain.push_back(scaled_to_unit({dp.coeffs().begin(), dp.coeffs().end()}));
    while (chain.back().size() > 1) {
        auto r = poly_rem(chain[chain.size() - 2], chain.back());
        for (double& x : r) {
            if (std::abs(x) <= kSturmZero) x = 0.0;
            x = -x;
        }
        strip_trailing_zeros(r);
        if (r.size() == 1 && r[0] == 0.0) break;
        chain.push_back(scaled_to_unit(std::move(r)));
    }
    return chain;
}

}  // namespace

RealPolynomial::RealPolynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
    strip_trailing_zeros(coeffs_);
}

RealPolynomial RealPolynomial::monomial(int k, double c) {
    if (k < 0) throw DomainError("monomial degree must be nonnegative");
    std::vector<double> co(static_cast<std::size_t>(k) + 1, 0.0);
    co.back() = c;
    return RealPolynomial(std::move(co));
}

RealPolynomial RealPolynomial::parse(std::string_view text) {
    if (text.empty()) throw DomainError("empty coefficient list");
    std::vector<double> co;
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = text.find(',', pos);
        const std::string_view tok =
            text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        double v = 0.0;
        const auto* first = tok.data();
        const auto* last = tok.data() + tok.size();
        const auto res = std::from_chars(first, last, v);
        if (tok.empty() || res.ec != std::errc{} || res.ptr != last || !std::isfinite(v))
            throw DomainError("malformed coefficient '" + std::string(tok) + "'");
        co.push_back(v);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return RealPolynomial(std::move(co));
}

std::optional<int> RealPolynomial::as_unit_monomial() const {
    if (leading() != 1.0) return std::nullopt;
    for (std::size_t i = 0; i + 1 < coeffs_.size(); ++i)
        if (coeffs_[i] != 0.0) return std::nullopt;
    return degree();
}

double RealPolynomial::operator()(double t) const { return horner(coeffs_, t); }

std::string RealPolynomial::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) out += ',';
        out += format_double(coeffs_[i]);
    }
    return out;
}

double eval(const RealPolynomial& p, double t) { return p(t); }

Complex eval_complex_power(const RealPolynomial& p, double t, Complex w) {
    const double v = p(t);
    if (!(v > 0.0)) throw DomainError("f(t) must be positive for a principal power");
    return std::exp(w * std::log(v));
}

RealPolynomial derivative(const RealPolynomial& p) {
    const auto c = p.coeffs();
    if (c.size() == 1) return RealPolynomial({0.0});
    std::vector<double> d(c.size() - 1);
    for (std::size_t i = 1; i < c.size(); ++i) d[i - 1] = static_cast<double>(i) * c[i];
    return RealPolynomial(std::move(d));
}

int multiplicity_at_zero(const RealPolynomial& p) {
    if (p.is_zero()) throw DomainError("multiplicity of the zero polynomial is undefined");
    const auto c = p.coeffs();
    int k = 0;
    while (c[static_cast<std::size_t>(k)] == 0.0) ++k;
    return k;
}

int sturm_root_count(const RealPolynomial& p, double a, double b) {
    if (p.is_zero()) throw DomainError("Sturm count of the zero polynomial");
    if (p.degree() == 0) return 0;
    const auto chain = sturm_chain(p);
    return sign_changes(chain, a) - sign_changes(chain, b);
}

double cauchy_root_bound(const RealPolynomial& p) {
    const auto c = p.coeffs();
    double m = 0.0;
    for (std::size_t i = 0; i + 1 < c.size(); ++i) m = std::max(m, std::abs(c[i] / c.back()));
    return 1.0 + m;
}

bool is_admissible(const RealPolynomial& p) {
    if (p.is_zero() || p.leading() <= 0.0) return false;
    // Roots at t = 0 do not matter; divide them out so q(0) != 0.
    const int k0 = multiplicity_at_zero(p);
    const auto c = p.coeffs();
    RealPolynomial q(std::vector<double>(c.begin() + k0, c.end()));
    if (q.degree() == 0) return true;
    return sturm_root_count(q, 0.0, cauchy_root_bound(q)) == 0;
}

SPolynomial::SPolynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
    strip_trailing_zeros(coeffs_);
}

SPolynomial SPolynomial::from_roots(double leading, std::vector<double> roots) {
    std::vector<double> c{leading};
    for (double r : roots) {
        // multiply by (s - r)
        std::vector<double> next(c.size() + 1, 0.0);
        for (std::size_t i = 0; i < c.size(); ++i) {
            next[i + 1] += c[i];
            next[i] -= r * c[i];
        }
        c = std::move(next);
    }
    SPolynomial out(std::move(c));
    if (leading != 0.0) {
        out.factored_ = true;
        out.factor_leading_ = leading;
        out.roots_ = std::move(roots);
    }
    return out;
}

SPolynomial SPolynomial::with_factors(std::vector<double> coeffs, double leading, std::vector<double> roots) {
    SPolynomial out(std::move(coeffs));
    if (leading != 0.0 && static_cast<std::size_t>(out.degree()) == roots.size()) {
        out.factored_ = true;
        out.factor_leading_ = leading;
        out.roots_ = std::move(roots);
    }
    return out;
}

std::string SPolynomial::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) out += ',';
        out += format_double(coeffs_[i]);
    }
    return out;
}

Complex s_poly_eval(const SPolynomial& b, Complex s) {
    if (b.has_factors()) {
        Complex acc = b.factor_leading();
        for (double r : b.factor_roots()) acc *= (s - r);
        return acc;
    }
    return horner(b.coeffs(), s);
}

SPolynomial s_poly_mul(const SPolynomial& a, const SPolynomial& b) {
    if (a.has_factors() && b.has_factors()) {
        std::vector<double> roots(a.factor_roots().begin(), a.factor_roots().end());
        roots.insert(roots.end(), b.factor_roots().begin(), b.factor_roots().end());
        return SPolynomial::from_roots(a.factor_leading() * b.factor_leading(), std::move(roots));
    }
    const auto ca = a.coeffs();
    const auto cb = b.coeffs();
    std::vector<double> c(ca.size() + cb.size() - 1, 0.0);
    for (std::size_t i = 0; i < ca.size(); ++i)
        for (std::size_t j = 0; j < cb.size(); ++j) c[i + j] += ca[i] * cb[j];
    return SPolynomial(std::move(c));
}

std::vector<Complex> s_poly_roots(const SPolynomial& b) {
    if (b.degree() < 1) throw DomainError("root finding requires degree >= 1");
    if (b.has_factors()) return {b.factor_roots().begin(), b.factor_roots().end()};

    const auto c = b.coeffs();
    const int n = b.degree();
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
    for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) companion(i, n - 1) = -c[static_cast<std::size_t>(i)] / c.back();
    Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
    const auto ev = solver.eigenvalues();
    std::vector<Complex> roots(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) roots[static_cast<std::size_t>(i)] = ev(i);
    std::sort(roots.begin(), roots.end(), [](Complex x, Complex y) {
        return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
    });
    return roots;
}

std::optional<double> exact_root_hit(const SPolynomial& b, Complex s) {
    if (!b.has_factors() || s.imag() != 0.0) return std::nullopt;
    for (double r : b.factor_roots())
        if (s.real() - r == 0.0) return r;
    return std::nullopt;
}

std::string format_double(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

}  // namespace ggamma
