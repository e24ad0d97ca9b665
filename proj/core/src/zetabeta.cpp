#include "ggamma/zetabeta.hpp"

#include "ggamma/bsato.hpp"
#include "ggamma/error.hpp"

#include <cmath>
#include <limits>
#include <utility>

namespace ggamma {

namespace {

bool canonical_less(Complex a, Complex b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
}

// sum over lambda >= n + 2 of lambda^{-p}, p > 1, by the integral test
double power_tail(double p, long n) {
    return std::pow(static_cast<double>(n) + 1.0, 1.0 - p) / (p - 1.0);
}

ComplexEval gamma_any(const GammaDomain& dom, Complex s, const QuadratureConfig& cfg) {
    if (auto k = dom.f.as_unit_monomial(); k && *k >= 1) return gamma_tk_closed(*k, s);
    return gamma_f_quadrature(dom, s, cfg);
}

}  // namespace

ComplexEval beta_f(const GammaDomain& dom, Complex p, Complex q, const QuadratureConfig& cfg) {
    if (!(p.real() > 0.0) || !(q.real() > 0.0)) throw DomainError("beta_f needs Re p > 0 and Re q > 0");
    if (canonical_less(q, p)) std::swap(p, q);
    const ComplexEval gp = gamma_any(dom, p, cfg);
    const ComplexEval gq = gamma_any(dom, q, cfg);
    const ComplexEval gpq = gamma_any(dom, p + q, cfg);
    if (gpq.value == 0.0) throw SingularPointError("beta_f: Gamma_f(p + q) = 0");

    ComplexEval out;
    out.value = gp.value * gq.value / gpq.value;
    const double rel = gp.abs_err / std::abs(gp.value) + gq.abs_err / std::abs(gq.value) +
                       gpq.abs_err / std::abs(gpq.value);
    out.abs_err = std::abs(out.value) * rel;
    out.method = gp.method;
    return out;
}

ComplexEval beta_tk_relation_rhs(int k, Complex p, Complex q) {
    if (canonical_less(q, p)) std::swap(p, q);
    const SPolynomial b = bsato_monomial_b(k);
    const double kd = k;
    const Complex bp = s_poly_eval(b, p);
    const Complex bq = s_poly_eval(b, q);
    if (exact_root_hit(b, p) || exact_root_hit(b, q) || bp == 0.0 || bq == 0.0)
        throw SingularPointError("beta relation: B(p) or B(q) vanishes");
    if (p + q == 0.0) throw SingularPointError("beta relation: p + q = 0");
    const ComplexEval euler = classical_beta(kd * p, kd * q);

    ComplexEval out;
    out.value = kd * p * q / (p + q) * (s_poly_eval(b, p + q) / (bp * bq)) * euler.value;
    out.abs_err = std::abs(out.value) * (euler.abs_err / std::abs(euler.value) + 4e-16 * (6.0 + 3.0 * k));
    out.method = Method::closed_form;
    return out;
}

ComplexEval zeta_tk(int k, Complex s) {
    if (!(s.real() > 1.0)) throw DomainError("zeta_{t^k} needs Re s > 1");
    return riemann_zeta(monomial_gamma_argument(k, s));
}

double zeta_series_tail_bound(const GammaDomain& dom, Complex s, long n_terms) {
    if (dom.k0 == 0) return std::numeric_limits<double>::infinity();
    const double e = s.real() - 1.0;
    if (auto k = dom.f.as_unit_monomial()) {
        // term_n = Gamma_{t^k}(s) / (n+1)^{k(s-1)+1}
        const double a = *k * e + 1.0;
        return std::abs(gamma_tk_closed(*k, s).value) * power_tail(a, n_terms);
    }
    // f(t) <= M t^{k0} (1 + t)^{d-k0} and (1 + t)^b <= c_b (1 + t^b)
    const auto c = dom.f.coeffs();
    double m_sum = 0.0;
    for (double x : c) m_sum += std::abs(x);
    const double a = dom.k0 * e;
    const double b = (dom.f.degree() - dom.k0) * e;
    const double c_b = std::pow(2.0, std::max(b - 1.0, 0.0));
    const double scale = std::pow(m_sum, e) * c_b;
    return scale * (std::tgamma(a + 1.0) * power_tail(a + 1.0, n_terms) +
                    std::tgamma(a + b + 1.0) * power_tail(a + b + 1.0, n_terms));
}

ComplexEval zeta_f_series(const GammaDomain& dom, Complex s, long n_terms, const QuadratureConfig& cfg) {
    if (!(s.real() > 1.0)) throw DomainError("zeta_f series needs Re s > 1");
    if (n_terms < 0) throw DomainError("zeta_f series needs a nonnegative term count");

    Complex sum = 0.0;
    Complex comp = 0.0;
    double quad_err = 0.0;
    for (long n = 0; n <= n_terms; ++n) {
        const auto r = integrate_f_power(dom, s, static_cast<double>(n) + 1.0, cfg);
        const Complex y = r.value - comp;
        const Complex t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        quad_err += r.abs_err;
    }
    const ComplexEval g = gamma_f_quadrature(dom, s, cfg);
    const double g_abs = std::abs(g.value);

    ComplexEval out;
    out.method = Method::series;
    out.value = sum / g.value;
    const double tail = zeta_series_tail_bound(dom, s, n_terms);
    if (!std::isfinite(tail)) {
        out.abs_err = std::numeric_limits<double>::max();
        out.warnings.push_back("series diverges for f(0) > 0; value is the partial sum only");
        return out;
    }
    out.abs_err = (quad_err + tail) / g_abs + std::abs(out.value) * g.abs_err / g_abs;
    if (tail / g_abs > cfg.rel_tol * std::abs(out.value))
        out.warnings.push_back("truncation: tail bound " + format_double(tail / g_abs) + " exceeds rel_tol");
    return out;
}

}  // namespace ggamma
