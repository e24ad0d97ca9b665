#include "ggamma/gammaf.hpp"

#include "ggamma/bsato.hpp"
#include "ggamma/error.hpp"

#include <cmath>
#include <numbers>

namespace ggamma {

namespace {

using std::numbers::pi;

// |B| below this fraction of its local scale is reported as near-pole.
constexpr double kNearPoleRatio = 1e-12;

void check_k(int k) {
    if (k < 1 || k > kMaxMonomialDegree)
        throw DomainError("monomial degree k must lie in [1, " + std::to_string(kMaxMonomialDegree) + "]");
}

std::string complex_str(Complex z) {
    if (z.imag() == 0.0) return format_double(z.real());
    return format_double(z.real()) + (z.imag() < 0 ? "" : "+") + format_double(z.imag()) + "i";
}

// Scale of B(s) = k^k prod (s - j/k) away from its roots.
double monomial_b_scale(int k, Complex s) {
    return std::pow(static_cast<double>(k), k) * std::pow(std::max(1.0, std::abs(s)), k);
}

// B(s) for f = t^k, refusing exact root hits.
Complex b_nonzero(const SPolynomial& b, Complex s, const char* what) {
    if (auto r = exact_root_hit(b, s))
        throw SingularPointError(std::string(what) + ": B(s) vanishes at s = " + complex_str(s));
    const Complex v = s_poly_eval(b, s);
    if (v == 0.0) throw SingularPointError(std::string(what) + ": B(s) vanishes at s = " + complex_str(s));
    return v;
}

Complex sin_pi_nonzero(Complex z, const char* what) {
    const Complex v = sin_pi(z);
    if (v == 0.0) throw SingularPointError(std::string(what) + ": sin(pi k s) = 0 at ks = " + complex_str(z));
    return v;
}

// log(1 + y) - y, accurate for small |y|.
Complex log1p_minus_identity(Complex y) {
    if (std::abs(y) >= 0.05) return std::log(1.0 + y) - y;
    Complex term = y;
    Complex acc = 0.0;
    for (int m = 2; m < 40; ++m) {
        term *= -y;
        const Complex add = term / static_cast<double>(m);
        acc += add;
        if (std::abs(add) <= 1e-18 * std::abs(acc)) break;
    }
    return acc;
}

struct KahanSum {
    Complex sum = 0.0;
    Complex comp = 0.0;
    void add(Complex x) {
        const Complex y = x - comp;
        const Complex t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
};

}  // namespace

GammaDomain GammaDomain::make(RealPolynomial f) {
    if (!is_admissible(f)) throw DomainError("f = [" + f.to_string() + "] is not positive on (0, inf)");
    GammaDomain d;
    d.k0 = multiplicity_at_zero(f);
    if (d.k0 >= 1) d.convergence_bound = 1.0 - 1.0 / d.k0;
    d.f = std::move(f);
    return d;
}

ComplexEval gamma_tk_closed(int k, Complex s) {
    check_k(k);
    return gamma(monomial_gamma_argument(k, s));
}

ComplexEval gamma_f_quadrature(const GammaDomain& dom, Complex s, const QuadratureConfig& cfg) {
    const auto r = integrate_f_power(dom, s, 1.0, cfg);
    ComplexEval out;
    out.value = r.value;
    out.abs_err = r.abs_err;
    out.method = Method::quadrature;
    return out;
}

QuadratureResult integrate_f_power(const GammaDomain& dom, Complex s, double lambda, const QuadratureConfig& cfg) {
    if (!dom.contains(s))
        throw DomainError("Gamma_f integral diverges: need Re s > " + format_double(*dom.convergence_bound));

    const auto c = dom.f.coeffs();
    const int k0 = dom.k0;
    const RealPolynomial q(std::vector<double>(c.begin() + k0, c.end()));
    const Complex w = s - 1.0;
    const double e = w.real();

    // f(t)^{s-1} = exp((s-1)(k0 ln t + ln q(t))), q > 0 on [0, inf).
    auto g = [&](double t) -> Complex {
        if (t == 0.0) return k0 == 0 ? std::exp(w * std::log(q(0.0))) : Complex{0.0};
        const double log_f = k0 * std::log(t) + std::log(q(t));
        return std::exp(w * log_f);
    };

    QuadratureConfig local = cfg;
    local.singularity_exponent = k0 * e;
    const int n = dom.f.degree();
    const double lead = dom.f.leading();
    double abs_sum = 0.0;
    double lower_sum = 0.0;
    for (int i = 0; i <= n; ++i) {
        abs_sum += std::abs(c[static_cast<std::size_t>(i)]);
        if (i < n) lower_sum += std::abs(c[static_cast<std::size_t>(i)]);
    }
    if (e >= 0.0) {
        // f(t) <= (sum |a_i|) t^n for t >= 1
        local.tail = {std::pow(abs_sum, e), n * e, 1.0};
    } else {
        // f(t) >= a_n t^n / 2 once t >= max(1, 2 sum_{i<n} |a_i| / a_n)
        local.tail = {std::pow(0.5 * lead, e), n * e, std::max(1.0, 2.0 * lower_sum / lead)};
    }

    return integrate_exp_weighted(g, lambda, local);
}

ComplexEval gamma_tk_continued(int k, Complex s) {
    check_k(k);
    const SPolynomial b = bsato_monomial_b(k);
    const double target = 2.0 - 1.0 / k;
    int n = 0;
    if (!(s.real() > target)) n = static_cast<int>(std::floor(target - s.real())) + 1;

    ComplexEval out;
    out.method = Method::continuation;
    Complex denom = 1.0;
    for (int j = 0; j < n; ++j) {
        const Complex sj = s + static_cast<double>(j);
        if (auto root = exact_root_hit(b, sj)) {
            throw PoleError("Gamma_{t^" + std::to_string(k) + "} has a pole at s = " + complex_str(s) +
                                ": B(s + " + std::to_string(j) + ") = 0 at root " + format_double(*root),
                            j, *root);
        }
        const Complex bj = s_poly_eval(b, sj);
        if (bj == 0.0) throw PoleError("B(s + " + std::to_string(j) + ") = 0", j, sj.real());
        if (std::abs(bj) < kNearPoleRatio * monomial_b_scale(k, sj))
            out.warnings.push_back("near-pole: |B(s + " + std::to_string(j) + ")| = " +
                                   format_double(std::abs(bj)));
        denom *= bj;
    }
    const ComplexEval num = gamma_tk_closed(k, s + static_cast<double>(n));
    out.value = num.value / denom;
    if (!std::isfinite(out.value.real()) || !std::isfinite(out.value.imag()))
        throw OverflowError("continued Gamma_{t^k} overflows binary64");
    const double num_rel = num.abs_err / std::abs(num.value);
    out.abs_err = std::abs(out.value) * (num_rel + 4e-16 * (1.0 + n * (k + 1.0)));
    return out;
}

ComplexEval gauss_limit_product(int k, Complex s, long n) {
    check_k(k);
    if (n < 1) throw DomainError("Gauss limit product needs n >= 1");
    const Complex x = monomial_gamma_argument(k, s);
    KahanSum log_den;
    for (long j = 0; j <= n; ++j) {
        const Complex factor = x + static_cast<double>(j);
        if (factor == 0.0)
            throw SingularPointError("Gauss limit product: factor k(s-1)+" + std::to_string(j + 1) + " vanishes");
        log_den.add(std::log(factor));
    }
    const double nd = static_cast<double>(n);
    const Complex log_val = std::lgamma(nd + 1.0) + x * std::log(nd) - log_den.sum;
    ComplexEval out;
    out.value = checked_exp(log_val, "Gauss limit product");
    out.abs_err = std::abs(out.value) * std::abs(x * (x + 1.0)) / (2.0 * nd);
    out.method = Method::limit;
    return out;
}

ComplexEval weierstrass_reciprocal(int k, Complex s, long n_terms) {
    check_k(k);
    if (n_terms < 1) throw DomainError("Weierstrass product needs N >= 1");
    const Complex x = monomial_gamma_argument(k, s);
    const double tail = std::norm(x) / (2.0 * static_cast<double>(n_terms));
    ComplexEval out;
    out.method = Method::product;
    if (x == 0.0) return out;  // 1 / Gamma(0) = 0

    KahanSum log_prod;
    log_prod.add(std::log(x));
    log_prod.add(euler_gamma_constant() * x);
    for (long n = 1; n <= n_terms; ++n) {
        const Complex y = x / static_cast<double>(n);
        if (y == -1.0) return out;  // zero of 1/Gamma at x = -n
        log_prod.add(log1p_minus_identity(y));
    }
    out.value = checked_exp(log_prod.sum, "Weierstrass product");
    out.abs_err = std::abs(out.value) * std::expm1(tail);
    return out;
}

ComplexEval reflection_rhs(int k, Complex s) {
    check_k(k);
    const double kd = k;
    const Complex sv = sin_pi_nonzero(kd * s, "reflection");
    Complex prod = 1.0;
    for (int i = 1; i < k; ++i) {
        const Complex f = kd * (s - 1.0) + static_cast<double>(i);
        if (f == 0.0) throw SingularPointError("reflection: factor k(s-1)+" + std::to_string(i) + " vanishes");
        prod *= f;
    }
    ComplexEval out;
    out.value = pi / sv / prod;
    out.abs_err = std::abs(out.value) * 4e-16 * (2.0 + k);
    out.method = Method::closed_form;
    return out;
}

ComplexEval asymptotic_approx(int k, Complex s) {
    check_k(k);
    if (!(s.real() > 0.0)) throw DomainError("asymptotic form requires Re s > 0");
    const SPolynomial b = bsato_monomial_b(k);
    const Complex bv = b_nonzero(b, s, "asymptotic form");
    const Complex ks = static_cast<double>(k) * s;
    const Complex log_val = 0.5 * std::log(2.0 * pi) + (ks + 0.5) * std::log(ks) - ks - std::log(bv);
    ComplexEval out;
    out.value = checked_exp(log_val, "asymptotic form");
    out.abs_err = std::abs(out.value) / (12.0 * std::abs(ks));
    out.method = Method::asymptotic;
    return out;
}

ComplexEval k_gamma(double kp, Complex s, const QuadratureConfig& cfg) {
    if (!(kp > 0.0)) throw DomainError("k-gamma needs k > 0");
    if (!(s.real() > 0.0)) throw DomainError("k-gamma needs Re s > 0");
    // t = (kp u)^{1/kp}: t^{s-1} dt = (kp u)^{s/kp - 1} du
    const Complex w = s / kp - 1.0;
    auto g = [&](double u) -> Complex {
        if (u == 0.0) return 0.0;
        return std::exp(w * std::log(kp * u));
    };
    QuadratureConfig local = cfg;
    local.singularity_exponent = w.real();
    local.tail = {std::pow(kp, w.real()), w.real(), 0.0};
    const auto r = integrate_exp_weighted(g, 1.0, local);
    ComplexEval out;
    out.value = r.value;
    out.abs_err = r.abs_err;
    out.method = Method::quadrature;
    return out;
}

ComplexEval k_gamma_closed(double kp, Complex s) {
    if (!(kp > 0.0)) throw DomainError("k-gamma needs k > 0");
    const Complex z = s / kp;
    const Complex log_val = (z - 1.0) * std::log(kp) + log_gamma(z);
    ComplexEval out;
    out.value = checked_exp(log_val, "k-gamma");
    out.abs_err = std::abs(out.value) * 4e-16 * (8.0 + std::abs(log_val));
    out.method = Method::closed_form;
    return out;
}

ComplexEval gamma_tk_via_kgamma(int k, Complex s, const QuadratureConfig& cfg) {
    check_k(k);
    if (!(s.real() > 0.0)) throw DomainError("k-gamma bridge requires Re s > 0");
    const SPolynomial b = bsato_monomial_b(k);
    const Complex bv = b_nonzero(b, s, "k-gamma bridge");
    const double kd = k;
    const Complex factor = checked_exp(kd * s * std::log(kd), "k^{ks}") * s / bv;
    const ComplexEval kg = k_gamma(1.0 / kd, s, cfg);
    ComplexEval out;
    out.value = factor * kg.value;
    out.abs_err = std::abs(factor) * kg.abs_err + std::abs(out.value) * 1e-15;
    out.method = Method::quadrature;
    return out;
}

ComplexEval quarter_reflection_rhs(int k, Complex s) {
    check_k(k);
    const double kd = k;
    const SPolynomial b = bsato_monomial_b(k);
    const Complex sv = sin_pi_nonzero(kd * s, "quarter reflection");
    const Complex b1 = b_nonzero(b, s, "quarter reflection");
    const Complex b2 = b_nonzero(b, 1.0 / kd - s, "quarter reflection");
    ComplexEval out;
    out.value = s * (1.0 - kd * s) / (b1 * b2) * (pi / sv);
    out.abs_err = std::abs(out.value) * 4e-16 * (4.0 + 2.0 * k);
    out.method = Method::closed_form;
    return out;
}

ComplexEval quarter_reflection_rhs_corrected(int k, Complex s) {
    ComplexEval out = quarter_reflection_rhs(k, s);
    out.value *= static_cast<double>(k);
    out.abs_err *= k;
    return out;
}

}  // namespace ggamma
