#pragma once

#include "ggamma/poly.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace ggamma {

enum class Method { closed_form, quadrature, continuation, product, limit, asymptotic, series };

std::string_view method_name(Method m) noexcept;

/// Value of an evaluator together with an absolute error estimate, the
/// method that produced it, and any non-fatal diagnostics.
struct ComplexEval {
    Complex value{};
    double abs_err = 0.0;
    Method method = Method::closed_form;
    std::vector<std::string> warnings;
};

/// True iff z is exactly 0, -1, -2, ...
bool is_nonpositive_integer(Complex z) noexcept;

/// sin(pi z) with argument reduction, exact zeros at the integers.
Complex sin_pi(Complex z) noexcept;

/// Principal-branch log Gamma(z). Lanczos (g = 607/128, 15 terms) for
/// Re z >= 1/2, the reflection formula below that. Throws PoleError at
/// the nonpositive integers.
Complex log_gamma(Complex z);

/// exp(log_gamma(z)); throws OverflowError when Re log Gamma(z) leaves the
/// binary64 range.
ComplexEval gamma(Complex z);

/// Riemann zeta for Re z > 1: direct partial sum plus an Euler-Maclaurin
/// tail with Bernoulli terms up to B_24. Throws DomainError for Re z <= 1.
ComplexEval riemann_zeta(Complex z);

/// Gamma(p) Gamma(q) / Gamma(p + q), evaluated in log space.
ComplexEval classical_beta(Complex p, Complex q);

double euler_gamma_constant() noexcept;

/// Leading Laplace-method term h^{1/2} e^{-f(c)/h} sqrt(2 pi) g(c) / sqrt(f''(c)),
/// assembled in log space.
double laplace_point_approx(double g_at_c, double f_at_c, double f2_at_c, double h);

/// Complex exp that throws OverflowError instead of returning inf.
Complex checked_exp(Complex z, std::string_view what);

}  // namespace ggamma
