#pragma once

#include "ggamma/poly.hpp"

#include <functional>

namespace ggamma {

/// Polynomial majorant |g(t)| <= coeff * t^degree, valid for t >= valid_from.
/// It drives the truncation point of the semi-infinite integral.
struct TailMajorant {
    double coeff = 1.0;
    double degree = 0.0;
    double valid_from = 0.0;
};

struct QuadratureConfig {
    double rel_tol = 1e-10;
    double abs_tol = 1e-14;
    int max_panels = 4096;
    /// alpha in g(t) ~ t^alpha as t -> 0; must exceed -1.
    double singularity_exponent = 0.0;
    TailMajorant tail{};
};

struct QuadratureResult {
    Complex value{};
    double abs_err = 0.0;
    int panels_used = 0;
    double truncation_T = 0.0;
};

using Integrand = std::function<Complex(double)>;

/// Integral over t in (0, inf) of g(t) e^{-lambda t}.
///
/// The range is cut at the smallest T (found by doubling and bisection) for
/// which the closed-form majorant tail bound drops below abs_tol / 2. When the
/// declared endpoint exponent alpha is nonzero the variable t = u^m is used,
/// with m the smallest integer that leaves a C^1 integrand in u. [0, T^{1/m}]
/// is then refined by global adaptive bisection on the Gauss-Kronrod (7, 15)
/// pair; real and imaginary parts share one panel set and the panel error is
/// |K15 - G7| of the complex difference.
///
/// Throws DomainError for lambda <= 0 or alpha <= -1, ConvergenceError when
/// max_panels is exhausted before the tolerance max(abs_tol/2, rel_tol |I|)
/// is met.
QuadratureResult integrate_exp_weighted(const Integrand& g, double lambda, const QuadratureConfig& cfg);

/// Rigorous bound on the integral over [T, inf) of coeff * t^degree * e^{-lambda t}.
/// Requires T >= valid_from, T > 0 and lambda T > degree.
double tail_bound(const TailMajorant& tail, double lambda, double T);

/// Smallest m >= 1 making u^{m (1 + alpha) - 1} continuously differentiable
/// at u = 0 (exponent >= 1, or a nonnegative integer).
int substitution_exponent(double alpha);

}  // namespace ggamma
