#pragma once

#include "ggamma/gammaf.hpp"

namespace ggamma {

/// B_f(p, q) = Gamma_f(p) Gamma_f(q) / Gamma_f(p + q). Closed forms are used
/// when f = t^k exactly, quadrature otherwise. Arguments are put in a
/// canonical order first, so beta_f(p, q) and beta_f(q, p) agree bit for bit.
ComplexEval beta_f(const GammaDomain& dom, Complex p, Complex q, const QuadratureConfig& cfg = {});

/// k p q / (p + q) * B(p + q) / (B(p) B(q)) * Beta(kp, kq).
ComplexEval beta_tk_relation_rhs(int k, Complex p, Complex q);

/// zeta(k(s - 1) + 1) for Re s > 1.
ComplexEval zeta_tk(int k, Complex s);

/// Partial sum over n = 0..n_terms of the integrals of f^{s-1} e^{-(n+1)t},
/// divided by Gamma_f(s). abs_err carries the quadrature errors plus a
/// rigorous bound on the omitted terms; when f(0) > 0 the series diverges
/// and only the partial sum is returned, flagged by a warning.
ComplexEval zeta_f_series(const GammaDomain& dom, Complex s, long n_terms, const QuadratureConfig& cfg = {});

/// Bound on |sum_{n > n_terms} term_n| for the unnormalised series (before
/// division by Gamma_f(s)); +inf when f(0) > 0.
double zeta_series_tail_bound(const GammaDomain& dom, Complex s, long n_terms);

}  // namespace ggamma
