#pragma once

#include "ggamma/poly.hpp"
#include "ggamma/quad.hpp"
#include "ggamma/special.hpp"

#include <optional>

namespace ggamma {

/// Admissible f together with its multiplicity at t = 0 and the half-plane
/// Re s > 1 - 1/k0 on which the defining integral converges. There is no
/// bound when f(0) > 0.
struct GammaDomain {
    RealPolynomial f;
    int k0 = 0;
    std::optional<double> convergence_bound;

    /// Throws DomainError unless f is admissible.
    static GammaDomain make(RealPolynomial f);

    bool contains(Complex s) const noexcept {
        return !convergence_bound || s.real() > *convergence_bound;
    }
};

/// x = k(s - 1) + 1, the Euler-gamma argument of Gamma_{t^k}(s).
inline Complex monomial_gamma_argument(int k, Complex s) { return static_cast<double>(k) * (s - 1.0) + 1.0; }

/// Gamma(k(s-1) + 1). Throws PoleError at the poles.
ComplexEval gamma_tk_closed(int k, Complex s);

/// Direct quadrature of the integral of f(t)^{s-1} e^{-t} over (0, inf).
/// The endpoint exponent k0 (Re s - 1) and a polynomial tail majorant are
/// derived from f and s and override those fields of cfg.
ComplexEval gamma_f_quadrature(const GammaDomain& dom, Complex s, const QuadratureConfig& cfg = {});

/// Integral of f(t)^{s-1} e^{-lambda t} over (0, inf); gamma_f_quadrature
/// is the lambda = 1 case.
QuadratureResult integrate_f_power(const GammaDomain& dom, Complex s, double lambda,
                                   const QuadratureConfig& cfg = {});

/// Analytic continuation of Gamma_{t^k} through
/// Gamma_{t^k}(s) = Gamma_{t^k}(s + n) / (B(s) B(s+1) ... B(s+n-1)),
/// with n the smallest shift putting Re(s + n) above 2 - 1/k.
/// Throws PoleError (carrying j and the root) when some s + j is exactly a
/// root of B; a merely small |B(s + j)| produces a warning instead.
ComplexEval gamma_tk_continued(int k, Complex s);

/// n! n^x / (x (x+1) ... (x+n)), x = k(s-1)+1, in log space.
/// abs_err is the leading truncation term |value| |x (x+1)| / (2n).
ComplexEval gauss_limit_product(int k, Complex s, long n);

/// Truncated Weierstrass product for 1 / Gamma_{t^k}(s):
/// x e^{gamma x} prod_{n<=N} (1 + x/n) e^{-x/n}.
ComplexEval weierstrass_reciprocal(int k, Complex s, long n_terms);

/// pi / sin(pi k s) * prod_{i=1}^{k-1} 1 / (k(s-1) + i).
ComplexEval reflection_rhs(int k, Complex s);

/// Leading term (2 pi)^{1/2} (ks)^{ks + 1/2} e^{-ks} / B(s), Re s > 0.
ComplexEval asymptotic_approx(int k, Complex s);

/// k-gamma function: integral of t^{s-1} e^{-t^kp / kp} over (0, inf), by
/// quadrature after u = t^kp / kp.
ComplexEval k_gamma(double kp, Complex s, const QuadratureConfig& cfg = {});

/// kp^{s/kp - 1} Gamma(s / kp).
ComplexEval k_gamma_closed(double kp, Complex s);

/// k^{ks} s / B(s) * Gamma_{1/k}(s), with the k-gamma factor by quadrature.
ComplexEval gamma_tk_via_kgamma(int k, Complex s, const QuadratureConfig& cfg = {});

/// s (1 - ks) / (B(s) B(1/k - s)) * pi / sin(pi k s), as printed for the
/// product Gamma_{t^k}(s) Gamma_{t^k}(1/k - s). Only correct for k = 1.
ComplexEval quarter_reflection_rhs(int k, Complex s);

/// k * quarter_reflection_rhs(k, s). The product equals
/// Gamma(ks - k + 1) Gamma(2 - k - ks), which is k times the printed form.
ComplexEval quarter_reflection_rhs_corrected(int k, Complex s);

}  // namespace ggamma
