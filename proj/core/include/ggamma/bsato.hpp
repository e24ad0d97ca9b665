#pragma once

#include "ggamma/poly.hpp"

#include <string>

namespace ggamma {

/// Largest monomial degree accepted by the monomial constructions.
inline constexpr int kMaxMonomialDegree = 64;

/// Differential operator P(t, d/dt, s) with P f^s = B(s) f^{s-1}.
struct OperatorSpec {
    enum class Kind { pure_derivative, quadratic_form };

    Kind kind = Kind::pure_derivative;
    int order = 1;    // pure_derivative: d^order/dt^order
    double b = 0.0;   // quadratic_form: f = t^2 + b t + c,
    double c = 0.0;   //   P = f d^2/dt^2 - 2s(2s-1)

    std::string describe() const;
};

struct BsatoResult {
    SPolynomial big_b;    // B(s) of the functional equation
    SPolynomial monic_b;  // monic b(s); undefined (zero) when degenerate
    OperatorSpec op;
    bool degenerate = false;
};

/// C_m(s) for f = t^k, from C_1 = k s and C_{m+1} = C_m (k s - m).
/// Throws DomainError unless 1 <= m <= k <= kMaxMonomialDegree.
SPolynomial c_recurrence(int k, int m);

/// B(s) = k s (k s - 1) ... (k s - (k - 1)), b(s) = s (s - 1/k) ... (s - (k-1)/k).
SPolynomial bsato_monomial_b(int k);
BsatoResult bsato_monomial(int k);

/// f = t^2 + b t + c: B(s) = (b^2 - 4c) s (s - 1). Degenerate when b^2 = 4c.
/// Throws DomainError if f is not admissible.
BsatoResult bsato_quadratic(double b, double c);

}  // namespace ggamma
