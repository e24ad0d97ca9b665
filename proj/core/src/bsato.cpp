#include "ggamma/bsato.hpp"

#include "ggamma/error.hpp"

#include <cmath>

namespace ggamma {

namespace {

void check_degree(int k) {
    if (k < 1 || k > kMaxMonomialDegree)
        throw DomainError("monomial degree must lie in [1, " + std::to_string(kMaxMonomialDegree) + "]");
}

std::vector<double> monomial_roots(int k, int m) {
    std::vector<double> roots;
    roots.reserve(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) roots.push_back(static_cast<double>(j) / k);
    return roots;
}

}  // namespace

std::string OperatorSpec::describe() const {
    if (kind == Kind::pure_derivative) {
        return order == 1 ? "d/dt" : "d^" + std::to_string(order) + "/dt^" + std::to_string(order);
    }
    return "(t^2 + " + format_double(b) + " t + " + format_double(c) + ") d^2/dt^2 - 2s(2s-1)";
}

SPolynomial c_recurrence(int k, int m) {
    check_degree(k);
    if (m < 1 || m > k) throw DomainError("C_m(s) needs 1 <= m <= k");
    const double kd = k;
    std::vector<double> c{0.0, kd};  // C_1(s) = k s
    for (int j = 1; j < m; ++j) {
        // C_{j+1} = C_j (k s - j)
        std::vector<double> next(c.size() + 1, 0.0);
        for (std::size_t i = 0; i < c.size(); ++i) {
            next[i + 1] += kd * c[i];
            next[i] -= j * c[i];
        }
        c = std::move(next);
    }
    return SPolynomial::with_factors(std::move(c), std::pow(kd, m), monomial_roots(k, m));
}

SPolynomial bsato_monomial_b(int k) { return c_recurrence(k, k); }

BsatoResult bsato_monomial(int k) {
    BsatoResult out;
    out.big_b = bsato_monomial_b(k);
    out.monic_b = SPolynomial::from_roots(1.0, monomial_roots(k, k));
    out.op.kind = OperatorSpec::Kind::pure_derivative;
    out.op.order = k;
    out.degenerate = false;
    return out;
}

BsatoResult bsato_quadratic(double b, double c) {
    if (!is_admissible(RealPolynomial({c, b, 1.0})))
        throw DomainError("t^2 + b t + c must be positive on (0, inf)");
    const double disc = b * b - 4.0 * c;
    BsatoResult out;
    out.op.kind = OperatorSpec::Kind::quadratic_form;
    out.op.order = 2;
    out.op.b = b;
    out.op.c = c;
    out.degenerate = disc == 0.0;
    if (!out.degenerate) {
        out.big_b = SPolynomial::from_roots(disc, {0.0, 1.0});
        out.monic_b = SPolynomial::from_roots(1.0, {0.0, 1.0});
    }
    return out;
}

}  // namespace ggamma
