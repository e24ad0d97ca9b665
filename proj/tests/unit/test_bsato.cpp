#include <doctest.h>

#include "ggamma/bsato.hpp"
#include "ggamma/error.hpp"

#include <cmath>
#include <vector>

using namespace ggamma;

namespace {

std::vector<double> coeffs_of(const SPolynomial& p) { return {p.coeffs().begin(), p.coeffs().end()}; }

// falling product k s (k s - 1) ... (k s - (m - 1)) evaluated directly
double falling(int k, int m, double s) {
    double acc = 1.0;
    for (int j = 0; j < m; ++j) acc *= k * s - j;
    return acc;
}

// m-th derivative by central differences of order 2 on a fine grid
double nth_derivative(const auto& fn, double t, int m, double h) {
    // binomial stencil: sum (-1)^j C(m, j) fn(t + (m/2 - j) h) / h^m
    double acc = 0.0;
    double binom = 1.0;
    for (int j = 0; j <= m; ++j) {
        acc += ((j % 2) ? -1.0 : 1.0) * binom * fn(t + (0.5 * m - j) * h);
        binom = binom * (m - j) / (j + 1);
    }
    return acc / std::pow(h, m);
}

}  // namespace

TEST_CASE("B(s) for t^2 matches the worked example") {
    const auto b = bsato_monomial_b(2);
    CHECK(coeffs_of(b) == std::vector<double>{0.0, -2.0, 4.0});
    const auto r = bsato_monomial(2);
    CHECK(coeffs_of(r.monic_b) == std::vector<double>{0.0, -0.5, 1.0});
    CHECK(r.op.describe() == "d^2/dt^2");
    CHECK_FALSE(r.degenerate);
    const auto roots = s_poly_roots(r.big_b);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0] == Complex(0.0));
    CHECK(roots[1] == Complex(0.5));
}

TEST_CASE("C recurrence reproduces the falling product") {
    for (int k = 1; k <= 8; ++k)
        for (int m = 1; m <= k; ++m) {
            const auto c = c_recurrence(k, m);
            CHECK(c.degree() == m);
            CHECK(c.has_factors());
            for (double s : {-1.3, 0.0, 0.37, 2.0, 5.5}) {
                const double want = falling(k, m, s);
                CHECK(s_poly_eval(c, s).real() == doctest::Approx(want).epsilon(1e-13).scale(1.0));
            }
        }
    CHECK_THROWS_AS(c_recurrence(3, 0), DomainError);
    CHECK_THROWS_AS(c_recurrence(3, 4), DomainError);
    CHECK_THROWS_AS(c_recurrence(kMaxMonomialDegree + 1, 1), DomainError);
}

TEST_CASE("monomial B is k^k times the monic polynomial with roots j/k") {
    for (int k = 1; k <= 10; ++k) {
        const auto r = bsato_monomial(k);
        CHECK(r.big_b.degree() == k);
        CHECK(r.big_b.leading() == doctest::Approx(std::pow(k, k)));
        CHECK(r.monic_b.leading() == doctest::Approx(1.0));
        const auto roots = s_poly_roots(r.monic_b);
        REQUIRE(roots.size() == static_cast<std::size_t>(k));
        for (int j = 0; j < k; ++j) CHECK(roots[static_cast<std::size_t>(j)].real() == doctest::Approx(double(j) / k));
        for (double s : {0.3, 1.7})
            CHECK(s_poly_eval(r.big_b, s).real() ==
                  doctest::Approx(std::pow(k, k) * s_poly_eval(r.monic_b, s).real()).epsilon(1e-12));
        CHECK(r.op.order == k);
    }
}

TEST_CASE("operator identity for t^k by finite differences") {
    // d^k/dt^k t^{ks} = B(s) t^{k(s-1)}
    for (int k : {1, 2, 3}) {
        for (double s : {1.3, 2.0, 0.8}) {
            const double t = 1.7;
            auto fs = [&](double x) { return std::pow(x, k * s); };
            const double lhs = nth_derivative(fs, t, k, 1e-3);
            const double rhs = s_poly_eval(bsato_monomial_b(k), s).real() * std::pow(t, k * (s - 1.0));
            CHECK(lhs == doctest::Approx(rhs).epsilon(1e-4));
        }
    }
}

TEST_CASE("quadratic B and the operator identity") {
    for (auto [b, c] : std::vector<std::pair<double, double>>{{0.0, 1.0}, {1.0, 3.0}, {0.0, 4.0}, {3.0, 2.0}}) {
        const auto r = bsato_quadratic(b, c);
        REQUIRE_FALSE(r.degenerate);
        const double disc = b * b - 4.0 * c;
        CHECK(r.big_b.leading() == doctest::Approx(disc));
        for (double s : {1.5, 2.0, 0.7}) {
            CHECK(s_poly_eval(r.big_b, s).real() == doctest::Approx(disc * s * (s - 1.0)));
            // (f d^2/dt^2 - 2s(2s-1)) f^s = B(s) f^{s-1}
            auto f = [&](double t) { return t * t + b * t + c; };
            auto fs = [&](double t) { return std::pow(f(t), s); };
            const double t = 0.9;
            const double lhs = f(t) * nth_derivative(fs, t, 2, 1e-4) - 2.0 * s * (2.0 * s - 1.0) * fs(t);
            const double rhs = s_poly_eval(r.big_b, s).real() * std::pow(f(t), s - 1.0);
            CHECK(lhs == doctest::Approx(rhs).epsilon(1e-5).scale(1.0));
        }
        CHECK(r.op.kind == OperatorSpec::Kind::quadratic_form);
    }
}

TEST_CASE("degenerate quadratic") {
    const auto r = bsato_quadratic(2.0, 1.0);  // (t + 1)^2
    CHECK(r.degenerate);
    CHECK(r.big_b.is_zero());
    CHECK(r.monic_b.is_zero());
}

TEST_CASE("non-admissible quadratic is refused") {
    CHECK_THROWS_AS(bsato_quadratic(-3.0, 1.0), DomainError);
    CHECK_THROWS_AS(bsato_quadratic(-2.0, 1.0), DomainError);  // (t - 1)^2
}
