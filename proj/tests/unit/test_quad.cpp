#include <doctest.h>

#include "ggamma/error.hpp"
#include "ggamma/quad.hpp"
#include "oracles.hpp"

#include <cmath>

using namespace ggamma;

namespace {

QuadratureConfig power_config(double a) {
    QuadratureConfig cfg;
    cfg.singularity_exponent = a;
    cfg.tail = {1.0, a, 0.0};
    return cfg;
}

}  // namespace

TEST_CASE("substitution exponent") {
    CHECK(substitution_exponent(0.0) == 1);
    CHECK(substitution_exponent(2.0) == 1);
    CHECK(substitution_exponent(0.5) == 2);   // m (1 + a) - 1 = 2
    CHECK(substitution_exponent(-0.5) == 2);  // exponent 0
    CHECK(substitution_exponent(-0.9) == 10);
    CHECK_THROWS_AS(substitution_exponent(-1.0), DomainError);
}

TEST_CASE("power times exponential, real exponents") {
    for (double a : {0.0, 1.0, 2.5, -0.5, -0.9, 0.3, 7.0}) {
        for (double lambda : {1.0, 0.5, 3.0}) {
            auto cfg = power_config(a);
            const auto r = integrate_exp_weighted([a](double t) { return Complex(std::pow(t, a)); }, lambda, cfg);
            const double exact = std::tgamma(a + 1.0) / std::pow(lambda, a + 1.0);
            INFO("a = " << a << ", lambda = " << lambda);
            CHECK(std::abs(r.value - exact) <= std::max(10.0 * r.abs_err, 1e-13 * exact));
            CHECK(std::abs(r.value - exact) <= 1e-9 * exact);
        }
    }
}

TEST_CASE("complex exponent") {
    const Complex w(0.5, 2.0);
    auto cfg = power_config(w.real());
    const auto r = integrate_exp_weighted(
        [w](double t) { return t == 0.0 ? Complex(0.0) : std::exp(w * std::log(t)); }, 1.0, cfg);
    CHECK(oracle::rel_err(r.value, oracle::gamma(w + 1.0)) < 1e-9);
}

TEST_CASE("oscillatory integrand") {
    QuadratureConfig cfg;
    const auto r = integrate_exp_weighted([](double t) { return Complex(std::cos(t), std::sin(t)); }, 1.0, cfg);
    // integral of e^{(i - 1) t} = 1 / (1 - i)
    CHECK(std::abs(r.value - 1.0 / Complex(1.0, -1.0)) < 1e-10);
}

TEST_CASE("truncation point honours the tail bound") {
    auto cfg = power_config(3.0);
    const auto r = integrate_exp_weighted([](double t) { return Complex(t * t * t); }, 1.0, cfg);
    CHECK(r.truncation_T > 0.0);
    CHECK(tail_bound(cfg.tail, 1.0, r.truncation_T) <= cfg.abs_tol);
    CHECK(r.panels_used >= 8);
}

TEST_CASE("tail bound dominates the true tail") {
    for (double d : {0.0, 1.0, 2.5}) {
        const TailMajorant m{1.0, d, 0.0};
        for (double T : {10.0, 30.0}) {
            // integral of (T+u)^d e^{-(T+u)} over u in [0, 60] by composite Simpson
            const int n = 6000;
            const double h = 60.0 / n;
            auto g = [&](double u) { return std::pow(T + u, d) * std::exp(-(T + u)); };
            double upper = g(0.0) + g(60.0);
            for (int i = 1; i < n; ++i) upper += (i % 2 ? 4.0 : 2.0) * g(i * h);
            upper *= h / 3.0;
            CHECK(tail_bound(m, 1.0, T) >= upper * (1.0 - 1e-9));
        }
    }
}

TEST_CASE("argument checks") {
    QuadratureConfig cfg;
    auto one = [](double) { return Complex(1.0); };
    CHECK_THROWS_AS(integrate_exp_weighted(one, 0.0, cfg), DomainError);
    CHECK_THROWS_AS(integrate_exp_weighted(one, -1.0, cfg), DomainError);
    cfg.singularity_exponent = -1.0;
    CHECK_THROWS_AS(integrate_exp_weighted(one, 1.0, cfg), DomainError);
}

TEST_CASE("panel budget exhaustion raises ConvergenceError") {
    QuadratureConfig cfg;
    cfg.max_panels = 9;
    cfg.rel_tol = 1e-15;
    cfg.abs_tol = 1e-300;
    auto wild = [](double t) { return Complex(std::sin(200.0 * t)); };
    CHECK_THROWS_AS(integrate_exp_weighted(wild, 1.0, cfg), ConvergenceError);
}

TEST_CASE("results are deterministic") {
    auto cfg = power_config(0.7);
    auto g = [](double t) { return Complex(std::pow(t, 0.7) * std::cos(t)); };
    const auto a = integrate_exp_weighted(g, 1.0, cfg);
    const auto b = integrate_exp_weighted(g, 1.0, cfg);
    CHECK(a.value == b.value);
    CHECK(a.abs_err == b.abs_err);
}
