#include <benchmark/benchmark.h>

#include "ggamma/bsato.hpp"
#include "ggamma/gammaf.hpp"
#include "ggamma/special.hpp"
#include "ggamma/verify.hpp"
#include "ggamma/zetabeta.hpp"

using namespace ggamma;

namespace {

void BM_LogGamma(benchmark::State& state) {
    Complex z(0.3, 0.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(log_gamma(z));
        z += Complex(0.01, 0.007);
        if (z.real() > 50.0) z = Complex(0.3, 0.0);
    }
}
BENCHMARK(BM_LogGamma);

void BM_RiemannZeta(benchmark::State& state) {
    const Complex s(2.5, 3.0);
    for (auto _ : state) benchmark::DoNotOptimize(riemann_zeta(s));
}
BENCHMARK(BM_RiemannZeta);

void BM_GammaQuadrature(benchmark::State& state) {
    const auto dom = GammaDomain::make(RealPolynomial::monomial(static_cast<int>(state.range(0))));
    const auto cfg = verify_quadrature();
    for (auto _ : state) benchmark::DoNotOptimize(gamma_f_quadrature(dom, Complex(1.5, 1.0), cfg));
}
BENCHMARK(BM_GammaQuadrature)->DenseRange(1, 3)->Unit(benchmark::kMicrosecond);

void BM_GaussLimit(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(gauss_limit_product(2, 1.5, state.range(0)));
}
BENCHMARK(BM_GaussLimit)->RangeMultiplier(10)->Range(100, 100000);

void BM_ZetaSeries(benchmark::State& state) {
    const auto dom = GammaDomain::make(RealPolynomial::monomial(2));
    const auto cfg = verify_quadrature();
    for (auto _ : state) benchmark::DoNotOptimize(zeta_f_series(dom, 2.0, state.range(0), cfg));
}
BENCHMARK(BM_ZetaSeries)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_BsatoQuadratic(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(bsato_quadratic(1.0, 3.0));
}
BENCHMARK(BM_BsatoQuadratic);

void BM_CheckIdentity(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(check_identity("functional_eq", {}));
}
BENCHMARK(BM_CheckIdentity)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
