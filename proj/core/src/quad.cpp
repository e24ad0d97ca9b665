#include "ggamma/quad.hpp"

#include "ggamma/error.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <vector>

namespace ggamma {

namespace {

// Gauss-Kronrod (7, 15) on [-1, 1]. Odd indices are the Gauss nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
};

constexpr int kMaxSubstitution = 1000;
constexpr int kInitialPanels = 8;

struct Panel {
    double a;
    double b;
    Complex kronrod;
    double err;
};

struct PanelOrder {
    bool operator()(const Panel& x, const Panel& y) const {
        if (x.err != y.err) return x.err < y.err;
        return x.a > y.a;
    }
};

template <class F>
Panel gk15(const F& h, double a, double b) {
    const double c = 0.5 * (a + b);
    const double r = 0.5 * (b - a);
    const Complex fc = h(c);
    Complex k = kWgk[7] * fc;
    Complex g = kWg[3] * fc;
    for (int j = 0; j < 7; ++j) {
        const double dx = r * kXgk[static_cast<std::size_t>(j)];
        const Complex f = h(c - dx) + h(c + dx);
        k += kWgk[static_cast<std::size_t>(j)] * f;
        if (j % 2 == 1) g += kWg[static_cast<std::size_t>(j / 2)] * f;
    }
    return {a, b, k * r, std::abs((k - g) * r)};
}

double log_tail_bound(const TailMajorant& tail, double lambda, double T) {
    const double mu = tail.degree > 0.0 ? lambda - tail.degree / T : lambda;
    return std::log(tail.coeff) + tail.degree * std::log(T) - lambda * T - std::log(mu);
}

double choose_truncation(const TailMajorant& tail, double lambda, double target) {
    const double log_target = std::log(target);
    double lo = std::max({tail.valid_from, 2.0 * std::max(tail.degree, 0.0) / lambda, 1.0 / lambda});
    if (tail.coeff <= 0.0) return lo;
    if (log_tail_bound(tail, lambda, lo) <= log_target) return lo;
    double hi = 2.0 * lo;
    while (log_tail_bound(tail, lambda, hi) > log_target) {
        lo = hi;
        hi *= 2.0;
    }
    for (int i = 0; i < 40; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (log_tail_bound(tail, lambda, mid) > log_target) lo = mid;
        else hi = mid;
    }
    return hi;
}

// Initial partition in u = t^{1/m}. The weight e^{-lambda t} lives on the
// scale 1/lambda, which can be far below T when T is set by the majorant's
// validity range; uniform panels on [0, T] would then straddle all the mass.
std::vector<double> initial_breakpoints(double T, double lambda, int m) {
    std::vector<double> t{0.0};
    for (double x = 0.5 / lambda; x < T; x *= 2.0) t.push_back(x);
    t.push_back(T);
    while (t.size() < static_cast<std::size_t>(kInitialPanels) + 1) {
        std::vector<double> finer{t.front()};
        for (std::size_t i = 1; i < t.size(); ++i) {
            finer.push_back(0.5 * (t[i - 1] + t[i]));
            finer.push_back(t[i]);
        }
        t = std::move(finer);
    }
    if (m > 1)
        for (double& x : t) x = std::pow(x, 1.0 / m);
    return t;
}

}  // namespace

double tail_bound(const TailMajorant& tail, double lambda, double T) {
    if (!(T > 0.0) || T < tail.valid_from || !(lambda * T > tail.degree))
        throw DomainError("tail bound requested outside the majorant's validity");
    if (tail.coeff <= 0.0) return 0.0;
    return std::exp(log_tail_bound(tail, lambda, T));
}

int substitution_exponent(double alpha) {
    if (!(alpha > -1.0)) throw DomainError("singularity exponent must exceed -1");
    if (alpha == 0.0) return 1;
    constexpr double eps = 1e-12;
    for (int m = 1; m <= kMaxSubstitution; ++m) {
        const double e = m * (1.0 + alpha) - 1.0;
        if (e >= 1.0 - eps) return m;
        if (e >= -eps && std::abs(e - std::round(e)) <= eps) return m;
    }
    return kMaxSubstitution;
}

QuadratureResult integrate_exp_weighted(const Integrand& g, double lambda, const QuadratureConfig& cfg) {
    if (!(lambda > 0.0)) throw DomainError("exponential rate must be positive");
    if (!(cfg.rel_tol > 0.0) || !(cfg.abs_tol > 0.0)) throw DomainError("tolerances must be positive");
    const int m = substitution_exponent(cfg.singularity_exponent);

    const double T = choose_truncation(cfg.tail, lambda, 0.5 * cfg.abs_tol);
    const double tail_err = cfg.tail.coeff > 0.0 ? tail_bound(cfg.tail, lambda, T) : 0.0;

    const double md = m;
    auto h = [&](double u) -> Complex {
        if (m == 1) return g(u) * std::exp(-lambda * u);
        const double um1 = std::pow(u, md - 1.0);
        const double t = um1 * u;
        return g(t) * (std::exp(-lambda * t) * md * um1);
    };

    std::priority_queue<Panel, std::vector<Panel>, PanelOrder> heap;
    std::vector<Panel> frozen;
    Complex total = 0.0;
    double total_err = 0.0;
    const auto cuts = initial_breakpoints(T, lambda, m);
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        Panel p = gk15(h, cuts[i], cuts[i + 1]);
        total += p.kronrod;
        total_err += p.err;
        heap.push(p);
    }
    int panels = static_cast<int>(cuts.size()) - 1;

    auto tolerance = [&] { return std::max(0.5 * cfg.abs_tol, cfg.rel_tol * std::abs(total)); };

    while (total_err > tolerance()) {
        if (heap.empty())
            throw ConvergenceError("quadrature stalled at machine resolution before reaching tolerance");
        if (panels >= cfg.max_panels)
            throw ConvergenceError("quadrature exhausted max_panels = " + std::to_string(cfg.max_panels));
        Panel worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b) || (worst.b - worst.a) < 1e-14 * std::max(1.0, worst.b)) {
            frozen.push_back(worst);
            continue;
        }
        Panel left = gk15(h, worst.a, mid);
        Panel right = gk15(h, mid, worst.b);
        total += left.kronrod + right.kronrod - worst.kronrod;
        total_err = std::max(0.0, total_err + left.err + right.err - worst.err);
        heap.push(left);
        heap.push(right);
        ++panels;
    }

    // Fixed left-to-right order with compensation for the reported value.
    std::vector<Panel> all = std::move(frozen);
    while (!heap.empty()) {
        all.push_back(heap.top());
        heap.pop();
    }
    std::sort(all.begin(), all.end(), [](const Panel& x, const Panel& y) { return x.a < y.a; });
    Complex sum = 0.0;
    Complex comp = 0.0;
    double err = 0.0;
    for (const Panel& p : all) {
        const Complex y = p.kronrod - comp;
        const Complex t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        err += p.err;
    }

    QuadratureResult out;
    out.value = sum;
    out.abs_err = err + tail_err;
    out.panels_used = panels;
    out.truncation_T = T;
    return out;
}

}  // namespace ggamma
