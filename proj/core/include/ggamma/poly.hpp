#pragma once

#include <complex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ggamma {

using Complex = std::complex<double>;

/// Polynomial f(t) with real coefficients in ascending order
/// (coeffs()[i] multiplies t^i). Trailing zeros are stripped on
/// construction; the zero polynomial is stored as the single coefficient 0.
class RealPolynomial {
public:
    RealPolynomial() : coeffs_{0.0} {}
    explicit RealPolynomial(std::vector<double> coeffs);

    /// c * t^k
    static RealPolynomial monomial(int k, double c = 1.0);

    /// Parses the comma-separated ascending coefficient list used on the
    /// command line, e.g. "1,0,1" for t^2 + 1. Throws DomainError.
    static RealPolynomial parse(std::string_view text);

    std::span<const double> coeffs() const noexcept { return coeffs_; }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == 0.0; }
    double leading() const noexcept { return coeffs_.back(); }

    /// True iff the polynomial is exactly t^k for some k >= 0.
    std::optional<int> as_unit_monomial() const;

    double operator()(double t) const;

    std::string to_string() const;

    friend bool operator==(const RealPolynomial&, const RealPolynomial&) = default;

private:
    std::vector<double> coeffs_;
};

double eval(const RealPolynomial& p, double t);

/// exp(w * ln p(t)) with the real logarithm; requires p(t) > 0.
Complex eval_complex_power(const RealPolynomial& p, double t, Complex w);

RealPolynomial derivative(const RealPolynomial& p);

/// Order of vanishing at t = 0. Throws DomainError for the zero polynomial.
int multiplicity_at_zero(const RealPolynomial& p);

/// Number of distinct real roots of p in (a, b], by Sturm's theorem.
/// Requires p(a) != 0 and p(b) != 0 (up to the internal zero threshold).
int sturm_root_count(const RealPolynomial& p, double a, double b);

/// Cauchy upper bound on the magnitude of every root of p.
double cauchy_root_bound(const RealPolynomial& p);

/// True iff p(t) > 0 for every t > 0: positive leading coefficient and no
/// root in (0, inf), certified by a Sturm count. False for the zero polynomial.
bool is_admissible(const RealPolynomial& p);

/// Polynomial in the parameter s. Carries an optional factored form
/// (leading coefficient plus real roots) when it was built from known
/// linear factors; evaluation and root queries then use the factors.
class SPolynomial {
public:
    SPolynomial() : coeffs_{0.0} {}
    explicit SPolynomial(std::vector<double> coeffs);

    static SPolynomial from_roots(double leading, std::vector<double> roots);

    /// Attaches a known factorization to coefficients computed elsewhere.
    /// The caller guarantees coeffs == leading * prod (s - roots[i]).
    static SPolynomial with_factors(std::vector<double> coeffs, double leading, std::vector<double> roots);

    std::span<const double> coeffs() const noexcept { return coeffs_; }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == 0.0; }
    double leading() const noexcept { return coeffs_.back(); }

    bool has_factors() const noexcept { return factored_; }
    /// Exact roots of the factored form; empty when has_factors() is false.
    std::span<const double> factor_roots() const noexcept { return roots_; }
    double factor_leading() const noexcept { return factor_leading_; }

    std::string to_string() const;

private:
    std::vector<double> coeffs_;
    bool factored_ = false;
    double factor_leading_ = 0.0;
    std::vector<double> roots_;
};

Complex s_poly_eval(const SPolynomial& b, Complex s);
SPolynomial s_poly_mul(const SPolynomial& a, const SPolynomial& b);

/// Roots of b. Factored polynomials return their construction roots
/// verbatim; otherwise the companion-matrix eigenvalues. Throws DomainError
/// on degree 0.
std::vector<Complex> s_poly_roots(const SPolynomial& b);

/// If b has a factored form and s coincides exactly with one of its roots,
/// returns that root.
std::optional<double> exact_root_hit(const SPolynomial& b, Complex s);

/// Formats a double with the shortest decimal string that round-trips.
std::string format_double(double x);

}  // namespace ggamma
