#pragma once

#include "ggamma/quad.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ggamma {

enum class IdentityStatus { pass, fail, skipped_singular };

std::string_view status_name(IdentityStatus s) noexcept;

/// One grid point of one identity. param1/param2 are (k, extra) for the
/// monomial identities (extra = truncation length where one applies, else 0),
/// (b, c) for the quadratic ones and (k, q) for beta_relation, whose s
/// column holds p.
struct IdentityReport {
    std::string identity;
    double param1 = 0.0;
    double param2 = 0.0;
    Complex s{};
    Complex lhs{};
    Complex rhs{};
    double abs_residual = 0.0;
    double rel_residual = 0.0;
    IdentityStatus status = IdentityStatus::fail;
};

/// Evaluation grid. Empty fields fall back to the identity's defaults.
struct Grid {
    std::vector<Complex> s;
    std::vector<int> k;
    std::vector<std::pair<double, double>> bc;
    std::vector<double> q;
    long n = 0;

    /// Parses "s=START:STOP:STEP[;k=K1,K2,...][;bc=B1:C1,B2:C2,...]".
    /// Also accepted: s as a single value or comma list, "im=I1,I2,..."
    /// (every s is combined with each imaginary part), "q=Q1,..." for
    /// beta_relation and "n=N" for the truncated identities.
    /// Throws std::invalid_argument.
    static Grid parse(std::string_view spec);
};

enum class IdentityFamily { monomial, quadratic, beta };

/// relative: pass iff rel_residual <= tolerance.
/// bounded:  pass iff abs_residual <= tolerance * (reported error bound of
///           the truncated side); used where one side is a truncation.
enum class ToleranceMode { relative, bounded };

struct IdentityInfo {
    std::string name;
    IdentityFamily family;
    ToleranceMode mode;
    double tolerance;
    Grid default_grid;
    std::string description;
};

const std::vector<IdentityInfo>& registered_identities();

/// Quadrature settings used by the harness (tighter than the library default).
QuadratureConfig verify_quadrature();

/// Throws std::invalid_argument for an unknown name.
const IdentityInfo& identity_info(std::string_view name);

/// Evaluates both sides of the identity at every grid point. Points within
/// 1e-6 of a registered singularity, or outside the evaluators' domains,
/// come back as skipped_singular. Never throws on a false identity; an
/// evaluator failure (e.g. quadrature non-convergence) is reported as fail
/// with NaN sides. Reports are sorted by (param1, param2, s).
std::vector<IdentityReport> check_identity(std::string_view name, const Grid& grid,
                                           std::optional<double> tolerance = std::nullopt,
                                           const QuadratureConfig& cfg = verify_quadrature());

/// (1 - 2/(s+1)) Gamma_f(s+2) versus
/// B(s) Gamma_f(s) + 2(s-1)(2s+1) Gamma_f(s+1) + 2c^{s+1}/(s+1),
/// f = t^2 + b t + c with Gamma_f by quadrature.
std::pair<Complex, Complex> quadratic_printed_sides(double b, double c, Complex s,
                                                    const QuadratureConfig& cfg = verify_quadrature());

/// Same left side; the right side keeps the t = 0 boundary terms of both
/// integrations by parts:
/// B(s) Gamma_f(s) + 2(s-1)(2s+1) Gamma_f(s+1) - 2c^{s+1}/(s+1) + c^s (b(s-1) + c).
std::pair<Complex, Complex> quadratic_corrected_sides(double b, double c, Complex s,
                                                      const QuadratureConfig& cfg = verify_quadrature());

/// Printed minus corrected right side: 4c^{s+1}/(s+1) - c^s (b(s-1) + c).
Complex quadratic_gap(double b, double c, Complex s);

enum class ReportFormat { csv, json };

std::string emit_reports(std::vector<IdentityReport> reports, ReportFormat format);

}  // namespace ggamma
