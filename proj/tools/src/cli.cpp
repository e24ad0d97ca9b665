#include "ggamma_cli/cli.hpp"

#include "ggamma/bsato.hpp"
#include "ggamma/error.hpp"
#include "ggamma/gammaf.hpp"
#include "ggamma/verify.hpp"
#include "ggamma/zetabeta.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <optional>
#include <ostream>
#include <stdexcept>

namespace ggamma::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

double parse_real(std::string_view tok, std::string_view flag) {
    double v = 0.0;
    const auto* last = tok.data() + tok.size();
    const auto res = std::from_chars(tok.data(), last, v);
    if (tok.empty() || res.ec != std::errc{} || res.ptr != last)
        throw UsageError("malformed number '" + std::string(tok) + "' for " + std::string(flag));
    return v;
}

// RE[,IM]
Complex parse_complex(const std::string& text, std::string_view flag) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) return {parse_real(text, flag), 0.0};
    std::string_view sv(text);
    return {parse_real(sv.substr(0, comma), flag), parse_real(sv.substr(comma + 1), flag)};
}

long parse_count(std::string_view tok, std::string_view flag) {
    long v = 0;
    const auto* last = tok.data() + tok.size();
    const auto res = std::from_chars(tok.data(), last, v);
    if (tok.empty() || res.ec != std::errc{} || res.ptr != last || v < 1)
        throw UsageError("expected a positive integer in " + std::string(flag));
    return v;
}

RealPolynomial parse_coeffs(const std::string& text) {
    try {
        return RealPolynomial::parse(text);
    } catch (const DomainError& e) {
        throw UsageError(std::string("--coeffs: ") + e.what());
    }
}

std::string join(std::span<const double> xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ',';
        out += format_double(xs[i] == 0.0 ? 0.0 : xs[i]);
    }
    return out;
}

std::string root_str(Complex z) {
    const double re = z.real() == 0.0 ? 0.0 : z.real();
    if (z.imag() == 0.0) return format_double(re);
    return format_double(re) + (z.imag() < 0 ? "-" : "+") + format_double(std::abs(z.imag())) + "i";
}

void print_eval(std::ostream& out, const ComplexEval& r) {
    nlohmann::ordered_json j;
    j["value"] = {{"re", r.value.real()}, {"im", r.value.imag()}};
    j["abs_error_estimate"] = r.abs_err;
    j["method"] = std::string(method_name(r.method));
    j["warnings"] = r.warnings;
    out << j.dump() << '\n';
}

ComplexEval eval_monomial_gamma(int k, Complex s, const std::string& method) {
    if (method == "closed") return gamma_tk_closed(k, s);
    if (method == "quad") return gamma_f_quadrature(GammaDomain::make(RealPolynomial::monomial(k)), s);
    if (method == "continued") return gamma_tk_continued(k, s);
    if (method == "asymptotic") return asymptotic_approx(k, s);
    const auto colon = method.find(':');
    if (colon != std::string::npos) {
        const std::string head = method.substr(0, colon);
        const long n = parse_count(std::string_view(method).substr(colon + 1), "--method");
        if (head == "limit") return gauss_limit_product(k, s, n);
        if (head == "product") {
            ComplexEval r = weierstrass_reciprocal(k, s, n);
            if (r.value == 0.0) throw PoleError("Gamma_{t^k} has a pole at s = " + format_double(s.real()));
            const double mag = std::abs(r.value);
            r.abs_err = r.abs_err / (mag * mag);
            r.value = 1.0 / r.value;
            return r;
        }
    }
    throw UsageError("unknown --method '" + method + "'");
}

struct Options {
    std::optional<int> monomial;
    std::string coeffs;
    std::string s, p, q;
    std::string method;
    std::optional<long> terms;
    double kp = 0.0;
    std::string kmethod = "quad";
    std::string quadratic;
    std::string identity, grid, format = "csv";
    std::optional<double> tol;
};

void add_poly_flags(CLI::App* cmd, Options& o) {
    auto* m = cmd->add_option("--monomial", o.monomial, "f = t^K")->check(CLI::Range(1, kMaxMonomialDegree));
    auto* c = cmd->add_option("--coeffs", o.coeffs, "ascending coefficients C0,C1,...");
    m->excludes(c);
    c->excludes(m);
    cmd->callback([m, c] {
        if (m->count() + c->count() != 1) throw CLI::ValidationError("exactly one of --monomial, --coeffs is required");
    });
}

int dispatch(CLI::App& app, CLI::App* eval, CLI::App* gamma_cmd, CLI::App* kgamma_cmd, CLI::App* zeta_cmd,
             CLI::App* beta_cmd, CLI::App* bsato_cmd, CLI::App* verify_cmd, const Options& o, std::ostream& out) {
    if (eval->parsed()) {
        if (gamma_cmd->parsed()) {
            const Complex s = parse_complex(o.s, "--s");
            if (o.monomial) {
                print_eval(out, eval_monomial_gamma(*o.monomial, s, o.method.empty() ? "closed" : o.method));
            } else {
                if (!o.method.empty() && o.method != "quad")
                    throw UsageError("--coeffs supports only --method quad");
                print_eval(out, gamma_f_quadrature(GammaDomain::make(parse_coeffs(o.coeffs)), s));
            }
        } else if (kgamma_cmd->parsed()) {
            const Complex s = parse_complex(o.s, "--s");
            if (o.kmethod == "quad") print_eval(out, k_gamma(o.kp, s));
            else if (o.kmethod == "closed") print_eval(out, k_gamma_closed(o.kp, s));
            else throw UsageError("unknown --method '" + o.kmethod + "'");
        } else if (zeta_cmd->parsed()) {
            const Complex s = parse_complex(o.s, "--s");
            if (o.monomial && !o.terms) {
                print_eval(out, zeta_tk(*o.monomial, s));
            } else {
                if (!o.terms) throw UsageError("--coeffs requires --terms N");
                const RealPolynomial f = o.monomial ? RealPolynomial::monomial(*o.monomial) : parse_coeffs(o.coeffs);
                print_eval(out, zeta_f_series(GammaDomain::make(f), s, *o.terms));
            }
        } else if (beta_cmd->parsed()) {
            const Complex p = parse_complex(o.p, "--p");
            const Complex q = parse_complex(o.q, "--q");
            const RealPolynomial f = o.monomial ? RealPolynomial::monomial(*o.monomial) : parse_coeffs(o.coeffs);
            print_eval(out, beta_f(GammaDomain::make(f), p, q));
        }
        return ok;
    }
    if (bsato_cmd->parsed()) {
        BsatoResult r;
        if (o.monomial) {
            r = bsato_monomial(*o.monomial);
        } else {
            const auto comma = o.quadratic.find(',');
            if (comma == std::string::npos) throw UsageError("--quadratic expects B,C");
            std::string_view sv(o.quadratic);
            r = bsato_quadratic(parse_real(sv.substr(0, comma), "--quadratic"),
                                parse_real(sv.substr(comma + 1), "--quadratic"));
        }
        std::string roots;
        if (!r.degenerate) {
            for (Complex z : s_poly_roots(r.big_b)) roots += (roots.empty() ? "" : ",") + root_str(z);
        }
        out << "coefficients: " << join(r.big_b.coeffs()) << '\n';
        out << "monic: " << join(r.monic_b.coeffs()) << '\n';
        out << "roots: " << roots << '\n';
        out << "operator: " << r.op.describe() << '\n';
        out << "degenerate: " << (r.degenerate ? "true" : "false") << '\n';
        return ok;
    }
    if (verify_cmd->parsed()) {
        ReportFormat fmt = o.format == "json" ? ReportFormat::json : ReportFormat::csv;
        Grid grid;
        try {
            identity_info(o.identity);
            if (!o.grid.empty()) grid = Grid::parse(o.grid);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        out << emit_reports(check_identity(o.identity, grid, o.tol), fmt);
        return ok;
    }
    (void)app;
    return ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Generalized gamma functions Gamma_f(s), their functional equations and identity checks", "ggamma"};
    app.require_subcommand(1);
    Options o;

    auto* eval = app.add_subcommand("eval", "evaluate a function")->require_subcommand(1);

    auto* gamma_cmd = eval->add_subcommand("gamma", "Gamma_f(s)");
    add_poly_flags(gamma_cmd, o);
    gamma_cmd->add_option("--s", o.s, "RE[,IM]")->required();
    gamma_cmd->add_option("--method", o.method, "closed|quad|continued|limit:N|product:N|asymptotic");

    auto* kgamma_cmd = eval->add_subcommand("kgamma", "k-gamma function Gamma_k(s)");
    kgamma_cmd->add_option("--k", o.kp, "KP > 0")->required();
    kgamma_cmd->add_option("--s", o.s, "RE[,IM]")->required();
    kgamma_cmd->add_option("--method", o.kmethod, "quad|closed");

    auto* zeta_cmd = eval->add_subcommand("zeta", "zeta_f(s)");
    add_poly_flags(zeta_cmd, o);
    zeta_cmd->add_option("--s", o.s, "RE[,IM]")->required();
    zeta_cmd->add_option("--terms", o.terms, "series terms N")->check(CLI::PositiveNumber);

    auto* beta_cmd = eval->add_subcommand("beta", "B_f(p, q)");
    add_poly_flags(beta_cmd, o);
    beta_cmd->add_option("--p", o.p, "RE[,IM]")->required();
    beta_cmd->add_option("--q", o.q, "RE[,IM]")->required();

    auto* bsato_cmd = app.add_subcommand("bsato", "B(s) and the operator of the functional equation");
    auto* bm = bsato_cmd->add_option("--monomial", o.monomial, "f = t^K")->check(CLI::Range(1, kMaxMonomialDegree));
    auto* bq = bsato_cmd->add_option("--quadratic", o.quadratic, "f = t^2 + B t + C, given as B,C");
    bm->excludes(bq);
    bq->excludes(bm);
    bsato_cmd->callback([bm, bq] {
        if (bm->count() + bq->count() != 1)
            throw CLI::ValidationError("exactly one of --monomial, --quadratic is required");
    });

    auto* verify_cmd = app.add_subcommand("verify", "evaluate an identity over a grid");
    verify_cmd->add_option("--identity", o.identity, "identity name")->required();
    verify_cmd->add_option("--grid", o.grid, "s=START:STOP:STEP[;k=K1,...][;bc=B1:C1,...]");
    verify_cmd->add_option("--format", o.format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
    verify_cmd->add_option("--tol", o.tol, "tolerance override");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return usage;
    }

    try {
        return dispatch(app, eval, gamma_cmd, kgamma_cmd, zeta_cmd, beta_cmd, bsato_cmd, verify_cmd, o, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return usage;
    } catch (const ConvergenceError& e) {
        err << "error: " << e.what() << '\n';
        return convergence;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return domain;
    }
}

}  // namespace ggamma::cli
