// SPDX-License-Identifier: Apache-2.0
//
// bcross: command-line front end. Payload goes to stdout as CSV or JSON,
// diagnostics to stderr. Exit codes: 0 ok, 1 failed validation, 2 bad
// flags, 3 computation failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <variant>
#include <vector>

#ifdef BCROSS_HAVE_OPENMP
#include <omp.h>
#endif

#include "bcross/alpha.hpp"
#include "bcross/crosszeros.hpp"
#include "bcross/errors.hpp"
#include "bcross/pleijel.hpp"
#include "bcross/validation.hpp"

#ifndef BCROSS_VERSION
#define BCROSS_VERSION "0.0.0"
#endif

namespace {

using json = nlohmann::ordered_json;
using Cell = std::variant<double, long long, bool, std::string>;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCompute = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A table plus scalar results; rendered identically as CSV or JSON.
struct Output {
    std::string command;
    json parameters = json::object();
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    std::vector<std::pair<std::string, Cell>> results;
    json metadata = json::object();
};

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string csv_cell(const Cell& c) {
    struct V {
        std::string operator()(double v) const { return format_number(v); }
        std::string operator()(long long v) const { return std::to_string(v); }
        std::string operator()(bool v) const { return v ? "true" : "false"; }
        std::string operator()(const std::string& v) const {
            if (v.find_first_of(",\"\n") == std::string::npos) return v;
            std::string q = "\"";
            for (char ch : v) q += (ch == '"') ? std::string("\"\"") : std::string(1, ch);
            return q + "\"";
        }
    };
    return std::visit(V{}, c);
}

json json_cell(const Cell& c) {
    return std::visit([](const auto& v) { return json(v); }, c);
}

void emit_csv(const Output& out) {
    std::string line;
    for (std::size_t i = 0; i < out.columns.size(); ++i) {
        line += (i ? "," : "") + out.columns[i];
    }
    std::cout << line << '\n';
    for (const auto& row : out.rows) {
        line.clear();
        for (std::size_t i = 0; i < row.size(); ++i) line += (i ? "," : "") + csv_cell(row[i]);
        std::cout << line << '\n';
    }
    // Scalar results trail the table as comment lines.
    for (const auto& [key, value] : out.results) {
        std::cout << "# " << key << "," << csv_cell(value) << '\n';
    }
}

void emit_json(const Output& out) {
    json rows = json::array();
    for (const auto& row : out.rows) {
        json r = json::object();
        for (std::size_t i = 0; i < row.size(); ++i) r[out.columns[i]] = json_cell(row[i]);
        rows.push_back(std::move(r));
    }
    json meta = out.metadata;
    json results = json::object();
    for (const auto& [key, value] : out.results) results[key] = json_cell(value);
    meta["results"] = std::move(results);
    json doc = json::object();
    doc["command"] = out.command;
    doc["parameters"] = out.parameters;
    doc["rows"] = std::move(rows);
    doc["metadata"] = std::move(meta);
    std::cout << doc.dump(2) << '\n';
}

void require_R(double R) {
    if (!(R > 1.0) || !std::isfinite(R)) throw UsageError("--R must be a finite number > 1");
}

void require_positive(double v, const char* flag) {
    if (!(v > 0.0) || !std::isfinite(v)) throw UsageError(std::string(flag) + " must be positive");
}

int threads() {
#ifdef BCROSS_HAVE_OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

// ---- subcommands ---------------------------------------------------------

struct ZerosArgs {
    double nu = 0.0;
    double R = 0.0;
    int k_max = 10;
    double tol = bcross::kDefaultZeroTol;
};

Output run_zeros(const ZerosArgs& a) {
    require_R(a.R);
    if (!(a.nu >= 0.0) || !std::isfinite(a.nu)) throw UsageError("--nu must be >= 0");
    if (a.k_max < 1) throw UsageError("--k-max must be >= 1");
    require_positive(a.tol, "--tol");

    Output out;
    out.command = "zeros";
    out.parameters = {{"nu", a.nu}, {"R", a.R}, {"k_max", a.k_max}, {"tol", a.tol}};
    out.columns = {"k", "zero", "residual", "lower_margin", "upper_margin", "radial_margin"};
    for (int k = 1; k <= a.k_max; ++k) {
        const bcross::CrossZero z = bcross::zero(a.nu, a.R, k, a.tol);
        const bcross::BoundReport b = bcross::check_bounds(a.nu, a.R, k, a.tol);
        out.rows.push_back({static_cast<long long>(k), z.value, z.residual, b.lower_margin,
                            b.upper_margin, b.radial_margin});
    }
    out.metadata["tol"] = a.tol;
    return out;
}

struct AlphaArgs {
    double R = 0.0;
    double x_max = -1.0;
    double tol = bcross::kDefaultAlphaTol;
    std::string method = "ode";
    bool check = false;
};

Output run_alpha(const AlphaArgs& a) {
    require_R(a.R);
    require_positive(a.tol, "--tol");
    const double x_max = a.x_max < 0.0 ? bcross::default_alpha_x_max(a.R) : a.x_max;
    if (!std::isfinite(x_max)) throw UsageError("--x-max must be finite");

    Output out;
    out.command = "alpha";
    out.parameters = {{"R", a.R}, {"x_max", x_max}, {"tol", a.tol}, {"method", a.method},
                      {"check", a.check}};
    out.metadata["tol"] = a.tol;

    if (a.check) {
        const bcross::AlphaCurve curve = bcross::solve_ivp(a.R, x_max, a.tol);
        out.columns = {"x", "alpha_ode", "alpha_transcendental", "discrepancy"};
        double worst = 0.0;
        constexpr int kPoints = 20;
        for (int i = 0; i <= kPoints; ++i) {
            const double x = x_max * i / kPoints;
            const double ode = curve(x);
            const double tr = bcross::alpha_transcendental(a.R, x);
            worst = std::max(worst, std::abs(ode - tr));
            out.rows.push_back({x, ode, tr, std::abs(ode - tr)});
        }
        out.results = {{"x0", curve.x0()},
                       {"x0_closed_form", bcross::corner_x0(a.R)},
                       {"max_discrepancy", worst}};
        return out;
    }

    const bcross::AlphaCurve curve = (a.method == "ode")
                                         ? bcross::solve_ivp(a.R, x_max, a.tol)
                                         : bcross::alpha_curve_transcendental(a.R, x_max, 400, a.tol);
    out.columns = {"x", "alpha"};
    for (const auto& s : curve.samples()) out.rows.push_back({s.x, s.alpha});
    out.results = {{"x0", curve.x0()}};
    return out;
}

struct PleijelArgs {
    double R = 0.0;
    double tol = bcross::kDefaultPleijelTol;
};

Output run_pleijel(const PleijelArgs& a) {
    require_R(a.R);
    require_positive(a.tol, "--tol");
    const bcross::PleijelEstimate e = bcross::pleijel_estimate(a.R, a.tol);
    Output out;
    out.command = "pleijel";
    out.parameters = {{"R", a.R}, {"tol", a.tol}};
    out.columns = {"R", "x_star", "sup_value", "pleijel_value", "is_lower_bound_only"};
    out.rows.push_back({e.R, e.x_star, e.sup_value, e.pleijel_value, e.is_lower_bound_only});
    out.metadata["tol"] = a.tol;
    out.metadata["alpha_tol"] = bcross::kDefaultAlphaTol;
    out.metadata["alpha_x_max"] = e.x_max;
    return out;
}

struct NodalArgs {
    double R = 0.0;
    int k_from = 1;
    int k_to = 100;
    double tol = bcross::kDefaultZeroTol;
};

Output run_nodal(const NodalArgs& a) {
    require_R(a.R);
    if (a.k_from < 1 || a.k_to < a.k_from) throw UsageError("need 1 <= --k-from <= --k-to");
    require_positive(a.tol, "--tol");
    const auto spectrum = bcross::enumerate_spectrum(a.R, a.k_to, a.tol);
    Output out;
    out.command = "nodal";
    out.parameters = {{"R", a.R}, {"k_from", a.k_from}, {"k_to", a.k_to}, {"tol", a.tol}};
    out.columns = {"k", "nu", "n", "zero", "eigenvalue", "nodal_count", "ratio"};
    double worst = 0.0;
    for (int k = a.k_from; k <= a.k_to; ++k) {
        const auto& e = spectrum[static_cast<std::size_t>(k - 1)];
        const double ratio = static_cast<double>(e.nodal_count) / k;
        worst = std::max(worst, ratio);
        out.rows.push_back({static_cast<long long>(k), static_cast<long long>(e.nu),
                            static_cast<long long>(e.n), e.zero, e.eigenvalue,
                            static_cast<long long>(e.nodal_count), ratio});
    }
    out.results = {{"max_ratio", worst}};
    out.metadata["tol"] = a.tol;
    return out;
}

Output run_validate(const std::string& suite_name, bool& all_passed) {
    const auto suite = bcross::parse_suite(suite_name);
    if (!suite) throw UsageError("--suite must be identities, bounds, convergence or all");
    const auto checks = bcross::run_suite(*suite);
    Output out;
    out.command = "validate";
    out.parameters = {{"suite", suite_name}};
    out.columns = {"suite", "check", "measured", "limit", "margin", "passed"};
    all_passed = true;
    int failed = 0;
    for (const auto& c : checks) {
        out.rows.push_back({c.suite, c.name, c.measured, c.limit, c.margin, c.passed});
        if (!c.passed) {
            all_passed = false;
            ++failed;
            std::cerr << "FAILED: [" << c.suite << "] " << c.name << " measured " << format_number(c.measured)
                      << " limit " << format_number(c.limit) << '\n';
        }
    }
    out.results = {{"checks", static_cast<long long>(checks.size())},
                   {"failed", static_cast<long long>(failed)}};
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Zeros of Bessel cross-products, the alpha(x) limit curve and Pleijel bounds for annuli"};
    app.require_subcommand(1);
    app.set_version_flag("--version", BCROSS_VERSION);

    std::string format = "csv";
    auto add_format = [&format](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    };

    ZerosArgs zeros;
    auto* zeros_cmd = app.add_subcommand("zeros", "Zeros a_{nu,k}, residuals and bound margins");
    zeros_cmd->add_option("--nu", zeros.nu, "Order nu >= 0")->required();
    zeros_cmd->add_option("--R", zeros.R, "Outer radius R > 1")->required();
    zeros_cmd->add_option("--k-max", zeros.k_max, "Number of zeros")->capture_default_str();
    zeros_cmd->add_option("--tol", zeros.tol, "Absolute zero tolerance")->capture_default_str();
    add_format(zeros_cmd);

    AlphaArgs alpha;
    auto* alpha_cmd = app.add_subcommand("alpha", "The limit curve alpha(x)");
    alpha_cmd->add_option("--R", alpha.R, "Outer radius R > 1")->required();
    alpha_cmd->add_option("--x-max", alpha.x_max, "Right end (default max(4 x0, 20))");
    alpha_cmd->add_option("--tol", alpha.tol, "Solver tolerance")->capture_default_str();
    alpha_cmd->add_option("--method", alpha.method, "ode or transcendental")
        ->check(CLI::IsMember({"ode", "transcendental"}))
        ->capture_default_str();
    alpha_cmd->add_flag("--check", alpha.check, "Compare both solvers and report the discrepancy");
    add_format(alpha_cmd);

    PleijelArgs pleijel;
    auto* pleijel_cmd = app.add_subcommand("pleijel", "Lower bound for the Pleijel constant");
    pleijel_cmd->add_option("--R", pleijel.R, "Outer radius R > 1")->required();
    pleijel_cmd->add_option("--tol", pleijel.tol, "Relative tolerance of the sup search")
        ->capture_default_str();
    add_format(pleijel_cmd);

    NodalArgs nodal;
    auto* nodal_cmd = app.add_subcommand("nodal", "Spectrum slice with nodal counts and ratios");
    nodal_cmd->add_option("--R", nodal.R, "Outer radius R > 1")->required();
    nodal_cmd->add_option("--k-from", nodal.k_from, "First index")->capture_default_str();
    nodal_cmd->add_option("--k-to", nodal.k_to, "Last index")->capture_default_str();
    nodal_cmd->add_option("--tol", nodal.tol, "Absolute zero tolerance")->capture_default_str();
    add_format(nodal_cmd);

    std::string suite = "all";
    auto* validate_cmd = app.add_subcommand("validate", "Run invariant suites");
    validate_cmd->add_option("--suite", suite, "identities, bounds, convergence or all")
        ->capture_default_str();
    add_format(validate_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    const auto start = std::chrono::steady_clock::now();
    int code = kExitOk;
    Output out;
    try {
        if (*zeros_cmd) {
            out = run_zeros(zeros);
        } else if (*alpha_cmd) {
            out = run_alpha(alpha);
        } else if (*pleijel_cmd) {
            out = run_pleijel(pleijel);
        } else if (*nodal_cmd) {
            out = run_nodal(nodal);
        } else {
            bool passed = true;
            out = run_validate(suite, passed);
            if (!passed) code = kExitValidation;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const bcross::DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "computation failed: " << e.what() << '\n';
        return kExitCompute;
    }

    out.metadata["version"] = BCROSS_VERSION;
    out.metadata["threads"] = threads();
    out.metadata["runtime_seconds"] =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (format == "json") {
        emit_json(out);
    } else {
        emit_csv(out);
    }
    return code;
}
