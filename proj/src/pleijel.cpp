// SPDX-License-Identifier: Apache-2.0
#include "bcross/pleijel.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>
#include <string>
#include <tuple>

#include "bcross/errors.hpp"

namespace bcross {

namespace {

constexpr double kPi = std::numbers::pi;

void require_R(double R, const char* who) {
    if (!(R > 1.0) || !std::isfinite(R)) {
        throw DomainError(std::string(who) + ": R must be finite and > 1");
    }
}

// a_{0,1}: every a_{nu,n} is at least sqrt(a01^2 + nu^2/R^2).
double radial_first_zero(double R, double tol) {
    return zero(0.0, R, 1, tol).value;
}

void append_order(std::vector<SpectrumEntry>& out, int nu, const std::vector<CrossZero>& zs) {
    for (const CrossZero& z : zs) {
        SpectrumEntry e;
        e.nu = nu;
        e.n = z.k;
        e.zero = z.value;
        e.eigenvalue = z.value * z.value;
        e.multiplicity = (nu == 0) ? 1 : 2;
        e.nodal_count = nodal_count(nu, z.k);
        out.push_back(e);
    }
}

int total_multiplicity(const std::vector<SpectrumEntry>& entries) {
    int m = 0;
    for (const auto& e : entries) m += e.multiplicity;
    return m;
}

std::vector<SpectrumEntry> assign_indices(std::vector<SpectrumEntry> entries, int count) {
    std::sort(entries.begin(), entries.end(), [](const SpectrumEntry& a, const SpectrumEntry& b) {
        return std::tie(a.eigenvalue, a.nu, a.n) < std::tie(b.eigenvalue, b.nu, b.n);
    });
    std::vector<SpectrumEntry> rows;
    rows.reserve(static_cast<std::size_t>(count));
    int k = 1;
    for (const auto& e : entries) {
        for (int copy = 0; copy < e.multiplicity && k <= count; ++copy, ++k) {
            SpectrumEntry r = e;
            r.k = k;
            rows.push_back(r);
        }
        if (k > count) break;
    }
    return rows;
}

void require_count(int count, const char* who) {
    if (count < 1) throw DomainError(std::string(who) + ": count must be >= 1");
}

double initial_cutoff(double R, int count) {
    // Margin over the Weyl estimate; the loop grows it if still short.
    return std::sqrt(weyl_eigenvalue_estimate(R, 1.05 * count + 10.0));
}

int max_order_below(double R, double a01, double cutoff) {
    if (cutoff <= a01) return -1;
    return static_cast<int>(std::floor(R * std::sqrt(cutoff * cutoff - a01 * a01)));
}

}  // namespace

int nodal_count(int nu, int n) {
    if (nu < 0 || n < 1) throw DomainError("nodal_count: requires nu >= 0 and n >= 1");
    return nu == 0 ? n : 2 * nu * n;
}

double weyl_eigenvalue_estimate(double R, double count) {
    require_R(R, "weyl_eigenvalue_estimate");
    // N(l) ~ area l/(4 pi) - perimeter sqrt(l)/(4 pi) with area pi(R^2-1),
    // perimeter 2 pi (1+R); solve the quadratic in sqrt(l).
    const double a = (R * R - 1.0) / 4.0;
    const double b = (1.0 + R) / 2.0;
    const double s = (b + std::sqrt(b * b + 4.0 * a * count)) / (2.0 * a);
    return s * s;
}

std::vector<SpectrumEntry> enumerate_spectrum(double R, int count, double tol) {
    require_R(R, "enumerate_spectrum");
    require_count(count, "enumerate_spectrum");
    const double a01 = radial_first_zero(R, tol);
    double cutoff = initial_cutoff(R, count);

    for (;;) {
        const int nu_max = max_order_below(R, a01, cutoff);
        std::vector<std::vector<CrossZero>> per_order(static_cast<std::size_t>(nu_max + 1));
        std::exception_ptr failure;

#pragma omp parallel for schedule(dynamic, 1)
        for (int nu = 0; nu <= nu_max; ++nu) {
            try {
                per_order[static_cast<std::size_t>(nu)] = zeros_up_to(nu, R, cutoff, tol, a01);
            } catch (...) {
#pragma omp critical(bcross_spectrum_failure)
                if (!failure) failure = std::current_exception();
            }
        }
        if (failure) std::rethrow_exception(failure);

        std::vector<SpectrumEntry> entries;
        for (int nu = 0; nu <= nu_max; ++nu) {
            append_order(entries, nu, per_order[static_cast<std::size_t>(nu)]);
        }
        if (total_multiplicity(entries) >= count) return assign_indices(std::move(entries), count);
        cutoff *= 1.1;
    }
}

std::vector<SpectrumEntry> enumerate_spectrum_serial(double R, int count, double tol) {
    require_R(R, "enumerate_spectrum_serial");
    require_count(count, "enumerate_spectrum_serial");
    const double a01 = radial_first_zero(R, tol);
    double cutoff = initial_cutoff(R, count);
    for (;;) {
        std::vector<SpectrumEntry> entries;
        for (int nu = 0; mccann_lower_bound(a01, nu, R) <= cutoff; ++nu) {
            append_order(entries, nu, zeros_up_to(nu, R, cutoff, tol, a01));
        }
        if (total_multiplicity(entries) >= count) return assign_indices(std::move(entries), count);
        cutoff *= 1.1;
    }
}

std::vector<std::pair<int, double>> nodal_ratio_series(double R, int k_from, int k_to, double tol) {
    if (k_from < 1 || k_to < k_from) {
        throw DomainError("nodal_ratio_series: requires 1 <= k_from <= k_to");
    }
    const auto spectrum = enumerate_spectrum(R, k_to, tol);
    std::vector<std::pair<int, double>> out;
    out.reserve(static_cast<std::size_t>(k_to - k_from + 1));
    for (int k = k_from; k <= k_to; ++k) {
        const auto& e = spectrum[static_cast<std::size_t>(k - 1)];
        out.emplace_back(k, static_cast<double>(e.nodal_count) / k);
    }
    return out;
}

PleijelEstimate pleijel_from_curve(const AlphaCurve& curve, double tol) {
    if (!(tol > 0.0)) throw DomainError("pleijel: tol must be positive");
    const double R = curve.R();
    const double x_lo = 1e-3 * corner_x0(R);
    const double x_hi = curve.x_max();
    if (!(x_hi > x_lo)) throw DomainError("pleijel: alpha curve too short");

    auto g = [&curve](double x) {
        const double a = curve(x);
        return x / (a * a);
    };

    constexpr int kGrid = 200;
    std::vector<double> xs(kGrid);
    const double ratio = std::pow(x_hi / x_lo, 1.0 / (kGrid - 1));
    for (int i = 0; i < kGrid; ++i) xs[static_cast<std::size_t>(i)] = x_lo * std::pow(ratio, i);
    xs.back() = x_hi;

    std::size_t best = 0;
    double best_val = g(xs[0]);
    for (std::size_t i = 1; i < xs.size(); ++i) {
        const double v = g(xs[i]);
        if (v > best_val) {
            best_val = v;
            best = i;
        }
    }
    if (best + 1 == xs.size()) {
        throw ConvergenceError("pleijel: maximum of x/alpha^2 at the end of the alpha range");
    }
    if (best == 0) {
        throw InvariantError("pleijel: maximum of x/alpha^2 at the left end of the search grid");
    }

    // Golden-section search for the maximum on [x_{i-1}, x_{i+1}].
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = xs[best - 1];
    double b = xs[best + 1];
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double gc = g(c);
    double gd = g(d);
    while (b - a > tol * std::max(1.0, 0.5 * (a + b))) {
        if (gc > gd) {
            b = d;
            d = c;
            gd = gc;
            c = b - inv_phi * (b - a);
            gc = g(c);
        } else {
            a = c;
            c = d;
            gc = gd;
            d = a + inv_phi * (b - a);
            gd = g(d);
        }
    }
    PleijelEstimate est;
    est.R = R;
    est.x_star = 0.5 * (a + b);
    est.sup_value = std::max(g(est.x_star), best_val);
    if (est.sup_value == best_val) est.x_star = xs[best];
    est.pleijel_value = 8.0 / (R * R - 1.0) * est.sup_value;
    est.is_lower_bound_only = true;
    est.x_max = x_hi;
    return est;
}

PleijelEstimate pleijel_estimate(double R, double tol) {
    require_R(R, "pleijel_estimate");
    double x_max = default_alpha_x_max(R);
    for (int attempt = 0; attempt <= 3; ++attempt, x_max *= 2.0) {
        try {
            return pleijel_from_curve(solve_ivp(R, x_max), tol);
        } catch (const ConvergenceError&) {
            if (attempt == 3) throw;
        }
    }
    throw ConvergenceError("pleijel: unreachable");
}

}  // namespace bcross
