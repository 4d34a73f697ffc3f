// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "bcross/errors.hpp"
#include "bcross/pleijel.hpp"
#include "bcross/specfun.hpp"

using namespace bcross;

namespace {

// Connected sign regions of u(r) cos(nu theta) on an n x n polar raster,
// periodic in theta. Cell centres avoid the nodal lines.
int flood_fill_domains(int nu, int k, double R, int n = 200) {
    const double a = zero(nu, R, k, 1e-13).value;
    const double ja = bessel_j(nu, a);
    const double ya = bessel_y(nu, a);
    std::vector<int> sign(static_cast<std::size_t>(n * n));
    for (int i = 0; i < n; ++i) {
        const double r = 1.0 + (R - 1.0) * (i + 0.5) / n;
        const double radial = bessel_j(nu, a * r) * ya - ja * bessel_y(nu, a * r);
        for (int j = 0; j < n; ++j) {
            const double theta = 2.0 * std::numbers::pi * (j + 0.5) / n;
            sign[static_cast<std::size_t>(i * n + j)] = radial * std::cos(nu * theta) > 0.0 ? 1 : -1;
        }
    }
    std::vector<int> label(sign.size(), 0);
    int regions = 0;
    std::vector<int> stack;
    for (int start = 0; start < n * n; ++start) {
        if (label[static_cast<std::size_t>(start)]) continue;
        ++regions;
        stack.push_back(start);
        label[static_cast<std::size_t>(start)] = regions;
        while (!stack.empty()) {
            const int c = stack.back();
            stack.pop_back();
            const int i = c / n;
            const int j = c % n;
            const int nbrs[4][2] = {{i - 1, j}, {i + 1, j}, {i, (j + 1) % n}, {i, (j + n - 1) % n}};
            for (const auto& nb : nbrs) {
                if (nb[0] < 0 || nb[0] >= n) continue;
                const auto d = static_cast<std::size_t>(nb[0] * n + nb[1]);
                if (label[d] || sign[d] != sign[static_cast<std::size_t>(c)]) continue;
                label[d] = regions;
                stack.push_back(static_cast<int>(d));
            }
        }
    }
    return regions;
}

}  // namespace

TEST_CASE("nodal_count") {
    CHECK(nodal_count(0, 1) == 1);
    CHECK(nodal_count(0, 7) == 7);
    CHECK(nodal_count(3, 2) == 12);
    CHECK(nodal_count(1, 1) == 2);
    CHECK_THROWS_AS(nodal_count(-1, 1), DomainError);
    for (const auto& [nu, n] : std::vector<std::pair<int, int>>{{0, 1}, {0, 3}, {1, 1}, {3, 2}, {2, 4}, {5, 1}}) {
        INFO("nu=" << nu << " n=" << n);
        CHECK(flood_fill_domains(nu, n, 2.0) == nodal_count(nu, n));
    }
    CHECK_THROWS_AS(nodal_count(0, 0), DomainError);
}

TEST_CASE("spectrum: first entry, indices and bounds") {
    const auto one = enumerate_spectrum(2.0, 1);
    REQUIRE(one.size() == 1);
    CHECK(one[0].nu == 0);
    CHECK(one[0].n == 1);
    CHECK(one[0].k == 1);
    CHECK(one[0].zero > 3.10);
    CHECK(one[0].zero < 3.15);

    const auto s = enumerate_spectrum(2.0, 50);
    REQUIRE(s.size() == 50);
    for (std::size_t i = 0; i < s.size(); ++i) {
        const auto& e = s[i];
        CHECK(e.k == static_cast<int>(i + 1));
        CHECK(e.eigenvalue == e.zero * e.zero);
        CHECK(e.multiplicity == (e.nu == 0 ? 1 : 2));
        CHECK(e.nodal_count == nodal_count(e.nu, e.n));
        CHECK(e.zero < cross_zero_upper_bound(e.nu, 2.0, e.n));
        if (i > 0) CHECK(e.eigenvalue >= s[i - 1].eigenvalue);
    }
    // Degenerate pairs sit on consecutive indices.
    for (std::size_t i = 0; i < s.size();) {
        if (s[i].nu == 0) {
            ++i;
            continue;
        }
        if (i + 1 < s.size()) {
            CHECK(s[i + 1].nu == s[i].nu);
            CHECK(s[i + 1].n == s[i].n);
        }
        i += 2;
    }
}

TEST_CASE("parallel and serial enumerations agree") {
    for (double R : {1.3, 2.0, 5.0}) {
        const auto p = enumerate_spectrum(R, 700);
        const auto q = enumerate_spectrum_serial(R, 700);
        REQUIRE(p.size() == q.size());
        for (std::size_t i = 0; i < p.size(); ++i) {
            CHECK(p[i].nu == q[i].nu);
            CHECK(p[i].n == q[i].n);
            CHECK(p[i].eigenvalue == q[i].eigenvalue);
        }
    }
}

TEST_CASE("spectrum completeness by recount") {
    const double R = 2.0;
    const auto s = enumerate_spectrum(R, 200);
    const double cutoff = s.back().zero + 1e-6;
    // Brute force: every order whose first zero can fall below the cutoff.
    std::vector<std::pair<int, int>> modes;
    const double a01 = zero(0.0, R, 1).value;
    for (int nu = 0; mccann_lower_bound(a01, nu, R) <= cutoff; ++nu) {
        for (const auto& z : zeros_up_to(nu, R, cutoff)) {
            for (int copy = 0; copy < (nu == 0 ? 1 : 2); ++copy) modes.emplace_back(nu, z.k);
        }
    }
    REQUIRE(modes.size() >= s.size());
    // The recount may include the partner of a pair straddling index 200.
    CHECK(modes.size() <= s.size() + 1);
    std::vector<int> seen(modes.size(), 0);
    for (const auto& e : s) {
        bool found = false;
        for (std::size_t j = 0; j < modes.size() && !found; ++j) {
            if (!seen[j] && modes[j] == std::make_pair(e.nu, e.n)) {
                seen[j] = 1;
                found = true;
            }
        }
        CHECK(found);
    }
}

TEST_CASE("Weyl law for the counting function") {
    const double R = 2.0;
    const auto s = enumerate_spectrum(R, 500);
    const double lambda = s.back().eigenvalue;
    const double ratio = 500.0 / lambda;
    CHECK(std::abs(ratio - (R * R - 1.0) / 4.0) <= 0.1 * (R * R - 1.0) / 4.0);
}

TEST_CASE("nodal ratios") {
    const auto first = nodal_ratio_series(2.0, 1, 1);
    REQUIRE(first.size() == 1);
    CHECK(first[0].first == 1);
    CHECK(first[0].second == 1.0);
    for (const auto& [k, r] : nodal_ratio_series(2.0, 1, 400)) {
        CHECK(r <= 1.0);
    }
    CHECK_THROWS_AS(nodal_ratio_series(2.0, 5, 4), DomainError);
}

TEST_CASE("Pleijel estimates follow the reference table") {
    const std::vector<std::pair<double, double>> table = {
        {1.05, 0.636367}, {1.1, 0.635656}, {1.5, 0.619308}, {2.0, 0.58654},
        {4.0, 0.492055},  {6.0, 0.474482}, {10.0, 0.465961},
    };
    double prev = 1.0;
    for (const auto& [R, expected] : table) {
        const PleijelEstimate e = pleijel_estimate(R);
        INFO("R=" << R);
        CHECK(std::abs(e.pleijel_value - expected) <= 5e-4);
        CHECK(e.is_lower_bound_only);
        CHECK(e.x_star > 0.0);
        CHECK(e.x_star < e.x_max);
        CHECK(e.pleijel_value == doctest::Approx(8.0 / (R * R - 1.0) * e.sup_value).epsilon(1e-15));
        CHECK(e.pleijel_value > kPleijelDisk);
        CHECK(e.pleijel_value < kPleijelRectangle);
        CHECK(e.pleijel_value < prev);
        prev = e.pleijel_value;
    }
    CHECK_THROWS_AS(pleijel_estimate(1.0), DomainError);
}

TEST_CASE("Pleijel search rejects a curve cut before its maximum") {
    CHECK_THROWS_AS(pleijel_from_curve(solve_ivp(2.0, 1.0)), ConvergenceError);
}
