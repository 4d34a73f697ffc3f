// SPDX-License-Identifier: Apache-2.0
#include "bcross/specfun.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "bcross/errors.hpp"

namespace bcross {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = 1e-16;
constexpr double kTiny = 1e-300;
constexpr double kSmallArg = 2.0;
constexpr double kRescale = 1e250;
constexpr double kHankelArg = 30.0;
constexpr double kUpwardFraction = 0.8;

void require_order(double nu, const char* who) {
    if (!(nu >= 0.0) || !std::isfinite(nu)) {
        throw DomainError(std::string(who) + ": order must be finite and >= 0");
    }
}

void require_positive_arg(double x, const char* who) {
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw DomainError(std::string(who) + ": argument must be finite and > 0");
    }
}

// Taylor coefficients of 1/Gamma(1+z) about z = 0.
constexpr std::array<double, 29> kRecipGamma = {
    1.0,
    0.5772156649015328606065,
    -0.655878071520253881077,
    -0.042002635034095235529,
    0.1665386113822914895017,
    -0.04219773455554433674821,
    -0.009621971527876973562115,
    0.007218943246663099542395,
    -0.001165167591859065112114,
    -0.0002152416741149509728157,
    0.0001280502823881161861532,
    -0.00002013485478078823865569,
    -0.000001250493482142670657345,
    0.000001133027231981695882374,
    -2.05633841697760710345e-7,
    6.116095104481415817862e-9,
    5.002007644469222930056e-9,
    -1.181274570487020144588e-9,
    1.043426711691100510492e-10,
    7.78226343990507125405e-12,
    -3.696805618642205708188e-12,
    5.100370287454475979015e-13,
    -2.058326053566506783222e-14,
    -5.34812253942301798237e-15,
    1.226778628238260790159e-15,
    -1.181259301697458769514e-16,
    1.18669225475160033258e-18,
    1.412380655318031781556e-18,
    -2.298745684435370206592e-19,
};

struct TemmeGammas {
    double gam1;   // (1/G(1-mu) - 1/G(1+mu)) / (2 mu)
    double gam2;   // (1/G(1-mu) + 1/G(1+mu)) / 2
    double gampl;  // 1/G(1+mu)
    double gammi;  // 1/G(1-mu)
};

// |mu| <= 1/2. Odd/even parts of the 1/Gamma(1+z) series give gam1/gam2
// without the cancellation of the defining differences.
TemmeGammas temme_gammas(double mu) {
    double even = 0.0;
    double odd = 0.0;
    const double mu2 = mu * mu;
    for (int k = static_cast<int>(kRecipGamma.size()) - 1; k >= 0; --k) {
        if (k % 2 == 0) {
            even = even * mu2 + kRecipGamma[k];
        } else {
            odd = odd * mu2 + kRecipGamma[k];
        }
    }
    // 1/G(1+mu) = even + mu*odd, 1/G(1-mu) = even - mu*odd.
    return {-odd, even, even + mu * odd, even - mu * odd};
}

// Hankel expansion, valid for x >> nu^2. Terms are summed until they stop
// decreasing or fall below eps.
bool hankel_jy(double nu, double x, BesselJY& out) {
    const double m = 4.0 * nu * nu;
    const double x8 = 8.0 * x;
    double p = 1.0;
    double q = 0.0;
    double pp = 1.0;  // R and S, the companion series for J' and Y'
    double qp = 0.0;
    double term = 1.0;
    double last = std::numeric_limits<double>::infinity();
    bool converged = false;
    for (int k = 1; k < 200; ++k) {
        const double odd = 2.0 * k - 1.0;
        const double denom = k * x8;
        const double tp = term * (m + 4.0 * k * k - 1.0) / denom;
        term *= (m - odd * odd) / denom;
        const double mag = std::max(std::abs(term), std::abs(tp));
        if (mag > last) break;
        last = mag;
        const int sign = ((k / 2) % 2 == 0) ? 1 : -1;
        if (k % 2 == 1) {
            q += sign * term;
            qp += sign * tp;
        } else {
            p += sign * term;
            pp += sign * tp;
        }
        // term == 0 means the series terminated (half-integer order).
        if (mag < 0.1 * kEps || term == 0.0) {
            converged = true;
            break;
        }
    }
    if (!converged) return false;
    // chi = x - (nu/2 + 1/4) pi, evaluated without forming x - phase.
    const double phase = (0.5 * nu + 0.25) * kPi;
    const double cx = std::cos(x);
    const double sx = std::sin(x);
    const double cph = std::cos(phase);
    const double sph = std::sin(phase);
    const double cchi = cx * cph + sx * sph;
    const double schi = sx * cph - cx * sph;
    const double amp = std::sqrt(2.0 / (kPi * x));
    out.j = amp * (p * cchi - q * schi);
    out.y = amp * (p * schi + q * cchi);
    out.jp = -amp * (pp * schi + qp * cchi);
    out.yp = amp * (pp * cchi - qp * schi);
    return true;
}

// Hankel at the fractional order, then upward recurrence in both J and Y.
// Stable while the order stays below the turning point nu ~ x.
bool hankel_upward(double nu, double x, BesselJY& out) {
    const double whole = std::floor(nu);
    const double mu = nu - whole;
    BesselJY lo;
    BesselJY hi;
    if (!hankel_jy(mu, x, lo) || !hankel_jy(mu + 1.0, x, hi)) return false;
    const int steps = static_cast<int>(whole);
    if (steps == 0) {
        out = lo;
        return true;
    }
    double j0 = lo.j, j1 = hi.j;
    double y0 = lo.y, y1 = hi.y;
    for (int i = 1; i < steps; ++i) {
        const double f = 2.0 * (mu + i) / x;
        const double j2 = f * j1 - j0;
        const double y2 = f * y1 - y0;
        j0 = j1;
        j1 = j2;
        y0 = y1;
        y1 = y2;
    }
    // j1 = J_nu, j0 = J_{nu-1}
    out.j = j1;
    out.y = y1;
    out.jp = j0 - nu / x * j1;
    out.yp = y0 - nu / x * y1;
    return true;
}

}  // namespace

BesselJY bessel_jy(double nu, double x) {
    require_order(nu, "bessel_jy");
    require_positive_arg(x, "bessel_jy");

    if (x >= kHankelArg && x >= nu * nu) {
        BesselJY out;
        if (hankel_jy(nu, x, out)) return out;
    }
    if (x >= kHankelArg && nu <= kUpwardFraction * x) {
        BesselJY out;
        if (hankel_upward(nu, x, out)) return out;
    }

    const int nl = (x < kSmallArg) ? static_cast<int>(nu + 0.5)
                                   : std::max(0, static_cast<int>(nu - x + 1.5));
    const double mu = nu - nl;
    const double mu2 = mu * mu;
    const double xi = 1.0 / x;
    const double xi2 = 2.0 * xi;
    const double w = xi2 / kPi;  // Wronskian 2/(pi x)

    // CF1: J'_nu / J_nu by modified Lentz; isign tracks the sign of J_nu.
    const int max_cf1 = 20000 + static_cast<int>(4.0 * x);
    int isign = 1;
    double h = std::max(nu * xi, kTiny);
    {
        double b = xi2 * nu;
        double d = 0.0;
        double c = h;
        int i = 1;
        for (; i <= max_cf1; ++i) {
            b += xi2;
            d = b - d;
            if (std::abs(d) < kTiny) d = kTiny;
            c = b - 1.0 / c;
            if (std::abs(c) < kTiny) c = kTiny;
            d = 1.0 / d;
            const double del = c * d;
            h *= del;
            if (d < 0.0) isign = -isign;
            if (std::abs(del - 1.0) < kEps) break;
        }
        if (i > max_cf1) {
            throw ConvergenceError("bessel_jy: continued fraction for J'/J did not converge");
        }
    }

    // Downward recurrence from nu to mu with unnormalized values.
    double rjl = isign * 1.0;
    double rjpl = h * rjl;
    double rjl1 = rjl;
    double rjp1 = rjpl;
    double fact = nu * xi;
    for (int l = nl; l >= 1; --l) {
        const double rjtemp = fact * rjl + rjpl;
        fact -= xi;
        rjpl = fact * rjtemp - rjl;
        rjl = rjtemp;
        if (std::abs(rjl) > kRescale) {
            rjl /= kRescale;
            rjpl /= kRescale;
            rjl1 /= kRescale;
            rjp1 /= kRescale;
        }
    }
    if (rjl == 0.0) rjl = kEps;
    const double f = rjpl / rjl;

    double rjmu = 0.0;
    double rymu = 0.0;
    double ry1 = 0.0;
    if (x < kSmallArg) {
        // Temme's series for Y_mu, Y_{mu+1}.
        const double x2 = 0.5 * x;
        const double pimu = kPi * mu;
        const double fact1 = (std::abs(pimu) < kEps) ? 1.0 : pimu / std::sin(pimu);
        double d = -std::log(x2);
        double e = mu * d;
        const double fact2 = (std::abs(e) < kEps) ? 1.0 : std::sinh(e) / e;
        const TemmeGammas g = temme_gammas(mu);
        double ff = 2.0 / kPi * fact1 * (g.gam1 * std::cosh(e) + g.gam2 * fact2 * d);
        e = std::exp(e);
        double p = e / (g.gampl * kPi);
        double q = 1.0 / (e * kPi * g.gammi);
        const double pimu2 = 0.5 * pimu;
        const double fact3 = (std::abs(pimu2) < kEps) ? 1.0 : std::sin(pimu2) / pimu2;
        const double r = kPi * pimu2 * fact3 * fact3;
        double c = 1.0;
        d = -x2 * x2;
        double sum = ff + r * q;
        double sum1 = p;
        int i = 1;
        for (; i <= 10000; ++i) {
            ff = (i * ff + p + q) / (i * static_cast<double>(i) - mu2);
            c *= d / i;
            p /= (i - mu);
            q /= (i + mu);
            const double del = c * (ff + r * q);
            sum += del;
            const double del1 = c * p - i * del;
            sum1 += del1;
            if (std::abs(del) < (1.0 + std::abs(sum)) * kEps) break;
        }
        if (i > 10000) throw ConvergenceError("bessel_jy: Temme series did not converge");
        rymu = -sum;
        ry1 = -sum1 * xi2;
        const double rymup = mu * xi * rymu - ry1;
        rjmu = w / (rymup - f * rymu);
    } else {
        // CF2 (Steed): p + iq = (J' + iY') / (J + iY) at order mu.
        double a = 0.25 - mu2;
        double p = -0.5 * xi;
        double q = 1.0;
        const double br = 2.0 * x;
        double bi = 2.0;
        double fct = a * xi / (p * p + q * q);
        double cr = br + q * fct;
        double ci = bi + p * fct;
        double den = br * br + bi * bi;
        double dr = br / den;
        double di = -bi / den;
        double dlr = cr * dr - ci * di;
        double dli = cr * di + ci * dr;
        double temp = p * dlr - q * dli;
        q = p * dli + q * dlr;
        p = temp;
        int i = 2;
        for (; i <= 100000; ++i) {
            a += 2 * (i - 1);
            bi += 2.0;
            dr = a * dr + br;
            di = a * di + bi;
            if (std::abs(dr) + std::abs(di) < kTiny) dr = kTiny;
            fct = a / (cr * cr + ci * ci);
            cr = br + cr * fct;
            ci = bi - ci * fct;
            if (std::abs(cr) + std::abs(ci) < kTiny) cr = kTiny;
            den = dr * dr + di * di;
            dr /= den;
            di /= -den;
            dlr = cr * dr - ci * di;
            dli = cr * di + ci * dr;
            temp = p * dlr - q * dli;
            q = p * dli + q * dlr;
            p = temp;
            if (std::abs(dlr - 1.0) + std::abs(dli) < kEps) break;
        }
        if (i > 100000) throw ConvergenceError("bessel_jy: Steed continued fraction did not converge");
        const double gam = (p - f) / q;
        rjmu = std::sqrt(w / ((p - f) * gam + q));
        rjmu = std::copysign(rjmu, rjl);
        rymu = rjmu * gam;
        const double rymup = rymu * (p + q / gam);
        ry1 = mu * xi * rymu - rymup;
    }

    BesselJY out;
    const double scale = rjmu / rjl;
    out.j = rjl1 * scale;
    out.jp = rjp1 * scale;
    for (int i = 1; i <= nl; ++i) {
        const double rytemp = (mu + i) * xi2 * ry1 - rymu;
        rymu = ry1;
        ry1 = rytemp;
        if (!std::isfinite(ry1)) {
            out.y = -std::numeric_limits<double>::infinity();
            out.yp = std::numeric_limits<double>::infinity();
            return out;
        }
    }
    out.y = rymu;
    out.yp = nu * xi * rymu - ry1;
    return out;
}

double bessel_j(double nu, double x) {
    require_order(nu, "bessel_j");
    if (!(x >= 0.0) || !std::isfinite(x)) {
        throw DomainError("bessel_j: argument must be finite and >= 0");
    }
    if (x == 0.0) return nu == 0.0 ? 1.0 : 0.0;
    return bessel_jy(nu, x).j;
}

double bessel_y(double nu, double x) {
    return bessel_jy(nu, x).y;
}

double bessel_modulus_sq(double nu, double x) {
    const BesselJY v = bessel_jy(nu, x);
    return v.j * v.j + v.y * v.y;
}

double bessel_k0_scaled(double x) {
    require_positive_arg(x, "bessel_k0");
    if (x <= kSmallArg) {
        // K0 = -(ln(x/2) + gamma) I0 + sum_{k>=1} H_k (x^2/4)^k / (k!)^2
        const double q = 0.25 * x * x;
        double term = 1.0;
        double i0 = 1.0;
        double tail = 0.0;
        double harmonic = 0.0;
        for (int k = 1; k < 200; ++k) {
            term *= q / (static_cast<double>(k) * k);
            harmonic += 1.0 / k;
            i0 += term;
            tail += harmonic * term;
            if (term < kEps * i0) break;
        }
        const double k0 = -(std::log(0.5 * x) + std::numbers::egamma) * i0 + tail;
        return k0 * std::exp(x);
    }
    // Steed's CF2 for K_0 (order mu = 0).
    double b = 2.0 * (1.0 + x);
    double d = 1.0 / b;
    double h = d;
    double delh = d;
    double q1 = 0.0;
    double q2 = 1.0;
    const double a1 = 0.25;
    double q = a1;
    double c = a1;
    double a = -a1;
    double s = 1.0 + q * delh;
    int i = 2;
    for (; i <= 100000; ++i) {
        a -= 2 * (i - 1);
        c = -a * c / i;
        const double qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh = (b * d - 1.0) * delh;
        h += delh;
        const double dels = q * delh;
        s += dels;
        if (std::abs(dels / s) < kEps) break;
    }
    if (i > 100000) throw ConvergenceError("bessel_k0: continued fraction did not converge");
    return std::sqrt(kPi / (2.0 * x)) / s;
}

double bessel_k0(double x) {
    require_positive_arg(x, "bessel_k0");
    return bessel_k0_scaled(x) * std::exp(-x);
}

double watson_laplace(double a) {
    if (!(std::abs(a) < 1.0)) {
        throw DomainError("watson_laplace: requires |a| < 1");
    }
    return std::acos(a) / std::sqrt((1.0 - a) * (1.0 + a));
}

double k0_sinh_integral(double c, double rate, const QuadratureConfig& quad) {
    if (!(c > 0.0) || !std::isfinite(c)) {
        throw DomainError("k0_sinh_integral: scale must be finite and > 0");
    }
    if (!std::isfinite(rate)) {
        throw DomainError("k0_sinh_integral: rate must be finite");
    }
    const double two_c = 2.0 * c;
    // t = asinh(u / 2c), dt = du / sqrt(u^2 + 4c^2)
    auto integrand = [two_c, rate](double u) {
        if (u <= 0.0) u = std::numeric_limits<double>::min();
        const double t = std::asinh(u / two_c);
        const double expo = -u - rate * t;
        return bessel_k0_scaled(u) * std::exp(expo) / std::hypot(u, two_c);
    };
    return integrate_semi_infinite(integrand, quad).value;
}

double nicholson_check(double nu, double x, const QuadratureConfig& quad) {
    require_order(nu, "nicholson_check");
    require_positive_arg(x, "nicholson_check");
    if (!(x > nu)) {
        throw DomainError("nicholson_check: requires x > nu");
    }
    const double decaying = k0_sinh_integral(x, 2.0 * nu, quad);
    const double growing = k0_sinh_integral(x, -2.0 * nu, quad);
    const double integral = 4.0 / (kPi * kPi) * (decaying + growing);
    const double direct = bessel_modulus_sq(nu, x);
    return std::abs(integral - direct) / direct;
}

}  // namespace bcross
