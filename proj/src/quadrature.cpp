// SPDX-License-Identifier: Apache-2.0
#include "bcross/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <string>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "bcross/errors.hpp"

namespace bcross {

void QuadratureConfig::validate() const {
    if (!(rel_tol > 0.0) || !std::isfinite(rel_tol)) {
        throw DomainError("QuadratureConfig: rel_tol must be positive");
    }
    if (max_nodes < 16) {
        throw DomainError("QuadratureConfig: max_nodes must be at least 16");
    }
    if (!(truncation_u > 0.0) || !std::isfinite(truncation_u)) {
        throw DomainError("QuadratureConfig: truncation_u must be positive");
    }
    const double tail = std::sqrt(std::numbers::pi / (2.0 * truncation_u)) * std::exp(-truncation_u);
    if (!(tail < rel_tol)) {
        throw DomainError("QuadratureConfig: K0 tail at truncation_u exceeds rel_tol");
    }
}

namespace {

using Rule = boost::math::quadrature::gauss_kronrod<double, 21>;

struct Panel {
    double a;
    double b;
    double value;
    double error;
    bool operator<(const Panel& o) const { return error < o.error; }
};

class AdaptiveIntegrator {
public:
    AdaptiveIntegrator(const std::function<double(double)>& f, const QuadratureConfig& cfg,
                       double abs_floor)
        : f_(f), cfg_(cfg), abs_floor_(abs_floor) {}

    void add(double a, double b) {
        push(evaluate(a, b));
    }

    // Bisects the worst panel until the global error estimate is small enough.
    void refine() {
        while (!converged()) {
            if (static_cast<int>(heap_.size()) >= cfg_.max_nodes) {
                throw ConvergenceError("quadrature: panel budget of " + std::to_string(cfg_.max_nodes) +
                                       " exhausted (value " + std::to_string(value_) + ", error " +
                                       std::to_string(error_) + ")");
            }
            Panel worst = heap_.top();
            heap_.pop();
            value_ -= worst.value;
            error_ -= worst.error;
            const double mid = 0.5 * (worst.a + worst.b);
            if (!(mid > worst.a && mid < worst.b)) {
                // Interval collapsed to adjacent doubles; keep it as is.
                throw ConvergenceError("quadrature: interval width reached machine resolution");
            }
            push(evaluate(worst.a, mid));
            push(evaluate(mid, worst.b));
            recompute_if_drifted();
        }
    }

    QuadratureResult result() const {
        return {value_, error_, static_cast<int>(heap_.size())};
    }

private:
    Panel evaluate(double a, double b) const {
        double err = 0.0;
        const double v = Rule::integrate(f_, a, b, 0, 0.0, &err);
        // Boost 1.74 reports the error of the rule mapped to [-1, 1] without
        // the Jacobian; restore absolute units.
        err *= (b - a);
        if (!std::isfinite(v)) {
            throw ConvergenceError("quadrature: non-finite integrand on [" + std::to_string(a) + ", " +
                                   std::to_string(b) + "]");
        }
        // Guard against a lucky cancellation reporting zero error.
        err = std::max(err, 4.0 * std::numeric_limits<double>::epsilon() * std::abs(v));
        return {a, b, v, err};
    }

    void push(const Panel& p) {
        value_ += p.value;
        error_ += p.error;
        heap_.push(p);
    }

    bool converged() const {
        return error_ <= std::max(abs_floor_, cfg_.rel_tol * std::abs(value_));
    }

    // Running sums lose accuracy after many add/subtract cycles.
    void recompute_if_drifted() {
        if (++updates_ % 256 != 0) return;
        auto copy = heap_;
        value_ = 0.0;
        error_ = 0.0;
        while (!copy.empty()) {
            value_ += copy.top().value;
            error_ += copy.top().error;
            copy.pop();
        }
    }

    const std::function<double(double)>& f_;
    const QuadratureConfig& cfg_;
    double abs_floor_;
    std::priority_queue<Panel> heap_;
    double value_ = 0.0;
    double error_ = 0.0;
    long updates_ = 0;
};

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureConfig& cfg, double abs_floor) {
    cfg.validate();
    if (!(b > a)) {
        if (a == b) return {};
        throw DomainError("integrate: expected a < b");
    }
    AdaptiveIntegrator integrator(f, cfg, abs_floor);
    integrator.add(a, b);
    integrator.refine();
    return integrator.result();
}

QuadratureResult integrate_semi_infinite(const std::function<double(double)>& f,
                                         const QuadratureConfig& cfg) {
    cfg.validate();
    AdaptiveIntegrator integrator(f, cfg, 0.0);

    // Geometric panels so the adaptive driver starts with sensible resolution
    // near the origin, where K0 has its logarithmic singularity.
    double lo = 0.0;
    double hi = std::min(1.0, cfg.truncation_u);
    while (lo < cfg.truncation_u) {
        integrator.add(lo, hi);
        lo = hi;
        hi = std::min(2.0 * hi, cfg.truncation_u);
    }
    integrator.refine();

    constexpr int kMaxExtensions = 16;
    double upper = cfg.truncation_u;
    for (int ext = 0; ext <= kMaxExtensions; ++ext) {
        const double total = std::abs(integrator.result().value);
        const double fu = std::abs(f(upper));
        if (fu == 0.0) return integrator.result();
        const double h = 0.01 * upper;
        const double fl = std::abs(f(upper - h));
        const double rate = (fl > 0.0) ? std::log(fl / fu) / h : 0.0;
        if (rate > 0.0 && fu / rate < 0.1 * cfg.rel_tol * total) {
            return integrator.result();
        }
        if (ext == kMaxExtensions) break;
        integrator.add(upper, 2.0 * upper);
        upper *= 2.0;
        integrator.refine();
    }
    throw ConvergenceError("quadrature: integrand has not decayed at u = " + std::to_string(upper));
}

}  // namespace bcross
