#pragma once

#include <cmath>
#include <concepts>
#include <span>
#include <string>
#include <vector>

#include "wirtinger/errors.hpp"

namespace wirtinger {

/// Tolerances for the double-exponential rule. Each level halves the step
/// in the transformed variable, doubling the node count.
struct QuadConfig {
    double abs_tol = 1e-11;
    double rel_tol = 1e-10;
    int max_level = 12;
    int min_level = 4;

    void validate() const;
    /// Same policy with both tolerances scaled by `factor`.
    QuadConfig scaled(double factor) const;
};

struct QuadResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int levels_used = 0;
    bool converged = false;
};

/// Abscissae closer than this to an endpoint are never evaluated.
inline constexpr double kMinEndpointDistance = 1e-300;

/// Integrands are called either as f(x) or, when they accept three
/// arguments, as f(x, x - a, b - x) with both distances computed without
/// cancellation. The second form lets callers evaluate expressions that
/// vanish at an endpoint to full relative precision.
template <class F>
concept EndpointAwareIntegrand = requires(F f, double x) {
    { f(x, x, x) } -> std::convertible_to<double>;
};

template <class F>
concept PlainIntegrand = requires(F f, double x) {
    { f(x) } -> std::convertible_to<double>;
};

namespace detail {

struct TanhSinhNode {
    double complement;  // 1 - |x| on the reference interval [-1, 1]
    double weight;      // dx/dt at the node
};

/// Nodes with t >= 0 first introduced at `level`. Level 0 holds t = 0, 1, 2, ...
/// and level L > 0 the odd multiples of 2^-L.
std::span<const TanhSinhNode> tanh_sinh_level(int level);

void require_interval(double a, double b);

}  // namespace detail

/// Tanh-sinh quadrature of f over [a, b]. Tolerates integrable power
/// singularities at either endpoint; f is never evaluated at a or b. The
/// error estimate is the difference between the last two levels.
template <class F>
    requires EndpointAwareIntegrand<F> || PlainIntegrand<F>
QuadResult integrate(F&& f, double a, double b, const QuadConfig& cfg = {}) {
    detail::require_interval(a, b);
    cfg.validate();

    const double half = 0.5 * (b - a);
    const double width = b - a;
    auto call = [&](double x, double from_a, double to_b) -> double {
        if constexpr (EndpointAwareIntegrand<F>) {
            return f(x, from_a, to_b);
        } else {
            // Without distances a node that rounds onto an endpoint is dropped.
            if (x == a || x == b) return 0.0;
            return f(x);
        }
    };

    QuadResult result;
    double sum = 0.0;
    double previous = 0.0;
    for (int level = 0; level <= cfg.max_level; ++level) {
        for (const auto& node : detail::tanh_sinh_level(level)) {
            const double d = half * node.complement;
            if (node.complement == 1.0) {
                sum += node.weight * call(a + half, half, half);
                continue;
            }
            if (d < kMinEndpointDistance) continue;
            const double other = width - d;
            sum += node.weight * (call(a + d, d, other) + call(b - d, other, d));
        }
        const double step = std::ldexp(1.0, -level);
        const double estimate = half * step * sum;
        result.value = estimate;
        result.levels_used = level;
        if (level > 0) {
            result.error_estimate = std::abs(estimate - previous);
            if (level >= cfg.min_level &&
                result.error_estimate <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(estimate))) {
                result.converged = true;
                return result;
            }
        }
        previous = estimate;
    }
    return result;
}

/// Running integral of f over a mesh graded quadratically toward both
/// endpoints. x[0] = a, x[n] = b, integral[k] = int_a^{x[k]} f.
struct CumulativeTable {
    std::vector<double> x;
    std::vector<double> integral;
    double error_estimate = 0.0;
};

/// Graded abscissae on [a, b] with n panels: spacing shrinks like the square
/// of the panel index near each endpoint.
std::vector<double> graded_mesh(double a, double b, int n);

/// Panels are integrated independently; panel integrands receive distances
/// to the outer endpoints a and b, not to the panel's own ends.
template <class F>
    requires EndpointAwareIntegrand<F> || PlainIntegrand<F>
CumulativeTable cumulative_table(F&& f, double a, double b, int n, const QuadConfig& cfg = {}) {
    detail::require_interval(a, b);
    if (n < 8) throw DomainError("cumulative_table: need at least 8 panels");

    CumulativeTable table;
    table.x = graded_mesh(a, b, n);
    table.integral.assign(table.x.size(), 0.0);
    for (int k = 0; k < n; ++k) {
        const double lo = table.x[k];
        const double hi = table.x[k + 1];
        const double lo_from_a = (k == 0) ? 0.0 : lo - a;
        const double hi_to_b = (k == n - 1) ? 0.0 : b - hi;
        auto panel = [&](double x, double from_lo, double to_hi) -> double {
            if constexpr (EndpointAwareIntegrand<F>) {
                return f(x, lo_from_a + from_lo, hi_to_b + to_hi);
            } else {
                if (x == a || x == b) return 0.0;
                return f(x);
            }
        };
        const QuadResult r = integrate(panel, lo, hi, cfg);
        if (!r.converged) {
            throw ConvergenceError("cumulative_table: panel [" + std::to_string(lo) + ", " +
                                   std::to_string(hi) + "] did not converge");
        }
        table.integral[k + 1] = table.integral[k] + r.value;
        table.error_estimate += r.error_estimate;
    }
    return table;
}

}  // namespace wirtinger
