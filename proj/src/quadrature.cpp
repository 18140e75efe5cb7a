#include "wirtinger/quadrature.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace wirtinger {
namespace {

constexpr int kMaxLevel = 16;
// Beyond this the node distance to the endpoint underflows.
constexpr double kMaxT = 6.2;

detail::TanhSinhNode make_node(double t) {
    const double half_pi = 0.5 * std::numbers::pi;
    const double u = half_pi * std::sinh(t);
    const double e = std::exp(-2.0 * u);  // underflows gracefully to 0
    const double denom = 1.0 + e;
    return {2.0 * e / denom, half_pi * std::cosh(t) * 4.0 * e / (denom * denom)};
}

struct NodeTables {
    std::array<std::vector<detail::TanhSinhNode>, kMaxLevel + 1> levels;

    NodeTables() {
        for (int t = 0; t <= static_cast<int>(kMaxT); ++t) {
            levels[0].push_back(make_node(static_cast<double>(t)));
        }
        for (int level = 1; level <= kMaxLevel; ++level) {
            const double h = std::ldexp(1.0, -level);
            for (long k = 1;; k += 2) {
                const double t = static_cast<double>(k) * h;
                if (t > kMaxT) break;
                levels[level].push_back(make_node(t));
            }
        }
    }
};

const NodeTables& tables() {
    static const NodeTables instance;
    return instance;
}

}  // namespace

void QuadConfig::validate() const {
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0)) {
        throw DomainError("QuadConfig: tolerances must be positive");
    }
    if (min_level < 2 || min_level > max_level || max_level > kMaxLevel) {
        throw DomainError("QuadConfig: need 2 <= min_level <= max_level <= 16");
    }
}

QuadConfig QuadConfig::scaled(double factor) const {
    QuadConfig out = *this;
    out.abs_tol *= factor;
    out.rel_tol *= factor;
    return out;
}

namespace detail {

std::span<const TanhSinhNode> tanh_sinh_level(int level) {
    if (level < 0 || level > kMaxLevel) throw DomainError("tanh_sinh_level: level out of range");
    return tables().levels[static_cast<std::size_t>(level)];
}

void require_interval(double a, double b) {
    if (!std::isfinite(a) || !std::isfinite(b) || !(a < b)) {
        throw DomainError("integration interval must satisfy a < b with finite ends");
    }
}

}  // namespace detail

std::vector<double> graded_mesh(double a, double b, int n) {
    detail::require_interval(a, b);
    if (n < 1) throw DomainError("graded_mesh: need at least one panel");
    std::vector<double> x(static_cast<std::size_t>(n) + 1);
    const double width = b - a;
    for (int k = 0; k <= n; ++k) {
        const double tau = static_cast<double>(k) / n;
        const double s = tau <= 0.5 ? 2.0 * tau * tau : 1.0 - 2.0 * (1.0 - tau) * (1.0 - tau);
        x[k] = a + width * s;
    }
    x.front() = a;
    x.back() = b;
    return x;
}

}  // namespace wirtinger
