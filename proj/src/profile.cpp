#include "wirtinger/profile.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <limits>
#include <cmath>
#include <numbers>
#include <string>

#include "wirtinger/errors.hpp"

namespace wirtinger {
namespace {

constexpr int kTablePanels = 64;
constexpr double kInversionTol = 1e-13;
constexpr int kInversionMaxIter = 200;

void require_profile_m(double m, const char* what) {
    if (!std::isfinite(m) || !(m > kMMin) || m > 1.0) {
        throw DomainError(std::string(what) + ": m must lie in (1e-4, 1], got " +
                          std::to_string(m));
    }
}

// 1/h in the two distance variables: e = z + m on [-m, 0], d = 1 - z on [0, 1].
struct InverseH {
    GFunction g;
    double inv_p;

    double from_bottom(double e) const {
        return std::pow(std::max(g.lower(g.m() - e, e), 0.0), -inv_p);
    }
    double from_top(double d) const {
        return std::pow(std::max(g.upper(1.0 - d, d), 0.0), -inv_p);
    }
};

// One half of the range of u as a running integral of 1/h in a distance
// variable s in [0, length], plus the inversion s(T) of that integral.
class HalfTable {
public:
    template <class F>
    HalfTable(F integrand, double length, const QuadConfig& cfg)
        : f_(std::move(integrand)), cfg_(cfg) {
        auto with_distance = [this](double, double from_zero, double) { return f_(from_zero); };
        table_ = cumulative_table(with_distance, 0.0, length, kTablePanels, cfg);
    }

    double total() const { return table_.integral.back(); }

    // Integral of 1/h over [s0, s0 + delta].
    double partial(double s0, double delta) const {
        if (delta <= 0.0) return 0.0;
        auto shifted = [&](double, double from_lo, double) { return f_(s0 + from_lo); };
        const QuadResult r = integrate(shifted, s0, s0 + delta, cfg_);
        return r.value;
    }

    // Solves int_0^s 1/h = target for s by safeguarded Newton inside the
    // table cell that contains the target.
    double invert(double target) const {
        if (target <= 0.0) return 0.0;
        const auto& c = table_.integral;
        const auto& x = table_.x;
        if (target >= c.back()) return x.back();
        const auto it = std::upper_bound(c.begin(), c.end(), target);
        const std::size_t k = static_cast<std::size_t>(it - c.begin()) - 1;
        if (!(c[k + 1] > c[k])) {
            throw NumericalError("build_profile: running integral of 1/h is not strictly increasing");
        }
        const double s0 = x[k];
        const double width = x[k + 1] - x[k];
        const double rhs = target - c[k];

        double lo = 0.0;
        double hi = width;
        double delta = width * rhs / (c[k + 1] - c[k]);
        for (int iter = 0; iter < kInversionMaxIter; ++iter) {
            const double phi = partial(s0, delta) - rhs;
            if (phi == 0.0) return s0 + delta;
            if (phi > 0.0) {
                hi = delta;
            } else {
                lo = delta;
            }
            // Relative tolerance: near the zeros of g the solution is tiny (s ~ T^{p'}).
            const double scale = std::max(s0 + lo, std::numeric_limits<double>::min());
            if (hi - lo <= kInversionTol * scale) return s0 + 0.5 * (lo + hi);
            double next = delta - phi / f_(s0 + delta);
            if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
            if (std::abs(next - delta) <= kInversionTol * std::max(s0 + next, scale)) {
                return s0 + next;
            }
            delta = next;
        }
        throw ConvergenceError("build_profile: inversion of H did not converge");
    }

private:
    std::function<double(double)> f_;
    QuadConfig cfg_;
    CumulativeTable table_;
};

double h_from_distances(const GFunction& g, double inv_p, double u, double lo, double hi) {
    const double gv = u >= 0.0 ? g.upper(u, hi) : g.lower(-u, lo);
    return std::pow(std::max(gv, 0.0), inv_p);
}

}  // namespace

std::vector<std::pair<std::string, double>> ProfileResiduals::named() const {
    return {{"a_constraint", constraint}, {"b_norm_q", norm_q},
            {"c_derivative_norm", derivative_norm}, {"d_quotient", quotient},
            {"e_euler_lagrange", euler_lagrange}, {"f_evenness", evenness}};
}

double ProfileResiduals::max() const {
    double out = 0.0;
    for (const auto& [name, v] : named()) out = std::max(out, std::isnan(v) ? INFINITY : v);
    return out;
}

double gamma_of_m(double m, const Params& prm, const QuadConfig& cfg) {
    require_main(prm, "gamma_of_m");
    require_profile_m(m, "gamma_of_m");
    const InverseH ih{GFunction(m, prm), 1.0 / prm.p()};
    const QuadResult lower =
        integrate([&](double, double e, double) { return ih.from_bottom(e); }, 0.0, m, cfg);
    const QuadResult upper =
        integrate([&](double, double d, double) { return ih.from_top(d); }, 0.0, 1.0, cfg);
    if (!lower.converged || !upper.converged) {
        throw ConvergenceError("gamma_of_m: quadrature did not converge at m = " +
                               std::to_string(m));
    }
    return lower.value + upper.value;
}

Profile build_profile(double m, const Params& prm, int n, const QuadConfig& cfg) {
    require_main(prm, "build_profile");
    require_profile_m(m, "build_profile");
    if (n < 32) throw DomainError("build_profile: need at least 32 samples per half period");
    cfg.validate();

    const InverseH ih{GFunction(m, prm), 1.0 / prm.p()};
    const HalfTable bottom([ih](double e) { return ih.from_bottom(e); }, m, cfg);
    const HalfTable top([ih](double d) { return ih.from_top(d); }, 1.0, cfg);
    const double gamma = bottom.total() + top.total();

    const std::size_t half = static_cast<std::size_t>(n);
    const std::size_t total = 2 * half - 1;
    Profile prof{m, prm, gamma, {}, {}, {}, {}, {}, {}};
    prof.nodes.resize(total);
    prof.u_values.resize(total);
    prof.du_values.resize(total);
    prof.dist_lo.resize(total);
    prof.dist_hi.resize(total);

    for (std::size_t k = 0; k < half; ++k) {
        // x = -(1 + cos theta)/2, so 1 + x = sin^2(theta/2) and -x = cos^2(theta/2).
        const double theta = std::numbers::pi * static_cast<double>(k) / static_cast<double>(n - 1);
        const double s = std::sin(0.5 * theta);
        const double c = (k == half - 1) ? 0.0 : std::cos(0.5 * theta);
        const double one_plus_x = s * s;
        const double minus_x = c * c;
        double u, lo, hi;
        if (gamma * one_plus_x <= bottom.total()) {
            lo = bottom.invert(gamma * one_plus_x);
            u = -m + lo;
            hi = (1.0 + m) - lo;
        } else {
            hi = top.invert(gamma * minus_x);
            u = 1.0 - hi;
            lo = (1.0 + m) - hi;
        }
        if (k == 0) {
            u = -m;
            lo = 0.0;
            hi = 1.0 + m;
        }
        if (k == half - 1) {
            u = 1.0;
            lo = 1.0 + m;
            hi = 0.0;
        }
        const double du = gamma * h_from_distances(ih.g, ih.inv_p, u, lo, hi);
        const std::size_t left = k;
        const std::size_t right = total - 1 - k;
        prof.nodes[left] = -minus_x;
        prof.nodes[right] = minus_x;
        prof.u_values[left] = prof.u_values[right] = u;
        prof.dist_lo[left] = prof.dist_lo[right] = lo;
        prof.dist_hi[left] = prof.dist_hi[right] = hi;
        prof.du_values[left] = du;
        prof.du_values[right] = (left == right) ? du : -du;
    }
    prof.nodes[half - 1] = 0.0;
    prof.du_values[half - 1] = 0.0;

    prof.diagnostics = diagnostics_of_m(m, prm, K_of_m(m, prm, cfg));
    return prof;
}

double simpson_samples(const std::vector<double>& x, const std::vector<double>& f) {
    if (x.size() != f.size() || x.size() < 3 || x.size() % 2 == 0) {
        throw DomainError("simpson_samples: need an odd number (>= 3) of matching samples");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i + 2 < x.size(); i += 2) {
        const double h0 = x[i + 1] - x[i];
        const double h1 = x[i + 2] - x[i + 1];
        const double hs = h0 + h1;
        sum += hs / 6.0 *
               ((2.0 - h1 / h0) * f[i] + hs * hs / (h0 * h1) * f[i + 1] + (2.0 - h0 / h1) * f[i + 2]);
    }
    return sum;
}

ProfileIntegrals profile_integrals(const Profile& prof, const QuadConfig& cfg) {
    const Params& prm = prof.prm;
    const double p = prm.p();
    const double q = prm.q();
    const double r1 = prm.r() - 1.0;
    const double gamma = prof.gamma;
    const GFunction g(prof.m, prm);
    const double inv_p = 1.0 / p;
    const int n = prof.half_count();
    if (n < 8) throw DomainError("profile_integrals: profile too coarse");

    // Left end panel covers one interval, the right one one or two so that the
    // Simpson block in between has an even number of intervals.
    const int first = 1;
    const int last = ((n - 1 - first) % 2 == 0) ? n - 3 : n - 2;

    auto integrand_triplet = [&](double u, double du) {
        return std::array<double, 3>{signed_power(u, r1), std::pow(std::abs(u), q),
                                     std::pow(std::abs(du), p)};
    };

    std::array<std::vector<double>, 3> f;
    std::vector<double> x(prof.nodes.begin() + first, prof.nodes.begin() + last + 1);
    for (auto& v : f) v.reserve(x.size());
    for (int k = first; k <= last; ++k) {
        const auto t = integrand_triplet(prof.u_values[k], prof.du_values[k]);
        for (int j = 0; j < 3; ++j) f[j].push_back(t[j]);
    }
    std::array<double, 3> half{};
    for (int j = 0; j < 3; ++j) half[j] = simpson_samples(x, f[j]);

    // dx = du / (gamma h(u)) on the end panels.
    auto end_panel = [&](int j, bool bottom, double extent) {
        auto integrand = [&](double, double from_end, double) {
            const double u = bottom ? -prof.m + from_end : 1.0 - from_end;
            const double gv = bottom ? g.lower(prof.m - from_end, from_end)
                                     : g.upper(1.0 - from_end, from_end);
            const double h = std::pow(std::max(gv, 0.0), inv_p);
            if (!(h > 0.0)) return 0.0;
            return integrand_triplet(u, gamma * h)[j] / (gamma * h);
        };
        const QuadResult res = integrate(integrand, 0.0, extent, cfg);
        if (!res.converged) throw ConvergenceError("profile_integrals: end panel did not converge");
        return res.value;
    };
    const double lo_extent = prof.dist_lo[first];
    const double hi_extent = prof.dist_hi[last];
    for (int j = 0; j < 3; ++j) {
        half[j] += end_panel(j, true, lo_extent) + end_panel(j, false, hi_extent);
    }
    return {2.0 * half[0], 2.0 * half[1], 2.0 * half[2]};
}

ProfileResiduals verify_profile(const Profile& prof, const QuadConfig& cfg) {
    const Params& prm = prof.prm;
    const double p = prm.p();
    const double q = prm.q();
    const double pc = prm.p_conj();
    const ProfileIntegrals in = profile_integrals(prof, cfg);
    const double k_m = K_of_m(prof.m, prm, cfg);
    const double omr = one_minus_r_of_m(prof.m, prm);

    ProfileResiduals res;
    res.constraint = std::abs(in.constraint);
    res.norm_q = std::abs(in.power_q - 2.0 * p * omr / (q * (p - 1.0) + p));
    res.derivative_norm = std::abs(in.derivative_p - q / pc * std::pow(prof.gamma, p) * in.power_q);
    res.quotient = std::abs(std::pow(in.derivative_p, 1.0 / p) / std::pow(in.power_q, 1.0 / q) - k_m);

    const double amplitude =
        std::pow(pc / q * std::pow(k_m, p) * std::pow(in.power_q, (p - q) / q), 1.0 / p);
    const GFunction g(prof.m, prm);
    const int n = prof.half_count();
    for (int k = 1; k + 1 < n; ++k) {
        const double h =
            h_from_distances(g, 1.0 / p, prof.u_values[k], prof.dist_lo[k], prof.dist_hi[k]);
        res.euler_lagrange =
            std::max(res.euler_lagrange, std::abs(std::abs(prof.du_values[k]) - amplitude * h));
    }

    const std::size_t total = prof.nodes.size();
    for (std::size_t k = 0; k < total; ++k) {
        res.evenness = std::max(res.evenness, std::abs(prof.u_values[k] - prof.u_values[total - 1 - k]));
    }
    return res;
}

MDiagnostics diagnostics_of_m(double m, const Params& prm, double alpha) {
    require_main(prm, "diagnostics_of_m");
    const double p = prm.p();
    const double q = prm.q();
    MDiagnostics d;
    d.m = m;
    d.r_m = r_of_m(m, prm);
    d.one_minus_r_m = one_minus_r_of_m(m, prm);
    d.norm_q = std::pow(2.0 * p * d.one_minus_r_m / (q * (p - 1.0) + p), 1.0 / q);
    const double scale = std::pow(alpha, p) * (p / q) * std::pow(d.norm_q, p - q);
    d.mu = scale * d.r_m;
    d.c_lagr = scale * d.one_minus_r_m;
    return d;
}

}  // namespace wirtinger
