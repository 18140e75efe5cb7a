#include "wirtinger/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numbers>
#include <random>
#include <string>
#include <thread>

#include "wirtinger/core.hpp"
#include "wirtinger/errors.hpp"

namespace wirtinger {
namespace {

constexpr int kHistory = 10;
constexpr double kArmijo = 1e-4;
constexpr int kStagnationWindow = 500;

double phi(double t, double exponent) {
    // |t|^{e-2} t; 0 at t = 0 (continuous for e >= 2, a subgradient choice otherwise).
    if (t == 0.0) return 0.0;
    return signed_power(t, exponent - 1.0);
}

// Solves (I - D2) v = g for the periodic second difference D2 with spacing h,
// by the Sherman-Morrison reduction of the cyclic system to two tridiagonal ones.
class SobolevPreconditioner {
public:
    SobolevPreconditioner(int n, double h) : n_(n) {
        off_ = -1.0 / (h * h);
        diag_ = 1.0 + 2.0 / (h * h);
        corner_ = -diag_;
        std::vector<double> rhs(n, 0.0);
        rhs.front() = corner_;
        rhs.back() = off_;
        z_ = thomas(rhs);
        denom_ = 1.0 + z_.front() + off_ / corner_ * z_.back();
    }

    std::vector<double> solve(const std::vector<double>& g) const {
        std::vector<double> x = thomas(g);
        const double factor = (x.front() + off_ / corner_ * x.back()) / denom_;
        for (int j = 0; j < n_; ++j) x[j] -= factor * z_[j];
        return x;
    }

    // (I - D2) v.
    std::vector<double> apply(const std::vector<double>& v) const {
        std::vector<double> out(n_);
        for (int j = 0; j < n_; ++j) {
            const double left = v[(j + n_ - 1) % n_];
            const double right = v[(j + 1) % n_];
            out[j] = diag_ * v[j] + off_ * (left + right);
        }
        return out;
    }

private:
    // Tridiagonal solve with the modified first and last diagonal entries.
    std::vector<double> thomas(const std::vector<double>& rhs) const {
        std::vector<double> c(n_), d(n_);
        double b = diag_ - corner_;
        c[0] = off_ / b;
        d[0] = rhs[0] / b;
        for (int j = 1; j < n_; ++j) {
            b = (j == n_ - 1) ? diag_ - off_ * off_ / corner_ : diag_;
            const double m = b - off_ * c[j - 1];
            c[j] = off_ / m;
            d[j] = (rhs[j] - off_ * d[j - 1]) / m;
        }
        std::vector<double> x(n_);
        x[n_ - 1] = d[n_ - 1];
        for (int j = n_ - 2; j >= 0; --j) x[j] = d[j] - c[j] * x[j + 1];
        return x;
    }

    int n_;
    double off_, diag_, corner_, denom_;
    std::vector<double> z_;
};

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) s += a[j] * b[j];
    return s;
}

// Shift onto the constraint, then scale to ||u||_q = 1. The constraint is
// homogeneous, so the scaling keeps it.
void normalize(std::vector<double>& u, const Params& prm) {
    project_constraint(u, prm);
    const double q = prm.q();
    const double h = 2.0 / static_cast<double>(u.size());
    double b = 0.0;
    for (double v : u) b += h * std::pow(std::abs(v), q);
    if (!(b > 0.0) || !std::isfinite(b)) {
        throw NumericalError("minimize_direct: iterate collapsed to zero");
    }
    const double scale = std::pow(b, -1.0 / q);
    for (double& v : u) v *= scale;
}

struct Descent {
    std::vector<double> u;
    RestartOutcome outcome;
};

Descent descend(std::vector<double> u, const Params& prm, const SobolevPreconditioner& pre,
                const OracleOptions& opts) {
    const int n = static_cast<int>(u.size());
    const double h = 2.0 / n;
    const double r = prm.r();

    normalize(u, prm);
    QuotientValue qv = quotient(u, prm);

    auto direction = [&](const std::vector<double>& uu, const std::vector<double>& g) {
        // Preconditioned gradient, projected onto the constraint tangent in the
        // preconditioner's metric.
        std::vector<double> normal(n);
        for (int j = 0; j < n; ++j) {
            normal[j] = (r == 2.0) ? 1.0 : (r - 1.0) * std::pow(std::abs(uu[j]), r - 2.0);
        }
        std::vector<double> s = pre.solve(g);
        const std::vector<double> pn = pre.solve(normal);
        const double nn = dot(normal, pn);
        if (nn > 0.0) {
            const double c = dot(normal, s) / nn;
            for (int j = 0; j < n; ++j) s[j] -= c * pn[j];
        }
        return s;
    };
    auto l2_gradient = [&](const QuotientValue& v) {
        std::vector<double> g(v.gradient);
        for (double& x : g) x /= h;
        return g;
    };

    std::vector<double> g = l2_gradient(qv);
    std::vector<double> s = direction(u, g);
    double step = 1.0;
    std::deque<double> history{qv.value};
    double best = qv.value;
    int best_iter = 0;

    Descent out;
    int iter = 0;
    for (; iter < opts.max_iters; ++iter) {
        const double slope = dot(g, s) * h;
        if (!(slope >= 0.0) || std::sqrt(std::max(slope, 0.0)) <= opts.grad_tol * qv.value) {
            out.outcome.converged = std::isfinite(slope);
            break;
        }
        const double reference = *std::max_element(history.begin(), history.end());

        std::vector<double> trial(n);
        QuotientValue tv;
        double t = step;
        bool accepted = false;
        for (int bt = 0; bt < 60; ++bt) {
            for (int j = 0; j < n; ++j) trial[j] = u[j] - t * s[j];
            try {
                normalize(trial, prm);
                tv = quotient(trial, prm);
                if (tv.value <= reference - kArmijo * t * slope) {
                    accepted = true;
                    break;
                }
            } catch (const NumericalError&) {
            } catch (const DomainError&) {
            }
            t *= 0.5;
        }
        if (!accepted) {
            // Line search exhausted: the quotient is flat to rounding here.
            out.outcome.converged = std::sqrt(slope) <= 1e3 * opts.grad_tol * qv.value;
            break;
        }

        std::vector<double> g_new = l2_gradient(tv);
        std::vector<double> du(n), dg(n);
        for (int j = 0; j < n; ++j) {
            du[j] = trial[j] - u[j];
            dg[j] = g_new[j] - g[j];
        }
        const double curvature = dot(du, dg);
        const double bb = dot(du, pre.apply(du)) / curvature;
        step = (curvature > 0.0 && std::isfinite(bb)) ? std::clamp(bb, 1e-12, 1e12) : 2.0 * t;

        u = std::move(trial);
        qv = std::move(tv);
        g = std::move(g_new);
        s = direction(u, g);
        history.push_back(qv.value);
        if (static_cast<int>(history.size()) > kHistory) history.pop_front();

        if (qv.value < best * (1.0 - 1e-14)) {
            best = qv.value;
            best_iter = iter;
        } else if (iter - best_iter > kStagnationWindow) {
            out.outcome.converged = std::sqrt(dot(g, s) * h) <= 1e3 * opts.grad_tol * qv.value;
            break;
        }
    }
    out.outcome.iterations = iter;
    out.outcome.value = qv.value;
    out.u = std::move(u);
    return out;
}

std::vector<double> cosine_start(int n) {
    std::vector<double> u(n);
    for (int j = 0; j < n; ++j) {
        const double x = -1.0 + 2.0 * j / n;
        u[j] = -std::cos(std::numbers::pi * x);
    }
    return u;
}

std::vector<double> random_start(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal;
    constexpr int kModes = 6;
    double a[kModes], b[kModes];
    for (int k = 0; k < kModes; ++k) {
        a[k] = normal(rng) / ((k + 1.0) * (k + 1.0));
        b[k] = normal(rng) / ((k + 1.0) * (k + 1.0));
    }
    std::vector<double> u(n, 0.0);
    for (int j = 0; j < n; ++j) {
        const double x = -1.0 + 2.0 * j / n;
        for (int k = 0; k < kModes; ++k) {
            const double w = std::numbers::pi * (k + 1) * x;
            u[j] += a[k] * std::cos(w) + b[k] * std::sin(w);
        }
    }
    return u;
}

}  // namespace

QuotientValue quotient(std::span<const double> u, const Params& prm) {
    require_main(prm, "quotient");
    const std::size_t n = u.size();
    if (n < 3) throw DomainError("quotient: need at least 3 samples");
    const double p = prm.p();
    const double q = prm.q();
    const double h = 2.0 / static_cast<double>(n);

    std::vector<double> dphi(n);
    double a = 0.0;
    double b = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const double d = (u[(j + 1) % n] - u[j]) / h;
        a += h * std::pow(std::abs(d), p);
        dphi[j] = phi(d, p);
        b += h * std::pow(std::abs(u[j]), q);
    }
    const double norm_q = std::pow(b, 1.0 / q);
    if (!(norm_q >= 1e-300) || !std::isfinite(norm_q)) {
        throw DomainError("quotient: ||u||_q is below 1e-300 (degenerate input)");
    }

    QuotientValue out;
    out.value = std::pow(a, 1.0 / p) / norm_q;
    out.gradient.assign(n, 0.0);
    if (a == 0.0) return out;
    for (std::size_t j = 0; j < n; ++j) {
        const double da = dphi[(j + n - 1) % n] - dphi[j];
        const double db = h * phi(u[j], q);
        out.gradient[j] = out.value * (da / a - db / b);
    }
    return out;
}

ConstraintValue constraint_of(std::span<const double> u, const Params& prm) {
    const double r1 = prm.r() - 1.0;
    const double h = 2.0 / static_cast<double>(u.size());
    ConstraintValue c;
    for (double v : u) {
        c.value += h * signed_power(v, r1);
        c.scale += h * std::pow(std::abs(v), r1);
    }
    return c;
}

void project_constraint(std::vector<double>& u, const Params& prm) {
    if (u.empty()) throw DomainError("project_constraint: empty sample vector");
    const double r = prm.r();
    if (r == 2.0) {
        double mean = 0.0;
        for (double v : u) mean += v;
        mean /= static_cast<double>(u.size());
        for (double& v : u) v -= mean;
        return;
    }
    const auto [mn, mx] = std::minmax_element(u.begin(), u.end());
    // c(t) = sum |u + t|^{r-2}(u + t) is increasing; c(-max) <= 0 <= c(-min).
    double lo = -*mx;
    double hi = -*mn;
    double t = 0.5 * (lo + hi);
    for (int iter = 0; iter < 200; ++iter) {
        double c = 0.0;
        double dc = 0.0;
        double scale = 0.0;
        for (double v : u) {
            const double w = v + t;
            const double a = std::pow(std::abs(w), r - 2.0);
            c += a * w;
            scale += a * std::abs(w);
            dc += (r - 1.0) * a;
        }
        if (std::abs(c) <= 1e-15 * scale) break;
        if (c > 0.0) {
            hi = t;
        } else if (c < 0.0) {
            lo = t;
        } else {
            break;
        }
        double next = (dc > 0.0) ? t - c / dc : 0.5 * (lo + hi);
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        const double tol = 4e-16 * std::max({std::abs(lo), std::abs(hi), 1e-300});
        if (std::abs(next - t) <= tol || hi - lo <= tol) {
            t = next;
            break;
        }
        t = next;
    }
    for (double& v : u) v += t;
}

OracleResult minimize_direct(const Params& prm, int n_grid, std::uint64_t seed,
                             const OracleOptions& opts) {
    require_main(prm, "minimize_direct");
    if (n_grid < 64) throw DomainError("minimize_direct: n_grid must be at least 64");
    if (opts.max_iters < 1 || opts.restarts < 0 || !(opts.grad_tol > 0.0)) {
        throw DomainError("minimize_direct: invalid options");
    }

    const SobolevPreconditioner pre(n_grid, 2.0 / n_grid);
    const int starts = 1 + opts.restarts;
    std::vector<Descent> runs(starts);
    std::vector<std::string> errors(starts);
    auto run = [&](int k) {
        try {
            std::vector<double> init =
                (k == 0) ? cosine_start(n_grid) : random_start(n_grid, seed * 1000003ULL + k);
            runs[k] = descend(std::move(init), prm, pre, opts);
        } catch (const std::exception& e) {
            errors[k] = e.what();
            runs[k].outcome.value = INFINITY;
        }
    };
    if (opts.parallel) {
        std::vector<std::jthread> pool;
        for (int k = 0; k < starts; ++k) pool.emplace_back(run, k);
    } else {
        for (int k = 0; k < starts; ++k) run(k);
    }

    OracleResult out;
    out.n_grid = n_grid;
    int best = -1;
    for (int k = 0; k < starts; ++k) {
        out.restarts.push_back(runs[k].outcome);
        out.iterations += runs[k].outcome.iterations;
        out.converged = out.converged || runs[k].outcome.converged;
        if (errors[k].empty() && (best < 0 || runs[k].outcome.value < runs[best].outcome.value)) {
            best = k;
        }
    }
    if (best < 0) throw NumericalError("minimize_direct: every start failed: " + errors[0]);

    out.alpha_estimate = runs[best].outcome.value;
    out.minimizer_samples = std::move(runs[best].u);
    const double top = *std::max_element(out.minimizer_samples.begin(), out.minimizer_samples.end());
    if (top > 0.0) {
        for (double& v : out.minimizer_samples) v /= top;
    }
    out.constraint_residual = std::abs(constraint_of(out.minimizer_samples, prm).value);
    return out;
}

}  // namespace wirtinger
