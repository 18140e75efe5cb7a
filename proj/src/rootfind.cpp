#include "wirtinger/rootfind.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "wirtinger/core.hpp"
#include "wirtinger/errors.hpp"

namespace wirtinger {

void RootConfig::validate() const {
    if (n_grid < 64) throw DomainError("RootConfig: n_grid must be at least 64");
    if (!(delta_excl > 0.0 && delta_excl < 0.5)) {
        throw DomainError("RootConfig: delta_excl must lie in (0, 0.5)");
    }
    if (!(root_tol_m > 0.0) || !(root_tol_f > 0.0) || max_iterations < 1) {
        throw DomainError("RootConfig: tolerances and iteration limit must be positive");
    }
}

std::vector<double> scan_grid(const RootConfig& rc) {
    rc.validate();
    const double lo = kMMin;
    const double hi = 1.0 - rc.delta_excl;
    std::vector<double> grid(static_cast<std::size_t>(rc.n_grid));
    for (int k = 0; k < rc.n_grid; ++k) {
        const double tau = static_cast<double>(k) / (rc.n_grid - 1);
        grid[k] = hi - (hi - lo) * (1.0 - tau) * (1.0 - tau);
    }
    grid.front() = lo;
    grid.back() = hi;
    return grid;
}

std::vector<Bracket> scan_brackets(const Params& prm, const QuadConfig& cfg,
                                   const RootConfig& rc) {
    require_main(prm, "scan_brackets");
    const std::vector<double> grid = scan_grid(rc);
    std::vector<double> values(grid.size());
    for (std::size_t k = 0; k < grid.size(); ++k) {
        try {
            values[k] = F_of_m(grid[k], prm, cfg);
        } catch (const ConvergenceError& e) {
            throw ConvergenceError("scan_brackets: F did not converge at grid point m = " +
                                   std::to_string(grid[k]) + " for " + prm.to_string());
        }
    }

    // Values within root_tol_f carry no reliable sign. Sign changes are read off
    // the remaining points; a tiny value between them becomes a degenerate
    // bracket, so a small but one-signed F near m = 1 never counts as a root.
    std::vector<Bracket> brackets;
    std::size_t prev = grid.size();
    for (std::size_t k = 0; k < grid.size(); ++k) {
        if (std::abs(values[k]) <= rc.root_tol_f) continue;
        if (prev != grid.size() && (values[prev] < 0.0) != (values[k] < 0.0)) {
            std::size_t best = prev;
            for (std::size_t j = prev + 1; j < k; ++j) {
                if (best == prev || std::abs(values[j]) < std::abs(values[best])) best = j;
            }
            if (best != prev) {
                brackets.push_back({grid[best], grid[best], values[best], values[best]});
            } else {
                brackets.push_back({grid[prev], grid[k], values[prev], values[k]});
            }
        }
        prev = k;
    }
    return brackets;
}

double brent_root(const std::function<double(double)>& f, Bracket bracket, const RootConfig& rc) {
    if (bracket.degenerate()) return bracket.lo;
    double a = bracket.lo;
    double b = bracket.hi;
    double fa = bracket.f_lo;
    double fb = bracket.f_hi;
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if ((fa < 0.0) == (fb < 0.0)) {
        throw DomainError("brent_root: endpoints do not bracket a sign change");
    }

    double c = a;
    double fc = fa;
    double d = b - a;
    double e = d;
    for (int iter = 0; iter < rc.max_iterations; ++iter) {
        if ((fb < 0.0) == (fc < 0.0)) {
            c = a;
            fc = fa;
            d = e = b - a;
        }
        if (std::abs(fc) < std::abs(fb)) {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        const double tol = 2.0 * 1e-16 * std::abs(b) + 0.5 * rc.root_tol_m;
        const double half = 0.5 * (c - b);
        if (std::abs(half) <= tol || fb == 0.0) return b;

        if (std::abs(e) >= tol && std::abs(fa) > std::abs(fb)) {
            // inverse quadratic / secant step
            double s = fb / fa;
            double pnum, qden;
            if (a == c) {
                pnum = 2.0 * half * s;
                qden = 1.0 - s;
            } else {
                const double qa = fa / fc;
                const double rb = fb / fc;
                pnum = s * (2.0 * half * qa * (qa - rb) - (b - a) * (rb - 1.0));
                qden = (qa - 1.0) * (rb - 1.0) * (s - 1.0);
            }
            if (pnum > 0.0) qden = -qden;
            pnum = std::abs(pnum);
            if (2.0 * pnum < std::min(3.0 * half * qden - std::abs(tol * qden), std::abs(e * qden))) {
                e = d;
                d = pnum / qden;
            } else {
                d = half;
                e = d;
            }
        } else {
            d = half;
            e = d;
        }
        a = b;
        fa = fb;
        b += std::abs(d) > tol ? d : std::copysign(tol, half);
        fb = f(b);
    }
    throw ConvergenceError("brent_root: no convergence after " +
                           std::to_string(rc.max_iterations) +
                           " iterations (function noise above tolerance?)");
}

double refine_root(const Bracket& bracket, const Params& prm, const QuadConfig& cfg,
                   const RootConfig& rc) {
    require_main(prm, "refine_root");
    return brent_root([&](double m) { return F_of_m(m, prm, cfg); }, bracket, rc);
}

RootSet find_roots(const Params& prm, const QuadConfig& cfg, const RootConfig& rc) {
    const std::vector<Bracket> brackets = scan_brackets(prm, cfg, rc);
    RootSet set;
    set.delta_excl = rc.delta_excl;
    set.brackets_scanned = rc.n_grid - 1;
    for (const Bracket& br : brackets) {
        set.interior_roots.push_back(refine_root(br, prm, cfg, rc));
    }
    std::sort(set.interior_roots.begin(), set.interior_roots.end());
    const double sep = 2.0 * rc.root_tol_m;
    auto last = std::unique(set.interior_roots.begin(), set.interior_roots.end(),
                            [sep](double x, double y) { return std::abs(x - y) <= sep; });
    set.interior_roots.erase(last, set.interior_roots.end());
    return set;
}

}  // namespace wirtinger
