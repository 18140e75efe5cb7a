#include "wirtinger/solver.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <thread>

#include "wirtinger/core.hpp"
#include "wirtinger/errors.hpp"

namespace wirtinger {

std::string to_string(Regime regime) {
    switch (regime) {
        case Regime::ClosedFormEquality: return "CLOSED_FORM_EQUALITY";
        case Regime::StrictInequality: return "STRICT_INEQUALITY";
        case Regime::InconclusiveBand: return "INCONCLUSIVE_BAND";
    }
    return "UNKNOWN";
}

Regime classify_regime(const Params& prm) {
    if (prm.admissibility() != Admissibility::Main) return Regime::ClosedFormEquality;
    const double q = prm.q();
    if (q == prm.r() || q <= prm.equality_threshold()) return Regime::ClosedFormEquality;
    if (q > prm.strict_threshold()) return Regime::StrictInequality;
    return Regime::InconclusiveBand;
}

double alpha_qq_of(const Params& prm) {
    switch (prm.admissibility()) {
        case Admissibility::Main:
        case Admissibility::Diagonal: return alpha_closed_form(prm.p(), prm.q());
        case Admissibility::QOne: return alpha_q1_r2(prm.p());
        case Admissibility::QInfinity:
            return alpha_q_infinity_r2(prm.p_exponent().is_infinite() ? INFINITY : prm.p());
        case Admissibility::PInfinity: return alpha_p_infinity(prm.q());
    }
    throw DomainError("alpha_qq_of: unknown admissibility class");
}

AlphaResult best_constant(const Params& prm, const QuadConfig& cfg, const RootConfig& rc) {
    AlphaResult out;
    out.alpha_qq = alpha_qq_of(prm);
    out.regime = classify_regime(prm);
    if (prm.admissibility() != Admissibility::Main) {
        out.alpha = out.alpha_qq;
        out.k_at_one = out.alpha_qq;
        out.m_star = 1.0;
        return out;
    }

    const Estimate k1 = estimate_K(1.0, prm, cfg);
    out.k_at_one = k1.value;
    out.alpha = k1.value;
    out.m_star = 1.0;
    out.quad_error = k1.error;

    RootSet roots = find_roots(prm, cfg, rc);
    for (double m0 : roots.interior_roots) {
        const Estimate k = estimate_K(m0, prm, cfg);
        out.k_values.emplace_back(m0, k.value);
        if (k.value < out.alpha) {
            out.alpha = k.value;
            out.m_star = m0;
            out.quad_error = k.error;
        }
    }
    out.roots = std::move(roots);

    if (out.regime == Regime::StrictInequality &&
        !(out.alpha < out.k_at_one * (1.0 - 1e-9) && out.m_star < 1.0)) {
        throw NumericalError("best_constant: " + prm.to_string() +
                             " lies in the strict-inequality range but no interior root gives "
                             "K below K(1); root scan missed the constrained minimum");
    }
    return out;
}

double rescale(double alpha, const Params& prm, double a, double b) {
    if (!std::isfinite(a) || !std::isfinite(b) || !(a < b)) {
        throw DomainError("rescale: need finite a < b");
    }
    if (!std::isfinite(alpha) || !(alpha > 0.0)) throw DomainError("rescale: alpha must be positive");
    const double exponent = prm.inv_p_conj() + prm.q_exponent().reciprocal();
    return std::pow(2.0 / (b - a), exponent) * alpha;
}

BreakpointScan breakpoint_scan(double p, double r, double q_lo, double q_hi, int n,
                               const QuadConfig& cfg, const ScanOptions& opts) {
    if (!std::isfinite(q_lo) || !std::isfinite(q_hi) || !(q_hi > q_lo)) {
        throw DomainError("breakpoint_scan: need finite q_lo < q_hi");
    }
    if (!(q_lo >= std::max(r - 1.0, 1.0))) {
        throw DomainError("breakpoint_scan: need q_lo >= max(r - 1, 1)");
    }
    if (n < 2) throw DomainError("breakpoint_scan: need at least 2 grid points");
    if (!(opts.gap_tol > 0.0)) throw DomainError("breakpoint_scan: gap_tol must be positive");
    cfg.validate();

    BreakpointScan scan;
    scan.p = p;
    scan.r = r;
    scan.rows.resize(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        scan.rows[k].q = (k == n - 1) ? q_hi : q_lo + (q_hi - q_lo) * k / (n - 1);
    }

    auto evaluate = [&](ScanRow& row) {
        try {
            row.result = best_constant(Params::finite(p, row.q, r), cfg);
        } catch (const std::exception& e) {
            row.result.reset();
            row.error = e.what();
        }
    };

    if (opts.parallel && n > 1) {
        unsigned workers = opts.max_workers ? opts.max_workers : std::thread::hardware_concurrency();
        workers = std::clamp(workers, 1u, static_cast<unsigned>(n));
        std::atomic<int> next{0};
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (int k = next++; k < n; k = next++) evaluate(scan.rows[k]);
            });
        }
    } else {
        for (ScanRow& row : scan.rows) evaluate(row);
    }

    double prev_gap = NAN;
    bool positive_seen = false;
    for (std::size_t k = 0; k < scan.rows.size(); ++k) {
        const ScanRow& row = scan.rows[k];
        if (!row.result) {
            ++scan.failures;
            continue;
        }
        const double gap = row.result->gap();
        const bool above = gap > opts.gap_tol * row.result->alpha_qq;
        if (!scan.q_star && above) {
            scan.q_star = std::make_pair(k == 0 ? row.q : scan.rows[k - 1].q, row.q);
        }
        if (positive_seen && gap < prev_gap) ++scan.monotonicity_violations;
        positive_seen = positive_seen || above;
        prev_gap = gap;
    }
    return scan;
}

}  // namespace wirtinger
