#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wirtinger/params.hpp"
#include "wirtinger/quadrature.hpp"
#include "wirtinger/rootfind.hpp"

namespace wirtinger {

enum class Regime {
    ClosedFormEquality,  // q <= rp + r - 1, q = r, or a limit class
    StrictInequality,    // q > (2r - 1) p
    InconclusiveBand,    // in between
};

std::string to_string(Regime regime);

struct AlphaResult {
    double alpha = 0.0;
    double m_star = 1.0;
    Regime regime = Regime::ClosedFormEquality;
    std::optional<RootSet> roots;                    // absent for the closed-form classes
    double k_at_one = 0.0;
    std::vector<std::pair<double, double>> k_values;  // (root, K(root))
    double alpha_qq = 0.0;
    double quad_error = 0.0;

    double gap() const { return alpha_qq - alpha; }
};

/// Theorem bands for the Main class; Diagonal and limit classes are always
/// ClosedFormEquality.
Regime classify_regime(const Params& prm);

/// The q = r constant for the same p and q, using the limit formulas where
/// they apply.
double alpha_qq_of(const Params& prm);

AlphaResult best_constant(const Params& prm, const QuadConfig& cfg = {},
                          const RootConfig& rc = {});

/// The constant on the interval (a, b) instead of (-1, 1).
double rescale(double alpha, const Params& prm, double a, double b);

struct ScanRow {
    double q = 0.0;
    std::optional<AlphaResult> result;
    std::string error;  // set when result is empty
};

struct ScanOptions {
    bool parallel = false;
    double gap_tol = 1e-7;  // relative to alpha_qq
    unsigned max_workers = 0;  // 0: hardware concurrency
};

struct BreakpointScan {
    double p = 0.0;
    double r = 0.0;
    std::vector<ScanRow> rows;  // grid order
    /// Grid cell (previous q, q*] containing the first q with gap above the
    /// tolerance; empty when no row qualifies. Lower end equals q* if the first
    /// grid point already qualifies.
    std::optional<std::pair<double, double>> q_star;
    int failures = 0;
    /// Rows after the first positive gap where the gap decreased.
    int monotonicity_violations = 0;
};

BreakpointScan breakpoint_scan(double p, double r, double q_lo, double q_hi, int n,
                               const QuadConfig& cfg = {}, const ScanOptions& opts = {});

}  // namespace wirtinger
