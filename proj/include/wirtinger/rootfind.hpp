#pragma once

#include <functional>
#include <vector>

#include "wirtinger/params.hpp"
#include "wirtinger/quadrature.hpp"

namespace wirtinger {

struct RootConfig {
    int n_grid = 2048;
    double delta_excl = 1e-4;   // neighbourhood of the structural zero m = 1 left out
    double root_tol_m = 1e-12;
    double root_tol_f = 1e-10;
    int max_iterations = 200;

    void validate() const;
};

/// A sign change of F between lo and hi. Degenerate brackets (lo == hi)
/// mark grid points where |F| is already within root_tol_f.
struct Bracket {
    double lo = 0.0;
    double hi = 0.0;
    double f_lo = 0.0;
    double f_hi = 0.0;

    bool degenerate() const { return lo == hi; }
};

struct RootSet {
    std::vector<double> interior_roots;  // sorted, in (m_min, 1 - delta_excl)
    bool has_boundary_root = true;       // F(1) = 0 always
    int brackets_scanned = 0;
    double delta_excl = 1e-4;
};

/// Scan abscissae on [m_min, 1 - delta_excl], graded quadratically toward the
/// upper end.
std::vector<double> scan_grid(const RootConfig& rc);

/// Evaluates F on the scan grid and returns every strict sign change. Points
/// with |F| <= root_tol_f between opposite signs come back as degenerate
/// brackets.
std::vector<Bracket> scan_brackets(const Params& prm, const QuadConfig& cfg = {},
                                   const RootConfig& rc = {});

/// Brent's method on a bracketed scalar function. Stops when the bracket is
/// narrower than root_tol_m or the function vanishes exactly; throws
/// ConvergenceError after max_iterations.
double brent_root(const std::function<double(double)>& f, Bracket bracket, const RootConfig& rc);

/// Refines a bracket of F for the given parameters.
double refine_root(const Bracket& bracket, const Params& prm, const QuadConfig& cfg = {},
                   const RootConfig& rc = {});

/// All zeros of F in (0, 1): interior ones refined, the boundary one recorded.
RootSet find_roots(const Params& prm, const QuadConfig& cfg = {}, const RootConfig& rc = {});

}  // namespace wirtinger
