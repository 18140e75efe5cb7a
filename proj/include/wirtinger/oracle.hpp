#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "wirtinger/params.hpp"

namespace wirtinger {

struct QuotientValue {
    double value = 0.0;
    std::vector<double> gradient;  // d value / d u_j
};

/// Discrete ||u'||_p / ||u||_q for periodic samples on a uniform grid over
/// [-1, 1): forward differences for u', the rectangle (periodic trapezoid)
/// rule for the norms.
QuotientValue quotient(std::span<const double> u, const Params& prm);

/// Trapezoid value of int |u|^{r-2} u and of int |u|^{r-1}, its natural scale.
struct ConstraintValue {
    double value = 0.0;
    double scale = 0.0;
};
ConstraintValue constraint_of(std::span<const double> u, const Params& prm);

/// Adds the unique constant t with sum |u_j + t|^{r-2}(u_j + t) = 0.
void project_constraint(std::vector<double>& u, const Params& prm);

struct OracleOptions {
    int max_iters = 20000;
    int restarts = 5;          // random starts, in addition to the cosine start
    double grad_tol = 1e-9;    // on the preconditioned gradient, relative to the quotient
    bool parallel = false;
};

struct RestartOutcome {
    double value = 0.0;
    int iterations = 0;
    bool converged = false;
};

struct OracleResult {
    double alpha_estimate = 0.0;
    int n_grid = 0;
    int iterations = 0;  // summed over restarts
    double constraint_residual = 0.0;
    bool converged = false;
    std::vector<double> minimizer_samples;
    std::vector<RestartOutcome> restarts;  // cosine start first
};

/// Direct minimisation of the discretised constrained quotient.
OracleResult minimize_direct(const Params& prm, int n_grid = 800, std::uint64_t seed = 1,
                             const OracleOptions& opts = {});

}  // namespace wirtinger
