#pragma once

#include "wirtinger/params.hpp"
#include "wirtinger/quadrature.hpp"

namespace wirtinger {

/// Below this m, K(m) is reported as divergent.
inline constexpr double kMMin = 1e-4;

/// Value of an integral-defined function with its accumulated quadrature
/// error estimate.
struct Estimate {
    double value = 0.0;
    double error = 0.0;
};

/// Scalars of a normalised extremal with max u = 1 and min u = -m.
struct MDiagnostics {
    double m = 1.0;
    double r_m = 0.0;
    double one_minus_r_m = 1.0;
    double mu = 0.0;      // Lagrange multiplier of the constraint
    double c_lagr = 0.0;  // integration constant of the first-order equation
    double norm_q = 0.0;  // ||u||_q
};

/// |z|^e sign(z).
double signed_power(double z, double exponent);

/// r(m) = (1 - m^q) / (1 + m^{r-1}), computed without cancellation near m = 1.
double r_of_m(double m, const Params& prm);

/// 1 - r(m) = (m^{r-1} + m^q) / (1 + m^{r-1}); never formed as 1 minus r(m).
double one_minus_r_of_m(double m, const Params& prm);

/// dr/dm.
double r_prime_of_m(double m, const Params& prm);

/// g(z) = 1 - r(m) + r(m)|z|^{r-2} z - |z|^q on [-m, 1]. Vanishes at both ends.
double g_of(double z, double m, const Params& prm);

/// g for one fixed (m, prm), evaluated from a position and its distance to
/// the nearer zero. Construction does the per-m work once.
class GFunction {
public:
    GFunction(double m, const Params& prm);

    double m() const { return m_; }
    double r_m() const { return rm_; }
    double one_minus_r_m() const { return omr_; }

    /// z = t in [0, 1] with d = 1 - t.
    double upper(double t, double d) const;
    /// z = -w with w in [0, m] and e = m - w.
    double lower(double w, double e) const;
    /// z with its distances to -m and to 1.
    double operator()(double z, double from_lo, double to_hi) const;

private:
    double q_, r_, m_;
    double rm_, omr_;
    double m_pow_r1_, m_pow_q_;
};

/// g evaluated from the distances to the two zeros, z = -m + from_lo = 1 - to_hi.
/// Accurate to full relative precision arbitrarily close to either zero.
double g_with_distances(double z, double from_lo, double to_hi, double m, const Params& prm);

/// The integral K(m) whose value at a constrained m is the candidate constant.
Estimate estimate_K(double m, const Params& prm, const QuadConfig& cfg = {});
double K_of_m(double m, const Params& prm, const QuadConfig& cfg = {});

/// F(m) = int_{-m}^{1} |z|^{r-2} z g(z)^{-1/p} dz; its zeros are the admissible m.
Estimate estimate_F(double m, const Params& prm, const QuadConfig& cfg = {});
double F_of_m(double m, const Params& prm, const QuadConfig& cfg = {});

/// F'(1) = (1/p - (2r-1)/q) B((2r-1)/q, 1/p').
double f_prime_at_1(const Params& prm);

/// c(p, q) = 2 (p'/q)^{1/p'} [(q(p-1)+p)/(2p)]^{(p'+q)/(p'q)}.
double c_pq(const Params& prm);

/// K'(m) through the closed identity in terms of r(m), r'(m) and F(m).
double k_prime_of_m(double m, const Params& prm, const QuadConfig& cfg = {});

/// alpha(p, q, q) in closed form; p > 1 and q > 1 finite.
double alpha_closed_form(double p, double q);

/// alpha(p, 1, 2) = 2^{1/p} (p' + 1)^{1/p'}.
double alpha_q1_r2(double p);

/// alpha(inf, q, r) = 2^{1/q'} (q + 1)^{1/q}, independent of r.
double alpha_p_infinity(double q);

/// alpha(p, inf, 2) = 2^{1/p} (p' + 1)^{1/p'}.
double alpha_q_infinity_r2(double p);

}  // namespace wirtinger
