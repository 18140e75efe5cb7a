#include "wirtinger/core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "wirtinger/errors.hpp"
#include "wirtinger/specfun.hpp"

namespace wirtinger {
namespace {

void require_m(double m, const char* what) {
    if (!std::isfinite(m) || !(m > 0.0) || m > 1.0) {
        throw DomainError(std::string(what) + ": m must lie in (0, 1], got " + std::to_string(m));
    }
}

// Integrates phi(z, g(z)) over [-m, 1], split at the kink z = 0 where |z|^q
// and |z|^{r-2}z may be non-smooth.
template <class Phi>
Estimate integrate_over_profile_range(const GFunction& s, Phi&& phi, const QuadConfig& cfg,
                                      const char* what) {
    auto pos = [&](double t, double, double to_one) {
        return phi(t, std::max(s.upper(t, to_one), 0.0));
    };
    auto neg = [&](double w, double, double to_m) {
        return phi(-w, std::max(s.lower(w, to_m), 0.0));
    };
    const QuadResult right = integrate(pos, 0.0, 1.0, cfg);
    const QuadResult left = integrate(neg, 0.0, s.m(), cfg);
    if (!right.converged || !left.converged) {
        throw ConvergenceError(std::string(what) + ": quadrature did not converge at m = " +
                               std::to_string(s.m()));
    }
    return {right.value + left.value, right.error_estimate + left.error_estimate};
}

}  // namespace

double signed_power(double z, double exponent) {
    return std::copysign(std::pow(std::abs(z), exponent), z);
}

double r_of_m(double m, const Params& prm) {
    require_m(m, "r_of_m");
    const double q = prm.q();
    const double r = prm.r();
    return -std::expm1(q * std::log(m)) / (1.0 + std::pow(m, r - 1.0));
}

double one_minus_r_of_m(double m, const Params& prm) {
    require_m(m, "one_minus_r_of_m");
    const double m_r1 = std::pow(m, prm.r() - 1.0);
    return (m_r1 + std::pow(m, prm.q())) / (1.0 + m_r1);
}

double r_prime_of_m(double m, const Params& prm) {
    require_m(m, "r_prime_of_m");
    const double q = prm.q();
    const double r = prm.r();
    const double m_r1 = std::pow(m, r - 1.0);
    const double denom = 1.0 + m_r1;
    const double one_minus_mq = -std::expm1(q * std::log(m));
    return (-q * std::pow(m, q - 1.0) * denom - one_minus_mq * (r - 1.0) * std::pow(m, r - 2.0)) /
           (denom * denom);
}

GFunction::GFunction(double m, const Params& prm)
    : q_((require_main(prm, "g"), prm.q())), r_(prm.r()), m_(m), rm_(r_of_m(m, prm)),
      omr_(one_minus_r_of_m(m, prm)), m_pow_r1_(std::pow(m, prm.r() - 1.0)),
      m_pow_q_(std::pow(m, prm.q())) {}

double GFunction::upper(double t, double d) const {
    if (t < 0.5) return omr_ + rm_ * std::pow(t, r_ - 1.0) - std::pow(t, q_);
    const double l = std::log1p(-d);
    return -std::expm1(q_ * l) + rm_ * std::expm1((r_ - 1.0) * l);
}

double GFunction::lower(double w, double e) const {
    if (w < 0.5 * m_) return omr_ - rm_ * std::pow(w, r_ - 1.0) - std::pow(w, q_);
    const double l = std::log1p(-e / m_);
    return -rm_ * m_pow_r1_ * std::expm1((r_ - 1.0) * l) - m_pow_q_ * std::expm1(q_ * l);
}

double GFunction::operator()(double z, double from_lo, double to_hi) const {
    return z >= 0.0 ? upper(z, to_hi) : lower(-z, from_lo);
}

double g_with_distances(double z, double from_lo, double to_hi, double m, const Params& prm) {
    require_main(prm, "g");
    require_m(m, "g");
    if (!(z >= -m && z <= 1.0)) {
        throw DomainError("g: z must lie in [-m, 1], got " + std::to_string(z));
    }
    return GFunction(m, prm)(z, from_lo, to_hi);
}

double g_of(double z, double m, const Params& prm) {
    return g_with_distances(z, z + m, 1.0 - z, m, prm);
}

Estimate estimate_K(double m, const Params& prm, const QuadConfig& cfg) {
    require_main(prm, "K_of_m");
    require_m(m, "K_of_m");
    if (m <= kMMin) {
        throw DivergenceError("K_of_m: m = " + std::to_string(m) +
                              " is at or below m_min = 1e-4 where K diverges");
    }
    const GFunction s(m, prm);
    const double pc = prm.p_conj();
    const double q = prm.q();
    const double p = prm.p();
    const double inv_pc = prm.inv_p_conj();
    const Estimate integral = integrate_over_profile_range(
        s, [inv_pc](double, double g) { return std::pow(g, inv_pc); }, cfg, "K_of_m");
    const double prefactor =
        2.0 * std::pow(pc / q, inv_pc) *
        std::pow((q * (p - 1.0) + p) / (2.0 * p * s.one_minus_r_m()), (pc + q) / (pc * q));
    return {prefactor * integral.value, prefactor * integral.error};
}

double K_of_m(double m, const Params& prm, const QuadConfig& cfg) {
    return estimate_K(m, prm, cfg).value;
}

Estimate estimate_F(double m, const Params& prm, const QuadConfig& cfg) {
    require_main(prm, "F_of_m");
    require_m(m, "F_of_m");
    const GFunction s(m, prm);
    const double inv_p = 1.0 / prm.p();
    const double r1 = prm.r() - 1.0;
    return integrate_over_profile_range(
        s,
        [inv_p, r1](double z, double g) {
            if (g <= 0.0) return 0.0;
            return signed_power(z, r1) * std::pow(g, -inv_p);
        },
        cfg, "F_of_m");
}

double F_of_m(double m, const Params& prm, const QuadConfig& cfg) {
    return estimate_F(m, prm, cfg).value;
}

double f_prime_at_1(const Params& prm) {
    require_main(prm, "f_prime_at_1");
    const double p = prm.p();
    const double q = prm.q();
    const double r = prm.r();
    const double a = (2.0 * r - 1.0) / q;
    return (1.0 / p - a) * beta(a, prm.inv_p_conj());
}

double c_pq(const Params& prm) {
    require_main(prm, "c_pq");
    const double p = prm.p();
    const double q = prm.q();
    const double pc = prm.p_conj();
    return 2.0 * std::pow(pc / q, 1.0 / pc) *
           std::pow((q * (p - 1.0) + p) / (2.0 * p), (pc + q) / (pc * q));
}

double k_prime_of_m(double m, const Params& prm, const QuadConfig& cfg) {
    require_main(prm, "k_prime_of_m");
    require_m(m, "k_prime_of_m");
    if (m <= kMMin) throw DivergenceError("k_prime_of_m: m at or below m_min");
    const double p = prm.p();
    const double q = prm.q();
    const double r = prm.r();
    const double rm = r_of_m(m, prm);
    const double omr = one_minus_r_of_m(m, prm);
    return c_pq(prm) / prm.p_conj() * r_prime_of_m(m, prm) *
           std::pow(omr, 1.0 / p - 1.0 / q - 2.0) * (1.0 - (r - 1.0) / q * rm) *
           F_of_m(m, prm, cfg);
}

double alpha_closed_form(double p, double q) {
    if (!std::isfinite(p) || !(p > 1.0) || !std::isfinite(q) || !(q > 1.0)) {
        throw DomainError("alpha_closed_form: need finite p > 1 and q > 1");
    }
    const double inv_pc = 1.0 - 1.0 / p;
    const double pc = p / (p - 1.0);
    return 2.0 * std::pow(inv_pc, 1.0 / q) * std::pow(1.0 / q, inv_pc) *
           std::pow(2.0 / (pc + q), 1.0 / p - 1.0 / q) * beta(inv_pc, 1.0 / q);
}

namespace {

double two_pow_inv_p_times(double p) {
    if (std::isnan(p) || !(p > 1.0)) throw DomainError("need p > 1");
    const double inv_p = std::isinf(p) ? 0.0 : 1.0 / p;
    const double pc = std::isinf(p) ? 1.0 : p / (p - 1.0);
    return std::pow(2.0, inv_p) * std::pow(pc + 1.0, 1.0 / pc);
}

}  // namespace

double alpha_q1_r2(double p) { return two_pow_inv_p_times(p); }

double alpha_q_infinity_r2(double p) { return two_pow_inv_p_times(p); }

double alpha_p_infinity(double q) {
    if (!std::isfinite(q) || !(q >= 1.0)) throw DomainError("alpha_p_infinity: need finite q >= 1");
    return std::pow(2.0, 1.0 - 1.0 / q) * std::pow(q + 1.0, 1.0 / q);
}

}  // namespace wirtinger
