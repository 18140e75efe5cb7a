#include "wirtinger/specfun.hpp"

#include <array>
#include <atomic>
#include <cmath>
#include <numbers>
#include <string>

#include "wirtinger/errors.hpp"

namespace wirtinger {
namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoeffs = {
    0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
    771.32342877765313,       -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7,
};

std::atomic<double> g_perturbation{0.0};

void require_positive(double x, const char* what) {
    if (!std::isfinite(x) || x <= 0.0) {
        throw DomainError(std::string(what) + ": argument must be positive and finite, got " +
                          std::to_string(x));
    }
}

// Valid for x >= 1/2.
double ln_gamma_lanczos(double x) {
    const double shifted = x - 1.0;
    double series = kLanczosCoeffs[0];
    const double perturb = g_perturbation.load(std::memory_order_relaxed);
    for (std::size_t k = 1; k < kLanczosCoeffs.size(); ++k) {
        double c = kLanczosCoeffs[k];
        if (k == 1) c *= 1.0 + perturb;
        series += c / (shifted + static_cast<double>(k));
    }
    const double t = shifted + kLanczosG + 0.5;
    return 0.5 * std::log(2.0 * std::numbers::pi) + (shifted + 0.5) * std::log(t) - t +
           std::log(series);
}

}  // namespace

double ln_gamma(double x) {
    require_positive(x, "ln_gamma");
    if (x < 0.5) {
        // Gamma(x) Gamma(1-x) = pi / sin(pi x)
        return std::log(std::numbers::pi / std::sin(std::numbers::pi * x)) -
               ln_gamma_lanczos(1.0 - x);
    }
    return ln_gamma_lanczos(x);
}

double beta(double a, double b) {
    require_positive(a, "beta");
    require_positive(b, "beta");
    return std::exp(ln_gamma(a) + ln_gamma(b) - ln_gamma(a + b));
}

namespace testing {

ScopedLanczosPerturbation::ScopedLanczosPerturbation(double relative)
    : previous_(g_perturbation.exchange(relative)) {}

ScopedLanczosPerturbation::~ScopedLanczosPerturbation() { g_perturbation.store(previous_); }

}  // namespace testing
}  // namespace wirtinger
