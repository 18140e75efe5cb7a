#pragma once

namespace wirtinger {

/// log Gamma(x) for x > 0, Lanczos approximation (g = 7, 9 terms) with the
/// reflection formula below x = 1/2.
double ln_gamma(double x);

/// Euler Beta function B(a, b) = Gamma(a) Gamma(b) / Gamma(a + b), composed
/// in log space.
double beta(double a, double b);

namespace testing {

/// Multiplies the leading Lanczos series coefficient by (1 + relative) for
/// the lifetime of the guard. Only meant for negative tests of the
/// verification suite; not thread-safe with respect to concurrent guards.
class ScopedLanczosPerturbation {
public:
    explicit ScopedLanczosPerturbation(double relative);
    ~ScopedLanczosPerturbation();
    ScopedLanczosPerturbation(const ScopedLanczosPerturbation&) = delete;
    ScopedLanczosPerturbation& operator=(const ScopedLanczosPerturbation&) = delete;

private:
    double previous_;
};

}  // namespace testing
}  // namespace wirtinger
