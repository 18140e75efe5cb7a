#pragma once

#include <string>
#include <utility>
#include <vector>

#include "wirtinger/core.hpp"
#include "wirtinger/params.hpp"
#include "wirtinger/quadrature.hpp"

namespace wirtinger {

/// The even extremal with u(-1) = u(1) = -m and u(0) = 1, sampled on a
/// Chebyshev-clustered grid. Nodes are mirror images: nodes[k] = -nodes[N-1-k].
struct Profile {
    double m = 1.0;
    Params prm;
    double gamma = 0.0;
    std::vector<double> nodes;
    std::vector<double> u_values;
    std::vector<double> du_values;
    /// Distances u + m and 1 - u, kept so h(u) stays accurate near the zeros of g.
    std::vector<double> dist_lo;
    std::vector<double> dist_hi;
    MDiagnostics diagnostics;

    /// Samples on [-1, 0], both ends included.
    int half_count() const { return static_cast<int>((nodes.size() + 1) / 2); }
};

struct ProfileResiduals {
    double constraint = 0.0;      // (a) |int |u|^{r-2} u|
    double norm_q = 0.0;          // (b) ||u||_q^q against its closed form
    double derivative_norm = 0.0; // (c) ||u'||_p^p against (q/p') gamma^p ||u||_q^q
    double quotient = 0.0;        // (d) ||u'||_p / ||u||_q against K(m)
    double euler_lagrange = 0.0;  // (e) integrated Euler-Lagrange equation with alpha = K(m)
    double evenness = 0.0;        // (f) max |u(x) - u(-x)|

    std::vector<std::pair<std::string, double>> named() const;
    double max() const;
};

/// gamma = int_{-m}^{1} ds / h(s), h = g^{1/p}.
double gamma_of_m(double m, const Params& prm, const QuadConfig& cfg = {});

/// n samples per half period (n >= 32); the profile has 2n - 1 nodes on [-1, 1].
Profile build_profile(double m, const Params& prm, int n, const QuadConfig& cfg = {});

ProfileResiduals verify_profile(const Profile& prof, const QuadConfig& cfg = {});

/// Integrals over the full period computed from the samples: composite
/// Simpson on the interior, the two end panels in the u variable.
struct ProfileIntegrals {
    double constraint = 0.0;    // int |u|^{r-2} u
    double power_q = 0.0;       // int |u|^q
    double derivative_p = 0.0;  // int |u'|^p
};
ProfileIntegrals profile_integrals(const Profile& prof, const QuadConfig& cfg = {});

/// Nonuniform composite Simpson over samples (x, f); needs an odd sample count.
double simpson_samples(const std::vector<double>& x, const std::vector<double>& f);

/// mu, c and ||u||_q from their closed expressions in m and alpha.
MDiagnostics diagnostics_of_m(double m, const Params& prm, double alpha);

}  // namespace wirtinger
