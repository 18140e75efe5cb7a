#include "wirtinger/verify.hpp"

#include <cmath>
#include <exception>
#include <functional>
#include <numbers>
#include <sstream>

#include "wirtinger/core.hpp"
#include "wirtinger/errors.hpp"
#include "wirtinger/oracle.hpp"
#include "wirtinger/profile.hpp"
#include "wirtinger/solver.hpp"

namespace wirtinger {
namespace {

struct Triple {
    double p, q, r;
};

std::string label(const char* kind, Triple t) {
    std::ostringstream os;
    os << kind << "(p=" << t.p << ",q=" << t.q << ",r=" << t.r << ")";
    return os.str();
}

class Recorder {
public:
    void check(std::string name, double expected, double tolerance, bool relative,
               const std::function<double()>& observe) {
        CheckResult c{.name = std::move(name), .expected = expected, .tolerance = tolerance,
                      .relative = relative, .passed = false, .detail = {}};
        try {
            c.observed = observe();
            const double bound = relative ? tolerance * std::abs(expected) : tolerance;
            c.passed = std::abs(c.observed - expected) <= bound;
        } catch (const std::exception& e) {
            c.observed = NAN;
            c.detail = e.what();
        }
        report.checks.push_back(std::move(c));
    }

    VerificationReport report;
};

}  // namespace

Suite parse_suite(const std::string& name) {
    if (name == "quick") return Suite::Quick;
    if (name == "full") return Suite::Full;
    throw DomainError("unknown suite '" + name + "' (expected quick or full)");
}

bool VerificationReport::all_passed() const { return failures().empty(); }

std::vector<const CheckResult*> VerificationReport::failures() const {
    std::vector<const CheckResult*> out;
    for (const auto& c : checks) {
        if (!c.passed) out.push_back(&c);
    }
    return out;
}

VerificationReport run_verification(Suite suite) {
    const bool full = suite == Suite::Full;
    Recorder rec;

    rec.check("pi_check alpha(2,2,2)", std::numbers::pi, 1e-10, false,
              [] { return best_constant(Params::finite(2, 2, 2)).alpha; });

    std::vector<Triple> diagonal;
    if (full) {
        for (double p : {1.5, 2.0, 3.0, 5.0}) {
            for (double q : {2.0, 3.0, 5.0, 8.0, 12.0}) diagonal.push_back({p, q, q});
        }
    } else {
        diagonal = {{2, 3, 3}, {3, 5, 5}, {1.5, 8, 8}};
    }
    for (Triple t : diagonal) {
        rec.check(label("closed_form_vs_K1", t), K_of_m(1.0, Params::finite(t.p, t.q, t.r)), 1e-8,
                  true, [t] { return alpha_closed_form(t.p, t.q); });
    }

    const std::vector<Triple> fprime =
        full ? std::vector<Triple>{{2, 4, 2}, {2, 5, 2}, {2, 7, 2}, {2, 8, 2}, {3, 6, 2},
                                   {3, 12, 2}, {2, 8, 3}, {2, 12, 3}, {1.5, 3, 2}, {1.5, 6, 2}}
             : std::vector<Triple>{{2, 4, 2}, {2, 8, 2}};
    for (Triple t : fprime) {
        const Params prm = Params::finite(t.p, t.q, t.r);
        const double h = 1e-4;
        const double fd = (F_of_m(1.0, prm) - F_of_m(1.0 - h, prm)) / h;
        rec.check(label("f_prime_at_1_vs_fd", t), fd, 2e-3, true,
                  [prm] { return f_prime_at_1(prm); });
        rec.check(label("f_prime_at_1_sign", t), std::copysign(1.0, t.q - (2 * t.r - 1) * t.p), 0.0,
                  false, [prm] { return std::copysign(1.0, f_prime_at_1(prm)); });
    }

    std::vector<std::pair<Triple, double>> kprime;
    for (Triple t : full ? std::vector<Triple>{{2, 8, 2}, {3, 20, 2}} : std::vector<Triple>{{2, 8, 2}}) {
        for (double m : full ? std::vector<double>{0.3, 0.5, 0.7, 0.9} : std::vector<double>{0.5}) {
            kprime.emplace_back(t, m);
        }
    }
    for (const auto& [t, m] : kprime) {
        const Params prm = Params::finite(t.p, t.q, t.r);
        const double h = 1e-5;
        const double fd = (K_of_m(m + h, prm) - K_of_m(m - h, prm)) / (2 * h);
        std::ostringstream name;
        name << label("k_prime_identity", t) << "@m=" << m;
        rec.check(name.str(), fd, 1e-4, true, [prm, m] { return k_prime_of_m(m, prm); });
    }

    const std::vector<Triple> oracle =
        full ? std::vector<Triple>{{2, 2, 2}, {2, 4, 2}, {2, 8, 2}, {2, 10, 2}, {3, 20, 2}, {2, 12, 3}}
             : std::vector<Triple>{{2, 8, 2}};
    const int n_oracle = full ? 800 : 400;
    for (Triple t : oracle) {
        const Params prm = Params::finite(t.p, t.q, t.r);
        double alpha = NAN;
        try {
            alpha = best_constant(prm).alpha;
        } catch (const std::exception&) {
        }
        rec.check(label("oracle_agreement", t), alpha, 1e-2, true,
                  [prm, n_oracle] { return minimize_direct(prm, n_oracle).alpha_estimate; });
    }

    struct ProfileCase {
        Triple t;
        bool interior;
    };
    const std::vector<ProfileCase> profiles =
        full ? std::vector<ProfileCase>{{{2, 2, 2}, false}, {{2, 4, 2}, false}, {{3, 5, 2}, false},
                                        {{2, 8, 2}, true}, {{2, 12, 3}, true}}
             : std::vector<ProfileCase>{{{2, 2, 2}, false}, {{2, 8, 2}, true}};
    const int n_profile = 512;
    for (const ProfileCase& pc : profiles) {
        const Params prm = Params::finite(pc.t.p, pc.t.q, pc.t.r);
        rec.check(label("profile_residuals", pc.t), 0.0, 1e-6, false, [&] {
            const double m = pc.interior ? best_constant(prm).m_star : 1.0;
            return verify_profile(build_profile(m, prm, n_profile)).max();
        });
    }
    return rec.report;
}

}  // namespace wirtinger
