// Acceptance suite: one PASS/FAIL line per criterion.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "wirtinger/core.hpp"
#include "wirtinger/oracle.hpp"
#include "wirtinger/params.hpp"
#include "wirtinger/profile.hpp"
#include "wirtinger/solver.hpp"

using namespace wirtinger;

namespace {

struct Triple {
    double p, q, r;
};

std::string str(Triple t) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "(%g,%g,%g)", t.p, t.q, t.r);
    return buf;
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

class Criterion {
public:
    explicit Criterion(int id) : id_(id), start_(std::chrono::steady_clock::now()) {}

    void require(bool ok, const std::string& what) {
        if (!ok) {
            passed_ = false;
            notes_ << " [" << what << "]";
        }
    }
    void note(const std::string& what) { notes_ << " " << what; }
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }
    bool finish(const char* title) {
        std::printf("%s %d %s (%.2f s)%s\n", passed_ ? "PASS" : "FAIL", id_, title, seconds(),
                    notes_.str().c_str());
        std::fflush(stdout);
        return passed_;
    }

private:
    int id_;
    std::chrono::steady_clock::time_point start_;
    bool passed_ = true;
    std::ostringstream notes_;
};

// Runs body and turns an escaping exception into a failure.
bool run(int id, const char* title, const std::function<void(Criterion&)>& body) {
    Criterion c(id);
    try {
        body(c);
    } catch (const std::exception& e) {
        c.require(false, std::string("exception: ") + e.what());
    }
    return c.finish(title);
}

char buf[256];

const char* fmt(const char* f, double a, double b = 0.0) {
    std::snprintf(buf, sizeof buf, f, a, b);
    return buf;
}

}  // namespace

int main() {
    int failures = 0;
    auto tally = [&](bool ok) { failures += ok ? 0 : 1; };

    tally(run(1, "classical constant alpha(2,2,2) = pi", [](Criterion& c) {
        const double alpha = best_constant(Params::finite(2, 2, 2)).alpha;
        c.note(fmt("alpha=%.17g", alpha));
        c.require(std::abs(alpha - std::numbers::pi) <= 1e-10, "not within 1e-10 of pi");
        c.require(c.seconds() < 1.0, "slower than 1 s");
    }));

    tally(run(2, "closed form matches K(1) on the 20-triple grid", [](Criterion& c) {
        double worst = 0.0;
        for (double p : {1.5, 2.0, 3.0, 5.0}) {
            for (double q : {2.0, 3.0, 5.0, 8.0, 12.0}) {
                const double a = alpha_closed_form(p, q);
                const double k1 = K_of_m(1.0, Params::finite(p, q, q));
                worst = std::max(worst, rel(k1, a));
                c.require(rel(k1, a) <= 1e-8, "mismatch at " + str({p, q, q}));
            }
        }
        c.note(fmt("worst_rel=%.3g", worst));
        c.require(c.seconds() < 10.0, "slower than 10 s");
    }));

    tally(run(3, "equality regime for (p,r)=(2,2), q in {2,3,4,5}", [](Criterion& c) {
        for (double q : {2.0, 3.0, 4.0, 5.0}) {
            const AlphaResult res = best_constant(Params::finite(2, q, 2));
            c.require(!res.roots || res.roots->interior_roots.empty(),
                      "interior root at " + str({2, q, 2}));
            c.require(rel(res.alpha, alpha_closed_form(2, q)) <= 1e-8,
                      "alpha differs from closed form at " + str({2, q, 2}));
        }
    }));

    tally(run(4, "strict inequality regime", [](Criterion& c) {
        for (Triple t : {Triple{2, 8, 2}, Triple{2, 10, 2}, Triple{3, 20, 2}, Triple{2, 12, 3}}) {
            const AlphaResult res = best_constant(Params::finite(t.p, t.q, t.r));
            const bool root = res.roots && !res.roots->interior_roots.empty();
            c.require(root, "no interior root at " + str(t));
            c.require(res.m_star < 1.0 - 1e-3, "m_star too close to 1 at " + str(t));
            c.require(res.alpha_qq - res.alpha > 1e-4 * res.alpha_qq, "gap too small at " + str(t));
            std::snprintf(buf, sizeof buf, "%s:m*=%.6f,gap=%.3g", str(t).c_str(), res.m_star,
                          res.gap() / res.alpha_qq);
            c.note(buf);
        }
    }));

    tally(run(5, "F'(1) formula against one-sided differences", [](Criterion& c) {
        const std::vector<Triple> triples = {{2, 4, 2},  {2, 5, 2},  {2, 7, 2},   {2, 8, 2},
                                             {3, 6, 2},  {3, 12, 2}, {2, 8, 3},   {2, 12, 3},
                                             {1.5, 3, 2}, {1.5, 6, 2}};
        const double h = 1e-4;
        double worst = 0.0;
        for (Triple t : triples) {
            const Params prm = Params::finite(t.p, t.q, t.r);
            const double fd = (F_of_m(1.0, prm) - F_of_m(1.0 - h, prm)) / h;
            const double exact = f_prime_at_1(prm);
            worst = std::max(worst, rel(fd, exact));
            c.require(rel(fd, exact) <= 2e-3, "derivative mismatch at " + str(t));
            const double expected_sign = std::copysign(1.0, t.q - (2 * t.r - 1) * t.p);
            c.require(std::copysign(1.0, exact) == expected_sign, "sign mismatch at " + str(t));
        }
        c.note(fmt("worst_rel=%.3g", worst));
    }));

    tally(run(6, "K'(m) identity against centered differences", [](Criterion& c) {
        const double h = 1e-5;
        double worst = 0.0;
        for (Triple t : {Triple{2, 8, 2}, Triple{3, 20, 2}}) {
            const Params prm = Params::finite(t.p, t.q, t.r);
            for (double m : {0.3, 0.5, 0.7, 0.9}) {
                const double fd = (K_of_m(m + h, prm) - K_of_m(m - h, prm)) / (2 * h);
                const double exact = k_prime_of_m(m, prm);
                worst = std::max(worst, rel(exact, fd));
                c.require(rel(exact, fd) <= 1e-4, "mismatch at " + str(t) + fmt(" m=%g", m));
            }
        }
        c.note(fmt("worst_rel=%.3g", worst));
    }));

    tally(run(7, "limit constants", [](Criterion& c) {
        const double s6 = std::sqrt(6.0);
        c.require(std::abs(alpha_q1_r2(2) - s6) <= 1e-12, "alpha_q1_r2(2)");
        c.require(std::abs(alpha_q_infinity_r2(2) - s6) <= 1e-12, "alpha_q_infinity_r2(2)");
        c.require(std::abs(alpha_p_infinity(2) - s6) <= 1e-12, "alpha_p_infinity(2)");
        const double near_one = alpha_closed_form(2, 1 + 1e-8);
        c.require(std::abs(near_one - alpha_q1_r2(2)) <= 1e-6, "q -> 1 limit");
        const double large_p = alpha_closed_form(1e6, 3);
        c.require(rel(large_p, alpha_p_infinity(3)) <= 1e-4, "p -> inf limit");
        c.note(fmt("q->1 diff=%.3g p->inf rel=%.3g", std::abs(near_one - alpha_q1_r2(2)),
                   rel(large_p, alpha_p_infinity(3))));
    }));

    tally(run(8, "profile residuals at n=512", [](Criterion& c) {
        struct Case {
            Triple t;
            bool interior;
        };
        const std::vector<Case> cases = {{{2, 2, 2}, false}, {{2, 4, 2}, false}, {{3, 5, 2}, false},
                                         {{2, 8, 2}, true},  {{2, 12, 3}, true}};
        for (const Case& k : cases) {
            const Params prm = Params::finite(k.t.p, k.t.q, k.t.r);
            const double m = k.interior ? best_constant(prm).m_star : 1.0;
            const Profile prof = build_profile(m, prm, 512);
            const ProfileResiduals res = verify_profile(prof);
            for (const auto& [name, value] : res.named()) {
                c.require(value <= 1e-6, name + " at " + str(k.t));
            }
            c.note(str(k.t) + fmt(":max=%.2g", res.max()));
            if (k.t.q == 2) {
                double err = 0.0;
                for (std::size_t i = 0; i < prof.nodes.size(); ++i) {
                    err = std::max(err, std::abs(prof.u_values[i] -
                                                 std::cos(std::numbers::pi * prof.nodes[i])));
                }
                c.require(err <= 1e-6, "(2,2,2) profile differs from cos(pi x)");
                c.note(fmt("cos_err=%.2g", err));
            }
        }
    }));

    tally(run(9, "direct oracle agrees with the solver at n=800", [](Criterion& c) {
        for (Triple t : {Triple{2, 2, 2}, Triple{2, 4, 2}, Triple{2, 8, 2}, Triple{2, 10, 2},
                         Triple{3, 20, 2}, Triple{2, 12, 3}}) {
            const auto start = std::chrono::steady_clock::now();
            const Params prm = Params::finite(t.p, t.q, t.r);
            const AlphaResult res = best_constant(prm);
            const OracleResult o = minimize_direct(prm, 800);
            const double secs =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            c.require(rel(o.alpha_estimate, res.alpha) <= 1e-2, "disagreement at " + str(t));
            c.require(secs < 60.0, "slower than 60 s at " + str(t));
            if (res.regime == Regime::StrictInequality) {
                c.require(o.alpha_estimate < res.alpha_qq, "oracle misses the gap at " + str(t));
            }
            c.note(str(t) + fmt(":rel=%.2g", rel(o.alpha_estimate, res.alpha)));
        }
    }));

    tally(run(10, "breakpoint scan for (p,r)=(2,2) over q in [5,7]", [](Criterion& c) {
        const BreakpointScan scan = breakpoint_scan(2, 2, 5, 7, 41, {}, {.parallel = true});
        c.require(scan.failures == 0, "rows failed");
        for (const ScanRow& row : scan.rows) {
            if (!row.result) continue;
            const double g = row.result->gap() / row.result->alpha_qq;
            if (row.q <= 5.0) c.require(std::abs(g) <= 1e-7, fmt("gap at q=%g", row.q));
            if (row.q >= 6.5) c.require(g > 1e-4, fmt("no gap at q=%g", row.q));
        }
        c.require(scan.q_star.has_value(), "q* not bracketed");
        if (scan.q_star) c.note(fmt("q_star in (%g, %g]", scan.q_star->first, scan.q_star->second));
    }));

    std::printf("%s: %d of 10 criteria failed\n", failures ? "FAIL" : "PASS", failures);
    return failures ? 1 : 0;
}
