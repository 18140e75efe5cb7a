#include "wirtinger/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>

#include "wirtinger/errors.hpp"
#include "wirtinger/profile.hpp"
#include "wirtinger/solver.hpp"
#include "wirtinger/verify.hpp"

namespace wirtinger {
namespace {

using nlohmann::json;

std::string fmt(double v, int digits) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

std::string human(double v) { return fmt(v, 10); }
std::string exact(double v) { return fmt(v, 17); }

// JSON has no infinity; exponents keep the "inf" literal, other values map to null.
json number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json exponent_json(const Exponent& e) {
    return e.is_infinite() ? json("inf") : json(e.value());
}

QuadConfig quad_config(std::optional<double> tol) {
    QuadConfig cfg;
    if (tol) {
        if (!(*tol > 0.0) || !(*tol < 1.0)) throw DomainError("--tol must lie in (0, 1)");
        cfg.rel_tol = *tol;
        cfg.abs_tol = *tol / 10.0;
    }
    return cfg;
}

struct Runner {
    std::ostream& out;
    std::ostream& err;

    // Maps the library's error taxonomy onto exit codes.
    template <class F>
    int guarded(F&& body) {
        try {
            return body();
        } catch (const InadmissibleError& e) {
            err << "error: inadmissible parameters: " << e.what() << "\n";
            return kExitUsage;
        } catch (const DomainError& e) {
            err << "error: " << e.what() << "\n";
            return kExitUsage;
        } catch (const NumericalError& e) {
            err << "error: numerical failure: " << e.what() << "\n";
            return kExitNumerical;
        }
    }
};

struct AlphaArgs {
    std::string p, q;
    double r = 2.0;
    std::optional<double> a, b, tol;
    bool json = false;
};

int cmd_alpha(const AlphaArgs& args, Runner& io) {
    return io.guarded([&] {
        const Params prm = Params::make(Exponent::parse(args.p), Exponent::parse(args.q), args.r);
        if (args.a.has_value() != args.b.has_value()) {
            throw DomainError("--a and --b must be given together");
        }
        const QuadConfig cfg = quad_config(args.tol);
        const AlphaResult res = best_constant(prm, cfg);
        std::optional<double> scaled;
        if (args.a) scaled = rescale(res.alpha, prm, *args.a, *args.b);

        if (args.json) {
            json j;
            j["p"] = exponent_json(prm.p_exponent());
            j["q"] = exponent_json(prm.q_exponent());
            j["r"] = prm.r();
            j["alpha"] = number(res.alpha);
            j["m_star"] = number(res.m_star);
            j["regime"] = to_string(res.regime);
            j["alpha_qq"] = number(res.alpha_qq);
            j["gap"] = number(res.gap());
            j["k_at_one"] = number(res.k_at_one);
            j["quad_error"] = number(res.quad_error);
            j["admissibility"] = to_string(prm.admissibility());
            json roots = json::array();
            for (const auto& [m, k] : res.k_values) roots.push_back({{"m", m}, {"K", k}});
            j["interior_roots"] = roots;
            if (scaled) {
                j["a"] = *args.a;
                j["b"] = *args.b;
                j["alpha_rescaled"] = number(*scaled);
            }
            io.out << j.dump() << "\n";
            return kExitOk;
        }
        io.out << "params    " << prm.to_string() << "\n";
        io.out << "alpha     " << human(res.alpha) << "\n";
        io.out << "m_star    " << human(res.m_star) << "\n";
        io.out << "regime    " << to_string(res.regime) << "\n";
        io.out << "alpha_qq  " << human(res.alpha_qq) << "\n";
        io.out << "gap       " << human(res.gap()) << "\n";
        for (const auto& [m, k] : res.k_values) {
            io.out << "root      m=" << human(m) << " K=" << human(k) << "\n";
        }
        if (scaled) {
            io.out << "alpha_ab  " << human(*scaled) << "  on (" << human(*args.a) << ", "
                   << human(*args.b) << ")\n";
        }
        return kExitOk;
    });
}

struct ScanArgs {
    double p = 2.0, r = 2.0, q_from = 0.0, q_to = 0.0;
    int n = 0;
    std::string format = "csv";
    bool parallel = false;
    std::optional<double> tol;
};

int cmd_scan(const ScanArgs& args, Runner& io) {
    return io.guarded([&] {
        const QuadConfig cfg = quad_config(args.tol);
        const BreakpointScan scan = breakpoint_scan(args.p, args.r, args.q_from, args.q_to, args.n,
                                                    cfg, {.parallel = args.parallel});
        const double spacing = (args.q_to - args.q_from) / (args.n - 1);
        if (args.format == "json") {
            json rows = json::array();
            for (const ScanRow& row : scan.rows) {
                json j{{"p", args.p}, {"q", row.q}, {"r", args.r}};
                if (row.result) {
                    const AlphaResult& res = *row.result;
                    j["alpha"] = number(res.alpha);
                    j["alpha_qq"] = number(res.alpha_qq);
                    j["gap"] = number(res.gap());
                    j["m_star"] = number(res.m_star);
                    j["regime"] = to_string(res.regime);
                    j["quad_error"] = number(res.quad_error);
                    j["error"] = nullptr;
                } else {
                    j["error"] = row.error;
                }
                rows.push_back(j);
            }
            json summary{{"failures", scan.failures},
                         {"grid_spacing", spacing},
                         {"monotonicity_violations", scan.monotonicity_violations}};
            summary["q_star"] = scan.q_star ? json{{"lo", scan.q_star->first}, {"hi", scan.q_star->second}}
                                            : json(nullptr);
            io.out << json{{"rows", rows}, {"summary", summary}}.dump() << "\n";
        } else {
            io.out << "p,q,r,alpha,alpha_qq,gap,m_star,regime,quad_error,error\n";
            for (const ScanRow& row : scan.rows) {
                io.out << exact(args.p) << ',' << exact(row.q) << ',' << exact(args.r) << ',';
                if (row.result) {
                    const AlphaResult& res = *row.result;
                    io.out << exact(res.alpha) << ',' << exact(res.alpha_qq) << ','
                           << exact(res.gap()) << ',' << exact(res.m_star) << ','
                           << to_string(res.regime) << ',' << exact(res.quad_error) << ",\n";
                } else {
                    std::string msg = row.error;
                    for (char& c : msg) {
                        if (c == ',' || c == '\n' || c == '"') c = ' ';
                    }
                    io.out << ",,,,,," << msg << "\n";
                }
            }
            if (scan.q_star) {
                io.out << "# q_star in (" << exact(scan.q_star->first) << ", "
                       << exact(scan.q_star->second) << "] grid_spacing=" << exact(spacing) << "\n";
            } else {
                io.out << "# q_star not found in [" << exact(args.q_from) << ", " << exact(args.q_to)
                       << "]\n";
            }
            io.out << "# failures=" << scan.failures
                   << " monotonicity_violations=" << scan.monotonicity_violations << "\n";
        }
        if (scan.failures * 10 > args.n) {
            io.err << "error: " << scan.failures << " of " << args.n << " rows failed\n";
            return kExitNumerical;
        }
        return kExitOk;
    });
}

struct ProfileArgs {
    double p = 2.0, q = 2.0, r = 2.0;
    std::optional<double> m;
    int n = 0;
    std::string out_file;
};

int cmd_profile(const ProfileArgs& args, Runner& io) {
    return io.guarded([&] {
        if (args.n < 63 || args.n % 2 == 0) {
            throw DomainError("--n must be odd and at least 63 (rows spanning [-1, 1])");
        }
        const Params prm = Params::finite(args.p, args.q, args.r);
        require_main(prm, "profile");
        const double m = args.m ? *args.m : best_constant(prm).m_star;
        const Profile prof = build_profile(m, prm, (args.n + 1) / 2);
        const ProfileResiduals res = verify_profile(prof);

        std::ofstream file;
        if (!args.out_file.empty()) {
            file.open(args.out_file);
            if (!file) throw DomainError("cannot open output file '" + args.out_file + "'");
        }
        std::ostream& dst = args.out_file.empty() ? io.out : file;
        dst << "x,u,du\n";
        for (std::size_t k = 0; k < prof.nodes.size(); ++k) {
            dst << exact(prof.nodes[k]) << ',' << exact(prof.u_values[k]) << ','
                << exact(prof.du_values[k]) << "\n";
        }
        dst << "# m=" << exact(prof.m) << " gamma=" << exact(prof.gamma) << "\n";
        for (const auto& [name, value] : res.named()) dst << "# " << name << '=' << exact(value) << "\n";
        if (!args.out_file.empty()) {
            io.out << "wrote " << prof.nodes.size() << " rows to " << args.out_file
                   << " (max residual " << human(res.max()) << ")\n";
        }
        return kExitOk;
    });
}

struct VerifyArgs {
    std::string suite = "quick";
    bool json = false;
};

int cmd_verify(const VerifyArgs& args, Runner& io) {
    return io.guarded([&] {
        const VerificationReport report = run_verification(parse_suite(args.suite));
        if (args.json) {
            json checks = json::array();
            for (const CheckResult& c : report.checks) {
                checks.push_back({{"name", c.name},
                                  {"observed", number(c.observed)},
                                  {"expected", number(c.expected)},
                                  {"tolerance", c.tolerance},
                                  {"relative", c.relative},
                                  {"passed", c.passed},
                                  {"detail", c.detail}});
            }
            io.out << json{{"suite", args.suite}, {"passed", report.all_passed()}, {"checks", checks}}
                          .dump()
                   << "\n";
        } else {
            for (const CheckResult& c : report.checks) {
                io.out << (c.passed ? "PASS " : "FAIL ") << c.name << " observed=" << human(c.observed)
                       << " expected=" << human(c.expected) << " tol=" << human(c.tolerance)
                       << (c.relative ? " (relative)" : "") << "\n";
            }
        }
        const auto failures = report.failures();
        for (const CheckResult* c : failures) {
            io.err << "failed: " << c->name << " observed=" << exact(c->observed)
                   << " expected=" << exact(c->expected) << " tol=" << exact(c->tolerance)
                   << (c->detail.empty() ? "" : " (" + c->detail + ")") << "\n";
        }
        return failures.empty() ? kExitOk : kExitCheckFailed;
    });
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Sharp constants of periodic Wirtinger-type inequalities", "wirtinger"};
    app.require_subcommand(1);

    AlphaArgs alpha;
    auto* a = app.add_subcommand("alpha", "best constant alpha(p, q, r)");
    a->add_option("--p", alpha.p, "exponent of ||u'||_p (number or inf)")->required();
    a->add_option("--q", alpha.q, "exponent of ||u||_q (number or inf)")->required();
    a->add_option("--r", alpha.r, "constraint exponent")->required();
    a->add_option("--a", alpha.a, "left end of the interval");
    a->add_option("--b", alpha.b, "right end of the interval");
    a->add_option("--tol", alpha.tol, "quadrature relative tolerance");
    a->add_flag("--json", alpha.json, "emit a JSON object");

    ScanArgs scan;
    auto* s = app.add_subcommand("scan", "alpha along a q-grid with the q* bracket");
    s->add_option("--p", scan.p)->required();
    s->add_option("--r", scan.r)->required();
    s->add_option("--q-from", scan.q_from)->required();
    s->add_option("--q-to", scan.q_to)->required();
    s->add_option("--n", scan.n, "grid points")->required()->check(CLI::Range(2, 100000));
    s->add_option("--out", scan.format, "output format")->check(CLI::IsMember({"csv", "json"}));
    s->add_flag("--parallel", scan.parallel, "evaluate rows concurrently");
    s->add_option("--tol", scan.tol, "quadrature relative tolerance");

    ProfileArgs profile;
    auto* pr = app.add_subcommand("profile", "extremal profile as CSV x,u,du");
    pr->add_option("--p", profile.p)->required();
    pr->add_option("--q", profile.q)->required();
    pr->add_option("--r", profile.r)->required();
    pr->add_option("--m", profile.m, "minimum -m of the profile (default: solver's m_star)");
    pr->add_option("--n", profile.n, "rows spanning [-1, 1] (odd)")->required();
    pr->add_option("--out", profile.out_file, "write CSV to this file");

    VerifyArgs verify;
    auto* v = app.add_subcommand("verify", "cross-pipeline self test");
    v->add_option("--suite", verify.suite)->check(CLI::IsMember({"quick", "full"}));
    v->add_flag("--json", verify.json);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    Runner io{out, err};
    if (*a) return cmd_alpha(alpha, io);
    if (*s) return cmd_scan(scan, io);
    if (*pr) return cmd_profile(profile, io);
    return cmd_verify(verify, io);
}

}  // namespace wirtinger
