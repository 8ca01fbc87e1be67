// Command-line front end: single evaluations, x-sweeps and verification
// campaigns. Exit codes: 0 ok, 1 usage/config error, 2 inequality violated
// under a satisfied hypothesis.

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "ostrowski/bounds.hpp"
#include "ostrowski/campaign.hpp"
#include "ostrowski/convexity.hpp"
#include "ostrowski/kernels.hpp"
#include "ostrowski/means.hpp"
#include "ostrowski/report.hpp"

namespace {

using namespace ostrowski;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitViolation = 2;

struct GlobalOptions {
    std::string format = "auto";
    double quad_tol = QuadratureConfig{}.abs_tol;
    int quad_depth = QuadratureConfig{}.max_depth;
    double tolerance = kDefaultTolerance;
    std::string out;

    QuadratureConfig quad() const {
        QuadratureConfig q{quad_tol, quad_depth};
        q.validate();
        return q;
    }
    bool csv(bool csv_default = false) const {
        return format == "csv" || (format == "auto" && csv_default);
    }
};

class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw ParamError("cannot open output file '" + path + "'");
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + '"';
}

std::string opt_number(const std::optional<double>& v) {
    if (!v) return {};
    std::ostringstream os;
    os.precision(17);
    os << *v;
    return os.str();
}

std::optional<double> parse_M(const std::string& text) {
    if (text.empty() || text == "auto") return std::nullopt;
    try {
        std::size_t used = 0;
        double v = std::stod(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw ParamError("--M expects 'auto' or a number, got '" + text + "'");
    }
}

int bound_exit(const BoundResult& r) {
    return (!r.holds && r.hypothesis_checked) ? kExitViolation : kExitOk;
}

void emit_bound(const GlobalOptions& g, const BoundResult& r) {
    Output out(g.out);
    if (g.csv()) {
        out.stream() << kCsvHeader << '\n' << csv_row(r) << '\n';
    } else {
        out.stream() << to_json(r).dump(2) << '\n';
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ostrowski-type inequality evaluator and verifier"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions g;
    app.add_option("--format", g.format, "Output format")
        ->check(CLI::IsMember({"auto", "json", "csv"}));
    app.add_option("--quad-tol", g.quad_tol, "Quadrature absolute tolerance");
    app.add_option("--quad-depth", g.quad_depth, "Quadrature maximum bisection depth");
    app.add_option("--tolerance", g.tolerance,
                   "Comparison tolerance t: holds iff rhs - lhs >= -t (1 + |rhs|)");
    app.add_option("--out", g.out, "Write output to this file instead of stdout");

    // identity
    auto* identity = app.add_subcommand("identity", "Both sides of the f'' integral identity");
    std::string id_fn;
    double id_a = 0, id_b = 1;
    std::optional<double> id_x;
    identity->add_option("--function", id_fn, "Function id")->required();
    identity->add_option("--a", id_a)->required();
    identity->add_option("--b", id_b)->required();
    identity->add_option("--x", id_x, "Evaluation point (default: midpoint)");

    // bound
    auto* bound = app.add_subcommand("bound", "Evaluate one inequality");
    std::string b_eq, b_fn, b_M = "auto";
    double b_a = 0, b_b = 1, b_s = 1;
    std::optional<double> b_x, b_p, b_q;
    bool b_relaxed = false;
    bound->add_option("--eq", b_eq, "Equation id")->required();
    bound->add_option("--function", b_fn, "Function id")->required();
    bound->add_option("--a", b_a)->required();
    bound->add_option("--b", b_b)->required();
    bound->add_option("--x", b_x, "Evaluation point (default: midpoint)");
    bound->add_option("--s", b_s, "s in (0,1]");
    bound->add_option("--p", b_p, "Hoelder exponent p > 1");
    bound->add_option("--q", b_q, "Exponent q >= 1");
    bound->add_option("--M", b_M, "auto or an explicit bound on |f''|");
    bound->add_flag("--relaxed", b_relaxed, "Use the x-independent form of e1.2 / e2.6");

    // convexity
    auto* convexity = app.add_subcommand("convexity", "Sampled s-convexity check of |f''|^q");
    std::string c_fn;
    double c_q = 1, c_s = 1, c_a = 0, c_b = 1;
    int c_grid = kDefaultConvexityGrid;
    bool c_concave = false;
    convexity->add_option("--function", c_fn, "Function id")->required();
    convexity->add_option("--power", c_q, "Exponent q applied to |f''|");
    convexity->add_option("--s", c_s, "s in (0,1]");
    convexity->add_option("--a", c_a)->required();
    convexity->add_option("--b", c_b)->required();
    convexity->add_option("--grid", c_grid, "Lattice points per axis");
    convexity->add_flag("--concave", c_concave, "Check s-concavity instead");

    // means
    auto* means = app.add_subcommand("means", "Special means and their bounds");
    std::string m_prop, m_show;
    std::optional<double> m_a, m_b, m_x, m_y, m_p, m_q;
    std::optional<double> m_s;
    means->add_option("--prop", m_prop, "ee1|ee2|ee3|p6")
        ->check(CLI::IsMember({"ee1", "ee2", "ee3", "p6"}));
    means->add_option("--show", m_show, "A|I|Lp")->check(CLI::IsMember({"A", "I", "Lp"}));
    means->add_option("--a", m_a);
    means->add_option("--b", m_b);
    means->add_option("--s", m_s);
    means->add_option("--x", m_x);
    means->add_option("--y", m_y);
    means->add_option("--p", m_p);
    means->add_option("--q", m_q);

    // sweep
    auto* sweep_cmd = app.add_subcommand("sweep", "Evaluate an inequality on a uniform x grid");
    std::string s_eq, s_fn, s_M = "auto";
    double s_a = 0, s_b = 1, s_s = 1;
    std::optional<double> s_p, s_q;
    int s_n = 21;
    sweep_cmd->add_option("--eq", s_eq, "Equation id")->required();
    sweep_cmd->add_option("--function", s_fn, "Function id")->required();
    sweep_cmd->add_option("--a", s_a)->required();
    sweep_cmd->add_option("--b", s_b)->required();
    sweep_cmd->add_option("--s", s_s);
    sweep_cmd->add_option("--p", s_p);
    sweep_cmd->add_option("--q", s_q);
    sweep_cmd->add_option("--M", s_M);
    sweep_cmd->add_option("--n", s_n, "Number of points (>= 2)");

    // campaign
    auto* campaign = app.add_subcommand("campaign", "Run a verification campaign");
    std::string k_config;
    bool k_no_gating = false, k_serial = false;
    campaign->add_option("--config", k_config, "JSON campaign file (default: built-in)");
    campaign->add_flag("--no-gating", k_no_gating, "Treat every hypothesis as satisfied");
    campaign->add_flag("--serial", k_serial, "Evaluate cells on one thread");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        BoundOptions opts;
        opts.quad = g.quad();
        opts.tolerance = g.tolerance;

        if (*identity) {
            const auto f = FunctionSpec::parse(id_fn);
            const Interval iv(id_a, id_b);
            const auto k = identity_residual(f, id_x.value_or(iv.midpoint()), iv, opts.quad);
            Output out(g.out);
            if (g.csv())
                out.stream() << "x,lhs_signed,rhs_identity,residual\n"
                             << opt_number(k.x) << ',' << opt_number(k.lhs_signed) << ','
                             << opt_number(k.rhs_identity) << ',' << opt_number(k.residual)
                             << '\n';
            else
                out.stream() << to_json(k).dump(2) << '\n';
            return kExitOk;
        }

        if (*bound) {
            const auto f = FunctionSpec::parse(b_fn);
            const Interval iv(b_a, b_b);
            std::string eq = b_eq;
            if (eq == "e2.6") eq = b_relaxed ? "e2.6b" : "e2.6a";
            const EquationParams ep{b_s, b_p, b_q, parse_M(b_M)};
            const double x = b_x.value_or(iv.midpoint());
            BoundResult r;
            if (eq == "e1.2" && b_relaxed)
                r = bound_cerone(f, x, iv, true, opts, ep.M);
            else
                r = evaluate_equation(eq, f, iv, x, ep, opts);
            emit_bound(g, r);
            return bound_exit(r);
        }

        if (*convexity) {
            const auto f = FunctionSpec::parse(c_fn);
            const Interval iv(c_a, c_b);
            const auto gfn = abs_d2_power(f, c_q);
            const auto rep = c_concave ? check_s_concave(gfn, c_s, iv, c_grid)
                                       : check_s_convex(gfn, c_s, iv, c_grid);
            Output out(g.out);
            if (g.csv()) {
                out.stream() << "verdict,worst_violation,witness_x,witness_y,witness_t,samples\n"
                             << (rep.satisfied() ? "Satisfied" : "Violated") << ','
                             << opt_number(rep.worst_violation) << ','
                             << (rep.witness ? opt_number(rep.witness->x) : "") << ','
                             << (rep.witness ? opt_number(rep.witness->y) : "") << ','
                             << (rep.witness ? opt_number(rep.witness->t) : "") << ','
                             << rep.samples << '\n';
            } else {
                out.stream() << to_json(rep).dump(2) << '\n';
            }
            return kExitOk;
        }

        if (*means) {
            if (m_prop.empty() == m_show.empty())
                throw ParamError("means needs exactly one of --prop or --show");
            Output out(g.out);
            if (!m_show.empty()) {
                if (!m_x || !m_y) throw ParamError("--show needs --x and --y");
                double v = 0.0;
                if (m_show == "A")
                    v = arithmetic_mean(*m_x, *m_y);
                else if (m_show == "I")
                    v = identric_mean(*m_x, *m_y);
                else {
                    if (!m_p) throw ParamError("--show Lp needs --p");
                    v = gen_log_mean(*m_x, *m_y, *m_p);
                }
                if (g.csv())
                    out.stream() << "mean,value\n" << m_show << ',' << opt_number(v) << '\n';
                else
                    out.stream() << Json{{"mean", m_show}, {"value", v}}.dump(2) << '\n';
                return kExitOk;
            }
            if (!m_a || !m_b) throw ParamError("--prop needs --a and --b");
            MeansInput in;
            in.a = *m_a;
            in.b = *m_b;
            in.s = m_s.value_or(m_prop == "p6" ? 1.0 : 0.5);
            in.x = m_x;
            in.p = m_p;
            in.q = m_q;
            BoundResult r;
            if (m_prop == "p6")
                r = prop_log_identric(in, g.tolerance);
            else
                r = prop_power_bound(in,
                                     m_prop == "ee1"   ? PowerVariant::EE1
                                     : m_prop == "ee2" ? PowerVariant::EE2
                                                       : PowerVariant::EE3,
                                     g.tolerance);
            emit_bound(g, r);
            return bound_exit(r);
        }

        if (*sweep_cmd) {
            const auto f = FunctionSpec::parse(s_fn);
            const Interval iv(s_a, s_b);
            const EquationParams ep{s_s, s_p, s_q, parse_M(s_M)};
            const auto rows = sweep(f, iv, s_eq, ep, s_n, opts);
            Output out(g.out);
            if (g.csv(true)) {
                write_csv(out.stream(), rows);
            } else {
                Json arr = Json::array();
                for (const auto& row : rows) {
                    Json j;
                    j["x"] = row.x;
                    if (row.result)
                        j["result"] = to_json(*row.result);
                    else
                        j["skipped"] = row.skip_reason;
                    arr.push_back(j);
                }
                out.stream() << arr.dump(2) << '\n';
            }
            int code = kExitOk;
            for (const auto& row : rows)
                if (row.result && bound_exit(*row.result) == kExitViolation) code = kExitViolation;
            return code;
        }

        if (*campaign) {
            VerificationCampaign c = VerificationCampaign::default_campaign();
            if (!k_config.empty()) {
                std::ifstream in(k_config);
                if (!in) throw ParamError("cannot open campaign config '" + k_config + "'");
                Json j;
                try {
                    j = Json::parse(in);
                } catch (const nlohmann::json::exception& e) {
                    throw ParamError(std::string("campaign config: ") + e.what());
                }
                c = campaign_from_json(j);
            }
            // Command-line globals override the file only when given explicitly.
            if (app.count("--quad-tol")) c.quad.abs_tol = g.quad_tol;
            if (app.count("--quad-depth")) c.quad.max_depth = g.quad_depth;
            if (app.count("--tolerance")) c.tolerance = g.tolerance;
            if (k_no_gating) c.hypothesis_gating = false;

            const auto report = run_campaign(c, k_serial ? Execution::Serial : Execution::Parallel);
            Output out(g.out);
            if (g.csv()) {
                out.stream() << kCsvHeader << ",equation_id,function,a,b,s,p,q,status\n";
                for (const auto& cell : report.cells) {
                    if (cell.result) {
                        BoundResult r = *cell.result;
                        if (!r.x) r.x = cell.x;
                        out.stream() << csv_row(r);
                    } else {
                        out.stream() << opt_number(cell.x) << ",,,,,";
                    }
                    out.stream() << ',' << cell.equation_id << ',' << csv_quote(cell.function_id)
                                 << ',' << opt_number(cell.interval.a) << ','
                                 << opt_number(cell.interval.b) << ','
                                 << opt_number(cell.params.s) << ',' << opt_number(cell.params.p)
                                 << ',' << opt_number(cell.params.q) << ','
                                 << (cell.result ? "evaluated" : "skipped") << '\n';
                }
            } else {
                out.stream() << to_json(report).dump(2) << '\n';
            }
            return report.exit_code();
        }
    } catch (const ostrowski::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
