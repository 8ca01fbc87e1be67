#include "ostrowski/campaign.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <tuple>

#include "format.hpp"
#include "ostrowski/convexity.hpp"
#include "ostrowski/kernels.hpp"

namespace ostrowski {

namespace {

enum class ParamShape { None, S, SP, SQ };

struct EquationInfo {
    const char* id;
    ParamShape shape;
    bool depends_on_x;
};

constexpr EquationInfo kEquations[] = {
    {"classic", ParamShape::None, true}, {"e1.2", ParamShape::None, true},
    {"e1.3", ParamShape::None, false},   {"e2.5", ParamShape::S, true},
    {"e2.6a", ParamShape::S, true},      {"e2.6b", ParamShape::S, true},
    {"e2.7", ParamShape::SP, true},      {"e2.8", ParamShape::SP, true},
    {"teo3", ParamShape::SQ, true},      {"cor6", ParamShape::SQ, true},
    {"e2.9", ParamShape::SP, true},      {"e2.12", ParamShape::SP, false},
    {"cor5", ParamShape::SP, false},     {"cor8", ParamShape::SQ, false},
};

const EquationInfo& info(std::string_view id) {
    for (const auto& e : kEquations)
        if (id == e.id) return e;
    throw ParamError("unknown equation id '" + std::string(id) + "'");
}

double require_x(std::optional<double> x, std::string_view id) {
    if (!x) throw ParamError("equation " + std::string(id) + " needs x");
    return *x;
}

}  // namespace

const std::vector<std::string>& equation_catalogue() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (const auto& e : kEquations) v.emplace_back(e.id);
        return v;
    }();
    return ids;
}

bool is_known_equation(std::string_view id) {
    return std::any_of(std::begin(kEquations), std::end(kEquations),
                       [&](const EquationInfo& e) { return id == e.id; });
}

bool equation_depends_on_x(std::string_view id) { return info(id).depends_on_x; }

BoundResult evaluate_equation(std::string_view id, const FunctionSpec& f, const Interval& iv,
                              std::optional<double> x, const EquationParams& ep,
                              const BoundOptions& opts) {
    const auto& e = info(id);
    if (e.shape == ParamShape::SP && !ep.p && !(ep.q && *ep.q > 1.0))
        throw ParamError("equation " + std::string(id) + " needs p (or q > 1)");
    const SParams params = SParams::make(ep.s, ep.p, ep.q);
    BoundResult r;
    if (id == "classic") {
        r = bound_classic(f, require_x(x, id), iv, opts);
    } else if (id == "e1.2") {
        r = bound_cerone(f, require_x(x, id), iv, false, opts, ep.M);
    } else if (id == "e1.3") {
        r = bound_cerone_midpoint(f, iv, opts, ep.M);
    } else if (id == "e2.5") {
        r = bound_sconvex(f, require_x(x, id), iv, params.s, opts);
    } else if (id == "e2.6a" || id == "e2.6b") {
        r = bound_sconvex_with_M(f, require_x(x, id), iv, params.s, id == "e2.6b", opts, ep.M);
    } else if (id == "e2.7") {
        r = bound_holder(f, require_x(x, id), iv, params, opts);
    } else if (id == "e2.8") {
        r = bound_holder_with_M(f, require_x(x, id), iv, params, opts, ep.M);
    } else if (id == "teo3") {
        r = bound_powermean(f, require_x(x, id), iv, params, opts);
    } else if (id == "cor6") {
        r = bound_powermean_with_M(f, require_x(x, id), iv, params, opts, ep.M);
    } else if (id == "e2.9") {
        r = bound_sconcave(f, require_x(x, id), iv, params, opts);
    } else if (id == "e2.12") {
        r = bound_sconcave_midpoint(f, iv, params, opts);
    } else if (id == "cor5") {
        r = bound_perturbed_trapezoid(f, iv, params, TrapezoidVariant::Holder, opts, ep.M);
    } else {  // cor8
        r = bound_perturbed_trapezoid(f, iv, params, TrapezoidVariant::PowerMean, opts, ep.M);
    }
    return r;
}

std::vector<double> uniform_points(const Interval& iv, int n) {
    if (n < 2) throw ParamError("need at least 2 points");
    std::vector<double> xs(n);
    for (int i = 0; i < n; ++i) xs[i] = i == n - 1 ? iv.b : iv.a + iv.length() * i / (n - 1);
    return xs;
}

std::vector<SweepRow> sweep(const FunctionSpec& f, const Interval& iv, std::string_view id,
                            const EquationParams& params, int n_points, const BoundOptions& opts) {
    info(id);
    const auto xs = uniform_points(iv, n_points);
    BoundOptions cached = opts;
    if (!cached.mean) {
        try {
            cached.mean = integral_mean(f, iv, opts.quad);
        } catch (const Error&) {
        }
    }
    std::vector<SweepRow> rows;
    rows.reserve(xs.size());
    for (double x : xs) {
        SweepRow row;
        row.x = x;
        try {
            row.result = evaluate_equation(id, f, iv, x, params, cached);
        } catch (const Error& e) {
            row.skip_reason = e.what();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

// ---- campaign ------------------------------------------------------------

void VerificationCampaign::validate() const {
    if (functions.empty()) throw ParamError("campaign needs at least one function");
    if (equations.empty()) throw ParamError("campaign needs at least one equation");
    if (s_grid.empty() || p_grid.empty() || q_grid.empty())
        throw ParamError("campaign parameter grids must be nonempty");
    if (x_points < 2) throw ParamError("campaign x_points must be >= 2");
    if (!(tolerance >= 0.0)) throw ParamError("campaign tolerance must be >= 0");
    quad.validate();
    for (const auto& e : equations)
        if (!is_known_equation(e)) throw ParamError("unknown equation id '" + e + "'");
    for (const auto& t : functions) {
        FunctionSpec::parse(t.function_id);
        if (t.intervals.empty() && intervals.empty())
            throw ParamError("no interval for function '" + t.function_id + "'");
    }
    for (double s : s_grid) SParams::plain(s);
    for (double p : p_grid) SParams::with_p(1.0, p);
    for (double q : q_grid) SParams::with_q(1.0, q);
}

VerificationCampaign VerificationCampaign::default_campaign() {
    VerificationCampaign c;
    c.functions = {
        {"poly:0,0,1", {Interval(0.0, 1.0)}},
        {"poly:0,0,0,1", {Interval(0.0, 1.0)}},
        {"poly:0,0,0,0,1", {Interval(0.0, 1.0)}},
        {"exp", {Interval(0.0, 1.0)}},
        {"ln", {Interval(1.0, 2.0)}},
        {"breckner:0,1,0,0.5", {Interval(0.25, 1.0)}},
        {"cpow:1,0.5", {Interval(0.25, 1.0)}},
    };
    c.equations = equation_catalogue();
    return c;
}

namespace {

struct Prepared {
    FunctionSpec f;
    Interval iv;
    std::optional<double> mean, sup_d1, sup_d2;
    std::string mean_error;
};

struct HypKey {
    std::size_t target;
    bool concave;
    double s, q;
    auto tie() const { return std::tie(target, concave, s, q); }
    bool operator<(const HypKey& o) const { return tie() < o.tie(); }
};

struct Cell {
    std::size_t target;  // index into prepared
    std::string equation;
    EquationParams params;
    std::optional<double> x;
    std::optional<HypKey> hyp;
};

std::optional<HypKey> hypothesis_key(std::size_t target, std::string_view eq,
                                     const EquationParams& ep) {
    if (eq == "classic" || eq == "e1.2" || eq == "e1.3") return std::nullopt;
    double q = 1.0;
    if (ep.p) q = *ep.p / (*ep.p - 1.0);
    if (ep.q) q = *ep.q;
    const bool concave = eq == "e2.9" || eq == "e2.12";
    return HypKey{target, concave, ep.s, q};
}

template <class Fn>
void for_each_index(std::size_t n, Execution mode, Fn&& fn) {
    const long long count = static_cast<long long>(n);
    if (mode == Execution::Serial) {
        for (long long i = 0; i < count; ++i) fn(static_cast<std::size_t>(i));
        return;
    }
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < count; ++i) fn(static_cast<std::size_t>(i));
}

}  // namespace

CampaignReport run_campaign(const VerificationCampaign& c, Execution mode) {
    c.validate();

    std::vector<Prepared> prepared;
    for (const auto& t : c.functions) {
        const auto f = FunctionSpec::parse(t.function_id);
        const auto& ivs = t.intervals.empty() ? c.intervals : t.intervals;
        for (const auto& iv : ivs) prepared.push_back(Prepared{f, iv, {}, {}, {}, {}});
    }

    for_each_index(prepared.size(), mode, [&](std::size_t i) {
        auto& p = prepared[i];
        try {
            p.mean = integral_mean(p.f, p.iv, c.quad);
        } catch (const Error& e) {
            p.mean_error = e.what();
        }
        try {
            p.sup_d1 = sup_abs_d1(p.f, p.iv);
        } catch (const Error&) {
        }
        try {
            p.sup_d2 = sup_abs_d2(p.f, p.iv);
        } catch (const Error&) {
        }
    });

    std::vector<Cell> cells;
    for (std::size_t ti = 0; ti < prepared.size(); ++ti) {
        const auto xs = uniform_points(prepared[ti].iv, c.x_points);
        for (const auto& eq : c.equations) {
            const auto& e = info(eq);
            std::vector<EquationParams> sets;
            switch (e.shape) {
            case ParamShape::None:
                sets.push_back({});
                break;
            case ParamShape::S:
                for (double s : c.s_grid) sets.push_back({s, {}, {}, {}});
                break;
            case ParamShape::SP:
                for (double s : c.s_grid)
                    for (double p : c.p_grid) sets.push_back({s, p, {}, {}});
                break;
            case ParamShape::SQ:
                for (double s : c.s_grid)
                    for (double q : c.q_grid) sets.push_back({s, {}, q, {}});
                break;
            }
            for (const auto& ep : sets) {
                auto key = c.hypothesis_gating ? hypothesis_key(ti, eq, ep) : std::nullopt;
                if (e.depends_on_x) {
                    for (double x : xs) cells.push_back(Cell{ti, eq, ep, x, key});
                } else {
                    cells.push_back(Cell{ti, eq, ep, std::nullopt, key});
                }
            }
        }
    }

    // Hypothesis checks, one per distinct (target, kind, s, q).
    std::map<HypKey, std::optional<bool>> hyp;
    for (const auto& cell : cells)
        if (cell.hyp) hyp.emplace(*cell.hyp, std::nullopt);
    std::vector<std::pair<const HypKey, std::optional<bool>>*> hyp_slots;
    for (auto& kv : hyp) hyp_slots.push_back(&kv);
    for_each_index(hyp_slots.size(), mode, [&](std::size_t i) {
        const HypKey& k = hyp_slots[i]->first;
        const auto& p = prepared[k.target];
        try {
            const auto g = abs_d2_power(p.f, k.q);
            const auto rep = k.concave ? check_s_concave(g, k.s, p.iv, c.convexity_grid)
                                       : check_s_convex(g, k.s, p.iv, c.convexity_grid);
            hyp_slots[i]->second = rep.satisfied();
        } catch (const Error&) {
            hyp_slots[i]->second = false;
        }
    });

    CampaignReport report;
    report.cells.resize(cells.size());
    for_each_index(cells.size(), mode, [&](std::size_t i) {
        const Cell& cell = cells[i];
        const Prepared& p = prepared[cell.target];
        CellResult& out = report.cells[i];
        out.function_id = p.f.id();
        out.interval = p.iv;
        out.equation_id = cell.equation;
        out.params = cell.params;
        out.x = cell.x;
        if (!p.mean) {
            out.skip_reason = p.mean_error;
            return;
        }
        BoundOptions opts;
        opts.quad = c.quad;
        opts.tolerance = c.tolerance;
        opts.convexity_grid = c.convexity_grid;
        opts.mean = p.mean;
        opts.sup_d1 = p.sup_d1;
        opts.sup_d2 = p.sup_d2;
        if (!c.hypothesis_gating)
            opts.hypothesis = true;
        else if (cell.hyp)
            opts.hypothesis = hyp.at(*cell.hyp).value_or(false);
        try {
            out.result = evaluate_equation(cell.equation, p.f, p.iv, cell.x, cell.params, opts);
        } catch (const Error& e) {
            out.skip_reason = e.what();
        }
    });

    for (std::size_t i = 0; i < report.cells.size(); ++i) {
        const auto& cell = report.cells[i];
        if (!cell.result) {
            ++report.skipped;
            continue;
        }
        ++report.evaluated;
        const auto& r = *cell.result;
        if (!r.hypothesis_checked) continue;
        ++report.hypothesis_satisfied;
        if (!r.holds) report.violations.push_back(i);
        if (r.rhs > 0.0) {
            auto [it, fresh] = report.tightness.emplace(r.equation_id, r.lhs / r.rhs);
            if (!fresh) it->second = std::max(it->second, r.lhs / r.rhs);
        }
    }
    return report;
}

}  // namespace ostrowski
