#include "ostrowski/bounds.hpp"

#include <cmath>

#include "format.hpp"
#include "ostrowski/kernels.hpp"

namespace ostrowski {

namespace {

double cube(double v) { return v * v * v; }

void require_inside(double x, const Interval& iv) {
    if (!iv.contains(x))
        throw DomainError("x=" + detail::fmt(x) + " outside [" + detail::fmt(iv.a) + ", " +
                          detail::fmt(iv.b) + "]");
}

void require_M(double M) {
    if (!(M >= 0.0 && std::isfinite(M))) throw ParamError("M must be finite and >= 0");
}

void require_s(double s) {
    if (!(s > 0.0 && s <= 1.0)) throw ParamError("s must lie in (0,1], got " + detail::fmt(s));
}

double holder_p(const SParams& params) {
    if (params.p) return *params.p;
    if (params.q && *params.q > 1.0) return *params.q / (*params.q - 1.0);
    throw ParamError("Hoelder bound needs p > 1");
}

double power_q(const SParams& params) {
    if (params.q) return *params.q;
    if (params.p) return *params.p / (*params.p - 1.0);
    return 1.0;
}

double abs_d2(const FunctionSpec& f, double t) { return std::abs(f.eval_d2(t)); }

double mean_of(const FunctionSpec& f, const Interval& iv, const BoundOptions& opts) {
    return opts.mean ? *opts.mean : integral_mean(f, iv, opts.quad);
}

double sup_d2_of(const FunctionSpec& f, const Interval& iv, const BoundOptions& opts) {
    return opts.sup_d2 ? *opts.sup_d2 : sup_abs_d2(f, iv);
}

double abs_functional(const FunctionSpec& f, double x, const Interval& iv,
                      const BoundOptions& opts) {
    return std::abs(ostrowski_functional(f, x, iv, opts.quad, mean_of(f, iv, opts)));
}

bool convex_hypothesis(const FunctionSpec& f, const Interval& iv, double s, double q,
                       const BoundOptions& opts) {
    if (opts.hypothesis) return *opts.hypothesis;
    return check_s_convex(abs_d2_power(f, q), s, iv, opts.convexity_grid).satisfied();
}

bool concave_hypothesis(const FunctionSpec& f, const Interval& iv, double s, double q,
                        const BoundOptions& opts) {
    if (opts.hypothesis) return *opts.hypothesis;
    return check_s_concave(abs_d2_power(f, q), s, iv, opts.convexity_grid).satisfied();
}

// Resolves M (auto -> sup |f''|) and whether it really dominates |f''|.
std::pair<double, bool> resolve_M(const FunctionSpec& f, const Interval& iv,
                                  const BoundOptions& opts, std::optional<double> M) {
    if (!M) return {sup_d2_of(f, iv, opts), true};
    require_M(*M);
    const double sup = sup_d2_of(f, iv, opts);
    return {*M, *M >= sup * (1.0 - 1e-12)};
}

void stamp(BoundResult& r, const Interval& iv) {
    r.params["a"] = iv.a;
    r.params["b"] = iv.b;
}

}  // namespace

double sconvex_constant(double s) {
    require_s(s);
    return (s * s + 3.0 * s + 4.0) / ((s + 1.0) * (s + 2.0) * (s + 3.0));
}

double cubic_sum_direct(double x, const Interval& iv) {
    return cube(x - iv.a) + cube(iv.b - x);
}

double cubic_sum_closed(double x, const Interval& iv) {
    const double len = iv.length();
    const double off = x - iv.midpoint();
    return len * (len * len / 4.0 + 3.0 * off * off);
}

double ostrowski_shape(double x, const Interval& iv) {
    const double len = iv.length();
    const double off = x - iv.midpoint();
    return len * len / 24.0 + off * off / 2.0;
}

// ---- classic / sup f'' ------------------------------------------------

BoundResult bound_classic(const FunctionSpec& f, double x, const Interval& iv,
                          const BoundOptions& opts) {
    require_inside(x, iv);
    const double sup1 = opts.sup_d1 ? *opts.sup_d1 : sup_abs_d1(f, iv);
    const double len = iv.length();
    const double off = x - iv.midpoint();
    const double rhs = (0.25 + off * off / (len * len)) * len * sup1;
    const double lhs = classic_lhs(f, x, iv, opts.quad, mean_of(f, iv, opts));
    auto r = make_bound_result("classic", lhs, rhs, opts.hypothesis.value_or(true), x,
                               opts.tolerance);
    stamp(r, iv);
    r.params["sup_d1"] = sup1;
    return r;
}

double cerone_rhs(double x, const Interval& iv, double M, bool relaxed) {
    require_M(M);
    const double len = iv.length();
    return relaxed ? len * len / 6.0 * M : ostrowski_shape(x, iv) * M;
}

BoundResult bound_cerone(const FunctionSpec& f, double x, const Interval& iv, bool relaxed,
                         const BoundOptions& opts, std::optional<double> M) {
    require_inside(x, iv);
    auto [m, dominates] = resolve_M(f, iv, opts, M);
    auto r = make_bound_result("e1.2", abs_functional(f, x, iv, opts), cerone_rhs(x, iv, m, relaxed),
                               opts.hypothesis.value_or(true) && dominates, x, opts.tolerance);
    stamp(r, iv);
    r.params["M"] = m;
    r.params["relaxed"] = relaxed ? 1.0 : 0.0;
    return r;
}

BoundResult bound_cerone_midpoint(const FunctionSpec& f, const Interval& iv,
                                  const BoundOptions& opts, std::optional<double> M) {
    auto [m, dominates] = resolve_M(f, iv, opts, M);
    const double len = iv.length();
    const double x = iv.midpoint();
    auto r = make_bound_result("e1.3", abs_functional(f, x, iv, opts), m * len * len / 24.0,
                               opts.hypothesis.value_or(true) && dominates, x, opts.tolerance);
    stamp(r, iv);
    r.params["M"] = m;
    return r;
}

// ---- s-convex |f''| ------------------------------------------------------

double sconvex_rhs(const FunctionSpec& f, double x, const Interval& iv, double s) {
    require_inside(x, iv);
    const double m2 = moment_s2(s);
    const double mb = moment_beta(s);
    const double dx = abs_d2(f, x);
    const double da = abs_d2(f, iv.a);
    const double db = abs_d2(f, iv.b);
    return ((dx * m2 + da * mb) * cube(x - iv.a) + (dx * m2 + db * mb) * cube(iv.b - x)) /
           (2.0 * iv.length());
}

BoundResult bound_sconvex(const FunctionSpec& f, double x, const Interval& iv, double s,
                          const BoundOptions& opts) {
    const double rhs = sconvex_rhs(f, x, iv, s);
    auto r = make_bound_result("e2.5", abs_functional(f, x, iv, opts), rhs,
                               convex_hypothesis(f, iv, s, 1.0, opts), x, opts.tolerance);
    stamp(r, iv);
    r.params["s"] = s;
    return r;
}

double holder_rhs(const FunctionSpec& f, double x, const Interval& iv, const SParams& params) {
    require_inside(x, iv);
    const double s = params.s;
    require_s(s);
    const double p = holder_p(params);
    const double q = p / (p - 1.0);
    const double hp = std::pow(1.0 / (2.0 * p + 1.0), 1.0 / p);
    const double dxq = std::pow(abs_d2(f, x), q);
    const double daq = std::pow(abs_d2(f, iv.a), q);
    const double dbq = std::pow(abs_d2(f, iv.b), q);
    const double len = iv.length();
    const double left = cube(x - iv.a) / (2.0 * len) * hp * std::pow((dxq + daq) / (s + 1.0), 1.0 / q);
    const double right = cube(iv.b - x) / (2.0 * len) * hp * std::pow((dxq + dbq) / (s + 1.0), 1.0 / q);
    return left + right;
}

BoundResult bound_holder(const FunctionSpec& f, double x, const Interval& iv,
                         const SParams& params, const BoundOptions& opts) {
    const double rhs = holder_rhs(f, x, iv, params);
    const double p = holder_p(params);
    const double q = p / (p - 1.0);
    auto r = make_bound_result("e2.7", abs_functional(f, x, iv, opts), rhs,
                               convex_hypothesis(f, iv, params.s, q, opts), x, opts.tolerance);
    stamp(r, iv);
    r.params["s"] = params.s;
    r.params["p"] = p;
    r.params["q"] = q;
    return r;
}

double powermean_rhs(const FunctionSpec& f, double x, const Interval& iv, const SParams& params) {
    require_inside(x, iv);
    const double s = params.s;
    const double q = power_q(params);
    if (!(q >= 1.0)) throw ParamError("power-mean bound needs q >= 1");
    const double m2 = moment_s2(s);
    const double mb = moment_beta(s);
    const double w = std::pow(1.0 / 3.0, 1.0 - 1.0 / q);
    const double dxq = std::pow(abs_d2(f, x), q);
    const double daq = std::pow(abs_d2(f, iv.a), q);
    const double dbq = std::pow(abs_d2(f, iv.b), q);
    const double len = iv.length();
    const double left = cube(x - iv.a) / (2.0 * len) * w * std::pow(dxq * m2 + daq * mb, 1.0 / q);
    const double right = cube(iv.b - x) / (2.0 * len) * w * std::pow(dxq * m2 + dbq * mb, 1.0 / q);
    return left + right;
}

BoundResult bound_powermean(const FunctionSpec& f, double x, const Interval& iv,
                            const SParams& params, const BoundOptions& opts) {
    const double rhs = powermean_rhs(f, x, iv, params);
    const double q = power_q(params);
    auto r = make_bound_result("teo3", abs_functional(f, x, iv, opts), rhs,
                               convex_hypothesis(f, iv, params.s, q, opts), x, opts.tolerance);
    stamp(r, iv);
    r.params["s"] = params.s;
    r.params["q"] = q;
    return r;
}

// ---- s-concave |f''|^q ---------------------------------------------------

double sconcave_rhs(const FunctionSpec& f, double x, const Interval& iv, const SParams& params) {
    require_inside(x, iv);
    const double s = params.s;
    require_s(s);
    const double p = holder_p(params);
    const double q = p / (p - 1.0);
    const double len = iv.length();
    const double left = x - iv.a;
    const double right = iv.b - x;
    // Zero prefactors skip their (possibly singular) midpoint evaluation.
    const double lterm = left > 0.0 ? cube(left) * abs_d2(f, 0.5 * (x + iv.a)) : 0.0;
    const double rterm = right > 0.0 ? cube(right) * abs_d2(f, 0.5 * (iv.b + x)) : 0.0;
    return std::pow(2.0, (s - 1.0) / q) / (std::pow(2.0 * p + 1.0, 1.0 / p) * len) *
           ((lterm + rterm) / 2.0);
}

BoundResult bound_sconcave(const FunctionSpec& f, double x, const Interval& iv,
                           const SParams& params, const BoundOptions& opts) {
    const double rhs = sconcave_rhs(f, x, iv, params);
    const double p = holder_p(params);
    const double q = p / (p - 1.0);
    auto r = make_bound_result("e2.9", abs_functional(f, x, iv, opts), rhs,
                               concave_hypothesis(f, iv, params.s, q, opts), x, opts.tolerance);
    stamp(r, iv);
    r.params["s"] = params.s;
    r.params["p"] = p;
    r.params["q"] = q;
    return r;
}

double sconcave_midpoint_rhs(const FunctionSpec& f, const Interval& iv, const SParams& params) {
    const double s = params.s;
    require_s(s);
    const double p = holder_p(params);
    const double q = p / (p - 1.0);
    const double len = iv.length();
    const double d1 = abs_d2(f, (3.0 * iv.a + iv.b) / 4.0);
    const double d3 = abs_d2(f, (iv.a + 3.0 * iv.b) / 4.0);
    return std::pow(2.0, (s - 1.0) / q) * len * len / (16.0 * std::pow(2.0 * p + 1.0, 1.0 / p)) *
           (d1 + d3);
}

BoundResult bound_sconcave_midpoint(const FunctionSpec& f, const Interval& iv,
                                    const SParams& params, const BoundOptions& opts) {
    const double x = iv.midpoint();
    const double p = holder_p(params);
    const double q = p / (p - 1.0);
    auto r = make_bound_result("e2.12", abs_functional(f, x, iv, opts),
                               sconcave_midpoint_rhs(f, iv, params),
                               concave_hypothesis(f, iv, params.s, q, opts), x, opts.tolerance);
    stamp(r, iv);
    r.params["s"] = params.s;
    r.params["p"] = p;
    r.params["q"] = q;
    return r;
}

// ---- M corollaries -------------------------------------------------------

double bound_sconvex_M(double x, const Interval& iv, double s, double M, bool relaxed) {
    require_M(M);
    const double k = sconvex_constant(s);
    const double len = iv.length();
    if (relaxed) return M * len * len / 2.0 * k;
    require_inside(x, iv);
    return 3.0 * M * k * ostrowski_shape(x, iv);
}

double bound_holder_M(double x, const Interval& iv, const SParams& params, double M) {
    require_M(M);
    require_inside(x, iv);
    require_s(params.s);
    const double p = holder_p(params);
    const double q = p / (p - 1.0);
    return 3.0 * M / std::pow(2.0 * p + 1.0, 1.0 / p) * std::pow(2.0 / (params.s + 1.0), 1.0 / q) *
           ostrowski_shape(x, iv);
}

double bound_powermean_M(double x, const Interval& iv, const SParams& params, double M) {
    require_M(M);
    require_inside(x, iv);
    const double q = power_q(params);
    return M * std::pow(3.0 * sconvex_constant(params.s), 1.0 / q) * ostrowski_shape(x, iv);
}

BoundResult bound_sconvex_with_M(const FunctionSpec& f, double x, const Interval& iv, double s,
                                 bool relaxed, const BoundOptions& opts, std::optional<double> M) {
    require_inside(x, iv);
    auto [m, dominates] = resolve_M(f, iv, opts, M);
    const bool hyp = convex_hypothesis(f, iv, s, 1.0, opts) && dominates;
    auto r = make_bound_result(relaxed ? "e2.6b" : "e2.6a", abs_functional(f, x, iv, opts),
                               bound_sconvex_M(x, iv, s, m, relaxed), hyp, x, opts.tolerance);
    stamp(r, iv);
    r.params["s"] = s;
    r.params["M"] = m;
    return r;
}

BoundResult bound_holder_with_M(const FunctionSpec& f, double x, const Interval& iv,
                                const SParams& params, const BoundOptions& opts,
                                std::optional<double> M) {
    auto [m, dominates] = resolve_M(f, iv, opts, M);
    const double p = holder_p(params);
    const double q = p / (p - 1.0);
    const bool hyp = convex_hypothesis(f, iv, params.s, q, opts) && dominates;
    auto r = make_bound_result("e2.8", abs_functional(f, x, iv, opts),
                               bound_holder_M(x, iv, params, m), hyp, x, opts.tolerance);
    stamp(r, iv);
    r.params["s"] = params.s;
    r.params["p"] = p;
    r.params["q"] = q;
    r.params["M"] = m;
    return r;
}

BoundResult bound_powermean_with_M(const FunctionSpec& f, double x, const Interval& iv,
                                   const SParams& params, const BoundOptions& opts,
                                   std::optional<double> M) {
    auto [m, dominates] = resolve_M(f, iv, opts, M);
    const double q = power_q(params);
    const bool hyp = convex_hypothesis(f, iv, params.s, q, opts) && dominates;
    auto r = make_bound_result("cor6", abs_functional(f, x, iv, opts),
                               bound_powermean_M(x, iv, params, m), hyp, x, opts.tolerance);
    stamp(r, iv);
    r.params["s"] = params.s;
    r.params["q"] = q;
    r.params["M"] = m;
    return r;
}

double midpoint_sconvex_M(const Interval& iv, double s, double M) {
    require_M(M);
    const double len = iv.length();
    return M * len * len / 2.0 * sconvex_constant(s);
}

double midpoint_holder_M(const Interval& iv, const SParams& params, double M) {
    require_M(M);
    require_s(params.s);
    const double p = holder_p(params);
    const double q = p / (p - 1.0);
    const double len = iv.length();
    return len * len / (8.0 * std::pow(2.0 * p + 1.0, 1.0 / p)) *
           std::pow(2.0 / (params.s + 1.0), 1.0 / q) * M;
}

double midpoint_powermean_M(const Interval& iv, const SParams& params, double M) {
    require_M(M);
    const double q = power_q(params);
    const double len = iv.length();
    return M * std::pow(3.0 * sconvex_constant(params.s), 1.0 / q) * len * len / 24.0;
}

// ---- perturbed trapezoid -------------------------------------------------

double perturbed_trapezoid_rhs(const Interval& iv, const SParams& params,
                               TrapezoidVariant variant, double M) {
    require_M(M);
    require_s(params.s);
    const double len = iv.length();
    if (variant == TrapezoidVariant::Holder) {
        const double p = holder_p(params);
        const double q = p / (p - 1.0);
        return cube(len) / (2.0 * std::pow(2.0 * p + 1.0, 1.0 / p)) *
               std::pow(2.0 / (params.s + 1.0), 1.0 / q) * M;
    }
    const double q = power_q(params);
    return cube(len) / 6.0 * std::pow(3.0 * sconvex_constant(params.s), 1.0 / q) * M;
}

BoundResult bound_perturbed_trapezoid(const FunctionSpec& f, const Interval& iv,
                                      const SParams& params, TrapezoidVariant variant,
                                      const BoundOptions& opts, std::optional<double> M) {
    auto [m, dominates] = resolve_M(f, iv, opts, M);
    const bool holder = variant == TrapezoidVariant::Holder;
    const double q = holder ? params.holder_q() : power_q(params);
    const bool hyp = convex_hypothesis(f, iv, params.s, q, opts) && dominates;
    const double lhs = perturbed_trapezoid_lhs(f, iv, opts.quad, mean_of(f, iv, opts));
    auto r = make_bound_result(holder ? "cor5" : "cor8", lhs,
                               perturbed_trapezoid_rhs(iv, params, variant, m), hyp,
                               std::nullopt, opts.tolerance);
    stamp(r, iv);
    r.params["s"] = params.s;
    if (holder) r.params["p"] = holder_p(params);
    r.params["q"] = q;
    r.params["M"] = m;
    return r;
}

}  // namespace ostrowski
