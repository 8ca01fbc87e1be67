#include "ostrowski/means.hpp"

#include <cmath>
#include <utility>

#include "format.hpp"
#include "ostrowski/bounds.hpp"
#include "ostrowski/convexity.hpp"
#include "ostrowski/funcmodel.hpp"

namespace ostrowski {

namespace {

bool nearly_equal(double x, double y) {
    return std::abs(x - y) <= 1e-14 * std::max(std::abs(x), std::abs(y));
}

void require_positive(double x, double y) {
    if (!(x > 0.0 && y > 0.0 && std::isfinite(x) && std::isfinite(y)))
        throw DomainError("mean requires positive finite arguments");
}

}  // namespace

double arithmetic_mean(double x, double y) {
    if (!(x >= 0.0 && y >= 0.0)) throw DomainError("arithmetic mean requires x, y >= 0");
    return 0.5 * (x + y);
}

double identric_mean(double x, double y) {
    require_positive(x, y);
    if (nearly_equal(x, y)) return x;
    return std::exp((y * std::log(y) - x * std::log(x)) / (y - x) - 1.0);
}

double gen_log_mean(double x, double y, double p) {
    require_positive(x, y);
    if (std::abs(p) <= 1e-12 || std::abs(p + 1.0) <= 1e-12)
        throw ParamError("generalized log-mean undefined for p in {-1, 0}");
    if (nearly_equal(x, y)) return x;
    if (x > y) std::swap(x, y);
    // With r = ln(x/y) < 0:
    //   (y^(p+1) - x^(p+1)) / ((p+1)(y-x)) = y^p * [-expm1((p+1) r)/(p+1)] / [-expm1(r)]
    const double r = std::log(x / y);
    const double ratio = -std::expm1((p + 1.0) * r) / (p + 1.0);
    const double log_base = std::log(ratio) - std::log(-std::expm1(r));
    return std::exp(std::log(y) + log_base / p);
}

double log_mean_power(double a, double b, double s) {
    return std::pow(gen_log_mean(a, b, s), s);
}

void MeansInput::validate() const {
    if (!(a > 0.0 && std::isfinite(a))) throw DomainError("means input requires a > 0");
    if (!(b > a && std::isfinite(b))) throw DomainError("means input requires b > a");
    if (!(s > 0.0 && s <= 1.0)) throw ParamError("means input requires s in (0,1]");
    if (x && !(*x >= a && *x <= b)) throw DomainError("x must lie in [a,b]");
    SParams::make(s, p, q);
}

double MeansInput::point() const { return x ? *x : arithmetic_mean(a, b); }

BoundResult prop_power_bound(const MeansInput& in, PowerVariant variant, double tolerance) {
    in.validate();
    const Interval iv(in.a, in.b);
    const double s = in.s;
    const double x = in.point();
    const double A = arithmetic_mean(in.a, in.b);
    const auto f = FunctionSpec::power_s(s);
    const double M = sup_abs_d2(f, iv);

    const double lhs =
        std::abs(log_mean_power(in.a, in.b, s) - std::pow(x, s) + s * (x - A) * std::pow(x, s - 1.0));

    const double len = in.b - in.a;
    const double K = sconvex_constant(s);
    double rhs = 0.0, q = 1.0, midpoint = 0.0;
    const char* id = "ee1";
    std::map<std::string, double> extras;
    switch (variant) {
    case PowerVariant::EE1:
        rhs = bound_sconvex_M(x, iv, s, M, false);
        extras["rhs_relaxed"] = bound_sconvex_M(x, iv, s, M, true);
        midpoint = M * len * len / 8.0 * K;
        break;
    case PowerVariant::EE2: {
        id = "ee2";
        const auto params = SParams::make(s, in.p, in.q);
        const double p = params.p ? *params.p : (params.q ? *params.q / (*params.q - 1.0) : 0.0);
        if (!(p > 1.0)) throw ParamError("ee2 requires p > 1 (or q > 1)");
        q = p / (p - 1.0);
        rhs = bound_holder_M(x, iv, SParams::with_p(s, p), M);
        midpoint = M / (8.0 * std::pow(2.0 * p + 1.0, 1.0 / p)) *
                   std::pow(2.0 / (s + 1.0), 1.0 / q) * len * len;
        extras["p"] = p;
        break;
    }
    case PowerVariant::EE3:
        id = "ee3";
        if (!in.q) throw ParamError("ee3 requires q");
        q = *in.q;
        rhs = bound_powermean_M(x, iv, SParams::with_q(s, q), M);
        midpoint = M / 24.0 * std::pow(3.0 * K, 1.0 / q) * len * len;
        break;
    }

    const bool hyp = check_s_convex(abs_d2_power(f, q), s, iv).satisfied();
    auto r = make_bound_result(id, lhs, rhs, hyp, x, tolerance);
    r.params = {{"a", in.a}, {"b", in.b}, {"s", s}, {"q", q}, {"M", M}};
    if (extras.count("p")) {
        r.params["p"] = extras["p"];
        extras.erase("p");
    }
    r.extras = std::move(extras);
    if (x == A) r.extras["rhs_midpoint"] = midpoint;
    if (in.b > 1.0) r.notes.push_back("b > 1: outside the f:[0,1]->[0,1] setting of t^s");
    if (s == 1.0) r.notes.push_back("s = 1: t^s is affine and both sides vanish");
    return r;
}

BoundResult prop_log_identric(const MeansInput& in, double tolerance) {
    in.validate();
    double p = 0.0;
    if (in.p)
        p = *in.p;
    else if (in.q && *in.q > 1.0)
        p = *in.q / (*in.q - 1.0);
    else
        throw ParamError("p6 requires p > 1");
    const double q = p / (p - 1.0);
    const double a = in.a, b = in.b, s = in.s;

    const double lhs = std::abs(std::log(identric_mean(a, b)) - std::log(arithmetic_mean(a, b)));
    const double scale =
        std::pow(2.0, (s - 1.0) / q) * (b - a) * (b - a) / std::pow(2.0 * p + 1.0, 1.0 / p);
    const double bracket = 1.0 / ((3.0 * a + b) * (3.0 * a + b)) + 1.0 / ((a + 3.0 * b) * (a + 3.0 * b));
    const double rhs = scale * bracket;
    const double printed = scale * (-bracket);

    const Interval iv(a, b);
    const auto f = FunctionSpec::log_natural();
    const bool hyp = check_s_concave(abs_d2_power(f, q), s, iv).satisfied();

    auto r = make_bound_result("p6", lhs, rhs, hyp, arithmetic_mean(a, b), tolerance);
    r.params = {{"a", a}, {"b", b}, {"s", s}, {"p", p}, {"q", q}};
    r.extras["rhs_printed"] = printed;
    r.extras["printed_holds"] = (printed - lhs >= -tolerance * (1.0 + std::abs(printed))) ? 1.0 : 0.0;
    r.notes.push_back("printed bracket [-1/(3a+b)^2 - 1/(a+3b)^2] is negative; rhs uses |f''| = 1/t^2");
    if (!hyp) r.notes.push_back("|f''|^q = t^(-2q) failed the sampled s-concavity check");
    return r;
}

}  // namespace ostrowski
