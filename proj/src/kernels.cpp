#include "ostrowski/kernels.hpp"

#include <cmath>

#include "format.hpp"

namespace ostrowski {

namespace {

void require_inside(double x, const Interval& iv) {
    if (!iv.contains(x))
        throw DomainError("x=" + detail::fmt(x) + " outside [" + detail::fmt(iv.a) + ", " +
                          detail::fmt(iv.b) + "]");
}

// int_0^1 t^2 f''(t x + (1-t) e) dt
double weighted_d2_integral(const FunctionSpec& f, double x, double e,
                            const QuadratureConfig& cfg) {
    const Interval unit(0.0, 1.0);
    return integral(
        [&](double t) {
            const double u = t * x + (1.0 - t) * e;
            return t * t * f.eval_d2(u);
        },
        unit, cfg);
}

}  // namespace

double integral_mean(const FunctionSpec& f, const Interval& iv, const QuadratureConfig& cfg) {
    return integral([&](double t) { return f.eval(t); }, iv, cfg) / iv.length();
}

double ostrowski_functional(const FunctionSpec& f, double x, const Interval& iv,
                            const QuadratureConfig& cfg, std::optional<double> mean) {
    require_inside(x, iv);
    const double m = mean ? *mean : integral_mean(f, iv, cfg);
    const double offset = x - iv.midpoint();
    // f'(x) is only needed off the midpoint; at the midpoint it may be singular
    // without affecting F.
    const double slope_term = offset == 0.0 ? 0.0 : offset * f.eval_d1(x);
    return m - f.eval(x) + slope_term;
}

double lemma1_rhs(const FunctionSpec& f, double x, const Interval& iv,
                  const QuadratureConfig& cfg) {
    require_inside(x, iv);
    const double len = iv.length();
    double total = 0.0;
    const double left = x - iv.a;
    const double right = iv.b - x;
    if (left > 0.0)
        total += left * left * left / (2.0 * len) * weighted_d2_integral(f, x, iv.a, cfg);
    if (right > 0.0)
        total += right * right * right / (2.0 * len) * weighted_d2_integral(f, x, iv.b, cfg);
    return total;
}

KernelEvaluation identity_residual(const FunctionSpec& f, double x, const Interval& iv,
                                   const QuadratureConfig& cfg) {
    KernelEvaluation k;
    k.x = x;
    k.lhs_signed = ostrowski_functional(f, x, iv, cfg);
    k.rhs_identity = lemma1_rhs(f, x, iv, cfg);
    k.residual = std::abs(k.lhs_signed - k.rhs_identity);
    return k;
}

double classic_lhs(const FunctionSpec& f, double x, const Interval& iv,
                   const QuadratureConfig& cfg, std::optional<double> mean) {
    require_inside(x, iv);
    const double m = mean ? *mean : integral_mean(f, iv, cfg);
    return std::abs(f.eval(x) - m);
}

double perturbed_trapezoid_lhs(const FunctionSpec& f, const Interval& iv,
                               const QuadratureConfig& cfg, std::optional<double> mean) {
    const double len = iv.length();
    const double m = mean ? *mean : integral_mean(f, iv, cfg);
    const double trapezoid = len / 2.0 * (f.eval(iv.a) + f.eval(iv.b));
    const double correction = len * len / 4.0 * (f.eval_d1(iv.b) - f.eval_d1(iv.a));
    return std::abs(m * len - trapezoid + correction);
}

}  // namespace ostrowski
