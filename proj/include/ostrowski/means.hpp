#pragma once

// Special means and the bounds they inherit from the Ostrowski-type
// inequalities when applied to f(t) = t^s and f(t) = ln t.

#include <optional>

#include "ostrowski/bound_result.hpp"
#include "ostrowski/quadrature.hpp"

namespace ostrowski {

// A(x, y) = (x + y) / 2, x, y >= 0.
double arithmetic_mean(double x, double y);

// I(x, y) = (1/e) (y^y / x^x)^(1/(y-x)), I(x, x) = x; evaluated in log space.
double identric_mean(double x, double y);

// L_p(x, y) = [(y^(p+1) - x^(p+1)) / ((p+1)(y-x))]^(1/p), L_p(x, x) = x.
// p = 0 and p = -1 are excluded (ParamError).
double gen_log_mean(double x, double y, double p);

// L_s(a, b)^s = (b^(s+1) - a^(s+1)) / ((s+1)(b-a)), the integral mean of t^s.
double log_mean_power(double a, double b, double s);

struct MeansInput {
    double a = 0.0;
    double b = 0.0;
    double s = 1.0;
    std::optional<double> x;  // defaults to A(a, b)
    std::optional<double> p;
    std::optional<double> q;

    // Checks 0 < a < b, s in (0,1], x in [a,b], p > 1, q >= 1, conjugacy.
    void validate() const;
    double point() const;  // x or A(a, b)
};

enum class PowerVariant { EE1, EE2, EE3 };

// |L_s^s - x^s + s (x - A) x^(s-1)| against the M-corollary with
// M = sup |(t^s)''| on [a,b]:
//   EE1 -> tight s-convex M-bound (ids "ee1"), relaxed form in extras
//   EE2 -> Hoelder M-bound (needs p or q > 1)  ("ee2")
//   EE3 -> power-mean M-bound (needs q)         ("ee3")
// At x = A the reduced midpoint right-hand side is stored in extras as
// "rhs_midpoint".
BoundResult prop_power_bound(const MeansInput& in, PowerVariant variant,
                             double tolerance = kDefaultTolerance);

// |ln I(a,b) - ln A(a,b)| against the midpoint s-concave bound for ln:
// rhs = 2^((s-1)/q) (b-a)^2 / (2p+1)^(1/p) [1/(3a+b)^2 + 1/(a+3b)^2].
// extras["rhs_printed"] holds the same expression with the bracket negated,
// which is negative and never bounds the left side.
BoundResult prop_log_identric(const MeansInput& in, double tolerance = kDefaultTolerance);

}  // namespace ostrowski
