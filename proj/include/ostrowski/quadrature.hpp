#pragma once

// Adaptive Simpson quadrature used as the numerical oracle for every integral
// in the library, plus the two closed-form moment integrals of the s-convex
// bound.

#include <functional>

#include "ostrowski/funcmodel.hpp"

namespace ostrowski {

struct QuadratureConfig {
    double abs_tol = 1e-11;
    int max_depth = 60;

    // Throws ParamError unless abs_tol > 0 and max_depth >= 10.
    void validate() const;
};

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;  // sum of Richardson panel estimates
    int panels = 0;
    bool max_depth_exceeded = false;  // value is still the best estimate
    bool lower_inset = false;         // f(a) was non-finite, started at a + eps
    bool upper_inset = false;
};

using Integrand = std::function<double(double)>;

// Globally adaptive Simpson: the panel with the largest error estimate is
// bisected until the summed estimate is <= abs_tol. Panel values carry the
// Richardson correction (S2 + (S2 - S1)/15) and are summed in left-to-right
// order, so results are reproducible bit-for-bit.
//
// A non-finite (or throwing) endpoint is replaced by a + 1e-12 (b - a)
// (resp. b - ...), flagged in the result. Non-finite interior samples throw
// NonFiniteValue.
QuadratureResult integrate(const Integrand& f, const Interval& iv,
                           const QuadratureConfig& cfg = {});

// Convenience: value only.
double integral(const Integrand& f, const Interval& iv, const QuadratureConfig& cfg = {});

// Integral over [0,1] of t^(s+2): 1/(s+3).
double moment_s2(double s);

// Integral over [0,1] of t^2 (1-t)^s: 2/((s+1)(s+2)(s+3)).
double moment_beta(double s);

}  // namespace ostrowski
