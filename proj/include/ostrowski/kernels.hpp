#pragma once

// The Ostrowski functional
//     F(x) = (1/(b-a)) int_a^b f - f(x) + (x - (a+b)/2) f'(x)
// and its integral representation through f'':
//     F(x) = (x-a)^3/(2(b-a)) int_0^1 t^2 f''(t x + (1-t) a) dt
//          + (b-x)^3/(2(b-a)) int_0^1 t^2 f''(t x + (1-t) b) dt.

#include <optional>

#include "ostrowski/funcmodel.hpp"
#include "ostrowski/quadrature.hpp"

namespace ostrowski {

struct KernelEvaluation {
    double x = 0.0;
    double lhs_signed = 0.0;    // F(x) from the direct definition
    double rhs_identity = 0.0;  // F(x) from the f'' representation
    double residual = 0.0;      // |lhs_signed - rhs_identity|
};

// (1/(b-a)) int_a^b f via the quadrature oracle.
double integral_mean(const FunctionSpec& f, const Interval& iv, const QuadratureConfig& cfg = {});

// Signed F(x). Pass a precomputed integral mean to skip the quadrature when
// sweeping x over a fixed (f, [a,b]).
double ostrowski_functional(const FunctionSpec& f, double x, const Interval& iv,
                            const QuadratureConfig& cfg = {},
                            std::optional<double> mean = std::nullopt);

// Right side of the identity. Terms with a zero cubic prefactor (x = a or
// x = b) are skipped without evaluating their integral.
double lemma1_rhs(const FunctionSpec& f, double x, const Interval& iv,
                  const QuadratureConfig& cfg = {});

KernelEvaluation identity_residual(const FunctionSpec& f, double x, const Interval& iv,
                                   const QuadratureConfig& cfg = {});

// |f(x) - (1/(b-a)) int_a^b f|.
double classic_lhs(const FunctionSpec& f, double x, const Interval& iv,
                   const QuadratureConfig& cfg = {}, std::optional<double> mean = std::nullopt);

// |int_a^b f - (b-a)/2 (f(a) + f(b)) + (b-a)^2/4 (f'(b) - f'(a))|.
double perturbed_trapezoid_lhs(const FunctionSpec& f, const Interval& iv,
                               const QuadratureConfig& cfg = {},
                               std::optional<double> mean = std::nullopt);

}  // namespace ostrowski
