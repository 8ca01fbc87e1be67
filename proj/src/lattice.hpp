#pragma once

// Lattice setup shared by the parallel and reference convexity kernels.

#include <cmath>
#include <limits>
#include <optional>
#include <vector>

#include "format.hpp"
#include "ostrowski/convexity.hpp"

namespace ostrowski::detail {

struct Lattice {
    std::vector<double> nodes;   // x / y samples in [a,b]
    std::vector<double> g_node;  // g at nodes
    std::vector<double> t;       // t samples in [0,1]
    std::vector<double> ts;      // t^s
    std::vector<double> ts_c;    // (1-t)^s
    double slack = 0.0;
    double sign = 1.0;  // +1 convex, -1 concave
};

inline bool try_eval(const ScalarFn& g, double x, double& out) {
    try {
        out = g(x);
    } catch (const DomainError&) {
        return false;
    } catch (const NonFiniteValue&) {
        return false;
    }
    return std::isfinite(out);
}

inline double eval_interior(const ScalarFn& g, double x) {
    double v = g(x);
    if (!std::isfinite(v))
        throw NonFiniteValue("convexity check: g non-finite at " + fmt(x));
    return v;
}

inline Lattice build_lattice(const ScalarFn& g, double s, const Interval& iv, int grid_n,
                             std::optional<double> slack, bool concave) {
    if (grid_n < 3) throw ParamError("convexity grid_n must be >= 3");
    if (!(s > 0.0 && s <= 1.0)) throw ParamError("convexity check requires s in (0,1]");
    if (slack && !(*slack >= 0.0)) throw ParamError("convexity slack must be >= 0");

    double lo = iv.a, hi = iv.b, probe = 0.0;
    const double inset = 1e-9 * iv.length();
    if (!try_eval(g, lo, probe)) lo += inset;
    if (!try_eval(g, hi, probe)) hi -= inset;

    Lattice L;
    L.sign = concave ? -1.0 : 1.0;
    const int n = grid_n;
    L.nodes.resize(n);
    L.g_node.resize(n);
    L.t.resize(n);
    L.ts.resize(n);
    L.ts_c.resize(n);
    double gmax = 0.0;
    for (int i = 0; i < n; ++i) {
        L.nodes[i] = i == n - 1 ? hi : lo + (hi - lo) * i / (n - 1);
        L.g_node[i] = eval_interior(g, L.nodes[i]);
        gmax = std::max(gmax, std::abs(L.g_node[i]));
        const double tk = static_cast<double>(i) / (n - 1);
        L.t[i] = tk;
        L.ts[i] = std::pow(tk, s);
        L.ts_c[i] = std::pow(1.0 - tk, s);
    }
    L.slack = slack ? *slack : 1e-10 * (1.0 + gmax);
    return L;
}

// Signed defect at lattice index (i, j, k).
inline double defect(const ScalarFn& g, const Lattice& L, int i, int j, int k) {
    const double x = L.nodes[i], y = L.nodes[j], tk = L.t[k];
    const double z = tk * x + (1.0 - tk) * y;
    const double d = eval_interior(g, z) - L.ts[k] * L.g_node[i] - L.ts_c[k] * L.g_node[j];
    return L.sign * d;
}

inline ConvexityReport finish(const Lattice& L, double worst, int bi, int bj, int bk) {
    ConvexityReport r;
    const auto n = static_cast<long long>(L.nodes.size());
    r.samples = n * n * n;
    r.slack = L.slack;
    r.worst_violation = std::max(0.0, worst);
    if (worst > L.slack) {
        r.verdict = ConvexityReport::Verdict::Violated;
        r.witness = ConvexityReport::Witness{L.nodes[bi], L.nodes[bj], L.t[bk]};
    }
    return r;
}

}  // namespace ostrowski::detail
