#include "ostrowski/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

#include "format.hpp"

namespace ostrowski {

void QuadratureConfig::validate() const {
    if (!(abs_tol > 0.0)) throw ParamError("quadrature abs_tol must be > 0");
    if (max_depth < 10) throw ParamError("quadrature max_depth must be >= 10");
}

namespace {

constexpr double kEndpointInset = 1e-12;
constexpr int kSeedPanels = 8;

struct Panel {
    double lo, hi;
    double f_lo, f_mid, f_hi;
    double coarse;  // Simpson on [lo,hi]
    double value;   // Richardson-corrected two-panel Simpson
    double error;
    double f_q1, f_q3;
    int depth;
};

struct ByError {
    bool operator()(const Panel& x, const Panel& y) const {
        if (x.error != y.error) return x.error < y.error;
        return x.lo > y.lo;  // ties: leftmost first, keeps the order deterministic
    }
};

class Sampler {
public:
    explicit Sampler(const Integrand& f) : f_(f) {}

    double operator()(double t) const {
        double v = f_(t);
        if (!std::isfinite(v))
            throw NonFiniteValue("integrand non-finite at interior point t=" + detail::fmt(t));
        return v;
    }

private:
    const Integrand& f_;
};

bool finite_endpoint(const Integrand& f, double t, double& out) {
    try {
        out = f(t);
    } catch (const DomainError&) {
        return false;
    } catch (const NonFiniteValue&) {
        return false;
    }
    return std::isfinite(out);
}

Panel make_panel(const Sampler& g, double lo, double hi, double f_lo, double f_mid, double f_hi,
                 double coarse, int depth) {
    Panel p{};
    p.lo = lo;
    p.hi = hi;
    p.f_lo = f_lo;
    p.f_mid = f_mid;
    p.f_hi = f_hi;
    p.coarse = coarse;
    p.depth = depth;
    const double mid = 0.5 * (lo + hi);
    const double h = hi - lo;
    p.f_q1 = g(0.5 * (lo + mid));
    p.f_q3 = g(0.5 * (mid + hi));
    const double left = h / 12.0 * (f_lo + 4.0 * p.f_q1 + f_mid);
    const double right = h / 12.0 * (f_mid + 4.0 * p.f_q3 + f_hi);
    const double fine = left + right;
    p.error = std::abs(fine - coarse) / 15.0;
    p.value = fine + (fine - coarse) / 15.0;
    return p;
}

}  // namespace

QuadratureResult integrate(const Integrand& f, const Interval& iv, const QuadratureConfig& cfg) {
    cfg.validate();
    QuadratureResult res;
    Sampler g(f);

    double lo = iv.a;
    double hi = iv.b;
    double f_lo = 0.0;
    double f_hi = 0.0;
    const double eps = kEndpointInset * iv.length();
    if (!finite_endpoint(f, lo, f_lo)) {
        lo += eps;
        f_lo = g(lo);
        res.lower_inset = true;
    }
    if (!finite_endpoint(f, hi, f_hi)) {
        hi -= eps;
        f_hi = g(hi);
        res.upper_inset = true;
    }

    // Seed with a uniform split so that a lucky zero error estimate on one
    // coarse panel cannot end the refinement early.
    std::priority_queue<Panel, std::vector<Panel>, ByError> active;
    std::vector<Panel> done;  // final panels, summed after refinement
    const double width = (hi - lo) / kSeedPanels;
    double active_error = 0.0;
    double left_val = f_lo;
    for (int i = 0; i < kSeedPanels; ++i) {
        const double p_lo = lo + width * i;
        const double p_hi = i == kSeedPanels - 1 ? hi : lo + width * (i + 1);
        const double right_val = i == kSeedPanels - 1 ? f_hi : g(p_hi);
        const double f_mid = g(0.5 * (p_lo + p_hi));
        const double coarse = (p_hi - p_lo) / 6.0 * (left_val + 4.0 * f_mid + right_val);
        Panel seed = make_panel(g, p_lo, p_hi, left_val, f_mid, right_val, coarse, 0);
        active_error += seed.error;
        active.push(seed);
        left_val = right_val;
    }
    double frozen_error = 0.0;  // from panels stuck at max_depth

    // Hard cap on work; with max_depth 60 the depth limit trips first in practice.
    constexpr std::size_t kMaxPanels = 1u << 20;
    while (!active.empty() && active_error + frozen_error > cfg.abs_tol) {
        if (frozen_error > cfg.abs_tol || active.size() + done.size() >= kMaxPanels) {
            res.max_depth_exceeded = true;
            break;
        }
        Panel p = active.top();
        active.pop();
        active_error -= p.error;
        if (p.depth >= cfg.max_depth) {
            res.max_depth_exceeded = true;
            frozen_error += p.error;
            done.push_back(p);
            continue;
        }
        const double m = 0.5 * (p.lo + p.hi);
        const double h = p.hi - p.lo;
        Panel left = make_panel(g, p.lo, m, p.f_lo, p.f_q1, p.f_mid,
                                h / 12.0 * (p.f_lo + 4.0 * p.f_q1 + p.f_mid), p.depth + 1);
        Panel right = make_panel(g, m, p.hi, p.f_mid, p.f_q3, p.f_hi,
                                 h / 12.0 * (p.f_mid + 4.0 * p.f_q3 + p.f_hi), p.depth + 1);
        active_error += left.error + right.error;
        active.push(left);
        active.push(right);
    }

    while (!active.empty()) {
        done.push_back(active.top());
        active.pop();
    }
    std::sort(done.begin(), done.end(), [](const Panel& x, const Panel& y) { return x.lo < y.lo; });

    // Neumaier-compensated sum in left-to-right order.
    double sum = 0.0, comp = 0.0, err = 0.0;
    for (const Panel& p : done) {
        double t = sum + p.value;
        if (std::abs(sum) >= std::abs(p.value))
            comp += (sum - t) + p.value;
        else
            comp += (p.value - t) + sum;
        sum = t;
        err += p.error;
    }
    res.value = sum + comp;
    res.error_estimate = err;
    res.panels = static_cast<int>(done.size());
    return res;
}

double integral(const Integrand& f, const Interval& iv, const QuadratureConfig& cfg) {
    return integrate(f, iv, cfg).value;
}

namespace {
void require_moment_s(double s) {
    if (!(s > 0.0 && s <= 1.0))
        throw ParamError("moment requires s in (0,1], got " + detail::fmt(s));
}
}  // namespace

double moment_s2(double s) {
    require_moment_s(s);
    return 1.0 / (s + 3.0);
}

double moment_beta(double s) {
    require_moment_s(s);
    return 2.0 / ((s + 1.0) * (s + 2.0) * (s + 3.0));
}

}  // namespace ostrowski
