#include "ostrowski/funcmodel.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>

#include "format.hpp"

namespace ostrowski {

Interval::Interval(double lo, double hi) : a(lo), b(hi) {
    if (!std::isfinite(lo) || !std::isfinite(hi))
        throw ParamError("interval endpoints must be finite");
    if (!(lo < hi))
        throw ParamError("interval requires a < b, got [" + detail::fmt(lo) + ", " +
                         detail::fmt(hi) + "]");
}

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_unit_s(double s, const char* what) {
    if (!(s > 0.0 && s <= 1.0))
        throw ParamError(std::string(what) + " requires s in (0,1], got " + detail::fmt(s));
}

double finite_or_throw(double v, double t) {
    if (!std::isfinite(v))
        throw NonFiniteValue("non-finite function value at t=" + detail::fmt(t));
    return v;
}

[[noreturn]] void below_domain(double t, double lo) {
    throw DomainError("t=" + detail::fmt(t) + " below domain minimum " + detail::fmt(lo));
}

[[noreturn]] void singular_at_zero() {
    throw NonFiniteValue("derivative singular at t=0");
}

double horner(const std::vector<double>& c, double t) {
    double acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + *it;
    return acc;
}

std::vector<double> differentiate(const std::vector<double>& c) {
    std::vector<double> d;
    for (std::size_t k = 1; k < c.size(); ++k) d.push_back(static_cast<double>(k) * c[k]);
    return d;
}

std::vector<double> parse_numbers(std::string_view args, std::string_view id) {
    std::vector<double> out;
    if (args.empty()) return out;
    std::size_t pos = 0;
    while (true) {
        auto comma = args.find(',', pos);
        auto token = args.substr(pos, comma == std::string_view::npos ? args.npos : comma - pos);
        while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
        while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
        double v = 0.0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
        if (token.empty() || ec != std::errc() || ptr != token.data() + token.size())
            throw ParamError("malformed number '" + std::string(token) + "' in function id '" +
                             std::string(id) + "'");
        out.push_back(v);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

std::string join(const std::vector<double>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += detail::fmt(v[i]);
    }
    return s;
}

}  // namespace

FunctionSpec FunctionSpec::polynomial(std::vector<double> coefficients) {
    if (coefficients.empty()) throw ParamError("polynomial needs at least one coefficient");
    for (double c : coefficients)
        if (!std::isfinite(c)) throw ParamError("polynomial coefficients must be finite");
    auto d1 = differentiate(coefficients);
    auto d2 = differentiate(d1);
    return FunctionSpec(family::Polynomial{std::move(coefficients), std::move(d1), std::move(d2)});
}

FunctionSpec FunctionSpec::power_s(double s) {
    require_unit_s(s, "pow_s");
    return FunctionSpec(family::PowerS{s});
}

FunctionSpec FunctionSpec::breckner(double u, double v, double w, double s) {
    if (!(s > 0.0 && s < 1.0))
        throw ParamError("breckner requires s in (0,1), got " + detail::fmt(s));
    if (!(v >= 0.0)) throw ParamError("breckner requires v >= 0");
    if (!(w >= 0.0 && w <= u)) throw ParamError("breckner requires 0 <= w <= u");
    return FunctionSpec(family::Breckner{u, v, w, s});
}

FunctionSpec FunctionSpec::log_natural() { return FunctionSpec(family::LogNatural{}); }
FunctionSpec FunctionSpec::exponential() { return FunctionSpec(family::Exponential{}); }

FunctionSpec FunctionSpec::scaled_power_s(double c, double s) {
    require_unit_s(s, "cpow");
    if (!std::isfinite(c)) throw ParamError("cpow scale must be finite");
    return FunctionSpec(family::ScaledPowerS{c, s});
}

FunctionSpec FunctionSpec::parse(std::string_view id) {
    auto colon = id.find(':');
    auto name = id.substr(0, colon);
    auto args = colon == std::string_view::npos ? std::string_view{} : id.substr(colon + 1);
    auto nums = parse_numbers(args, id);
    auto expect = [&](std::size_t n) {
        if (nums.size() != n)
            throw ParamError("function id '" + std::string(id) + "' expects " +
                             std::to_string(n) + " parameter(s)");
    };
    if (name == "poly") return polynomial(std::move(nums));
    if (name == "pow_s") {
        expect(1);
        return power_s(nums[0]);
    }
    if (name == "breckner") {
        expect(4);
        return breckner(nums[0], nums[1], nums[2], nums[3]);
    }
    if (name == "cpow") {
        expect(2);
        return scaled_power_s(nums[0], nums[1]);
    }
    if (name == "ln") {
        expect(0);
        return log_natural();
    }
    if (name == "exp") {
        expect(0);
        return exponential();
    }
    throw ParamError("unknown function family '" + std::string(name) + "'");
}

std::string FunctionSpec::id() const {
    return std::visit(
        overloaded{
            [](const family::Polynomial& p) { return "poly:" + join(p.coefficients); },
            [](const family::PowerS& p) { return "pow_s:" + detail::fmt(p.s); },
            [](const family::Breckner& p) {
                return "breckner:" + join({p.u, p.v, p.w, p.s});
            },
            [](const family::LogNatural&) { return std::string("ln"); },
            [](const family::Exponential&) { return std::string("exp"); },
            [](const family::ScaledPowerS& p) { return "cpow:" + join({p.c, p.s}); },
        },
        family_);
}

double FunctionSpec::domain_min() const {
    constexpr double inf = std::numeric_limits<double>::infinity();
    return std::visit(overloaded{
                          [&](const family::Polynomial&) { return -inf; },
                          [&](const family::Exponential&) { return -inf; },
                          [](const auto&) { return 0.0; },
                      },
                      family_);
}

bool FunctionSpec::domain_min_inclusive() const {
    return !std::holds_alternative<family::LogNatural>(family_);
}

double FunctionSpec::eval(double t) const {
    const double lo = domain_min();
    if (t < lo || (t == lo && !domain_min_inclusive()) || std::isnan(t)) below_domain(t, lo);
    double v = std::visit(
        overloaded{
            [&](const family::Polynomial& p) { return horner(p.coefficients, t); },
            [&](const family::PowerS& p) { return std::pow(t, p.s); },
            [&](const family::Breckner& p) { return t == 0.0 ? p.u : p.v * std::pow(t, p.s) + p.w; },
            [&](const family::LogNatural&) { return std::log(t); },
            [&](const family::Exponential&) { return std::exp(t); },
            [&](const family::ScaledPowerS& p) { return p.c * std::pow(t, p.s + 2.0); },
        },
        family_);
    return finite_or_throw(v, t);
}

double FunctionSpec::eval_d1(double t) const {
    const double lo = domain_min();
    if (t < lo || (t == lo && !domain_min_inclusive()) || std::isnan(t)) below_domain(t, lo);
    double v = std::visit(
        overloaded{
            [&](const family::Polynomial& p) { return horner(p.d1, t); },
            [&](const family::PowerS& p) {
                if (t == 0.0) {
                    if (p.s == 1.0) return 1.0;
                    singular_at_zero();
                }
                return p.s * std::pow(t, p.s - 1.0);
            },
            [&](const family::Breckner& p) {
                if (t == 0.0) {
                    if (p.v == 0.0 && p.u == p.w) return 0.0;
                    singular_at_zero();
                }
                return p.v * p.s * std::pow(t, p.s - 1.0);
            },
            [&](const family::LogNatural&) { return 1.0 / t; },
            [&](const family::Exponential&) { return std::exp(t); },
            [&](const family::ScaledPowerS& p) {
                return p.c * (p.s + 2.0) * std::pow(t, p.s + 1.0);
            },
        },
        family_);
    return finite_or_throw(v, t);
}

double FunctionSpec::eval_d2(double t) const {
    const double lo = domain_min();
    if (t < lo || (t == lo && !domain_min_inclusive()) || std::isnan(t)) below_domain(t, lo);
    double v = std::visit(
        overloaded{
            [&](const family::Polynomial& p) {
                return horner(p.d2, t);
            },
            [&](const family::PowerS& p) {
                if (t == 0.0) {
                    if (p.s == 1.0) return 0.0;
                    singular_at_zero();
                }
                return p.s * (p.s - 1.0) * std::pow(t, p.s - 2.0);
            },
            [&](const family::Breckner& p) {
                if (t == 0.0) {
                    if (p.v == 0.0 && p.u == p.w) return 0.0;
                    singular_at_zero();
                }
                return p.v * p.s * (p.s - 1.0) * std::pow(t, p.s - 2.0);
            },
            [&](const family::LogNatural&) { return -1.0 / (t * t); },
            [&](const family::Exponential&) { return std::exp(t); },
            [&](const family::ScaledPowerS& p) {
                return p.c * (p.s + 2.0) * (p.s + 1.0) * std::pow(t, p.s);
            },
        },
        family_);
    return finite_or_throw(v, t);
}

namespace {

template <class G>
double sup_abs(G&& g, const Interval& iv, int grid_points) {
    if (grid_points < 2) throw ParamError("sup estimator needs at least 2 grid points");
    const int n = grid_points;
    const double h = iv.length() / (n - 1);
    auto node = [&](int i) { return i == n - 1 ? iv.b : iv.a + h * i; };

    int best = 0;
    double best_val = -1.0;
    for (int i = 0; i < n; ++i) {
        double v = std::abs(g(node(i)));
        if (!std::isfinite(v)) throw NonFiniteValue("|derivative| unbounded on interval");
        if (v > best_val) {
            best_val = v;
            best = i;
        }
    }

    // Golden-section maximisation on the two grid cells around the best node.
    double lo = node(best > 0 ? best - 1 : 0);
    double hi = node(best < n - 1 ? best + 1 : n - 1);
    constexpr double inv_phi = 0.6180339887498949;
    double c = hi - inv_phi * (hi - lo);
    double d = lo + inv_phi * (hi - lo);
    double fc = std::abs(g(c));
    double fd = std::abs(g(d));
    while (hi - lo > 1e-10 * (1.0 + std::abs(lo) + std::abs(hi))) {
        if (fc > fd) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - inv_phi * (hi - lo);
            fc = std::abs(g(c));
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + inv_phi * (hi - lo);
            fd = std::abs(g(d));
        }
    }
    double refined = std::max({fc, fd, std::abs(g(0.5 * (lo + hi)))});
    if (!std::isfinite(refined)) throw NonFiniteValue("|derivative| unbounded on interval");
    return std::max(best_val, refined);
}

}  // namespace

double sup_abs_d2(const FunctionSpec& f, const Interval& iv, int grid_points) {
    return sup_abs([&](double t) { return f.eval_d2(t); }, iv, grid_points);
}

double sup_abs_d1(const FunctionSpec& f, const Interval& iv, int grid_points) {
    return sup_abs([&](double t) { return f.eval_d1(t); }, iv, grid_points);
}

}  // namespace ostrowski
