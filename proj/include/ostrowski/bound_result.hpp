#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ostrowski {

// Default relative/absolute comparison tolerance: holds iff
// rhs - lhs >= -kDefaultTolerance * (1 + |rhs|).
inline constexpr double kDefaultTolerance = 1e-9;

// One evaluated inequality lhs <= rhs.
struct BoundResult {
    std::string equation_id;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;  // rhs - lhs
    bool holds = false;
    // True when the theorem's hypothesis was checked and found satisfied.
    bool hypothesis_checked = false;
    std::optional<double> x;
    // Parameters used (s, p, q, M, a, b, ...) and auxiliary values such as
    // alternative right-hand sides. Ordered so serialisation is stable.
    std::map<std::string, double> params;
    std::map<std::string, double> extras;
    std::vector<std::string> notes;
};

// Fills margin and holds from lhs/rhs.
inline BoundResult make_bound_result(std::string equation_id, double lhs, double rhs,
                                     bool hypothesis, std::optional<double> x = std::nullopt,
                                     double tolerance = kDefaultTolerance) {
    BoundResult r;
    r.equation_id = std::move(equation_id);
    r.lhs = lhs;
    r.rhs = rhs;
    r.margin = rhs - lhs;
    r.holds = r.margin >= -tolerance * (1.0 + (rhs < 0 ? -rhs : rhs));
    r.hypothesis_checked = hypothesis;
    r.x = x;
    return r;
}

}  // namespace ostrowski
