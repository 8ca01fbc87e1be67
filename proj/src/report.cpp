#include "ostrowski/report.hpp"

#include <cmath>
#include <ostream>

#include "format.hpp"

namespace ostrowski {

namespace {

Json number_or_null(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

Json params_json(const EquationParams& p) {
    Json j = Json::object();
    j["s"] = p.s;
    if (p.p) j["p"] = *p.p;
    if (p.q) j["q"] = *p.q;
    if (p.M) j["M"] = *p.M;
    return j;
}

std::string csv_number(double v) { return detail::fmt(v); }

std::vector<Interval> intervals_from(const Json& arr) {
    std::vector<Interval> out;
    for (const auto& iv : arr) {
        if (!iv.is_array() || iv.size() != 2) throw ParamError("interval must be [a, b]");
        out.emplace_back(iv[0].get<double>(), iv[1].get<double>());
    }
    return out;
}

Json intervals_to(const std::vector<Interval>& ivs) {
    Json arr = Json::array();
    for (const auto& iv : ivs) arr.push_back({iv.a, iv.b});
    return arr;
}

}  // namespace

Json to_json(const BoundResult& r) {
    Json j;
    j["equation_id"] = r.equation_id;
    j["lhs"] = number_or_null(r.lhs);
    j["rhs"] = number_or_null(r.rhs);
    j["margin"] = number_or_null(r.margin);
    j["holds"] = r.holds;
    j["hypothesis_checked"] = r.hypothesis_checked;
    j["x"] = r.x ? Json(*r.x) : Json(nullptr);
    j["params"] = Json::object();
    for (const auto& [k, v] : r.params) j["params"][k] = number_or_null(v);
    if (!r.extras.empty()) {
        j["extras"] = Json::object();
        for (const auto& [k, v] : r.extras) j["extras"][k] = number_or_null(v);
    }
    if (!r.notes.empty()) j["notes"] = r.notes;
    return j;
}

Json to_json(const ConvexityReport& r) {
    Json j;
    j["verdict"] = r.satisfied() ? "Satisfied" : "Violated";
    j["worst_violation"] = r.worst_violation;
    if (r.witness)
        j["witness"] = {{"x", r.witness->x}, {"y", r.witness->y}, {"t", r.witness->t}};
    else
        j["witness"] = nullptr;
    j["samples"] = r.samples;
    j["slack"] = r.slack;
    return j;
}

Json to_json(const KernelEvaluation& k) {
    Json j;
    j["x"] = k.x;
    j["lhs_signed"] = k.lhs_signed;
    j["rhs_identity"] = k.rhs_identity;
    j["residual"] = k.residual;
    return j;
}

Json to_json(const CellResult& c) {
    Json j;
    j["function"] = c.function_id;
    j["interval"] = {c.interval.a, c.interval.b};
    j["equation_id"] = c.equation_id;
    j["params"] = params_json(c.params);
    j["x"] = c.x ? Json(*c.x) : Json(nullptr);
    if (c.result) {
        j["status"] = "evaluated";
        j["result"] = to_json(*c.result);
    } else {
        j["status"] = "skipped";
        j["reason"] = c.skip_reason;
    }
    return j;
}

Json to_json(const CampaignReport& r) {
    Json j;
    j["summary"] = {{"cells", r.cells.size()},
                    {"evaluated", r.evaluated},
                    {"skipped", r.skipped},
                    {"hypothesis_satisfied", r.hypothesis_satisfied},
                    {"violations", r.violations.size()}};
    j["tightness"] = Json::object();
    for (const auto& [k, v] : r.tightness) j["tightness"][k] = number_or_null(v);
    j["violations"] = Json::array();
    for (auto i : r.violations) j["violations"].push_back(to_json(r.cells[i]));
    j["results"] = Json::array();
    for (const auto& c : r.cells) j["results"].push_back(to_json(c));
    return j;
}

std::string csv_row(const BoundResult& r) {
    return (r.x ? csv_number(*r.x) : std::string()) + ',' + csv_number(r.lhs) + ',' +
           csv_number(r.rhs) + ',' + csv_number(r.margin) + ',' + (r.holds ? "true" : "false") +
           ',' + (r.hypothesis_checked ? "true" : "false");
}

std::string csv_row(const SweepRow& row) {
    if (!row.result) return csv_number(row.x) + ",,,,,";
    BoundResult r = *row.result;
    r.x = row.x;
    return csv_row(r);
}

void write_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
    os << kCsvHeader << '\n';
    for (const auto& row : rows) os << csv_row(row) << '\n';
}

VerificationCampaign campaign_from_json(const Json& j) {
    if (!j.is_object()) throw ParamError("campaign config must be a JSON object");
    VerificationCampaign c = VerificationCampaign::default_campaign();
    try {
        if (j.contains("intervals")) c.intervals = intervals_from(j.at("intervals"));
        if (j.contains("functions")) {
            c.functions.clear();
            for (const auto& f : j.at("functions")) {
                if (f.is_string()) {
                    c.functions.push_back({f.get<std::string>(), {}});
                } else {
                    CampaignTarget t{f.at("id").get<std::string>(), {}};
                    if (f.contains("intervals")) t.intervals = intervals_from(f.at("intervals"));
                    c.functions.push_back(std::move(t));
                }
            }
        }
        if (j.contains("s_grid")) c.s_grid = j.at("s_grid").get<std::vector<double>>();
        if (j.contains("p_grid")) c.p_grid = j.at("p_grid").get<std::vector<double>>();
        if (j.contains("q_grid")) c.q_grid = j.at("q_grid").get<std::vector<double>>();
        if (j.contains("x_points")) c.x_points = j.at("x_points").get<int>();
        if (j.contains("convexity_grid")) c.convexity_grid = j.at("convexity_grid").get<int>();
        if (j.contains("equations"))
            c.equations = j.at("equations").get<std::vector<std::string>>();
        if (j.contains("tolerance")) c.tolerance = j.at("tolerance").get<double>();
        if (j.contains("quad_tol")) c.quad.abs_tol = j.at("quad_tol").get<double>();
        if (j.contains("quad_depth")) c.quad.max_depth = j.at("quad_depth").get<int>();
        if (j.contains("hypothesis_gating"))
            c.hypothesis_gating = j.at("hypothesis_gating").get<bool>();
    } catch (const nlohmann::json::exception& e) {
        throw ParamError(std::string("campaign config: ") + e.what());
    }
    return c;
}

Json campaign_to_json(const VerificationCampaign& c) {
    Json j;
    j["functions"] = Json::array();
    for (const auto& t : c.functions) {
        if (t.intervals.empty())
            j["functions"].push_back(t.function_id);
        else
            j["functions"].push_back({{"id", t.function_id}, {"intervals", intervals_to(t.intervals)}});
    }
    j["intervals"] = intervals_to(c.intervals);
    j["s_grid"] = c.s_grid;
    j["p_grid"] = c.p_grid;
    j["q_grid"] = c.q_grid;
    j["x_points"] = c.x_points;
    j["convexity_grid"] = c.convexity_grid;
    j["equations"] = c.equations;
    j["tolerance"] = c.tolerance;
    j["quad_tol"] = c.quad.abs_tol;
    j["quad_depth"] = c.quad.max_depth;
    j["hypothesis_gating"] = c.hypothesis_gating;
    return j;
}

}  // namespace ostrowski
