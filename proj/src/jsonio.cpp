#include "salemscope/jsonio.hpp"

#include <cmath>

namespace salemscope {

namespace {

nlohmann::json coeff_strings(const IntPolynomial& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : p.coeffs()) arr.push_back(c.get_str());
    return arr;
}

nlohmann::json finite_or_null(double v) {
    if (std::isfinite(v)) return v;
    return nullptr;
}

}  // namespace

nlohmann::json to_json(const IntPolynomial& p) {
    return {{"degree", p.degree()}, {"coeffs", coeff_strings(p)}};
}

nlohmann::json to_json(const PowerPolyResult& r) {
    nlohmann::json traces = nlohmann::json::array();
    for (const auto& t : r.trace_sums) traces.push_back(t.get_str());
    return {{"n", r.n},
            {"degree", r.poly.degree()},
            {"coeffs", coeff_strings(r.poly)},
            {"trace_sums", traces}};
}

nlohmann::json to_json(const VieiraCheck& c) {
    return {{"l", c.l},
            {"lhs", c.lhs.get_str()},
            {"rhs_doubled", c.rhs_doubled.get_str()},
            {"satisfied", c.satisfied}};
}

nlohmann::json to_json(const BoundCheckRecord& r) {
    return {{"n", r.n},
            {"b_ok", r.b_ok},
            {"c_ok", r.c_ok},
            {"ratio", finite_or_null(r.ratio)},
            {"root_est", finite_or_null(r.root_est)}};
}

nlohmann::json to_json(const CertificateReport& r) {
    nlohmann::json bounds = nlohmann::json::array();
    for (const auto& b : r.bounds) bounds.push_back(to_json(b));
    nlohmann::json j{{"verdict", to_string(r.verdict)},
                     {"method", to_string(r.method)},
                     {"unimodular_count", r.unimodular_count},
                     {"roots_above_one", r.roots_above_one},
                     {"cyclotomic_free", r.cyclotomic_free},
                     {"tau_estimate", finite_or_null(r.tau_estimate)},
                     {"bounds", std::move(bounds)}};
    j["witness_n"] = r.witness_n ? nlohmann::json(*r.witness_n) : nlohmann::json(nullptr);
    j["failure_reason"] =
        r.failure_reason.empty() ? nlohmann::json(nullptr) : nlohmann::json(r.failure_reason);
    return j;
}

nlohmann::json to_json(const ProbEstimate& e) {
    return {{"d", e.d},
            {"method", to_string(e.method)},
            {"value", e.value},
            {"m", e.m},
            {"h", e.h},
            {"D", e.big_d},
            {"symmetry_factor", e.symmetry_factor},
            {"N_c", e.n_c},
            {"total", e.total},
            {"error_estimate", e.error_estimate}};
}

nlohmann::json to_json(const FrequencyResult& f) {
    return {{"from", f.n_from},
            {"to", f.n_to},
            {"hits", f.hits},
            {"frequency", f.frequency},
            {"salem_verified", f.salem_verified}};
}

}  // namespace salemscope
