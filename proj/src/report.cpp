#include "biframe/report.hpp"

#include <cmath>

#include "biframe/errors.hpp"
#include "biframe/version.hpp"

namespace biframe {

using nlohmann::json;

json report_envelope(const std::string& command, const ReportSettings& settings, json result) {
    json envelope = {{"tool", "biframe"},
                     {"version", BIFRAME_VERSION},
                     {"report_version", 1},
                     {"command", command},
                     {"settings",
                      {{"tol", settings.tol},
                       {"seed", settings.seed},
                       {"deterministic", settings.deterministic}}},
                     {"result", std::move(result)}};
    require_finite(envelope);
    return envelope;
}

json to_json(const BiframeReport& report) {
    json j = {{"is_bessel", report.is_bessel},
              {"is_biframe", report.is_biframe},
              {"lower", report.lower},
              {"upper", report.upper},
              {"hermitian_residual", report.hermitian_residual},
              {"tightness_gap", report.tightness_gap}};
    if (report.truncation_note) j["truncation_note"] = *report.truncation_note;
    return j;
}

json to_json(const LowerBoundCertificate& cert) {
    return {{"injectivity", cert.injectivity},
            {"implied_lower", cert.implied_lower},
            {"actual_lower", cert.actual_lower},
            {"holds", cert.holds}};
}

json to_json(const PerturbationCertificate& cert) {
    json j = {{"verdict", cert.hypothesis_ok ? "certified" : "rejected-hypothesis"},
              {"hypothesis_gap", cert.hypothesis_gap},
              {"implied_lower_ff", cert.implied_lower_ff},
              {"actual_lower_ff", cert.actual_lower_ff},
              {"holds", cert.holds}};
    if (cert.implied_lower_gg) {
        j["implied_lower_gg"] = *cert.implied_lower_gg;
        j["actual_lower_gg"] = cert.actual_lower_gg;
    }
    return j;
}

json to_json(const SandwichVerdict& verdict) {
    return {{"hypothesis_met", verdict.hypothesis_met},
            {"product_lower", verdict.product_lower},
            {"product_upper", verdict.product_upper},
            {"lambda_min", verdict.lambda_min},
            {"lambda_max", verdict.lambda_max},
            {"holds", verdict.holds}};
}

void require_finite(const json& j) {
    if (j.is_number_float()) {
        if (!std::isfinite(j.get<double>()))
            throw Error("report: non-finite numeric field");
        return;
    }
    if (j.is_object() || j.is_array())
        for (const auto& item : j) require_finite(item);
}

} // namespace biframe
