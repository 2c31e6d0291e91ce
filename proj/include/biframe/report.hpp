#ifndef BIFRAME_REPORT_HPP
#define BIFRAME_REPORT_HPP

#include <cstdint>
#include <string>

#include <json.hpp>

#include "biframe/biframe.hpp"
#include "biframe/multiplier.hpp"
#include "biframe/tensor.hpp"

namespace biframe {

/// Settings echoed into every report so a verdict is never separated from the
/// tolerance that produced it.
struct ReportSettings {
    double tol = 1e-10;
    std::uint64_t seed = 20240817;
    bool deterministic = false;
};

/// Stable envelope shared by all commands; see docs/report.schema.json.
nlohmann::json report_envelope(const std::string& command, const ReportSettings& settings,
                               nlohmann::json result);

nlohmann::json to_json(const BiframeReport& report);
nlohmann::json to_json(const LowerBoundCertificate& cert);
nlohmann::json to_json(const PerturbationCertificate& cert);
nlohmann::json to_json(const SandwichVerdict& verdict);

/// Throws Error if any numeric leaf of the report is non-finite.
void require_finite(const nlohmann::json& j);

} // namespace biframe

#endif
