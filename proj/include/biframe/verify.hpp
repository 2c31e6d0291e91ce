#ifndef BIFRAME_VERIFY_HPP
#define BIFRAME_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace biframe {

/// Outcome of one embedded verification check: the measured deviation, the
/// threshold it must stay under, and the verdict.
struct CheckResult {
    std::string id;
    std::string name;
    double measured = 0.0;
    double threshold = 0.0;
    bool pass = false;
};

struct VerifyOptions {
    double tol = 1e-10;
    std::uint64_t seed = 20240817;
    int instances = 100; // instances per randomized property suite
};

/// Runs the embedded corpus: the worked reference pairs (checks 1-5) and the
/// randomized identity suites (checks 6a-6g).
std::vector<CheckResult> verify_corpus(const VerifyOptions& options = {});

bool all_pass(const std::vector<CheckResult>& results);

nlohmann::json verify_report_json(const std::vector<CheckResult>& results,
                                  const VerifyOptions& options);

} // namespace biframe

#endif
