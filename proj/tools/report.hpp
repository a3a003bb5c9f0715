#pragma once

#include <iosfwd>
#include <string>

#include <nlohmann/json.hpp>

#include "frobkit/kernel.hpp"

namespace frobkit::cli {

using json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1.0";

enum ExitCode : int { kOk = 0, kVerifiedFailure = 1, kInputError = 2, kTruncation = 3, kInternal = 4 };

json graded_json(const GradedDims& d);
json algebra_json(const Algebra& a);
json axiom_json(const AxiomCheck& c);
json frobenius_json(const FrobeniusReport& r);
json obstruction_json(const ObstructionReport& r);

/// {"schema_version", "command", "data", "timing"}; only "timing" varies between runs.
json document(const std::string& command, json args, json data, double seconds);
json error_document(const std::string& command, json args, const std::string& kind, const std::string& message,
                    json extra = json::object());

/// Default cutoff: FROBKIT_MAX_DEGREE when set, else 4. Throws Error on a malformed value.
int default_cutoff();

/// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace frobkit::cli
