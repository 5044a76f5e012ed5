#pragma once

// Weight spec parsing, step-function ingestion and report serialization.

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "weaknorm/norms.hpp"
#include "weaknorm/rearrangement.hpp"
#include "weaknorm/sharpness.hpp"
#include "weaknorm/weights.hpp"

namespace weaknorm {

/// Raised on malformed user input (weight specs, data files).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// "family:key=value,..." with family power | powerlog | powerloglog,
/// e.g. "power:p=2", "powerlog:p=2,q=2", "powerloglog:p=2,q=1,r=1".
Weight parse_weight_spec(std::string_view spec,
                         Admissibility admissibility = Admissibility::require_monotone);

/// CSV rows "value,mass" (optional header, '#' comments) or a JSON array of
/// {"value": v, "mass": m} objects. JSON is detected by a leading '['.
StepFunction parse_step_function(std::string_view text, bool normalize = false);
StepFunction read_step_function(const std::filesystem::path& path, bool normalize = false);

/// Round to 9 significant digits so the shortest round-trip form prints at
/// most 9 digits.
double round_sig9(double x);

/// Numbers rounded by round_sig9; non-finite values become null.
nlohmann::ordered_json json_number(double x);

/// {family, p, q, r}; absent parameters are null. Custom weights carry only
/// their label.
nlohmann::ordered_json to_json(const Weight& w);
nlohmann::ordered_json to_json(const GammaEstimate& estimate);
nlohmann::ordered_json to_json(const NormReport& report);
nlohmann::ordered_json to_json(const KappaReport& report);
nlohmann::ordered_json to_json(const ThetaSweep& sweep);

/// Fixed 9-significant-digit text for CSV cells; "inf"/"nan" spelled out.
std::string format_number(double x);

}  // namespace weaknorm
