#pragma once

// Verification reports and their json / text rendering.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace phasepoint {

inline constexpr std::string_view kVersion = "0.1.0";

using Json = nlohmann::ordered_json;

struct Check {
  std::string name;
  bool pass = false;
  Json value;
  Json expected;
  double tolerance = 0.0;
};

struct ReportContext {
  int p = 0;
  int n = 0;
  int q = 0;
};

struct VerificationReport {
  std::string scenario;
  std::optional<ReportContext> ctx;
  std::vector<Check> checks;
  double runtime_ms = 0.0;
  std::string version{kVersion};

  bool pass() const;
  Check& add(std::string name, bool pass, Json value, Json expected, double tolerance = 0.0);
  // Numeric comparison |value - expected| <= tolerance.
  Check& add_close(std::string name, double value, double expected, double tolerance);
};

enum class ReportFormat { Json, Text };

// "json" or "text"; UsageError otherwise.
ReportFormat parse_format(std::string_view s);

// Keys in the order scenario, ctx, pass, checks, runtime_ms, version.
Json to_json(const VerificationReport& report);
// Text mode lists failed checks first.
std::string emit_report(const VerificationReport& report, ReportFormat format);

}  // namespace phasepoint
