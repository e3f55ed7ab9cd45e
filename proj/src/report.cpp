#include "phasepoint/report.hpp"

#include <cmath>
#include <sstream>

#include "phasepoint/errors.hpp"

namespace phasepoint {

bool VerificationReport::pass() const {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

Check& VerificationReport::add(std::string name, bool pass, Json value, Json expected, double tolerance) {
  checks.push_back(Check{std::move(name), pass, std::move(value), std::move(expected), tolerance});
  return checks.back();
}

Check& VerificationReport::add_close(std::string name, double value, double expected, double tolerance) {
  return add(std::move(name), std::abs(value - expected) <= tolerance, value, expected, tolerance);
}

ReportFormat parse_format(std::string_view s) {
  if (s == "json") return ReportFormat::Json;
  if (s == "text") return ReportFormat::Text;
  throw Error(ErrorCode::UsageError, "format must be json or text");
}

Json to_json(const VerificationReport& report) {
  Json out;
  out["scenario"] = report.scenario;
  if (report.ctx) {
    out["ctx"] = {{"p", report.ctx->p}, {"n", report.ctx->n}, {"q", report.ctx->q}};
  } else {
    out["ctx"] = nullptr;
  }
  out["pass"] = report.pass();
  out["checks"] = Json::array();
  for (const auto& c : report.checks) {
    out["checks"].push_back(
        {{"name", c.name}, {"pass", c.pass}, {"value", c.value}, {"expected", c.expected}, {"tolerance", c.tolerance}});
  }
  out["runtime_ms"] = report.runtime_ms;
  out["version"] = report.version;
  return out;
}

namespace {

std::string brief(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

}  // namespace

std::string emit_report(const VerificationReport& report, ReportFormat format) {
  if (format == ReportFormat::Json) return to_json(report).dump(2) + "\n";
  std::ostringstream out;
  out << report.scenario;
  if (report.ctx) out << " (p=" << report.ctx->p << ", n=" << report.ctx->n << ", q=" << report.ctx->q << ")";
  out << ": " << (report.pass() ? "PASS" : "FAIL") << "\n";
  for (const bool want : {false, true}) {
    for (const auto& c : report.checks) {
      if (c.pass != want) continue;
      out << (c.pass ? "  ✓ " : "  ✗ ") << c.name << ": " << brief(c.value) << " (expected "
          << brief(c.expected);
      if (c.tolerance > 0.0) out << ", tol " << c.tolerance;
      out << ")\n";
    }
  }
  out << "runtime " << report.runtime_ms << " ms, version " << report.version << "\n";
  return out.str();
}

}  // namespace phasepoint
