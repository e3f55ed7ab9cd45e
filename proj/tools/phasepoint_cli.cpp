#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <omp.h>

#include <CLI11.hpp>

#include "phasepoint/errors.hpp"
#include "phasepoint/report.hpp"
#include "phasepoint/scenarios.hpp"

namespace {

using phasepoint::ErrorCode;

void apply_thread_cap() {
  const char* env = std::getenv("PHASEPOINT_THREADS");
  if (!env || !*env) return;
  char* end = nullptr;
  const long n = std::strtol(env, &end, 10);
  if (*end != '\0' || n < 1) {
    std::cerr << "ignoring PHASEPOINT_THREADS=" << env << "\n";
    return;
  }
  omp_set_num_threads(static_cast<int>(n));
}

bool is_usage_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::UsageError:
    case ErrorCode::FeasibilityError:
    case ErrorCode::OutOfRange:
    case ErrorCode::GroupTooLarge:
    case ErrorCode::NotDefinedForEvenPrime:
    case ErrorCode::ContextMismatch:
      return true;
    default:
      return false;
  }
}

void write_dump(const std::string& path, const phasepoint::ScenarioResult& result) {
  std::ofstream out(path);
  if (!out) throw phasepoint::Error(ErrorCode::UsageError, "cannot open dump file " + path);
  bool first = true;
  for (const auto& [label, m] : result.matrices) {
    if (!first) out << "\n";
    first = false;
    out << "# " << label << "\n" << phasepoint::dump(m);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Phase point operators, SIC frames and Clifford symmetry checks"};
  app.require_subcommand(1);

  phasepoint::ScenarioConfig cfg;
  std::string format = "text";
  std::string dump_path;
  double tol = 0.0;

  auto* verify = app.add_subcommand("verify", "Run a verification scenario");
  verify->add_option("scenario", cfg.scenario, "wigner | sic | supersymmetry | design | complement | lemma1 | lemma3")
      ->required()
      ->check(CLI::IsMember({"wigner", "sic", "supersymmetry", "design", "complement", "lemma1", "lemma3"}));
  verify->add_option("--p", cfg.p, "prime");
  verify->add_option("--n", cfg.n, "number of parties");
  verify->add_option("--t", cfg.t, "design order / copies");
  verify->add_option("--seed", cfg.seed, "seed for random states");
  verify->add_option("--tol", tol, "entry and trace tolerance (default 1e-8)");
  verify->add_option("--name", cfg.name, "SIC: tetrahedron | hesse | hoggar");
  verify->add_option("--frame", cfg.frame, "supersymmetry: wigner | tetrahedron | hesse | hoggar");
  verify->add_option("--dim", cfg.dim, "design: dimension (default p^n)");
  verify->add_option("--method", cfg.method, "design: potential | commutant");

  auto* zsig = app.add_subcommand("zsigmondy", "Primitive prime divisor of B^A - 1");
  zsig->add_option("B", cfg.base)->required();
  zsig->add_option("A", cfg.exponent)->required();

  for (auto* sub : {verify, zsig}) {
    sub->add_option("--format", format, "json | text")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--dump", dump_path, "write matrices to this file");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  if (zsig->parsed()) cfg.scenario = "zsigmondy";
  if (verify->count("--tol")) cfg.tol = tol;
  apply_thread_cap();

  try {
    const auto result = phasepoint::run_scenario(cfg);
    std::cout << phasepoint::emit_report(result.report, phasepoint::parse_format(format));
    if (!dump_path.empty()) write_dump(dump_path, result);
    return result.report.pass() ? 0 : 1;
  } catch (const phasepoint::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return is_usage_error(e.code()) ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
