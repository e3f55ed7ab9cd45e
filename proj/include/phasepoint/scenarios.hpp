#pragma once

// Named verification scenarios behind the command line tool.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "phasepoint/cmatrix.hpp"
#include "phasepoint/report.hpp"

namespace phasepoint {

struct ScenarioConfig {
  // wigner | sic | supersymmetry | design | complement | lemma1 | lemma3 | zsigmondy
  std::string scenario;
  int p = 3;
  int n = 1;
  int t = 2;
  std::uint64_t seed = 0;
  std::optional<double> tol;  // entry / trace tolerance, default 1e-8
  std::string name;           // sic: tetrahedron | hesse | hoggar
  std::string frame = "wigner";  // supersymmetry: wigner | tetrahedron | hesse | hoggar
  int dim = 0;                // design; 0 means p^n
  std::string method = "commutant";  // design: potential | commutant
  std::uint64_t base = 0;     // zsigmondy
  unsigned exponent = 0;
};

struct ScenarioResult {
  VerificationReport report;
  // Matrices written by --dump, each with a label.
  std::vector<std::pair<std::string, CMatrix>> matrices;
};

/// Runs the named scenario. Throws UsageError for unknown names and
/// FeasibilityError for sizes outside what the scenario can enumerate.
ScenarioResult run_scenario(const ScenarioConfig& config);

// G G^dagger / tr for a complex Gaussian G.
CMatrix random_density_matrix(int d, std::mt19937_64& rng);

}  // namespace phasepoint
