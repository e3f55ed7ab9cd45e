#pragma once

// Parity and phase point operators and the discrete Wigner function for odd
// prime power dimension.

#include <optional>
#include <vector>

#include "phasepoint/cmatrix.hpp"
#include "phasepoint/fieldvec.hpp"

namespace phasepoint {

// V_0 |u> = |-u>. Defined for every p.
CMatrix parity(const DimContext& ctx);

/// V_mu = D_mu V_0 D_mu^dagger. Throws NotDefinedForEvenPrime for p = 2 and
/// CompositionMismatch if the result differs from D_{2 mu} V_0 by more than a
/// global phase.
CMatrix phase_point(const FpVector& mu);

class PhasePointBasis {
 public:
  explicit PhasePointBasis(const DimContext& ctx);

  const DimContext& ctx() const noexcept { return ctx_; }
  std::size_t size() const noexcept { return ops_.size(); }
  const CMatrix& operator[](std::size_t index) const { return ops_.at(index); }
  const CMatrix& operator[](const FpVector& mu) const { return ops_.at(mu.index()); }
  const std::vector<CMatrix>& operators() const noexcept { return ops_; }
  const OperatorIndex& index() const noexcept { return index_; }

 private:
  DimContext ctx_;
  std::vector<CMatrix> ops_;
  OperatorIndex index_;
};

struct WignerFunction {
  DimContext ctx;
  std::vector<double> values;  // hw_labels order
};

/// W_mu = tr(rho V_mu) / q. Throws NotHermitian if rho is not Hermitian, if
/// its trace is off `expected_trace` by more than 1e-6 (when given) or if a
/// value has imaginary part above tol::kEntry.
WignerFunction wigner_transform(const CMatrix& rho, const PhasePointBasis& basis,
                                std::optional<double> expected_trace = std::nullopt);
WignerFunction wigner_transform(const CMatrix& rho, const DimContext& ctx,
                                std::optional<double> expected_trace = std::nullopt);

// sum_mu W_mu V_mu. Throws ShapeError unless W has q^2 values.
CMatrix wigner_reconstruct(const WignerFunction& w, const PhasePointBasis& basis);
CMatrix wigner_reconstruct(const WignerFunction& w, const DimContext& ctx);

/// mu -> nu with U V_mu U^dagger = V_nu exactly (no phase freedom), or
/// nullopt when some conjugate is not a phase point operator.
std::optional<std::vector<std::size_t>> covariance_permutation(const CMatrix& u, const PhasePointBasis& basis,
                                                               double tol = tol::kPermutation);

}  // namespace phasepoint
