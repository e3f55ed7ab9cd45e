#pragma once

// Operator frames: Wigner-Wootters frames a I + b V_mu, HW-covariant SIC
// frames, Gram matrices, duals and frame expansions.

#include <string>
#include <string_view>
#include <vector>

#include "phasepoint/cmatrix.hpp"
#include "phasepoint/fieldvec.hpp"
#include "phasepoint/wigner.hpp"

namespace phasepoint {

enum class FrameKind { WignerWootters, Sic, Custom };

std::string_view to_string(FrameKind kind);

struct OperatorFrame {
  int dim = 0;
  std::vector<CMatrix> elements;
  FrameKind kind = FrameKind::Custom;
  // element_j = a I + b (V_j or Pi_j) for the structured kinds
  double a = 0.0;
  double b = 1.0;
  std::string name;
};

// Throws DegenerateFrame when b == 0.
OperatorFrame make_ww_frame(double a, double b, const PhasePointBasis& basis);
OperatorFrame make_ww_frame(double a, double b, const DimContext& ctx);

struct SicFiducial {
  int dim = 0;
  std::vector<cplx> vector;  // unit norm
  std::string name;
};

// max over mu != 0 of | |<psi|D_mu|psi>|^2 - 1/(d+1) |
double fiducial_deviation(const SicFiducial& fid);

/// "tetrahedron" (d = 2) or "hoggar" (d = 8). The stored vector is checked
/// against the HW overlap condition on every call; FiducialInvalid if it
/// fails within 1e-6. Unknown names throw UsageError.
SicFiducial sic_fiducial(std::string_view name);

// D_mu |psi><psi| D_mu^dagger in hw_labels order.
OperatorFrame sic_projectors(const SicFiducial& fid);

// (I - V_mu) / 2 at p = 3, n = 1.
OperatorFrame hesse_from_wigner();

// G_jk = tr(F_j^dagger F_k)
Eigen::MatrixXcd gram(const OperatorFrame& frame);

/// G_j = S^{-1}(F_j) with S(X) = sum_j F_j tr(F_j^dagger X). Throws
/// DegenerateFrame when the frame does not span the operator space.
OperatorFrame dual_frame(const OperatorFrame& frame);

// c_j = tr(G_j^dagger rho) against the dual of `frame`.
std::vector<cplx> expand(const CMatrix& rho, const OperatorFrame& frame);
std::vector<cplx> expand_with_dual(const CMatrix& rho, const OperatorFrame& dual);
// sum_j c_j F_j
CMatrix reconstruct(std::span<const cplx> coeffs, const OperatorFrame& frame);

}  // namespace phasepoint
