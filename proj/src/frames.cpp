#include "phasepoint/frames.hpp"

#include <cmath>
#include <numbers>

#include "phasepoint/errors.hpp"
#include "phasepoint/hw.hpp"

namespace phasepoint {
namespace {

SicFiducial tetrahedron_candidate() {
  // Bloch vector (1, 1, 1)/sqrt(3)
  const double theta = std::acos(1.0 / std::sqrt(3.0));
  const double phi = std::numbers::pi / 4.0;
  return {2, {std::cos(theta / 2.0), std::polar(std::sin(theta / 2.0), phi)}, "tetrahedron"};
}

SicFiducial hoggar_candidate() {
  const double s = 1.0 / std::sqrt(6.0);
  const cplx i{0.0, 1.0};
  return {8, {s, 0.0, 0.0, s, 0.0, s, i * s, (1.0 + i) * s}, "hoggar"};
}

Eigen::VectorXcd as_vector(const SicFiducial& fid) {
  return Eigen::Map<const Eigen::VectorXcd>(fid.vector.data(), static_cast<Eigen::Index>(fid.vector.size()));
}

Eigen::MatrixXcd stacked(const OperatorFrame& frame) {
  const Eigen::Index n = static_cast<Eigen::Index>(frame.dim) * frame.dim;
  Eigen::MatrixXcd cols(n, static_cast<Eigen::Index>(frame.elements.size()));
  for (std::size_t j = 0; j < frame.elements.size(); ++j) {
    cols.col(static_cast<Eigen::Index>(j)) = frame.elements[j].eigen().reshaped();
  }
  return cols;
}

}  // namespace

std::string_view to_string(FrameKind kind) {
  switch (kind) {
    case FrameKind::WignerWootters: return "wigner-wootters";
    case FrameKind::Sic: return "sic";
    case FrameKind::Custom: return "custom";
  }
  return "custom";
}

OperatorFrame make_ww_frame(double a, double b, const PhasePointBasis& basis) {
  if (b == 0.0) throw Error(ErrorCode::DegenerateFrame, "b = 0 makes every element proportional to I");
  const int q = basis.ctx().q();
  OperatorFrame frame{q, {}, FrameKind::WignerWootters, a, b, "wigner"};
  frame.elements.reserve(basis.size());
  const CMatrix id = CMatrix::identity(q);
  for (const auto& v : basis.operators()) frame.elements.push_back(id * a + v * b);
  return frame;
}

OperatorFrame make_ww_frame(double a, double b, const DimContext& ctx) {
  return make_ww_frame(a, b, PhasePointBasis(ctx));
}

double fiducial_deviation(const SicFiducial& fid) {
  const DimContext ctx = context_for_dimension(fid.dim);
  const Eigen::VectorXcd psi = as_vector(fid);
  const double target = 1.0 / (fid.dim + 1.0);
  double worst = 0.0;
  for (const auto& mu : hw_labels(ctx)) {
    if (mu.is_zero()) continue;
    const cplx overlap = psi.dot(displacement(mu).matrix.eigen() * psi);
    worst = std::max(worst, std::abs(std::norm(overlap) - target));
  }
  return worst;
}

SicFiducial sic_fiducial(std::string_view name) {
  SicFiducial fid;
  if (name == "tetrahedron") {
    fid = tetrahedron_candidate();
  } else if (name == "hoggar") {
    fid = hoggar_candidate();
  } else {
    throw Error(ErrorCode::UsageError, "unknown fiducial '" + std::string(name) + "'");
  }
  if (std::abs(as_vector(fid).norm() - 1.0) > 1e-10) {
    throw Error(ErrorCode::FiducialInvalid, fid.name + " fiducial is not normalized");
  }
  const double dev = fiducial_deviation(fid);
  if (dev > 1e-6) {
    throw Error(ErrorCode::FiducialInvalid, fid.name + " overlaps deviate from 1/(d+1) by " + std::to_string(dev));
  }
  return fid;
}

OperatorFrame sic_projectors(const SicFiducial& fid) {
  const DimContext ctx = context_for_dimension(fid.dim);
  const Eigen::VectorXcd psi = as_vector(fid);
  OperatorFrame frame{fid.dim, {}, FrameKind::Sic, 0.0, 1.0, fid.name};
  for (const auto& mu : hw_labels(ctx)) {
    const Eigen::VectorXcd v = displacement(mu).matrix.eigen() * psi;
    frame.elements.emplace_back(Eigen::MatrixXcd(v * v.adjoint()));
  }
  return frame;
}

OperatorFrame hesse_from_wigner() {
  const PhasePointBasis basis(DimContext(3, 1));
  const CMatrix id = CMatrix::identity(3);
  OperatorFrame frame{3, {}, FrameKind::Sic, 0.0, 1.0, "hesse"};
  for (const auto& v : basis.operators()) frame.elements.push_back((id - v) * 0.5);
  return frame;
}

Eigen::MatrixXcd gram(const OperatorFrame& frame) {
  const Eigen::MatrixXcd cols = stacked(frame);
  return cols.adjoint() * cols;
}

OperatorFrame dual_frame(const OperatorFrame& frame) {
  if (frame.elements.empty()) throw Error(ErrorCode::DegenerateFrame, "empty frame");
  const Eigen::MatrixXcd cols = stacked(frame);
  const Eigen::MatrixXcd super = cols * cols.adjoint();
  if (numerical_rank(super) < super.rows()) {
    throw Error(ErrorCode::DegenerateFrame, "frame does not span the operator space");
  }
  const Eigen::MatrixXcd duals = super.partialPivLu().solve(cols);
  OperatorFrame out{frame.dim, {}, FrameKind::Custom, 0.0, 1.0, frame.name + "-dual"};
  out.elements.reserve(frame.elements.size());
  for (Eigen::Index j = 0; j < duals.cols(); ++j) {
    out.elements.emplace_back(Eigen::MatrixXcd(duals.col(j).reshaped(frame.dim, frame.dim)));
  }
  return out;
}

std::vector<cplx> expand_with_dual(const CMatrix& rho, const OperatorFrame& dual) {
  std::vector<cplx> c;
  c.reserve(dual.elements.size());
  for (const auto& g : dual.elements) c.push_back(hs_inner(g, rho));
  return c;
}

std::vector<cplx> expand(const CMatrix& rho, const OperatorFrame& frame) {
  return expand_with_dual(rho, dual_frame(frame));
}

CMatrix reconstruct(std::span<const cplx> coeffs, const OperatorFrame& frame) {
  if (coeffs.size() != frame.elements.size()) throw Error(ErrorCode::ShapeError, "one coefficient per element");
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(frame.dim, frame.dim);
  for (std::size_t j = 0; j < coeffs.size(); ++j) acc += coeffs[j] * frame.elements[j].eigen();
  return CMatrix(std::move(acc));
}

}  // namespace phasepoint
