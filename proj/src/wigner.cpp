#include "phasepoint/wigner.hpp"

#include <cmath>
#include <complex>

#include "phasepoint/errors.hpp"
#include "phasepoint/hw.hpp"

namespace phasepoint {
namespace {

std::vector<CMatrix> build_phase_points(const DimContext& ctx) {
  if (ctx.p() == 2) {
    throw Error(ErrorCode::NotDefinedForEvenPrime, "phase point operators need odd p");
  }
  std::vector<CMatrix> ops;
  const auto labels = hw_labels(ctx);
  ops.reserve(labels.size());
  for (const auto& mu : labels) ops.push_back(phase_point(mu));
  return ops;
}

}  // namespace

CMatrix parity(const DimContext& ctx) {
  CMatrix v(ctx.q());
  const int twon = ctx.two_n();
  for (int u = 0; u < ctx.q(); ++u) {
    // digits of u are the X block of a label with zero Z block
    std::vector<long long> entries(static_cast<std::size_t>(twon), 0);
    int rest = u;
    for (int j = ctx.n() - 1; j >= 0; --j) {
      entries[static_cast<std::size_t>(j)] = -(rest % ctx.p());
      rest /= ctx.p();
    }
    const FpVector neg(ctx, entries);
    std::size_t target = 0;
    for (int j = 0; j < ctx.n(); ++j) target = target * static_cast<std::size_t>(ctx.p()) + static_cast<std::size_t>(neg[j]);
    v(static_cast<int>(target), u) = 1.0;
  }
  return v;
}

CMatrix phase_point(const FpVector& mu) {
  const DimContext& ctx = mu.ctx();
  if (ctx.p() == 2) {
    throw Error(ErrorCode::NotDefinedForEvenPrime, "phase point operators need odd p");
  }
  const CMatrix v0 = parity(ctx);
  const CMatrix d = displacement(mu).matrix;
  CMatrix v = d * v0 * d.adjoint();
  const CMatrix alt = displacement(mu.scaled(2)).matrix * v0;
  // alt = c v for a unimodular c; read c off the largest entry of v
  Eigen::Index r = 0;
  Eigen::Index c = 0;
  v.eigen().cwiseAbs().maxCoeff(&r, &c);
  const cplx phase = alt(static_cast<int>(r), static_cast<int>(c)) / v(static_cast<int>(r), static_cast<int>(c));
  if (std::abs(std::abs(phase) - 1.0) > tol::kEntry || max_abs_diff(alt, v * phase) > tol::kEntry) {
    throw Error(ErrorCode::CompositionMismatch, "D_mu V_0 D_mu^dagger differs from D_{2mu} V_0 beyond phase");
  }
  return v;
}

PhasePointBasis::PhasePointBasis(const DimContext& ctx)
    : ctx_(ctx), ops_(build_phase_points(ctx)), index_(ops_) {}

WignerFunction wigner_transform(const CMatrix& rho, const PhasePointBasis& basis,
                                std::optional<double> expected_trace) {
  const DimContext& ctx = basis.ctx();
  if (rho.dim() != ctx.q()) throw Error(ErrorCode::ShapeError, "state dimension differs from q");
  if (!rho.is_hermitian()) throw Error(ErrorCode::NotHermitian, "wigner_transform needs a Hermitian operator");
  const cplx tr = rho.trace();
  if (expected_trace && std::abs(tr - *expected_trace) > 1e-6) {
    throw Error(ErrorCode::NotHermitian, "trace differs from the declared value");
  }
  WignerFunction w{ctx, {}};
  w.values.reserve(basis.size());
  const double q = ctx.q();
  for (const auto& v : basis.operators()) {
    // tr(rho V) = tr(V^dagger rho) for Hermitian V
    const cplx val = hs_inner(v, rho) / q;
    if (std::abs(val.imag()) > tol::kEntry) throw Error(ErrorCode::NotHermitian, "Wigner value is not real");
    w.values.push_back(val.real());
  }
  return w;
}

WignerFunction wigner_transform(const CMatrix& rho, const DimContext& ctx, std::optional<double> expected_trace) {
  return wigner_transform(rho, PhasePointBasis(ctx), expected_trace);
}

CMatrix wigner_reconstruct(const WignerFunction& w, const PhasePointBasis& basis) {
  require_same_context(w.ctx, basis.ctx());
  if (w.values.size() != basis.size()) throw Error(ErrorCode::ShapeError, "Wigner function needs q^2 values");
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(basis.ctx().q(), basis.ctx().q());
  for (std::size_t i = 0; i < basis.size(); ++i) acc += w.values[i] * basis[i].eigen();
  return CMatrix(std::move(acc));
}

CMatrix wigner_reconstruct(const WignerFunction& w, const DimContext& ctx) {
  if (w.values.size() != static_cast<std::size_t>(ctx.q()) * static_cast<std::size_t>(ctx.q())) {
    throw Error(ErrorCode::ShapeError, "Wigner function needs q^2 values");
  }
  return wigner_reconstruct(w, PhasePointBasis(ctx));
}

std::optional<std::vector<std::size_t>> covariance_permutation(const CMatrix& u, const PhasePointBasis& basis,
                                                               double tol) {
  if (u.dim() != basis.ctx().q()) throw Error(ErrorCode::ShapeError, "unitary dimension differs from q");
  if (!u.is_unitary()) throw Error(ErrorCode::NotUnitary, "covariance_permutation needs a unitary");
  return conjugation_permutation(u, basis.index(), basis.operators(), tol);
}

}  // namespace phasepoint
