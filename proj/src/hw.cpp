#include "phasepoint/hw.hpp"

#include <cmath>
#include <numbers>

#include "phasepoint/errors.hpp"

namespace phasepoint {
namespace {

// e^{2 pi i k / m}
cplx root_of_unity(long long k, long long m) {
  k %= m;
  if (k < 0) k += m;
  if (k == 0) return {1.0, 0.0};
  if (2 * k == m) return {-1.0, 0.0};
  if (4 * k == m) return {0.0, 1.0};
  if (4 * k == 3 * m) return {0.0, -1.0};
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(m);
  return {std::cos(angle), std::sin(angle)};
}

}  // namespace

cplx omega(int p) { return root_of_unity(1, p); }

cplx tau(int p) { return tau_power(p, 1); }

cplx omega_power(int p, long long k) { return root_of_unity(k, p); }

cplx tau_power(int p, long long e) {
  // tau = e^{2 pi i (p + 1) / (2p)}
  return root_of_unity(e * (p + 1), 2LL * p);
}

Displacement displacement(const FpVector& mu) {
  const DimContext& ctx = mu.ctx();
  const int n = ctx.n();
  const int p = ctx.p();
  const int q = ctx.q();
  long long tau_exp = 0;
  for (int j = 0; j < n; ++j) tau_exp += static_cast<long long>(mu[j]) * mu[n + j];

  // X^a Z^b |u> = omega^{b.u} |u + a>
  CMatrix m(q);
  std::vector<int> digits(static_cast<std::size_t>(n));
  for (int col = 0; col < q; ++col) {
    int rest = col;
    for (int j = n - 1; j >= 0; --j) {
      digits[static_cast<std::size_t>(j)] = rest % p;
      rest /= p;
    }
    long long omega_exp = 0;
    int row = 0;
    for (int j = 0; j < n; ++j) {
      const int u = digits[static_cast<std::size_t>(j)];
      omega_exp += static_cast<long long>(mu[n + j]) * u;
      row = row * p + (u + mu[j]) % p;
    }
    // tau^e omega^f = zeta_{2p}^{e (p+1) + 2 f}
    m(row, col) = root_of_unity(tau_exp * (p + 1) + 2 * omega_exp, 2LL * p);
  }
  return {mu, std::move(m)};
}

int displacement_product_exponent(const FpVector& mu, const FpVector& nu) {
  require_same_context(mu.ctx(), nu.ctx());
  const int p = mu.ctx().p();
  const CMatrix prod = displacement(mu).matrix * displacement(nu).matrix;
  const CMatrix sum = displacement(mu + nu).matrix;
  for (int e = 0; e < 2 * p; ++e) {
    if (max_abs_diff(prod, sum * tau_power(p, e)) <= tol::kEntry) return e;
  }
  throw Error(ErrorCode::CompositionMismatch,
              "D_" + to_string(mu) + " D_" + to_string(nu) + " is not a power of tau times D_{mu+nu}");
}

std::vector<FpVector> hw_labels(const DimContext& ctx) {
  const auto count = static_cast<std::size_t>(ctx.q()) * static_cast<std::size_t>(ctx.q());
  std::vector<FpVector> labels;
  labels.reserve(count);
  for (std::size_t i = 0; i < count; ++i) labels.push_back(FpVector::from_index(ctx, i));
  return labels;
}

CMatrix shift_operator(const DimContext& ctx, int party) {
  return displacement(FpVector::unit(ctx, party)).matrix;
}

CMatrix phase_operator(const DimContext& ctx, int party) {
  return displacement(FpVector::unit(ctx, ctx.n() + party)).matrix;
}

std::vector<CMatrix> hw_generators(const DimContext& ctx) {
  std::vector<CMatrix> gens;
  for (int j = 0; j < ctx.n(); ++j) {
    gens.push_back(shift_operator(ctx, j));
    gens.push_back(phase_operator(ctx, j));
  }
  return gens;
}

DisplacementTable::DisplacementTable(const DimContext& ctx) : ctx_(ctx), labels_(hw_labels(ctx)) {
  ops_.reserve(labels_.size());
  for (const auto& mu : labels_) ops_.push_back(displacement(mu).matrix);
}

}  // namespace phasepoint
