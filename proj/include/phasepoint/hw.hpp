#pragma once

// Heisenberg-Weyl displacement operators in prime power dimension q = p^n.
//
// Basis vector |u_1 ... u_n> has index sum_j u_j p^{n-j} (party 1 most
// significant), matching kron(A_1, ..., A_n).

#include <vector>

#include "phasepoint/cmatrix.hpp"
#include "phasepoint/fieldvec.hpp"

namespace phasepoint {

// omega = e^{2 pi i / p}
cplx omega(int p);
// tau = -e^{pi i / p}
cplx tau(int p);
// omega^k, exact on the p-th roots of unity.
cplx omega_power(int p, long long k);
// tau^e computed exactly on the 2p-th roots of unity.
cplx tau_power(int p, long long e);

struct Displacement {
  FpVector label;
  CMatrix matrix;
};

/// D_mu = tau^{sum_j mu_j mu_{n+j}} prod_j X_j^{mu_j} Z_j^{mu_{n+j}}.
Displacement displacement(const FpVector& mu);

/// Smallest e in [0, 2p) with D_mu D_nu = tau^e D_{mu+nu} (entrywise within
/// tol::kEntry). Throws CompositionMismatch if no power of tau fits.
int displacement_product_exponent(const FpVector& mu, const FpVector& nu);

// All q^2 labels in lexicographic order, X block most significant.
std::vector<FpVector> hw_labels(const DimContext& ctx);

// X_j and Z_j for party j (0-based).
CMatrix shift_operator(const DimContext& ctx, int party);
CMatrix phase_operator(const DimContext& ctx, int party);
// {X_j, Z_j : j}; generates the HW group modulo phase.
std::vector<CMatrix> hw_generators(const DimContext& ctx);

// All q^2 displacement operators, indexed like hw_labels. Built once,
// read-only afterwards.
class DisplacementTable {
 public:
  explicit DisplacementTable(const DimContext& ctx);

  const DimContext& ctx() const noexcept { return ctx_; }
  std::size_t size() const noexcept { return ops_.size(); }
  const CMatrix& operator[](const FpVector& mu) const { return ops_.at(mu.index()); }
  const CMatrix& at(std::size_t index) const { return ops_.at(index); }
  const std::vector<FpVector>& labels() const noexcept { return labels_; }

 private:
  DimContext ctx_;
  std::vector<FpVector> labels_;
  std::vector<CMatrix> ops_;
};

}  // namespace phasepoint
