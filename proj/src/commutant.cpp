#include <cmath>
#include <optional>
#include <vector>

#include "phasepoint/cmatrix.hpp"
#include "phasepoint/errors.hpp"

namespace phasepoint {
namespace {

using RowMajor = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

struct Monomial {
  std::vector<int> target;  // row i has its nonzero in column target[i]
  std::vector<cplx> phase;
};

std::optional<Monomial> as_monomial(const Eigen::MatrixXcd& u) {
  const auto d = static_cast<int>(u.rows());
  Monomial m{std::vector<int>(static_cast<std::size_t>(d), -1), std::vector<cplx>(static_cast<std::size_t>(d))};
  std::vector<char> used(static_cast<std::size_t>(d), 0);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      if (std::abs(u(i, j)) <= 1e-9) continue;
      if (m.target[static_cast<std::size_t>(i)] >= 0 || used[static_cast<std::size_t>(j)]) return std::nullopt;
      m.target[static_cast<std::size_t>(i)] = j;
      m.phase[static_cast<std::size_t>(i)] = u(i, j);
      used[static_cast<std::size_t>(j)] = 1;
    }
    if (m.target[static_cast<std::size_t>(i)] < 0) return std::nullopt;
  }
  return m;
}

int checked_copy_dim(std::span<const CMatrix> gens, int copies) {
  if (gens.empty()) throw Error(ErrorCode::ShapeError, "need at least one generator");
  if (copies != 1 && copies != 2) throw Error(ErrorCode::OutOfRange, "copies must be 1 or 2");
  const int d = gens.front().dim();
  for (const auto& g : gens) {
    if (g.dim() != d) throw Error(ErrorCode::ShapeError, "generators differ in dimension");
    if (!g.is_unitary()) throw Error(ErrorCode::NotUnitary, "commutant generators must be unitary");
  }
  const int big = copies == 1 ? d : d * d;
  if (big > kMaxCommutantDim) throw Error(ErrorCode::OutOfRange, "d^t exceeds " + std::to_string(kMaxCommutantDim));
  return big;
}

// Orthonormal basis (columns, row-major vec) of the joint fixed space of
// X -> U X U^dagger over all monomial U.
Eigen::MatrixXcd monomial_fixed_space(const std::vector<Monomial>& monos, int dim) {
  const std::size_t n = static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim);
  if (monos.empty()) return Eigen::MatrixXcd::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  std::vector<cplx> value(n);
  std::vector<char> assigned(n, 0);
  std::vector<std::vector<std::size_t>> orbits;
  std::vector<std::size_t> queue;
  for (std::size_t root = 0; root < n; ++root) {
    if (assigned[root]) continue;
    bool consistent = true;
    queue.assign(1, root);
    assigned[root] = 1;
    value[root] = 1.0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::size_t pos = queue[head];
      const auto i = pos / static_cast<std::size_t>(dim);
      const auto j = pos % static_cast<std::size_t>(dim);
      for (const auto& m : monos) {
        // X[pi(i), pi(j)] = conj(u_i) u_j X[i, j]
        const std::size_t next = static_cast<std::size_t>(m.target[i]) * static_cast<std::size_t>(dim) +
                                 static_cast<std::size_t>(m.target[j]);
        const cplx v = value[pos] * std::conj(m.phase[i]) * m.phase[j];
        if (!assigned[next]) {
          assigned[next] = 1;
          value[next] = v;
          queue.push_back(next);
        } else if (std::abs(value[next] - v) > tol::kEntry) {
          consistent = false;
        }
      }
    }
    if (consistent) orbits.push_back(queue);
  }
  Eigen::MatrixXcd basis = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(orbits.size()));
  for (std::size_t c = 0; c < orbits.size(); ++c) {
    const double norm = 1.0 / std::sqrt(static_cast<double>(orbits[c].size()));
    for (std::size_t pos : orbits[c]) {
      basis(static_cast<Eigen::Index>(pos), static_cast<Eigen::Index>(c)) = value[pos] * norm;
    }
  }
  return basis;
}

// Restricts `basis` to the fixed space of X -> U X U^dagger.
Eigen::MatrixXcd restrict_to_fixed(const Eigen::MatrixXcd& basis, const Eigen::MatrixXcd& u) {
  const auto dim = u.rows();
  const auto cols = basis.cols();
  if (cols == 0) return basis;
  Eigen::MatrixXcd residual(basis.rows(), cols);
#pragma omp parallel for schedule(static)
  for (Eigen::Index c = 0; c < cols; ++c) {
    Eigen::Map<const RowMajor> x(basis.col(c).data(), dim, dim);
    RowMajor y = u * x * u.adjoint() - x;
    residual.col(c) = Eigen::Map<const Eigen::VectorXcd>(y.data(), dim * dim);
  }
  // BDCSVD (Eigen 3.4.0) returns a wrong thin V for some complex inputs here.
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(residual, Eigen::ComputeThinV);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) < 1e-12) return basis;
  std::vector<Eigen::Index> null_cols;
  for (Eigen::Index i = 0; i < cols; ++i) {
    if (i >= s.size() || s(i) <= tol::kRankRelative * s(0)) null_cols.push_back(i);
  }
  Eigen::MatrixXcd v_null(cols, static_cast<Eigen::Index>(null_cols.size()));
  for (std::size_t k = 0; k < null_cols.size(); ++k) v_null.col(static_cast<Eigen::Index>(k)) = svd.matrixV().col(null_cols[k]);
  return basis * v_null;
}

}  // namespace

int commutant_dimension(std::span<const CMatrix> gens, int copies) {
  const int dim = checked_copy_dim(gens, copies);
  std::vector<Eigen::MatrixXcd> lifted;
  std::vector<Monomial> monos;
  std::vector<const Eigen::MatrixXcd*> dense;
  lifted.reserve(gens.size());
  for (const auto& g : gens) lifted.push_back(kron_power(g, copies).eigen());
  for (const auto& u : lifted) {
    if (auto m = as_monomial(u)) {
      monos.push_back(std::move(*m));
    } else {
      dense.push_back(&u);
    }
  }
  Eigen::MatrixXcd basis = monomial_fixed_space(monos, dim);
  for (const auto* u : dense) {
    if (basis.cols() == 0) break;
    basis = restrict_to_fixed(basis, *u);
  }
  return static_cast<int>(basis.cols());
}

int commutant_dimension_dense(std::span<const CMatrix> gens, int copies) {
  const int dim = checked_copy_dim(gens, copies);
  const Eigen::Index n = static_cast<Eigen::Index>(dim) * dim;
  if (n > 1024) throw Error(ErrorCode::OutOfRange, "dense commutant reference limited to d^{2t} <= 1024");
  Eigen::MatrixXcd system(n * static_cast<Eigen::Index>(gens.size()), n);
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const Eigen::MatrixXcd u = kron_power(gens[g], copies).eigen();
    const CMatrix super = kron(CMatrix(u), CMatrix(Eigen::MatrixXcd(u.conjugate())));
    system.block(static_cast<Eigen::Index>(g) * n, 0, n, n) = super.eigen() - Eigen::MatrixXcd::Identity(n, n);
  }
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(system);
  const auto& s = svd.singularValues();
  if (s(0) < 1e-12) return static_cast<int>(n);
  int rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s(i) > tol::kRankRelative * s(0)) ++rank;
  }
  return static_cast<int>(n) - rank;
}

}  // namespace phasepoint
