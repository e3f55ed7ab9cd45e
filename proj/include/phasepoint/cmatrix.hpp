#pragma once

// Dense complex matrices at small fixed dimension, identification of unitaries
// modulo global phase, group closure and commutant dimensions.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <utility>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace phasepoint {

using cplx = std::complex<double>;

namespace tol {
inline constexpr double kUnitary = 1e-9;
inline constexpr double kEntry = 1e-8;
inline constexpr double kPermutation = 1e-6;
// Entries below this modulus are skipped when choosing the phase reference.
inline constexpr double kSignificant = 1e-6;
inline constexpr double kRankRelative = 1e-8;
}  // namespace tol

inline constexpr int kMaxKronDim = 4096;

class CMatrix {
 public:
  CMatrix() : CMatrix(1) {}
  explicit CMatrix(int dim);
  // Throws ShapeError for non-square input and OutOfRange for NaN/Inf.
  explicit CMatrix(Eigen::MatrixXcd m);
  static CMatrix identity(int dim);
  static CMatrix from_rows(std::initializer_list<std::initializer_list<cplx>> rows);
  static CMatrix diagonal(std::span<const cplx> diag);

  int dim() const noexcept { return static_cast<int>(m_.rows()); }
  cplx operator()(int r, int c) const { return m_(r, c); }
  cplx& operator()(int r, int c) { return m_(r, c); }
  const Eigen::MatrixXcd& eigen() const noexcept { return m_; }

  CMatrix operator*(const CMatrix& o) const;
  CMatrix operator+(const CMatrix& o) const;
  CMatrix operator-(const CMatrix& o) const;
  CMatrix operator*(cplx s) const;

  CMatrix adjoint() const;
  cplx trace() const { return m_.trace(); }
  double max_abs() const;
  bool is_unitary(double tol = tol::kUnitary) const;
  bool is_hermitian(double tol = tol::kEntry) const;

 private:
  Eigen::MatrixXcd m_;
};

inline CMatrix operator*(cplx s, const CMatrix& m) { return m * s; }

double max_abs_diff(const CMatrix& a, const CMatrix& b);
// tr(A^dagger B)
cplx hs_inner(const CMatrix& a, const CMatrix& b);
// U A U^dagger
CMatrix conjugate(const CMatrix& u, const CMatrix& a);

// Throws OutOfRange when the result exceeds kMaxKronDim.
CMatrix kron(const CMatrix& a, const CMatrix& b);
CMatrix kron_power(const CMatrix& a, int copies);

// One line per row, tab-separated "re+imi" entries with 12 significant digits.
std::string dump(const CMatrix& m);

/// A unitary rescaled so that the first entry (row-major) of modulus above
/// tol::kSignificant is real and positive. Two unitaries equal up to global
/// phase have the same canonical matrix and the same key.
class PhaseCanonicalUnitary {
 public:
  const CMatrix& matrix() const noexcept { return matrix_; }
  const std::string& key() const noexcept { return key_; }
  int dim() const noexcept { return matrix_.dim(); }

 private:
  friend PhaseCanonicalUnitary canonical_phase(const CMatrix& u);
  PhaseCanonicalUnitary(CMatrix m, std::string key) : matrix_(std::move(m)), key_(std::move(key)) {}

  CMatrix matrix_;
  std::string key_;
};

// Throws NotUnitary when ||U^dagger U - I||_max > tol::kUnitary.
PhaseCanonicalUnitary canonical_phase(const CMatrix& u);

/// Closure of the generators under multiplication modulo global phase; the
/// identity comes first, the rest in breadth-first discovery order. The
/// frontier of each BFS level is expanded in parallel and merged in order, so
/// the output equals close_group_mod_phase_serial exactly.
/// Throws GroupTooLarge past `cap`, PrecisionLoss when two distinct
/// elements share a quantized key.
std::vector<PhaseCanonicalUnitary> close_group_mod_phase(std::span<const CMatrix> gens,
                                                         std::size_t cap = std::size_t{1} << 20);
std::vector<PhaseCanonicalUnitary> close_group_mod_phase_serial(std::span<const CMatrix> gens,
                                                                std::size_t cap = std::size_t{1} << 20);

std::vector<CMatrix> matrices_of(std::span<const PhaseCanonicalUnitary> elements);

/// Exact (no phase freedom) lookup of operators in a fixed list: each
/// operator is hashed to a real signature against fixed pseudo-random
/// weights, candidates inside the signature window are compared entrywise.
class OperatorIndex {
 public:
  explicit OperatorIndex(std::span<const CMatrix> ops);

  std::size_t size() const noexcept { return sigs_.size(); }
  // Index of the unique operator within `tol` of `a` entrywise, nullopt if
  // none. Throws PrecisionLoss when more than one matches.
  std::optional<std::size_t> find(const CMatrix& a, double tol = tol::kPermutation) const;

 private:
  double signature(const CMatrix& a) const;

  std::vector<CMatrix> ops_;
  Eigen::MatrixXcd weights_;
  double weight_l1_ = 0.0;
  std::vector<std::pair<double, std::size_t>> sigs_;  // sorted
};

// sigma(j) = index of U F_j U^dagger, or nullopt if some conjugate is not in
// the list.
std::optional<std::vector<std::size_t>> conjugation_permutation(const CMatrix& u, const OperatorIndex& index,
                                                                std::span<const CMatrix> ops,
                                                                double tol = tol::kPermutation);

inline constexpr int kMaxCommutantDim = 81;

/// Dimension of {X : U^{(x)t} X = X U^{(x)t} for every generator U}.
/// Monomial generators are resolved exactly via phase-consistent orbits of
/// matrix positions; the others shrink that solution space one at a time by
/// SVD with relative threshold tol::kRankRelative. Requires t in {1, 2} and
/// d^t <= kMaxCommutantDim (OutOfRange otherwise).
int commutant_dimension(std::span<const CMatrix> gens, int copies);

// Reference: assembles the full stacked (d^{2t} columns) linear system and
// counts its null space with one SVD. Only for d^{2t} <= 1024.
int commutant_dimension_dense(std::span<const CMatrix> gens, int copies);

// Numerical rank of a matrix, singular values below rel * sigma_max dropped.
int numerical_rank(const Eigen::MatrixXcd& m, double rel = tol::kRankRelative);

}  // namespace phasepoint
