#include "phasepoint/cmatrix.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <random>

#include "phasepoint/errors.hpp"

namespace phasepoint {

CMatrix::CMatrix(int dim) {
  if (dim < 1) throw Error(ErrorCode::ShapeError, "matrix dimension must be positive");
  m_ = Eigen::MatrixXcd::Zero(dim, dim);
}

CMatrix::CMatrix(Eigen::MatrixXcd m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols() || m_.rows() < 1) throw Error(ErrorCode::ShapeError, "matrix must be square");
  if (!m_.allFinite()) throw Error(ErrorCode::OutOfRange, "matrix has non-finite entries");
}

CMatrix CMatrix::identity(int dim) { return CMatrix(Eigen::MatrixXcd::Identity(dim, dim)); }

CMatrix CMatrix::from_rows(std::initializer_list<std::initializer_list<cplx>> rows) {
  const int d = static_cast<int>(rows.size());
  Eigen::MatrixXcd m(d, d);
  int r = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != d) throw Error(ErrorCode::ShapeError, "ragged rows");
    int c = 0;
    for (const cplx& v : row) m(r, c++) = v;
    ++r;
  }
  return CMatrix(std::move(m));
}

CMatrix CMatrix::diagonal(std::span<const cplx> diag) {
  CMatrix out(static_cast<int>(diag.size()));
  for (std::size_t i = 0; i < diag.size(); ++i) out.m_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = diag[i];
  return out;
}

CMatrix CMatrix::operator*(const CMatrix& o) const {
  if (dim() != o.dim()) throw Error(ErrorCode::ShapeError, "dimension mismatch in product");
  return CMatrix(Eigen::MatrixXcd(m_ * o.m_));
}

CMatrix CMatrix::operator+(const CMatrix& o) const {
  if (dim() != o.dim()) throw Error(ErrorCode::ShapeError, "dimension mismatch in sum");
  return CMatrix(Eigen::MatrixXcd(m_ + o.m_));
}

CMatrix CMatrix::operator-(const CMatrix& o) const {
  if (dim() != o.dim()) throw Error(ErrorCode::ShapeError, "dimension mismatch in difference");
  return CMatrix(Eigen::MatrixXcd(m_ - o.m_));
}

CMatrix CMatrix::operator*(cplx s) const { return CMatrix(Eigen::MatrixXcd(m_ * s)); }

CMatrix CMatrix::adjoint() const { return CMatrix(Eigen::MatrixXcd(m_.adjoint())); }

double CMatrix::max_abs() const { return m_.cwiseAbs().maxCoeff(); }

bool CMatrix::is_unitary(double tol) const {
  const Eigen::MatrixXcd e = m_.adjoint() * m_ - Eigen::MatrixXcd::Identity(m_.rows(), m_.cols());
  return e.cwiseAbs().maxCoeff() <= tol;
}

bool CMatrix::is_hermitian(double tol) const { return (m_ - m_.adjoint()).cwiseAbs().maxCoeff() <= tol; }

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::ShapeError, "dimension mismatch");
  return (a.eigen() - b.eigen()).cwiseAbs().maxCoeff();
}

cplx hs_inner(const CMatrix& a, const CMatrix& b) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::ShapeError, "dimension mismatch");
  return (a.eigen().conjugate().cwiseProduct(b.eigen())).sum();
}

CMatrix conjugate(const CMatrix& u, const CMatrix& a) {
  return CMatrix(Eigen::MatrixXcd(u.eigen() * a.eigen() * u.eigen().adjoint()));
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  const long long d = static_cast<long long>(a.dim()) * b.dim();
  if (d > kMaxKronDim) throw Error(ErrorCode::OutOfRange, "kron result dimension exceeds 4096");
  const int da = a.dim();
  const int db = b.dim();
  Eigen::MatrixXcd out(d, d);
  for (int i = 0; i < da; ++i) {
    for (int j = 0; j < da; ++j) out.block(i * db, j * db, db, db) = a(i, j) * b.eigen();
  }
  return CMatrix(std::move(out));
}

CMatrix kron_power(const CMatrix& a, int copies) {
  if (copies < 1) throw Error(ErrorCode::OutOfRange, "copies must be positive");
  CMatrix out = a;
  for (int i = 1; i < copies; ++i) out = kron(out, a);
  return out;
}

std::string dump(const CMatrix& m) {
  std::string out;
  char buf[80];
  for (int r = 0; r < m.dim(); ++r) {
    for (int c = 0; c < m.dim(); ++c) {
      const cplx v = m(r, c);
      std::snprintf(buf, sizeof buf, "%.12g%+.12gi", v.real() + 0.0, v.imag() + 0.0);
      if (c) out += '\t';
      out += buf;
    }
    out += '\n';
  }
  return out;
}

namespace {

std::string quantized_key(const Eigen::MatrixXcd& m) {
  std::string key;
  key.resize(static_cast<std::size_t>(m.size()) * 2 * sizeof(long long));
  char* out = key.data();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      const long long parts[2] = {std::llround(m(r, c).real() * 1e6), std::llround(m(r, c).imag() * 1e6)};
      std::memcpy(out, parts, sizeof parts);
      out += sizeof parts;
    }
  }
  return key;
}

}  // namespace

PhaseCanonicalUnitary canonical_phase(const CMatrix& u) {
  if (!u.is_unitary()) throw Error(ErrorCode::NotUnitary, "canonical_phase requires a unitary");
  const Eigen::MatrixXcd& m = u.eigen();
  cplx ref{1.0, 0.0};
  bool found = false;
  for (Eigen::Index r = 0; r < m.rows() && !found; ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (std::abs(m(r, c)) > tol::kSignificant) {
        ref = m(r, c);
        found = true;
        break;
      }
    }
  }
  Eigen::MatrixXcd canon = m * (std::conj(ref) / std::abs(ref));
  std::string key = quantized_key(canon);
  return PhaseCanonicalUnitary(CMatrix(std::move(canon)), std::move(key));
}

std::vector<CMatrix> matrices_of(std::span<const PhaseCanonicalUnitary> elements) {
  std::vector<CMatrix> out;
  out.reserve(elements.size());
  for (const auto& e : elements) out.push_back(e.matrix());
  return out;
}

int numerical_rank(const Eigen::MatrixXcd& m, double rel) {
  if (m.size() == 0) return 0;
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(m);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) <= 1e-300) return 0;
  int rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s(i) > rel * s(0)) ++rank;
  }
  return rank;
}

}  // namespace phasepoint

namespace phasepoint {

OperatorIndex::OperatorIndex(std::span<const CMatrix> ops) : ops_(ops.begin(), ops.end()) {
  if (ops_.empty()) throw Error(ErrorCode::ShapeError, "empty operator list");
  const int d = ops_.front().dim();
  std::mt19937_64 rng(0x5eedULL);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  weights_.resize(d, d);
  for (int r = 0; r < d; ++r) {
    for (int c = 0; c < d; ++c) {
      weights_(r, c) = cplx(uni(rng), uni(rng));
      weight_l1_ += std::abs(weights_(r, c));
    }
  }
  sigs_.reserve(ops_.size());
  for (std::size_t i = 0; i < ops_.size(); ++i) {
    if (ops_[i].dim() != d) throw Error(ErrorCode::ShapeError, "operators differ in dimension");
    sigs_.emplace_back(signature(ops_[i]), i);
  }
  std::sort(sigs_.begin(), sigs_.end());
}

double OperatorIndex::signature(const CMatrix& a) const {
  return (weights_.conjugate().cwiseProduct(a.eigen())).sum().real();
}

std::optional<std::size_t> OperatorIndex::find(const CMatrix& a, double tol) const {
  if (a.dim() != ops_.front().dim()) throw Error(ErrorCode::ShapeError, "dimension mismatch in lookup");
  const double s = signature(a);
  const double window = tol * weight_l1_ + 1e-12;
  auto it = std::lower_bound(sigs_.begin(), sigs_.end(), std::make_pair(s - window, std::size_t{0}));
  std::optional<std::size_t> hit;
  for (; it != sigs_.end() && it->first <= s + window; ++it) {
    if (max_abs_diff(ops_[it->second], a) <= tol) {
      if (hit) throw Error(ErrorCode::PrecisionLoss, "operator matches two list entries within tolerance");
      hit = it->second;
    }
  }
  return hit;
}

std::optional<std::vector<std::size_t>> conjugation_permutation(const CMatrix& u, const OperatorIndex& index,
                                                                std::span<const CMatrix> ops, double tol) {
  std::vector<std::size_t> perm;
  perm.reserve(ops.size());
  for (const auto& f : ops) {
    auto hit = index.find(conjugate(u, f), tol);
    if (!hit) return std::nullopt;
    perm.push_back(*hit);
  }
  return perm;
}

}  // namespace phasepoint
