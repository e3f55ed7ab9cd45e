#pragma once

#include <functional>
#include <optional>
#include <random>

#include "phasepoint/cmatrix.hpp"
#include "phasepoint/errors.hpp"

namespace phasepoint::testing {

inline std::optional<ErrorCode> error_code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

// Haar-ish unitary from the QR of a complex Gaussian matrix.
inline CMatrix random_unitary(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Eigen::MatrixXcd z(d, d);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) z(r, c) = cplx(g(rng), g(rng));
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
  return CMatrix(Eigen::MatrixXcd(qr.householderQ()));
}

}  // namespace phasepoint::testing
