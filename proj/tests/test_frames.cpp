#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "phasepoint/frames.hpp"
#include "phasepoint/hw.hpp"
#include "phasepoint/scenarios.hpp"

using namespace phasepoint;
using phasepoint::testing::error_code_of;
using phasepoint::testing::random_unitary;

namespace {

// |<psi|P|psi>|^2 for every nontrivial Pauli string, built from explicit
// 2x2 matrices rather than the displacement table.
std::vector<double> pauli_overlaps(const std::vector<cplx>& psi, int qubits) {
  const cplx i(0, 1);
  const CMatrix paulis[] = {CMatrix::identity(2), CMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}}),
                            CMatrix::from_rows({{0.0, -i}, {i, 0.0}}), CMatrix::from_rows({{1.0, 0.0}, {0.0, -1.0}})};
  std::vector<double> out;
  int total = 1;
  for (int k = 0; k < qubits; ++k) total *= 4;
  for (int code = 1; code < total; ++code) {
    CMatrix op = paulis[code % 4];
    for (int rest = code / 4, k = 1; k < qubits; ++k, rest /= 4) op = kron(paulis[rest % 4], op);
    cplx amp = 0.0;
    for (int r = 0; r < op.dim(); ++r)
      for (int c = 0; c < op.dim(); ++c) amp += std::conj(psi[r]) * op(r, c) * psi[c];
    out.push_back(std::norm(amp));
  }
  return out;
}

CMatrix random_operator(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  CMatrix m(d);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) m(r, c) = cplx(g(rng), g(rng));
  return m;
}

void check_sic_fidelities(const OperatorFrame& frame) {
  const int d = frame.dim;
  REQUIRE(frame.elements.size() == static_cast<std::size_t>(d * d));
  CMatrix sum(d);
  for (std::size_t j = 0; j < frame.elements.size(); ++j) {
    const auto& pj = frame.elements[j];
    CHECK(max_abs_diff(pj * pj, pj) < 1e-8);
    CHECK(std::abs(pj.trace() - 1.0) < 1e-8);
    sum = sum + pj;
    for (std::size_t k = j + 1; k < frame.elements.size(); ++k) {
      CHECK(std::abs(hs_inner(pj, frame.elements[k]) - 1.0 / (d + 1)) < 1e-6);
    }
  }
  CHECK(max_abs_diff(sum, CMatrix::identity(d) * static_cast<double>(d)) < 1e-8);
}

}  // namespace

TEST_CASE("Wigner-Wootters frames") {
  const DimContext ctx(3, 1);
  const PhasePointBasis basis(ctx);
  const auto plain = make_ww_frame(0.0, 1.0, basis);
  CHECK(plain.kind == FrameKind::WignerWootters);
  for (std::size_t j = 0; j < basis.size(); ++j) CHECK(max_abs_diff(plain.elements[j], basis[j]) == 0.0);
  const auto shifted = make_ww_frame(1.0 / 9.0, 0.37, basis);
  CHECK(numerical_rank(gram(shifted), 1e-8) == 9);
  for (std::size_t j = 0; j < basis.size(); ++j) {
    CHECK(max_abs_diff(shifted.elements[j], CMatrix::identity(3) * (1.0 / 9.0) + basis[j] * 0.37) < 1e-15);
  }
  CHECK(error_code_of([&] { make_ww_frame(1.0, 0.0, basis); }) == ErrorCode::DegenerateFrame);
}

TEST_CASE("stored fiducials") {
  const auto tet = sic_fiducial("tetrahedron");
  CHECK(tet.dim == 2);
  for (double o : pauli_overlaps(tet.vector, 1)) CHECK(o == doctest::Approx(1.0 / 3.0).epsilon(1e-10));
  // Bloch vector (1,1,1)/sqrt(3)
  const auto rho = [&](int r, int c) { return tet.vector[r] * std::conj(tet.vector[c]); };
  CHECK(2.0 * std::real(rho(0, 1)) == doctest::Approx(1.0 / std::sqrt(3.0)));
  CHECK(-2.0 * std::imag(rho(0, 1)) == doctest::Approx(1.0 / std::sqrt(3.0)));
  CHECK(std::real(rho(0, 0) - rho(1, 1)) == doctest::Approx(1.0 / std::sqrt(3.0)));

  const auto hog = sic_fiducial("hoggar");
  CHECK(hog.dim == 8);
  const auto overlaps = pauli_overlaps(hog.vector, 3);
  CHECK(overlaps.size() == 63u);
  for (double o : overlaps) CHECK(o == doctest::Approx(1.0 / 9.0).epsilon(1e-10));
  CHECK(fiducial_deviation(hog) < 1e-12);

  for (const auto* name : {"tetrahedron", "hoggar"}) {
    double norm = 0.0;
    for (cplx z : sic_fiducial(name).vector) norm += std::norm(z);
    CHECK(std::abs(norm - 1.0) < 1e-10);
  }
  CHECK(error_code_of([] { sic_fiducial("hesse"); }) == ErrorCode::UsageError);
  CHECK(error_code_of([] { sic_fiducial(""); }) == ErrorCode::UsageError);
}

TEST_CASE("SIC projector frames") {
  check_sic_fidelities(sic_projectors(sic_fiducial("tetrahedron")));
  check_sic_fidelities(sic_projectors(sic_fiducial("hoggar")));
  const auto hesse = hesse_from_wigner();
  check_sic_fidelities(hesse);
  const DimContext ctx(3, 1);
  const PhasePointBasis basis(ctx);
  for (std::size_t j = 0; j < basis.size(); ++j) {
    CHECK(max_abs_diff(hesse.elements[j], CMatrix::identity(3) * 0.5 - basis[j] * 0.5) < 1e-12);
  }
  const auto labels = hw_labels(ctx);
  for (const auto& nu : labels) {
    const auto d = displacement(nu).matrix;
    for (const auto& mu : labels) {
      CHECK(max_abs_diff(conjugate(d, hesse.elements[mu.index()]), hesse.elements[(mu + nu).index()]) < 1e-10);
    }
  }
}

TEST_CASE("Gram matrices") {
  const DimContext ctx(3, 1);
  const auto g = gram(make_ww_frame(0.0, 1.0, ctx));
  CHECK((g - 3.0 * Eigen::MatrixXcd::Identity(9, 9)).cwiseAbs().maxCoeff() < 1e-12);

  const auto h = gram(hesse_from_wigner());
  for (int j = 0; j < 9; ++j)
    for (int k = 0; k < 9; ++k) CHECK(std::abs(h(j, k) - (j == k ? 1.0 : 0.25)) < 1e-10);

  std::mt19937_64 rng(9);
  const auto u = random_unitary(3, rng);
  auto rotated = hesse_from_wigner();
  for (auto& e : rotated.elements) e = conjugate(u, e);
  CHECK((gram(rotated) - h).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((gram(rotated) - gram(rotated).adjoint()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("dual frames") {
  const DimContext ctx(3, 1);
  const PhasePointBasis basis(ctx);
  const auto dual = dual_frame(make_ww_frame(0.0, 1.0, basis));
  for (std::size_t j = 0; j < basis.size(); ++j) CHECK(max_abs_diff(dual.elements[j], basis[j] * (1.0 / 3.0)) < 1e-8);

  // matrix units are orthonormal, hence self-dual
  OperatorFrame units{3, {}, FrameKind::Custom, 0.0, 1.0, "units"};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) {
      CMatrix e(3);
      e(r, c) = 1.0;
      units.elements.push_back(e);
    }
  const auto units_dual = dual_frame(units);
  for (std::size_t j = 0; j < 9; ++j) CHECK(max_abs_diff(units_dual.elements[j], units.elements[j]) < 1e-12);

  std::mt19937_64 rng(17);
  for (const auto& frame : {hesse_from_wigner(), make_ww_frame(0.2, -1.3, basis)}) {
    const auto g = dual_frame(frame);
    for (int trial = 0; trial < 10; ++trial) {
      const auto x = random_operator(3, rng);
      CHECK(max_abs_diff(reconstruct(expand_with_dual(x, g), frame), x) < 1e-7);
    }
  }

  // overcomplete: the phase point basis followed by the Hesse projectors
  OperatorFrame over{3, basis.operators(), FrameKind::Custom, 0.0, 1.0, "over"};
  for (const auto& e : hesse_from_wigner().elements) over.elements.push_back(e);
  for (int trial = 0; trial < 5; ++trial) {
    const auto x = random_operator(3, rng);
    CHECK(max_abs_diff(reconstruct(expand(x, over), over), x) < 1e-7);
  }

  OperatorFrame thin{3, std::vector<CMatrix>(basis.operators().begin(), basis.operators().begin() + 8),
                     FrameKind::Custom, 0.0, 1.0, "thin"};
  CHECK(error_code_of([&] { dual_frame(thin); }) == ErrorCode::DegenerateFrame);
}

TEST_CASE("expansion agrees with the Wigner function") {
  for (auto [p, n] : {std::pair{3, 1}, {5, 1}}) {
    const DimContext ctx(p, n);
    const PhasePointBasis basis(ctx);
    const auto frame = make_ww_frame(0.0, 1.0, basis);
    const auto dual = dual_frame(frame);
    std::mt19937_64 rng(p);
    for (int trial = 0; trial < 10; ++trial) {
      const auto rho = random_density_matrix(ctx.q(), rng);
      const auto c = expand_with_dual(rho, dual);
      const auto w = wigner_transform(rho, basis, 1.0);
      for (std::size_t j = 0; j < c.size(); ++j) CHECK(std::abs(c[j] - w.values[j]) < 1e-8);
      CHECK(max_abs_diff(reconstruct(c, frame), rho) < 1e-7);
    }
  }
  const DimContext ctx(3, 1);
  for (cplx c : expand(CMatrix::identity(3) * (1.0 / 3.0), make_ww_frame(0.0, 1.0, ctx))) {
    CHECK(std::abs(c - 1.0 / 9.0) < 1e-12);
  }
}

TEST_CASE("duals of Wigner-Wootters frames stay affine in the phase points") {
  const DimContext ctx(5, 1);
  const PhasePointBasis basis(ctx);
  const int q = ctx.q();
  for (auto [a, b] : {std::pair{0.3, 1.0}, {-0.05, 0.7}, {1.0 / 25.0, -2.0}}) {
    const auto dual = dual_frame(make_ww_frame(a, b, basis));
    // fit G_0 = a' I + b' V_0 from traces: tr G = q a' + b', tr(V_0 G) = a' + q b'
    const double t0 = std::real(dual.elements[0].trace());
    const double t1 = std::real(hs_inner(basis[0], dual.elements[0]));
    const double det = q * q - 1.0;
    const double ap = (q * t0 - t1) / det;
    const double bp = (q * t1 - t0) / det;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      CHECK(max_abs_diff(dual.elements[j], CMatrix::identity(q) * ap + basis[j] * bp) < 1e-7);
    }
  }
}
