#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <set>

#include "phasepoint/clifford.hpp"
#include "phasepoint/errors.hpp"
#include "phasepoint/hw.hpp"

using namespace phasepoint;

TEST_CASE("single-party gates") {
  const double s = 1.0 / std::sqrt(2.0);
  CHECK(max_abs_diff(fourier_gate(2), CMatrix::from_rows({{s, s}, {s, -s}})) < 1e-12);
  CHECK(max_abs_diff(shear_gate(2), CMatrix::from_rows({{1.0, 0.0}, {0.0, cplx(0, -1)}})) < 1e-12);
  for (int p : {3, 5, 7}) {
    CHECK(fourier_gate(p).is_unitary());
    CHECK(shear_gate(p).is_unitary());
  }
  const DimContext ctx(2, 2);
  const std::vector<cplx> cz{1.0, 1.0, 1.0, -1.0};
  CHECK(max_abs_diff(cz_gate(ctx, 0, 1), CMatrix::diagonal(cz)) < 1e-12);
  const auto swap = swap_gate(ctx, 0, 1);
  CHECK(std::abs(swap(1, 2) - 1.0) < 1e-12);
  CHECK(std::abs(swap(0, 0) - 1.0) < 1e-12);
}

TEST_CASE("symplectic action of the qutrit generators") {
  const DimContext ctx(3, 1);
  CHECK(symplectic_action(fourier_gate(3), ctx).symplectic == FpMatrix(ctx, {0, -1, 1, 0}));
  CHECK(symplectic_action(shear_gate(3), ctx).symplectic == FpMatrix(ctx, {1, 0, 1, 1}));
  const auto x = symplectic_action(shift_operator(ctx, 0), ctx);
  CHECK(x.symplectic.is_identity());
}

TEST_CASE("symplectic action recovers the conjugation phases") {
  // U D_e U^dagger = omega^{[v, S e]} D_{S e}, checked on every label
  for (auto [p, n] : {std::pair{2, 1}, {3, 1}, {2, 2}}) {
    const DimContext ctx(p, n);
    const auto group = clifford_group(ctx);
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
      const auto& e = group[rng() % group.size()];
      for (const auto& mu : hw_labels(ctx)) {
        const auto image = conjugate(e.unitary.matrix(), displacement(mu).matrix);
        const FpVector smu = e.symplectic * mu;
        const auto d = displacement(smu).matrix;
        // the phase relative to D_{S mu} must be a root of unity of the right kind
        const cplx ratio = hs_inner(d, image) / static_cast<double>(ctx.q());
        CHECK(std::abs(std::abs(ratio) - 1.0) < 1e-9);
        CHECK(max_abs_diff(image, d * ratio) < 1e-9);
      }
      for (int k = 0; k < ctx.two_n(); ++k) {
        const FpVector ek = FpVector::unit(ctx, k);
        const auto image = conjugate(e.unitary.matrix(), displacement(ek).matrix);
        const auto d = displacement(e.symplectic * ek).matrix;
        const cplx ratio = hs_inner(d, image) / static_cast<double>(ctx.q());
        const cplx expected = omega_power(p, symplectic_form(e.displacement_part, e.symplectic * ek));
        if (p == 2) {
          // qubit phases are fixed only up to the sign convention of i
          CHECK(std::abs(std::abs(ratio.real()) + std::abs(ratio.imag()) - 1.0) < 1e-9);
        } else {
          CHECK(std::abs(ratio - expected) < 1e-9);
        }
      }
    }
  }
}

TEST_CASE("symplectic action is a homomorphism") {
  for (auto [p, n] : {std::pair{3, 1}, {2, 2}, {5, 1}}) {
    const DimContext ctx(p, n);
    const auto group = clifford_group(ctx);
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
      const auto& a = group[rng() % group.size()];
      const auto& b = group[rng() % group.size()];
      const auto ab = symplectic_action(a.unitary.matrix() * b.unitary.matrix(), ctx);
      CHECK(ab.symplectic == a.symplectic * b.symplectic);
    }
  }
}

TEST_CASE("non-Clifford unitaries are rejected") {
  const DimContext ctx(3, 1);
  const std::vector<cplx> diag{1.0, std::polar(1.0, 0.3), 1.0};
  CHECK_THROWS_AS(symplectic_action(CMatrix::diagonal(diag), ctx), Error);
  const DimContext qubit(2, 1);
  const std::vector<cplx> t_gate{1.0, std::polar(1.0, std::numbers::pi / 4)};
  CHECK_THROWS_AS(symplectic_action(CMatrix::diagonal(t_gate), qubit), Error);
}

TEST_CASE("Clifford group orders") {
  CHECK(clifford_group_order(DimContext(2, 1)) == 24u);
  CHECK(clifford_group_order(DimContext(3, 1)) == 216u);
  CHECK(clifford_group_order(DimContext(2, 2)) == 11520u);
  CHECK(clifford_group_order(DimContext(5, 1)) == 3000u);
  CHECK(clifford_group_order(DimContext(7, 1)) == 16464u);
  for (auto [p, n] : {std::pair{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}}) {
    CAPTURE(p);
    CAPTURE(n);
    const DimContext ctx(p, n);
    const auto group = clifford_group(ctx);
    CHECK(group.size() == clifford_group_order(ctx));
    std::set<std::string> symplectic;
    std::size_t hw = 0;
    for (const auto& e : group) {
      symplectic.insert(e.symplectic.key());
      if (is_displacement_class(e)) ++hw;
    }
    CHECK(symplectic.size() == symplectic_group_order(n, p));
    CHECK(hw == static_cast<std::size_t>(ctx.q()) * static_cast<std::size_t>(ctx.q()));
  }
  CHECK_THROWS_AS(clifford_group(DimContext(2, 3)), Error);
  CHECK_THROWS_AS(clifford_group(DimContext(3, 2)), Error);
}

TEST_CASE("generator pair search") {
  const DimContext ctx(2, 2);
  const auto group = clifford_group(ctx);
  const auto [a, b] = find_symplectic_generator_pair(group, ctx, 6, 2);
  CHECK(a.order() == 6u);
  CHECK(b.order() == 2u);
  const FpMatrix pair[] = {a, b};
  CHECK(generate_matrix_group(pair).size() == 720u);
  CHECK_THROWS_AS(find_symplectic_generator_pair(group, ctx, 7, 2), Error);
}

TEST_CASE("complement search: odd dimension and the qubit") {
  for (int p : {2, 3}) {
    const DimContext ctx(p, 1);
    const auto group = clifford_group(ctx);
    const auto [a, b] = default_complement_generators(group, ctx);
    const auto par = complement_search(group, ctx, a, b);
    const auto ser = complement_search_serial(group, ctx, a, b);
    CHECK(par.pairs_tested == par.lifts_a * par.lifts_b);
    CHECK(par.lifts_a == static_cast<std::size_t>(ctx.q() * ctx.q()));
    CHECK(par.orders == ser.orders);
    CHECK(par.complements.size() == ser.complements.size());
    CHECK(par.order_histogram == ser.order_histogram);
    CHECK_FALSE(par.complements.empty());
    for (const auto& c : par.complements) CHECK(c.order == symplectic_group_order(1, p));
  }
  CHECK_THROWS_AS(default_complement_generators(clifford_group(DimContext(3, 1)), DimContext(3, 2)), Error);
}
