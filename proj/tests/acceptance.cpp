// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "phasepoint/clifford.hpp"
#include "phasepoint/errors.hpp"
#include "phasepoint/fieldvec.hpp"
#include "phasepoint/frames.hpp"
#include "phasepoint/hw.hpp"
#include "phasepoint/numtheory.hpp"
#include "phasepoint/symmetry.hpp"
#include "phasepoint/wigner.hpp"

using namespace phasepoint;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

const std::pair<int, int> kOdd[] = {{3, 1}, {5, 1}, {7, 1}, {3, 2}};

std::vector<PhaseCanonicalUnitary> clifford_pool(const DimContext& ctx) {
  std::vector<PhaseCanonicalUnitary> out;
  for (const auto& e : clifford_group(ctx)) out.push_back(e.unitary);
  return out;
}

std::string label(const DimContext& ctx) { return "q=" + std::to_string(ctx.q()); }

// Generators of the symmetry group of each basis in criterion 3, with the
// enumerated group where it is small enough to hold.
struct Instance {
  std::string name;
  int dim = 0;
  std::size_t points = 0;
  PermutationAction generators;
  std::vector<PhaseCanonicalUnitary> enumerated;
};

std::vector<Instance> supersymmetric_instances() {
  std::vector<Instance> out;
  for (auto [p, n] : kOdd) {
    const DimContext ctx(p, n);
    const auto frame = make_ww_frame(0.0, 1.0, ctx);
    Instance inst{"phase points " + label(ctx), ctx.q(), frame.elements.size(),
                  symmetry_group(frame, canonical_all(clifford_generators(ctx))), {}};
    if (n == 1 && p <= 5) inst.enumerated = clifford_pool(ctx);
    out.push_back(std::move(inst));
  }
  const auto qubit = clifford_pool(DimContext(2, 1));
  const auto tet = symmetry_group(sic_projectors(sic_fiducial("tetrahedron")), qubit);
  out.push_back({"tetrahedron", 2, 4, tet, tet.elements});
  const auto hesse = hesse_from_wigner();
  const DimContext qutrit(3, 1);
  out.push_back({"hesse", 3, 9, symmetry_group(hesse, canonical_all(clifford_generators(qutrit))),
                 symmetry_group(hesse, clifford_pool(qutrit)).elements});
  out.push_back({"hoggar", 8, 64, hoggar_symmetry_generators(sic_projectors(sic_fiducial("hoggar"))).generators, {}});
  return out;
}

Outcome criterion1() {
  Outcome o;
  for (auto [p, n] : kOdd) {
    const DimContext ctx(p, n);
    const PhasePointBasis basis(ctx);
    const int q = ctx.q();
    double trace = 0.0, involution = 0.0, ortho = 0.0;
    CMatrix sum(q);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      trace = std::max(trace, std::abs(basis[i].trace() - 1.0));
      involution = std::max(involution, max_abs_diff(basis[i] * basis[i], CMatrix::identity(q)));
      sum = sum + basis[i];
      for (std::size_t j = 0; j < basis.size(); ++j) {
        ortho = std::max(ortho, std::abs(hs_inner(basis[i], basis[j]) - (i == j ? double(q) : 0.0)));
      }
    }
    const double total = max_abs_diff(sum, CMatrix::identity(q) * double(q));
    o.require(trace <= 1e-6, label(ctx) + " trace " + std::to_string(trace));
    o.require(involution <= 1e-6, label(ctx) + " involution " + std::to_string(involution));
    o.require(ortho <= 1e-6, label(ctx) + " orthogonality " + std::to_string(ortho));
    o.require(total <= 1e-6, label(ctx) + " sum " + std::to_string(total));
  }
  return o;
}

Outcome criterion2() {
  Outcome o;
  for (auto [p, n] : kOdd) {
    const DimContext ctx(p, n);
    const PhasePointBasis basis(ctx);
    if (n == 1 && p <= 5) {
      const auto group = clifford_group(ctx);
      std::size_t covariant = 0;
      for (const auto& e : group) covariant += covariance_permutation(e.unitary.matrix(), basis).has_value();
      o.require(covariant == group.size() && group.size() == (p == 3 ? 216u : 3000u),
                label(ctx) + " " + std::to_string(covariant) + "/" + std::to_string(group.size()));
    } else {
      for (const auto& g : clifford_generators(ctx)) {
        o.require(covariance_permutation(g, basis).has_value(), label(ctx) + " generator not covariant");
      }
    }
  }
  return o;
}

Outcome criterion3(const std::vector<Instance>& instances) {
  Outcome o;
  for (const auto& inst : instances) {
    const auto orbit = pair_orbit_size(inst.generators.perms, inst.points);
    o.require(orbit == inst.points * (inst.points - 1), inst.name + " pair orbit " + std::to_string(orbit));
  }
  return o;
}

Outcome criterion4(const std::vector<Instance>& instances) {
  Outcome o;
  for (const auto& inst : instances) {
    const auto mats = matrices_of(inst.generators.elements);
    const int c2 = commutant_dimension(mats, 2);
    o.require(c2 == 2, inst.name + " 2-copy commutant " + std::to_string(c2));
    if (inst.dim <= 5) {
      const double fp = frame_potential(inst.enumerated, 2);
      o.require(std::abs(fp - static_cast<double>(haar_moment(inst.dim, 2))) <= 1e-9,
                inst.name + " frame potential " + std::to_string(fp));
    }
  }
  return o;
}

Outcome criterion5() {
  Outcome o;
  const auto qubit = clifford_pool(DimContext(2, 1));
  const auto qutrit = clifford_pool(DimContext(3, 1));
  o.require(qubit.size() == 24u, "qubit Clifford order");
  const double f3 = frame_potential(qubit, 3), f2 = frame_potential(qubit, 2), g3 = frame_potential(qutrit, 3);
  o.require(std::abs(f3 - haar_moment(2, 3)) <= 1e-9, "qubit t=3 " + std::to_string(f3));
  o.require(std::abs(f2 - 2.0) <= 1e-9, "qubit t=2 " + std::to_string(f2));
  o.require(g3 > static_cast<double>(haar_moment(3, 3)), "qutrit t=3 " + std::to_string(g3));
  return o;
}

Outcome criterion6() {
  Outcome o;
  const std::pair<std::string, OperatorFrame> frames[] = {
      {"tetrahedron", sic_projectors(sic_fiducial("tetrahedron"))},
      {"hesse", hesse_from_wigner()},
      {"hoggar", sic_projectors(sic_fiducial("hoggar"))}};
  const DimContext qutrit(3, 1);
  const PhasePointBasis basis(qutrit);
  for (const auto& [name, frame] : frames) {
    const int d = frame.dim;
    double worst = 0.0;
    std::size_t pairs = 0;
    for (std::size_t j = 0; j < frame.elements.size(); ++j) {
      for (std::size_t k = 0; k < frame.elements.size(); ++k) {
        if (j == k) continue;
        worst = std::max(worst, std::abs(hs_inner(frame.elements[j], frame.elements[k]) - 1.0 / (d + 1)));
        ++pairs;
      }
    }
    o.require(pairs == static_cast<std::size_t>(d * d * (d * d - 1)), name + " pair count");
    o.require(worst <= 1e-6, name + " fidelity deviation " + std::to_string(worst));
  }
  for (std::size_t j = 0; j < basis.size(); ++j) {
    o.require(max_abs_diff(frames[1].second.elements[j], (CMatrix::identity(3) - basis[j]) * 0.5) <= 1e-12,
              "hesse element is not (I - V)/2");
  }
  return o;
}

Outcome criterion7() {
  Outcome o;
  const DimContext two(2, 2);
  const auto group = clifford_group(two);
  const auto [a, b] = default_complement_generators(group, two);
  const auto even = complement_search(group, two, a, b);
  o.require(even.pairs_tested == 256u, "pairs tested " + std::to_string(even.pairs_tested));
  o.require(even.target_order == 720u, "target order " + std::to_string(even.target_order));
  o.require(even.complements.empty(), "complements found: " + std::to_string(even.complements.size()));
  const DimContext three(3, 1);
  const auto group3 = clifford_group(three);
  const auto [a3, b3] = default_complement_generators(group3, three);
  const auto odd = complement_search(group3, three, a3, b3);
  o.require(!odd.complements.empty(), "no complement at d=3");
  o.detail += (o.detail.empty() ? "" : "; ") + std::string("n=2 complements: ") +
              std::to_string(even.complements.size()) + ", d=3 complements: " + std::to_string(odd.complements.size());
  return o;
}

Outcome criterion8() {
  Outcome o;
  const auto pool = clifford_pool(DimContext(2, 1));
  const auto tet = symmetry_group(sic_projectors(sic_fiducial("tetrahedron")), pool);
  o.require(tet.elements.size() == 12u && tet.elements.size() < pool.size(),
            "admitted " + std::to_string(tet.elements.size()) + " of " + std::to_string(pool.size()));
  return o;
}

Outcome criterion9() {
  Outcome o;
  for (int p : {3, 5}) {
    const DimContext ctx(p, 1);
    const auto frame = make_ww_frame(0.0, 1.0, ctx);
    const auto hw = verify_lemma1(symmetry_group(frame, canonical_all(hw_generators(ctx)), GroupForm::Generators));
    o.require(hw.pass && hw.orbits == 1u && hw.commutant == 1,
              label(ctx) + " HW " + std::to_string(hw.orbits) + " vs " + std::to_string(hw.commutant));
    const auto stab = verify_lemma1(stabilizer(symmetry_group(frame, clifford_pool(ctx)), 0));
    o.require(stab.pass && stab.orbits == 2u && stab.commutant == 2,
              label(ctx) + " stabilizer " + std::to_string(stab.orbits) + " vs " + std::to_string(stab.commutant));
  }
  return o;
}

Outcome criterion10() {
  Outcome o;
  const DimContext ctx(3, 2);
  const auto embedded = embed_extension_field_symplectic(1, 2, ctx);
  const auto group = generate_matrix_group(embedded.generators);
  o.require(group.size() == symplectic_group_order(1, 9), "|Sp(2,9)| image " + std::to_string(group.size()));
  o.require(is_transitive_on_nonzero(group), "not transitive on the 80 nonzero vectors");
  o.require(contains_central_involution(group, GroupForm::Closed), "image lacks -I");
  for (int p : {3, 5, 7}) {
    const DimContext c(p, 1);
    o.require(contains_central_involution(standard_symplectic_generators(c)), "Sp(2," + std::to_string(p) + ") lacks -I");
  }
  return o;
}

Outcome criterion11() {
  Outcome o;
  o.require(!zsigmondy_prime(2, 6).has_value(), "(2,6) should have none");
  o.require(!zsigmondy_prime(3, 2).has_value(), "(3,2) should have none");
  o.require(zsigmondy_prime(3, 4) == std::optional<std::uint64_t>(5), "(3,4) should give 5");
  for (std::uint64_t b = 2; b <= 10; ++b) {
    for (unsigned a = 2; a <= 10; ++a) {
      const auto r = zsigmondy_prime(b, a);
      const bool power_of_two = ((b + 1) & b) == 0;
      const bool exceptional = (b == 2 && a == 6) || (a == 2 && power_of_two);
      const std::string tag = "(" + std::to_string(b) + "," + std::to_string(a) + ")";
      if (!r) {
        o.require(exceptional, tag + " unexpectedly has no primitive divisor");
        continue;
      }
      o.require(!exceptional, tag + " should be exceptional");
      // b^j mod r for j = 1..a
      std::uint64_t power = 1;
      for (unsigned j = 1; j <= a; ++j) {
        power = power * b % *r;
        if (j < a) o.require(power != 1, tag + " divides an earlier b^j - 1");
      }
      o.require(is_prime(*r) && power == 1, tag + " does not divide b^a - 1");
    }
  }
  return o;
}

}  // namespace

int main() {
  using clock = std::chrono::steady_clock;
  std::vector<Instance> instances;
  bool all = true;
  const auto run = [&](int number, double limit_s, const std::function<Outcome()>& body) {
    const auto start = clock::now();
    Outcome o;
    try {
      o = body();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("threw: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(clock::now() - start).count();
    if (limit_s > 0 && seconds > limit_s) o.require(false, "exceeded " + std::to_string(limit_s) + " s");
    all = all && o.pass;
    std::printf("criterion %d: %s (%.3f s)%s%s\n", number, o.pass ? "PASS" : "FAIL", seconds,
                o.detail.empty() ? "" : " ", o.detail.c_str());
    std::fflush(stdout);
  };
  run(1, 5, criterion1);
  run(2, 60, criterion2);
  run(3, 120, [&] {
    instances = supersymmetric_instances();
    return criterion3(instances);
  });
  run(4, 0, [&] { return criterion4(instances); });
  run(5, 1, criterion5);
  run(6, 0, criterion6);
  run(7, 600, criterion7);
  run(8, 0, criterion8);
  run(9, 0, criterion9);
  run(10, 60, criterion10);
  run(11, 0, criterion11);
  return all ? 0 : 1;
}
