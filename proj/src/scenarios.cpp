#include "phasepoint/scenarios.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>

#include "phasepoint/clifford.hpp"
#include "phasepoint/errors.hpp"
#include "phasepoint/fieldvec.hpp"
#include "phasepoint/frames.hpp"
#include "phasepoint/hw.hpp"
#include "phasepoint/numtheory.hpp"
#include "phasepoint/symmetry.hpp"
#include "phasepoint/wigner.hpp"

namespace phasepoint {
namespace {

constexpr double kDefaultEntryTol = 1e-8;
constexpr double kBasisTol = 1e-6;
constexpr double kPotentialTol = 1e-9;
// Clifford groups up to this order are enumerated for covariance checks;
// beyond it the generators are used.
constexpr std::uint64_t kEnumerateLimit = 20000;

[[noreturn]] void infeasible(const std::string& what) { throw Error(ErrorCode::FeasibilityError, what); }

ReportContext report_ctx(const DimContext& ctx) { return {ctx.p(), ctx.n(), ctx.q()}; }

void add_deviation(VerificationReport& r, std::string name, double dev, double tol) {
  r.add(std::move(name), dev <= tol, dev, 0.0, tol);
}

std::string label_of(const FpVector& mu) { return to_string(mu); }

std::vector<PhaseCanonicalUnitary> clifford_unitaries(const std::vector<CliffordElement>& group) {
  std::vector<PhaseCanonicalUnitary> out;
  out.reserve(group.size());
  for (const auto& e : group) out.push_back(e.unitary);
  return out;
}

std::vector<CliffordElement> enumerate_clifford(const DimContext& ctx, const char* fallback) {
  try {
    return clifford_group(ctx);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::GroupTooLarge) throw;
    infeasible(std::string("Clifford group too large to enumerate at q = ") + std::to_string(ctx.q()) + "; " +
               fallback);
  }
}

// ---------------------------------------------------------------- wigner

ScenarioResult run_wigner(const ScenarioConfig& cfg) {
  if (cfg.p == 2) {
    infeasible("NotDefinedForEvenPrime: phase point operators need odd p; for d = 2 run `verify sic --name tetrahedron`");
  }
  const DimContext ctx(cfg.p, cfg.n);
  const double tol = cfg.tol.value_or(kDefaultEntryTol);
  ScenarioResult out;
  auto& r = out.report;
  r.scenario = "wigner";
  r.ctx = report_ctx(ctx);

  const PhasePointBasis basis(ctx);
  const int q = ctx.q();
  const CMatrix id = CMatrix::identity(q);
  double trace_dev = 0.0;
  double invol_dev = 0.0;
  double herm_dev = 0.0;
  Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(q, q);
  for (const auto& v : basis.operators()) {
    trace_dev = std::max(trace_dev, std::abs(v.trace() - 1.0));
    invol_dev = std::max(invol_dev, max_abs_diff(v * v, id));
    herm_dev = std::max(herm_dev, max_abs_diff(v, v.adjoint()));
    sum += v.eigen();
  }
  add_deviation(r, "unit trace", trace_dev, tol);
  add_deviation(r, "involution", invol_dev, tol);
  add_deviation(r, "hermitian", herm_dev, tol);
  const OperatorFrame frame = make_ww_frame(0.0, 1.0, basis);
  const Eigen::MatrixXcd g = gram(frame);
  const double ortho_dev = (g - q * Eigen::MatrixXcd::Identity(g.rows(), g.cols())).cwiseAbs().maxCoeff();
  add_deviation(r, "orthogonality tr(V_mu V_nu) = q delta", ortho_dev, kBasisTol);
  add_deviation(r, "sum of phase points = q I", max_abs_diff(CMatrix(sum), id * static_cast<double>(q)), kBasisTol);

  const long long tr0 = std::llround(basis[0].trace().real());
  r.add("eigenvalue multiplicities (+1, -1)", (q + tr0) / 2 == (q + 1) / 2,
        Json::array({(q + tr0) / 2, (q - tr0) / 2}), Json::array({(q + 1) / 2, (q - 1) / 2}));

  const auto labels = hw_labels(ctx);
  bool translations = true;
  for (const auto& nu : labels) {
    const auto perm = covariance_permutation(displacement(nu).matrix, basis);
    if (!perm) {
      translations = false;
      break;
    }
    for (std::size_t k = 0; k < labels.size(); ++k) {
      if ((*perm)[k] != (labels[k] + nu).index()) translations = false;
    }
  }
  r.add("displacements translate labels", translations, translations, true);

  const std::uint64_t order = clifford_group_order(ctx);
  if (order <= kEnumerateLimit) {
    const auto group = clifford_group(ctx);
    std::size_t covariant = 0;
    for (const auto& e : group) {
      if (covariance_permutation(e.unitary.matrix(), basis)) ++covariant;
    }
    r.add("Clifford group elements permuting the basis", covariant == group.size(), covariant, group.size());
  } else {
    const auto gens = clifford_generators(ctx);
    std::size_t covariant = 0;
    for (const auto& u : gens) {
      if (covariance_permutation(u, basis)) ++covariant;
    }
    r.add("Clifford generators permuting the basis", covariant == gens.size(), covariant, gens.size());
  }

  std::vector<cplx> diag(static_cast<std::size_t>(q), cplx{1.0, 0.0});
  diag[1] = std::polar(1.0, 0.3);
  const bool rejected = !covariance_permutation(CMatrix::diagonal(diag), basis);
  r.add("non-Clifford phase gate rejected", rejected, rejected, true);

  std::mt19937_64 rng(cfg.seed);
  double roundtrip = 0.0;
  double norm_dev = 0.0;
  for (int k = 0; k < 20; ++k) {
    const CMatrix rho = random_density_matrix(q, rng);
    const WignerFunction w = wigner_transform(rho, basis, 1.0);
    double total = 0.0;
    for (double v : w.values) total += v;
    norm_dev = std::max(norm_dev, std::abs(total - 1.0));
    roundtrip = std::max(roundtrip, max_abs_diff(wigner_reconstruct(w, basis), rho));
  }
  add_deviation(r, "Wigner values sum to tr(rho)", norm_dev, tol);
  add_deviation(r, "reconstruct(transform(rho)) = rho", roundtrip, tol);

  const OperatorFrame dual = dual_frame(frame);
  double dual_dev = 0.0;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    dual_dev = std::max(dual_dev, max_abs_diff(dual.elements[k], basis[k] * (1.0 / q)));
  }
  add_deviation(r, "dual frame = V_mu / q", dual_dev, tol);

  for (std::size_t k = 0; k < basis.size(); ++k) out.matrices.emplace_back("V" + label_of(labels[k]), basis[k]);
  return out;
}

// ---------------------------------------------------------------- sic

OperatorFrame named_sic(const std::string& name) {
  if (name == "hesse") return hesse_from_wigner();
  if (name == "tetrahedron" || name == "hoggar") return sic_projectors(sic_fiducial(name));
  throw Error(ErrorCode::UsageError, "unknown SIC '" + name + "' (tetrahedron | hesse | hoggar)");
}

ScenarioResult run_sic(const ScenarioConfig& cfg) {
  const std::string name = cfg.name.empty() ? "tetrahedron" : cfg.name;
  const OperatorFrame frame = named_sic(name);
  const int d = frame.dim;
  const DimContext ctx = context_for_dimension(d);
  const double tol = cfg.tol.value_or(kDefaultEntryTol);
  ScenarioResult out;
  auto& r = out.report;
  r.scenario = "sic";
  r.ctx = report_ctx(ctx);

  if (name != "hesse") add_deviation(r, "fiducial overlaps |<psi|D|psi>|^2 = 1/(d+1)", fiducial_deviation(sic_fiducial(name)), kBasisTol);

  const CMatrix id = CMatrix::identity(d);
  double proj_dev = 0.0;
  Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(d, d);
  for (const auto& p : frame.elements) {
    proj_dev = std::max({proj_dev, max_abs_diff(p * p, p), std::abs(p.trace() - 1.0)});
    sum += p.eigen();
  }
  add_deviation(r, "rank-one projectors", proj_dev, tol);
  add_deviation(r, "sum of projectors = d I", max_abs_diff(CMatrix(sum), id * static_cast<double>(d)), kBasisTol);

  const Eigen::MatrixXcd g = gram(frame);
  const double off = 1.0 / (d + 1.0);
  double fid_dev = 0.0;
  std::size_t pairs = 0;
  std::map<std::string, std::size_t> histogram;
  for (Eigen::Index j = 0; j < g.rows(); ++j) {
    for (Eigen::Index k = 0; k < g.cols(); ++k) {
      const double expected = j == k ? 1.0 : off;
      fid_dev = std::max(fid_dev, std::abs(g(j, k) - expected));
      if (j == k) continue;
      ++pairs;
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.6f", g(j, k).real());
      ++histogram[buf];
    }
  }
  add_deviation(r, "pairwise fidelity (d delta + 1)/(d + 1)", fid_dev, kBasisTol);
  Json hist = Json::object();
  for (const auto& [k, v] : histogram) hist[k] = v;
  char expected_key[32];
  std::snprintf(expected_key, sizeof expected_key, "%.6f", off);
  r.add("off-diagonal fidelity histogram", histogram.size() == 1 && histogram.begin()->first == expected_key, hist,
        Json{{expected_key, frame.elements.size() * (frame.elements.size() - 1)}});
  r.add("distinct ordered pairs", pairs == frame.elements.size() * (frame.elements.size() - 1), pairs,
        frame.elements.size() * (frame.elements.size() - 1));

  for (std::size_t k = 0; k < frame.elements.size(); ++k) {
    out.matrices.emplace_back(name + "[" + std::to_string(k) + "]", frame.elements[k]);
  }
  return out;
}

// ---------------------------------------------------------------- supersymmetry

struct SymmetryInstance {
  OperatorFrame frame;
  PermutationAction generators;
  // Full symmetry group (within the Clifford pool) when enumerated.
  std::optional<PermutationAction> group;
};

PermutationAction admitted_generators(const FrameMatcher& matcher, const DimContext& ctx) {
  const auto gens = clifford_generators(ctx);
  return filter_admitting(matcher, canonical_all(gens));
}

SymmetryInstance symmetry_instance(const ScenarioConfig& cfg, VerificationReport& r) {
  SymmetryInstance inst;
  const std::string& kind = cfg.frame;
  if (kind == "hoggar") {
    inst.frame = sic_projectors(sic_fiducial("hoggar"));
    HoggarSearch search = hoggar_symmetry_generators(inst.frame);
    r.add("pool product depth needed", search.depth <= 3, search.depth, "<= 3");
    inst.generators = std::move(search.generators);
    return inst;
  }
  DimContext ctx(cfg.p, cfg.n);
  if (kind == "wigner") {
    if (cfg.p == 2) {
      infeasible("NotDefinedForEvenPrime: phase point operators need odd p; use --frame tetrahedron or hoggar");
    }
    inst.frame = make_ww_frame(0.0, 1.0, ctx);
  } else if (kind == "tetrahedron") {
    ctx = DimContext(2, 1);
    inst.frame = sic_projectors(sic_fiducial("tetrahedron"));
  } else if (kind == "hesse") {
    ctx = DimContext(3, 1);
    inst.frame = hesse_from_wigner();
  } else {
    throw Error(ErrorCode::UsageError, "unknown frame '" + kind + "' (wigner | tetrahedron | hesse | hoggar)");
  }
  const FrameMatcher matcher(inst.frame);
  if (clifford_group_order(ctx) <= kEnumerateLimit) {
    const auto pool = clifford_unitaries(clifford_group(ctx));
    PermutationAction sym = filter_admitting(matcher, pool);
    if (kind == "tetrahedron") {
      r.add("Clifford elements admitted", sym.elements.size() == 12, sym.elements.size(), 12);
      r.add("full Clifford pool admitted", sym.elements.size() < pool.size(), sym.elements.size() == pool.size(), false);
      inst.generators = sym;
    } else {
      r.add("Clifford elements admitted", sym.elements.size() == pool.size(), sym.elements.size(), pool.size());
      inst.generators = admitted_generators(matcher, ctx);
    }
    inst.group = std::move(sym);
  } else {
    inst.generators = admitted_generators(matcher, ctx);
    const std::size_t total = clifford_generators(ctx).size();
    r.add("Clifford generators admitted", inst.generators.elements.size() == total, inst.generators.elements.size(), total);
  }
  return inst;
}

ScenarioResult run_supersymmetry(const ScenarioConfig& cfg) {
  ScenarioResult out;
  auto& r = out.report;
  r.scenario = "supersymmetry";
  SymmetryInstance inst = symmetry_instance(cfg, r);
  r.ctx = report_ctx(context_for_dimension(inst.frame.dim));

  std::span<const PhaseCanonicalUnitary> enumerated;
  if (inst.group) enumerated = inst.group->elements;
  const Theorem1Check th = verify_theorem1(inst.generators, enumerated);
  r.add("ordered pair orbit", th.supersymmetric, th.pair_orbit, th.full_pairs);
  if (inst.group) {
    const std::size_t direct = pair_orbit_size_enumerated(inst.group->perms);
    r.add("pair orbit from enumerated group", direct == th.pair_orbit, direct, th.pair_orbit);
  }
  r.add("orbits on frame elements", orbit_count(inst.generators) == 1, orbit_count(inst.generators), 1);
  r.add("2-copy commutant dimension", th.two_design, th.commutant2, 2);
  if (th.potential) {
    r.add_close("frame potential t=2", *th.potential, static_cast<double>(haar_moment(inst.frame.dim, 2)), kPotentialTol);
  }
  r.add("supersymmetric iff 2-design", th.equivalent, th.equivalent, true);
  r.add("symmetry generators", !inst.generators.elements.empty(), inst.generators.elements.size(), ">= 1");
  for (std::size_t k = 0; k < inst.generators.elements.size(); ++k) {
    out.matrices.emplace_back("generator[" + std::to_string(k) + "]", inst.generators.elements[k].matrix());
  }
  return out;
}

// ---------------------------------------------------------------- design

ScenarioResult run_design(const ScenarioConfig& cfg) {
  const int d = cfg.dim > 0 ? cfg.dim : DimContext(cfg.p, cfg.n).q();
  const DimContext ctx = context_for_dimension(d);
  ScenarioResult out;
  auto& r = out.report;
  r.scenario = "design";
  r.ctx = report_ctx(ctx);
  const int t = cfg.t;
  const auto haar = haar_moment(d, t);
  if (cfg.method == "potential") {
    if (t < 1 || t > 3) throw Error(ErrorCode::OutOfRange, "frame potential needs 1 <= t <= 3");
    const auto group = enumerate_clifford(ctx, "use --method commutant");
    const auto elements = clifford_unitaries(group);
    const double fp = frame_potential(elements, t);
    r.add("Clifford group order", group.size() == clifford_group_order(ctx), group.size(), clifford_group_order(ctx));
    r.add("frame potential >= Haar moment", fp >= static_cast<double>(haar) - kPotentialTol, fp, haar, kPotentialTol);
    const bool design = std::abs(fp - static_cast<double>(haar)) <= kPotentialTol;
    // Clifford groups are 2-designs in every dimension, 3-designs only for qubits.
    const bool expected = t <= 2 || ctx.p() == 2;
    r.add("unitary " + std::to_string(t) + "-design", design == expected, design, expected);
  } else if (cfg.method == "commutant") {
    const auto gens = clifford_generators(ctx);
    int dim = 0;
    try {
      dim = commutant_dimension(gens, t);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::OutOfRange) throw;
      infeasible(std::string("commutant method: ") + e.what() + "; use --method potential for small groups");
    }
    r.add(std::to_string(t) + "-copy commutant dimension", static_cast<std::uint64_t>(dim) == haar, dim, haar);
  } else {
    throw Error(ErrorCode::UsageError, "unknown method '" + cfg.method + "' (potential | commutant)");
  }
  return out;
}

// ---------------------------------------------------------------- complement

ScenarioResult run_complement(const ScenarioConfig& cfg) {
  const DimContext ctx(cfg.p, cfg.n);
  ScenarioResult out;
  auto& r = out.report;
  r.scenario = "complement";
  r.ctx = report_ctx(ctx);
  const auto group = enumerate_clifford(ctx, "the complement search needs the full group");
  const auto [ga, gb] = default_complement_generators(group, ctx);
  const ComplementSearchResult res = complement_search(group, ctx, ga, gb);
  r.add("lift pairs tested", res.pairs_tested == res.lifts_a * res.lifts_b, res.pairs_tested,
        res.lifts_a * res.lifts_b);
  Json hist = Json::object();
  std::size_t histogram_total = 0;
  for (const auto& [order, count] : res.order_histogram) {
    hist[std::to_string(order)] = count;
    histogram_total += count;
  }
  r.add("closure order histogram", histogram_total == res.pairs_tested, hist, res.pairs_tested);
  const bool obstructed = ctx.p() == 2 && ctx.n() >= 2;
  const std::size_t found = res.complements.size();
  if (obstructed) {
    r.add("complements found", found == 0, found, 0);
  } else {
    r.add("complements found", found >= 1, found, ">= 1");
  }
  if (!res.complements.empty()) {
    out.matrices.emplace_back("complement_a", group[res.complements.front().a].unitary.matrix());
    out.matrices.emplace_back("complement_b", group[res.complements.front().b].unitary.matrix());
  }
  return out;
}

// ---------------------------------------------------------------- lemma1

ScenarioResult run_lemma1(const ScenarioConfig& cfg) {
  const DimContext ctx(cfg.p, cfg.n);
  ScenarioResult out;
  auto& r = out.report;
  r.scenario = "lemma1";
  r.ctx = report_ctx(ctx);
  OperatorFrame frame;
  if (ctx.p() != 2) {
    frame = make_ww_frame(0.0, 1.0, ctx);
  } else if (ctx.n() == 1) {
    frame = sic_projectors(sic_fiducial("tetrahedron"));
  } else {
    infeasible("NotDefinedForEvenPrime: no phase point basis for p = 2, n > 1; use --p 2 --n 1");
  }
  const FrameMatcher matcher(frame);
  const std::size_t points = frame.elements.size();

  const auto hw_gens = hw_generators(ctx);
  const PermutationAction hw = filter_admitting(matcher, close_group_mod_phase(hw_gens));
  r.add("HW elements permuting the basis", hw.elements.size() == points, hw.elements.size(), points);
  const Lemma1Check hw_check = verify_lemma1(hw);
  r.add("HW group: orbits = commutant dimension", hw_check.pass && hw_check.orbits == 1,
        Json{{"orbits", hw_check.orbits}, {"commutant", hw_check.commutant}}, Json{{"orbits", 1}, {"commutant", 1}});

  const auto group = enumerate_clifford(ctx, "the stabilizer check needs the enumerated symmetry group");
  const PermutationAction sym = filter_admitting(matcher, clifford_unitaries(group));
  const PermutationAction stab = stabilizer(sym, 0);
  r.add("stabilizer order |G| / N", stab.elements.size() * points == sym.elements.size(), stab.elements.size(),
        sym.elements.size() / points);
  const Lemma1Check st = verify_lemma1(stab);
  r.add("stabilizer: orbits = commutant dimension", st.pass && st.orbits == 2,
        Json{{"orbits", st.orbits}, {"commutant", st.commutant}}, Json{{"orbits", 2}, {"commutant", 2}});
  return out;
}

// ---------------------------------------------------------------- lemma3

ScenarioResult run_lemma3(const ScenarioConfig& cfg) {
  const DimContext ctx(cfg.p, cfg.n);
  if (ctx.p() == 2) infeasible("NotDefinedForEvenPrime: -I = I when p = 2");
  ScenarioResult out;
  auto& r = out.report;
  r.scenario = "lemma3";
  r.ctx = report_ctx(ctx);
  const ExtensionEmbedding emb = embed_extension_field_symplectic(1, ctx.n(), ctx);
  bool symplectic = true;
  for (const auto& g : emb.generators) symplectic = symplectic && is_symplectic(g);
  r.add("embedded generators symplectic", symplectic, symplectic, true);
  const auto group = generate_matrix_group(emb.generators);
  const std::uint64_t q = static_cast<std::uint64_t>(ctx.q());
  r.add("image order |Sp(2, q)|", group.size() == q * (q * q - 1), group.size(), q * (q * q - 1));
  const bool transitive = is_transitive_on_nonzero(group);
  r.add("transitive on " + std::to_string(q * q - 1) + " nonzero vectors", transitive, transitive, true);
  const bool central = contains_central_involution(group, GroupForm::Closed);
  r.add("contains -I", central, central, true);
  return out;
}

// ---------------------------------------------------------------- zsigmondy

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  unsigned __int128 result = 1 % m;
  unsigned __int128 base = b % m;
  while (e) {
    if (e & 1) result = result * base % m;
    base = base * base % m;
    e >>= 1;
  }
  return static_cast<std::uint64_t>(result);
}

ScenarioResult run_zsigmondy(const ScenarioConfig& cfg) {
  ScenarioResult out;
  auto& r = out.report;
  r.scenario = "zsigmondy";
  const std::uint64_t b = cfg.base;
  const unsigned a = cfg.exponent;
  const auto prime = zsigmondy_prime(b, a);
  const bool b1_pow2 = ((b + 1) & b) == 0;
  const bool exceptional = (b == 2 && a == 6) || (a == 2 && b1_pow2);
  r.add("primitive prime divisor exists", prime.has_value() != exceptional,
        prime ? Json(*prime) : Json(nullptr), exceptional ? Json(nullptr) : Json("prime"));
  if (prime) {
    r.add("is prime", is_prime(*prime), is_prime(*prime), true);
    const bool divides = powmod(b, a, *prime) == 1;
    r.add("divides b^a - 1", divides, divides, true);
    unsigned first = 0;
    for (unsigned j = 1; j < a; ++j) {
      if (powmod(b, j, *prime) == 1) {
        first = j;
        break;
      }
    }
    r.add("divides no b^j - 1 with j < a", first == 0, first, 0);
  }
  return out;
}

}  // namespace

CMatrix random_density_matrix(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  Eigen::MatrixXcd g(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) g(i, j) = cplx(gauss(rng), gauss(rng));
  }
  Eigen::MatrixXcd rho = g * g.adjoint();
  rho /= rho.trace();
  // exact Hermitian symmetry
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return CMatrix(std::move(rho));
}

ScenarioResult run_scenario(const ScenarioConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  ScenarioResult result;
  const std::string& s = config.scenario;
  if (s == "wigner") {
    result = run_wigner(config);
  } else if (s == "sic") {
    result = run_sic(config);
  } else if (s == "supersymmetry") {
    result = run_supersymmetry(config);
  } else if (s == "design") {
    result = run_design(config);
  } else if (s == "complement") {
    result = run_complement(config);
  } else if (s == "lemma1") {
    result = run_lemma1(config);
  } else if (s == "lemma3") {
    result = run_lemma3(config);
  } else if (s == "zsigmondy") {
    result = run_zsigmondy(config);
  } else {
    throw Error(ErrorCode::UsageError, "unknown scenario '" + s + "'");
  }
  const auto elapsed = std::chrono::steady_clock::now() - start;
  result.report.runtime_ms = std::chrono::duration<double, std::milli>(elapsed).count();
  return result;
}

}  // namespace phasepoint
