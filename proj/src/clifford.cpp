#include "phasepoint/clifford.hpp"

#include <cmath>
#include <exception>
#include <numbers>
#include <optional>
#include <unordered_set>

#include "phasepoint/errors.hpp"
#include "phasepoint/hw.hpp"

namespace phasepoint {
namespace {

int party_stride(const DimContext& ctx, int party) {
  int stride = 1;
  for (int j = party + 1; j < ctx.n(); ++j) stride *= ctx.p();
  return stride;
}

int digit(const DimContext& ctx, int index, int party) { return (index / party_stride(ctx, party)) % ctx.p(); }

}  // namespace

CMatrix fourier_gate(int p) {
  CMatrix f(p);
  const double norm = 1.0 / std::sqrt(static_cast<double>(p));
  for (int v = 0; v < p; ++v) {
    for (int u = 0; u < p; ++u) f(v, u) = norm * omega_power(p, static_cast<long long>(u) * v);
  }
  return f;
}

CMatrix shear_gate(int p) {
  std::vector<cplx> diag(static_cast<std::size_t>(p));
  for (int u = 0; u < p; ++u) diag[static_cast<std::size_t>(u)] = tau_power(p, static_cast<long long>(u) * u);
  return CMatrix::diagonal(diag);
}

CMatrix embed_single(const DimContext& ctx, const CMatrix& gate, int party) {
  if (gate.dim() != ctx.p()) throw Error(ErrorCode::ShapeError, "single-party gate must be p x p");
  if (party < 0 || party >= ctx.n()) throw Error(ErrorCode::OutOfRange, "party index out of range");
  int before = 1;
  for (int j = 0; j < party; ++j) before *= ctx.p();
  const int after = party_stride(ctx, party);
  return kron(kron(CMatrix::identity(before), gate), CMatrix::identity(after));
}

CMatrix cz_gate(const DimContext& ctx, int a, int b) {
  std::vector<cplx> diag(static_cast<std::size_t>(ctx.q()));
  for (int i = 0; i < ctx.q(); ++i) {
    diag[static_cast<std::size_t>(i)] = omega_power(ctx.p(), static_cast<long long>(digit(ctx, i, a)) * digit(ctx, i, b));
  }
  return CMatrix::diagonal(diag);
}

CMatrix swap_gate(const DimContext& ctx, int a, int b) {
  CMatrix m(ctx.q());
  for (int i = 0; i < ctx.q(); ++i) {
    const int da = digit(ctx, i, a);
    const int db = digit(ctx, i, b);
    const int j = i + (db - da) * party_stride(ctx, a) + (da - db) * party_stride(ctx, b);
    m(j, i) = 1.0;
  }
  return m;
}

std::vector<CMatrix> clifford_generators(const DimContext& ctx) {
  std::vector<CMatrix> gens;
  const CMatrix f = fourier_gate(ctx.p());
  const CMatrix s = shear_gate(ctx.p());
  for (int j = 0; j < ctx.n(); ++j) {
    gens.push_back(embed_single(ctx, f, j));
    gens.push_back(embed_single(ctx, s, j));
    gens.push_back(shift_operator(ctx, j));
    gens.push_back(phase_operator(ctx, j));
  }
  for (int j = 0; j + 1 < ctx.n(); ++j) gens.push_back(cz_gate(ctx, j, j + 1));
  return gens;
}

SymplecticAction symplectic_action(const CMatrix& u, const DimContext& ctx) {
  if (u.dim() != ctx.q()) throw Error(ErrorCode::ShapeError, "unitary dimension differs from q");
  const int p = ctx.p();
  const int n = ctx.n();
  const int q = ctx.q();
  std::vector<FpVector> columns;
  std::vector<long long> omega_exp(static_cast<std::size_t>(2 * n));
  for (int k = 0; k < 2 * n; ++k) {
    const CMatrix image = conjugate(u, displacement(FpVector::unit(ctx, k)).matrix);
    // A displacement sends |0> to a multiple of |a>, and |e_j> picks up omega^{b_j}.
    int row = 0;
    for (int r = 1; r < q; ++r) {
      if (std::abs(image(r, 0)) > std::abs(image(row, 0))) row = r;
    }
    if (std::abs(image(row, 0)) < 0.5) throw Error(ErrorCode::NotClifford, "conjugate is not monomial");
    std::vector<long long> label(static_cast<std::size_t>(2 * n));
    for (int j = 0; j < n; ++j) label[static_cast<std::size_t>(j)] = digit(ctx, row, j);
    for (int j = 0; j < n; ++j) {
      const int col = party_stride(ctx, j);
      int target = 0;
      for (int jj = 0; jj < n; ++jj) {
        target = target * p + (label[static_cast<std::size_t>(jj)] + (jj == j ? 1 : 0)) % p;
      }
      const cplx ratio = image(target, col) / image(row, 0);
      const double turns = std::arg(ratio) / (2.0 * std::numbers::pi) * p;
      label[static_cast<std::size_t>(n + j)] = std::llround(turns);
    }
    FpVector nu(ctx, label);
    const CMatrix d_nu = displacement(nu).matrix;
    const cplx phase = image(row, 0) / d_nu(row, 0);
    if (max_abs_diff(image, d_nu * phase) > tol::kEntry) {
      throw Error(ErrorCode::NotClifford, "conjugate of a unit displacement is not a displacement");
    }
    int e = -1;
    for (int t = 0; t < 2 * p; ++t) {
      if (std::abs(phase - tau_power(p, t)) <= tol::kEntry) {
        e = t;
        break;
      }
    }
    if (e < 0) throw Error(ErrorCode::NotClifford, "conjugation phase is not a power of tau");
    omega_exp[static_cast<std::size_t>(k)] = p == 2 ? (e / 2) % 2 : static_cast<long long>(e) * (p + 1) / 2 % p;
    columns.push_back(std::move(nu));
  }
  FpMatrix s = FpMatrix::from_columns(ctx, columns);
  if (!is_symplectic(s)) throw Error(ErrorCode::NotClifford, "induced label map is not symplectic");

  // [v, S e_k] = v^T J S e_k = m_k  =>  v^T = m^T (J S)^{-1}
  const int size = 2 * n;
  ModpMatrix js{p, size, std::vector<int>(static_cast<std::size_t>(size * size), 0)};
  for (int r = 0; r < size; ++r) {
    for (int c = 0; c < size; ++c) {
      const int partner = r < n ? s(r + n, c) : (p - s(r - n, c)) % p;
      js.at(r, c) = partner;
    }
  }
  const ModpMatrix js_inv = modp_inverse(js);
  std::vector<long long> v(static_cast<std::size_t>(size), 0);
  for (int c = 0; c < size; ++c) {
    long long acc = 0;
    for (int r = 0; r < size; ++r) acc += omega_exp[static_cast<std::size_t>(r)] * js_inv.at(r, c);
    v[static_cast<std::size_t>(c)] = acc;
  }
  return {std::move(s), FpVector(ctx, v)};
}

std::uint64_t clifford_group_order(const DimContext& ctx) {
  const auto q2 = static_cast<std::uint64_t>(ctx.q()) * static_cast<std::uint64_t>(ctx.q());
  return q2 * symplectic_group_order(ctx.n(), ctx.p());
}

std::vector<CliffordElement> clifford_group(const DimContext& ctx) {
  constexpr std::uint64_t cap = std::uint64_t{1} << 20;
  std::uint64_t expected = 0;
  try {
    expected = clifford_group_order(ctx);
  } catch (const Error&) {
    expected = cap + 1;
  }
  if (expected > cap) {
    throw Error(ErrorCode::GroupTooLarge, "Clifford group of dimension " + std::to_string(ctx.q()) +
                                              " has more than 2^20 elements modulo phase");
  }
  const auto gens = clifford_generators(ctx);
  auto unitaries = close_group_mod_phase(gens, static_cast<std::size_t>(cap));
  std::vector<std::optional<CliffordElement>> annotated(unitaries.size());
  std::exception_ptr failure;
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < static_cast<long long>(unitaries.size()); ++i) {
    try {
      auto& u = unitaries[static_cast<std::size_t>(i)];
      auto action = symplectic_action(u.matrix(), ctx);
      annotated[static_cast<std::size_t>(i)] =
          CliffordElement{u, std::move(action.symplectic), std::move(action.displacement_part)};
    } catch (...) {
#pragma omp critical(phasepoint_clifford_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  std::vector<CliffordElement> out;
  out.reserve(annotated.size());
  for (auto& a : annotated) out.push_back(std::move(*a));
  return out;
}

bool is_displacement_class(const CliffordElement& e) { return e.symplectic.is_identity(); }

std::pair<FpMatrix, FpMatrix> find_symplectic_generator_pair(const std::vector<CliffordElement>& group,
                                                             const DimContext& ctx, std::uint64_t order_a,
                                                             std::uint64_t order_b) {
  const std::uint64_t target = symplectic_group_order(ctx.n(), ctx.p());
  std::vector<FpMatrix> with_a;
  std::vector<FpMatrix> with_b;
  std::unordered_set<std::string> seen;
  for (const auto& e : group) {
    if (!seen.insert(e.symplectic.key()).second) continue;
    const auto ord = e.symplectic.order();
    if (ord == order_a) with_a.push_back(e.symplectic);
    if (ord == order_b) with_b.push_back(e.symplectic);
  }
  for (const auto& a : with_a) {
    for (const auto& b : with_b) {
      const FpMatrix pair[] = {a, b};
      if (generate_matrix_group(pair, static_cast<std::size_t>(target)).size() == target) return {a, b};
    }
  }
  throw Error(ErrorCode::FeasibilityError, "no generator pair of orders " + std::to_string(order_a) + ", " +
                                               std::to_string(order_b) + " generates Sp(2n, p)");
}

namespace {

struct PairOutcome {
  std::size_t order = 0;
  bool complement = false;
};

PairOutcome evaluate_pair(const CliffordElement& a, const CliffordElement& b, const DimContext& ctx,
                          std::size_t cap, std::size_t target) {
  const CMatrix gens[] = {a.unitary.matrix(), b.unitary.matrix()};
  const auto closure = close_group_mod_phase_serial(gens, cap);
  PairOutcome out{closure.size(), false};
  if (closure.size() != target) return out;
  for (std::size_t i = 1; i < closure.size(); ++i) {
    if (symplectic_action(closure[i].matrix(), ctx).symplectic.is_identity()) return out;
  }
  out.complement = true;
  return out;
}

struct LiftSets {
  std::vector<std::size_t> a;
  std::vector<std::size_t> b;
};

LiftSets collect_lifts(const std::vector<CliffordElement>& group, const FpMatrix& g_a, const FpMatrix& g_b) {
  LiftSets lifts;
  for (std::size_t i = 0; i < group.size(); ++i) {
    if (group[i].symplectic == g_a) lifts.a.push_back(i);
    if (group[i].symplectic == g_b) lifts.b.push_back(i);
  }
  return lifts;
}

ComplementSearchResult summarize(const FpMatrix& g_a, const FpMatrix& g_b, std::size_t target,
                                 const LiftSets& lifts, const std::vector<PairOutcome>& outcomes) {
  ComplementSearchResult r{g_a, g_b, target, lifts.a.size(), lifts.b.size(), outcomes.size(), {}, {}, {}};
  for (std::size_t k = 0; k < outcomes.size(); ++k) {
    const auto& o = outcomes[k];
    ++r.order_histogram[o.order];
    r.orders.push_back(o.order);
    if (o.complement) {
      r.complements.push_back({lifts.a[k / lifts.b.size()], lifts.b[k % lifts.b.size()], o.order});
    }
  }
  return r;
}

}  // namespace

ComplementSearchResult complement_search(const std::vector<CliffordElement>& group, const DimContext& ctx,
                                         const FpMatrix& g_a, const FpMatrix& g_b) {
  const auto target = static_cast<std::size_t>(symplectic_group_order(ctx.n(), ctx.p()));
  const LiftSets lifts = collect_lifts(group, g_a, g_b);
  const auto count = static_cast<long long>(lifts.a.size() * lifts.b.size());
  std::vector<PairOutcome> outcomes(static_cast<std::size_t>(count));
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (long long k = 0; k < count; ++k) {
    try {
      const auto uk = static_cast<std::size_t>(k);
      outcomes[uk] = evaluate_pair(group[lifts.a[uk / lifts.b.size()]], group[lifts.b[uk % lifts.b.size()]], ctx,
                                   group.size(), target);
    } catch (...) {
#pragma omp critical(phasepoint_complement_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return summarize(g_a, g_b, target, lifts, outcomes);
}

ComplementSearchResult complement_search_serial(const std::vector<CliffordElement>& group,
                                                const DimContext& ctx, const FpMatrix& g_a,
                                                const FpMatrix& g_b) {
  const auto target = static_cast<std::size_t>(symplectic_group_order(ctx.n(), ctx.p()));
  const LiftSets lifts = collect_lifts(group, g_a, g_b);
  std::vector<PairOutcome> outcomes;
  for (std::size_t i : lifts.a) {
    for (std::size_t j : lifts.b) outcomes.push_back(evaluate_pair(group[i], group[j], ctx, group.size(), target));
  }
  return summarize(g_a, g_b, target, lifts, outcomes);
}

std::pair<FpMatrix, FpMatrix> default_complement_generators(const std::vector<CliffordElement>& group,
                                                            const DimContext& ctx) {
  if (ctx.n() == 1) {
    const auto gens = standard_symplectic_generators(ctx);
    return {gens.at(0), gens.at(1)};
  }
  if (ctx.p() == 2 && ctx.n() == 2) return find_symplectic_generator_pair(group, ctx, 6, 2);
  throw Error(ErrorCode::FeasibilityError, "complement search is defined for n = 1 and for p = 2, n = 2");
}

}  // namespace phasepoint
