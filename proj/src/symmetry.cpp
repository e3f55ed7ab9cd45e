#include "phasepoint/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <functional>
#include <numeric>
#include <set>

#include "phasepoint/clifford.hpp"
#include "phasepoint/errors.hpp"
#include "phasepoint/hw.hpp"

namespace phasepoint {

FrameMatcher::FrameMatcher(const OperatorFrame& frame) : frame_(frame), index_(frame_.elements) {}

std::optional<Permutation> FrameMatcher::permutation(const CMatrix& u, double tol) const {
  if (u.dim() != frame_.dim) throw Error(ErrorCode::ShapeError, "unitary dimension differs from the frame");
  if (!u.is_unitary()) throw Error(ErrorCode::NotUnitary, "permutation_action needs a unitary");
  return conjugation_permutation(u, index_, frame_.elements, tol);
}

std::optional<Permutation> permutation_action(const CMatrix& u, const OperatorFrame& frame, double tol) {
  return FrameMatcher(frame).permutation(u, tol);
}

PermutationAction filter_admitting_serial(const FrameMatcher& matcher,
                                          std::span<const PhaseCanonicalUnitary> candidates) {
  PermutationAction out{matcher.points(), {}, {}, true};
  for (const auto& c : candidates) {
    if (auto perm = matcher.permutation(c.matrix())) {
      out.elements.push_back(c);
      out.perms.push_back(std::move(*perm));
    }
  }
  return out;
}

PermutationAction filter_admitting(const FrameMatcher& matcher, std::span<const PhaseCanonicalUnitary> candidates) {
  std::vector<std::optional<Permutation>> found(candidates.size());
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 8)
  for (long long i = 0; i < static_cast<long long>(candidates.size()); ++i) {
    try {
      const auto k = static_cast<std::size_t>(i);
      found[k] = matcher.permutation(candidates[k].matrix());
    } catch (...) {
#pragma omp critical(phasepoint_filter_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  PermutationAction out{matcher.points(), {}, {}, true};
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    if (!found[k]) continue;
    out.elements.push_back(candidates[k]);
    out.perms.push_back(std::move(*found[k]));
  }
  return out;
}

std::vector<PhaseCanonicalUnitary> canonical_all(std::span<const CMatrix> unitaries) {
  std::vector<PhaseCanonicalUnitary> out;
  out.reserve(unitaries.size());
  for (const auto& u : unitaries) out.push_back(canonical_phase(u));
  return out;
}

PermutationAction symmetry_group(const OperatorFrame& frame, std::span<const PhaseCanonicalUnitary> candidates,
                                 GroupForm form) {
  const FrameMatcher matcher(frame);
  PermutationAction admitted = filter_admitting(matcher, candidates);
  if (form == GroupForm::Closed || admitted.elements.empty()) return admitted;
  const auto gens = matrices_of(admitted.elements);
  const auto closure = close_group_mod_phase(gens);
  PermutationAction full = filter_admitting(matcher, closure);
  if (full.elements.size() != closure.size()) {
    throw Error(ErrorCode::PrecisionLoss, "product of frame symmetries failed to permute the frame");
  }
  return full;
}

namespace {

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

std::size_t orbit_count(std::span<const Permutation> perms, std::size_t points) {
  std::vector<std::size_t> parent(points);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  std::size_t orbits = points;
  for (const auto& perm : perms) {
    for (std::size_t i = 0; i < points; ++i) {
      const std::size_t a = find_root(parent, i);
      const std::size_t b = find_root(parent, perm[i]);
      if (a != b) {
        parent[a] = b;
        --orbits;
      }
    }
  }
  return orbits;
}

std::size_t orbit_count(const PermutationAction& action) { return orbit_count(action.perms, action.points); }

std::size_t pair_orbit_size(std::span<const Permutation> perms, std::size_t points) {
  if (points < 2) return 0;
  std::vector<char> seen(points * points, 0);
  std::vector<std::size_t> queue{1};  // (0, 1)
  seen[1] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::size_t a = queue[head] / points;
    const std::size_t b = queue[head] % points;
    for (const auto& perm : perms) {
      const std::size_t next = perm[a] * points + perm[b];
      if (!seen[next]) {
        seen[next] = 1;
        queue.push_back(next);
      }
    }
  }
  return queue.size();
}

std::size_t pair_orbit_size_enumerated(std::span<const Permutation> perms) {
  std::set<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto& perm : perms) pairs.emplace(perm[0], perm[1]);
  return pairs.size();
}

bool is_supersymmetric(const PermutationAction& action) {
  const std::size_t n = action.points;
  return n >= 2 && pair_orbit_size(action.perms, n) == n * (n - 1);
}

namespace {

void check_potential_args(std::span<const PhaseCanonicalUnitary> elements, int t) {
  if (t < 1 || t > 3) throw Error(ErrorCode::OutOfRange, "frame potential needs 1 <= t <= 3");
  if (elements.empty()) throw Error(ErrorCode::ShapeError, "empty group");
}

}  // namespace

double frame_potential_serial(std::span<const PhaseCanonicalUnitary> elements, int t) {
  check_potential_args(elements, t);
  double sum = 0.0;
  for (const auto& e : elements) sum += std::pow(std::norm(e.matrix().trace()), t);
  return sum / static_cast<double>(elements.size());
}

double frame_potential(std::span<const PhaseCanonicalUnitary> elements, int t) {
  check_potential_args(elements, t);
  std::vector<double> terms(elements.size());
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < static_cast<long long>(elements.size()); ++i) {
    const auto k = static_cast<std::size_t>(i);
    terms[k] = std::pow(std::norm(elements[k].matrix().trace()), t);
  }
  double sum = 0.0;
  for (double v : terms) sum += v;
  return sum / static_cast<double>(elements.size());
}

std::uint64_t haar_moment(int d, int t) {
  if (d < 1 || t < 0 || t > 6) throw Error(ErrorCode::OutOfRange, "haar_moment needs d >= 1 and 0 <= t <= 6");
  std::uint64_t factorial = 1;
  for (int i = 2; i <= t; ++i) factorial *= static_cast<std::uint64_t>(i);
  std::uint64_t total = 0;
  std::vector<int> parts;
  // partitions in non-increasing parts, at most d of them
  std::function<void(int, int)> walk = [&](int remaining, int max_part) {
    if (remaining == 0) {
      std::uint64_t hooks = 1;
      for (std::size_t r = 0; r < parts.size(); ++r) {
        for (int c = 0; c < parts[r]; ++c) {
          int below = 0;
          for (std::size_t r2 = r + 1; r2 < parts.size() && parts[r2] > c; ++r2) ++below;
          hooks *= static_cast<std::uint64_t>(parts[r] - c - 1 + below + 1);
        }
      }
      const std::uint64_t f = factorial / hooks;
      total += f * f;
      return;
    }
    if (static_cast<int>(parts.size()) == d) return;
    for (int k = std::min(remaining, max_part); k >= 1; --k) {
      parts.push_back(k);
      walk(remaining - k, k);
      parts.pop_back();
    }
  };
  walk(t, t);
  return total;
}

PermutationAction stabilizer(const PermutationAction& action, std::size_t point) {
  PermutationAction out{action.points, {}, {}, action.pool_relative};
  for (std::size_t k = 0; k < action.perms.size(); ++k) {
    if (action.perms[k].at(point) != point) continue;
    out.elements.push_back(action.elements[k]);
    out.perms.push_back(action.perms[k]);
  }
  return out;
}

Lemma1Check verify_lemma1(const PermutationAction& action) {
  Lemma1Check check;
  check.orbits = orbit_count(action);
  const auto mats = matrices_of(action.elements);
  check.commutant = commutant_dimension(mats, 1);
  check.pass = check.orbits == static_cast<std::size_t>(check.commutant);
  return check;
}

Theorem1Check verify_theorem1(const PermutationAction& generators, std::span<const PhaseCanonicalUnitary> enumerated) {
  Theorem1Check check;
  const std::size_t n = generators.points;
  check.full_pairs = n * (n - 1);
  check.pair_orbit = pair_orbit_size(generators.perms, n);
  check.supersymmetric = check.pair_orbit == check.full_pairs;
  const auto mats = matrices_of(generators.elements);
  check.commutant2 = commutant_dimension(mats, 2);
  check.two_design = check.commutant2 == 2;
  check.equivalent = check.supersymmetric == check.two_design;
  if (!enumerated.empty() && enumerated.size() <= kMaxPotentialGroup) {
    check.potential = frame_potential(enumerated, 2);
    const bool fp_design = std::abs(*check.potential - static_cast<double>(haar_moment(enumerated.front().dim(), 2))) <= 1e-9;
    check.equivalent = check.equivalent && fp_design == check.two_design;
  }
  return check;
}

namespace {

std::vector<CMatrix> three_qubit_pool() {
  const DimContext ctx(2, 3);
  std::vector<CMatrix> pool = hw_generators(ctx);
  for (int j = 0; j < 3; ++j) pool.push_back(embed_single(ctx, fourier_gate(2), j));
  for (int j = 0; j < 3; ++j) pool.push_back(embed_single(ctx, shear_gate(2), j));
  for (int a = 0; a < 3; ++a) {
    for (int b = a + 1; b < 3; ++b) pool.push_back(cz_gate(ctx, a, b));
  }
  for (int a = 0; a < 3; ++a) {
    for (int b = a + 1; b < 3; ++b) pool.push_back(swap_gate(ctx, a, b));
  }
  return pool;
}

}  // namespace

HoggarSearch hoggar_symmetry_generators(const OperatorFrame& frame) {
  if (frame.dim != 8) throw Error(ErrorCode::ShapeError, "three-qubit frame expected");
  const FrameMatcher matcher(frame);
  const std::vector<CMatrix> pool = three_qubit_pool();
  const std::size_t n = matcher.points();
  const std::size_t full = n * (n - 1);

  HoggarSearch result;
  result.pool_size = pool.size();
  result.generators.points = n;
  result.generators.pool_relative = true;
  std::set<Permutation> seen_perms;
  Permutation identity(n);
  std::iota(identity.begin(), identity.end(), std::size_t{0});
  seen_perms.insert(identity);

  auto absorb = [&](const PermutationAction& admitted) {
    for (std::size_t k = 0; k < admitted.perms.size(); ++k) {
      if (!seen_perms.insert(admitted.perms[k]).second) continue;
      result.generators.elements.push_back(admitted.elements[k]);
      result.generators.perms.push_back(admitted.perms[k]);
    }
    result.pair_orbit = pair_orbit_size(result.generators.perms, n);
    return result.pair_orbit == full;
  };

  std::vector<CMatrix> level = pool;
  constexpr std::size_t kChunk = 256;
  for (int depth = 1; depth <= 3; ++depth) {
    result.depth = depth;
    if (depth > 1) {
      std::vector<CMatrix> next;
      next.reserve(level.size() * pool.size());
      for (const auto& a : level) {
        for (const auto& g : pool) next.push_back(a * g);
      }
      level = std::move(next);
    }
    for (std::size_t begin = 0; begin < level.size(); begin += kChunk) {
      const std::size_t end = std::min(level.size(), begin + kChunk);
      const auto chunk = canonical_all(std::span<const CMatrix>(level).subspan(begin, end - begin));
      if (absorb(filter_admitting(matcher, chunk))) return result;
    }
  }
  return result;
}

}  // namespace phasepoint
