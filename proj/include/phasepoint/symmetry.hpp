#pragma once

// Symmetry groups of frames as permutation actions: orbit counting, double
// transitivity, t-design tests and the instance checks built on them.

#include <cstdint>
#include <optional>
#include <vector>

#include "phasepoint/cmatrix.hpp"
#include "phasepoint/fieldvec.hpp"
#include "phasepoint/frames.hpp"

namespace phasepoint {

using Permutation = std::vector<std::size_t>;

struct PermutationAction {
  std::size_t points = 0;
  std::vector<PhaseCanonicalUnitary> elements;
  std::vector<Permutation> perms;  // parallel to elements
  // Set when the action was found by filtering a candidate pool rather than
  // being the full symmetry group.
  bool pool_relative = false;
};

// Frame elements plus their lookup index, built once per frame.
class FrameMatcher {
 public:
  explicit FrameMatcher(const OperatorFrame& frame);

  const OperatorFrame& frame() const noexcept { return frame_; }
  std::size_t points() const noexcept { return frame_.elements.size(); }

  /// sigma with U F_j U^dagger = F_sigma(j) entrywise within `tol`; nullopt
  /// if some conjugate matches nothing. Throws PrecisionLoss on ambiguity.
  std::optional<Permutation> permutation(const CMatrix& u, double tol = tol::kPermutation) const;

 private:
  OperatorFrame frame_;
  OperatorIndex index_;
};

std::optional<Permutation> permutation_action(const CMatrix& u, const OperatorFrame& frame,
                                              double tol = tol::kPermutation);

/// Candidates admitting a permutation, in candidate order. Candidates are
/// tested in parallel.
PermutationAction filter_admitting(const FrameMatcher& matcher, std::span<const PhaseCanonicalUnitary> candidates);
PermutationAction filter_admitting_serial(const FrameMatcher& matcher,
                                          std::span<const PhaseCanonicalUnitary> candidates);

/// Closed pool: the admitting subset. Generators: the closure of the admitting
/// subset, every element with its permutation.
PermutationAction symmetry_group(const OperatorFrame& frame, std::span<const PhaseCanonicalUnitary> candidates,
                                 GroupForm form = GroupForm::Closed);

std::vector<PhaseCanonicalUnitary> canonical_all(std::span<const CMatrix> unitaries);

// Orbits of the group generated by the permutations (union-find).
std::size_t orbit_count(const PermutationAction& action);
std::size_t orbit_count(std::span<const Permutation> perms, std::size_t points);

/// Size of the orbit of the ordered pair (0, 1) under the group generated by
/// the permutations (BFS over pairs).
std::size_t pair_orbit_size(std::span<const Permutation> perms, std::size_t points);
// Reference for enumerated groups: {(sigma(0), sigma(1))} counted directly.
std::size_t pair_orbit_size_enumerated(std::span<const Permutation> perms);

// True iff the pair orbit has all N (N - 1) ordered pairs of distinct points.
bool is_supersymmetric(const PermutationAction& action);

/// (1/K) sum_k |tr U_k|^{2t} for a group given modulo phase. Throws OutOfRange
/// unless 1 <= t <= 3. Traces are evaluated in parallel and summed in order.
double frame_potential(std::span<const PhaseCanonicalUnitary> elements, int t);
double frame_potential_serial(std::span<const PhaseCanonicalUnitary> elements, int t);

/// Integral of |tr U|^{2t} over U(d): sum over partitions of t with at most d
/// parts of the squared number of standard Young tableaux. t <= 6.
std::uint64_t haar_moment(int d, int t);

// Elements fixing `point`, with their permutations.
PermutationAction stabilizer(const PermutationAction& action, std::size_t point);

struct Lemma1Check {
  std::size_t orbits = 0;
  int commutant = 0;
  bool pass = false;
};

// orbit_count(action) against the 1-copy commutant dimension of its elements.
Lemma1Check verify_lemma1(const PermutationAction& action);

struct Theorem1Check {
  std::size_t pair_orbit = 0;
  std::size_t full_pairs = 0;
  bool supersymmetric = false;
  int commutant2 = 0;
  bool two_design = false;
  std::optional<double> potential;  // t = 2, when the group is enumerated
  bool equivalent = false;
};

inline constexpr std::size_t kMaxPotentialGroup = 100000;

/// Both sides of "supersymmetric iff the symmetry group is a 2-design":
/// the pair orbit of `generators` and their 2-copy commutant dimension. When
/// `enumerated` is given (and not larger than kMaxPotentialGroup) the t = 2
/// frame potential is added as a cross-check.
Theorem1Check verify_theorem1(const PermutationAction& generators,
                              std::span<const PhaseCanonicalUnitary> enumerated = {});

struct HoggarSearch {
  PermutationAction generators;
  std::size_t pool_size = 0;
  int depth = 0;  // product depth that completed the pair orbit
  std::size_t pair_orbit = 0;
};

/// Symmetry generators of a three-qubit frame: the HW generators together with
/// per-qubit H and S, CZ and SWAP on every pair are filtered for admitted
/// permutations; while the pair orbit is incomplete, products of depth 2 and
/// then 3 are added. Admitted elements with a repeated permutation are dropped.
HoggarSearch hoggar_symmetry_generators(const OperatorFrame& frame);

}  // namespace phasepoint
