#pragma once

// Clifford unitaries: generators, closure modulo phase, the induced
// symplectic action, and the search for complements of the HW group.

#include <cstdint>
#include <map>
#include <vector>

#include "phasepoint/cmatrix.hpp"
#include "phasepoint/fieldvec.hpp"

namespace phasepoint {

// Single-party gates (p x p) and their embeddings into q = p^n.
CMatrix fourier_gate(int p);        // F|u> = p^{-1/2} sum_v omega^{uv} |v>
CMatrix shear_gate(int p);          // S|u> = tau^{u^2} |u>
CMatrix embed_single(const DimContext& ctx, const CMatrix& gate, int party);
CMatrix cz_gate(const DimContext& ctx, int a, int b);    // |u> -> omega^{u_a u_b} |u>
CMatrix swap_gate(const DimContext& ctx, int a, int b);

/// {F, S, X, Z} for n = 1; per-party copies plus CZ on neighbouring parties
/// for n >= 2.
std::vector<CMatrix> clifford_generators(const DimContext& ctx);

struct SymplecticAction {
  FpMatrix symplectic;
  FpVector displacement_part;
};

/// Column k of the symplectic part is the label of U D_{e_k} U^dagger. The
/// displacement part v solves [v, S e_k] = m_k where the conjugation phase is
/// omega^{m_k} (times i^{0,1} when p = 2). Throws NotClifford when a
/// conjugate is not a displacement up to a power of tau.
SymplecticAction symplectic_action(const CMatrix& u, const DimContext& ctx);

struct CliffordElement {
  PhaseCanonicalUnitary unitary;
  FpMatrix symplectic;
  FpVector displacement_part;
};

// q^2 |Sp(2n, p)|
std::uint64_t clifford_group_order(const DimContext& ctx);

/// Every Clifford unitary modulo phase, annotated with its action. Throws
/// GroupTooLarge when q^2 |Sp(2n, p)| > 2^20.
std::vector<CliffordElement> clifford_group(const DimContext& ctx);

// True when the element acts trivially on labels, i.e. lies in the HW group
// modulo phase.
bool is_displacement_class(const CliffordElement& e);

struct LiftPair {
  std::size_t a;  // index into the Clifford group
  std::size_t b;
  std::size_t order;
};

struct ComplementSearchResult {
  FpMatrix generator_a;
  FpMatrix generator_b;
  std::size_t target_order = 0;  // |Sp(2n, p)|
  std::size_t lifts_a = 0;
  std::size_t lifts_b = 0;
  std::size_t pairs_tested = 0;
  std::map<std::size_t, std::size_t> order_histogram;  // closure order -> pairs
  std::vector<LiftPair> complements;
  // Closure orders of every tested pair, in pair order.
  std::vector<std::size_t> orders;
};

/// First pair (in discovery order of the group's distinct symplectic parts)
/// with the requested element orders whose F_p closure is all of Sp(2n, p).
/// Throws FeasibilityError if none exists.
std::pair<FpMatrix, FpMatrix> find_symplectic_generator_pair(const std::vector<CliffordElement>& group,
                                                             const DimContext& ctx, std::uint64_t order_a,
                                                             std::uint64_t order_b);

/// For every pair of lifts (A, B) of (g_a, g_b), closes <A, B> modulo phase
/// and records the pairs whose closure has order |Sp(2n, p)| and meets the
/// HW group only in the identity. Pairs are evaluated in parallel.
ComplementSearchResult complement_search(const std::vector<CliffordElement>& group, const DimContext& ctx,
                                         const FpMatrix& g_a, const FpMatrix& g_b);
ComplementSearchResult complement_search_serial(const std::vector<CliffordElement>& group,
                                                const DimContext& ctx, const FpMatrix& g_a,
                                                const FpMatrix& g_b);

// Generator pair used by the CLI: orders (6, 2) for p = 2, n = 2; the two
// standard generators (Fourier, shear) for n = 1.
std::pair<FpMatrix, FpMatrix> default_complement_generators(const std::vector<CliffordElement>& group,
                                                            const DimContext& ctx);

}  // namespace phasepoint
