#include <exception>
#include <optional>
#include <unordered_map>

#include "phasepoint/cmatrix.hpp"
#include "phasepoint/errors.hpp"

namespace phasepoint {
namespace {

class ElementStore {
 public:
  explicit ElementStore(std::size_t cap) : cap_(cap) {}

  void insert(PhaseCanonicalUnitary u) {
    auto it = index_.find(u.key());
    if (it != index_.end()) {
      if (max_abs_diff(elements_[it->second].matrix(), u.matrix()) > 10 * tol::kEntry) {
        throw Error(ErrorCode::PrecisionLoss, "distinct group elements share a quantized key");
      }
      return;
    }
    if (elements_.size() >= cap_) {
      throw Error(ErrorCode::GroupTooLarge, "group exceeds cap of " + std::to_string(cap_));
    }
    index_.emplace(u.key(), elements_.size());
    elements_.push_back(std::move(u));
  }

  std::size_t size() const { return elements_.size(); }
  const PhaseCanonicalUnitary& operator[](std::size_t i) const { return elements_[i]; }
  std::vector<PhaseCanonicalUnitary> take() { return std::move(elements_); }

 private:
  std::size_t cap_;
  std::vector<PhaseCanonicalUnitary> elements_;
  std::unordered_map<std::string, std::size_t> index_;
};

void check_generators(std::span<const CMatrix> gens) {
  if (gens.empty()) throw Error(ErrorCode::ShapeError, "need at least one generator");
  for (const auto& g : gens) {
    if (g.dim() != gens.front().dim()) throw Error(ErrorCode::ShapeError, "generators differ in dimension");
    if (!g.is_unitary()) throw Error(ErrorCode::NotUnitary, "generator is not unitary");
  }
}

}  // namespace

std::vector<PhaseCanonicalUnitary> close_group_mod_phase_serial(std::span<const CMatrix> gens,
                                                                std::size_t cap) {
  check_generators(gens);
  ElementStore store(cap);
  store.insert(canonical_phase(CMatrix::identity(gens.front().dim())));
  for (std::size_t head = 0; head < store.size(); ++head) {
    for (const auto& g : gens) store.insert(canonical_phase(store[head].matrix() * g));
  }
  return store.take();
}

std::vector<PhaseCanonicalUnitary> close_group_mod_phase(std::span<const CMatrix> gens, std::size_t cap) {
  check_generators(gens);
  ElementStore store(cap);
  store.insert(canonical_phase(CMatrix::identity(gens.front().dim())));
  const auto ngens = static_cast<long long>(gens.size());
  std::size_t level_begin = 0;
  while (level_begin < store.size()) {
    const std::size_t level_end = store.size();
    const auto count = static_cast<long long>(level_end - level_begin) * ngens;
    std::vector<std::optional<PhaseCanonicalUnitary>> products(static_cast<std::size_t>(count));
    std::exception_ptr failure;
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < count; ++i) {
      try {
        const auto elem = level_begin + static_cast<std::size_t>(i / ngens);
        const auto& g = gens[static_cast<std::size_t>(i % ngens)];
        products[static_cast<std::size_t>(i)] = canonical_phase(store[elem].matrix() * g);
      } catch (...) {
#pragma omp critical(phasepoint_closure_failure)
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
    for (auto& p : products) store.insert(std::move(*p));
    level_begin = level_end;
  }
  return store.take();
}

}  // namespace phasepoint
