#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace phasepoint {

// Deterministic for the whole 64-bit range (Miller-Rabin, fixed bases).
bool is_prime(std::uint64_t n);

// b^e, or nullopt when the result exceeds `limit`.
std::optional<std::uint64_t> checked_pow(std::uint64_t b, unsigned e, std::uint64_t limit);

// Prime factors with multiplicity, ascending.
std::vector<std::uint64_t> factorize(std::uint64_t n);

/// Smallest primitive prime divisor of b^a - 1, i.e. a prime dividing
/// b^a - 1 but none of b^j - 1 for 1 <= j < a. Returns nullopt exactly in the
/// classical exceptional cases. Throws OutOfRange if b < 2, a < 2 or
/// b^a > 2^62.
std::optional<std::uint64_t> zsigmondy_prime(std::uint64_t b, unsigned a);

}  // namespace phasepoint
