#include <doctest.h>

#include <random>

#include "phasepoint/errors.hpp"
#include "phasepoint/numtheory.hpp"

using namespace phasepoint;

namespace {

bool trial_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

bool primitive(std::uint64_t r, std::uint64_t b, unsigned a) {
  for (unsigned j = 1; j < a; ++j) {
    if ((ipow(b, j) - 1) % r == 0) return false;
  }
  return true;
}

// Smallest prime dividing b^a - 1 but no b^j - 1, by trial division.
std::optional<std::uint64_t> brute_zsigmondy(std::uint64_t b, unsigned a) {
  std::uint64_t rest = ipow(b, a) - 1;
  for (std::uint64_t r = 2; r * r <= rest; ++r) {
    if (rest % r != 0) continue;
    if (primitive(r, b, a)) return r;
    while (rest % r == 0) rest /= r;
  }
  if (rest > 1 && primitive(rest, b, a)) return rest;
  return std::nullopt;
}

}  // namespace

TEST_CASE("is_prime matches trial division") {
  for (std::uint64_t n = 0; n < 5000; ++n) CHECK(is_prime(n) == trial_prime(n));
  CHECK(is_prime(18446744073709551557ULL));
  CHECK_FALSE(is_prime(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
}

TEST_CASE("factorize recovers n from primes") {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 200; ++k) {
    const std::uint64_t n = 2 + rng() % (std::uint64_t{1} << 50);
    std::uint64_t prod = 1;
    std::uint64_t last = 0;
    for (auto f : factorize(n)) {
      CHECK(is_prime(f));
      CHECK(f >= last);
      last = f;
      prod *= f;
    }
    CHECK(prod == n);
  }
}

TEST_CASE("checked_pow") {
  CHECK(checked_pow(3, 4, 100) == 81u);
  CHECK_FALSE(checked_pow(2, 63, std::uint64_t{1} << 62).has_value());
}

TEST_CASE("zsigmondy exceptional pairs") {
  CHECK_FALSE(zsigmondy_prime(2, 6).has_value());
  CHECK_FALSE(zsigmondy_prime(3, 2).has_value());
  CHECK_FALSE(zsigmondy_prime(7, 2).has_value());
  CHECK(zsigmondy_prime(3, 4) == 5u);
  CHECK(zsigmondy_prime(2, 2) == 3u);
}

TEST_CASE("zsigmondy agrees with trial division for b, a <= 10") {
  for (std::uint64_t b = 2; b <= 10; ++b) {
    for (unsigned a = 2; a <= 10; ++a) {
      CAPTURE(b);
      CAPTURE(a);
      CHECK(zsigmondy_prime(b, a) == brute_zsigmondy(b, a));
    }
  }
}

TEST_CASE("zsigmondy range errors") {
  CHECK_THROWS_AS(zsigmondy_prime(1, 5), Error);
  CHECK_THROWS_AS(zsigmondy_prime(5, 1), Error);
  CHECK_THROWS_AS(zsigmondy_prime(2, 63), Error);
}
