#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace iris {

/// Largest number the on-demand sieve will cover.
inline constexpr std::uint64_t kSieveLimit = 400'000'000;

/// The i-th prime, 1-based (nth_prime(1) == 2). Thread-safe; the table
/// grows on demand. Throws IrisError(resource_guard) past kSieveLimit.
std::uint64_t nth_prime(std::uint64_t index);

/// A run of consecutive primes P_p .. P_{p+n-1}.
struct PrimeWindow {
  std::uint64_t p = 1;  // 1-based index of the first prime
  std::vector<std::uint64_t> primes;
  std::uint64_t delta_max = 0;                // last - first
  std::optional<std::uint64_t> delta_min;     // smallest gap between distinct members; n >= 2
};

PrimeWindow primes_range(std::uint64_t p, std::uint64_t n);

}  // namespace iris
