#include "iris/primes.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <string>

#include "iris/error.hpp"

namespace iris {
namespace {

std::mutex table_mutex;
std::vector<std::uint64_t> table;  // primes found so far, ascending
std::uint64_t sieved_to = 1;       // table holds every prime <= sieved_to

// Upper bound on the m-th prime (Rosser); valid for m >= 6.
std::uint64_t nth_prime_upper(std::uint64_t m) {
  if (m < 6) return 13;
  const double x = static_cast<double>(m);
  return static_cast<std::uint64_t>(x * (std::log(x) + std::log(std::log(x)))) + 1;
}

void sieve_up_to(std::uint64_t limit) {
  if (limit <= sieved_to) return;
  if (limit > kSieveLimit) fail_guard("prime sieve capacity exceeded (limit " + std::to_string(kSieveLimit) + ")");
  // Sieve the segment (sieved_to, limit] with the base primes <= sqrt(limit).
  const std::uint64_t lo = sieved_to + 1;
  std::vector<bool> composite(limit - lo + 1, false);
  const auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(limit))) + 1;
  std::vector<std::uint64_t> base;
  {
    std::vector<bool> small(root + 1, false);
    for (std::uint64_t i = 2; i <= root; ++i) {
      if (small[i]) continue;
      base.push_back(i);
      for (std::uint64_t j = i * i; j <= root; j += i) small[j] = true;
    }
  }
  for (std::uint64_t q : base) {
    std::uint64_t start = std::max(q * q, (lo + q - 1) / q * q);
    for (std::uint64_t j = start; j <= limit; j += q) composite[j - lo] = true;
  }
  for (std::uint64_t v = std::max<std::uint64_t>(lo, 2); v <= limit; ++v)
    if (!composite[v - lo]) table.push_back(v);
  sieved_to = limit;
}

}  // namespace

std::uint64_t nth_prime(std::uint64_t index) {
  if (index == 0) fail_input("prime index is 1-based");
  std::lock_guard<std::mutex> lock(table_mutex);
  if (table.size() < index) {
    const std::uint64_t need = nth_prime_upper(index);
    if (need > kSieveLimit) fail_guard("prime sieve capacity exceeded for index " + std::to_string(index));
    sieve_up_to(std::min(std::max(need, 2 * sieved_to), kSieveLimit));
  }
  return table[index - 1];
}

PrimeWindow primes_range(std::uint64_t p, std::uint64_t n) {
  if (p == 0) fail_input("prime window start p must be >= 1");
  if (n == 0) fail_input("prime window length n must be >= 1");
  PrimeWindow w;
  w.p = p;
  w.primes.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) w.primes.push_back(nth_prime(p + i));
  w.delta_max = w.primes.back() - w.primes.front();
  for (std::size_t i = 1; i < w.primes.size(); ++i) {
    const std::uint64_t gap = w.primes[i] - w.primes[i - 1];
    if (!w.delta_min || gap < *w.delta_min) w.delta_min = gap;
  }
  return w;
}

}  // namespace iris
