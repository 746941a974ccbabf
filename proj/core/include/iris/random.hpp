#pragma once

#include <cstdint>
#include <string>

#include "iris/matrix.hpp"

namespace iris {

/// SplitMix64: a small, stable generator whose output depends only on the
/// seed, so every platform reproduces the same trial matrices.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound) by rejection; bound >= 1.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t v;
    do v = next(); while (v >= limit);
    return v % bound;
  }

  /// Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

 private:
  std::uint64_t state_;
};

/// Independent stream for (seed, index); trial i always sees the same
/// numbers regardless of scheduling.
SplitMix64 substream(std::uint64_t seed, std::uint64_t index);

struct EntryKind {
  enum class Kind { binary, integer, gaussian };
  Kind kind = Kind::binary;
  long bound = 1;  // M for integer/gaussian: |entry| <= M

  friend bool operator==(const EntryKind&, const EntryKind&) = default;
};

std::string to_string(const EntryKind& e);
/// "binary", "integer:M" or "gaussian:M". Throws IrisError(input).
EntryKind parse_entry_kind(const std::string& text);

/// Deterministic for a fixed seed. integer: uniform in [-M, M];
/// gaussian: uniform over Gaussian integers with modulus <= M.
ComplexIntMatrix random_matrix(std::size_t n, const EntryKind& entries, std::uint64_t seed);
ComplexIntMatrix random_matrix(std::size_t n, const EntryKind& entries, SplitMix64& rng);

}  // namespace iris
