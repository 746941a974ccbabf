#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <vector>

#include "iris/alpha.hpp"

namespace iris {

/// Rational basis of ker(alpha) for a two-row alpha whose second row
/// squares its first: column i has V[i+2] = 1, zeros below the first two
/// entries elsewhere, and its first two entries fixed by alpha V = 0.
struct KernelBasis {
  std::size_t n = 0;
  std::vector<std::vector<mpq_class>> vectors;  // n-2 columns, each of length n
  std::vector<std::vector<mpq_class>> n_up;     // 2 x (n-2): first two entries of each column
};

/// Throws IrisError(input) unless alpha is 2 x n with row 2 the squares of
/// row 1 and row 1 free of repeats (and of zeros in its first two entries).
KernelBasis kernel_basis(const AlphaMatrix& alpha);

/// n^2 (1 + dmax/P_p)(dmax/dmin) for a prime window of length n >= 2.
mpq_class nup_bound(const PrimeWindow& window);

struct ProbeResult {
  std::uint64_t combinations = 0;  // coefficient vectors enumerated
  /// Nonzero kernel vectors with every entry an integer in [-1, n-1],
  /// sorted ascending. Empty confirms R_B^- meets ker(alpha) only at 0.
  std::vector<std::vector<long>> witnesses;
};

inline constexpr std::uint64_t kProbeCap = 10'000'000;

/// Enumerates gamma in {-1..n-1}^(n-2) and keeps S = sum gamma_i V^i when
/// S lies in R_B^- \ {0}. Throws IrisError(resource_guard) past the cap.
ProbeResult rb_minus_probe(const AlphaMatrix& alpha, std::uint64_t cap = kProbeCap);

/// x = y + 1 when the shifted vector is a composition of n, else nullopt.
std::optional<CompositionVector> probe_witness_to_composition(const std::vector<long>& y);

}  // namespace iris
