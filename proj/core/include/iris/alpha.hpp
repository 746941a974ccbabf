#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "iris/primes.hpp"

namespace iris {

/// Exponent sums can exceed 64 bits for user-supplied matrices.
__extension__ typedef unsigned __int128 Exponent;
__extension__ typedef __int128 Int128;

std::string exponent_to_string(Exponent e);

enum class AlphaKind { identity, theorem1, lemma1, user };

std::string to_string(AlphaKind k);

struct Provenance {
  AlphaKind kind = AlphaKind::user;
  std::optional<std::uint64_t> p;     // prime window start (theorem1, lemma1)
  std::optional<std::uint64_t> beta;  // lemma1 only

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

/// t x n nonnegative exponent matrix with its row totals and total degree.
class AlphaMatrix {
 public:
  /// Throws IrisError(input) on an empty or ragged matrix.
  static AlphaMatrix from_rows(std::vector<std::vector<std::uint64_t>> rows,
                               Provenance provenance = {});

  std::size_t t() const noexcept { return rows_.size(); }
  std::size_t n() const noexcept { return rows_.front().size(); }
  const std::vector<std::vector<std::uint64_t>>& rows() const noexcept { return rows_; }
  std::span<const std::uint64_t> row(std::size_t l) const { return rows_[l]; }
  std::uint64_t at(std::size_t l, std::size_t j) const { return rows_[l][j]; }

  /// Per-row totals alpha_T[l] = sum_j rows[l][j].
  const std::vector<Exponent>& totals() const noexcept { return totals_; }
  /// Sum of the row totals.
  Exponent total_degree() const noexcept { return total_degree_; }
  const Provenance& provenance() const noexcept { return provenance_; }

  std::uint64_t row_max(std::size_t l) const;
  std::uint64_t row_min(std::size_t l) const;

  friend bool operator==(const AlphaMatrix& a, const AlphaMatrix& b) {
    return a.rows_ == b.rows_ && a.provenance_ == b.provenance_;
  }

 private:
  AlphaMatrix() = default;
  std::vector<std::vector<std::uint64_t>> rows_;
  std::vector<Exponent> totals_;
  Exponent total_degree_ = 0;
  Provenance provenance_;
};

AlphaMatrix identity_alpha(std::size_t n);

/// Exact check of P_p > n^2 (1 + dmax/P_p)(dmax/dmin) for the window
/// starting at p. For n <= 2 the rank argument already gives uniqueness
/// and the check is waived (returns true).
bool theorem1_condition(std::uint64_t p, std::uint64_t n);

/// Smallest p >= 1 satisfying theorem1_condition. Returns 1 for n <= 2.
std::uint64_t minimal_p(std::uint64_t n, std::uint64_t search_cap = 1'000'000);

enum class PPolicy { minimal, cube, explicit_value };

struct PChoice {
  PPolicy policy = PPolicy::minimal;
  std::uint64_t value = 0;  // used by explicit_value
};

/// Resolves the window start for n under the policy (cube: p = n^3).
std::uint64_t resolve_p(const PChoice& choice, std::uint64_t n);

/// Two rows: the primes P_p..P_{p+n-1} and their squares. Throws
/// IrisError(input) when the condition fails unless override_condition.
AlphaMatrix theorem1_alpha(std::uint64_t n, std::uint64_t p, bool override_condition = false);

/// Smallest admissible beta: n * P_{p+n-1} + 1.
std::uint64_t auto_beta(std::uint64_t n, std::uint64_t p);

/// One row alpha_j = P_{p+j} + beta * P_{p+j}^2 with beta > n * P_{p+n-1}.
AlphaMatrix lemma1_alpha(std::uint64_t n, std::uint64_t p, std::optional<std::uint64_t> beta,
                         bool override_condition = false);

/// n nonnegative parts summing to n; the column multiplicities of a
/// selection of one column per row.
class CompositionVector {
 public:
  static std::optional<CompositionVector> from(std::vector<std::uint32_t> parts);
  static CompositionVector ones(std::size_t n);

  std::size_t size() const noexcept { return parts_.size(); }
  std::uint32_t operator[](std::size_t i) const { return parts_[i]; }
  std::span<const std::uint32_t> parts() const noexcept { return parts_; }
  bool is_ones() const;

  friend bool operator==(const CompositionVector&, const CompositionVector&) = default;
  friend auto operator<=>(const CompositionVector&, const CompositionVector&) = default;

 private:
  explicit CompositionVector(std::vector<std::uint32_t> p) : parts_(std::move(p)) {}
  std::vector<std::uint32_t> parts_;
};

/// C(2n-1, n-1), the number of compositions of n into n parts; saturates
/// at UINT64_MAX.
std::uint64_t composition_count(std::uint64_t n);

/// Visits every composition of n into n parts in descending lexicographic
/// order, starting from [n, 0, ..., 0]. The visitor returns false to stop.
void for_each_composition(std::size_t n,
                          const std::function<bool(std::span<const std::uint32_t>)>& visit);

struct ValidationReport {
  bool valid = true;
  std::uint64_t checked = 0;
  std::optional<CompositionVector> witness;  // first offending composition
  std::vector<CompositionVector> witnesses;  // up to the collection limit, in order
  std::uint64_t witness_count = 0;           // total, even past the limit
  std::chrono::nanoseconds elapsed{0};
};

inline constexpr std::uint64_t kValidationCap = 5'000'000;

/// Brute-force certification: valid iff alpha x = alpha_T has the
/// all-ones vector as its only solution among compositions of n.
ValidationReport validate_alpha(const AlphaMatrix& alpha, std::uint64_t cap = kValidationCap,
                                std::size_t witness_limit = 1000);

}  // namespace iris
