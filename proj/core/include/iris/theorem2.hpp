#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

#include "iris/alpha.hpp"
#include "iris/error.hpp"
#include "iris/gaussian.hpp"
#include "iris/iris_poly.hpp"
#include "iris/matrix.hpp"

namespace iris {

enum class EngineMode { sparse, bigint };
enum class ValidationPolicy { brute, probe, skip };

std::string to_string(EngineMode m);
std::string to_string(ValidationPolicy v);

inline constexpr std::uint64_t kDefaultBitGuard = 1'000'000'000;

struct EngineConfig {
  EngineMode mode = EngineMode::sparse;
  std::optional<BitCount> k;  // nullopt: smallest k with 2^k > 2 (M n)^n
  PChoice p;
  std::optional<std::uint64_t> beta;  // nullopt: n P_{p+n-1} + 1
  ValidationPolicy validation = ValidationPolicy::brute;
  std::uint64_t bit_guard = kDefaultBitGuard;
  std::uint64_t validation_cap = kValidationCap;
  /// When set, used instead of constructing a Lemma-1 row (must be 1 x n).
  std::optional<AlphaMatrix> alpha;
};

/// Raised when certification finds a second solution of alpha x = alpha_T.
class AlphaValidationError : public IrisError {
 public:
  AlphaValidationError(const std::string& what, ValidationReport report)
      : IrisError(ErrorKind::validation, what), report_(std::move(report)) {}
  const ValidationReport& report() const noexcept { return report_; }

 private:
  ValidationReport report_;
};

/// floor(log2(2 (M n)^n)) + 1, and at least 1.
BitCount auto_k(const mpz_class& bound, std::size_t n);

/// 2 (M n)^n, the modulus z must exceed it.
mpz_class modulus_floor(const mpz_class& bound, std::size_t n);

/// M^n n!, the correction threshold for least residues.
mpz_class correction_threshold(const mpz_class& bound, std::size_t n);

struct BigintTrace {
  BitCount k = 0;
  BitCount shift = 0;        // k * alpha_T
  BitCount iris_bits = 0;    // bit length of the larger component of iota(2^k)
  GaussianBigInt per_m;      // nearest Gaussian integer to iota(2^k) / 2^shift
  LeastResidue residue;      // per_m mod 2^k
  bool corrected_re = false;
  bool corrected_im = false;
  /// iota(2^k) - per_m * 2^shift, componentwise strictly inside
  /// (-2^(shift-1), 2^(shift-1)): the discarded fraction is below one half.
  bool fraction_below_half = false;
  BitCount fraction_bits = 0;  // bit length of the larger remainder component
};

struct BigintResult {
  GaussianBigInt value;
  BigintTrace trace;
};

/// Evaluates iota(2^k) with n-1 big multiplications (rows in order), rounds
/// away k*alpha_T bits, reduces mod 2^k and undoes the offset. Requires
/// 2^k > 2 (M n)^n and k*(n*max(alpha)+1) <= bit_guard.
BigintResult per_m_bigint(const ComplexIntMatrix& a, const AlphaMatrix& alpha, BitCount k,
                          AlphaCertification cert, std::uint64_t bit_guard = kDefaultBitGuard);

/// iota(2^k) itself; exposed for the fraction and congruence checks.
GaussianBigInt iris_value_at_power_of_two(const ComplexIntMatrix& a, const AlphaMatrix& alpha, BitCount k);

struct Theorem2Report {
  EngineMode mode = EngineMode::sparse;
  AlphaMatrix alpha;
  std::optional<std::uint64_t> p;
  std::optional<std::uint64_t> beta;
  std::optional<BitCount> k;
  ValidationPolicy validation = ValidationPolicy::brute;
  AlphaCertification certification = AlphaCertification::none;
  std::uint64_t validation_checked = 0;
  Exponent max_exponent = 0;  // n * max(alpha)
  std::size_t term_count = 0;  // sparse mode
  BitCount bit_count = 0;      // bigint mode: bits of iota(2^k)
  std::optional<BigintTrace> trace;
  std::chrono::nanoseconds elapsed{0};
};

struct Theorem2Result {
  GaussianBigInt value;
  Theorem2Report report;
};

/// Builds (or takes) alpha, certifies it per policy and dispatches to the
/// sparse or bigint evaluation.
Theorem2Result theorem2_permanent(const ComplexIntMatrix& a, const EngineConfig& config);

/// Certifies alpha per policy. Brute throws AlphaValidationError on a
/// witness; probe needs Lemma-1 or Theorem-1 provenance.
AlphaCertification certify(const AlphaMatrix& alpha, ValidationPolicy policy, std::uint64_t cap,
                           std::uint64_t* checked = nullptr);

}  // namespace iris
