#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "iris/alpha.hpp"
#include "iris/gaussian.hpp"
#include "iris/matrix.hpp"

namespace iris {

/// How the exponent matrix handed to an engine was certified.
enum class AlphaCertification {
  none,     // not checked: engines refuse to run
  brute,    // validate_alpha over every composition
  probe,    // kernel probe on the underlying two-row matrix
  skipped,  // caller explicitly waived certification
};

std::string to_string(AlphaCertification c);

/// prod_i sum_k A(i,k) z^alpha_k expanded as exponent -> coefficient, for a
/// one-row alpha. Zero coefficients are dropped; terms are sorted by exponent.
class SparseIrisPoly {
 public:
  using Term = std::pair<Exponent, GaussianBigInt>;

  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  /// Zero when the exponent is absent.
  GaussianBigInt coefficient(Exponent e) const;
  Exponent max_exponent() const { return terms_.empty() ? 0 : terms_.back().first; }
  Exponent min_exponent() const { return terms_.empty() ? 0 : terms_.front().first; }
  /// Term count after multiplying in rows 1..i (index i-1).
  const std::vector<std::size_t>& term_counts() const noexcept { return counts_; }

 private:
  friend SparseIrisPoly iris_poly(const ComplexIntMatrix&, const AlphaMatrix&);
  std::vector<Term> terms_;
  std::vector<std::size_t> counts_;
};

/// Exact sparse product of the n row polynomials. Requires alpha.t() == 1.
/// After i rows the term count never exceeds C(n+i-1, i); a violation
/// throws std::logic_error.
SparseIrisPoly iris_poly(const ComplexIntMatrix& a, const AlphaMatrix& alpha);

/// Coefficient of z^alpha_T: the permanent whenever alpha is valid.
/// Throws IrisError(validation) when certification is `none`.
GaussianBigInt per_m_sparse(const ComplexIntMatrix& a, const AlphaMatrix& alpha,
                            AlphaCertification cert);

}  // namespace iris
