#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "iris/gaussian.hpp"

namespace iris {

/// A bijection on {0, ..., n-1}, stored as sigma[i] = image of i.
class PermutationVector {
 public:
  /// Returns nullopt unless `images` is a permutation of 0..n-1.
  static std::optional<PermutationVector> from(std::vector<std::size_t> images);
  static PermutationVector identity(std::size_t n);

  std::size_t size() const noexcept { return sigma_.size(); }
  std::size_t operator[](std::size_t i) const { return sigma_[i]; }
  std::span<const std::size_t> images() const noexcept { return sigma_; }

 private:
  explicit PermutationVector(std::vector<std::size_t> s) : sigma_(std::move(s)) {}
  std::vector<std::size_t> sigma_;
};

/// Square matrix of Gaussian integers with its entry-modulus bound M, the
/// smallest nonnegative integer with |A(i,j)| <= M for every entry.
class ComplexIntMatrix {
 public:
  /// Row-major entries; throws IrisError(input) unless entries.size() == n*n, n >= 1.
  ComplexIntMatrix(std::size_t n, std::vector<GaussianBigInt> entries);

  static ComplexIntMatrix identity(std::size_t n);
  static ComplexIntMatrix ones(std::size_t n);
  /// Real integer rows; throws unless square and non-empty.
  static ComplexIntMatrix from_rows(const std::vector<std::vector<long>>& rows);

  std::size_t n() const noexcept { return n_; }
  const GaussianBigInt& at(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  std::span<const GaussianBigInt> row(std::size_t i) const {
    return std::span<const GaussianBigInt>(entries_).subspan(i * n_, n_);
  }
  std::span<const GaussianBigInt> entries() const noexcept { return entries_; }
  const mpz_class& bound() const noexcept { return bound_; }

  bool is_real() const;
  /// True when every component fits in a signed 32-bit integer.
  bool fits_small() const;

  ComplexIntMatrix transpose() const;
  /// Result(i, j) = A(rows[i], cols[j]).
  ComplexIntMatrix permuted(const PermutationVector& rows, const PermutationVector& cols) const;
  ComplexIntMatrix with_row_scaled(std::size_t i, const GaussianBigInt& c) const;

  friend bool operator==(const ComplexIntMatrix& a, const ComplexIntMatrix& b) {
    return a.n_ == b.n_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t n_;
  std::vector<GaussianBigInt> entries_;
  mpz_class bound_;
};

using ComplexMatrix = std::vector<std::complex<double>>;  // row-major n*n

/// Nearest-double conversion of each entry.
ComplexMatrix to_complex_double(const ComplexIntMatrix& a);

/// Nearest double to each component of x.
std::complex<double> to_complex_double(const GaussianBigInt& x);

}  // namespace iris
