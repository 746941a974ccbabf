#include "iris/matrix.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <cstdlib>

#include "iris/error.hpp"

namespace iris {

std::optional<PermutationVector> PermutationVector::from(std::vector<std::size_t> images) {
  std::vector<bool> seen(images.size(), false);
  for (std::size_t v : images) {
    if (v >= images.size() || seen[v]) return std::nullopt;
    seen[v] = true;
  }
  return PermutationVector(std::move(images));
}

PermutationVector PermutationVector::identity(std::size_t n) {
  std::vector<std::size_t> s(n);
  for (std::size_t i = 0; i < n; ++i) s[i] = i;
  return PermutationVector(std::move(s));
}

ComplexIntMatrix::ComplexIntMatrix(std::size_t n, std::vector<GaussianBigInt> entries)
    : n_(n), entries_(std::move(entries)) {
  if (n_ == 0) fail_input("matrix must be at least 1x1");
  if (entries_.size() != n_ * n_) fail_input("matrix entry count does not match n*n");
  for (const auto& e : entries_) {
    mpz_class m = modulus_ceil(e);
    if (m > bound_) bound_ = m;
  }
}

ComplexIntMatrix ComplexIntMatrix::identity(std::size_t n) {
  std::vector<GaussianBigInt> e(n * n);
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = GaussianBigInt(1);
  return ComplexIntMatrix(n, std::move(e));
}

ComplexIntMatrix ComplexIntMatrix::ones(std::size_t n) {
  return ComplexIntMatrix(n, std::vector<GaussianBigInt>(n * n, GaussianBigInt(1)));
}

ComplexIntMatrix ComplexIntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  const std::size_t n = rows.size();
  std::vector<GaussianBigInt> e;
  e.reserve(n * n);
  for (const auto& r : rows) {
    if (r.size() != n) fail_input("matrix is not square");
    for (long v : r) e.emplace_back(v);
  }
  return ComplexIntMatrix(n, std::move(e));
}

bool ComplexIntMatrix::is_real() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const auto& e) { return e.is_real(); });
}

bool ComplexIntMatrix::fits_small() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const auto& e) {
    return e.re() >= INT_MIN && e.re() <= INT_MAX && e.im() >= INT_MIN && e.im() <= INT_MAX;
  });
}

ComplexIntMatrix ComplexIntMatrix::transpose() const {
  std::vector<GaussianBigInt> e(n_ * n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) e[j * n_ + i] = at(i, j);
  return ComplexIntMatrix(n_, std::move(e));
}

ComplexIntMatrix ComplexIntMatrix::permuted(const PermutationVector& rows,
                                            const PermutationVector& cols) const {
  if (rows.size() != n_ || cols.size() != n_) fail_input("permutation size mismatch");
  std::vector<GaussianBigInt> e(n_ * n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) e[i * n_ + j] = at(rows[i], cols[j]);
  return ComplexIntMatrix(n_, std::move(e));
}

ComplexIntMatrix ComplexIntMatrix::with_row_scaled(std::size_t i, const GaussianBigInt& c) const {
  if (i >= n_) fail_input("row index out of range");
  std::vector<GaussianBigInt> e(entries_);
  for (std::size_t j = 0; j < n_; ++j) e[i * n_ + j] = e[i * n_ + j] * c;
  return ComplexIntMatrix(n_, std::move(e));
}

std::complex<double> to_complex_double(const GaussianBigInt& x) {
  // mpz_get_d truncates toward zero; strtod rounds to nearest.
  auto nearest = [](const mpz_class& v) {
    if (mpz_sizeinbase(v.get_mpz_t(), 2) <= 53) return v.get_d();
    return std::strtod(v.get_str().c_str(), nullptr);
  };
  return {nearest(x.re()), nearest(x.im())};
}

ComplexMatrix to_complex_double(const ComplexIntMatrix& a) {
  ComplexMatrix out;
  out.reserve(a.entries().size());
  for (const auto& e : a.entries()) out.push_back(to_complex_double(e));
  return out;
}

}  // namespace iris
