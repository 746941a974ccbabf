#include "iris/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>
#include <vector>

#include "iris/alpha.hpp"
#include "iris/error.hpp"
#include "iris/summation.hpp"

namespace iris {
namespace {

void check_cap(const char* engine, std::size_t n, std::size_t cap) {
  if (n > cap) {
    fail_guard(std::string(engine) + ": n=" + std::to_string(n) + " exceeds dimension cap " +
               std::to_string(cap));
  }
}

using i128 = Int128;

mpz_class to_mpz(i128 v) {
  const bool neg = v < 0;
  Exponent mag = neg ? static_cast<Exponent>(-(v + 1)) + 1
                              : static_cast<Exponent>(v);
  mpz_class out(static_cast<unsigned long>(mag >> 64));
  out <<= 64;
  out += static_cast<unsigned long>(mag & 0xFFFFFFFFFFFFFFFFULL);
  return neg ? mpz_class(-out) : out;
}

struct SmallComplex {
  std::int64_t re = 0;
  std::int64_t im = 0;
};

// Ryser with 64-bit row sums and 128-bit products, flushed into GMP
// accumulators before the 128-bit partial sum can overflow.
GaussianBigInt ryser_small(const ComplexIntMatrix& a, unsigned term_bits) {
  const std::size_t n = a.n();
  std::vector<SmallComplex> cols(n * n);  // column-major for the update
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      cols[j * n + i] = {a.at(i, j).re().get_si(), a.at(i, j).im().get_si()};

  const std::uint64_t flush_every = std::uint64_t{1} << std::min(40u, 125u - term_bits);
  std::vector<SmallComplex> rowsum(n);
  mpz_class total_re = 0;
  mpz_class total_im = 0;
  i128 acc_re = 0;
  i128 acc_im = 0;
  std::uint64_t pending = 0;
  const bool real = a.is_real();

  const std::uint64_t subsets = std::uint64_t{1} << n;
  for (std::uint64_t g = 1; g < subsets; ++g) {
    const unsigned j = static_cast<unsigned>(std::countr_zero(g));
    const std::uint64_t gray = g ^ (g >> 1);
    const bool added = (gray >> j) & 1u;
    const SmallComplex* col = &cols[j * n];
    if (added) {
      for (std::size_t i = 0; i < n; ++i) {
        rowsum[i].re += col[i].re;
        rowsum[i].im += col[i].im;
      }
    } else {
      for (std::size_t i = 0; i < n; ++i) {
        rowsum[i].re -= col[i].re;
        rowsum[i].im -= col[i].im;
      }
    }
    i128 pr = rowsum[0].re;
    i128 pi = rowsum[0].im;
    if (real) {
      for (std::size_t i = 1; i < n && pr != 0; ++i) pr *= rowsum[i].re;
    } else {
      for (std::size_t i = 1; i < n; ++i) {
        const i128 r = pr * rowsum[i].re - pi * rowsum[i].im;
        pi = pr * rowsum[i].im + pi * rowsum[i].re;
        pr = r;
      }
    }
    if (std::popcount(gray) & 1) {
      acc_re -= pr;
      acc_im -= pi;
    } else {
      acc_re += pr;
      acc_im += pi;
    }
    if (++pending == flush_every) {
      total_re += to_mpz(acc_re);
      total_im += to_mpz(acc_im);
      acc_re = acc_im = 0;
      pending = 0;
    }
  }
  total_re += to_mpz(acc_re);
  total_im += to_mpz(acc_im);
  GaussianBigInt out(total_re, total_im);
  return (n % 2 == 1) ? -out : out;
}

GaussianBigInt ryser_big(const ComplexIntMatrix& a) {
  const std::size_t n = a.n();
  std::vector<GaussianBigInt> rowsum(n);
  GaussianBigInt total;
  const std::uint64_t subsets = std::uint64_t{1} << n;
  for (std::uint64_t g = 1; g < subsets; ++g) {
    const unsigned j = static_cast<unsigned>(std::countr_zero(g));
    const std::uint64_t gray = g ^ (g >> 1);
    const bool added = (gray >> j) & 1u;
    for (std::size_t i = 0; i < n; ++i) {
      if (added)
        rowsum[i] += a.at(i, j);
      else
        rowsum[i] -= a.at(i, j);
    }
    GaussianBigInt prod = rowsum[0];
    for (std::size_t i = 1; i < n && !prod.is_zero(); ++i) prod *= rowsum[i];
    if (std::popcount(gray) & 1)
      total -= prod;
    else
      total += prod;
  }
  return (n % 2 == 1) ? -total : total;
}

GaussianBigInt laplace_rec(const ComplexIntMatrix& a, std::size_t row,
                           std::vector<std::size_t>& free_cols) {
  if (row == a.n()) return GaussianBigInt(1);
  GaussianBigInt sum;
  for (std::size_t idx = 0; idx < free_cols.size(); ++idx) {
    const std::size_t c = free_cols[idx];
    const GaussianBigInt& entry = a.at(row, c);
    if (entry.is_zero()) continue;
    free_cols.erase(free_cols.begin() + static_cast<std::ptrdiff_t>(idx));
    sum += entry * laplace_rec(a, row + 1, free_cols);
    free_cols.insert(free_cols.begin() + static_cast<std::ptrdiff_t>(idx), c);
  }
  return sum;
}

}  // namespace

GaussianBigInt naive_permanent(const ComplexIntMatrix& a, std::size_t cap) {
  const std::size_t n = a.n();
  check_cap("naive", n, cap);
  std::vector<std::size_t> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  GaussianBigInt total;
  do {
    GaussianBigInt prod(1);
    for (std::size_t i = 0; i < n && !prod.is_zero(); ++i) prod *= a.at(i, sigma[i]);
    total += prod;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return total;
}

GaussianBigInt ryser_permanent(const ComplexIntMatrix& a, std::size_t cap) {
  const std::size_t n = a.n();
  check_cap("ryser", n, std::min<std::size_t>(cap, 62));
  if (a.fits_small()) {
    mpz_class term_bound;  // (n*M)^n bounds every row-sum product
    mpz_pow_ui(term_bound.get_mpz_t(), mpz_class(a.bound() * static_cast<unsigned long>(n)).get_mpz_t(),
               static_cast<unsigned long>(n));
    const std::size_t bits = mpz_sizeinbase(term_bound.get_mpz_t(), 2);
    if (bits <= 120) return ryser_small(a, static_cast<unsigned>(bits));
  }
  return ryser_big(a);
}

GaussianBigInt laplace_permanent(const ComplexIntMatrix& a, std::size_t cap) {
  check_cap("laplace", a.n(), cap);
  std::vector<std::size_t> free_cols(a.n());
  std::iota(free_cols.begin(), free_cols.end(), 0);
  return laplace_rec(a, 0, free_cols);
}

std::complex<double> grid_permanent(const ComplexIntMatrix& a, std::size_t cap) {
  const std::size_t n = a.n();
  check_cap("grid", n, cap);
  const ComplexMatrix m = to_complex_double(a);
  std::vector<std::complex<double>> roots(n);
  for (std::size_t r = 0; r < n; ++r)
    roots[r] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(n));

  std::vector<std::size_t> idx(n, 0);
  PairwiseSum<std::complex<double>> sum;
  while (true) {
    std::complex<double> value(1.0, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
      std::complex<double> s(0.0, 0.0);
      for (std::size_t l = 0; l < n; ++l) s += m[k * n + l] * roots[idx[l]];
      value *= s;
    }
    // Divide by prod_l z_l via the conjugates (unit modulus).
    for (std::size_t l = 0; l < n; ++l) value *= std::conj(roots[idx[l]]);
    sum.add(value);

    std::size_t d = 0;
    while (d < n && ++idx[d] == n) idx[d++] = 0;
    if (d == n) break;
  }
  return sum.total() / std::pow(static_cast<double>(n), static_cast<double>(n));
}

}  // namespace iris
