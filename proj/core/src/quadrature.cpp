#include "iris/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "iris/error.hpp"
#include "iris/summation.hpp"

namespace iris {
namespace {

std::vector<std::complex<double>> unit_roots(std::uint64_t count) {
  std::vector<std::complex<double>> r(count);
  for (std::uint64_t m = 0; m < count; ++m)
    r[m] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(count));
  return r;
}

std::uint64_t mod_of(Exponent v, std::uint64_t m) { return static_cast<std::uint64_t>(v % m); }

}  // namespace

QuadratureGrid quadrature_grid(const AlphaMatrix& alpha) {
  if (alpha.t() != 2) fail_input("quadrature needs a 2 x n alpha");
  const Exponent n = alpha.n();
  const Exponent s1 = n * (alpha.row_max(0) - alpha.row_min(0)) + 1;
  const Exponent s2 = n * (alpha.row_max(1) - alpha.row_min(1)) + 1;
  if (s1 > UINT64_MAX || s2 > UINT64_MAX || s1 * s2 > UINT64_MAX) fail_guard("quadrature grid size overflows");
  return {static_cast<std::uint64_t>(s1), static_cast<std::uint64_t>(s2)};
}

std::complex<double> quadrature_permanent(const ComplexMatrix& a, std::size_t n, const AlphaMatrix& alpha,
                                          std::uint64_t grid_cap) {
  if (a.size() != n * n || n == 0) fail_input("quadrature: matrix is not n x n");
  if (alpha.n() != n) fail_input("quadrature: alpha column count does not match the matrix dimension");
  const QuadratureGrid grid = quadrature_grid(alpha);
  if (grid.points() > grid_cap)
    fail_guard("quadrature: " + std::to_string(grid.n1) + " x " + std::to_string(grid.n2) +
               " grid exceeds cap " + std::to_string(grid_cap));

  const auto roots1 = unit_roots(grid.n1);
  const auto roots2 = unit_roots(grid.n2);
  std::vector<std::uint64_t> step1(n), step2(n);
  for (std::size_t k = 0; k < n; ++k) {
    step1[k] = mod_of(alpha.at(0, k), grid.n1);
    step2[k] = mod_of(alpha.at(1, k), grid.n2);
  }
  const std::uint64_t total1 = mod_of(alpha.totals()[0], grid.n1);
  const std::uint64_t total2 = mod_of(alpha.totals()[1], grid.n2);

  std::vector<std::complex<double>> phase1(n), column(n);
  std::vector<std::uint64_t> idx2(n);
  PairwiseSum<std::complex<double>> sum;
  std::uint64_t den1 = 0;  // (alpha_T^1 * i1) mod N1
  std::vector<std::uint64_t> idx1(n, 0);
  for (std::uint64_t i1 = 0; i1 < grid.n1; ++i1) {
    for (std::size_t k = 0; k < n; ++k) phase1[k] = roots1[idx1[k]];
    const std::complex<double> outer = std::conj(roots1[den1]);
    std::fill(idx2.begin(), idx2.end(), 0);
    std::uint64_t den2 = 0;
    for (std::uint64_t i2 = 0; i2 < grid.n2; ++i2) {
      for (std::size_t k = 0; k < n; ++k) column[k] = phase1[k] * roots2[idx2[k]];
      std::complex<double> value = outer * std::conj(roots2[den2]);
      for (std::size_t r = 0; r < n; ++r) {
        std::complex<double> s(0.0, 0.0);
        const std::complex<double>* row = &a[r * n];
        for (std::size_t k = 0; k < n; ++k) s += row[k] * column[k];
        value *= s;
      }
      sum.add(value);
      for (std::size_t k = 0; k < n; ++k) {
        idx2[k] += step2[k];
        if (idx2[k] >= grid.n2) idx2[k] -= grid.n2;
      }
      den2 += total2;
      if (den2 >= grid.n2) den2 -= grid.n2;
    }
    for (std::size_t k = 0; k < n; ++k) {
      idx1[k] += step1[k];
      if (idx1[k] >= grid.n1) idx1[k] -= grid.n1;
    }
    den1 += total1;
    if (den1 >= grid.n1) den1 -= grid.n1;
  }
  return sum.total() / (static_cast<double>(grid.n1) * static_cast<double>(grid.n2));
}

std::complex<double> quadrature_permanent(const ComplexIntMatrix& a, const AlphaMatrix& alpha,
                                          std::uint64_t grid_cap) {
  return quadrature_permanent(to_complex_double(a), a.n(), alpha, grid_cap);
}

}  // namespace iris
