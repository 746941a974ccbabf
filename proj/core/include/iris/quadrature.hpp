#pragma once

#include <complex>
#include <cstdint>

#include "iris/alpha.hpp"
#include "iris/matrix.hpp"

namespace iris {

inline constexpr std::uint64_t kDefaultGridCap = 100'000'000;

/// Samples per angle: N_t = n (max alpha^t - min alpha^t) + 1. Every alias
/// frequency alpha^t x - alpha^t_T over compositions x has magnitude at most
/// n (max - min) < N_t, so the discrete sum cancels it exactly.
struct QuadratureGrid {
  std::uint64_t n1 = 1;
  std::uint64_t n2 = 1;
  std::uint64_t points() const { return n1 * n2; }
};

QuadratureGrid quadrature_grid(const AlphaMatrix& alpha);

/// Double contour integral of the order-2 Iris function over the unit
/// torus, evaluated as an exact double discrete Fourier sum in double
/// precision. alpha must be 2 x n.
std::complex<double> quadrature_permanent(const ComplexMatrix& a, std::size_t n, const AlphaMatrix& alpha,
                                          std::uint64_t grid_cap = kDefaultGridCap);

std::complex<double> quadrature_permanent(const ComplexIntMatrix& a, const AlphaMatrix& alpha,
                                          std::uint64_t grid_cap = kDefaultGridCap);

}  // namespace iris
