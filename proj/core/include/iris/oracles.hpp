#pragma once

#include <complex>
#include <cstddef>

#include "iris/gaussian.hpp"
#include "iris/matrix.hpp"

namespace iris {

/// Dimension caps for the exponential-time reference engines. They are
/// configuration, not hard limits of the algorithms.
struct OracleCaps {
  std::size_t naive = 10;
  std::size_t ryser = 24;
  std::size_t laplace = 10;
  std::size_t grid = 7;
};

/// Sum over all permutations sigma of prod_i A(i, sigma(i)).
GaussianBigInt naive_permanent(const ComplexIntMatrix& a, std::size_t cap = OracleCaps{}.naive);

/// Ryser inclusion-exclusion over column subsets, visited in Gray-code
/// order so each step updates the row sums with one column.
GaussianBigInt ryser_permanent(const ComplexIntMatrix& a, std::size_t cap = OracleCaps{}.ryser);

/// Recursive expansion along the first row; per of the empty matrix is 1.
GaussianBigInt laplace_permanent(const ComplexIntMatrix& a, std::size_t cap = OracleCaps{}.laplace);

/// Generating-function form sampled on the n-th roots of unity in every
/// coordinate (n^n points), evaluated in double precision.
std::complex<double> grid_permanent(const ComplexIntMatrix& a, std::size_t cap = OracleCaps{}.grid);

}  // namespace iris
