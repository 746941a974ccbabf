#include "iris/kernel.hpp"

#include <algorithm>
#include <string>
#include <type_traits>

#include "iris/error.hpp"

namespace iris {
namespace {

void require_theorem1_shape(const AlphaMatrix& alpha) {
  if (alpha.t() != 2) fail_input("kernel probe needs a 2 x n alpha");
  const auto r1 = alpha.row(0);
  const auto r2 = alpha.row(1);
  for (std::size_t j = 0; j < alpha.n(); ++j) {
    if (static_cast<Exponent>(r1[j]) * r1[j] != r2[j])
      fail_input("kernel probe needs row 2 to square row 1");
    for (std::size_t k = 0; k < j; ++k)
      if (r1[k] == r1[j]) fail_input("degenerate alpha: repeated row-1 value");
  }
  if (alpha.n() >= 3 && (r1[0] == 0 || r1[1] == 0)) fail_input("degenerate alpha: zero pivot");
}

mpz_class to_mpz(std::uint64_t v) { return mpz_class(static_cast<unsigned long>(v)); }

// Integer numerators of the first two kernel coordinates over common
// denominators: V^i_1 = num1[i]/den1, V^i_2 = num2[i]/den2.
struct KernelNumerators {
  std::vector<mpz_class> num1, num2;
  mpz_class den1, den2;
};

KernelNumerators numerators(const AlphaMatrix& alpha) {
  const auto r = alpha.row(0);
  const mpz_class a1 = to_mpz(r[0]);
  const mpz_class a2 = to_mpz(r[1]);
  KernelNumerators k;
  k.den1 = a1 * (a2 - a1);
  k.den2 = a2 * (a2 - a1);
  for (std::size_t i = 2; i < alpha.n(); ++i) {
    const mpz_class c = to_mpz(r[i]);
    k.num1.push_back(c * (c - a2));
    k.num2.push_back(c * (a1 - c));
  }
  return k;
}

// Probe core over a machine or GMP integer type.
template <class Int>
void probe_loop(std::size_t n, const std::vector<Int>& num1, const std::vector<Int>& num2, Int den1,
                Int den2, ProbeResult& out) {
  const std::size_t m = n - 2;
  const long lo = -1;
  const long hi = static_cast<long>(n) - 1;
  std::vector<long> gamma(m, lo);
  Int s1 = 0;
  Int s2 = 0;
  for (std::size_t i = 0; i < m; ++i) {
    s1 -= num1[i];
    s2 -= num2[i];
  }
  auto in_range = [&](const Int& s, const Int& den) -> std::optional<long> {
    if (s % den != 0) return std::nullopt;
    const Int q = s / den;
    if (q < Int(lo) || q > Int(hi)) return std::nullopt;
    if constexpr (std::is_same_v<Int, mpz_class>)
      return static_cast<long>(q.get_si());
    else
      return static_cast<long>(q);
  };
  while (true) {
    ++out.combinations;
    const bool nonzero = std::any_of(gamma.begin(), gamma.end(), [](long g) { return g != 0; });
    if (nonzero) {
      const auto v1 = in_range(s1, den1);
      if (v1) {
        const auto v2 = in_range(s2, den2);
        if (v2) {
          std::vector<long> w{*v1, *v2};
          w.insert(w.end(), gamma.begin(), gamma.end());
          out.witnesses.push_back(std::move(w));
        }
      }
    }
    std::size_t d = 0;
    while (d < m) {
      if (gamma[d] < hi) {
        ++gamma[d];
        s1 += num1[d];
        s2 += num2[d];
        break;
      }
      // Wrap from hi back to lo.
      s1 -= num1[d] * Int(hi - lo);
      s2 -= num2[d] * Int(hi - lo);
      gamma[d] = lo;
      ++d;
    }
    if (d == m) break;
  }
}

}  // namespace

KernelBasis kernel_basis(const AlphaMatrix& alpha) {
  require_theorem1_shape(alpha);
  const std::size_t n = alpha.n();
  KernelBasis basis;
  basis.n = n;
  basis.n_up.assign(2, {});
  if (n < 3) return basis;
  const KernelNumerators k = numerators(alpha);
  for (std::size_t i = 0; i + 2 < n; ++i) {
    std::vector<mpq_class> v(n, mpq_class(0));
    v[0] = mpq_class(k.num1[i], k.den1);
    v[1] = mpq_class(k.num2[i], k.den2);
    v[0].canonicalize();
    v[1].canonicalize();
    v[i + 2] = 1;
    for (std::size_t l = 0; l < 2; ++l) {
      mpq_class dot = 0;
      for (std::size_t j = 0; j < n; ++j) dot += mpq_class(to_mpz(alpha.at(l, j))) * v[j];
      if (dot != 0) throw std::logic_error("kernel_basis: column is not annihilated by alpha");
    }
    basis.n_up[0].push_back(v[0]);
    basis.n_up[1].push_back(v[1]);
    basis.vectors.push_back(std::move(v));
  }
  return basis;
}

mpq_class nup_bound(const PrimeWindow& window) {
  if (!window.delta_min) fail_input("nup_bound needs a window of at least two primes");
  const mpz_class n(static_cast<unsigned long>(window.primes.size()));
  const mpz_class P = to_mpz(window.primes.front());
  const mpz_class D = to_mpz(window.delta_max);
  const mpz_class d = to_mpz(*window.delta_min);
  mpq_class b(n * n * (P + D) * D, P * d);
  b.canonicalize();
  return b;
}

ProbeResult rb_minus_probe(const AlphaMatrix& alpha, std::uint64_t cap) {
  require_theorem1_shape(alpha);
  const std::size_t n = alpha.n();
  ProbeResult out;
  if (n < 3) return out;
  mpz_class combos;
  mpz_ui_pow_ui(combos.get_mpz_t(), n + 1, n - 2);
  if (combos > static_cast<unsigned long>(cap))
    fail_guard("rb_minus_probe: " + combos.get_str() + " combinations exceed cap " + std::to_string(cap));

  const KernelNumerators k = numerators(alpha);
  // 128-bit arithmetic suffices while |numerators| * n^2 stays below 2^120.
  mpz_class biggest = abs(k.den1) + abs(k.den2);
  for (std::size_t i = 0; i < k.num1.size(); ++i) biggest += abs(k.num1[i]) + abs(k.num2[i]);
  biggest *= static_cast<unsigned long>(n * n);
  if (mpz_sizeinbase(biggest.get_mpz_t(), 2) < 120) {
    auto narrow = [](const mpz_class& v) {
      // |v| < 2^120: split into 64-bit halves.
      mpz_class mag = abs(v);
      mpz_class hi_part = mag >> 64;
      mpz_class lo_part = mag - (hi_part << 64);
      Int128 r = (static_cast<Int128>(hi_part.get_ui()) << 64) | lo_part.get_ui();
      return sgn(v) < 0 ? -r : r;
    };
    std::vector<Int128> n1, n2;
    for (const auto& v : k.num1) n1.push_back(narrow(v));
    for (const auto& v : k.num2) n2.push_back(narrow(v));
    probe_loop<Int128>(n, n1, n2, narrow(k.den1), narrow(k.den2), out);
  } else {
    probe_loop<mpz_class>(n, k.num1, k.num2, k.den1, k.den2, out);
  }
  std::sort(out.witnesses.begin(), out.witnesses.end());
  return out;
}

std::optional<CompositionVector> probe_witness_to_composition(const std::vector<long>& y) {
  std::vector<std::uint32_t> x;
  x.reserve(y.size());
  for (long v : y) {
    if (v < -1) return std::nullopt;
    x.push_back(static_cast<std::uint32_t>(v + 1));
  }
  return CompositionVector::from(std::move(x));
}

}  // namespace iris
