#include "iris/iris_poly.hpp"

#include <algorithm>
#include <climits>
#include <string>
#include <unordered_map>

#include "iris/error.hpp"

namespace iris {
namespace {

struct ExponentHash {
  std::size_t operator()(Exponent e) const noexcept {
    std::uint64_t x = static_cast<std::uint64_t>(e) ^ (static_cast<std::uint64_t>(e >> 64) * 0x9E3779B97F4A7C15ULL);
    x ^= x >> 33;
    x *= 0xFF51AFD7ED558CCDULL;
    x ^= x >> 33;
    return static_cast<std::size_t>(x);
  }
};

// Coefficients of magnitude below 2^62 stay in machine words.
struct SmallCoef {
  std::int64_t re = 0;
  std::int64_t im = 0;

  bool is_zero() const { return re == 0 && im == 0; }
  void add_product(const SmallCoef& c, const SmallCoef& a) {
    re += c.re * a.re - c.im * a.im;
    im += c.re * a.im + c.im * a.re;
  }
  GaussianBigInt to_big() const {
    return {mpz_class(static_cast<long>(re)), mpz_class(static_cast<long>(im))};
  }
};

struct BigCoef {
  GaussianBigInt v;

  bool is_zero() const { return v.is_zero(); }
  void add_product(const BigCoef& c, const BigCoef& a) { v += c.v * a.v; }
  GaussianBigInt to_big() const { return v; }
};

SmallCoef make_coef(const GaussianBigInt& x, SmallCoef*) { return {x.re().get_si(), x.im().get_si()}; }
BigCoef make_coef(const GaussianBigInt& x, BigCoef*) { return {x}; }

// C(n+i-1, i): multisets of i columns drawn from n.
std::uint64_t multiset_bound(std::size_t n, std::size_t i) {
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), n + i - 1, i);
  return c.fits_ulong_p() ? c.get_ui() : UINT64_MAX;
}

template <class Coef>
void expand(const ComplexIntMatrix& a, const AlphaMatrix& alpha, std::vector<SparseIrisPoly::Term>& out,
            std::vector<std::size_t>& counts) {
  const std::size_t n = a.n();
  const auto row_alpha = alpha.row(0);
  std::vector<std::pair<Exponent, Coef>> current{{0, make_coef(GaussianBigInt(1), static_cast<Coef*>(nullptr))}};
  std::unordered_map<Exponent, Coef, ExponentHash> next;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::pair<std::uint64_t, Coef>> row;
    for (std::size_t k = 0; k < n; ++k)
      if (!a.at(i, k).is_zero()) row.emplace_back(row_alpha[k], make_coef(a.at(i, k), static_cast<Coef*>(nullptr)));
    next.clear();
    next.reserve(current.size() * row.size() + 1);
    for (const auto& [e, c] : current)
      for (const auto& [shift, entry] : row) next[e + shift].add_product(c, entry);
    current.clear();
    for (auto& [e, c] : next)
      if (!c.is_zero()) current.emplace_back(e, std::move(c));
    std::sort(current.begin(), current.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    if (current.size() > multiset_bound(n, i + 1))
      throw std::logic_error("iris_poly: term count exceeds the multiset bound after row " + std::to_string(i + 1));
    counts.push_back(current.size());
  }
  out.reserve(current.size());
  for (const auto& [e, c] : current) out.emplace_back(e, c.to_big());
}

}  // namespace

std::string to_string(AlphaCertification c) {
  switch (c) {
    case AlphaCertification::none: return "none";
    case AlphaCertification::brute: return "brute";
    case AlphaCertification::probe: return "probe";
    case AlphaCertification::skipped: return "skip";
  }
  return "none";
}

GaussianBigInt SparseIrisPoly::coefficient(Exponent e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term& t, Exponent key) { return t.first < key; });
  if (it == terms_.end() || it->first != e) return {};
  return it->second;
}

SparseIrisPoly iris_poly(const ComplexIntMatrix& a, const AlphaMatrix& alpha) {
  if (alpha.t() != 1) fail_input("iris_poly needs a one-row alpha");
  if (alpha.n() != a.n()) fail_input("alpha has " + std::to_string(alpha.n()) + " columns, matrix is " +
                                     std::to_string(a.n()) + "x" + std::to_string(a.n()));
  SparseIrisPoly poly;
  // sum_e |c_e| <= (M n)^n, so machine words suffice below 2^62.
  mpz_class mass;
  mpz_pow_ui(mass.get_mpz_t(), mpz_class(a.bound() * static_cast<unsigned long>(a.n())).get_mpz_t(), a.n());
  mass *= 2;  // componentwise intermediate headroom
  if (a.fits_small() && mpz_sizeinbase(mass.get_mpz_t(), 2) <= 62)
    expand<SmallCoef>(a, alpha, poly.terms_, poly.counts_);
  else
    expand<BigCoef>(a, alpha, poly.terms_, poly.counts_);
  return poly;
}

GaussianBigInt per_m_sparse(const ComplexIntMatrix& a, const AlphaMatrix& alpha, AlphaCertification cert) {
  if (cert == AlphaCertification::none)
    throw IrisError(ErrorKind::validation, "per_m_sparse: alpha has not been certified");
  if (alpha.t() != 1) fail_input("per_m_sparse needs a one-row alpha");
  return iris_poly(a, alpha).coefficient(alpha.totals()[0]);
}

}  // namespace iris
