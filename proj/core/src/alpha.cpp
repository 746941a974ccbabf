#include "iris/alpha.hpp"

#include <algorithm>
#include <gmpxx.h>

#include "iris/error.hpp"

namespace iris {

std::string exponent_to_string(Exponent e) {
  if (e == 0) return "0";
  std::string s;
  while (e > 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(e % 10)));
    e /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

std::string to_string(AlphaKind k) {
  switch (k) {
    case AlphaKind::identity: return "identity";
    case AlphaKind::theorem1: return "theorem1";
    case AlphaKind::lemma1: return "lemma1";
    case AlphaKind::user: return "user";
  }
  return "user";
}

AlphaMatrix AlphaMatrix::from_rows(std::vector<std::vector<std::uint64_t>> rows,
                                   Provenance provenance) {
  if (rows.empty() || rows.front().empty()) fail_input("alpha matrix must be non-empty");
  const std::size_t n = rows.front().size();
  for (const auto& r : rows)
    if (r.size() != n) fail_input("alpha matrix rows have different lengths");
  if (provenance.kind == AlphaKind::theorem1) {
    if (rows.size() != 2) fail_input("theorem1 alpha must have two rows");
    for (std::size_t j = 0; j < n; ++j) {
      const Exponent sq = static_cast<Exponent>(rows[0][j]) * rows[0][j];
      if (sq != rows[1][j]) fail_input("theorem1 alpha: row 2 must square row 1");
    }
  }
  AlphaMatrix a;
  a.rows_ = std::move(rows);
  a.provenance_ = provenance;
  for (const auto& r : a.rows_) {
    Exponent total = 0;
    for (std::uint64_t v : r) total += v;
    a.totals_.push_back(total);
    a.total_degree_ += total;
  }
  return a;
}

std::uint64_t AlphaMatrix::row_max(std::size_t l) const {
  return *std::max_element(rows_[l].begin(), rows_[l].end());
}

std::uint64_t AlphaMatrix::row_min(std::size_t l) const {
  return *std::min_element(rows_[l].begin(), rows_[l].end());
}

AlphaMatrix identity_alpha(std::size_t n) {
  if (n == 0) fail_input("identity alpha needs n >= 1");
  std::vector<std::vector<std::uint64_t>> rows(n, std::vector<std::uint64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) rows[i][i] = 1;
  return AlphaMatrix::from_rows(std::move(rows), {AlphaKind::identity, {}, {}});
}

bool theorem1_condition(std::uint64_t p, std::uint64_t n) {
  if (n <= 2) return true;
  const PrimeWindow w = primes_range(p, n);
  // P > n^2 (1 + D/P)(D/d)  <=>  P^2 d > n^2 (P + D) D, all terms positive.
  const mpz_class P(static_cast<unsigned long>(w.primes.front()));
  const mpz_class D(static_cast<unsigned long>(w.delta_max));
  const mpz_class d(static_cast<unsigned long>(*w.delta_min));
  const mpz_class nn(static_cast<unsigned long>(n));
  return P * P * d > nn * nn * (P + D) * D;
}

std::uint64_t minimal_p(std::uint64_t n, std::uint64_t search_cap) {
  if (n == 0) fail_input("minimal_p needs n >= 1");
  for (std::uint64_t p = 1; p <= search_cap; ++p)
    if (theorem1_condition(p, n)) return p;
  fail_guard("minimal_p: no p <= " + std::to_string(search_cap) + " satisfies the prime-gap condition");
}

std::uint64_t resolve_p(const PChoice& choice, std::uint64_t n) {
  switch (choice.policy) {
    case PPolicy::minimal: return minimal_p(n);
    case PPolicy::cube: return std::max<std::uint64_t>(1, n * n * n);
    case PPolicy::explicit_value:
      if (choice.value == 0) fail_input("explicit p must be >= 1");
      return choice.value;
  }
  return 1;
}

AlphaMatrix theorem1_alpha(std::uint64_t n, std::uint64_t p, bool override_condition) {
  if (n == 0) fail_input("theorem1_alpha needs n >= 1");
  if (!override_condition && !theorem1_condition(p, n))
    fail_input("prime-gap condition fails for n=" + std::to_string(n) + ", p=" + std::to_string(p));
  const PrimeWindow w = primes_range(p, n);
  std::vector<std::vector<std::uint64_t>> rows(2);
  for (std::uint64_t q : w.primes) {
    if (q > 0xFFFFFFFFULL) fail_guard("prime too large to square in 64 bits");
    rows[0].push_back(q);
    rows[1].push_back(q * q);
  }
  return AlphaMatrix::from_rows(std::move(rows), {AlphaKind::theorem1, p, {}});
}

std::uint64_t auto_beta(std::uint64_t n, std::uint64_t p) {
  return n * nth_prime(p + n - 1) + 1;
}

AlphaMatrix lemma1_alpha(std::uint64_t n, std::uint64_t p, std::optional<std::uint64_t> beta,
                         bool override_condition) {
  if (n == 0) fail_input("lemma1_alpha needs n >= 1");
  if (!override_condition && !theorem1_condition(p, n))
    fail_input("prime-gap condition fails for n=" + std::to_string(n) + ", p=" + std::to_string(p));
  const std::uint64_t b = beta.value_or(auto_beta(n, p));
  const std::uint64_t largest = nth_prime(p + n - 1);
  if (static_cast<Exponent>(b) <= static_cast<Exponent>(n) * largest)
    fail_input("beta=" + std::to_string(b) + " must exceed n*P_{p+n-1}=" +
               exponent_to_string(static_cast<Exponent>(n) * largest));
  const PrimeWindow w = primes_range(p, n);
  std::vector<std::uint64_t> row;
  for (std::uint64_t q : w.primes) {
    const Exponent v = static_cast<Exponent>(q) + static_cast<Exponent>(b) * q * q;
    if (v > UINT64_MAX) fail_guard("lemma1 exponent exceeds 64 bits");
    row.push_back(static_cast<std::uint64_t>(v));
  }
  return AlphaMatrix::from_rows({std::move(row)}, {AlphaKind::lemma1, p, b});
}

std::optional<CompositionVector> CompositionVector::from(std::vector<std::uint32_t> parts) {
  std::uint64_t sum = 0;
  for (auto v : parts) sum += v;
  if (sum != parts.size()) return std::nullopt;
  return CompositionVector(std::move(parts));
}

CompositionVector CompositionVector::ones(std::size_t n) {
  return CompositionVector(std::vector<std::uint32_t>(n, 1));
}

bool CompositionVector::is_ones() const {
  return std::all_of(parts_.begin(), parts_.end(), [](auto v) { return v == 1; });
}

std::uint64_t composition_count(std::uint64_t n) {
  if (n == 0) return 1;
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), 2 * n - 1, n - 1);
  return c.fits_ulong_p() ? c.get_ui() : UINT64_MAX;
}

void for_each_composition(std::size_t n,
                          const std::function<bool(std::span<const std::uint32_t>)>& visit) {
  if (n == 0) return;
  std::vector<std::uint32_t> parts(n, 0);
  // Iterative descending-lex walk: fill position i with the largest value
  // left, and on backtrack decrement the rightmost position that can give
  // one unit to its successor.
  parts[0] = static_cast<std::uint32_t>(n);
  while (true) {
    if (!visit(parts)) return;
    // Find rightmost i < n-1 with parts[i] > 0.
    std::size_t i = n - 1;
    while (i > 0 && parts[i - 1] == 0) --i;
    if (i == 0) return;
    --i;
    // Move one unit from position i to i+1 and gather the tail there.
    std::uint32_t tail = 0;
    for (std::size_t j = i + 1; j < n; ++j) {
      tail += parts[j];
      parts[j] = 0;
    }
    --parts[i];
    parts[i + 1] = tail + 1;
  }
}

ValidationReport validate_alpha(const AlphaMatrix& alpha, std::uint64_t cap, std::size_t witness_limit) {
  const auto start = std::chrono::steady_clock::now();
  const std::size_t n = alpha.n();
  const std::uint64_t total = composition_count(n);
  if (total > cap)
    fail_guard("validate_alpha: " + std::to_string(total) + " compositions exceed cap " + std::to_string(cap));

  ValidationReport report;
  const auto& targets = alpha.totals();
  for_each_composition(n, [&](std::span<const std::uint32_t> x) {
    ++report.checked;
    bool hit = true;
    for (std::size_t l = 0; l < alpha.t() && hit; ++l) {
      Exponent dot = 0;
      const auto row = alpha.row(l);
      for (std::size_t j = 0; j < n; ++j) dot += static_cast<Exponent>(row[j]) * x[j];
      hit = dot == targets[l];
    }
    if (!hit) return true;
    auto cv = CompositionVector::from(std::vector<std::uint32_t>(x.begin(), x.end()));
    if (cv->is_ones()) return true;
    ++report.witness_count;
    if (!report.witness) report.witness = *cv;
    if (report.witnesses.size() < witness_limit) report.witnesses.push_back(std::move(*cv));
    return true;
  });
  report.valid = !report.witness.has_value();
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

}  // namespace iris
