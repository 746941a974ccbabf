#include "iris/theorem2.hpp"

#include <algorithm>
#include <string>

#include "iris/kernel.hpp"

namespace iris {
namespace {

// sum_k c_k 2^(k*alpha_k) for one component of one row. Unit entries set
// a bit directly; anything else is shifted into place and added.
void place(mpz_class& acc, const mpz_class& c, BitCount position) {
  if (sgn(c) == 0) return;
  if (c == 1 && sgn(acc) >= 0 && mpz_tstbit(acc.get_mpz_t(), position) == 0) {
    mpz_setbit(acc.get_mpz_t(), position);
    return;
  }
  mpz_class term;
  mpz_mul_2exp(term.get_mpz_t(), c.get_mpz_t(), position);
  acc += term;
}

BitCount bit_length(const mpz_class& v) {
  return sgn(v) == 0 ? 0 : mpz_sizeinbase(v.get_mpz_t(), 2);
}

void require_one_row(const ComplexIntMatrix& a, const AlphaMatrix& alpha) {
  if (alpha.t() != 1) fail_input("this engine needs a one-row alpha (got " + std::to_string(alpha.t()) + " rows)");
  if (alpha.n() != a.n()) fail_input("alpha column count does not match the matrix dimension");
}

// Is |v| < 2^(s-1)? For s == 0 the fraction is trivially zero.
bool strictly_below_half(const mpz_class& v, BitCount s) {
  if (s == 0) return sgn(v) == 0;
  mpz_class half;
  mpz_setbit(half.get_mpz_t(), s - 1);
  return abs(v) < half;
}

}  // namespace

std::string to_string(EngineMode m) { return m == EngineMode::sparse ? "sparse" : "bigint"; }

std::string to_string(ValidationPolicy v) {
  switch (v) {
    case ValidationPolicy::brute: return "brute";
    case ValidationPolicy::probe: return "probe";
    case ValidationPolicy::skip: return "skip";
  }
  return "brute";
}

mpz_class modulus_floor(const mpz_class& bound, std::size_t n) {
  mpz_class v;
  mpz_pow_ui(v.get_mpz_t(), mpz_class(bound * static_cast<unsigned long>(n)).get_mpz_t(), n);
  return 2 * v;
}

BitCount auto_k(const mpz_class& bound, std::size_t n) {
  return std::max<BitCount>(1, bit_length(modulus_floor(bound, n)));
}

mpz_class correction_threshold(const mpz_class& bound, std::size_t n) {
  mpz_class pow;
  mpz_class fact;
  mpz_pow_ui(pow.get_mpz_t(), bound.get_mpz_t(), n);
  mpz_fac_ui(fact.get_mpz_t(), n);
  return pow * fact;
}

GaussianBigInt iris_value_at_power_of_two(const ComplexIntMatrix& a, const AlphaMatrix& alpha, BitCount k) {
  require_one_row(a, alpha);
  const std::size_t n = a.n();
  const auto exps = alpha.row(0);
  GaussianBigInt acc;
  for (std::size_t i = 0; i < n; ++i) {
    mpz_class re = 0;
    mpz_class im = 0;
    for (std::size_t j = 0; j < n; ++j) {
      const BitCount position = k * exps[j];
      place(re, a.at(i, j).re(), position);
      place(im, a.at(i, j).im(), position);
    }
    GaussianBigInt row_value(std::move(re), std::move(im));
    if (i == 0)
      acc = std::move(row_value);
    else
      acc *= row_value;
  }
  return acc;
}

BigintResult per_m_bigint(const ComplexIntMatrix& a, const AlphaMatrix& alpha, BitCount k,
                          AlphaCertification cert, std::uint64_t bit_guard) {
  if (cert == AlphaCertification::none)
    throw IrisError(ErrorKind::validation, "per_m_bigint: alpha has not been certified");
  require_one_row(a, alpha);
  const std::size_t n = a.n();
  if (k == 0) fail_input("per_m_bigint: k must be >= 1");
  mpz_class z;
  mpz_setbit(z.get_mpz_t(), k);
  if (!(z > modulus_floor(a.bound(), n)))
    fail_input("per_m_bigint: z = 2^" + std::to_string(k) + " does not exceed 2(Mn)^n = " +
               modulus_floor(a.bound(), n).get_str());
  const Exponent estimate = static_cast<Exponent>(k) * (static_cast<Exponent>(n) * alpha.row_max(0) + 1);
  if (estimate > bit_guard)
    fail_guard("per_m_bigint: estimated " + exponent_to_string(estimate) + " bits exceed the bit guard " +
               std::to_string(bit_guard));

  BigintTrace trace;
  trace.k = k;
  trace.shift = static_cast<BitCount>(static_cast<Exponent>(k) * alpha.totals()[0]);

  const GaussianBigInt iota = iris_value_at_power_of_two(a, alpha, k);
  trace.iris_bits = std::max(bit_length(iota.re()), bit_length(iota.im()));
  trace.per_m = shift_round(iota, trace.shift);

  mpz_class back_re;
  mpz_class back_im;
  mpz_mul_2exp(back_re.get_mpz_t(), trace.per_m.re().get_mpz_t(), trace.shift);
  mpz_mul_2exp(back_im.get_mpz_t(), trace.per_m.im().get_mpz_t(), trace.shift);
  const mpz_class frac_re = iota.re() - back_re;
  const mpz_class frac_im = iota.im() - back_im;
  trace.fraction_below_half =
      strictly_below_half(frac_re, trace.shift) && strictly_below_half(frac_im, trace.shift);
  trace.fraction_bits = std::max(bit_length(frac_re), bit_length(frac_im));

  trace.residue = least_residue(trace.per_m, k);
  const mpz_class threshold = correction_threshold(a.bound(), n);
  mpz_class re = trace.residue.a;
  mpz_class im = trace.residue.b;
  if (re > threshold) {
    re -= z;
    trace.corrected_re = true;
  }
  if (im > threshold) {
    im -= z;
    trace.corrected_im = true;
  }
  return {GaussianBigInt(std::move(re), std::move(im)), std::move(trace)};
}

AlphaCertification certify(const AlphaMatrix& alpha, ValidationPolicy policy, std::uint64_t cap,
                           std::uint64_t* checked) {
  switch (policy) {
    case ValidationPolicy::skip:
      return AlphaCertification::skipped;
    case ValidationPolicy::brute: {
      ValidationReport report = validate_alpha(alpha, cap);
      if (checked) *checked = report.checked;
      if (!report.valid) throw AlphaValidationError("alpha failed brute-force validation", std::move(report));
      return AlphaCertification::brute;
    }
    case ValidationPolicy::probe: {
      const auto& prov = alpha.provenance();
      std::optional<AlphaMatrix> two_row;
      if (alpha.t() == 2) {
        two_row = alpha;
      } else if (prov.kind == AlphaKind::lemma1 && prov.p && prov.beta) {
        const std::uint64_t n = alpha.n();
        if (static_cast<Exponent>(*prov.beta) <= static_cast<Exponent>(n) * nth_prime(*prov.p + n - 1))
          fail_input("probe: beta does not separate the two rows");
        two_row = theorem1_alpha(n, *prov.p, true);
      } else {
        fail_input("probe validation needs a two-row alpha or a Lemma-1 row with known p and beta");
      }
      const ProbeResult probe = rb_minus_probe(*two_row);
      if (checked) *checked = probe.combinations;
      ValidationReport report;
      report.checked = probe.combinations;
      for (const auto& y : probe.witnesses) {
        if (auto x = probe_witness_to_composition(y)) {
          ++report.witness_count;
          if (!report.witness) report.witness = *x;
          report.witnesses.push_back(*x);
        }
      }
      report.valid = !report.witness;
      if (!report.valid) throw AlphaValidationError("alpha failed the kernel probe", std::move(report));
      return AlphaCertification::probe;
    }
  }
  return AlphaCertification::none;
}

Theorem2Result theorem2_permanent(const ComplexIntMatrix& a, const EngineConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  const std::size_t n = a.n();

  std::optional<std::uint64_t> p;
  AlphaMatrix alpha = config.alpha ? *config.alpha : [&] {
    p = resolve_p(config.p, n);
    return lemma1_alpha(n, *p, config.beta);
  }();
  require_one_row(a, alpha);
  if (!p) p = alpha.provenance().p;

  Theorem2Report report{.mode = config.mode,
                        .alpha = alpha,
                        .p = p,
                        .beta = alpha.provenance().beta,
                        .k = std::nullopt,
                        .validation = config.validation,
                        .certification = AlphaCertification::none,
                        .validation_checked = 0,
                        .max_exponent = 0,
                        .term_count = 0,
                        .bit_count = 0,
                        .trace = std::nullopt,
                        .elapsed = {}};
  report.certification = certify(alpha, config.validation, config.validation_cap, &report.validation_checked);
  report.max_exponent = static_cast<Exponent>(n) * alpha.row_max(0);

  GaussianBigInt value;
  if (config.mode == EngineMode::sparse) {
    const SparseIrisPoly poly = iris_poly(a, alpha);
    report.term_count = poly.size();
    value = poly.coefficient(alpha.totals()[0]);
  } else {
    const BitCount k = config.k.value_or(auto_k(a.bound(), n));
    report.k = k;
    BigintResult r = per_m_bigint(a, alpha, k, report.certification, config.bit_guard);
    report.bit_count = r.trace.iris_bits;
    report.trace = std::move(r.trace);
    value = std::move(r.value);
  }
  report.elapsed = std::chrono::steady_clock::now() - start;
  return {std::move(value), std::move(report)};
}

}  // namespace iris
