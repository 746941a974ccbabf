#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "iris/alpha.hpp"
#include "iris/error.hpp"
#include "iris/kernel.hpp"
#include "iris/primes.hpp"
#include "iris/serialize.hpp"

using iris::AlphaMatrix;
using U64s = std::vector<std::uint64_t>;

TEST_CASE("nth_prime") {
  CHECK(iris::nth_prime(1) == 2);
  CHECK(iris::nth_prime(5) == 11);
  CHECK(iris::nth_prime(27) == 103);
  CHECK(iris::nth_prime(1000) == 7919);
  CHECK(iris::nth_prime(100000) == 1299709);
  CHECK_THROWS_AS(iris::nth_prime(0), iris::IrisError);
}

TEST_CASE("primes_range") {
  const auto w1 = iris::primes_range(1, 3);
  CHECK(w1.primes == U64s{2, 3, 5});
  CHECK(w1.delta_max == 3);
  CHECK(w1.delta_min == 1);
  const auto w2 = iris::primes_range(11, 3);
  CHECK(w2.primes == U64s{31, 37, 41});
  CHECK(w2.delta_max == 10);
  CHECK(w2.delta_min == 4);
  const auto w3 = iris::primes_range(27, 1);
  CHECK(w3.primes == U64s{103});
  CHECK(w3.delta_max == 0);
  CHECK_FALSE(w3.delta_min.has_value());
  CHECK(iris::primes_range(25, 4).primes == U64s{97, 101, 103, 107});
}

TEST_CASE("theorem1_condition") {
  CHECK(iris::theorem1_condition(11, 3));
  CHECK_FALSE(iris::theorem1_condition(9, 3));
  CHECK_FALSE(iris::theorem1_condition(1, 3));
  CHECK_FALSE(iris::theorem1_condition(10, 3));
  CHECK(iris::theorem1_condition(1, 2));
  CHECK(iris::theorem1_condition(1, 1));
}

TEST_CASE("minimal_p matches the scan oracle") {
  const U64s expected{11, 25, 37, 70, 121, 123, 206, 243, 354, 513};
  for (std::uint64_t n = 3; n <= 12; ++n) CHECK(iris::minimal_p(n) == expected[n - 3]);
  CHECK(iris::minimal_p(2) == 1);
}

TEST_CASE("cube policy satisfies the condition") {
  for (std::uint64_t n = 3; n <= 12; ++n) {
    CAPTURE(n);
    CHECK(iris::theorem1_condition(n * n * n, n));
    CHECK(iris::resolve_p({iris::PPolicy::cube, 0}, n) == n * n * n);
  }
  CHECK(iris::resolve_p({iris::PPolicy::explicit_value, 40}, 3) == 40);
}

TEST_CASE("theorem1_alpha") {
  const auto a = iris::theorem1_alpha(3, 11);
  CHECK(a.rows() == std::vector<U64s>{{31, 37, 41}, {961, 1369, 1681}});
  CHECK(a.totals() == std::vector<iris::Exponent>{109, 4011});
  CHECK(a.total_degree() == 4120);
  CHECK(iris::theorem1_alpha(1, 5).rows() == std::vector<U64s>{{11}, {121}});
  CHECK_THROWS_AS(iris::theorem1_alpha(3, 9), iris::IrisError);
  CHECK(iris::theorem1_alpha(3, 9, true).provenance().p == 9);
}

TEST_CASE("lemma1_alpha") {
  const auto a = iris::lemma1_alpha(3, 11, 124);
  CHECK(a.rows() == std::vector<U64s>{{119195, 169793, 208485}});
  CHECK(iris::auto_beta(3, 11) == 124);
  CHECK(iris::lemma1_alpha(3, 11, std::nullopt) == a);
  CHECK(iris::lemma1_alpha(2, 1, 16).rows() == std::vector<U64s>{{66, 147}});
  CHECK_THROWS_AS(iris::lemma1_alpha(3, 11, 123), iris::IrisError);
  CHECK_THROWS_AS(iris::lemma1_alpha(3, 9, std::nullopt), iris::IrisError);
  CHECK(iris::lemma1_alpha(4, 25, std::nullopt).provenance().beta == 429);
  CHECK(iris::lemma1_alpha(4, 25, std::nullopt).row_max(0) == 4911728);
}

TEST_CASE("alpha times the ones vector is alpha_T") {
  for (std::uint64_t n = 1; n <= 8; ++n) {
    for (const auto& alpha : {iris::identity_alpha(n), iris::theorem1_alpha(n, iris::minimal_p(n)),
                              iris::lemma1_alpha(n, iris::minimal_p(n), std::nullopt)}) {
      for (std::size_t l = 0; l < alpha.t(); ++l) {
        iris::Exponent s = 0;
        for (auto v : alpha.row(l)) s += v;
        CHECK(s == alpha.totals()[l]);
      }
    }
  }
}

TEST_CASE("from_rows rejects malformed matrices") {
  CHECK_THROWS_AS(AlphaMatrix::from_rows({}), iris::IrisError);
  CHECK_THROWS_AS(AlphaMatrix::from_rows({{1, 2}, {3}}), iris::IrisError);
  CHECK_THROWS_AS(AlphaMatrix::from_rows({{2, 3}, {4, 10}}, {iris::AlphaKind::theorem1, 1, std::nullopt}),
                  iris::IrisError);
}

TEST_CASE("compositions are enumerated in descending order") {
  std::vector<std::vector<std::uint32_t>> seen;
  iris::for_each_composition(3, [&](std::span<const std::uint32_t> x) {
    seen.emplace_back(x.begin(), x.end());
    return true;
  });
  REQUIRE(seen.size() == 10);
  CHECK(seen.front() == std::vector<std::uint32_t>{3, 0, 0});
  CHECK(seen.back() == std::vector<std::uint32_t>{0, 0, 3});
  CHECK(std::is_sorted(seen.rbegin(), seen.rend()));
  for (std::uint64_t n = 1; n <= 9; ++n) {
    std::uint64_t count = 0;
    iris::for_each_composition(n, [&](std::span<const std::uint32_t>) { return ++count, true; });
    CHECK(count == iris::composition_count(n));
  }
  CHECK(iris::composition_count(12) == 1352078);
  CHECK(iris::composition_count(13) == 5200300);
}

TEST_CASE("validate_alpha") {
  CHECK(iris::validate_alpha(iris::identity_alpha(3)).valid);
  const auto ones = AlphaMatrix::from_rows({{1, 1, 1}});
  const auto bad = iris::validate_alpha(ones);
  CHECK_FALSE(bad.valid);
  REQUIRE(bad.witness.has_value());
  CHECK(*bad.witness == *iris::CompositionVector::from({3, 0, 0}));
  CHECK(bad.witness_count == 9);
  const auto t1 = iris::validate_alpha(iris::theorem1_alpha(3, 11));
  CHECK(t1.valid);
  CHECK(t1.checked == 10);
  CHECK(iris::validate_alpha(iris::lemma1_alpha(3, 11, 124)).valid);
  CHECK_THROWS_AS(iris::validate_alpha(iris::identity_alpha(13)), iris::IrisError);
}

TEST_CASE("constructed alphas validate for n = 3..8") {
  const U64s checked{10, 35, 126, 462, 1716, 6435};
  for (std::uint64_t n = 3; n <= 8; ++n) {
    CAPTURE(n);
    const auto p = iris::minimal_p(n);
    const auto r1 = iris::validate_alpha(iris::theorem1_alpha(n, p));
    const auto r2 = iris::validate_alpha(iris::lemma1_alpha(n, p, std::nullopt));
    CHECK(r1.valid);
    CHECK(r2.valid);
    CHECK(r1.checked == checked[n - 3]);
  }
}

TEST_CASE("lemma1 separation on every composition") {
  for (std::uint64_t n = 2; n <= 8; ++n) {
    const auto p = iris::minimal_p(n);
    const auto t1 = iris::theorem1_alpha(n, p);
    const std::uint64_t beta = iris::auto_beta(n, p);
    const mpz_class limit = mpz_class(std::to_string(n)) * mpz_class(std::to_string(iris::nth_prime(p + n - 1)));
    const mpz_class t0(std::to_string(static_cast<std::uint64_t>(t1.totals()[0])));
    const mpz_class t2(std::to_string(static_cast<std::uint64_t>(t1.totals()[1])));
    bool ok = true;
    iris::for_each_composition(n, [&](std::span<const std::uint32_t> x) {
      mpz_class s1 = 0, s2 = 0;
      for (std::size_t j = 0; j < n; ++j) {
        s1 += mpz_class(std::to_string(t1.at(0, j))) * x[j];
        s2 += mpz_class(std::to_string(t1.at(1, j))) * x[j];
      }
      if (abs(s1 - t0) > limit) ok = false;
      if (s2 != t2 && !(abs(mpz_class(std::to_string(beta)) * (s2 - t2)) > limit)) ok = false;
      return ok;
    });
    CAPTURE(n);
    CHECK(ok);
  }
}

TEST_CASE("kernel_basis") {
  const auto b3 = iris::kernel_basis(iris::theorem1_alpha(3, 11));
  REQUIRE(b3.vectors.size() == 1);
  const auto& v = b3.vectors[0];
  const auto a = iris::theorem1_alpha(3, 11);
  for (std::size_t l = 0; l < 2; ++l) {
    mpq_class s = 0;
    for (std::size_t j = 0; j < 3; ++j) s += mpq_class(std::to_string(a.at(l, j))) * v[j];
    CHECK(s == 0);
  }
  CHECK(v[2] == 1);
  const auto a5 = iris::theorem1_alpha(5, 15, true);
  const auto b5 = iris::kernel_basis(a5);
  REQUIRE(b5.vectors.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t l = 0; l < 2; ++l) {
      mpq_class s = 0;
      for (std::size_t j = 0; j < 5; ++j) s += mpq_class(std::to_string(a5.at(l, j))) * b5.vectors[i][j];
      CHECK(s == 0);
    }
    for (std::size_t j = 2; j < 5; ++j) CHECK(b5.vectors[i][j] == (j == i + 2 ? 1 : 0));
  }
  CHECK(iris::kernel_basis(iris::theorem1_alpha(2, 1)).vectors.empty());
  CHECK_THROWS_AS(iris::kernel_basis(iris::lemma1_alpha(3, 11, 124)), iris::IrisError);
}

TEST_CASE("N_UP stays below the prime-gap bound") {
  for (std::uint64_t n = 3; n <= 7; ++n) {
    const auto p = iris::minimal_p(n);
    const auto basis = iris::kernel_basis(iris::theorem1_alpha(n, p));
    const mpq_class bound = iris::nup_bound(iris::primes_range(p, n));
    const std::size_t m = n - 2;
    std::vector<long> gamma(m, -1);
    bool ok = true;
    while (true) {
      for (std::size_t r = 0; r < 2; ++r) {
        mpq_class s = 0;
        for (std::size_t i = 0; i < m; ++i) s += basis.n_up[r][i] * gamma[i];
        if (!(abs(s) < bound)) ok = false;
      }
      std::size_t d = 0;
      while (d < m && gamma[d] == static_cast<long>(n) - 1) gamma[d++] = -1;
      if (d == m) break;
      ++gamma[d];
    }
    CAPTURE(n);
    CHECK(ok);
  }
}

TEST_CASE("the prime-gap condition does not guarantee validity beyond n = 8") {
  // Both windows satisfy the condition; both admit a second composition.
  const auto a9 = iris::theorem1_alpha(9, iris::minimal_p(9));
  CHECK(iris::theorem1_condition(206, 9));
  const auto r9 = iris::validate_alpha(a9);
  CHECK_FALSE(r9.valid);
  CHECK(*r9.witness == *iris::CompositionVector::from({2, 1, 0, 0, 0, 3, 3, 0, 0}));
  CHECK(r9.witness_count == 11);
  const auto c9 = iris::validate_alpha(iris::theorem1_alpha(9, 729));
  CHECK_FALSE(c9.valid);
  CHECK(*c9.witness == *iris::CompositionVector::from({2, 0, 0, 2, 2, 0, 0, 2, 1}));
  CHECK_FALSE(iris::validate_alpha(iris::lemma1_alpha(9, 206, std::nullopt)).valid);

  // The kernel probe reaches the same eleven compositions on its own.
  const auto probe = iris::rb_minus_probe(a9);
  CHECK(probe.combinations == 10'000'000);
  std::vector<iris::CompositionVector> from_probe;
  for (const auto& w : probe.witnesses)
    if (auto x = iris::probe_witness_to_composition(w)) from_probe.push_back(*x);
  auto from_brute = r9.witnesses;
  std::sort(from_probe.begin(), from_probe.end());
  std::sort(from_brute.begin(), from_brute.end());
  CHECK(from_probe == from_brute);
}

TEST_CASE("rb_minus_probe") {
  const auto r3 = iris::rb_minus_probe(iris::theorem1_alpha(3, 11));
  CHECK(r3.combinations == 4);
  CHECK(r3.witnesses.empty());
  CHECK(iris::rb_minus_probe(iris::theorem1_alpha(2, 1)).witnesses.empty());
  for (std::uint64_t n = 4; n <= 6; ++n) {
    const auto r = iris::rb_minus_probe(iris::theorem1_alpha(n, iris::minimal_p(n)));
    CHECK(r.combinations == static_cast<std::uint64_t>(std::pow(n + 1, n - 2)));
    CHECK(r.witnesses.empty());
  }
}

TEST_CASE("probe finds the aliases of a degenerate window") {
  // p=1 fails the prime condition; the probe and brute force must then
  // report the same collisions.
  const auto alpha = iris::theorem1_alpha(4, 1, true);
  const auto probe = iris::rb_minus_probe(alpha);
  const auto brute = iris::validate_alpha(alpha);
  std::vector<iris::CompositionVector> from_probe;
  for (const auto& w : probe.witnesses)
    if (auto x = iris::probe_witness_to_composition(w)) from_probe.push_back(*x);
  std::vector<iris::CompositionVector> from_brute = brute.witnesses;
  std::sort(from_probe.begin(), from_probe.end());
  std::sort(from_brute.begin(), from_brute.end());
  CHECK(from_probe == from_brute);
  CHECK(brute.valid == from_probe.empty());
}

TEST_CASE("alpha JSON round trip") {
  for (const auto& a : {iris::identity_alpha(3), iris::theorem1_alpha(3, 11), iris::lemma1_alpha(3, 11, 124),
                        AlphaMatrix::from_rows({{1, 1, 1}})}) {
    CHECK(iris::alpha_from_json(iris::to_json(a)) == a);
  }
  auto j = iris::to_json(iris::lemma1_alpha(3, 11, 124));
  j["rows"][0][0] = 5;
  CHECK_THROWS_AS(iris::alpha_from_json(j), iris::IrisError);
}
