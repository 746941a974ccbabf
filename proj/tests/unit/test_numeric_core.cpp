#include <doctest.h>

#include "iris/error.hpp"
#include "iris//gaussian.hpp"
#include "iris/matrix.hpp"
#include "iris/random.hpp"

using iris::GaussianBigInt;

namespace {

GaussianBigInt g(long re, long im = 0) { return {re, im}; }

mpz_class pow2(unsigned long e) {
  mpz_class z;
  mpz_ui_pow_ui(z.get_mpz_t(), 2, e);
  return z;
}

GaussianBigInt random_big(iris::SplitMix64& rng, int limbs) {
  const auto part = [&] {
    mpz_class v = 0;
    for (int i = 0; i < limbs; ++i) v = (v << 64) + mpz_class(std::to_string(rng.next()));
    return rng.below(2) ? mpz_class(-v) : v;
  };
  mpz_class re = part();
  return {re, part()};
}

}  // namespace

TEST_CASE("gadd") {
  CHECK(iris::gadd(g(2, 3), g(-2, -3)).is_zero());
  CHECK(iris::gadd(g(1, 0), g(0, 1)) == g(1, 1));
  const auto big = GaussianBigInt::from_decimal("10000000000000000000000000000000000000000");
  CHECK(iris::gadd(big, g(1)).re_string() == "10000000000000000000000000000000000000001");
}

TEST_CASE("gmul") {
  CHECK(iris::gmul(g(1, 1), g(1, -1)) == g(2));
  CHECK(iris::gmul(g(0, 1), g(0, 1)) == g(-1));
  const mpz_class two64 = pow2(64);
  const GaussianBigInt r = iris::gmul({two64 + 1, 0}, {two64 - 1, 0});
  CHECK(r.re() == pow2(128) - 1);
  CHECK(r.im() == 0);
}

TEST_CASE("gmul is commutative, associative and distributes over gadd") {
  iris::SplitMix64 rng(42);
  for (int i = 0; i < 200; ++i) {
    const auto a = random_big(rng, 1 + static_cast<int>(rng.below(3)));
    const auto b = random_big(rng, 1 + static_cast<int>(rng.below(3)));
    const auto c = random_big(rng, 1 + static_cast<int>(rng.below(3)));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("shift_round") {
  CHECK(iris::shift_round(g(8), 3) == g(1));
  CHECK(iris::shift_round(g(5), 2) == g(1));
  CHECK(iris::shift_round(g(-5, -5), 2) == g(-1, -1));
  CHECK(iris::shift_round(g(6), 2) == g(2));
  CHECK(iris::shift_round(g(10), 2) == g(2));   // 2.5 -> 2
  CHECK(iris::shift_round(g(-6), 2) == g(-2));  // -1.5 -> -2
  CHECK(iris::shift_round(g(-10), 2) == g(-2)); // -2.5 -> -2
  CHECK(iris::shift_round(g(7, -3), 0) == g(7, -3));
}

TEST_CASE("shift_round stays within one half") {
  iris::SplitMix64 rng(7);
  for (int i = 0; i < 500; ++i) {
    const auto x = random_big(rng, 2);
    const iris::BitCount s = rng.below(130);
    const auto r = iris::shift_round(x, s);
    const mpz_class scale = pow2(s);
    const mpz_class half = s == 0 ? mpz_class(0) : pow2(s - 1);
    CHECK(abs(x.re() - r.re() * scale) <= half);
    CHECK(abs(x.im() - r.im() * scale) <= half);
  }
}

TEST_CASE("least_residue") {
  CHECK(iris::least_residue(g(-1), 3) == iris::LeastResidue{7, 0});
  CHECK(iris::least_residue(g(10, 2), 3) == iris::LeastResidue{2, 2});
  CHECK(iris::least_residue(g(-1, -1), 2) == iris::LeastResidue{3, 3});
  CHECK_THROWS_AS(iris::least_residue(g(1), 0), iris::IrisError);
}

TEST_CASE("least_residue ignores multiples of 2^k") {
  iris::SplitMix64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const auto x = random_big(rng, 2);
    const auto m = random_big(rng, 1);
    const iris::BitCount k = 1 + rng.below(100);
    const GaussianBigInt shifted = x + m * GaussianBigInt(pow2(k), 0);
    const auto r = iris::least_residue(x, k);
    CHECK(iris::least_residue(shifted, k) == r);
    CHECK(r.a >= 0);
    CHECK(r.a < pow2(k));
    CHECK(r.b >= 0);
    CHECK(r.b < pow2(k));
  }
}

TEST_CASE("decimal serialization round trips") {
  const auto x = GaussianBigInt::from_decimal("-123456789012345678901234567890", "98765432109876543210");
  CHECK(x.re_string() == "-123456789012345678901234567890");
  CHECK(x.im_string() == "98765432109876543210");
  CHECK(GaussianBigInt::from_decimal(x.re_string(), x.im_string()) == x);
  CHECK(g(3, -2).to_string() == "3-2j");
  CHECK(g(5).to_string() == "5");
  CHECK_THROWS_AS(GaussianBigInt::from_decimal("1.5"), iris::IrisError);
  CHECK_THROWS_AS(GaussianBigInt::from_decimal(""), iris::IrisError);
  CHECK_THROWS_AS(GaussianBigInt::from_decimal("12a"), iris::IrisError);
}

TEST_CASE("modulus_ceil") {
  CHECK(iris::modulus_ceil(g(3, 4)) == 5);
  CHECK(iris::modulus_ceil(g(1, 1)) == 2);
  CHECK(iris::modulus_ceil(g(0)) == 0);
  CHECK(iris::modulus_ceil(g(-7)) == 7);
}

TEST_CASE("matrix bound and validation") {
  const iris::ComplexIntMatrix a(2, {g(0, 1), g(1), g(1), g(0, 1)});
  CHECK(a.bound() == 1);
  CHECK_FALSE(a.is_real());
  CHECK(iris::ComplexIntMatrix(2, {g(3, 4), g(0), g(1, 1), g(-2)}).bound() == 5);
  CHECK(iris::ComplexIntMatrix(2, {g(1, 1), g(0), g(0), g(0)}).bound() == 2);
  CHECK_THROWS_AS(iris::ComplexIntMatrix(2, {g(1), g(2), g(3)}), iris::IrisError);
  CHECK_THROWS_AS(iris::ComplexIntMatrix(0, {}), iris::IrisError);
  CHECK_THROWS_AS(iris::ComplexIntMatrix::from_rows({{1, 2}, {3}}), iris::IrisError);
}

TEST_CASE("matrix transforms") {
  const auto a = iris::ComplexIntMatrix::from_rows({{1, 2}, {3, 4}});
  CHECK(a.transpose() == iris::ComplexIntMatrix::from_rows({{1, 3}, {2, 4}}));
  const auto swap = *iris::PermutationVector::from({1, 0});
  const auto id = iris::PermutationVector::identity(2);
  CHECK(a.permuted(swap, id) == iris::ComplexIntMatrix::from_rows({{3, 4}, {1, 2}}));
  CHECK(a.with_row_scaled(1, g(0, 1)) == iris::ComplexIntMatrix(2, {g(1), g(2), g(0, 3), g(0, 4)}));
  CHECK_FALSE(iris::PermutationVector::from({0, 0}).has_value());
  CHECK_FALSE(iris::PermutationVector::from({0, 2}).has_value());
}

TEST_CASE("random_matrix") {
  const iris::EntryKind binary{};
  CHECK(iris::random_matrix(3, binary, 7) == iris::random_matrix(3, binary, 7));
  const auto gm = iris::random_matrix(4, iris::parse_entry_kind("gaussian:2"), 1);
  for (const auto& e : gm.entries()) CHECK(e.norm() <= 4);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto one = iris::random_matrix(1, binary, seed);
    CHECK((one.at(0, 0) == g(0) || one.at(0, 0) == g(1)));
  }
  const auto im = iris::random_matrix(5, iris::parse_entry_kind("integer:3"), 9);
  for (const auto& e : im.entries()) {
    CHECK(e.is_real());
    CHECK(abs(e.re()) <= 3);
  }
  CHECK(iris::parse_entry_kind("gaussian") == iris::EntryKind{iris::EntryKind::Kind::gaussian, 1});
  CHECK_THROWS_AS(iris::parse_entry_kind("gaussian:x"), iris::IrisError);
  CHECK_THROWS_AS(iris::parse_entry_kind("complex:2"), iris::IrisError);
}

TEST_CASE("random streams are fixed across platforms") {
  iris::SplitMix64 rng(0);
  CHECK(rng.next() == 0xE220A8397B1DCDAFULL);
  CHECK(iris::substream(5, 3).next() == iris::substream(5, 3).next());
  CHECK(iris::substream(5, 3).next() != iris::substream(5, 4).next());
}
