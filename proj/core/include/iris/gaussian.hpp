#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace iris {

using BitCount = std::uint64_t;

/// Arbitrary-precision Gaussian integer re + im*j.
///
/// Both components are GMP integers (base-2 limbs, sign-magnitude), so
/// additions and products are exact at any size and power-of-two shifts
/// and masks cost O(limbs).
class GaussianBigInt {
 public:
  GaussianBigInt() = default;
  GaussianBigInt(long re, long im = 0) : re_(re), im_(im) {}  // NOLINT
  GaussianBigInt(mpz_class re, mpz_class im) : re_(std::move(re)), im_(std::move(im)) {}

  /// Parses decimal strings (optional leading '-'). Throws IrisError(input).
  static GaussianBigInt from_decimal(std::string_view re, std::string_view im = "0");

  const mpz_class& re() const noexcept { return re_; }
  const mpz_class& im() const noexcept { return im_; }

  bool is_zero() const noexcept { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const noexcept { return sgn(im_) == 0; }

  GaussianBigInt conj() const { return {re_, -im_}; }
  /// re^2 + im^2.
  mpz_class norm() const { return re_ * re_ + im_ * im_; }

  std::string re_string() const { return re_.get_str(); }
  std::string im_string() const { return im_.get_str(); }
  /// Human-readable "a+bj" form; real values print without the j part.
  std::string to_string() const;

  GaussianBigInt& operator+=(const GaussianBigInt& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianBigInt& operator-=(const GaussianBigInt& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianBigInt& operator*=(const GaussianBigInt& o);

  friend GaussianBigInt operator+(GaussianBigInt a, const GaussianBigInt& b) { return a += b; }
  friend GaussianBigInt operator-(GaussianBigInt a, const GaussianBigInt& b) { return a -= b; }
  friend GaussianBigInt operator*(GaussianBigInt a, const GaussianBigInt& b) { return a *= b; }
  friend GaussianBigInt operator-(const GaussianBigInt& a) { return {-a.re_, -a.im_}; }

  friend bool operator==(const GaussianBigInt& a, const GaussianBigInt& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  mpz_class re_{0};
  mpz_class im_{0};
};

GaussianBigInt gadd(const GaussianBigInt& x, const GaussianBigInt& y);
GaussianBigInt gmul(const GaussianBigInt& x, const GaussianBigInt& y);

/// Nearest Gaussian integer to x / 2^s, componentwise. Exact halves round
/// to the even neighbour.
GaussianBigInt shift_round(const GaussianBigInt& x, BitCount s);

struct LeastResidue {
  mpz_class a;  // re(x) mod 2^k, in [0, 2^k)
  mpz_class b;  // im(x) mod 2^k, in [0, 2^k)

  friend bool operator==(const LeastResidue&, const LeastResidue&) = default;
};

/// Componentwise least nonnegative residue modulo 2^k. Requires k >= 1.
LeastResidue least_residue(const GaussianBigInt& x, BitCount k);

/// Smallest nonnegative integer m with m >= sqrt(re^2 + im^2).
mpz_class modulus_ceil(const GaussianBigInt& x);

}  // namespace iris
