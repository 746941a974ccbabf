#include "iris/gaussian.hpp"

#include "iris/error.hpp"

namespace iris {
namespace {

mpz_class parse_decimal(std::string_view s) {
  std::string text(s);
  std::size_t digits_from = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
  if (text.size() == digits_from) fail_input("empty integer literal");
  for (std::size_t i = digits_from; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') fail_input("not a decimal integer: '" + text + "'");
  }
  if (text[0] == '+') text.erase(0, 1);
  return mpz_class(text, 10);
}

// Round-half-to-even of v / 2^s for a single component.
mpz_class round_shift(const mpz_class& v, BitCount s) {
  if (s == 0) return v;
  mpz_class q;
  mpz_class r;
  mpz_fdiv_q_2exp(q.get_mpz_t(), v.get_mpz_t(), s);
  mpz_fdiv_r_2exp(r.get_mpz_t(), v.get_mpz_t(), s);  // 0 <= r < 2^s
  // Compare r against 2^(s-1).
  mpz_class half;
  mpz_setbit(half.get_mpz_t(), s - 1);
  int c = cmp(r, half);
  if (c > 0 || (c == 0 && mpz_odd_p(q.get_mpz_t()))) q += 1;
  return q;
}

}  // namespace

GaussianBigInt GaussianBigInt::from_decimal(std::string_view re, std::string_view im) {
  return {parse_decimal(re), parse_decimal(im)};
}

std::string GaussianBigInt::to_string() const {
  if (is_real()) return re_.get_str();
  std::string out = re_.get_str();
  if (sgn(im_) >= 0) out += '+';
  out += im_.get_str();
  out += 'j';
  return out;
}

GaussianBigInt& GaussianBigInt::operator*=(const GaussianBigInt& o) {
  // Real operands dominate the workloads (0-1 matrices), so skip the zero
  // products; otherwise use the three-multiplication form.
  if (o.is_real()) {
    re_ *= o.re_;
    im_ *= o.re_;
    return *this;
  }
  if (is_real()) {
    im_ = re_ * o.im_;
    re_ *= o.re_;
    return *this;
  }
  mpz_class ac = re_ * o.re_;
  mpz_class bd = im_ * o.im_;
  mpz_class cross = (re_ + im_) * (o.re_ + o.im_);
  re_ = ac - bd;
  im_ = cross - ac - bd;
  return *this;
}

GaussianBigInt gadd(const GaussianBigInt& x, const GaussianBigInt& y) { return x + y; }

GaussianBigInt gmul(const GaussianBigInt& x, const GaussianBigInt& y) { return x * y; }

GaussianBigInt shift_round(const GaussianBigInt& x, BitCount s) {
  return {round_shift(x.re(), s), round_shift(x.im(), s)};
}

LeastResidue least_residue(const GaussianBigInt& x, BitCount k) {
  if (k == 0) fail_input("least_residue: k must be >= 1");
  LeastResidue out;
  mpz_fdiv_r_2exp(out.a.get_mpz_t(), x.re().get_mpz_t(), k);
  mpz_fdiv_r_2exp(out.b.get_mpz_t(), x.im().get_mpz_t(), k);
  return out;
}

mpz_class modulus_ceil(const GaussianBigInt& x) {
  mpz_class nrm = x.norm();
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), nrm.get_mpz_t());
  if (root * root < nrm) root += 1;
  return root;
}

}  // namespace iris
