#include "certified.hpp"

#include <mpfr.h>

#include <stdexcept>

namespace stablegenus::detail {

namespace {

// Minimal RAII holder; mpfr_t has no C++ wrapper in the system packages.
class Real {
 public:
  explicit Real(unsigned bits) { mpfr_init2(v_, static_cast<mpfr_prec_t>(bits)); }
  ~Real() { mpfr_clear(v_); }
  Real(const Real&) = delete;
  Real& operator=(const Real&) = delete;
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

  Rational to_rational() const {
    Rational q;
    mpfr_get_q(q.get_mpq_t(), v_);
    q.canonicalize();
    return q;
  }

 private:
  mpfr_t v_;
};

bool exact_two_cos(const Rational& t, Rational& out) {
  if (t == 0) out = 2;
  else if (t == Rational(1, 6)) out = 1;
  else if (t == Rational(1, 4)) out = 0;
  else if (t == Rational(1, 3)) out = -1;
  else if (t == Rational(1, 2)) out = -2;
  else return false;
  return true;
}

}  // namespace

Enclosure two_cos_two_pi(const Rational& t, unsigned bits) {
  if (t < 0 || t > Rational(1, 2)) throw std::invalid_argument("two_cos_two_pi: t outside [0, 1/2]");
  if (Rational exact; exact_two_cos(t, exact)) return {exact, exact};

  Real pi_lo(bits), pi_hi(bits), theta_lo(bits), theta_hi(bits), c_lo(bits), c_hi(bits);
  const Rational two_t = 2 * t;
  mpfr_const_pi(pi_lo.get(), MPFR_RNDD);
  mpfr_const_pi(pi_hi.get(), MPFR_RNDU);
  mpfr_mul_q(theta_lo.get(), pi_lo.get(), two_t.get_mpq_t(), MPFR_RNDD);
  mpfr_mul_q(theta_hi.get(), pi_hi.get(), two_t.get_mpq_t(), MPFR_RNDU);

  // cos is decreasing on [0, pi]; past pi the lower bound clamps to -1.
  if (mpfr_cmp(theta_hi.get(), pi_lo.get()) >= 0) {
    mpfr_set_si(c_lo.get(), -1, MPFR_RNDD);
  } else {
    mpfr_cos(c_lo.get(), theta_hi.get(), MPFR_RNDD);
  }
  mpfr_cos(c_hi.get(), theta_lo.get(), MPFR_RNDU);
  return {2 * c_lo.to_rational(), 2 * c_hi.to_rational()};
}

Enclosure angle_from_two_cos(const Rational& z_lo, const Rational& z_hi, unsigned bits) {
  if (z_lo > z_hi || z_lo < -2 || z_hi > 2) throw std::invalid_argument("angle_from_two_cos: bad interval");
  Real x_lo(bits), x_hi(bits), a_lo(bits), a_hi(bits), two_pi_lo(bits), two_pi_hi(bits), t_lo(bits), t_hi(bits);
  const Rational half_lo = z_lo / 2;
  const Rational half_hi = z_hi / 2;
  mpfr_set_q(x_lo.get(), half_lo.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(x_hi.get(), half_hi.get_mpq_t(), MPFR_RNDU);
  if (mpfr_cmp_si(x_lo.get(), -1) < 0) mpfr_set_si(x_lo.get(), -1, MPFR_RNDN);
  if (mpfr_cmp_si(x_hi.get(), 1) > 0) mpfr_set_si(x_hi.get(), 1, MPFR_RNDN);
  // acos is decreasing: the largest z gives the smallest angle.
  mpfr_acos(a_lo.get(), x_hi.get(), MPFR_RNDD);
  mpfr_acos(a_hi.get(), x_lo.get(), MPFR_RNDU);
  mpfr_const_pi(two_pi_lo.get(), MPFR_RNDD);
  mpfr_const_pi(two_pi_hi.get(), MPFR_RNDU);
  mpfr_mul_2ui(two_pi_lo.get(), two_pi_lo.get(), 1, MPFR_RNDD);
  mpfr_mul_2ui(two_pi_hi.get(), two_pi_hi.get(), 1, MPFR_RNDU);
  mpfr_div(t_lo.get(), a_lo.get(), two_pi_hi.get(), MPFR_RNDD);
  mpfr_div(t_hi.get(), a_hi.get(), two_pi_lo.get(), MPFR_RNDU);
  Rational lo = t_lo.to_rational();
  Rational hi = t_hi.to_rational();
  if (lo < 0) lo = 0;
  if (hi > Rational(1, 2)) hi = Rational(1, 2);
  return {lo, hi};
}

}  // namespace stablegenus::detail
