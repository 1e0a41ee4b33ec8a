#pragma once

#include <mpfr.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

#include "coercheck/rational.hpp"

namespace coercheck {

inline constexpr mpfr_prec_t kDefaultPrecision = 192;

/// RAII wrapper around one mpfr number.
class HpFloat {
 public:
  explicit HpFloat(mpfr_prec_t prec = kDefaultPrecision) {
    mpfr_init2(v_, prec);
    mpfr_set_nan(v_);
  }
  HpFloat(const HpFloat& other) {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  HpFloat(HpFloat&& other) noexcept {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_swap(v_, other.v_);
  }
  HpFloat& operator=(HpFloat other) noexcept {
    mpfr_swap(v_, other.v_);
    return *this;
  }
  ~HpFloat() { mpfr_clear(v_); }

  static HpFloat from_rational(const Rational& q, mpfr_prec_t prec, mpfr_rnd_t rnd) {
    HpFloat x(prec);
    mpfr_set_q(x.v_, q.get_mpq_t(), rnd);
    return x;
  }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }

  /// Exact conversion; every finite mpfr value is rational.
  Rational to_rational() const {
    Rational q;
    mpfr_get_q(q.get_mpq_t(), v_);
    return q;
  }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  int cmp(const Rational& q) const { return mpfr_cmp_q(v_, q.get_mpq_t()); }
  int cmp(const HpFloat& other) const { return mpfr_cmp(v_, other.v_); }
  int sign() const { return mpfr_sgn(v_); }

  std::string to_string(int digits = 40) const {
    char buf[128];
    mpfr_snprintf(buf, sizeof buf, "%.*Re", digits, v_);
    return buf;
  }

 private:
  mpfr_t v_;
};

enum class CmpResult { Below, Inside, Above };

/// Closed interval [lo, hi] with outward-rounded endpoints; every operation
/// preserves the enclosure property.
class Interval {
 public:
  Interval(HpFloat lo, HpFloat hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (mpfr_cmp(lo_.get(), hi_.get()) > 0) throw std::logic_error("inverted interval");
  }

  static Interval from_rational(const Rational& q, mpfr_prec_t prec) {
    return {HpFloat::from_rational(q, prec, MPFR_RNDD),
            HpFloat::from_rational(q, prec, MPFR_RNDU)};
  }

  static Interval zero(mpfr_prec_t prec) { return from_rational(Rational(0), prec); }

  /// Enclosure of ln(q) for q > 0.
  static Interval log_of_rational(const Rational& q, mpfr_prec_t prec) {
    if (q <= 0) throw std::domain_error("log of a non-positive rational");
    HpFloat lo = HpFloat::from_rational(q, prec, MPFR_RNDD);
    HpFloat hi = HpFloat::from_rational(q, prec, MPFR_RNDU);
    mpfr_log(lo.get(), lo.get(), MPFR_RNDD);
    mpfr_log(hi.get(), hi.get(), MPFR_RNDU);
    return {std::move(lo), std::move(hi)};
  }

  const HpFloat& lo() const { return lo_; }
  const HpFloat& hi() const { return hi_; }
  mpfr_prec_t precision() const { return std::max(lo_.precision(), hi_.precision()); }

  Interval add(const Interval& other) const {
    HpFloat lo(precision_with(other)), hi(precision_with(other));
    mpfr_add(lo.get(), lo_.get(), other.lo_.get(), MPFR_RNDD);
    mpfr_add(hi.get(), hi_.get(), other.hi_.get(), MPFR_RNDU);
    return {std::move(lo), std::move(hi)};
  }

  Interval sub(const Interval& other) const {
    HpFloat lo(precision_with(other)), hi(precision_with(other));
    mpfr_sub(lo.get(), lo_.get(), other.hi_.get(), MPFR_RNDD);
    mpfr_sub(hi.get(), hi_.get(), other.lo_.get(), MPFR_RNDU);
    return {std::move(lo), std::move(hi)};
  }

  Interval neg() const {
    HpFloat lo(precision()), hi(precision());
    mpfr_neg(lo.get(), hi_.get(), MPFR_RNDD);
    mpfr_neg(hi.get(), lo_.get(), MPFR_RNDU);
    return {std::move(lo), std::move(hi)};
  }

  /// Multiplication by a rational q > 0.
  Interval mul_positive_rational(const Rational& q) const {
    if (q <= 0) throw std::domain_error("factor must be positive");
    HpFloat lo(precision()), hi(precision());
    mpfr_mul_q(lo.get(), lo_.get(), q.get_mpq_t(), MPFR_RNDD);
    mpfr_mul_q(hi.get(), hi_.get(), q.get_mpq_t(), MPFR_RNDU);
    return {std::move(lo), std::move(hi)};
  }

  Interval exp() const {
    HpFloat lo(precision()), hi(precision());
    mpfr_exp(lo.get(), lo_.get(), MPFR_RNDD);
    mpfr_exp(hi.get(), hi_.get(), MPFR_RNDU);
    return {std::move(lo), std::move(hi)};
  }

  /// q / *this for q >= 0 and a strictly positive interval.
  static Interval div_rational(const Rational& q, const Interval& denom, mpfr_prec_t prec) {
    if (q < 0) throw std::domain_error("numerator must be non-negative");
    if (denom.lo_.sign() <= 0) throw std::domain_error("denominator must be strictly positive");
    HpFloat qlo = HpFloat::from_rational(q, prec, MPFR_RNDD);
    HpFloat qhi = HpFloat::from_rational(q, prec, MPFR_RNDU);
    HpFloat lo(prec), hi(prec);
    mpfr_div(lo.get(), qlo.get(), denom.hi_.get(), MPFR_RNDD);
    mpfr_div(hi.get(), qhi.get(), denom.lo_.get(), MPFR_RNDU);
    return {std::move(lo), std::move(hi)};
  }

  /// Position of a rational relative to this enclosure.
  CmpResult locate(const Rational& q) const {
    if (hi_.cmp(q) < 0) return CmpResult::Above;  // whole interval below q
    if (lo_.cmp(q) > 0) return CmpResult::Below;  // whole interval above q
    return CmpResult::Inside;
  }

  bool contains(const Rational& q) const { return locate(q) == CmpResult::Inside; }

  // Certainty predicates about the enclosed value x in [lo, hi].
  bool certainly_less_than(const Rational& q) const { return hi_.cmp(q) < 0; }
  bool certainly_at_most(const Rational& q) const { return hi_.cmp(q) <= 0; }
  bool certainly_greater_than(const Rational& q) const { return lo_.cmp(q) > 0; }
  bool certainly_at_least(const Rational& q) const { return lo_.cmp(q) >= 0; }

  /// Upper bound on hi - lo.
  Rational width() const { return hi_.to_rational() - lo_.to_rational(); }

 private:
  mpfr_prec_t precision_with(const Interval& other) const {
    return std::max(precision(), other.precision());
  }

  HpFloat lo_, hi_;
};

/// Positive quantity carried in the log domain together with its certified
/// enclosure in the value domain.
struct LogValue {
  Interval log;    // enclosure of the natural log
  Interval value;  // exp of the log enclosure, outward-rounded
};

}  // namespace coercheck
