#include "paulivol/interval.hpp"

#include <algorithm>
#include <stdexcept>

namespace paulivol {

namespace {

unsigned joint_precision(const BoundInterval& a, const BoundInterval& b) {
    return std::max(a.precision_bits(), b.precision_bits());
}

}  // namespace

BoundInterval::BoundInterval(unsigned precision_bits) : precision_(precision_bits) {
    if (precision_bits < MPFR_PREC_MIN)
        throw std::invalid_argument("BoundInterval: precision too small");
    mpfr_init2(lo_, precision_);
    mpfr_init2(hi_, precision_);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

BoundInterval::BoundInterval(const BoundInterval& other) : precision_(other.precision_) {
    mpfr_init2(lo_, precision_);
    mpfr_init2(hi_, precision_);
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

BoundInterval::BoundInterval(BoundInterval&& other) noexcept : precision_(other.precision_) {
    mpfr_init2(lo_, MPFR_PREC_MIN);
    mpfr_init2(hi_, MPFR_PREC_MIN);
    mpfr_swap(lo_, other.lo_);
    mpfr_swap(hi_, other.hi_);
}

BoundInterval& BoundInterval::operator=(const BoundInterval& other) {
    if (this == &other) return *this;
    precision_ = other.precision_;
    mpfr_set_prec(lo_, precision_);
    mpfr_set_prec(hi_, precision_);
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
    return *this;
}

BoundInterval& BoundInterval::operator=(BoundInterval&& other) noexcept {
    precision_ = other.precision_;
    mpfr_swap(lo_, other.lo_);
    mpfr_swap(hi_, other.hi_);
    return *this;
}

BoundInterval::~BoundInterval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

BoundInterval BoundInterval::from_rational(const Rational& q, unsigned precision_bits) {
    BoundInterval r(precision_bits);
    mpfr_set_q(r.lo_, q.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, q.get_mpq_t(), MPFR_RNDU);
    return r;
}

BoundInterval BoundInterval::from_long(long v, unsigned precision_bits) {
    BoundInterval r(precision_bits);
    mpfr_set_si(r.lo_, v, MPFR_RNDD);
    mpfr_set_si(r.hi_, v, MPFR_RNDU);
    return r;
}

BoundInterval BoundInterval::one(unsigned precision_bits) { return from_long(1, precision_bits); }
BoundInterval BoundInterval::zero(unsigned precision_bits) { return from_long(0, precision_bits); }

BoundInterval operator+(const BoundInterval& a, const BoundInterval& b) {
    BoundInterval r(joint_precision(a, b));
    mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
}

BoundInterval operator-(const BoundInterval& a, const BoundInterval& b) {
    BoundInterval r(joint_precision(a, b));
    mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
    return r;
}

BoundInterval BoundInterval::operator-() const {
    BoundInterval r(precision_);
    mpfr_neg(r.lo_, hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    return r;
}

namespace {

// Extrema of a bivariate operation that is monotone in each argument
// separately are attained at the corners of the box.
template <typename Op>
void corner_eval(mpfr_ptr out_lo, mpfr_ptr out_hi, const BoundInterval& a,
                 const BoundInterval& b, Op op) {
    mpfr_t cand;
    mpfr_init2(cand, mpfr_get_prec(out_lo));
    const mpfr_srcptr as[2] = {a.lo(), a.hi()};
    const mpfr_srcptr bs[2] = {b.lo(), b.hi()};
    bool first = true;
    for (const auto& x : as) {
        for (const auto& y : bs) {
            op(cand, x, y, MPFR_RNDD);
            if (first || mpfr_cmp(cand, out_lo) < 0) mpfr_set(out_lo, cand, MPFR_RNDD);
            op(cand, x, y, MPFR_RNDU);
            if (first || mpfr_cmp(cand, out_hi) > 0) mpfr_set(out_hi, cand, MPFR_RNDU);
            first = false;
        }
    }
    mpfr_clear(cand);
}

}  // namespace

BoundInterval operator*(const BoundInterval& a, const BoundInterval& b) {
    BoundInterval r(joint_precision(a, b));
    corner_eval(r.lo_, r.hi_, a, b,
                [](mpfr_ptr out, mpfr_srcptr x, mpfr_srcptr y, mpfr_rnd_t rnd) {
                    mpfr_mul(out, x, y, rnd);
                });
    return r;
}

BoundInterval operator/(const BoundInterval& a, const BoundInterval& b) {
    if (mpfr_sgn(b.lo()) <= 0 && mpfr_sgn(b.hi()) >= 0)
        throw std::domain_error("BoundInterval: division by interval containing zero");
    BoundInterval r(joint_precision(a, b));
    corner_eval(r.lo_, r.hi_, a, b,
                [](mpfr_ptr out, mpfr_srcptr x, mpfr_srcptr y, mpfr_rnd_t rnd) {
                    mpfr_div(out, x, y, rnd);
                });
    return r;
}

BoundInterval pow(const BoundInterval& base, const BoundInterval& exponent) {
    if (mpfr_sgn(base.lo()) <= 0)
        throw std::domain_error("BoundInterval: pow requires a positive base");
    // x^y with x > 0 is monotone in x for fixed y and in y for fixed x.
    BoundInterval r(joint_precision(base, exponent));
    corner_eval(r.lo_, r.hi_, base, exponent,
                [](mpfr_ptr out, mpfr_srcptr x, mpfr_srcptr y, mpfr_rnd_t rnd) {
                    mpfr_pow(out, x, y, rnd);
                });
    return r;
}

BoundInterval pow_ui(const BoundInterval& base, unsigned long e) {
    if (mpfr_sgn(base.lo()) < 0)
        throw std::domain_error("BoundInterval: pow_ui requires a nonnegative base");
    BoundInterval r(base.precision_bits());
    mpfr_pow_ui(r.lo_, base.lo_, e, MPFR_RNDD);
    mpfr_pow_ui(r.hi_, base.hi_, e, MPFR_RNDU);
    return r;
}

BoundInterval sqrt(const BoundInterval& a) {
    if (mpfr_sgn(a.lo()) < 0)
        throw std::domain_error("BoundInterval: sqrt of negative interval");
    BoundInterval r(a.precision_bits());
    mpfr_sqrt(r.lo_, a.lo_, MPFR_RNDD);
    mpfr_sqrt(r.hi_, a.hi_, MPFR_RNDU);
    return r;
}

bool BoundInterval::contains(const Rational& q) const {
    return mpfr_cmp_q(lo_, q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, q.get_mpq_t()) >= 0;
}

bool BoundInterval::contains(const BoundInterval& inner) const {
    return mpfr_cmp(lo_, inner.lo_) <= 0 && mpfr_cmp(hi_, inner.hi_) >= 0;
}

bool BoundInterval::upper_at_most(const Rational& q) const {
    return mpfr_cmp_q(hi_, q.get_mpq_t()) <= 0;
}

bool BoundInterval::lower_at_least(const Rational& q) const {
    return mpfr_cmp_q(lo_, q.get_mpq_t()) >= 0;
}

bool BoundInterval::lower_positive() const { return mpfr_sgn(lo_) > 0; }

double BoundInterval::lower_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double BoundInterval::upper_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }

double BoundInterval::width_upper() const {
    mpfr_t w;
    mpfr_init2(w, precision_);
    mpfr_sub(w, hi_, lo_, MPFR_RNDU);
    const double d = mpfr_get_d(w, MPFR_RNDU);
    mpfr_clear(w);
    return d;
}

long BoundInterval::upper_exponent() const {
    if (mpfr_zero_p(hi_)) return 0;
    return mpfr_get_exp(hi_);
}

std::string BoundInterval::to_string(unsigned digits) const {
    char* lo_s = nullptr;
    char* hi_s = nullptr;
    mpfr_asprintf(&lo_s, "%.*R*e", static_cast<int>(digits), MPFR_RNDD, lo_);
    mpfr_asprintf(&hi_s, "%.*R*e", static_cast<int>(digits), MPFR_RNDU, hi_);
    std::string out = std::string("[") + lo_s + ", " + hi_s + "]";
    mpfr_free_str(lo_s);
    mpfr_free_str(hi_s);
    return out;
}

}  // namespace paulivol
