#pragma once

#include <mpfr.h>

#include <string>

#include "paulivol/exact.hpp"

namespace paulivol {

/// Closed interval [lo, hi] guaranteed to contain the exact value of the
/// expression it was built from. Every operation rounds lo toward -inf and
/// hi toward +inf at the carried precision, so enclosure is preserved
/// through arbitrary expression trees.
class BoundInterval {
  public:
    static constexpr unsigned kDefaultPrecision = 128;

    explicit BoundInterval(unsigned precision_bits = kDefaultPrecision);
    BoundInterval(const BoundInterval& other);
    BoundInterval(BoundInterval&& other) noexcept;
    BoundInterval& operator=(const BoundInterval& other);
    BoundInterval& operator=(BoundInterval&& other) noexcept;
    ~BoundInterval();

    static BoundInterval from_rational(const Rational& q,
                                       unsigned precision_bits = kDefaultPrecision);
    static BoundInterval from_long(long v, unsigned precision_bits = kDefaultPrecision);
    static BoundInterval one(unsigned precision_bits = kDefaultPrecision);
    static BoundInterval zero(unsigned precision_bits = kDefaultPrecision);

    unsigned precision_bits() const { return precision_; }

    friend BoundInterval operator+(const BoundInterval& a, const BoundInterval& b);
    friend BoundInterval operator-(const BoundInterval& a, const BoundInterval& b);
    friend BoundInterval operator*(const BoundInterval& a, const BoundInterval& b);
    friend BoundInterval operator/(const BoundInterval& a, const BoundInterval& b);
    BoundInterval operator-() const;

    /// Requires lo > 0 on the base; encloses base^exponent.
    friend BoundInterval pow(const BoundInterval& base, const BoundInterval& exponent);
    /// Integer power, base must be nonnegative.
    friend BoundInterval pow_ui(const BoundInterval& base, unsigned long e);
    /// Requires lo >= 0.
    friend BoundInterval sqrt(const BoundInterval& a);

    bool contains(const Rational& q) const;
    bool contains(const BoundInterval& inner) const;

    /// True iff the whole interval is <= q (resp. >= q, > 0).
    bool upper_at_most(const Rational& q) const;
    bool lower_at_least(const Rational& q) const;
    bool lower_positive() const;

    double lower_double() const;  // rounded down
    double upper_double() const;  // rounded up
    /// Upper bound on hi - lo.
    double width_upper() const;
    /// Base-2 exponent of hi (for adaptive precision choices); 0 if hi == 0.
    long upper_exponent() const;

    std::string to_string(unsigned digits = 17) const;

    const mpfr_t& lo() const { return lo_; }
    const mpfr_t& hi() const { return hi_; }

  private:
    unsigned precision_;
    mpfr_t lo_;
    mpfr_t hi_;
};

}  // namespace paulivol
