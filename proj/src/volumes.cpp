#include "paulivol/volumes.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "paulivol/irwin_hall.hpp"

namespace paulivol::volumes {

double ScaledVolume::value() const {
    return exact::to_double(coeff) * std::sqrt(static_cast<double>(d));
}

Rational ratio(const ScaledVolume& a, const ScaledVolume& b) {
    if (a.d != b.d) throw std::domain_error("volume ratio: mismatched dimensions");
    if (b.coeff == 0) throw std::domain_error("volume ratio: zero denominator volume");
    return a.coeff / b.coeff;
}

void PolytopeSpec::validate() const {
    if (d < 1) throw std::domain_error("PolytopeSpec: d must be >= 1");
    if (n < 0 || n > Rational(static_cast<long>(d)))
        throw std::domain_error("PolytopeSpec: N must lie in [0, d]");
    if (cap) {
        const auto& [m, t] = *cap;
        if (m < 1 || m > d) throw std::domain_error("PolytopeSpec: m must lie in [1, d]");
        if (t <= 0 || t > 1) throw std::domain_error("PolytopeSpec: t must lie in (0, 1]");
    }
}

ScaledVolume volume_B(unsigned d, const Rational& n) {
    if (d < 1) throw std::domain_error("volume_B: d must be >= 1");
    if (n < 0) throw std::domain_error("volume_B: N must be nonnegative");
    Rational coeff = exact::pow_rational(n, d - 1);
    coeff /= Rational(exact::factorial(d) * exact::factorial(d - 1));
    return {d, coeff};
}

ScaledVolume volume_P(unsigned d, unsigned n) {
    if (d < 1 || n < 1 || n > d) throw std::domain_error("volume_P: requires 1 <= N <= d");
    Integer acc(0);
    Integer powed;
    for (unsigned k = 0; k < n; ++k) {
        Integer base(static_cast<long>(n - k));
        mpz_pow_ui(powed.get_mpz_t(), base.get_mpz_t(), d - 1);
        powed *= exact::binomial(d, k);
        if (k % 2 == 0)
            acc += powed;
        else
            acc -= powed;
    }
    return {d, exact::make_rational(acc, exact::factorial(d) * exact::factorial(d - 1))};
}

ScaledVolume volume_P_real(unsigned d, const Rational& n) {
    if (d < 1) throw std::domain_error("volume_P_real: d must be >= 1");
    if (n < 0 || n > Rational(static_cast<long>(d)))
        throw std::domain_error("volume_P_real: N must lie in [0, d]");
    if (d == 1) return {1, n == 1 ? Rational(1) : Rational(0)};
    return {d, irwin_hall::pdf(d, n) / Rational(exact::factorial(d))};
}

namespace {

// The three probability formulas below share the pattern
//   sum of signed C(...) (x - <offset>)^e
// with x = X/D and t = T/D on a common denominator D, so each term's base
// is the integer X - kT - iD >= 0 and the whole sum is integer arithmetic
// plus one final division.
struct ScaledArgs {
    Integer X;
    Integer T;
    Integer D;
};

ScaledArgs scale_to_common_denominator(const Rational& x, const Rational& t) {
    ScaledArgs s;
    Integer lcm;
    mpz_lcm(lcm.get_mpz_t(), x.get_den().get_mpz_t(), t.get_den().get_mpz_t());
    s.D = lcm;
    s.X = x.get_num() * (lcm / x.get_den());
    s.T = t.get_num() * (lcm / t.get_den());
    return s;
}

Integer pow_int(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// floor(num/den) clamped to [cap_lo, cap_hi]; callers only need the
// quotient up to a loop bound, and clamping avoids silent truncation of
// oversized quotients.
long floor_div_clamped(const Integer& num, const Integer& den, long cap_lo, long cap_hi) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (q <= cap_lo) return cap_lo;
    if (q >= cap_hi) return cap_hi;
    return q.get_si();
}

// sum_{j=0}^{M} (-1)^j C(k,j) = (-1)^M C(k-1, M) for 0 <= M < k.
Integer signed_partial_binomial_sum(unsigned long k, unsigned long m_cap, int* sign) {
    *sign = (m_cap % 2 == 0) ? +1 : -1;
    return exact::binomial(k - 1, static_cast<long>(m_cap));
}

// Core of the order-statistic CDF (power e = d) and of the volume
// derivative (power e = d-1; the outer d from d/dx (x-c)^d cancels one
// factor of d! downstream).
Integer order_sum_core(unsigned d, unsigned m, const ScaledArgs& s, unsigned long e) {
    Integer acc(0);
    if (s.X <= 0) return acc;
    const long floor_x = floor_div_clamped(s.X, s.D, -1, static_cast<long>(m));
    const long imax = std::min<long>(static_cast<long>(m) - 1, floor_x);
    for (long i = 0; i <= imax; ++i) {
        Integer base = s.X - i * s.D;
        Integer term = exact::binomial(d, i) * pow_int(base, e);
        if (i % 2 == 0)
            acc += term;
        else
            acc -= term;

        const long kmax = floor_div_clamped(base, s.T, -1, static_cast<long>(d) - i);
        for (long k = static_cast<long>(m) - i; k <= kmax; ++k) {
            int inner_sign = 0;
            const Integer inner =
                signed_partial_binomial_sum(k, static_cast<unsigned long>(m - i - 1), &inner_sign);
            Integer t2 = exact::binomial(d, k + i) * exact::binomial(k + i, i) * inner *
                         pow_int(base - k * s.T, e);
            int sign = ((k + i) % 2 == 0) ? inner_sign : -inner_sign;
            if (sign > 0)
                acc += t2;
            else
                acc -= t2;
        }
    }
    return acc;
}

void check_cap(unsigned d, unsigned m, const Rational& t) {
    if (d < 1) throw std::domain_error("order-statistic cap: d must be >= 1");
    if (m < 1 || m > d) throw std::domain_error("order-statistic cap: requires 1 <= m <= d");
    if (t <= 0 || t > 1) throw std::domain_error("order-statistic cap: requires 0 < t <= 1");
}

}  // namespace

Rational block_prob(unsigned d, unsigned j, const Rational& t, const Rational& x) {
    if (d < 1) throw std::domain_error("block_prob: d must be >= 1");
    if (j > d) throw std::domain_error("block_prob: requires 0 <= j <= d");
    if (t <= 0 || t > 1) throw std::domain_error("block_prob: requires 0 < t <= 1");
    if (x <= 0) return Rational(0);
    const ScaledArgs s = scale_to_common_denominator(x, t);
    Integer acc(0);
    for (unsigned long i = 0; i <= j; ++i) {
        const Integer shifted = s.X - static_cast<long>(i) * s.D;
        if (shifted < 0) break;
        const long kcap = floor_div_clamped(shifted, s.T, -1, static_cast<long>(d)) -
                          static_cast<long>(j - i);
        const long kmax = std::min<long>(kcap, static_cast<long>(d - j));
        for (long k = 0; k <= kmax; ++k) {
            const Integer base = shifted - (k + static_cast<long>(j - i)) * s.T;
            Integer term = exact::binomial(j, static_cast<long>(i)) *
                           exact::binomial(d - j, k) * pow_int(base, d);
            if ((i + k) % 2 == 0)
                acc += term;
            else
                acc -= term;
        }
    }
    return exact::make_rational(acc, exact::factorial(d) * pow_int(s.D, d));
}

Rational order_sum_cdf(unsigned d, unsigned m, const Rational& t, const Rational& x) {
    check_cap(d, m, t);
    if (x <= 0) return Rational(0);
    const ScaledArgs s = scale_to_common_denominator(x, t);
    const Integer acc = order_sum_core(d, m, s, d);
    return exact::make_rational(acc, exact::factorial(d) * pow_int(s.D, d));
}

ScaledVolume volume_A(unsigned d, const Rational& n, unsigned m, const Rational& t) {
    check_cap(d, m, t);
    if (n < 0 || n > Rational(static_cast<long>(d)))
        throw std::domain_error("volume_A: N must lie in [0, d]");
    if (n == 0) return {d, Rational(0)};
    const ScaledArgs s = scale_to_common_denominator(n, t);
    const Integer acc = order_sum_core(d, m, s, d - 1);
    const Integer den = exact::factorial(d) * exact::factorial(d - 1) * pow_int(s.D, d - 1);
    return {d, exact::make_rational(acc, den)};
}

ScaledVolume slab_volume(unsigned d, const Rational& n, unsigned m, const Rational& t) {
    if (d < 1) throw std::domain_error("slab_volume: d must be >= 1");
    const Rational level = n - Rational(static_cast<long>(m)) * t;
    if (level < 0) throw std::domain_error("slab_volume: requires N >= m t");
    Rational coeff = exact::pow_rational(level, d - 1);
    coeff /= Rational(exact::factorial(d - 1));
    return {d, coeff};
}

}  // namespace paulivol::volumes
