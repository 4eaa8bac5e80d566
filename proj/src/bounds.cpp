#include "paulivol/bounds.hpp"

#include <algorithm>
#include <stdexcept>

#include "paulivol/membership.hpp"
#include "paulivol/volumes.hpp"

namespace paulivol::bounds {

double RatioBoundResult::lower_double() const {
    if (is_exact()) return exact::to_double(exact());
    return interval().lower_double();
}

namespace {

Rational pauli_base_power(unsigned d, unsigned n) {
    const Rational base = exact::make_rational(Integer(static_cast<long>(n) - 1),
                                               Integer(static_cast<long>(n)));
    return exact::pow_rational(base, d - 1);
}

// 1 - deficit, resolved even when deficit is far below one ulp of 1.0 at
// the requested precision.
BoundInterval one_minus(const BoundInterval& deficit, unsigned precision_bits) {
    const long e = deficit.upper_exponent();
    const unsigned extra = e < 0 ? static_cast<unsigned>(-e) : 0u;
    const unsigned p = precision_bits + extra + 8;
    return BoundInterval::one(p) - deficit;
}

RatioBoundResult make_interval_result(Regime regime, BoundInterval value) {
    RatioBoundResult r;
    r.regime = regime;
    r.vacuous = !value.lower_positive();
    r.value = std::move(value);
    return r;
}

RatioBoundResult make_exact_result(Regime regime, Rational value) {
    RatioBoundResult r;
    r.regime = regime;
    r.vacuous = value <= 0;
    r.value = std::move(value);
    return r;
}

}  // namespace

std::pair<Rational, Rational> pauli_loss_bounds(unsigned d, unsigned n) {
    if (n < 1 || n > d) throw std::domain_error("pauli_loss_bounds: requires 1 <= N <= d");
    const Rational p = pauli_base_power(d, n);
    return {Rational(1) - Rational(static_cast<long>(d)) * p, Rational(1) - p};
}

bool guard_fixed_n(unsigned d, unsigned n) {
    if (n < 1) throw std::domain_error("guard_fixed_n: requires N >= 1");
    return Rational(static_cast<long>(d)) * pauli_base_power(d, n) <= 1;
}

RatioBoundResult fixed_n_ratio_bound(unsigned d, unsigned n, unsigned precision_bits) {
    if (n < 8 || 2 * n > d)
        throw std::domain_error("fixed_n_ratio_bound: requires 8 <= N <= d/2");
    if (!guard_fixed_n(d, n))
        throw std::domain_error("fixed_n_ratio_bound: guard d((N-1)/N)^{d-1} <= 1 fails");

    const Rational guard_slack = Rational(1) - Rational(static_cast<long>(d)) * pauli_base_power(d, n);
    if (guard_slack == 0)
        throw std::logic_error("fixed_n_ratio_bound: guard boundary cannot occur for N >= 8");
    Rational prefactor;
    mpz_ui_pow_ui(prefactor.get_num_mpz_t(), d, n);
    prefactor /= guard_slack;

    // min[(N+7)/2, sqrt(32N)] decided exactly by comparing (N+7)^2 with 128N.
    const Integer lhs = Integer(static_cast<long>(n) + 7) * (static_cast<long>(n) + 7);
    const Integer rhs = Integer(128L) * static_cast<long>(n);
    if (lhs <= rhs) {
        const Rational term = exact::make_rational(Integer(static_cast<long>(n) + 7),
                                                   Integer(2L * n));
        const Rational value = Rational(1) - prefactor * exact::pow_rational(term, d - 1);
        return make_exact_result(Regime::FixedN, value);
    }
    Integer root;
    if (exact::is_perfect_square(Integer(32L * n), &root)) {
        const Rational term = exact::make_rational(root, Integer(static_cast<long>(n)));
        const Rational value = Rational(1) - prefactor * exact::pow_rational(term, d - 1);
        return make_exact_result(Regime::FixedN, value);
    }
    const BoundInterval root_iv =
        sqrt(BoundInterval::from_long(32L * n, precision_bits));
    const BoundInterval term =
        root_iv / BoundInterval::from_long(static_cast<long>(n), precision_bits);
    const BoundInterval deficit =
        BoundInterval::from_rational(prefactor, precision_bits) * pow_ui(term, d - 1);
    return make_interval_result(Regime::FixedN, one_minus(deficit, precision_bits));
}

RatioBoundResult fixed_ratio_ratio_bound(unsigned d, unsigned n, unsigned precision_bits) {
    if (n < 20) throw std::domain_error("fixed_ratio_ratio_bound: requires N >= 20");
    if (n == 0 || 2 * n >= d)
        throw std::domain_error("fixed_ratio_ratio_bound: requires r = N/d in (0, 1/2)");

    const Rational r = exact::make_rational(Integer(static_cast<long>(n)),
                                            Integer(static_cast<long>(d)));
    const BoundInterval R = BoundInterval::from_rational(r, precision_bits);
    const BoundInterval one = BoundInterval::one(precision_bits);
    const BoundInterval half = BoundInterval::from_rational(Rational(1, 2), precision_bits);
    const BoundInterval one_minus_r = one - R;

    const BoundInterval r_pow = pow(R, R + half);                       // r^{r+1/2}
    const BoundInterval omr_low = pow(one_minus_r, one + half - R);     // (1-r)^{3/2-r}
    const BoundInterval omr_inner = pow(one_minus_r, one - R);          // (1-r)^{1-r}
    const BoundInterval prefactor = one / (r_pow * omr_low);

    const BoundInterval inner =
        BoundInterval::from_long(8, precision_bits) /
        (r_pow * omr_inner * sqrt(BoundInterval::from_long(static_cast<long>(d), precision_bits)));
    const BoundInterval deficit = prefactor * pow_ui(inner, d - 1);
    return make_interval_result(Regime::FixedRatio, one_minus(deficit, precision_bits));
}

RatioBoundResult exact_cap_ratio(unsigned d, unsigned n, unsigned m) {
    if (!membership::cap_certificate(d, n, m))
        throw std::domain_error(
            "exact_cap_ratio: requires 8 <= N <= d/2 and 1 <= m <= N-7");
    const Rational t = membership::cap_threshold(n, m);
    const auto va = volumes::volume_A(d, Rational(static_cast<long>(n)), m, t);
    const auto vp = volumes::volume_P(d, n);
    return make_exact_result(Regime::Exact, volumes::ratio(va, vp));
}

BestCapRatio best_cap_ratio(unsigned d, unsigned n) {
    if (n < 8 || 2 * n > d) throw std::domain_error("best_cap_ratio: requires 8 <= N <= d/2");
    BestCapRatio best;
    for (unsigned m = 1; m + 7 <= n; ++m) {
        Rational r = exact_cap_ratio(d, n, m).exact();
        if (best.m_star == 0 || r > best.ratio) {
            best.m_star = m;
            best.ratio = std::move(r);
        }
    }
    return best;
}

BoundInterval gpc_vs_pauli_bound(unsigned d, unsigned n, unsigned precision_bits) {
    if (n < 8 || 2 * n > d)
        throw std::domain_error("gpc_vs_pauli_bound: requires 8 <= N <= d/2");
    const Rational numerator = Rational(1) - best_cap_ratio(d, n).ratio;
    const Rational b_over_p = volumes::ratio(
        volumes::volume_B(d, Rational(static_cast<long>(n))), volumes::volume_P(d, n));
    const Rational denominator = b_over_p - 1;
    if (denominator <= 0)
        throw std::logic_error("gpc_vs_pauli_bound: B/P ratio must exceed 1 for N >= 2");
    return BoundInterval::from_rational(numerator / denominator, precision_bits);
}

}  // namespace paulivol::bounds
