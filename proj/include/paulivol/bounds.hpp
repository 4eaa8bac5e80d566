#pragma once

#include <utility>
#include <variant>

#include "paulivol/exact.hpp"
#include "paulivol/interval.hpp"

namespace paulivol::bounds {

enum class Regime { FixedN, FixedRatio, Exact };

/// A lower bound on Vol(F_{d,N}) / Vol(P_{d,N}) (or an exact cap ratio).
/// Rational when every ingredient is rational, an enclosing interval when
/// irrational powers are involved. `vacuous` is set when the bound cannot
/// be certified positive, in which case it carries no information.
struct RatioBoundResult {
    Regime regime = Regime::Exact;
    std::variant<Rational, BoundInterval> value;
    bool vacuous = false;

    bool is_exact() const { return std::holds_alternative<Rational>(value); }
    const Rational& exact() const { return std::get<Rational>(value); }
    const BoundInterval& interval() const { return std::get<BoundInterval>(value); }
    double lower_double() const;
};

/// (1 - d((N-1)/N)^{d-1}, 1 - ((N-1)/N)^{d-1}): exact bracket for
/// Vol(P_{d,N})/Vol(B_{d,N}). Requires 1 <= N <= d.
std::pair<Rational, Rational> pauli_loss_bounds(unsigned d, unsigned n);

/// d ((N-1)/N)^{d-1} <= 1, the hypothesis making the fixed-N bound usable.
bool guard_fixed_n(unsigned d, unsigned n);

/// Fixed-N regime: 1 - d^N/(1 - d((N-1)/N)^{d-1}) (min[(N+7)/2, sqrt(32N)]/N)^{d-1}.
/// Exact rational unless sqrt(32N) is the strict minimizer with 32N not a
/// perfect square. Requires 8 <= N <= d/2 and the guard.
RatioBoundResult fixed_n_ratio_bound(unsigned d, unsigned n,
                                     unsigned precision_bits = BoundInterval::kDefaultPrecision);

/// Fixed-ratio regime at r = N/d:
/// 1 - 1/(r^{r+1/2}(1-r)^{3/2-r}) (8/(r^{r+1/2}(1-r)^{1-r} sqrt(d)))^{d-1}.
/// Requires N >= 20 and 0 < N/d < 1/2. Interval-valued (irrational powers);
/// the final subtraction is done at enough precision to resolve bounds
/// astronomically close to 1.
RatioBoundResult fixed_ratio_ratio_bound(unsigned d, unsigned n,
                                         unsigned precision_bits = BoundInterval::kDefaultPrecision);

/// Vol(A_{d,N,m,t*})/Vol(P_{d,N}) with t* = cap_threshold(N,m): the sharpest
/// exact lower bound on Vol(F)/Vol(P) this method yields. Requires
/// cap_certificate(d, N, m).
RatioBoundResult exact_cap_ratio(unsigned d, unsigned n, unsigned m);

struct BestCapRatio {
    unsigned m_star = 0;
    Rational ratio;
};

/// Maximizes exact_cap_ratio over m in {1, ..., N-7}; ties broken toward
/// smaller m. Requires 8 <= N <= d/2.
BestCapRatio best_cap_ratio(unsigned d, unsigned n);

/// Upper bound on Vol(P\F)/Vol(B\P) = (1 - Vol(F)/Vol(P)) / (Vol(B)/Vol(P) - 1),
/// combining the best exact cap ratio with the exact B/P ratio. Requires
/// 8 <= N <= d/2.
BoundInterval gpc_vs_pauli_bound(unsigned d, unsigned n,
                                 unsigned precision_bits = BoundInterval::kDefaultPrecision);

}  // namespace paulivol::bounds
