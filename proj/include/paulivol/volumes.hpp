#pragma once

#include <optional>
#include <utility>

#include "paulivol/exact.hpp"

namespace paulivol::volumes {

/// (d-1)-dimensional volume in the hyperplane sum(lambda) = N, stored as
/// Vol = coeff * sqrt(d) with exact rational coeff. Ratios at equal d are
/// exact rationals because the sqrt(d) cancels.
struct ScaledVolume {
    unsigned d;
    Rational coeff;

    double value() const;
};

/// Exact ratio a/b; both volumes must share the ambient dimension d.
Rational ratio(const ScaledVolume& a, const ScaledVolume& b);

/// Parameters of one polytope query: B_{d,N}, P_{d,N}, or (with cap)
/// A_{d,N,m,t}.
struct PolytopeSpec {
    unsigned d = 0;
    Rational n;
    std::optional<std::pair<unsigned, Rational>> cap;

    void validate() const;
};

/// Vol(B_{d,N}): ordered simplex, coeff = N^{d-1} / (d! (d-1)!).
ScaledVolume volume_B(unsigned d, const Rational& n);

/// Vol(P_{d,N}) for integer 1 <= N <= d:
/// coeff = (1/(d!(d-1)!)) sum_{k=0}^{N-1} (-1)^k C(d,k) (N-k)^{d-1}.
ScaledVolume volume_P(unsigned d, unsigned n);

/// Vol(P_{d,N}) at real hyperplane level N via the Irwin-Hall density:
/// coeff = pdf(d, N) / d!. Agrees with volume_P at integers.
ScaledVolume volume_P_real(unsigned d, const Rational& n);

/// P[X_1..X_j > t, X_{j+1}..X_d <= t, sum X <= x] for i.i.d. U(0,1).
/// Zero whenever j >= floor(x/t) + 1.
Rational block_prob(unsigned d, unsigned j, const Rational& t, const Rational& x);

/// P[m-th largest of X_1..X_d <= t and sum X <= x]: the closed double sum.
/// Equals sum_{j<m} C(d,j) block_prob(d, j, t, x) bit-exactly.
Rational order_sum_cdf(unsigned d, unsigned m, const Rational& t, const Rational& x);

/// Vol(A_{d,N,m,t}): P_{d,N} with the extra cap lambda_m <= t. The closed
/// CDF above is piecewise polynomial in x; the volume is its exact
/// x-derivative at x = N times sqrt(d)/d!.
ScaledVolume volume_A(unsigned d, const Rational& n, unsigned m, const Rational& t);

/// Vol{lambda_i >= 0, lambda_1..lambda_m > t, sum = N} (no upper caps):
/// coeff = (N - m t)^{d-1} / (d-1)!. Requires N >= m t.
ScaledVolume slab_volume(unsigned d, const Rational& n, unsigned m, const Rational& t);

}  // namespace paulivol::volumes
