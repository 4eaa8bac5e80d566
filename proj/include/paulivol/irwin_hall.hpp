#pragma once

#include <vector>

#include "paulivol/exact.hpp"

namespace paulivol::irwin_hall {

/// Piecewise polynomial over exact rationals. pieces()[i] holds the
/// ascending-degree coefficients valid on [breakpoints()[i], breakpoints()[i+1]].
/// Used as the symbolic-convolution route to the Irwin-Hall density,
/// independent of the closed-form alternating sum.
class PiecewisePolynomial {
  public:
    /// Density of a single U(0,1) variable: 1 on [0,1].
    static PiecewisePolynomial uniform_density();

    /// (f * 1_[0,1])(x) = integral of f over [x-1, x], computed symbolically.
    PiecewisePolynomial convolve_with_unit_indicator() const;

    /// 0 outside the support.
    Rational evaluate(const Rational& x) const;

    /// Exact integral over [a, b] (antisymmetric if a > b).
    Rational integral(const Rational& a, const Rational& b) const;

    Rational total_integral() const;

    const std::vector<Rational>& breakpoints() const { return breakpoints_; }
    const std::vector<std::vector<Rational>>& pieces() const { return pieces_; }

  private:
    PiecewisePolynomial(std::vector<Rational> breakpoints,
                        std::vector<std::vector<Rational>> pieces);

    /// Antiderivative polynomials, continuous with F(breakpoints.front()) = 0.
    std::vector<std::vector<Rational>> antiderivatives() const;

    std::vector<Rational> breakpoints_;
    std::vector<std::vector<Rational>> pieces_;
};

/// P[X_1 + ... + X_d <= x] for i.i.d. U(0,1): the alternating binomial sum,
/// exactly. 0 for x <= 0 and 1 for x >= d.
Rational cdf(unsigned d, const Rational& x);

/// Density of the sum of d i.i.d. U(0,1) variables; 0 outside [0, d].
/// Requires d >= 2.
Rational pdf(unsigned d, const Rational& x);

/// Density obtained by d-1 explicit symbolic convolutions. Desk-scale
/// oracle, capped at 2 <= d <= 16.
PiecewisePolynomial pdf_by_convolution(unsigned d);

/// True iff x -> pdf(d, x) / x^(d-1) is non-increasing along the grid
/// (exact rational comparisons). Requires d >= 3 and a strictly increasing
/// positive grid.
bool monotone_ratio_on_grid(unsigned d, const std::vector<Rational>& grid);

/// (1/2) (2N/d)^(d-1): comparison value for the unordered Pauli-polytope
/// volume coefficient d! Vol(P)/sqrt(d). A valid lower bound for N below
/// d/2; at half filling it is tight only up to d = 7, where the density
/// peak pdf(d, d/2) it reduces to drops below 1/2.
/// Requires d >= 7 and N <= d/2.
Rational large_deviations_lower_bound(unsigned d, unsigned n);

}  // namespace paulivol::irwin_hall
