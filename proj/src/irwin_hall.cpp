#include "paulivol/irwin_hall.hpp"

#include <algorithm>
#include <stdexcept>

namespace paulivol::irwin_hall {

namespace {

using Poly = std::vector<Rational>;

Rational poly_eval(const Poly& p, const Rational& x) {
    Rational acc(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly poly_antiderivative(const Poly& p) {
    Poly out(p.size() + 1, Rational(0));
    for (std::size_t i = 0; i < p.size(); ++i)
        out[i + 1] = p[i] / Rational(static_cast<long>(i + 1));
    return out;
}

// p(x - 1) expanded in x.
Poly poly_shift_back(const Poly& p) {
    Poly out(p.size(), Rational(0));
    for (std::size_t j = 0; j < p.size(); ++j) {
        for (std::size_t k = 0; k <= j; ++k) {
            Rational c(exact::binomial(j, static_cast<long>(k)));
            if ((j - k) % 2 == 1) c = -c;
            out[k] += p[j] * c;
        }
    }
    return out;
}

Poly poly_sub(const Poly& a, const Poly& b) {
    Poly out(std::max(a.size(), b.size()), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    return out;
}

}  // namespace

PiecewisePolynomial::PiecewisePolynomial(std::vector<Rational> breakpoints,
                                         std::vector<std::vector<Rational>> pieces)
    : breakpoints_(std::move(breakpoints)), pieces_(std::move(pieces)) {}

PiecewisePolynomial PiecewisePolynomial::uniform_density() {
    return PiecewisePolynomial({Rational(0), Rational(1)}, {{Rational(1)}});
}

std::vector<std::vector<Rational>> PiecewisePolynomial::antiderivatives() const {
    std::vector<Poly> out;
    out.reserve(pieces_.size());
    Rational running(0);
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
        Poly a = poly_antiderivative(pieces_[i]);
        const Rational at_left = poly_eval(a, breakpoints_[i]);
        a[0] += running - at_left;
        running = poly_eval(a, breakpoints_[i + 1]);
        out.push_back(std::move(a));
    }
    return out;
}

PiecewisePolynomial PiecewisePolynomial::convolve_with_unit_indicator() const {
    const auto anti = antiderivatives();
    const Rational lo = breakpoints_.front();
    const Rational hi = breakpoints_.back();
    const Rational total = poly_eval(anti.back(), hi);

    // F(x) as a polynomial valid on an interval strictly inside [u, v].
    auto antipiece_for = [&](const Rational& u, const Rational& v) -> Poly {
        if (v <= lo) return Poly{Rational(0)};
        if (u >= hi) return Poly{total};
        const auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), u);
        const std::size_t idx = static_cast<std::size_t>(it - breakpoints_.begin()) - 1;
        (void)v;
        return anti[idx];
    };

    std::vector<Rational> bps;
    for (const auto& b : breakpoints_) {
        bps.push_back(b);
        bps.push_back(b + 1);
    }
    std::sort(bps.begin(), bps.end());
    bps.erase(std::unique(bps.begin(), bps.end()), bps.end());

    std::vector<Poly> pieces;
    for (std::size_t i = 0; i + 1 < bps.size(); ++i) {
        const Rational& u = bps[i];
        const Rational& v = bps[i + 1];
        const Poly left = antipiece_for(u, v);
        const Poly right = poly_shift_back(antipiece_for(u - 1, v - 1));
        pieces.push_back(poly_sub(left, right));
    }
    return PiecewisePolynomial(std::move(bps), std::move(pieces));
}

Rational PiecewisePolynomial::evaluate(const Rational& x) const {
    if (x < breakpoints_.front() || x > breakpoints_.back()) return Rational(0);
    auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
    std::size_t idx = static_cast<std::size_t>(it - breakpoints_.begin());
    if (idx == 0) idx = 1;  // x == front
    if (idx > pieces_.size()) idx = pieces_.size();  // x == back
    return poly_eval(pieces_[idx - 1], x);
}

Rational PiecewisePolynomial::integral(const Rational& a, const Rational& b) const {
    if (a > b) return -integral(b, a);
    const auto anti = antiderivatives();
    const Rational total = poly_eval(anti.back(), breakpoints_.back());
    auto eval_f = [&](const Rational& x) -> Rational {
        if (x <= breakpoints_.front()) return Rational(0);
        if (x >= breakpoints_.back()) return total;
        auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
        const std::size_t idx = static_cast<std::size_t>(it - breakpoints_.begin());
        return poly_eval(anti[idx - 1], x);
    };
    return eval_f(b) - eval_f(a);
}

Rational PiecewisePolynomial::total_integral() const {
    return integral(breakpoints_.front(), breakpoints_.back());
}

namespace {

// Shared integer core of the alternating sums: computes
// sum_{k=0..kmax} (-1)^k C(d,k) (a - k b)^e exactly, with x = a/b.
Integer alternating_sum(unsigned d, const Integer& a, const Integer& b, long kmax,
                        unsigned long e) {
    Integer acc(0);
    Integer base, powed;
    for (long k = 0; k <= kmax; ++k) {
        base = a - k * b;
        mpz_pow_ui(powed.get_mpz_t(), base.get_mpz_t(), e);
        powed *= exact::binomial(d, k);
        if (k % 2 == 0)
            acc += powed;
        else
            acc -= powed;
    }
    return acc;
}

}  // namespace

Rational cdf(unsigned d, const Rational& x) {
    if (d < 1) throw std::domain_error("irwin_hall::cdf: d must be >= 1");
    if (x <= 0) return Rational(0);
    if (x >= Rational(static_cast<long>(d))) return Rational(1);
    const Integer& a = x.get_num();
    const Integer& b = x.get_den();
    const long kmax = exact::floor_int(x).get_si();
    const Integer acc = alternating_sum(d, a, b, kmax, d);
    Integer den;
    mpz_pow_ui(den.get_mpz_t(), b.get_mpz_t(), d);
    den *= exact::factorial(d);
    return exact::make_rational(acc, den);
}

Rational pdf(unsigned d, const Rational& x) {
    if (d < 2) throw std::domain_error("irwin_hall::pdf: d must be >= 2");
    if (x < 0 || x > Rational(static_cast<long>(d))) return Rational(0);
    const Integer& a = x.get_num();
    const Integer& b = x.get_den();
    const long kmax = exact::floor_int(x).get_si();
    const Integer acc = alternating_sum(d, a, b, kmax, d - 1);
    Integer den;
    mpz_pow_ui(den.get_mpz_t(), b.get_mpz_t(), d - 1);
    den *= exact::factorial(d - 1);
    return exact::make_rational(acc, den);
}

PiecewisePolynomial pdf_by_convolution(unsigned d) {
    if (d < 2 || d > 16)
        throw std::domain_error("pdf_by_convolution: oracle supports 2 <= d <= 16");
    PiecewisePolynomial f = PiecewisePolynomial::uniform_density();
    for (unsigned i = 1; i < d; ++i) f = f.convolve_with_unit_indicator();
    return f;
}

bool monotone_ratio_on_grid(unsigned d, const std::vector<Rational>& grid) {
    if (d < 3) throw std::domain_error("monotone_ratio_on_grid: requires d >= 3");
    if (grid.size() < 2) throw std::domain_error("monotone_ratio_on_grid: grid too small");
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (grid[i] <= 0) throw std::domain_error("monotone_ratio_on_grid: grid must be positive");
        if (i > 0 && grid[i] <= grid[i - 1])
            throw std::domain_error("monotone_ratio_on_grid: grid must be strictly increasing");
    }
    Rational prev_f = pdf(d, grid[0]);
    Rational prev_x_pow = exact::pow_rational(grid[0], d - 1);
    for (std::size_t i = 1; i < grid.size(); ++i) {
        const Rational f = pdf(d, grid[i]);
        const Rational x_pow = exact::pow_rational(grid[i], d - 1);
        // f(x)/x^{d-1} >= f(y)/y^{d-1}  <=>  f(x) y^{d-1} >= f(y) x^{d-1}
        if (prev_f * x_pow < f * prev_x_pow) return false;
        prev_f = f;
        prev_x_pow = x_pow;
    }
    return true;
}

Rational large_deviations_lower_bound(unsigned d, unsigned n) {
    if (d < 7 || n < 1 || 2 * n > d)
        throw std::domain_error("large_deviations_lower_bound: requires d >= 7 and N <= d/2");
    const Rational ratio = exact::make_rational(Integer(2L * n), Integer(static_cast<long>(d)));
    return exact::pow_rational(ratio, d - 1) / 2;
}

}  // namespace paulivol::irwin_hall
