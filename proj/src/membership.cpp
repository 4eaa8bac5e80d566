#include "paulivol/membership.hpp"

#include <stdexcept>

namespace paulivol::membership {

ExtremePoint ExtremePoint::slater(unsigned d, unsigned n) {
    if (n < 1 || n > d) throw std::domain_error("ExtremePoint: requires 1 <= N <= d");
    return {d, n, n, d - n, PointKind::Slater};
}

ExtremePoint ExtremePoint::interior(unsigned d, unsigned n, unsigned ones, unsigned zeros) {
    if (n < 1 || n > d) throw std::domain_error("ExtremePoint: requires 1 <= N <= d");
    if (ones + 1 > n || zeros + n + 1 > d)
        throw std::domain_error("ExtremePoint: interior point requires i <= N-1, j <= d-N-1");
    return {d, n, ones, zeros, PointKind::Interior};
}

Rational ExtremePoint::fill() const {
    if (kind != PointKind::Interior)
        throw std::domain_error("ExtremePoint: the Slater point has no fill block");
    return exact::make_rational(Integer(static_cast<long>(n - ones)),
                                Integer(static_cast<long>(d - ones - zeros)));
}

std::vector<Rational> ExtremePoint::coordinates() const {
    std::vector<Rational> v;
    v.reserve(d);
    const unsigned mid = d - ones - zeros;
    const Rational f = kind == PointKind::Interior ? fill() : Rational(1);
    for (unsigned k = 0; k < ones; ++k) v.emplace_back(1);
    if (kind == PointKind::Interior)
        for (unsigned k = 0; k < mid; ++k) v.push_back(f);
    for (unsigned k = 0; k < zeros; ++k) v.emplace_back(0);
    return v;
}

std::vector<ExtremePoint> pauli_extreme_points(unsigned d, unsigned n) {
    if (n < 1 || n > d) throw std::domain_error("pauli_extreme_points: requires 1 <= N <= d");
    std::vector<ExtremePoint> pts;
    pts.reserve(1 + static_cast<std::size_t>(n) * (d - n));
    pts.push_back(ExtremePoint::slater(d, n));
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j + n < d; ++j) pts.push_back(ExtremePoint::interior(d, n, i, j));
    return pts;
}

std::vector<std::vector<Rational>> bose_extreme_points(unsigned d, const Rational& n) {
    if (d < 1 || n <= 0) throw std::domain_error("bose_extreme_points: requires d >= 1, N > 0");
    std::vector<std::vector<Rational>> pts;
    pts.reserve(d);
    for (unsigned k = 1; k <= d; ++k) {
        std::vector<Rational> v(d, Rational(0));
        const Rational fill = n / Rational(static_cast<long>(k));
        for (unsigned c = 0; c < k; ++c) v[c] = fill;
        pts.push_back(std::move(v));
    }
    return pts;
}

bool lme_exists(unsigned d, unsigned n) {
    if (n > d) throw std::domain_error("lme_exists: requires 0 <= N <= d");
    const bool odd = d % 2 == 1;
    if (d >= 2 && n == 1) return false;
    if (odd && n == 2) return false;
    if (d >= 2 && n + 1 == d) return false;
    if (odd && n + 2 == d) return false;
    return true;
}

MembershipVerdict classify(const ExtremePoint& p) {
    if (p.kind == PointKind::Slater) return {true, MembershipReason::Slater};
    const unsigned block_d = p.d - p.ones - p.zeros;
    const unsigned block_n = p.n - p.ones;
    const bool exists = lme_exists(block_d, block_n);
    return {exists, exists ? MembershipReason::LmeExists : MembershipReason::LmeAbsent};
}

Rational cap_threshold(unsigned n, unsigned m) {
    if (m < 1 || m + 7 > n) throw std::domain_error("cap_threshold: requires 1 <= m <= N-7");
    return exact::make_rational(Integer(static_cast<long>(n - m + 1)),
                                Integer(static_cast<long>(n - m + 9)));
}

std::vector<ExtremePoint> extreme_points_in_cap(unsigned d, unsigned n, unsigned m,
                                                const Rational& t) {
    if (n < 8 || 2 * n > d)
        throw std::domain_error("extreme_points_in_cap: requires 8 <= N <= d/2");
    if (t != cap_threshold(n, m))
        throw std::domain_error("extreme_points_in_cap: t must equal cap_threshold(N, m)");
    std::vector<ExtremePoint> pts;
    for (unsigned i = 0; i < m; ++i) {
        for (unsigned j = 0; j + n < d; ++j) {
            const ExtremePoint p = ExtremePoint::interior(d, n, i, j);
            // lambda_m of the point is its fill value, so membership in the
            // cap is an exact rational comparison.
            if (p.fill() <= t) pts.push_back(p);
        }
    }
    return pts;
}

namespace {

std::vector<Rational> three_block_vector(unsigned ones, const Rational& a, unsigned a_count,
                                         const Rational& b, unsigned b_count, unsigned zeros) {
    std::vector<Rational> v;
    v.reserve(ones + a_count + b_count + zeros);
    for (unsigned k = 0; k < ones; ++k) v.emplace_back(1);
    for (unsigned k = 0; k < a_count; ++k) v.push_back(a);
    for (unsigned k = 0; k < b_count; ++k) v.push_back(b);
    for (unsigned k = 0; k < zeros; ++k) v.emplace_back(0);
    return v;
}

Rational frac(long num, long den) {
    return exact::make_rational(Integer(num), Integer(den));
}

}  // namespace

std::vector<InterpolationPoint> interpolation_points(unsigned d, unsigned n, unsigned i,
                                                     unsigned j) {
    if (n < 8 || 2 * n > d)
        throw std::domain_error("interpolation_points: requires 8 <= N <= d/2");
    if (i + 8 > n || j + n + 8 > d)
        throw std::domain_error("interpolation_points: requires i <= N-8 and j <= d-N-8");
    const long N = n, I = i, J = j, D = d;
    std::vector<InterpolationPoint> out;
    out.push_back({three_block_vector(i, frac(N - I - 4, N - I - 1), n - i - 1,
                                      frac(4, D - N - J + 1), d - n - j + 1, j),
                   n - 1, j});
    out.push_back({three_block_vector(i, frac(N - I - 5, N - I - 2), n - i - 2,
                                      frac(5, D - N - J + 2), d - n - j + 2, j),
                   n - 2, j});
    out.push_back({three_block_vector(i, frac(N - I - 3, N - I + 1), n - i + 1,
                                      frac(3, D - N - J - 1), d - n - j - 1, j),
                   i, d - n - 1});
    out.push_back({three_block_vector(i, frac(N - I - 3, N - I + 2), n - i + 2,
                                      frac(3, D - N - J - 2), d - n - j - 2, j),
                   i, d - n - 2});
    return out;
}

bool cap_certificate(unsigned d, unsigned n, unsigned m) {
    return n >= 8 && 2 * n <= d && m >= 1 && m + 7 <= n;
}

Rational representation_index(unsigned d, unsigned n) {
    if (d < 3 || n < 1 || n >= d)
        throw std::domain_error("representation_index: requires d >= 3 and 1 <= N <= d-1");
    return exact::make_rational(exact::binomial(d - 2, static_cast<long>(n) - 1),
                                Integer(2L * d));
}

DimResult lme_moduli_dimension(unsigned d, unsigned n) {
    if (n > d) throw std::domain_error("lme_moduli_dimension: requires 0 <= N <= d");
    using Kind = DimResult::Kind;
    const bool odd = d % 2 == 1;
    if (n == 0 || n == d) return {Kind::Point, Integer(0)};
    if (n == 1 || n + 1 == d) return {Kind::Empty, Integer(0)};
    if (n == 2 || n + 2 == d) return {odd ? Kind::Empty : Kind::Point, Integer(0)};
    if (d == 6 && n == 3) return {Kind::ExistsOnly, Integer(0)};
    if (d == 7 && (n == 3 || n == 4)) return {Kind::ExistsOnly, Integer(0)};
    if (d == 8 && (n == 3 || n == 5)) return {Kind::ExistsOnly, Integer(0)};
    // d = 8, N = 4, or d >= 9 with 3 <= N <= d-3.
    Integer value = exact::binomial(d, static_cast<long>(n)) -
                    Integer(static_cast<long>(d)) * static_cast<long>(d);
    return {Kind::Value, value};
}

}  // namespace paulivol::membership
