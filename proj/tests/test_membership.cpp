#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "paulivol/membership.hpp"

using namespace paulivol;
using namespace paulivol::membership;
using exact::make_rational;

namespace {

Rational vector_sum(const std::vector<Rational>& v) {
    Rational s(0);
    for (const auto& c : v) s += c;
    return s;
}

bool non_increasing(const std::vector<Rational>& v) {
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i] > v[i - 1]) return false;
    return true;
}

// The 14 extreme points of P_{11,5} that are not in F_{11,5}.
const std::set<std::pair<unsigned, unsigned>> kRedPoints{
    {4, 5}, {4, 4}, {4, 3}, {4, 2}, {4, 1}, {4, 0}, {3, 5},
    {3, 3}, {3, 1}, {2, 5}, {2, 4}, {1, 5}, {0, 5}, {0, 4}};

}  // namespace

TEST_CASE("extreme point counts") {
    CHECK(pauli_extreme_points(11, 5).size() == 31);
    CHECK(pauli_extreme_points(4, 2).size() == 5);
    CHECK(pauli_extreme_points(6, 6).size() == 1);
    for (unsigned d = 1; d <= 20; ++d)
        for (unsigned n = 1; n <= d; ++n)
            CHECK(pauli_extreme_points(d, n).size() == 1 + std::size_t(n) * (d - n));
}

TEST_CASE("extreme point structure: sums, monotonicity, distinctness") {
    const auto pts = pauli_extreme_points(7, 3);
    std::set<std::vector<Rational>> seen;
    for (const auto& p : pts) {
        const auto v = p.coordinates();
        REQUIRE(v.size() == 7);
        CHECK(vector_sum(v) == 3);
        CHECK(non_increasing(v));
        CHECK(v.front() <= 1);
        CHECK(v.back() >= 0);
        if (p.kind == PointKind::Interior) {
            CHECK(p.fill() > 0);
            CHECK(p.fill() < 1);
        }
        seen.insert(v);
    }
    CHECK(seen.size() == pts.size());
}

TEST_CASE("bose extreme points") {
    const auto pts = bose_extreme_points(3, Rational(2));
    REQUIRE(pts.size() == 3);
    CHECK(pts[0] == std::vector<Rational>{Rational(2), Rational(0), Rational(0)});
    CHECK(pts[1] == std::vector<Rational>{Rational(1), Rational(1), Rational(0)});
    CHECK(pts[2] == std::vector<Rational>(3, make_rational(2, 3)));
    for (const auto& p : pts) CHECK(vector_sum(p) == 2);
    CHECK(bose_extreme_points(1, Rational(5)) ==
          std::vector<std::vector<Rational>>{{Rational(5)}});
}

TEST_CASE("lme_exists: excluded families") {
    CHECK_FALSE(lme_exists(5, 2));
    CHECK(lme_exists(7, 3));
    CHECK_FALSE(lme_exists(9, 7));
    CHECK_FALSE(lme_exists(2, 1));
    CHECK_FALSE(lme_exists(12, 1));
    CHECK_FALSE(lme_exists(12, 11));
    CHECK(lme_exists(1, 1));
    CHECK(lme_exists(0, 0));
    CHECK(lme_exists(6, 0));
    CHECK(lme_exists(6, 6));
    CHECK(lme_exists(4, 2));
    CHECK_FALSE(lme_exists(3, 2));
    CHECK_THROWS_AS((void)lme_exists(3, 4), std::domain_error);
}

TEST_CASE("lme_exists: particle-hole duality up to d = 16") {
    for (unsigned d = 0; d <= 16; ++d)
        for (unsigned n = 0; n <= d; ++n) CHECK(lme_exists(d, n) == lme_exists(d, d - n));
}

TEST_CASE("classify: reduction of specific P_{11,5} points") {
    CHECK_FALSE(classify(ExtremePoint::interior(11, 5, 4, 1)).in_f);
    CHECK(classify(ExtremePoint::interior(11, 5, 3, 4)).in_f);
    CHECK(classify(ExtremePoint::interior(11, 5, 0, 0)).in_f);
    const auto slater = classify(ExtremePoint::slater(11, 5));
    CHECK(slater.in_f);
    CHECK(slater.reason == MembershipReason::Slater);
}

TEST_CASE("classify reproduces the full P_{11,5} red/non-red classification") {
    unsigned red = 0;
    for (const auto& p : pauli_extreme_points(11, 5)) {
        if (p.kind == PointKind::Slater) continue;
        const bool is_red = kRedPoints.count({p.ones, p.zeros}) > 0;
        CAPTURE(p.ones);
        CAPTURE(p.zeros);
        CHECK(classify(p).in_f == !is_red);
        red += is_red ? 1 : 0;
    }
    CHECK(red == kRedPoints.size());
}

TEST_CASE("cap_threshold values") {
    CHECK(cap_threshold(1000, 209) == make_rational(99, 100));
    CHECK(cap_threshold(1000, 609) == make_rational(98, 100));
    CHECK(cap_threshold(8, 1) == make_rational(1, 2));
    for (unsigned n = 8; n <= 40; ++n) CHECK(cap_threshold(n, n - 7) == make_rational(1, 2));
    CHECK_THROWS_AS((void)cap_threshold(10, 4), std::domain_error);
    CHECK_THROWS_AS((void)cap_threshold(10, 0), std::domain_error);
}

TEST_CASE("extreme_points_in_cap: explicit enumeration at (24, 8, 1)") {
    const auto pts = extreme_points_in_cap(24, 8, 1, make_rational(1, 2));
    REQUIRE(pts.size() == 9);
    for (unsigned j = 0; j <= 8; ++j) {
        CHECK(pts[j].ones == 0);
        CHECK(pts[j].zeros == j);
    }
}

TEST_CASE("extreme_points_in_cap: structural guarantees") {
    for (unsigned d : {16u, 20u, 27u, 33u}) {
        for (unsigned n = 8; 2 * n <= d; ++n) {
            for (unsigned m = 1; m + 7 <= n; ++m) {
                const Rational t = cap_threshold(n, m);
                const auto pts = extreme_points_in_cap(d, n, m, t);
                for (const auto& p : pts) {
                    CHECK(p.kind == PointKind::Interior);
                    CHECK(p.ones + 8 <= n);
                    CHECK(p.zeros + n + 8 <= d);
                    CHECK(p.fill() <= t);
                    CHECK(classify(p).in_f);
                }
                // no other extreme point satisfies the cap
                std::size_t direct = 0;
                for (const auto& p : pauli_extreme_points(d, n))
                    if (p.kind == PointKind::Interior && p.ones < m && p.fill() <= t) ++direct;
                CHECK(direct == pts.size());
            }
        }
    }
}

TEST_CASE("extreme_points_in_cap rejects a mismatched cap level") {
    CHECK_THROWS_AS((void)extreme_points_in_cap(24, 8, 1, make_rational(2, 5)),
                    std::domain_error);
    CHECK_THROWS_AS((void)extreme_points_in_cap(15, 8, 1, make_rational(1, 2)),
                    std::domain_error);
}

TEST_CASE("interpolation_points: explicit first vector at (24, 8, 0, 0)") {
    const auto pts = interpolation_points(24, 8, 0, 0);
    REQUIRE(pts.size() == 4);
    std::vector<Rational> expected;
    for (int k = 0; k < 7; ++k) expected.push_back(make_rational(4, 7));
    for (int k = 0; k < 17; ++k) expected.push_back(make_rational(4, 17));
    CHECK(pts[0].coords == expected);
    CHECK(vector_sum(pts[0].coords) == 8);
    CHECK(pts[0].target_ones == 7);
    CHECK(pts[0].target_zeros == 0);
}

TEST_CASE("interpolation_points: structural invariants for all four families") {
    for (unsigned d : {16u, 24u, 31u}) {
        for (unsigned n : {8u, 10u}) {
            if (2 * n > d) continue;
            for (unsigned i = 0; i + 8 <= n; ++i) {
                for (unsigned j = 0; j + n + 8 <= d; ++j) {
                    const auto pts = interpolation_points(d, n, i, j);
                    REQUIRE(pts.size() == 4);
                    for (const auto& p : pts) {
                        CHECK(p.coords.size() == d);
                        CHECK(vector_sum(p.coords) == static_cast<long>(n));
                        CHECK(non_increasing(p.coords));
                        CHECK(p.coords.front() <= 1);
                        CHECK(p.coords.back() >= 0);
                    }
                }
            }
        }
    }
}

TEST_CASE("interpolation_points: collinear with the segment to the target extreme point") {
    for (unsigned d : {20u, 24u}) {
        const unsigned n = 8;
        for (unsigned i = 0; i <= n - 8; ++i) {
            for (unsigned j = 0; j + n + 8 <= d; ++j) {
                const auto base = ExtremePoint::interior(d, n, i, j).coordinates();
                for (const auto& p : interpolation_points(d, n, i, j)) {
                    const auto target =
                        ExtremePoint::interior(d, n, p.target_ones, p.target_zeros).coordinates();
                    // solve mu from the first coordinate where base and target differ
                    Rational mu;
                    bool found = false;
                    for (unsigned c = 0; c < d; ++c) {
                        if (base[c] != target[c]) {
                            mu = (p.coords[c] - target[c]) / (base[c] - target[c]);
                            found = true;
                            break;
                        }
                    }
                    REQUIRE(found);
                    CHECK(mu > 0);
                    CHECK(mu <= 1);
                    // families 2 and 4 collapse onto the base point exactly
                    // when N - i = 8 and j is maximal; otherwise strict
                    if (mu == 1) CHECK(p.coords == base);
                    for (unsigned c = 0; c < d; ++c)
                        CHECK(p.coords[c] == mu * base[c] + (Rational(1) - mu) * target[c]);
                }
            }
        }
    }
}

TEST_CASE("interpolation_points: first family sits above the cap threshold at index m") {
    for (unsigned d : {20u, 26u}) {
        for (unsigned n : {8u, 10u}) {
            if (2 * n > d) continue;
            for (unsigned m = 1; m + 7 <= n; ++m) {
                const Rational t = cap_threshold(n, m);
                for (unsigned i = 0; i < m; ++i) {
                    for (unsigned j = 0; j + n + 8 <= d; ++j) {
                        const auto first = interpolation_points(d, n, i, j)[0];
                        // lambda_m of the first family (position m lies in its
                        // uniform block) must clear the cap level
                        CHECK(first.coords[m - 1] >= t);
                    }
                }
            }
        }
    }
}

TEST_CASE("cap_certificate hypotheses") {
    CHECK(cap_certificate(16, 8, 1));
    CHECK_FALSE(cap_certificate(11, 5, 1));
    CHECK_FALSE(cap_certificate(16, 8, 2));
    CHECK_FALSE(cap_certificate(15, 8, 1));
    CHECK(cap_certificate(40, 16, 9));
    CHECK_FALSE(cap_certificate(40, 16, 10));
    CHECK_FALSE(cap_certificate(40, 16, 0));
}

TEST_CASE("representation_index values") {
    CHECK(representation_index(8, 4) == make_rational(5, 4));
    CHECK(representation_index(9, 3) == make_rational(7, 6));
    // matches (d^2 - 5d + 6) / 4d at d = 9
    CHECK(representation_index(9, 3) == make_rational(81 - 45 + 6, 36));
    for (unsigned d = 3; d <= 12; ++d)
        CHECK(representation_index(d, 1) == make_rational(1, 2L * d));
    CHECK_THROWS_AS((void)representation_index(8, 0), std::domain_error);
    CHECK_THROWS_AS((void)representation_index(8, 8), std::domain_error);
    CHECK_THROWS_AS((void)representation_index(2, 1), std::domain_error);
}

TEST_CASE("lme_moduli_dimension: named cases") {
    using Kind = DimResult::Kind;
    CHECK(lme_moduli_dimension(8, 4).kind == Kind::Value);
    CHECK(lme_moduli_dimension(8, 4).value == 6);
    CHECK(lme_moduli_dimension(8, 4).value == exact::binomial(8, 4) - 64);
    CHECK(lme_moduli_dimension(5, 1).kind == Kind::Empty);
    CHECK(lme_moduli_dimension(6, 3).kind == Kind::ExistsOnly);
    CHECK(lme_moduli_dimension(7, 3).kind == Kind::ExistsOnly);
    CHECK(lme_moduli_dimension(7, 4).kind == Kind::ExistsOnly);
    CHECK(lme_moduli_dimension(8, 3).kind == Kind::ExistsOnly);
    CHECK(lme_moduli_dimension(8, 5).kind == Kind::ExistsOnly);
    CHECK(lme_moduli_dimension(6, 0).kind == Kind::Point);
    CHECK(lme_moduli_dimension(6, 6).kind == Kind::Point);
    CHECK(lme_moduli_dimension(6, 2).kind == Kind::Point);
    CHECK(lme_moduli_dimension(7, 2).kind == Kind::Empty);
    CHECK(lme_moduli_dimension(7, 5).kind == Kind::Empty);
    CHECK(lme_moduli_dimension(10, 8).kind == Kind::Point);
    CHECK(lme_moduli_dimension(9, 3).kind == Kind::Value);
    CHECK(lme_moduli_dimension(9, 3).value == 84 - 81);
}

TEST_CASE("lme_moduli_dimension: symmetry, nonnegativity, existence consistency") {
    using Kind = DimResult::Kind;
    for (unsigned d = 0; d <= 20; ++d) {
        for (unsigned n = 0; n <= d; ++n) {
            const auto dim = lme_moduli_dimension(d, n);
            CHECK(dim == lme_moduli_dimension(d, d - n));
            if (dim.kind == Kind::Value) CHECK(dim.value >= 0);
            CHECK((dim.kind != Kind::Empty) == lme_exists(d, n));
        }
    }
}
