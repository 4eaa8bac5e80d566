// Acceptance suite: every headline number and property this library must
// reproduce, one pass/fail line per criterion. Expected values are frozen
// from independent sources (the known LME classification, direct enumeration, Monte
// Carlo) rather than from the code under test.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "paulivol/bounds.hpp"
#include "paulivol/exact.hpp"
#include "paulivol/grid.hpp"
#include "paulivol/irwin_hall.hpp"
#include "paulivol/mc.hpp"
#include "paulivol/membership.hpp"
#include "paulivol/volumes.hpp"

using namespace paulivol;
using exact::make_rational;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            pass = false;
            detail << (detail.str().empty() ? "" : "; ") << what;
        }
    }
};

int g_failures = 0;

template <typename F>
void criterion(int id, const std::string& name, double time_limit_s, F&& body) {
    Outcome out;
    const auto start = Clock::now();
    try {
        body(out);
    } catch (const std::exception& e) {
        out.pass = false;
        out.detail << "exception: " << e.what();
    }
    const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
    if (elapsed >= time_limit_s) {
        out.pass = false;
        out.detail << (out.detail.str().empty() ? "" : "; ") << "time limit " << time_limit_s
                   << "s exceeded";
    }
    std::cout << (out.pass ? "[PASS] " : "[FAIL] ") << "criterion " << id << ": " << name << " ("
              << elapsed << " s)";
    if (!out.pass) std::cout << " -- " << out.detail.str();
    std::cout << std::endl;
    if (!out.pass) ++g_failures;
}

// LME existence for 1 <= d <= 12, transcribed from the known classification:
// these (N, d) cells are the crosses; every other cell with N <= d is a
// check mark.
const std::set<std::pair<unsigned, unsigned>> kLmeTableCrosses = [] {
    std::set<std::pair<unsigned, unsigned>> s;
    for (unsigned d = 2; d <= 12; ++d) s.insert({1, d});
    for (unsigned d : {3u, 5u, 7u, 9u, 11u}) s.insert({2, d});
    s.insert({3, 4});
    s.insert({3, 5});
    s.insert({4, 5});
    s.insert({5, 6});
    s.insert({5, 7});
    s.insert({6, 7});
    s.insert({7, 8});
    s.insert({7, 9});
    s.insert({8, 9});
    s.insert({9, 10});
    s.insert({9, 11});
    s.insert({10, 11});
    s.insert({11, 12});
    return s;
}();

// The 14 extreme points of P_{11,5} known to lie outside F_{11,5}.
const std::set<std::pair<unsigned, unsigned>> kRedPoints{
    {4, 5}, {4, 4}, {4, 3}, {4, 2}, {4, 1}, {4, 0}, {3, 5},
    {3, 3}, {3, 1}, {2, 5}, {2, 4}, {1, 5}, {0, 5}, {0, 4}};

Rational random_rational_in(std::mt19937_64& rng, long hi_int, long max_den) {
    std::uniform_int_distribution<long> den_dist(1, max_den);
    const long den = den_dist(rng);
    std::uniform_int_distribution<long> num_dist(0, hi_int * den);
    return make_rational(num_dist(rng), den);
}

bool within_sigma(const mc::McEstimate& est, const Rational& exact_p, double sigmas) {
    const double p = exact::to_double(exact_p);
    const double se =
        std::sqrt(std::max(p * (1.0 - p), 0.0) / static_cast<double>(est.effective_samples));
    return std::abs(est.mean - p) <= sigmas * std::max(se, est.std_error);
}

void c1_lme_table(Outcome& out) {
    const auto cells = grid::lme_cells(12);
    out.require(cells.size() == 91, "expected 91 cells");
    for (const auto& c : cells) {
        if (c.d == 0) {
            out.require(c.exists, "(0,0) cell");
            continue;
        }
        const bool expected = kLmeTableCrosses.count({c.n, c.d}) == 0;
        if (c.exists != expected) {
            std::ostringstream what;
            what << "cell d=" << c.d << " N=" << c.n;
            out.require(false, what.str());
        }
    }
}

void c2_membership_table(Outcome& out) {
    const auto pts = membership::pauli_extreme_points(11, 5);
    out.require(pts.size() == 31, "expected 31 extreme points");
    unsigned red_seen = 0;
    for (const auto& p : pts) {
        if (p.kind == membership::PointKind::Slater) {
            out.require(membership::classify(p).in_f, "Slater point must lie in F");
            continue;
        }
        const bool expected_red = kRedPoints.count({p.ones, p.zeros}) > 0;
        red_seen += expected_red ? 1 : 0;
        if (membership::classify(p).in_f != !expected_red) {
            std::ostringstream what;
            what << "point (" << p.ones << "," << p.zeros << ")";
            out.require(false, what.str());
        }
    }
    out.require(red_seen == 14, "expected 14 red points");
}

void c3_irwin_hall_oracle(Outcome& out) {
    std::mt19937_64 rng(0xACCE57);
    for (unsigned d = 2; d <= 12; ++d) {
        const auto oracle = irwin_hall::pdf_by_convolution(d);
        for (int rep = 0; rep < 50; ++rep) {
            const Rational x = random_rational_in(rng, static_cast<long>(d), 101);
            if (irwin_hall::pdf(d, x) != oracle.evaluate(x)) {
                out.require(false, "pdf mismatch at d=" + std::to_string(d));
                return;
            }
            if (irwin_hall::cdf(d, x) != oracle.integral(Rational(0), x)) {
                out.require(false, "cdf mismatch at d=" + std::to_string(d));
                return;
            }
        }
    }
}

void c4_appendix_a_validation(Outcome& out) {
    std::mt19937_64 rng(0xA11DA7E);
    // 20 randomized cap-volume ratios against Monte Carlo at one million
    // samples each
    for (int rep = 0; rep < 20; ++rep) {
        std::uniform_int_distribution<unsigned> d_dist(4, 8);
        const unsigned d = d_dist(rng);
        std::uniform_int_distribution<unsigned> n_dist(2, std::min(d - 2, d / 2 + 1));
        const unsigned n = n_dist(rng);
        std::uniform_int_distribution<unsigned> m_dist(1, d);
        const unsigned m = m_dist(rng);
        // keep the cap above N/d so A has interior
        std::uniform_int_distribution<long> den_dist(5, 12);
        const long den = den_dist(rng);
        const long num_lo = exact::floor_int(make_rational(static_cast<long>(n) * den,
                                                           static_cast<long>(d)))
                                .get_si() +
                            2;
        std::uniform_int_distribution<long> num_dist(std::min(num_lo, den), den);
        const Rational t = make_rational(num_dist(rng), den);
        const Rational nn(static_cast<long>(n));
        const Rational exact_ratio =
            volumes::ratio(volumes::volume_A(d, nn, m, t), volumes::volume_P(d, n));
        const auto est =
            mc::estimate_order_fraction(d, nn, m, t, 1000000, 0xC0FFEE + rep);
        if (!within_sigma(est, exact_ratio, 4.0)) {
            std::ostringstream what;
            what << "MC disagreement at d=" << d << " N=" << n << " m=" << m
                 << " t=" << t.get_str() << " exact=" << exact::to_double(exact_ratio)
                 << " mc=" << est.mean;
            out.require(false, what.str());
        }
    }
    // 100 random decomposition identities, bit-exact
    for (int rep = 0; rep < 100; ++rep) {
        std::uniform_int_distribution<unsigned> d_dist(1, 9);
        const unsigned d = d_dist(rng);
        std::uniform_int_distribution<unsigned> m_dist(1, d);
        const unsigned m = m_dist(rng);
        std::uniform_int_distribution<long> den_dist(2, 13);
        const long den = den_dist(rng);
        std::uniform_int_distribution<long> num_dist(1, den);
        const Rational t = make_rational(num_dist(rng), den);
        const Rational x = random_rational_in(rng, static_cast<long>(d), 17);
        Rational decomposed(0);
        for (unsigned j = 0; j < m; ++j)
            decomposed += Rational(exact::binomial(d, j)) * volumes::block_prob(d, j, t, x);
        if (volumes::order_sum_cdf(d, m, t, x) != decomposed) {
            out.require(false, "decomposition identity failed at d=" + std::to_string(d));
            return;
        }
    }
}

void c5_pauli_loss_sandwich(Outcome& out) {
    for (unsigned d = 3; d <= 14; ++d) {
        for (unsigned n = 2; n < d; ++n) {
            const Rational r = volumes::ratio(volumes::volume_P(d, n),
                                              volumes::volume_B(d, Rational(static_cast<long>(n))));
            const auto bracket = bounds::pauli_loss_bounds(d, n);
            if (!(bracket.first <= r && r <= bracket.second)) {
                std::ostringstream what;
                what << "bracket violated at d=" << d << " N=" << n;
                out.require(false, what.str());
            }
        }
    }
    out.require(volumes::ratio(volumes::volume_P(3, 2), volumes::volume_B(3, Rational(2))) ==
                    make_rational(1, 4),
                "exact ratio at (3,2) must be 1/4");
}

void c6_thresholds(Outcome& out) {
    out.require(membership::cap_threshold(1000, 209) == make_rational(99, 100),
                "threshold (1000, 209)");
    out.require(membership::cap_threshold(1000, 609) == make_rational(98, 100),
                "threshold (1000, 609)");
}

void c7_index_and_dimension(Outcome& out) {
    using Kind = membership::DimResult::Kind;
    out.require(membership::representation_index(8, 4) == make_rational(5, 4),
                "representation index (8,4)");
    const auto dim84 = membership::lme_moduli_dimension(8, 4);
    out.require(dim84.kind == Kind::Value && dim84.value == exact::binomial(8, 4) - 64 &&
                    dim84.value == 6,
                "moduli dimension (8,4)");
    // full case table for d <= 16, re-derived independently of the
    // implementation's control flow
    for (unsigned d = 0; d <= 16; ++d) {
        for (unsigned n = 0; n <= d; ++n) {
            const auto got = membership::lme_moduli_dimension(d, n);
            Kind expected_kind;
            Integer expected_value(0);
            const unsigned hole = d - n;
            if (n == 0 || hole == 0)
                expected_kind = Kind::Point;
            else if (n == 1 || hole == 1)
                expected_kind = Kind::Empty;
            else if (n == 2 || hole == 2)
                expected_kind = (d % 2 == 0) ? Kind::Point : Kind::Empty;
            else if ((d == 6 && n == 3) || (d == 7 && (n == 3 || n == 4)) ||
                     (d == 8 && (n == 3 || n == 5)))
                expected_kind = Kind::ExistsOnly;
            else {
                expected_kind = Kind::Value;
                expected_value = exact::binomial(d, static_cast<long>(n)) -
                                 Integer(static_cast<long>(d) * d);
            }
            if (got.kind != expected_kind ||
                (expected_kind == Kind::Value && got.value != expected_value)) {
                std::ostringstream what;
                what << "dimension case d=" << d << " N=" << n;
                out.require(false, what.str());
            }
        }
    }
}

void c8_theorem_bounds_desk_scale(Outcome& out) {
    for (unsigned d : {26u, 64u, 256u, 1000u}) {
        const bool guard = bounds::guard_fixed_n(d, 8);
        out.require(guard, "guard must hold at d=" + std::to_string(d));
        if (!guard) continue;
        const auto bound = bounds::fixed_n_ratio_bound(d, 8);
        const auto cap = bounds::exact_cap_ratio(d, 8, 1);
        out.require(cap.exact() >= 0 && cap.exact() <= 1,
                    "cap ratio out of range at d=" + std::to_string(d));
        if (bound.is_exact()) {
            out.require(bound.vacuous == (bound.exact() <= 0),
                        "vacuous flag inconsistent at d=" + std::to_string(d));
            if (!bound.vacuous)
                out.require(bound.exact() <= cap.exact(),
                            "theorem bound must not beat the exact ratio at d=" +
                                std::to_string(d));
        }
    }
    // the bound turns informative by d = 1000
    out.require(!bounds::fixed_n_ratio_bound(1000, 8).vacuous,
                "bound should be non-vacuous at d=1000");
    out.require(bounds::fixed_n_ratio_bound(26, 8).vacuous,
                "bound should be vacuous at d=26");
}

void c9_contour_trend(Outcome& out) {
    const auto cells = grid::contour_cells(120, 1u << 30);
    // byte-identical rerun
    const std::string csv1 = grid::contour_csv(cells, 12);
    const std::string csv2 = grid::contour_csv(grid::contour_cells(120, 1u << 30), 12);
    out.require(csv1 == csv2, "contour CSV must be byte-identical on rerun");
    // the parallel sweep must match the serial reference (subgrid)
    const auto par = grid::contour_cells(48, 1u << 30);
    const auto ser = grid::contour_cells_serial(48, 1u << 30);
    bool same = par.size() == ser.size();
    for (std::size_t i = 0; same && i < par.size(); ++i)
        same = par[i].ratio_lower == ser[i].ratio_lower && par[i].m_star == ser[i].m_star;
    out.require(same, "parallel sweep must equal the serial reference");
    // monotone trend in d at fixed N
    std::map<unsigned, std::pair<unsigned, Rational>> last_by_n;
    for (const auto& c : cells) {
        const auto it = last_by_n.find(c.n);
        if (it != last_by_n.end() && c.ratio_lower < it->second.second) {
            std::ostringstream what;
            what << "ratio decreased from d=" << it->second.first << " to d=" << c.d
                 << " at N=" << c.n;
            out.require(false, what.str());
        }
        last_by_n[c.n] = {c.d, c.ratio_lower};
    }
}

void c10_monotone_ratio(Outcome& out) {
    for (unsigned d = 3; d <= 12; ++d) {
        std::vector<Rational> grid;
        grid.reserve(1000);
        for (long k = 1; k <= 1000; ++k)
            grid.push_back(make_rational(k * static_cast<long>(d), 1000));
        if (!irwin_hall::monotone_ratio_on_grid(d, grid)) {
            out.require(false, "monotone ratio failed at d=" + std::to_string(d));
        }
    }
}

}  // namespace

int main() {
    std::cout << "acceptance suite\n";
    criterion(1, "LME existence table (d <= 12, 91 cells)", 1.0, c1_lme_table);
    criterion(2, "extreme-point membership table for P_{11,5}", 1.0, c2_membership_table);
    criterion(3, "Irwin-Hall closed forms vs symbolic convolution oracle", 60.0,
              c3_irwin_hall_oracle);
    criterion(4, "cap volumes vs Monte Carlo + decomposition identity", 300.0,
              c4_appendix_a_validation);
    criterion(5, "Pauli-loss sandwich (2 <= N < d <= 14)", 30.0, c5_pauli_loss_sandwich);
    criterion(6, "cap threshold values at N = 1000", 1.0, c6_thresholds);
    criterion(7, "representation index and moduli dimensions (d <= 16)", 1.0,
              c7_index_and_dimension);
    criterion(8, "fixed-N theorem bound at desk scale (N = 8)", 120.0,
              c8_theorem_bounds_desk_scale);
    criterion(9, "contour grid 16 <= d <= 120: determinism and monotone trend", 600.0,
              c9_contour_trend);
    criterion(10, "monotone density ratio on 1000-point grids (d = 3..12)", 60.0,
              c10_monotone_ratio);
    if (g_failures == 0) {
        std::cout << "all criteria passed\n";
        return 0;
    }
    std::cout << g_failures << " criteria failed\n";
    return 1;
}
