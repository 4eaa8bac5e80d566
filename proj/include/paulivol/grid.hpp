#pragma once

#include <optional>
#include <string>
#include <vector>

#include "paulivol/exact.hpp"

namespace paulivol::grid {

/// One cell of the convergence contour: the best exact lower bound on
/// Vol(F_{d,N})/Vol(P_{d,N}) at (d, N), plus whether the closed-form
/// fixed-N theorem bound is vacuous there.
struct GridCell {
    unsigned d = 0;
    unsigned n = 0;
    std::optional<unsigned> m_star;
    Rational ratio_lower;
    bool vacuous_theorem_bound = true;
};

/// Cells for 16 <= d <= d_max, 8 <= N <= min(n_max, d/2), in lexicographic
/// (d, N) order. Cell evaluation is data-parallel; the output order is
/// fixed by construction. Requires d_max >= 16 and n_max >= 8.
std::vector<GridCell> contour_cells(unsigned d_max, unsigned n_max);

/// Serial reference for the sweep above; must produce identical cells.
std::vector<GridCell> contour_cells_serial(unsigned d_max, unsigned n_max);

/// CSV with header d,N,m_star,ratio_lower,vacuous. ratio_lower is the exact
/// rational rendered at `digits` fractional digits (rounded down).
std::string contour_csv(const std::vector<GridCell>& cells, unsigned digits);

/// One cell of the LME existence table.
struct LmeCell {
    unsigned d = 0;
    unsigned n = 0;
    bool exists = false;
};

/// Existence grid for 0 <= N <= d <= d_max (91 cells at d_max = 12).
std::vector<LmeCell> lme_cells(unsigned d_max);

/// Fixed-width text rendering of the existence grid (columns d = 1..d_max).
std::string lme_table_text(unsigned d_max);

}  // namespace paulivol::grid
