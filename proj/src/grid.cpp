#include "paulivol/grid.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "paulivol/bounds.hpp"
#include "paulivol/membership.hpp"

namespace paulivol::grid {

namespace {

GridCell evaluate_cell(unsigned d, unsigned n) {
    GridCell cell;
    cell.d = d;
    cell.n = n;
    const auto best = bounds::best_cap_ratio(d, n);
    cell.m_star = best.m_star;
    cell.ratio_lower = best.ratio;
    cell.vacuous_theorem_bound =
        !bounds::guard_fixed_n(d, n) || bounds::fixed_n_ratio_bound(d, n).vacuous;
    return cell;
}

std::vector<std::pair<unsigned, unsigned>> cell_coordinates(unsigned d_max, unsigned n_max) {
    if (d_max < 16 || n_max < 8)
        throw std::domain_error("contour_cells: requires d_max >= 16 and n_max >= 8");
    std::vector<std::pair<unsigned, unsigned>> coords;
    for (unsigned d = 16; d <= d_max; ++d) {
        const unsigned n_hi = std::min(n_max, d / 2);
        for (unsigned n = 8; n <= n_hi; ++n) coords.emplace_back(d, n);
    }
    return coords;
}

}  // namespace

std::vector<GridCell> contour_cells(unsigned d_max, unsigned n_max) {
    const auto coords = cell_coordinates(d_max, n_max);
    std::vector<GridCell> cells(coords.size());
    const long total = static_cast<long>(coords.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < total; ++i)
        cells[i] = evaluate_cell(coords[i].first, coords[i].second);
    return cells;
}

std::vector<GridCell> contour_cells_serial(unsigned d_max, unsigned n_max) {
    const auto coords = cell_coordinates(d_max, n_max);
    std::vector<GridCell> cells(coords.size());
    for (std::size_t i = 0; i < coords.size(); ++i)
        cells[i] = evaluate_cell(coords[i].first, coords[i].second);
    return cells;
}

std::string contour_csv(const std::vector<GridCell>& cells, unsigned digits) {
    std::ostringstream out;
    out << "d,N,m_star,ratio_lower,vacuous\n";
    for (const auto& c : cells) {
        out << c.d << ',' << c.n << ',';
        if (c.m_star) out << *c.m_star;
        out << ',' << exact::to_decimal_string(c.ratio_lower, digits) << ','
            << (c.vacuous_theorem_bound ? "true" : "false") << '\n';
    }
    return out.str();
}

std::vector<LmeCell> lme_cells(unsigned d_max) {
    std::vector<LmeCell> cells;
    for (unsigned d = 0; d <= d_max; ++d)
        for (unsigned n = 0; n <= d; ++n) cells.push_back({d, n, membership::lme_exists(d, n)});
    return cells;
}

std::string lme_table_text(unsigned d_max) {
    if (d_max < 1) throw std::domain_error("lme_table_text: requires d_max >= 1");
    const int width = d_max >= 100 ? 4 : 3;
    std::ostringstream out;
    out << "N\\d";
    for (unsigned d = 1; d <= d_max; ++d) out << std::setw(width) << d;
    out << '\n';
    for (unsigned n = 0; n <= d_max; ++n) {
        out << std::setw(3) << n;
        for (unsigned d = 1; d <= d_max; ++d) {
            if (n > d)
                out << std::setw(width) << ' ';
            else
                out << std::setw(width) << (membership::lme_exists(d, n) ? 'Y' : 'x');
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace paulivol::grid
