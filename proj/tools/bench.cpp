// Times the OpenMP kernels against their serial reference implementations
// and checks that both produce identical results.

#include <chrono>
#include <cstdint>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "paulivol/grid.hpp"
#include "paulivol/mc.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

template <typename F>
double timed(F&& f) {
    const auto start = Clock::now();
    f();
    return seconds_since(start);
}

void report(const char* name, double serial_s, double parallel_s, bool identical) {
    std::cout << name << ": serial " << serial_s << " s, parallel " << parallel_s << " s, speedup "
              << serial_s / parallel_s << "x, results " << (identical ? "identical" : "DIFFER")
              << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    std::uint64_t samples = 4000000;
    unsigned d_max = 64;
    if (argc > 1) samples = std::strtoull(argv[1], nullptr, 10);
    if (argc > 2) d_max = static_cast<unsigned>(std::strtoul(argv[2], nullptr, 10));

#ifdef _OPENMP
    std::cout << "OpenMP threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "built without OpenMP\n";
#endif

    using namespace paulivol;

    {
        mc::McEstimate serial_e, parallel_e;
        const double ts = timed([&] {
            serial_e = mc::estimate_pauli_fraction_serial(10, Rational(5), samples, 42);
        });
        const double tp =
            timed([&] { parallel_e = mc::estimate_pauli_fraction(10, Rational(5), samples, 42); });
        report("mc pauli fraction (d=10, N=5)", ts, tp,
               serial_e.accepted == parallel_e.accepted && serial_e.mean == parallel_e.mean);
    }
    {
        mc::McEstimate serial_e, parallel_e;
        const Rational t = exact::make_rational(Integer(3), Integer(5));
        const double ts = timed([&] {
            serial_e = mc::estimate_order_fraction_serial(8, Rational(4), 2, t, samples, 7);
        });
        const double tp = timed(
            [&] { parallel_e = mc::estimate_order_fraction(8, Rational(4), 2, t, samples, 7); });
        report("mc order fraction (d=8, N=4, m=2, t=3/5)", ts, tp,
               serial_e.accepted == parallel_e.accepted &&
                   serial_e.effective_samples == parallel_e.effective_samples);
    }
    {
        std::vector<grid::GridCell> serial_cells, parallel_cells;
        const double ts = timed([&] { serial_cells = grid::contour_cells_serial(d_max, 1u << 30); });
        const double tp = timed([&] { parallel_cells = grid::contour_cells(d_max, 1u << 30); });
        bool identical = serial_cells.size() == parallel_cells.size();
        for (std::size_t i = 0; identical && i < serial_cells.size(); ++i)
            identical = serial_cells[i].ratio_lower == parallel_cells[i].ratio_lower &&
                        serial_cells[i].m_star == parallel_cells[i].m_star;
        report(("contour sweep (d <= " + std::to_string(d_max) + ")").c_str(), ts, tp, identical);
    }
    return 0;
}
