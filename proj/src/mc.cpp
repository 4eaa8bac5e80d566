#include "paulivol/mc.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace paulivol::mc {

namespace {

constexpr std::uint64_t kChunkSize = 1 << 14;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t chunk_seed(std::uint64_t master, std::uint64_t chunk) {
    return splitmix64(splitmix64(master) ^ splitmix64(chunk + 0x51a9b2c3d4e5f607ULL));
}

double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double standard_exponential(std::mt19937_64& rng) {
    // -log(1 - u) with u in [0,1): argument stays in (0,1].
    return -std::log1p(-uniform01(rng));
}

struct ChunkCounts {
    std::uint64_t pauli = 0;
    std::uint64_t order = 0;
};

struct OrderCut {
    unsigned m = 0;
    double t = 0.0;
};

ChunkCounts run_chunk(unsigned d, double total, const OrderCut* cut, std::uint64_t count,
                      std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<double> point(d);
    std::vector<double> scratch(d);
    ChunkCounts counts;
    for (std::uint64_t s = 0; s < count; ++s) {
        double sum = 0.0;
        for (unsigned i = 0; i < d; ++i) {
            point[i] = standard_exponential(rng);
            sum += point[i];
        }
        const double scale = total / sum;
        double max_v = 0.0;
        for (unsigned i = 0; i < d; ++i) {
            point[i] *= scale;
            max_v = std::max(max_v, point[i]);
        }
        if (max_v > 1.0) continue;
        ++counts.pauli;
        if (cut) {
            scratch = point;
            std::nth_element(scratch.begin(), scratch.begin() + (cut->m - 1), scratch.end(),
                             std::greater<double>());
            if (scratch[cut->m - 1] <= cut->t) ++counts.order;
        }
    }
    return counts;
}

ChunkCounts run_all_chunks(unsigned d, double total, const OrderCut* cut, std::uint64_t samples,
                           std::uint64_t seed, bool parallel) {
    const std::uint64_t nchunks = (samples + kChunkSize - 1) / kChunkSize;
    std::vector<ChunkCounts> per_chunk(nchunks);
    const long n = static_cast<long>(nchunks);
    if (parallel) {
#pragma omp parallel for schedule(static)
        for (long c = 0; c < n; ++c) {
            const std::uint64_t lo = static_cast<std::uint64_t>(c) * kChunkSize;
            const std::uint64_t count = std::min<std::uint64_t>(kChunkSize, samples - lo);
            per_chunk[c] = run_chunk(d, total, cut, count, chunk_seed(seed, c));
        }
    } else {
        for (long c = 0; c < n; ++c) {
            const std::uint64_t lo = static_cast<std::uint64_t>(c) * kChunkSize;
            const std::uint64_t count = std::min<std::uint64_t>(kChunkSize, samples - lo);
            per_chunk[c] = run_chunk(d, total, cut, count, chunk_seed(seed, c));
        }
    }
    ChunkCounts totals;
    for (const auto& c : per_chunk) {
        totals.pauli += c.pauli;
        totals.order += c.order;
    }
    return totals;
}

double binomial_std_error(double p, std::uint64_t n) {
    if (n == 0) return 0.0;
    return std::sqrt(p * (1.0 - p) / static_cast<double>(n));
}

McEstimate pauli_estimate_impl(unsigned d, const Rational& n, std::uint64_t samples,
                               std::uint64_t seed, bool parallel) {
    if (d < 1 || samples < 1)
        throw std::domain_error("estimate_pauli_fraction: requires d >= 1 and samples >= 1");
    if (n <= 0 || n > Rational(static_cast<long>(d)))
        throw std::domain_error("estimate_pauli_fraction: requires 0 < N <= d");
    const auto counts = run_all_chunks(d, exact::to_double(n), nullptr, samples, seed, parallel);
    McEstimate e;
    e.samples = samples;
    e.accepted = counts.pauli;
    e.effective_samples = samples;
    e.seed = seed;
    e.mean = static_cast<double>(counts.pauli) / static_cast<double>(samples);
    e.std_error = binomial_std_error(e.mean, samples);
    return e;
}

McEstimate order_estimate_impl(unsigned d, const Rational& n, unsigned m, const Rational& t,
                               std::uint64_t samples, std::uint64_t seed, bool parallel) {
    if (d < 1 || samples < 1)
        throw std::domain_error("estimate_order_fraction: requires d >= 1 and samples >= 1");
    if (m < 1 || m > d) throw std::domain_error("estimate_order_fraction: requires 1 <= m <= d");
    if (t <= 0 || t > 1)
        throw std::domain_error("estimate_order_fraction: requires 0 < t <= 1");
    if (n <= 0 || n > Rational(static_cast<long>(d)))
        throw std::domain_error("estimate_order_fraction: requires 0 < N <= d");
    const OrderCut cut{m, exact::to_double(t)};
    const auto counts = run_all_chunks(d, exact::to_double(n), &cut, samples, seed, parallel);
    if (counts.pauli == 0)
        throw std::runtime_error("estimate_order_fraction: no sample passed the Pauli cut");
    McEstimate e;
    e.samples = samples;
    e.accepted = counts.order;
    e.effective_samples = counts.pauli;
    e.seed = seed;
    e.mean = static_cast<double>(counts.order) / static_cast<double>(counts.pauli);
    e.std_error = binomial_std_error(e.mean, counts.pauli);
    return e;
}

}  // namespace

std::vector<double> sample_simplex_point(unsigned d, double total, std::mt19937_64& rng) {
    if (d < 1 || total <= 0)
        throw std::domain_error("sample_simplex_point: requires d >= 1 and total > 0");
    std::vector<double> point(d);
    double sum = 0.0;
    for (unsigned i = 0; i < d; ++i) {
        point[i] = standard_exponential(rng);
        sum += point[i];
    }
    const double scale = total / sum;
    for (auto& v : point) v *= scale;
    return point;
}

McEstimate estimate_pauli_fraction(unsigned d, const Rational& n, std::uint64_t samples,
                                   std::uint64_t seed) {
    return pauli_estimate_impl(d, n, samples, seed, true);
}

McEstimate estimate_pauli_fraction_serial(unsigned d, const Rational& n, std::uint64_t samples,
                                          std::uint64_t seed) {
    return pauli_estimate_impl(d, n, samples, seed, false);
}

McEstimate estimate_order_fraction(unsigned d, const Rational& n, unsigned m, const Rational& t,
                                   std::uint64_t samples, std::uint64_t seed) {
    return order_estimate_impl(d, n, m, t, samples, seed, true);
}

McEstimate estimate_order_fraction_serial(unsigned d, const Rational& n, unsigned m,
                                          const Rational& t, std::uint64_t samples,
                                          std::uint64_t seed) {
    return order_estimate_impl(d, n, m, t, samples, seed, false);
}

}  // namespace paulivol::mc
