#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "paulivol/exact.hpp"

namespace paulivol::mc {

/// Monte Carlo ratio estimate. `std_error` is the plug-in binomial value
/// sqrt(mean (1-mean) / effective_samples), where effective_samples is the
/// conditioning count (total samples for unconditional estimates, Pauli
/// acceptances for the conditional order-statistic estimate).
struct McEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    std::uint64_t samples = 0;
    std::uint64_t accepted = 0;
    std::uint64_t effective_samples = 0;
    std::uint64_t seed = 0;
};

/// One uniform point on {lambda >= 0, sum lambda = total}: d i.i.d.
/// standard exponentials, normalized and scaled.
std::vector<double> sample_simplex_point(unsigned d, double total, std::mt19937_64& rng);

/// Estimates P[max lambda_i <= 1 | sum lambda = N] = Vol(P)/Vol(B).
/// Deterministic given (seed, samples) regardless of thread count: samples
/// are processed in fixed-size chunks with counter-derived substreams.
McEstimate estimate_pauli_fraction(unsigned d, const Rational& n, std::uint64_t samples,
                                   std::uint64_t seed);

/// Estimates P[m-th largest <= t | max <= 1, sum = N] = Vol(A)/Vol(P) by
/// rejection inside one stream. Throws if no sample passes the Pauli cut.
McEstimate estimate_order_fraction(unsigned d, const Rational& n, unsigned m, const Rational& t,
                                   std::uint64_t samples, std::uint64_t seed);

/// Serial reference implementations: same chunked arithmetic without the
/// OpenMP pragma. Kept for determinism tests and the benchmark.
McEstimate estimate_pauli_fraction_serial(unsigned d, const Rational& n, std::uint64_t samples,
                                          std::uint64_t seed);
McEstimate estimate_order_fraction_serial(unsigned d, const Rational& n, unsigned m,
                                          const Rational& t, std::uint64_t samples,
                                          std::uint64_t seed);

}  // namespace paulivol::mc
