#pragma once

#include "gtorbit/gtsystem.hpp"

#include <random>

namespace gtorbit {

/// Random exact pattern with top row lambda, sampled row by row: each entry is
/// drawn from the interval its upper neighbours allow, on a 1/grid lattice.
GTPattern sample_interlacing_pattern(const Spectrum& lambda, std::mt19937_64& rng, int grid = 64);

/// Random nonincreasing rational spectrum with at least two distinct values
/// and at most one repeated one.
Spectrum random_spectrum(std::mt19937_64& rng, int n);

/// Entries uniform in [-1,1] (complex off the diagonal).
HermitianMatrix random_hermitian(std::mt19937_64& rng, int n);

/// u a u^dagger for a Haar-ish random unitary u; preserves the spectrum.
HermitianMatrix random_unitary_conjugate(std::mt19937_64& rng, const HermitianMatrix& a);

/// diag(d) conjugated by a Haar-ish random unitary; a random orbit point.
HermitianMatrix random_orbit_point(std::mt19937_64& rng, const std::vector<double>& d);

std::vector<Rational> random_arrangement(std::mt19937_64& rng, const Spectrum& lambda);

} // namespace gtorbit
