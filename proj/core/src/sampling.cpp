#include "gtorbit/sampling.hpp"

#include <algorithm>
#include <cmath>

namespace gtorbit {

namespace {

uint64_t draw(std::mt19937_64& rng, uint64_t bound) { return rng() % bound; }

double uniform_pm1(std::mt19937_64& rng) {
    return static_cast<double>(draw(rng, 2000001)) / 1000000.0 - 1.0;
}

} // namespace

GTPattern sample_interlacing_pattern(const Spectrum& lambda, std::mt19937_64& rng, int grid) {
    if (grid < 1) throw std::invalid_argument("grid must be positive");
    const int n = lambda.size();
    std::vector<std::vector<Rational>> rows(n > 0 ? n - 1 : 0);
    std::vector<Rational> above = lambda.values();
    for (int j = n - 1; j >= 1; --j) {
        std::vector<Rational> row(j);
        for (int k = 0; k < j; ++k) {
            const Rational lo = above[k + 1];
            const Rational hi = above[k];
            row[k] = lo + (hi - lo) * static_cast<long>(draw(rng, grid + 1)) / grid;
        }
        rows[j - 1] = row;
        above = std::move(row);
    }
    return GTPattern(std::move(rows), lambda.values());
}

Spectrum random_spectrum(std::mt19937_64& rng, int n) {
    if (n < 2) throw std::invalid_argument("need n >= 2");
    const int distinct = 2 + static_cast<int>(draw(rng, n - 1)); // 2..n
    std::vector<int> mult(distinct, 1);
    if (distinct < n) mult[draw(rng, distinct)] += n - distinct;

    const long den = 1L << draw(rng, 3); // 1, 2 or 4
    Rational value(static_cast<long>(draw(rng, 13)) - 2, 1);
    std::vector<Rational> values;
    for (int i = 0; i < distinct; ++i) {
        for (int c = 0; c < mult[i]; ++c) values.push_back(value);
        value -= Rational(1 + static_cast<long>(draw(rng, 5)), den);
    }
    return Spectrum(std::move(values));
}

HermitianMatrix random_hermitian(std::mt19937_64& rng, int n) {
    std::vector<std::complex<double>> entries(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        entries[static_cast<size_t>(i) * n + i] = {uniform_pm1(rng), 0.0};
        for (int j = i + 1; j < n; ++j) {
            std::complex<double> v{uniform_pm1(rng), uniform_pm1(rng)};
            entries[static_cast<size_t>(i) * n + j] = v;
            entries[static_cast<size_t>(j) * n + i] = std::conj(v);
        }
    }
    return HermitianMatrix(n, std::move(entries));
}

HermitianMatrix random_unitary_conjugate(std::mt19937_64& rng, const HermitianMatrix& a) {
    const int n = a.size();
    // Gram-Schmidt on a random complex matrix gives the conjugating unitary.
    std::vector<std::vector<std::complex<double>>> u(n, std::vector<std::complex<double>>(n));
    for (int col = 0; col < n; ++col) {
        for (int i = 0; i < n; ++i) u[i][col] = {uniform_pm1(rng), uniform_pm1(rng)};
        for (int prev = 0; prev < col; ++prev) {
            std::complex<double> proj{0.0, 0.0};
            for (int i = 0; i < n; ++i) proj += std::conj(u[i][prev]) * u[i][col];
            for (int i = 0; i < n; ++i) u[i][col] -= proj * u[i][prev];
        }
        double nrm = 0.0;
        for (int i = 0; i < n; ++i) nrm += std::norm(u[i][col]);
        nrm = std::sqrt(nrm);
        if (nrm < 1e-9) {
            --col; // retry a degenerate draw
            continue;
        }
        for (int i = 0; i < n; ++i) u[i][col] /= nrm;
    }
    std::vector<std::complex<double>> entries(static_cast<size_t>(n) * n, {0.0, 0.0});
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::complex<double> s{0.0, 0.0};
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) s += u[i][k] * a(k, l) * std::conj(u[j][l]);
            // numerical conjugation can leave ~1e-16 asymmetry; symmetrize here
            entries[static_cast<size_t>(i) * n + j] = s;
        }
    for (int i = 0; i < n; ++i) {
        entries[static_cast<size_t>(i) * n + i] = {entries[static_cast<size_t>(i) * n + i].real(), 0.0};
        for (int j = i + 1; j < n; ++j) {
            auto mean = 0.5 * (entries[static_cast<size_t>(i) * n + j] +
                               std::conj(entries[static_cast<size_t>(j) * n + i]));
            entries[static_cast<size_t>(i) * n + j] = mean;
            entries[static_cast<size_t>(j) * n + i] = std::conj(mean);
        }
    }
    return HermitianMatrix(n, std::move(entries));
}

HermitianMatrix random_orbit_point(std::mt19937_64& rng, const std::vector<double>& d) {
    return random_unitary_conjugate(rng, HermitianMatrix::diagonal(d));
}

std::vector<Rational> random_arrangement(std::mt19937_64& rng, const Spectrum& lambda) {
    std::vector<Rational> arr = lambda.values();
    for (size_t i = arr.size(); i > 1; --i) std::swap(arr[i - 1], arr[draw(rng, i)]);
    return arr;
}

} // namespace gtorbit
