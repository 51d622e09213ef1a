#pragma once

#include "gtorbit/rational.hpp"

#include <complex>
#include <stdexcept>
#include <vector>

namespace gtorbit {

/// Thrown when the iterative eigensolver exhausts its sweep budget.
class EigensolverError : public std::runtime_error {
public:
    EigensolverError(const std::string& what, double residual)
        : std::runtime_error(what), residual_(residual) {}
    double residual() const { return residual_; }

private:
    double residual_;
};

/// Dense n x n Hermitian matrix. The constructor symmetrizes its input,
/// rejecting asymmetry beyond 1e-12 relative to the largest entry, so that
/// entries(i,j) == conj(entries(j,i)) holds exactly afterwards.
class HermitianMatrix {
public:
    explicit HermitianMatrix(int n);
    HermitianMatrix(int n, std::vector<std::complex<double>> entries); // row-major
    static HermitianMatrix diagonal(const std::vector<double>& d);

    int size() const { return n_; }
    std::complex<double> operator()(int i, int j) const { return entries_[static_cast<size_t>(i) * n_ + j]; }
    const std::vector<std::complex<double>>& entries() const { return entries_; }

    double frobenius_norm() const;
    double max_abs_entry() const;
    double trace() const;

    HermitianMatrix leading_principal_submatrix(int j) const; // 1 <= j <= n

private:
    int n_;
    std::vector<std::complex<double>> entries_;
};

/// A nonincreasing list of rational eigenvalues with multiplicity bookkeeping.
class Spectrum {
public:
    explicit Spectrum(std::vector<Rational> values); // must be sorted nonincreasing

    int size() const { return static_cast<int>(values_.size()); }
    const std::vector<Rational>& values() const { return values_; }
    const std::vector<Rational>& distinct_values() const { return distinct_; }
    const std::vector<int>& multiplicities() const { return multiplicities_; }

    /// Number of distinct values occurring more than once.
    int repeated_value_count() const;

    /// Smallest gap between consecutive distinct values; 0 if fewer than two.
    Rational min_gap() const;

private:
    std::vector<Rational> values_;
    std::vector<Rational> distinct_;
    std::vector<int> multiplicities_;
};

/// Eigenvalues of a Hermitian matrix in nonincreasing order, computed by
/// cyclic Jacobi sweeps until off(A) <= tol * ||A||_F. Each returned value is
/// within tol*(1+||A||) of a true eigenvalue and the multiset matches the
/// true spectrum with multiplicity.
std::vector<double> eigenvalues_desc(const HermitianMatrix& a, double tol);

} // namespace gtorbit
