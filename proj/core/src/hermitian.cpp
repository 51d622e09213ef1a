#include "gtorbit/hermitian.hpp"

#include <algorithm>
#include <cmath>

namespace gtorbit {

HermitianMatrix::HermitianMatrix(int n) : n_(n) {
    if (n <= 0) throw std::invalid_argument("matrix size must be positive");
    entries_.assign(static_cast<size_t>(n) * n, {0.0, 0.0});
}

HermitianMatrix::HermitianMatrix(int n, std::vector<std::complex<double>> entries) : n_(n) {
    if (n <= 0) throw std::invalid_argument("matrix size must be positive");
    if (entries.size() != static_cast<size_t>(n) * n)
        throw std::invalid_argument("entry count does not match matrix size");

    double scale = 1.0;
    for (const auto& e : entries) scale = std::max(scale, std::abs(e));
    double violation = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j)
            violation = std::max(violation,
                                 std::abs(entries[static_cast<size_t>(i) * n + j] -
                                          std::conj(entries[static_cast<size_t>(j) * n + i])));
    if (violation > 1e-12 * scale)
        throw std::invalid_argument("input is not Hermitian (asymmetry " + std::to_string(violation) + ")");

    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < i; ++j) {
            auto mean = 0.5 * (entries[static_cast<size_t>(i) * n + j] +
                               std::conj(entries[static_cast<size_t>(j) * n + i]));
            entries[static_cast<size_t>(i) * n + j] = mean;
            entries[static_cast<size_t>(j) * n + i] = std::conj(mean);
        }
        entries[static_cast<size_t>(i) * n + i] = {entries[static_cast<size_t>(i) * n + i].real(), 0.0};
    }
    entries_ = std::move(entries);
}

HermitianMatrix HermitianMatrix::diagonal(const std::vector<double>& d) {
    HermitianMatrix m(static_cast<int>(d.size()));
    for (size_t i = 0; i < d.size(); ++i) m.entries_[i * d.size() + i] = {d[i], 0.0};
    return m;
}

double HermitianMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const auto& e : entries_) s += std::norm(e);
    return std::sqrt(s);
}

double HermitianMatrix::max_abs_entry() const {
    double s = 0.0;
    for (const auto& e : entries_) s = std::max(s, std::abs(e));
    return s;
}

double HermitianMatrix::trace() const {
    double s = 0.0;
    for (int i = 0; i < n_; ++i) s += (*this)(i, i).real();
    return s;
}

HermitianMatrix HermitianMatrix::leading_principal_submatrix(int j) const {
    if (j < 1 || j > n_) throw std::invalid_argument("submatrix size out of range");
    HermitianMatrix sub(j);
    for (int r = 0; r < j; ++r)
        for (int c = 0; c < j; ++c)
            sub.entries_[static_cast<size_t>(r) * j + c] = (*this)(r, c);
    return sub;
}

Spectrum::Spectrum(std::vector<Rational> values) : values_(std::move(values)) {
    if (values_.empty()) throw std::invalid_argument("spectrum must be nonempty");
    for (size_t i = 0; i + 1 < values_.size(); ++i)
        if (values_[i] < values_[i + 1])
            throw std::invalid_argument("spectrum must be sorted nonincreasing");
    for (const auto& v : values_) {
        if (distinct_.empty() || distinct_.back() != v) {
            distinct_.push_back(v);
            multiplicities_.push_back(1);
        } else {
            ++multiplicities_.back();
        }
    }
}

int Spectrum::repeated_value_count() const {
    int c = 0;
    for (int m : multiplicities_)
        if (m > 1) ++c;
    return c;
}

Rational Spectrum::min_gap() const {
    if (distinct_.size() < 2) return Rational(0);
    Rational gap = distinct_[0] - distinct_[1];
    for (size_t i = 1; i + 1 < distinct_.size(); ++i)
        gap = std::min(gap, Rational(distinct_[i] - distinct_[i + 1]));
    return gap;
}

namespace {

double off_diagonal_norm(const std::vector<std::complex<double>>& a, int n) {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) s += std::norm(a[static_cast<size_t>(i) * n + j]);
    return std::sqrt(2.0 * s);
}

} // namespace

std::vector<double> eigenvalues_desc(const HermitianMatrix& m, double tol) {
    if (tol <= 0.0) throw std::invalid_argument("tolerance must be positive");
    const int n = m.size();
    std::vector<std::complex<double>> a = m.entries();
    auto at = [&](int i, int j) -> std::complex<double>& { return a[static_cast<size_t>(i) * n + j]; };

    const double norm = m.frobenius_norm();
    const double threshold = tol * norm;
    constexpr int max_sweeps = 100;

    double off = off_diagonal_norm(a, n);
    int sweep = 0;
    while (off > threshold && sweep < max_sweeps) {
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double r = std::abs(at(p, q));
                if (r == 0.0) continue;
                // Absorb the phase of a_pq, then a real rotation kills the entry.
                const std::complex<double> w = at(p, q) / r; // e^{i phi}
                const double alpha = at(p, p).real();
                const double gamma = at(q, q).real();
                const double theta = 0.5 * std::atan2(2.0 * r, gamma - alpha);
                const double c = std::cos(theta);
                const double s = std::sin(theta);
                const std::complex<double> wbar = std::conj(w);

                for (int k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    const std::complex<double> akp = at(k, p);
                    const std::complex<double> akq = at(k, q);
                    at(k, p) = c * akp - s * wbar * akq;
                    at(k, q) = s * akp + c * wbar * akq;
                    at(p, k) = std::conj(at(k, p));
                    at(q, k) = std::conj(at(k, q));
                }
                at(p, p) = {c * c * alpha - 2.0 * c * s * r + s * s * gamma, 0.0};
                at(q, q) = {s * s * alpha + 2.0 * c * s * r + c * c * gamma, 0.0};
                at(p, q) = {0.0, 0.0};
                at(q, p) = {0.0, 0.0};
            }
        }
        off = off_diagonal_norm(a, n);
        ++sweep;
    }
    if (off > threshold)
        throw EigensolverError("Jacobi sweeps did not converge (residual " + std::to_string(off) + ")", off);

    std::vector<double> eig(n);
    for (int i = 0; i < n; ++i) eig[i] = at(i, i).real();
    std::sort(eig.begin(), eig.end(), std::greater<double>());
    return eig;
}

} // namespace gtorbit
