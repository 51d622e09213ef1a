#include "gtorbit/reconstruct.hpp"

#include <algorithm>
#include <cmath>

namespace gtorbit {

namespace {

void check_arrow_interlacing(const std::vector<Rational>& b, const std::vector<Rational>& a) {
    const size_t k = b.size();
    if (a.size() != k + 1) throw std::invalid_argument("need one more target eigenvalue than diagonal entries");
    for (size_t i = 0; i < k; ++i) {
        if (a[i] < b[i])
            throw std::invalid_argument("interlacing violated: a_" + std::to_string(i + 1) + " < b_" +
                                        std::to_string(i + 1));
        if (b[i] < a[i + 1])
            throw std::invalid_argument("interlacing violated: b_" + std::to_string(i + 1) + " < a_" +
                                        std::to_string(i + 2));
    }
}

std::vector<Rational> arrow_moduli(const std::vector<Rational>& b, const std::vector<Rational>& a) {
    const size_t k = b.size();
    // Deflate a repeated diagonal value: interlacing pins a_{i+1} = b_i, and
    // the closed-form quotient is 0/0 there. Removing the matched pair with a
    // zero coupling reproduces the block-diagonal realization.
    for (size_t i = 0; i + 1 < k; ++i) {
        if (b[i] != b[i + 1]) continue;
        std::vector<Rational> b_red(b);
        b_red.erase(b_red.begin() + i);
        std::vector<Rational> a_red(a);
        a_red.erase(a_red.begin() + i + 1);
        std::vector<Rational> reduced = arrow_moduli(b_red, a_red);
        reduced.insert(reduced.begin() + i, Rational(0));
        return reduced;
    }

    std::vector<Rational> moduli(k);
    for (size_t i = 0; i < k; ++i) {
        Rational num(1), den(1);
        for (size_t m = 0; m <= k; ++m) num *= a[m] - b[i];
        for (size_t j = 0; j < k; ++j)
            if (j != i) den *= b[j] - b[i];
        moduli[i] = -num / den;
        if (moduli[i] < 0)
            throw std::logic_error("negative coupling |x|^2 despite interlacing (internal error)");
    }
    return moduli;
}

} // namespace

ArrowSolution solve_arrow(const std::vector<Rational>& b, const std::vector<Rational>& a) {
    for (size_t i = 0; i + 1 < b.size(); ++i)
        if (b[i] < b[i + 1]) throw std::invalid_argument("diagonal must be sorted nonincreasing");
    for (size_t i = 0; i + 1 < a.size(); ++i)
        if (a[i] < a[i + 1]) throw std::invalid_argument("targets must be sorted nonincreasing");
    check_arrow_interlacing(b, a);

    Rational corner(0);
    for (const auto& v : a) corner += v;
    for (const auto& v : b) corner -= v;
    return ArrowSolution{b, arrow_moduli(b, a), corner};
}

Rational arrow_charpoly_residual(const ArrowSolution& sol, const std::vector<Rational>& a,
                                 const Rational& t) {
    Rational lhs(1);
    for (const auto& am : a) lhs *= t - am;
    Rational rhs = t - sol.corner;
    for (const auto& bi : sol.diagonal) rhs *= t - bi;
    for (size_t i = 0; i < sol.diagonal.size(); ++i) {
        Rational prod = sol.squared_moduli[i];
        for (size_t j = 0; j < sol.diagonal.size(); ++j)
            if (j != i) prod *= t - sol.diagonal[j];
        rhs -= prod;
    }
    return lhs - rhs;
}

namespace {

// Dense LU with partial pivoting; near-singular pivots are nudged, which is
// exactly what inverse iteration wants when shifted onto an eigenvalue.
struct LuFactors {
    int n;
    std::vector<double> data;
    std::vector<int> perm;
};

LuFactors lu_factor(std::vector<double> m, int n, double pivot_floor) {
    LuFactors lu{n, std::move(m), std::vector<int>(n)};
    auto at = [&](int i, int j) -> double& { return lu.data[static_cast<size_t>(i) * n + j]; };
    for (int i = 0; i < n; ++i) lu.perm[i] = i;
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(at(r, col)) > std::abs(at(pivot, col))) pivot = r;
        if (pivot != col) {
            for (int c = 0; c < n; ++c) std::swap(at(col, c), at(pivot, c));
            std::swap(lu.perm[col], lu.perm[pivot]);
        }
        if (std::abs(at(col, col)) < pivot_floor)
            at(col, col) = at(col, col) < 0 ? -pivot_floor : pivot_floor;
        for (int r = col + 1; r < n; ++r) {
            double f = at(r, col) / at(col, col);
            at(r, col) = f;
            for (int c = col + 1; c < n; ++c) at(r, c) -= f * at(col, c);
        }
    }
    return lu;
}

std::vector<double> lu_solve(const LuFactors& lu, const std::vector<double>& b) {
    const int n = lu.n;
    std::vector<double> y(n);
    for (int i = 0; i < n; ++i) {
        double s = b[lu.perm[i]];
        for (int j = 0; j < i; ++j) s -= lu.data[static_cast<size_t>(i) * n + j] * y[j];
        y[i] = s;
    }
    for (int i = n - 1; i >= 0; --i) {
        double s = y[i];
        for (int j = i + 1; j < n; ++j) s -= lu.data[static_cast<size_t>(i) * n + j] * y[j];
        y[i] = s / lu.data[static_cast<size_t>(i) * n + i];
    }
    return y;
}

double dot(const std::vector<double>& u, const std::vector<double>& v) {
    double s = 0.0;
    for (size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
    return s;
}

double norm(const std::vector<double>& v) { return std::sqrt(dot(v, v)); }

std::vector<double> mat_vec(const std::vector<double>& m, int n, const std::vector<double>& v) {
    std::vector<double> out(n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out[i] += m[static_cast<size_t>(i) * n + j] * v[j];
    return out;
}

// Orthonormal eigenvector rows for a real symmetric block whose eigenvalues
// are known exactly: inverse iteration per cluster of equal values, with
// Gram-Schmidt inside each cluster.
std::vector<std::vector<double>> known_spectrum_eigenvectors(const std::vector<double>& m, int n,
                                                             const std::vector<Rational>& eigs) {
    double scale = 1.0;
    for (double v : m) scale = std::max(scale, std::abs(v));
    const double accept = 1e-10 * scale;

    std::vector<std::vector<double>> vectors(n);
    uint64_t state = 0x9e3779b97f4a7c15ull; // deterministic starting vectors
    auto next_unit = [&]() {
        std::vector<double> v(n);
        for (int i = 0; i < n; ++i) {
            state = state * 6364136223846793005ull + 1442695040888963407ull;
            v[i] = static_cast<double>((state >> 11) % 2000001) / 1000000.0 - 1.0;
        }
        double nv = norm(v);
        for (double& x : v) x /= nv;
        return v;
    };

    int idx = 0;
    while (idx < n) {
        int cluster_end = idx;
        while (cluster_end + 1 < n && eigs[cluster_end + 1] == eigs[idx]) ++cluster_end;
        const double mu = to_double(eigs[idx]);

        for (int attempt = 0; attempt < 5; ++attempt) {
            const double shift = mu + (attempt + 1) * 1e-10 * (1.0 + std::abs(mu));
            std::vector<double> shifted = m;
            for (int i = 0; i < n; ++i) shifted[static_cast<size_t>(i) * n + i] -= shift;
            LuFactors lu = lu_factor(std::move(shifted), n, 1e-14 * (1.0 + scale));

            bool cluster_ok = true;
            for (int slot = idx; slot <= cluster_end; ++slot) {
                std::vector<double> v = next_unit();
                bool ok = false;
                for (int it = 0; it < 8 && !ok; ++it) {
                    std::vector<double> w = lu_solve(lu, v);
                    for (int prev = idx; prev < slot; ++prev) {
                        double proj = dot(w, vectors[prev]);
                        for (int i = 0; i < n; ++i) w[i] -= proj * vectors[prev][i];
                    }
                    double nw = norm(w);
                    if (nw < 1e-300) {
                        v = next_unit();
                        continue;
                    }
                    for (double& x : w) x /= nw;
                    v = w;
                    std::vector<double> mv = mat_vec(m, n, v);
                    double res = 0.0;
                    for (int i = 0; i < n; ++i) res += (mv[i] - mu * v[i]) * (mv[i] - mu * v[i]);
                    ok = std::sqrt(res) <= accept;
                }
                if (!ok) {
                    cluster_ok = false;
                    break;
                }
                vectors[slot] = v;
            }
            if (cluster_ok) break;
            if (attempt == 4)
                throw EigensolverError("inverse iteration did not converge at eigenvalue " +
                                           std::to_string(mu),
                                       accept);
        }
        idx = cluster_end + 1;
    }
    return vectors;
}

} // namespace

HermitianMatrix reconstruct_matrix(const GTPattern& p, double tol) {
    if (tol <= 0.0) throw std::invalid_argument("tolerance must be positive");
    if (!check_interlacing(p, Rational(0)).empty())
        throw std::invalid_argument("pattern violates interlacing");

    const int n = p.size();
    std::vector<double> m{to_double(p.value(1, 1))}; // current j x j block, row-major

    for (int j = 1; j < n; ++j) {
        ArrowSolution arrow = solve_arrow(p.row(j), p.row(j + 1));
        std::vector<double> x(j);
        for (int i = 0; i < j; ++i) x[i] = std::sqrt(to_double(arrow.squared_moduli[i]));

        std::vector<std::vector<double>> c = known_spectrum_eigenvectors(m, j, p.row(j));
        // Border column C^T x rotates the arrow couplings onto the block's eigenbasis.
        std::vector<double> border(j, 0.0);
        for (int i = 0; i < j; ++i)
            for (int r = 0; r < j; ++r) border[r] += c[i][r] * x[i];

        std::vector<double> grown(static_cast<size_t>(j + 1) * (j + 1), 0.0);
        for (int r = 0; r < j; ++r)
            for (int col = 0; col < j; ++col)
                grown[static_cast<size_t>(r) * (j + 1) + col] = m[static_cast<size_t>(r) * j + col];
        for (int r = 0; r < j; ++r) {
            grown[static_cast<size_t>(r) * (j + 1) + j] = border[r];
            grown[static_cast<size_t>(j) * (j + 1) + r] = border[r];
        }
        grown[static_cast<size_t>(j) * (j + 1) + j] = to_double(arrow.corner);
        m = std::move(grown);
    }

    std::vector<std::complex<double>> entries(m.size());
    for (size_t i = 0; i < m.size(); ++i) entries[i] = {m[i], 0.0};
    return HermitianMatrix(n, std::move(entries));
}

} // namespace gtorbit
