#include "oracle.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace oracle {

namespace {

int coord(int n, int j, int k) { return (n + j) * (n - 1 - j) / 2 + (k - 1); }

// Row-echelon rank over the rationals.
int rank_of(std::vector<std::vector<Rational>> rows) {
    if (rows.empty()) return 0;
    const size_t cols = rows[0].size();
    size_t row = 0;
    int rank = 0;
    for (size_t col = 0; col < cols && row < rows.size(); ++col) {
        size_t pivot = row;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[row], rows[pivot]);
        for (size_t r = row + 1; r < rows.size(); ++r) {
            if (rows[r][col] == 0) continue;
            Rational f = rows[r][col] / rows[row][col];
            for (size_t c = col; c < cols; ++c) rows[r][c] -= f * rows[row][c];
        }
        ++row;
        ++rank;
    }
    return rank;
}

// Unique solution of a square system, if any.
std::optional<std::vector<Rational>> solve_square(std::vector<std::vector<Rational>> m,
                                                  std::vector<Rational> rhs) {
    const size_t n = m.size();
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0) ++pivot;
        if (pivot == n) return std::nullopt;
        std::swap(m[col], m[pivot]);
        std::swap(rhs[col], rhs[pivot]);
        for (size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0) continue;
            Rational f = m[r][col] / m[col][col];
            for (size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
            rhs[r] -= f * rhs[col];
        }
    }
    std::vector<Rational> x(n);
    for (size_t i = 0; i < n; ++i) x[i] = rhs[i] / m[i][i];
    return x;
}

bool feasible(const std::vector<Ineq>& system, const std::vector<Rational>& x) {
    for (const auto& ineq : system) {
        Rational lhs(0);
        for (size_t i = 0; i < x.size(); ++i) lhs += ineq.normal[i] * x[i];
        if (lhs > ineq.rhs) return false;
    }
    return true;
}

std::vector<size_t> tight_set(const std::vector<Ineq>& system, const std::vector<Rational>& x) {
    std::vector<size_t> out;
    for (size_t i = 0; i < system.size(); ++i) {
        Rational lhs(0);
        for (size_t c = 0; c < x.size(); ++c) lhs += system[i].normal[c] * x[c];
        if (lhs == system[i].rhs) out.push_back(i);
    }
    return out;
}

} // namespace

std::vector<Ineq> interlacing_system(const std::vector<Rational>& lambda) {
    const int n = static_cast<int>(lambda.size());
    const int dim = n * (n - 1) / 2;
    std::vector<Ineq> out;
    for (int j = 1; j <= n - 1; ++j) {
        for (int k = 1; k <= j; ++k) {
            Ineq upper{std::vector<Rational>(dim, Rational(0)), Rational(0)};
            upper.normal[coord(n, j, k)] = 1;
            if (j + 1 < n)
                upper.normal[coord(n, j + 1, k)] = -1;
            else
                upper.rhs = lambda[k - 1];
            out.push_back(std::move(upper));

            Ineq lower{std::vector<Rational>(dim, Rational(0)), Rational(0)};
            lower.normal[coord(n, j, k)] = -1;
            if (j + 1 < n)
                lower.normal[coord(n, j + 1, k + 1)] = 1;
            else
                lower.rhs = -lambda[k];
            out.push_back(std::move(lower));
        }
    }
    return out;
}

std::vector<std::vector<Rational>> polytope_vertices(const std::vector<Ineq>& system, int dim) {
    std::set<std::vector<Rational>> found;
    if (dim == 0) {
        found.insert({});
    } else {
        std::vector<size_t> pick(dim);
        for (int i = 0; i < dim; ++i) pick[i] = i;
        const size_t m = system.size();
        while (true) {
            std::vector<std::vector<Rational>> mat;
            std::vector<Rational> rhs;
            for (size_t idx : pick) {
                mat.push_back(system[idx].normal);
                rhs.push_back(system[idx].rhs);
            }
            if (auto x = solve_square(std::move(mat), std::move(rhs)); x && feasible(system, *x))
                found.insert(*x);

            // next combination
            int i = dim - 1;
            while (i >= 0 && pick[i] == m - dim + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int c = i + 1; c < dim; ++c) pick[c] = pick[c - 1] + 1;
        }
    }
    return {found.begin(), found.end()};
}

std::vector<Edge> edges_at_vertex(const std::vector<Ineq>& system,
                                  const std::vector<std::vector<Rational>>& vertices,
                                  const std::vector<Rational>& base) {
    const int dim = static_cast<int>(base.size());
    const auto base_tight = tight_set(system, base);
    std::vector<Edge> out;
    for (const auto& other : vertices) {
        if (other == base) continue;
        const auto other_tight = tight_set(system, other);
        std::vector<std::vector<Rational>> common;
        for (size_t idx : base_tight)
            if (std::binary_search(other_tight.begin(), other_tight.end(), idx))
                common.push_back(system[idx].normal);
        if (rank_of(std::move(common)) != dim - 1) continue;

        std::vector<Rational> diff(dim);
        boost::multiprecision::cpp_int lcm_den = 1;
        for (int i = 0; i < dim; ++i) {
            diff[i] = other[i] - base[i];
            lcm_den = boost::multiprecision::lcm(lcm_den,
                                                 boost::multiprecision::denominator(diff[i]));
        }
        std::vector<boost::multiprecision::cpp_int> scaled(dim);
        boost::multiprecision::cpp_int g = 0;
        for (int i = 0; i < dim; ++i) {
            scaled[i] = boost::multiprecision::numerator(diff[i]) * (lcm_den / boost::multiprecision::denominator(diff[i]));
            g = boost::multiprecision::gcd(g, scaled[i]);
        }
        Edge e;
        e.endpoint = other;
        e.direction.resize(dim);
        for (int i = 0; i < dim; ++i) e.direction[i] = static_cast<int>(scaled[i] / g);
        e.length = Rational(g, lcm_den);
        out.push_back(std::move(e));
    }
    return out;
}

int affine_rank(const std::vector<std::vector<Rational>>& vertices) {
    if (vertices.size() < 2) return 0;
    std::vector<std::vector<Rational>> diffs;
    for (size_t i = 1; i < vertices.size(); ++i) {
        std::vector<Rational> d(vertices[i].size());
        for (size_t c = 0; c < d.size(); ++c) d[c] = vertices[i][c] - vertices[0][c];
        diffs.push_back(std::move(d));
    }
    return rank_of(std::move(diffs));
}

} // namespace oracle
