#pragma once

#include "gtorbit/hermitian.hpp"

#include <map>
#include <utility>
#include <vector>

namespace gtorbit {

/// 0-based slot of x^{(j)}_k in the shared coordinate order
/// (x^{(n-1)}_1, ..., x^{(n-1)}_{n-1}, x^{(n-2)}_1, ..., x^{(1)}_1).
inline int pattern_coordinate_index(int n, int j, int k) {
    return (n + j) * (n - 1 - j) / 2 + (k - 1);
}

/// Triangular array of Gelfand-Tsetlin values: row j holds the j sorted
/// eigenvalues of the leading j x j block, row n is the spectrum itself.
template <typename T>
class BasicGTPattern {
public:
    BasicGTPattern(std::vector<std::vector<T>> rows, std::vector<T> top)
        : n_(static_cast<int>(top.size())), rows_(std::move(rows)), top_(std::move(top)) {
        if (n_ < 1) throw std::invalid_argument("pattern needs a nonempty top row");
        if (rows_.size() != static_cast<size_t>(n_ - 1))
            throw std::invalid_argument("pattern needs n-1 rows below the top");
        for (int j = 1; j < n_; ++j)
            if (rows_[j - 1].size() != static_cast<size_t>(j))
                throw std::invalid_argument("row " + std::to_string(j) + " must have " + std::to_string(j) + " entries");
        for (int j = 1; j <= n_; ++j) {
            const auto& r = row(j);
            for (size_t k = 0; k + 1 < r.size(); ++k)
                if (r[k] < r[k + 1]) throw std::invalid_argument("pattern rows must be sorted nonincreasing");
        }
    }

    int size() const { return n_; }
    const std::vector<T>& top() const { return top_; }
    const std::vector<T>& row(int j) const { return j == n_ ? top_ : rows_[j - 1]; }
    const T& value(int j, int k) const { return row(j)[k - 1]; }

    int coordinate_count() const { return n_ * (n_ - 1) / 2; }

    std::vector<T> coordinates() const {
        std::vector<T> x;
        x.reserve(coordinate_count());
        for (int j = n_ - 1; j >= 1; --j)
            for (int k = 1; k <= j; ++k) x.push_back(value(j, k));
        return x;
    }

    static BasicGTPattern from_coordinates(std::vector<T> coords, std::vector<T> top) {
        const int n = static_cast<int>(top.size());
        if (coords.size() != static_cast<size_t>(n * (n - 1) / 2))
            throw std::invalid_argument("coordinate vector has wrong dimension");
        std::vector<std::vector<T>> rows(n > 0 ? n - 1 : 0);
        size_t pos = 0;
        for (int j = n - 1; j >= 1; --j) {
            rows[j - 1].assign(coords.begin() + pos, coords.begin() + pos + j);
            pos += j;
        }
        return BasicGTPattern(std::move(rows), std::move(top));
    }

private:
    int n_;
    std::vector<std::vector<T>> rows_; // rows_[j-1] = row j, j = 1..n-1
    std::vector<T> top_;
};

using GTPattern = BasicGTPattern<Rational>;
using NumericGTPattern = BasicGTPattern<double>;

NumericGTPattern to_numeric(const GTPattern& p);

/// Gelfand-Tsetlin map: row j = eigenvalues_desc of the leading j x j block.
/// Defined for any Hermitian matrix; propagates eigensolver failures.
NumericGTPattern gt_map(const HermitianMatrix& a, double tol);

/// Exact pattern of diag(d): row j is the multiset {d_1..d_j} sorted nonincreasing.
GTPattern gt_of_diagonal(const std::vector<Rational>& d);

/// Inverse of the triangular trace relation: entry k is row-sum(k) - row-sum(k-1).
/// Equals the diagonal of any matrix realizing the pattern.
template <typename T>
std::vector<T> project_to_diagonal(const BasicGTPattern<T>& p) {
    const int n = p.size();
    std::vector<T> diag(n);
    T prev_sum{};
    for (int k = 1; k <= n; ++k) {
        T sum{};
        for (const T& v : p.row(k)) sum += v;
        diag[k - 1] = sum - prev_sum;
        prev_sum = sum;
    }
    return diag;
}

template <typename T>
struct InterlacingViolation {
    char kind; // 'A' or 'B'
    int j;
    int k;
    T slack; // negative when violated
};

/// Violated interlacing inequalities, each with its label and signed slack.
/// A_{j,k}: row_{j+1}[k] >= row_j[k];  B_{j,k}: row_j[k] >= row_{j+1}[k+1].
template <typename T>
std::vector<InterlacingViolation<T>> check_interlacing(const BasicGTPattern<T>& p, const T& tol) {
    std::vector<InterlacingViolation<T>> out;
    for (int j = 1; j < p.size(); ++j) {
        for (int k = 1; k <= j; ++k) {
            T slack_a = p.value(j + 1, k) - p.value(j, k);
            if (slack_a < -tol) out.push_back({'A', j, k, slack_a});
            T slack_b = p.value(j, k) - p.value(j + 1, k + 1);
            if (slack_b < -tol) out.push_back({'B', j, k, slack_b});
        }
    }
    return out;
}

/// Combinatorial data of the orbit through lambda.
struct OrbitSpec {
    Spectrum lambda;
    int N;               // n(n-1)/2 pattern coordinates
    int D;               // sum_{i<j} l_i l_j
    int orbit_dimension; // 2D
    int repeated_value_count;
    // Coordinates pinned to a single value by interlacing alone.
    std::map<std::pair<int, int>, Rational> forced_constants;

    bool is_forced(int j, int k) const { return forced_constants.count({j, k}) > 0; }
};

OrbitSpec orbit_spec(const Spectrum& lambda);

} // namespace gtorbit
