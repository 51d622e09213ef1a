#include "gtorbit/gtsystem.hpp"

#include <algorithm>
#include <functional>

namespace gtorbit {

NumericGTPattern to_numeric(const GTPattern& p) {
    std::vector<std::vector<double>> rows;
    for (int j = 1; j < p.size(); ++j) {
        std::vector<double> r;
        for (const auto& v : p.row(j)) r.push_back(to_double(v));
        rows.push_back(std::move(r));
    }
    std::vector<double> top;
    for (const auto& v : p.top()) top.push_back(to_double(v));
    return NumericGTPattern(std::move(rows), std::move(top));
}

NumericGTPattern gt_map(const HermitianMatrix& a, double tol) {
    const int n = a.size();
    std::vector<std::vector<double>> rows;
    rows.reserve(n - 1);
    for (int j = 1; j < n; ++j) rows.push_back(eigenvalues_desc(a.leading_principal_submatrix(j), tol));
    std::vector<double> top = eigenvalues_desc(a, tol);
    return NumericGTPattern(std::move(rows), std::move(top));
}

GTPattern gt_of_diagonal(const std::vector<Rational>& d) {
    if (d.empty()) throw std::invalid_argument("diagonal must be nonempty");
    const int n = static_cast<int>(d.size());
    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> prefix;
    for (int j = 1; j <= n; ++j) {
        prefix.push_back(d[j - 1]);
        std::sort(prefix.begin(), prefix.end(), std::greater<Rational>());
        if (j < n) rows.push_back(prefix);
    }
    return GTPattern(std::move(rows), std::move(prefix));
}

OrbitSpec orbit_spec(const Spectrum& lambda) {
    const int n = lambda.size();
    const auto& mult = lambda.multiplicities();

    int d = 0;
    for (size_t i = 0; i < mult.size(); ++i)
        for (size_t j = i + 1; j < mult.size(); ++j) d += mult[i] * mult[j];

    // Propagate the interlacing bounds downward from row n. The upper bound
    // of x^{(j)}_k inherits from (j+1,k), the lower bound from (j+1,k+1);
    // both bounds are attained, so a coordinate is pinned iff they coincide.
    std::map<std::pair<int, int>, Rational> forced;
    std::vector<Rational> ub = lambda.values();
    std::vector<Rational> lb = lambda.values();
    for (int j = n - 1; j >= 1; --j) {
        std::vector<Rational> next_ub(j), next_lb(j);
        for (int k = 1; k <= j; ++k) {
            next_ub[k - 1] = ub[k - 1];
            next_lb[k - 1] = lb[k];
        }
        ub = std::move(next_ub);
        lb = std::move(next_lb);
        for (int k = 1; k <= j; ++k)
            if (ub[k - 1] == lb[k - 1]) forced[{j, k}] = ub[k - 1];
    }

    return OrbitSpec{lambda, n * (n - 1) / 2, d, 2 * d, lambda.repeated_value_count(), std::move(forced)};
}

} // namespace gtorbit
