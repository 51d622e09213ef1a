#include "gtorbit/gtpolytope.hpp"

#include <algorithm>
#include <functional>

namespace gtorbit {

namespace {

std::string position_str(int j, int k) {
    return "(" + std::to_string(j) + "," + std::to_string(k) + ")";
}

} // namespace

GTPolytope::GTPolytope(Spectrum lambda) : lambda_(std::move(lambda)) {
    const int n = lambda_.size();
    const int N = n * (n - 1) / 2;
    const auto& lam = lambda_.values();
    for (int j = n - 1; j >= 1; --j) {
        for (int k = 1; k <= j; ++k) {
            // A_{j,k}: x^{(j)}_k <= x^{(j+1)}_k
            Inequality a{{'A', j, k}, std::vector<int>(N, 0), Rational(0)};
            a.normal[pattern_coordinate_index(n, j, k)] = 1;
            if (j + 1 < n)
                a.normal[pattern_coordinate_index(n, j + 1, k)] = -1;
            else
                a.rhs = lam[k - 1];
            ineqs_.push_back(std::move(a));
            // B_{j,k}: x^{(j+1)}_{k+1} <= x^{(j)}_k
            Inequality b{{'B', j, k}, std::vector<int>(N, 0), Rational(0)};
            b.normal[pattern_coordinate_index(n, j, k)] = -1;
            if (j + 1 < n)
                b.normal[pattern_coordinate_index(n, j + 1, k + 1)] = 1;
            else
                b.rhs = -lam[k];
            ineqs_.push_back(std::move(b));
        }
    }
}

bool GTPolytope::contains(const std::vector<Rational>& x, const Rational& tol) const {
    if (x.size() != static_cast<size_t>(dimension()))
        throw std::invalid_argument("point has wrong dimension");
    for (const auto& ineq : ineqs_) {
        Rational lhs(0);
        for (size_t i = 0; i < x.size(); ++i)
            if (ineq.normal[i] != 0) lhs += ineq.normal[i] * x[i];
        if (lhs > ineq.rhs + tol) return false;
    }
    return true;
}

bool GTPolytope::contains(const std::vector<double>& x, double tol) const {
    if (x.size() != static_cast<size_t>(dimension()))
        throw std::invalid_argument("point has wrong dimension");
    for (const auto& ineq : ineqs_) {
        double lhs = 0.0;
        for (size_t i = 0; i < x.size(); ++i)
            if (ineq.normal[i] != 0) lhs += ineq.normal[i] * x[i];
        if (lhs > to_double(ineq.rhs) + tol) return false;
    }
    return true;
}

namespace {

// Tightness of A_{j,k} and B_{j,k} at an exact point, via the pattern values.
struct Tightness {
    bool a;
    bool b;
};

Tightness tightness_at(const GTPolytope& p, const std::vector<Rational>& x, int j, int k) {
    const int n = p.n();
    const auto& lam = p.lambda().values();
    const Rational& xjk = x[pattern_coordinate_index(n, j, k)];
    Rational upper = (j + 1 < n) ? x[pattern_coordinate_index(n, j + 1, k)] : lam[k - 1];
    Rational lower = (j + 1 < n) ? x[pattern_coordinate_index(n, j + 1, k + 1)] : lam[k];
    return {xjk == upper, xjk == lower};
}

} // namespace

PointClass classify_point(const GTPolytope& p, const std::vector<Rational>& x) {
    if (!p.contains(x, Rational(0)))
        throw std::invalid_argument("point is outside the polytope");
    PointClass out;
    const int n = p.n();
    for (int j = n - 1; j >= 1; --j)
        for (int k = 1; k <= j; ++k) {
            auto t = tightness_at(p, x, j, k);
            if (!t.a && !t.b) out.free_positions.push_back({j, k});
        }
    if (out.free_positions.empty())
        out.kind = PointKind::vertex;
    else if (out.free_positions.size() == 1)
        out.kind = PointKind::edge_interior;
    else
        out.kind = PointKind::other;
    return out;
}

VertexCertificate vertex_certificate(const GTPolytope& p, const std::vector<Rational>& x) {
    auto cls = classify_point(p, x);
    if (cls.kind != PointKind::vertex)
        throw std::invalid_argument("certificate requires a vertex-classified point");
    const int n = p.n();
    VertexCertificate cert;
    cert.normal.assign(p.dimension(), 0);
    cert.rhs = 0;
    for (int j = n - 1; j >= 1; --j) {
        for (int k = 1; k <= j; ++k) {
            auto t = tightness_at(p, x, j, k);
            const char kind = t.b ? 'B' : 'A';
            cert.chosen.push_back({kind, j, k});
            // accumulate the chosen row of the H-representation
            for (const auto& ineq : p.inequalities()) {
                if (ineq.label.kind != kind || ineq.label.j != j || ineq.label.k != k) continue;
                for (size_t i = 0; i < cert.normal.size(); ++i) cert.normal[i] += ineq.normal[i];
                cert.rhs += ineq.rhs;
                break;
            }
        }
    }
    return cert;
}

std::vector<std::vector<Rational>> enumerate_fixed_points(const Spectrum& lambda) {
    std::vector<Rational> arr = lambda.values();
    std::sort(arr.begin(), arr.end());
    std::vector<std::vector<Rational>> out;
    do {
        out.push_back(arr);
    } while (std::next_permutation(arr.begin(), arr.end()));
    return out;
}

bool is_good_vertex_arrangement(const Spectrum& lambda, const std::vector<Rational>& f) {
    std::vector<Rational> sorted = f;
    std::sort(sorted.begin(), sorted.end(), std::greater<Rational>());
    if (sorted != lambda.values()) return false;
    GTPattern pattern = gt_of_diagonal(f);
    for (int j = 1; j < lambda.size(); ++j)
        for (int k = 1; k < j; ++k)
            if (pattern.value(j, k) == pattern.value(j, k + 1) && !wall_is_special(lambda, j, k))
                return false;
    return true;
}

GoodVertex good_vertex(const Spectrum& lambda) {
    if (lambda.repeated_value_count() >= 2)
        throw UnsupportedSpectrumError("spectrum has two or more repeated eigenvalues");
    std::vector<Rational> diag = lambda.distinct_values();
    for (size_t i = 0; i < lambda.multiplicities().size(); ++i)
        for (int c = 1; c < lambda.multiplicities()[i]; ++c) diag.push_back(lambda.distinct_values()[i]);
    GTPattern pattern = gt_of_diagonal(diag);
    return GoodVertex{std::move(diag), std::move(pattern)};
}

std::vector<EdgeDirection> edge_directions_at_good_vertex(const std::vector<Rational>& f,
                                                          const OrbitSpec& spec) {
    const int n = spec.lambda.size();
    if (static_cast<int>(f.size()) != n || !is_good_vertex_arrangement(spec.lambda, f))
        throw std::invalid_argument("arrangement is not a good vertex");
    const int N = spec.N;
    GTPattern pattern = gt_of_diagonal(f);

    std::vector<EdgeDirection> out;
    for (int p = 1; p <= n; ++p) {
        for (int q = p + 1; q <= n; ++q) {
            if (f[p - 1] == f[q - 1]) continue;
            const bool decreasing = f[p - 1] > f[q - 1];
            EdgeDirection dir{p, q, std::vector<int>(N, 0)};
            for (int j = p; j <= q - 1; ++j) {
                const auto& row = pattern.row(j);
                int s = -1;
                if (decreasing) {
                    for (int k = static_cast<int>(row.size()); k >= 1; --k)
                        if (row[k - 1] == f[p - 1]) {
                            s = k;
                            break;
                        }
                } else {
                    for (int k = 1; k <= static_cast<int>(row.size()); ++k)
                        if (row[k - 1] == f[p - 1]) {
                            s = k;
                            break;
                        }
                }
                dir.delta[pattern_coordinate_index(n, j, s)] = decreasing ? -1 : +1;
            }
            out.push_back(std::move(dir));
        }
    }
    return out;
}

std::optional<Rational> ray_shoot(const GTPolytope& p, const std::vector<Rational>& base,
                                  const std::vector<int>& delta) {
    if (delta.size() != base.size()) throw std::invalid_argument("direction has wrong dimension");
    bool nonzero = false;
    for (int d : delta) nonzero = nonzero || d != 0;
    if (!nonzero) throw std::invalid_argument("direction must be nonzero");
    if (!p.contains(base, Rational(0))) throw std::invalid_argument("ray base is outside the polytope");

    std::optional<Rational> c;
    for (const auto& ineq : p.inequalities()) {
        long step = 0;
        Rational level(0);
        for (size_t i = 0; i < base.size(); ++i) {
            if (ineq.normal[i] == 0) continue;
            step += static_cast<long>(ineq.normal[i]) * delta[i];
            level += ineq.normal[i] * base[i];
        }
        if (step <= 0) continue;
        Rational bound = (ineq.rhs - level) / step;
        if (!c || bound < *c) c = bound;
    }
    return c;
}

EmbeddingReport gromov_lower_bound(const Spectrum& lambda) {
    if (lambda.repeated_value_count() >= 2)
        throw UnsupportedSpectrumError("spectrum has two or more repeated eigenvalues");
    OrbitSpec spec = orbit_spec(lambda);
    GoodVertex gv = good_vertex(lambda);
    GTPolytope poly(lambda);
    std::vector<Rational> base = gv.pattern.coordinates();

    std::vector<EdgeRay> edges;
    std::optional<Rational> r;
    for (auto& dir : edge_directions_at_good_vertex(gv.diagonal, spec)) {
        auto c = ray_shoot(poly, base, dir.delta);
        if (!c) throw std::logic_error("edge ray is unbounded on a compact polytope");
        std::vector<Rational> endpoint = base;
        for (size_t i = 0; i < endpoint.size(); ++i)
            if (dir.delta[i] != 0) endpoint[i] += *c * dir.delta[i];
        if (!r || *c < *r) r = *c;
        edges.push_back(EdgeRay{dir.p, dir.q, std::move(dir.delta), *c, std::move(endpoint)});
    }

    Rational bound = r.value_or(Rational(0)); // D == 0: the orbit is a point
    Rational gap = lambda.min_gap();
    if (bound != gap)
        throw std::logic_error("edge-ray minimum " + to_string(bound) +
                               " does not equal the minimal eigenvalue gap " + to_string(gap));
    return EmbeddingReport{lambda,          spec.N, spec.D, spec.orbit_dimension,
                           std::move(gv),   std::move(edges), bound, gap};
}

namespace {

int rational_rank(std::vector<std::vector<Rational>> rows) {
    int rank = 0;
    if (rows.empty()) return 0;
    const size_t cols = rows[0].size();
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows.size(); ++col) {
        size_t pivot = row;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[row], rows[pivot]);
        for (size_t r = row + 1; r < rows.size(); ++r) {
            if (rows[r][col] == 0) continue;
            Rational factor = rows[r][col] / rows[row][col];
            for (size_t c = col; c < cols; ++c) rows[r][c] -= factor * rows[row][c];
        }
        ++row;
        ++rank;
    }
    return rank;
}

} // namespace

int affine_dimension(const GTPolytope& p) {
    const int N = p.dimension();
    if (N == 0) return 0;
    OrbitSpec spec = orbit_spec(p.lambda());
    // A_{j,k} and B_{j,k} are identically tight exactly when (j,k) is forced.
    std::vector<std::vector<Rational>> rows;
    for (const auto& ineq : p.inequalities()) {
        if (!spec.is_forced(ineq.label.j, ineq.label.k)) continue;
        std::vector<Rational> row(N);
        for (int i = 0; i < N; ++i) row[i] = ineq.normal[i];
        rows.push_back(std::move(row));
    }
    return N - rational_rank(std::move(rows));
}

bool wall_is_special(const Spectrum& lambda, int j, int k) {
    const int n = lambda.size();
    if (j < 1 || j > n - 1 || k < 1 || k > j - 1)
        throw std::invalid_argument("wall index " + position_str(j, k) + " out of range");
    OrbitSpec spec = orbit_spec(lambda);
    auto a = spec.forced_constants.find({j, k});
    auto b = spec.forced_constants.find({j, k + 1});
    return a != spec.forced_constants.end() && b != spec.forced_constants.end() &&
           a->second == b->second;
}

} // namespace gtorbit
