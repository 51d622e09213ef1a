#include "verify_suites.hpp"

#include <gtorbit/gtpolytope.hpp>
#include <gtorbit/reconstruct.hpp>
#include <gtorbit/sampling.hpp>
#include <gtorbit/skeleton.hpp>

#include <cmath>
#include <functional>
#include <sstream>

namespace gtorbit {

namespace {

struct SuiteRunner {
    std::ostream& out;
    int failures = 0;

    void run(const std::string& name, const std::function<bool(std::string&)>& body) {
        std::string detail;
        bool ok = false;
        try {
            ok = body(detail);
        } catch (const std::exception& e) {
            detail = e.what();
        }
        out << (ok ? "PASS " : "FAIL ") << name;
        if (!detail.empty()) out << "  (" << detail << ")";
        out << "\n";
        if (!ok) ++failures;
    }

    void skip(const std::string& name, const std::string& why) {
        out << "SKIP " << name << "  (" << why << ")\n";
    }
};

double pattern_distance(const NumericGTPattern& a, const GTPattern& b) {
    double worst = 0.0;
    for (int j = 1; j <= a.size(); ++j)
        for (int k = 1; k <= j; ++k)
            worst = std::max(worst, std::abs(a.value(j, k) - to_double(b.value(j, k))));
    return worst;
}

} // namespace

int run_verify_suites(const Spectrum& lambda, int trials, uint64_t seed, double tol,
                      std::ostream& out) {
    SuiteRunner suite{out};
    const int n = lambda.size();
    std::vector<double> lambda_d;
    for (const auto& v : lambda.values()) lambda_d.push_back(to_double(v));

    suite.run("hermitian/trace-vs-eigsum", [&](std::string& detail) {
        std::mt19937_64 rng(seed);
        double worst = 0.0;
        for (int t = 0; t < trials; ++t) {
            const int m = 2 + static_cast<int>(rng() % 7);
            HermitianMatrix a = random_hermitian(rng, m);
            auto eig = eigenvalues_desc(a, tol);
            double sum = 0.0;
            for (size_t i = 0; i < eig.size(); ++i) {
                sum += eig[i];
                if (i > 0 && eig[i - 1] < eig[i]) return false;
            }
            worst = std::max(worst, std::abs(sum - a.trace()) / m);
        }
        std::ostringstream s;
        s << "max |trace - sum|/n = " << worst;
        detail = s.str();
        return worst <= 1e-9;
    });

    suite.run("hermitian/unitary-invariance", [&](std::string& detail) {
        std::mt19937_64 rng(seed + 1);
        for (int t = 0; t < trials; ++t) {
            const int m = 2 + static_cast<int>(rng() % 5);
            HermitianMatrix a = random_hermitian(rng, m);
            auto ea = eigenvalues_desc(a, tol);
            auto eb = eigenvalues_desc(random_unitary_conjugate(rng, a), tol);
            const double bound = 2 * tol * (1.0 + a.frobenius_norm());
            for (int i = 0; i < m; ++i)
                if (std::abs(ea[i] - eb[i]) > bound) return false;
        }
        detail = std::to_string(trials) + " conjugations";
        return true;
    });

    suite.run("gtsystem/pr-projection", [&](std::string& detail) {
        std::mt19937_64 rng(seed + 2);
        double worst = 0.0;
        for (int t = 0; t < trials; ++t) {
            const int m = 2 + static_cast<int>(rng() % 5);
            HermitianMatrix a = random_hermitian(rng, m);
            auto diag = project_to_diagonal(gt_map(a, tol));
            for (int i = 0; i < m; ++i) worst = std::max(worst, std::abs(diag[i] - a(i, i).real()));
        }
        std::ostringstream s;
        s << "max |pr(pattern) - diag| = " << worst;
        detail = s.str();
        return worst <= 1e-8;
    });

    suite.run("gtsystem/interlacing-minimax", [&](std::string&) {
        std::mt19937_64 rng(seed + 3);
        for (int t = 0; t < trials; ++t) {
            const int m = 2 + static_cast<int>(rng() % 5);
            if (!check_interlacing(gt_map(random_hermitian(rng, m), tol), 1e-9).empty())
                return false;
        }
        return true;
    });

    suite.run("gtsystem/diagonal-exactness", [&](std::string&) {
        std::mt19937_64 rng(seed + 4);
        for (int t = 0; t < trials; ++t) {
            auto arr = random_arrangement(rng, lambda);
            std::vector<double> d;
            for (const auto& v : arr) d.push_back(to_double(v));
            if (pattern_distance(gt_map(HermitianMatrix::diagonal(d), tol), gt_of_diagonal(arr)) >
                1e-10)
                return false;
        }
        return true;
    });

    suite.run("gtsystem/dimension-count", [&](std::string& detail) {
        OrbitSpec spec = orbit_spec(lambda);
        detail = "N=" + std::to_string(spec.N) + " D=" + std::to_string(spec.D) +
                 " forced=" + std::to_string(spec.forced_constants.size());
        if (spec.N - static_cast<int>(spec.forced_constants.size()) != spec.D) return false;
        std::mt19937_64 rng(seed + 5);
        for (int t = 0; t < trials; ++t) {
            OrbitSpec s = orbit_spec(random_spectrum(rng, 2 + static_cast<int>(rng() % 5)));
            if (s.N - static_cast<int>(s.forced_constants.size()) != s.D) return false;
        }
        return true;
    });

    suite.run("gtpolytope/orbit-membership", [&](std::string&) {
        std::mt19937_64 rng(seed + 6);
        GTPolytope poly(lambda);
        for (int t = 0; t < trials; ++t) {
            auto point = random_orbit_point(rng, lambda_d);
            if (!poly.contains(gt_map(point, tol).coordinates(), 1e-8)) return false;
        }
        return true;
    });

    const auto fixed_points = enumerate_fixed_points(lambda);
    suite.run("gtpolytope/fixed-points-are-vertices", [&](std::string& detail) {
        GTPolytope poly(lambda);
        detail = std::to_string(fixed_points.size()) + " fixed points";
        for (const auto& f : fixed_points)
            if (classify_point(poly, gt_of_diagonal(f).coordinates()).kind != PointKind::vertex)
                return false;
        return true;
    });

    suite.run("gtpolytope/affine-dimension", [&](std::string& detail) {
        GTPolytope poly(lambda);
        const int dim = affine_dimension(poly);
        detail = "dim = " + std::to_string(dim);
        return dim == orbit_spec(lambda).D;
    });

    const bool supported = lambda.repeated_value_count() <= 1;
    if (!supported) {
        suite.skip("gtpolytope/edge-rays", "two or more repeated eigenvalues");
    } else {
        suite.run("gtpolytope/edge-rays", [&](std::string& detail) {
            EmbeddingReport r = gromov_lower_bound(lambda);
            detail = "D=" + std::to_string(r.D) + " bound=" + to_string(r.gromov_lower_bound);
            if (static_cast<int>(r.edges.size()) != r.D) return false;
            bool attained = r.D == 0;
            for (const auto& e : r.edges) {
                if (e.length <= 0 || e.length < r.min_gap) return false;
                attained = attained || e.length == r.min_gap;
            }
            return attained && r.gromov_lower_bound == lambda.min_gap();
        });
    }

    suite.run("reconstruct/roundtrip", [&](std::string& detail) {
        std::mt19937_64 rng(seed + 7);
        double worst = 0.0;
        for (int t = 0; t < trials; ++t) {
            GTPattern p = sample_interlacing_pattern(lambda, rng);
            for (int j = 1; j < p.size(); ++j) {
                ArrowSolution sol = solve_arrow(p.row(j), p.row(j + 1));
                for (int s = 0; s <= j; ++s)
                    if (arrow_charpoly_residual(sol, p.row(j + 1), Rational(s)) != 0) return false;
            }
            HermitianMatrix m = reconstruct_matrix(p, tol);
            worst = std::max(worst, pattern_distance(gt_map(m, tol), p));
        }
        std::ostringstream s;
        s << "max roundtrip error = " << worst;
        detail = s.str();
        return worst <= 1e-8;
    });

    suite.run("skeleton/sphere-spectrum", [&](std::string&) {
        std::mt19937_64 rng(seed + 8);
        int done = 0;
        while (done < trials) {
            auto f = random_arrangement(rng, lambda);
            if (n < 2) break;
            const int p = 1 + static_cast<int>(rng() % (n - 1));
            const int q = p + 1 + static_cast<int>(rng() % (n - p));
            if (f[p - 1] == f[q - 1]) {
                if (lambda.distinct_values().size() < 2) break;
                continue;
            }
            ++done;
            Rational z_re(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 3));
            Rational z_im(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 3));
            auto s = sphere_point(f, p, q, z_re, z_im);
            if (s.block_pp + s.block_qq != f[p - 1] + f[q - 1]) return false;
            if (s.block_pp * s.block_qq -
                    (s.block_pq_re * s.block_pq_re + s.block_pq_im * s.block_pq_im) !=
                f[p - 1] * f[q - 1])
                return false;
        }
        return true;
    });

    if (!supported || lambda.distinct_values().size() < 2) {
        suite.skip("skeleton/edge-affinity",
                   supported ? "point orbit" : "two or more repeated eigenvalues");
    } else {
        suite.run("skeleton/edge-affinity", [&](std::string&) {
            auto gv = good_vertex(lambda);
            auto dirs = edge_directions_at_good_vertex(gv.diagonal, orbit_spec(lambda));
            auto base = gv.pattern.coordinates();
            for (const auto& dir : dirs) {
                for (const auto& sample :
                     trace_edge(lambda, gv.diagonal, dir.p, dir.q, 4, tol)) {
                    const double t =
                        std::abs(to_double(gv.diagonal[dir.p - 1]) - to_double(sample.rho));
                    auto coords = sample.pattern.coordinates();
                    for (size_t i = 0; i < coords.size(); ++i)
                        if (std::abs(coords[i] - (to_double(base[i]) + t * dir.delta[i])) > 1e-8)
                            return false;
                }
            }
            return true;
        });
    }

    return suite.failures;
}

} // namespace gtorbit
