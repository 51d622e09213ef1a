#include "gtorbit/skeleton.hpp"

#include <algorithm>
#include <cmath>

namespace gtorbit {

SkeletonGraph skeleton_graph(const Spectrum& lambda) {
    SkeletonGraph g;
    g.vertices = enumerate_fixed_points(lambda);
    const int n = lambda.size();

    auto index_of = [&](const std::vector<Rational>& arr) {
        auto it = std::lower_bound(g.vertices.begin(), g.vertices.end(), arr);
        return static_cast<int>(it - g.vertices.begin());
    };

    for (int u = 0; u < static_cast<int>(g.vertices.size()); ++u) {
        const auto& f = g.vertices[u];
        for (int p = 1; p <= n; ++p) {
            for (int q = p + 1; q <= n; ++q) {
                if (f[p - 1] == f[q - 1]) continue;
                std::vector<Rational> swapped = f;
                std::swap(swapped[p - 1], swapped[q - 1]);
                int v = index_of(swapped);
                if (v < u) continue; // recorded from the other endpoint
                std::vector<int> weight(n, 0);
                weight[p - 1] = -1;
                weight[q - 1] = 1;
                Rational len = f[p - 1] - f[q - 1];
                if (len < 0) len = -len;
                g.edges.push_back({u, v, p, q, std::move(weight), len});
            }
        }
    }
    return g;
}

SpherePoint sphere_point(const std::vector<Rational>& f, int p, int q, const Rational& z_re,
                         const Rational& z_im) {
    const int n = static_cast<int>(f.size());
    if (p < 1 || q > n || p >= q) throw std::invalid_argument("need 1 <= p < q <= n");
    const Rational vi = f[p - 1];
    const Rational vk = f[q - 1];
    if (vi == vk) throw std::invalid_argument("degenerate pair: equal diagonal entries");

    const Rational z2 = z_re * z_re + z_im * z_im;
    const Rational den = 1 + z2;
    SpherePoint s;
    s.arrangement = f;
    s.p = p;
    s.q = q;
    s.at_infinity = false;
    s.z_re = z_re;
    s.z_im = z_im;
    s.block_pp = (vi + z2 * vk) / den;
    s.block_qq = (vk + z2 * vi) / den;
    s.block_pq_re = z_re * (vi - vk) / den;
    s.block_pq_im = -z_im * (vi - vk) / den; // conj(z) on the upper entry
    s.rho = s.block_pp;
    return s;
}

SpherePoint sphere_point_at_infinity(const std::vector<Rational>& f, int p, int q) {
    const int n = static_cast<int>(f.size());
    if (p < 1 || q > n || p >= q) throw std::invalid_argument("need 1 <= p < q <= n");
    const Rational vi = f[p - 1];
    const Rational vk = f[q - 1];
    if (vi == vk) throw std::invalid_argument("degenerate pair: equal diagonal entries");
    SpherePoint s;
    s.arrangement = f;
    s.p = p;
    s.q = q;
    s.at_infinity = true;
    s.z_re = 0;
    s.z_im = 0;
    s.block_pp = vk;
    s.block_qq = vi;
    s.block_pq_re = 0;
    s.block_pq_im = 0;
    s.rho = vk;
    return s;
}

HermitianMatrix SpherePoint::matrix() const {
    const int n = static_cast<int>(arrangement.size());
    std::vector<std::complex<double>> entries(static_cast<size_t>(n) * n, {0.0, 0.0});
    for (int i = 0; i < n; ++i)
        entries[static_cast<size_t>(i) * n + i] = {to_double(arrangement[i]), 0.0};
    entries[static_cast<size_t>(p - 1) * n + (p - 1)] = {to_double(block_pp), 0.0};
    entries[static_cast<size_t>(q - 1) * n + (q - 1)] = {to_double(block_qq), 0.0};
    entries[static_cast<size_t>(p - 1) * n + (q - 1)] = {to_double(block_pq_re), to_double(block_pq_im)};
    entries[static_cast<size_t>(q - 1) * n + (p - 1)] = {to_double(block_pq_re), -to_double(block_pq_im)};
    return HermitianMatrix(n, std::move(entries));
}

std::vector<EdgeSample> trace_edge(const Spectrum& lambda, const std::vector<Rational>& f, int p,
                                   int q, int samples, double tol) {
    if (samples < 1) throw std::invalid_argument("need at least one sample");
    if (!is_good_vertex_arrangement(lambda, f))
        throw std::invalid_argument("arrangement is not a good vertex");
    const Rational vi = f[p - 1];
    const Rational vk = f[q - 1];
    if (vi == vk) throw std::invalid_argument("degenerate pair: equal diagonal entries");

    // Adjacent distinct value on the v_k side of v_i.
    const auto& distinct = lambda.distinct_values();
    Rational target;
    if (vk < vi) {
        for (const auto& v : distinct)
            if (v < vi) {
                target = v;
                break;
            }
    } else {
        for (auto it = distinct.rbegin(); it != distinct.rend(); ++it)
            if (*it > vi) {
                target = *it;
                break;
            }
    }

    std::vector<EdgeSample> out;
    out.reserve(samples);
    for (int t = 0; t < samples; ++t) {
        Rational rho = samples == 1 ? vi : vi + (target - vi) * t / (samples - 1);
        HermitianMatrix m = [&] {
            if (rho == vk) return sphere_point_at_infinity(f, p, q).matrix();
            if (rho == vi) return sphere_point(f, p, q, Rational(0), Rational(0)).matrix();
            const Rational z2 = (vi - rho) / (rho - vk);
            // z real with |z|^2 = z2; only the double matrix is needed here.
            SpherePoint s = sphere_point(f, p, q, Rational(0), Rational(0));
            const double zd = std::sqrt(to_double(z2));
            const double den = 1.0 + to_double(z2);
            const double vid = to_double(vi), vkd = to_double(vk);
            const int n = lambda.size();
            std::vector<std::complex<double>> entries = s.matrix().entries();
            entries[static_cast<size_t>(p - 1) * n + (p - 1)] = {(vid + to_double(z2) * vkd) / den, 0.0};
            entries[static_cast<size_t>(q - 1) * n + (q - 1)] = {(vkd + to_double(z2) * vid) / den, 0.0};
            entries[static_cast<size_t>(p - 1) * n + (q - 1)] = {zd * (vid - vkd) / den, 0.0};
            entries[static_cast<size_t>(q - 1) * n + (p - 1)] = {zd * (vid - vkd) / den, 0.0};
            return HermitianMatrix(n, std::move(entries));
        }();
        out.push_back({rho, gt_map(m, tol)});
    }
    return out;
}

} // namespace gtorbit
