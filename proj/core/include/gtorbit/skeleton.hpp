#pragma once

#include "gtorbit/gtpolytope.hpp"

namespace gtorbit {

struct SkeletonEdge {
    int u;
    int v;                   // vertex indices, u < v
    int p;
    int q;                   // swapped positions, 1-based
    std::vector<int> weight; // -e_p + e_q
    Rational length;         // |F_pp - F_qq|
};

/// Moment-image 1-skeleton: vertices are the distinct diagonal arrangements
/// of lambda (lexicographic), edges join arrangements differing by one
/// transposition of distinct entries. Every vertex has degree D.
struct SkeletonGraph {
    std::vector<std::vector<Rational>> vertices;
    std::vector<SkeletonEdge> edges;
};

SkeletonGraph skeleton_graph(const Spectrum& lambda);

/// One point of the sphere family joining diag(F) to the swapped arrangement:
/// the conjugated matrix differs from diag(F) only in the four (p,q) entries,
/// computed exactly over the denominator 1+|z|^2 so that the 2x2 block keeps
/// trace F_pp + F_qq and determinant F_pp * F_qq.
struct SpherePoint {
    std::vector<Rational> arrangement;
    int p;
    int q;
    bool at_infinity;
    Rational z_re, z_im;             // meaningful when finite
    Rational block_pp, block_qq;     // modified diagonal entries
    Rational block_pq_re, block_pq_im; // entry (p,q); (q,p) is its conjugate
    Rational rho;                    // block_pp = (v_i + |z|^2 v_k) / (1 + |z|^2)

    HermitianMatrix matrix() const;
};

SpherePoint sphere_point(const std::vector<Rational>& f, int p, int q, const Rational& z_re,
                         const Rational& z_im);

/// The |z| -> infinity limit, represented explicitly as the swapped diagonal.
SpherePoint sphere_point_at_infinity(const std::vector<Rational>& f, int p, int q);

struct EdgeSample {
    Rational rho;
    NumericGTPattern pattern;
};

/// Samples the sphere family uniformly in rho from F_pp toward the adjacent
/// distinct value and returns the pattern of each conjugated matrix. Along
/// the sweep the pattern is affine in rho: V_F + |F_pp - rho| * delta_(p,q).
std::vector<EdgeSample> trace_edge(const Spectrum& lambda, const std::vector<Rational>& f, int p,
                                   int q, int samples, double tol);

} // namespace gtorbit
