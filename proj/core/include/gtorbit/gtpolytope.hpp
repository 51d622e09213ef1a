#pragma once

#include "gtorbit/gtsystem.hpp"

#include <optional>
#include <vector>

namespace gtorbit {

/// Thrown for spectra with two or more repeated eigenvalues, which the
/// good-vertex and Gromov-bound machinery does not cover.
class UnsupportedSpectrumError : public std::runtime_error {
public:
    explicit UnsupportedSpectrumError(const std::string& what) : std::runtime_error(what) {}
};

struct IneqLabel {
    char kind; // 'A' or 'B'
    int j;
    int k;
};

/// One interlacing inequality in the form normal . x <= rhs; normals have
/// entries in {-1,0,+1} with at most two nonzeros.
struct Inequality {
    IneqLabel label;
    std::vector<int> normal;
    Rational rhs;
};

/// Exact H-representation of the Gelfand-Tsetlin polytope: the 2N
/// inequalities A_{j,k}, B_{j,k} over the shared coordinate order.
class GTPolytope {
public:
    explicit GTPolytope(Spectrum lambda);

    const Spectrum& lambda() const { return lambda_; }
    int n() const { return lambda_.size(); }
    int dimension() const { return n() * (n() - 1) / 2; } // ambient N
    const std::vector<Inequality>& inequalities() const { return ineqs_; }

    bool contains(const std::vector<Rational>& x, const Rational& tol) const;
    bool contains(const std::vector<double>& x, double tol) const;

private:
    Spectrum lambda_;
    std::vector<Inequality> ineqs_;
};

inline GTPolytope hrep(const Spectrum& lambda) { return GTPolytope(lambda); }

enum class PointKind { vertex, edge_interior, other };

struct PointClass {
    PointKind kind;
    std::vector<std::pair<int, int>> free_positions; // (j,k) with both A and B strict
};

/// Classification by the sufficient vertex/edge conditions: a point with no
/// free position is a vertex, one with exactly one free position lies in the
/// interior of an edge. kind == other makes no claim.
PointClass classify_point(const GTPolytope& p, const std::vector<Rational>& x);

/// Certificate built from one tight inequality per position (B preferred on
/// ties), summed into a single valid inequality normal . x <= rhs that is
/// tight exactly at the given vertex.
struct VertexCertificate {
    std::vector<IneqLabel> chosen;
    std::vector<int> normal;
    Rational rhs;
};

VertexCertificate vertex_certificate(const GTPolytope& p, const std::vector<Rational>& x);

/// All distinct diagonal arrangements of lambda, lexicographically ascending.
std::vector<std::vector<Rational>> enumerate_fixed_points(const Spectrum& lambda);

/// True iff every equality between adjacent row entries of gt_of_diagonal(f)
/// holds identically on the whole polytope.
bool is_good_vertex_arrangement(const Spectrum& lambda, const std::vector<Rational>& f);

struct GoodVertex {
    std::vector<Rational> diagonal;
    GTPattern pattern;
};

/// Canonical good vertex: distinct values descending, then the extra copies
/// of the repeated value. Requires at most one repeated eigenvalue.
GoodVertex good_vertex(const Spectrum& lambda);

struct EdgeDirection {
    int p;
    int q;                  // 1 <= p < q <= n, F_pp != F_qq
    std::vector<int> delta; // primitive direction in Z^N
};

/// The D combinatorial edge directions at a good vertex: pair (p,q) moves one
/// entry per row j in [p, q-1], at the last occurrence of F_pp when the value
/// decreases and the first occurrence when it increases.
std::vector<EdgeDirection> edge_directions_at_good_vertex(const std::vector<Rational>& f,
                                                          const OrbitSpec& spec);

/// Largest c with base + t*delta inside the polytope for all 0 <= t <= c.
/// nullopt means the ray is unbounded (cannot happen here: the polytope is compact).
std::optional<Rational> ray_shoot(const GTPolytope& p, const std::vector<Rational>& base,
                                  const std::vector<int>& delta);

struct EdgeRay {
    int p;
    int q;
    std::vector<int> delta;
    Rational length;
    std::vector<Rational> endpoint;
};

struct EmbeddingReport {
    Spectrum lambda;
    int N;
    int D;
    int orbit_dimension;
    GoodVertex good_vertex;
    std::vector<EdgeRay> edges;
    Rational gromov_lower_bound;
    Rational min_gap;
};

/// Lower bound for the Gromov width: the minimum exact ray length over the D
/// edges at the canonical good vertex. A ball of that capacity embeds; the
/// value must equal the minimal gap between distinct eigenvalues, and a
/// mismatch aborts.
EmbeddingReport gromov_lower_bound(const Spectrum& lambda);

/// Dimension of the affine hull, exactly: N minus the rank of the system of
/// identically-tight inequalities. Equals D.
int affine_dimension(const GTPolytope& p);

/// True iff the wall x^{(j)}_k = x^{(j)}_{k+1} holds identically on the
/// polytope, i.e. both positions are forced constants with equal value.
bool wall_is_special(const Spectrum& lambda, int j, int k);

} // namespace gtorbit
