#pragma once

#include "gtorbit/gtsystem.hpp"

namespace gtorbit {

/// Border data of an arrow (bordered diagonal) matrix with diagonal b,
/// last row/column couplings |x_i|^2 and corner x_{k+1}, chosen so that the
/// matrix has a prescribed interlacing spectrum.
struct ArrowSolution {
    std::vector<Rational> diagonal;       // b, sorted nonincreasing
    std::vector<Rational> squared_moduli; // |x_i|^2 >= 0
    Rational corner;                      // x_{k+1} = sum(a) - sum(b)
};

/// Solves the inverse eigenvalue problem for the arrow matrix: given
/// a_1 >= b_1 >= a_2 >= ... >= a_k >= b_k >= a_{k+1}, returns couplings with
/// |x_i|^2 = -prod_m(a_m - b_i) / prod_{j != i}(b_j - b_i) for distinct b_i;
/// repeated b values are deflated with a zero coupling first.
ArrowSolution solve_arrow(const std::vector<Rational>& b, const std::vector<Rational>& a);

/// Difference of the two sides of the characteristic-polynomial identity
///   prod_m(t - a_m) = (t - corner) prod_i(t - b_i) - sum_i |x_i|^2 prod_{j != i}(t - b_j)
/// at a sample point t. Zero at k+1 distinct points proves the identity.
Rational arrow_charpoly_residual(const ArrowSolution& sol, const std::vector<Rational>& a,
                                 const Rational& t);

/// Builds a Hermitian (real symmetric) matrix whose Gelfand-Tsetlin pattern is
/// P, by the row-by-row arrow construction: each new row solves the arrow
/// problem for (row j, row j+1) and is rotated into place by eigenvectors of
/// the current block, obtained by inverse iteration at the known eigenvalues.
HermitianMatrix reconstruct_matrix(const GTPattern& p, double tol);

} // namespace gtorbit
