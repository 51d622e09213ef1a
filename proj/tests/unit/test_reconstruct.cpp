#include <doctest.h>

#include <gtorbit/gtpolytope.hpp>
#include <gtorbit/reconstruct.hpp>
#include <gtorbit/sampling.hpp>

#include <cmath>

using namespace gtorbit;

namespace {

std::vector<Rational> rationals(std::initializer_list<long> v) {
    return std::vector<Rational>(v.begin(), v.end());
}

bool charpoly_identity_holds(const ArrowSolution& sol, const std::vector<Rational>& a) {
    // two monic polynomials of degree k+1 agreeing at k+1 points are equal
    for (size_t i = 0; i <= sol.diagonal.size(); ++i)
        if (arrow_charpoly_residual(sol, a, Rational(static_cast<long>(i))) != 0) return false;
    return true;
}

double roundtrip_error(const GTPattern& p, double tol) {
    HermitianMatrix m = reconstruct_matrix(p, tol);
    NumericGTPattern back = gt_map(m, tol);
    double worst = 0.0;
    for (int j = 1; j <= p.size(); ++j)
        for (int k = 1; k <= j; ++k)
            worst = std::max(worst, std::abs(back.value(j, k) - to_double(p.value(j, k))));
    return worst;
}

} // namespace

TEST_CASE("arrow solution for the rank-one 2x2 case") {
    auto sol = solve_arrow(rationals({1}), rationals({2, 0}));
    CHECK(sol.squared_moduli == rationals({1}));
    CHECK(sol.corner == 1);
    CHECK(charpoly_identity_holds(sol, rationals({2, 0})));
}

TEST_CASE("ties force zero couplings") {
    auto sol = solve_arrow(rationals({5, 3}), rationals({5, 4, 3}));
    CHECK(sol.squared_moduli == rationals({0, 0}));
    CHECK(sol.corner == 4);
    CHECK(charpoly_identity_holds(sol, rationals({5, 4, 3})));
}

TEST_CASE("repeated diagonal values deflate") {
    auto sol = solve_arrow(rationals({4, 4}), rationals({5, 4, 3}));
    CHECK(sol.squared_moduli == rationals({0, 1}));
    CHECK(sol.corner == 4);
    CHECK(charpoly_identity_holds(sol, rationals({5, 4, 3})));

    auto triple = solve_arrow(rationals({2, 2, 2}), rationals({3, 2, 2, 1}));
    CHECK(charpoly_identity_holds(triple, rationals({3, 2, 2, 1})));
    Rational coupling_sum(0);
    for (const auto& m : triple.squared_moduli) coupling_sum += m;
    // trace of A^2 fixes sum(b^2) + 2 sum|x|^2 + corner^2 = sum(a^2)
    Rational corner = triple.corner;
    CHECK(12 + 2 * coupling_sum + corner * corner == 18);
}

TEST_CASE("fully tight interlacing gives the diagonal matrix") {
    auto sol = solve_arrow(rationals({3, 2}), rationals({3, 2, 0}));
    CHECK(sol.squared_moduli == rationals({0, 0}));
    CHECK(sol.corner == 0);
}

TEST_CASE("arrow preconditions") {
    CHECK_THROWS_AS(solve_arrow(rationals({5}), rationals({3, 1})), std::invalid_argument);
    CHECK_THROWS_AS(solve_arrow(rationals({1, 2}), rationals({3, 2, 1})), std::invalid_argument);
    CHECK_THROWS_AS(solve_arrow(rationals({2}), rationals({3, 2, 1})), std::invalid_argument);
}

TEST_CASE("couplings are nonnegative and exact on random interlacing data") {
    std::mt19937_64 rng(10);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 5);
        Spectrum lambda = random_spectrum(rng, n);
        GTPattern p = sample_interlacing_pattern(lambda, rng, 8);
        auto sol = solve_arrow(p.row(n - 1), p.row(n));
        for (const auto& m : sol.squared_moduli) CHECK(m >= 0);
        CHECK(charpoly_identity_holds(sol, p.row(n)));
    }
}

TEST_CASE("reconstructing diagonal patterns") {
    auto p = gt_of_diagonal(rationals({5, 3, 1}));
    CHECK(roundtrip_error(p, 1e-11) <= 1e-8);
}

TEST_CASE("reconstructing the worked 3x3 point") {
    GTPattern p({{Rational(5)}, {Rational(5), Rational(4)}}, rationals({5, 5, 4}));
    HermitianMatrix m = reconstruct_matrix(p, 1e-11);
    auto eig = eigenvalues_desc(m, 1e-11);
    CHECK(eig[0] == doctest::Approx(5).epsilon(1e-9));
    CHECK(eig[1] == doctest::Approx(5).epsilon(1e-9));
    CHECK(eig[2] == doctest::Approx(4).epsilon(1e-9));
    CHECK(roundtrip_error(p, 1e-11) <= 1e-8);
}

TEST_CASE("roundtrip on sampled patterns") {
    std::mt19937_64 rng(11);
    Spectrum lambda({Rational(3), Rational(1), Rational(0)});
    for (int trial = 0; trial < 100; ++trial) {
        GTPattern p = sample_interlacing_pattern(lambda, rng);
        CHECK(roundtrip_error(p, 1e-11) <= 1e-8);
    }
}

TEST_CASE("roundtrip across sizes and repeated values") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 5);
        Spectrum lambda = random_spectrum(rng, n);
        GTPattern p = sample_interlacing_pattern(lambda, rng);
        CHECK(roundtrip_error(p, 1e-11) <= 1e-8);

        HermitianMatrix m = reconstruct_matrix(p, 1e-11);
        auto eig = eigenvalues_desc(m, 1e-11);
        for (int i = 0; i < n; ++i)
            CHECK(std::abs(eig[i] - to_double(lambda.values()[i])) <= 1e-8);
    }
}

TEST_CASE("interlacing violations are rejected") {
    GTPattern bad({{Rational(6)}}, rationals({5, 3}));
    CHECK_THROWS_AS(reconstruct_matrix(bad, 1e-11), std::invalid_argument);
    CHECK_THROWS_AS(reconstruct_matrix(gt_of_diagonal(rationals({1, 2})), 0.0),
                    std::invalid_argument);
}
