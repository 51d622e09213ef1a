#include <doctest.h>

#include <gtorbit/hermitian.hpp>
#include <gtorbit/sampling.hpp>

#include <cmath>
#include <complex>

using namespace gtorbit;

namespace {
const std::complex<double> I{0.0, 1.0};
}

TEST_CASE("construction enforces hermiticity") {
    CHECK_THROWS_AS(HermitianMatrix(2, {1.0, 2.0, 3.0, 4.0}), std::invalid_argument);

    // tiny asymmetry is symmetrized away
    HermitianMatrix m(2, {1.0, 1.0 + 1e-14 * I, 1.0, 2.0 + 1e-14 * I});
    CHECK(m(0, 1) == std::conj(m(1, 0)));
    CHECK(m(1, 1).imag() == 0.0);

    CHECK_THROWS_AS(HermitianMatrix(2, {1.0, 1.0 + 0.1 * I, 1.0, 2.0}), std::invalid_argument);
    CHECK_THROWS_AS(HermitianMatrix(2, {1.0, 2.0, 3.0}), std::invalid_argument);
}

TEST_CASE("eigenvalues of small fixed matrices") {
    auto eig = eigenvalues_desc(HermitianMatrix::diagonal({5, 3, 1}), 1e-12);
    CHECK(eig[0] == doctest::Approx(5).epsilon(1e-12));
    CHECK(eig[1] == doctest::Approx(3).epsilon(1e-12));
    CHECK(eig[2] == doctest::Approx(1).epsilon(1e-12));

    eig = eigenvalues_desc(HermitianMatrix(2, {0.0, 1.0, 1.0, 0.0}), 1e-12);
    CHECK(eig[0] == doctest::Approx(1).epsilon(1e-12));
    CHECK(eig[1] == doctest::Approx(-1).epsilon(1e-12));

    eig = eigenvalues_desc(HermitianMatrix(2, {1.0, 1.0, 1.0, 1.0}), 1e-12);
    CHECK(eig[0] == doctest::Approx(2).epsilon(1e-12));
    CHECK(std::abs(eig[1]) < 1e-12);

    CHECK_THROWS_AS(eigenvalues_desc(HermitianMatrix(1), 0.0), std::invalid_argument);
}

TEST_CASE("leading principal submatrix") {
    auto d = HermitianMatrix::diagonal({5, 3, 1});
    auto sub = d.leading_principal_submatrix(2);
    CHECK(sub.size() == 2);
    CHECK(sub(0, 0).real() == 5.0);
    CHECK(sub(1, 1).real() == 3.0);

    auto full = d.leading_principal_submatrix(3);
    CHECK(full.entries() == d.entries());

    HermitianMatrix m(3, {1.0, I, 0.0, -I, 2.0, 0.0, 0.0, 0.0, 7.0});
    auto block = m.leading_principal_submatrix(2);
    CHECK(block(0, 1) == I);
    CHECK(block(1, 0) == -I);

    CHECK_THROWS_AS(d.leading_principal_submatrix(0), std::invalid_argument);
    CHECK_THROWS_AS(d.leading_principal_submatrix(4), std::invalid_argument);
}

TEST_CASE("trace equals eigenvalue sum on random matrices") {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 7);
        HermitianMatrix a = random_hermitian(rng, n);
        auto eig = eigenvalues_desc(a, 1e-11);
        double sum = 0.0;
        for (size_t i = 0; i < eig.size(); ++i) {
            sum += eig[i];
            if (i > 0) CHECK(eig[i - 1] >= eig[i]);
        }
        CHECK(std::abs(sum - a.trace()) <= 1e-9 * n);
    }
}

TEST_CASE("eigenvalues invariant under unitary conjugation") {
    std::mt19937_64 rng(2);
    const double tol = 1e-11;
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 5);
        HermitianMatrix a = random_hermitian(rng, n);
        HermitianMatrix b = random_unitary_conjugate(rng, a);
        auto ea = eigenvalues_desc(a, tol);
        auto eb = eigenvalues_desc(b, tol);
        const double bound = 2 * tol * (1.0 + a.frobenius_norm());
        for (int i = 0; i < n; ++i) CHECK(std::abs(ea[i] - eb[i]) <= bound);
    }
}

TEST_CASE("spectrum bookkeeping") {
    Spectrum s({Rational(5), Rational(4), Rational(4), Rational(4), Rational(3), Rational(1)});
    CHECK(s.distinct_values() == std::vector<Rational>{5, 4, 3, 1});
    CHECK(s.multiplicities() == std::vector<int>{1, 3, 1, 1});
    CHECK(s.repeated_value_count() == 1);
    CHECK(s.min_gap() == 1);

    Spectrum gap({Rational(9, 2), Rational(3)});
    CHECK(gap.min_gap() == Rational(3, 2));
    CHECK(Spectrum({Rational(2), Rational(2)}).min_gap() == 0);

    CHECK_THROWS_AS(Spectrum({Rational(1), Rational(2)}), std::invalid_argument);
    CHECK_THROWS_AS(Spectrum(std::vector<Rational>{}), std::invalid_argument);
}
