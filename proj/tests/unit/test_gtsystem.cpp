#include <doctest.h>

#include <gtorbit/gtsystem.hpp>
#include <gtorbit/sampling.hpp>

#include <cmath>

using namespace gtorbit;

namespace {

std::vector<Rational> rationals(std::initializer_list<long> v) {
    return std::vector<Rational>(v.begin(), v.end());
}

double max_abs_diff(const std::vector<double>& a, const std::vector<Rational>& b) {
    double m = 0.0;
    for (size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - to_double(b[i])));
    return m;
}

} // namespace

TEST_CASE("coordinate order runs from row n-1 down to row 1") {
    CHECK(pattern_coordinate_index(3, 2, 1) == 0);
    CHECK(pattern_coordinate_index(3, 2, 2) == 1);
    CHECK(pattern_coordinate_index(3, 1, 1) == 2);
    CHECK(pattern_coordinate_index(4, 3, 3) == 2);
    CHECK(pattern_coordinate_index(4, 2, 1) == 3);
    CHECK(pattern_coordinate_index(4, 1, 1) == 5);
}

TEST_CASE("gt_map of diagonal matrices gives sorted prefixes") {
    auto p = gt_map(HermitianMatrix::diagonal({1, 5, 3, 4, 4, 4}), 1e-11);
    const std::vector<std::vector<double>> expected = {
        {1}, {5, 1}, {5, 3, 1}, {5, 4, 3, 1}, {5, 4, 4, 3, 1}};
    for (int j = 1; j <= 5; ++j)
        for (int k = 1; k <= j; ++k)
            CHECK(p.value(j, k) == doctest::Approx(expected[j - 1][k - 1]).epsilon(1e-10));
    std::vector<double> top = {5, 4, 4, 4, 3, 1};
    for (int k = 1; k <= 6; ++k) CHECK(p.value(6, k) == doctest::Approx(top[k - 1]).epsilon(1e-10));

    auto q = gt_map(HermitianMatrix::diagonal({5, 3, 1}), 1e-11);
    CHECK(q.value(1, 1) == doctest::Approx(5));
    CHECK(q.value(2, 1) == doctest::Approx(5));
    CHECK(q.value(2, 2) == doctest::Approx(3));

    auto two = gt_map(HermitianMatrix(2, {4.0, 1.0, 1.0, 4.0}), 1e-11);
    CHECK(two.value(1, 1) == doctest::Approx(4));
}

TEST_CASE("gt_of_diagonal is exact") {
    auto p = gt_of_diagonal(rationals({5, 4, 5}));
    CHECK(p.row(1) == rationals({5}));
    CHECK(p.row(2) == rationals({5, 4}));
    CHECK(p.top() == rationals({5, 5, 4}));
    CHECK(p.coordinates() == rationals({5, 4, 5}));

    auto q = gt_of_diagonal(rationals({1, 5, 3, 4, 4, 4}));
    CHECK(q.row(1) == rationals({1}));
    CHECK(q.row(2) == rationals({5, 1}));
    CHECK(q.row(3) == rationals({5, 3, 1}));
    CHECK(q.row(4) == rationals({5, 4, 3, 1}));
    CHECK(q.row(5) == rationals({5, 4, 4, 3, 1}));
    CHECK(q.top() == rationals({5, 4, 4, 4, 3, 1}));

    auto single = gt_of_diagonal({Rational(7, 3)});
    CHECK(single.size() == 1);
    CHECK(single.top() == std::vector<Rational>{Rational(7, 3)});
}

TEST_CASE("project_to_diagonal inverts the row sums") {
    auto q = gt_of_diagonal(rationals({1, 5, 3, 4, 4, 4}));
    CHECK(project_to_diagonal(q) == rationals({1, 5, 3, 4, 4, 4}));

    GTPattern p({{Rational(5)}, {Rational(5), Rational(4)}}, rationals({5, 5, 4}));
    CHECK(project_to_diagonal(p) == rationals({5, 4, 5}));

    auto single = gt_of_diagonal({Rational(7, 3)});
    CHECK(project_to_diagonal(single) == std::vector<Rational>{Rational(7, 3)});
}

TEST_CASE("pr composed with the pattern map recovers the diagonal") {
    std::mt19937_64 rng(3);
    double worst = 0.0;
    for (int trial = 0; trial < 500; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 5);
        HermitianMatrix a = random_hermitian(rng, n);
        auto diag = project_to_diagonal(gt_map(a, 1e-11));
        for (int i = 0; i < n; ++i) worst = std::max(worst, std::abs(diag[i] - a(i, i).real()));
    }
    CHECK(worst <= 1e-8);
}

TEST_CASE("gt_map output interlaces") {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 100; ++trial) {
        auto p = gt_map(random_hermitian(rng, 5), 1e-11);
        CHECK(check_interlacing(p, 1e-9).empty());
    }
}

TEST_CASE("gt_of_diagonal agrees with gt_map on diagonal matrices") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 5);
        Spectrum lambda = random_spectrum(rng, n);
        auto arr = random_arrangement(rng, lambda);
        std::vector<double> d;
        for (const auto& v : arr) d.push_back(to_double(v));
        auto exact = gt_of_diagonal(arr);
        auto numeric = gt_map(HermitianMatrix::diagonal(d), 1e-12);
        for (int j = 1; j <= n; ++j)
            CHECK(max_abs_diff(numeric.row(j), exact.row(j)) <= 1e-10);
    }
}

TEST_CASE("check_interlacing reports labeled violations") {
    auto good = gt_of_diagonal(rationals({2, 3, 1}));
    CHECK(check_interlacing(good, Rational(0)).empty());

    GTPattern bad({{Rational(6)}}, rationals({5, 3}));
    auto violations = check_interlacing(bad, Rational(0));
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].kind == 'A');
    CHECK(violations[0].j == 1);
    CHECK(violations[0].k == 1);
    CHECK(violations[0].slack == -1);
}

TEST_CASE("orbit_spec counts") {
    OrbitSpec s = orbit_spec(Spectrum(rationals({5, 4, 4, 4, 3, 1})));
    CHECK(s.N == 15);
    CHECK(s.D == 12);
    CHECK(s.orbit_dimension == 24);
    CHECK(s.repeated_value_count == 1);
    REQUIRE(s.forced_constants.size() == 3);
    CHECK(s.forced_constants.at({4, 2}) == 4);
    CHECK(s.forced_constants.at({5, 2}) == 4);
    CHECK(s.forced_constants.at({5, 3}) == 4);

    OrbitSpec generic = orbit_spec(Spectrum(rationals({3, 2, 1})));
    CHECK(generic.D == 3);
    CHECK(generic.N == 3);
    CHECK(generic.forced_constants.empty());

    OrbitSpec point = orbit_spec(Spectrum(rationals({7, 7})));
    CHECK(point.D == 0);
    CHECK(point.orbit_dimension == 0);
}

TEST_CASE("pattern coordinate count equals D plus forced count") {
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 5);
        OrbitSpec s = orbit_spec(random_spectrum(rng, n));
        CHECK(s.N - static_cast<int>(s.forced_constants.size()) == s.D);
    }
}

TEST_CASE("pattern constructor validates shape and order") {
    CHECK_THROWS_AS(GTPattern({{Rational(1), Rational(2)}}, rationals({3, 1})),
                    std::invalid_argument); // row 1 too long
    CHECK_THROWS_AS(GTPattern({{Rational(1)}, {Rational(2), Rational(3)}}, rationals({4, 3, 2})),
                    std::invalid_argument); // row 2 increasing
    auto p = GTPattern::from_coordinates(rationals({5, 4, 5}), rationals({5, 5, 4}));
    CHECK(p.value(2, 2) == 4);
    CHECK_THROWS_AS(GTPattern::from_coordinates(rationals({5, 4}), rationals({5, 5, 4})),
                    std::invalid_argument);
}
