#include <cmath>
#include <random>
#include <vector>

#include <catch_amalgamated.hpp>

#include "lagzeros/rootfind.hpp"
#include "oracles.hpp"

using namespace lagzeros;
using Catch::Approx;

namespace {

void check_six_figures(const ZeroSet& z, const std::vector<double>& ref) {
    REQUIRE(z.size() == ref.size());
    for (std::size_t i = 0; i < ref.size(); ++i) CHECK(std::abs(z[i] - ref[i]) <= 5e-5 * ref[i]);
}

// Frozen with a 40-digit mpmath root search, independent of this library.
const std::vector<double> zeros_L4_145 = {0.954364588, 2.948344718, 6.260714492, 11.6365762};
const std::vector<double> zeros_R3_0_t1_a1 = {0.7683297131, 2.827825555, 6.903844732};

}  // namespace

TEST_CASE("laguerre_zeros printed lists") {
    check_six_figures(laguerre_zeros(4, 1.45), {0.954365, 2.94834, 6.26071, 11.6366});
    check_six_figures(laguerre_zeros(5, 3.45), {1.70945, 3.92167, 7.07942, 11.5061, 18.0334});
    const auto z = laguerre_zeros(4, 1.45);
    for (std::size_t i = 0; i < 4; ++i) CHECK(z[i] == Approx(zeros_L4_145[i]).epsilon(1e-9));
}

TEST_CASE("laguerre_zeros closed forms") {
    for (double alpha : {-0.9, 0.0, 2.5}) {
        const auto z = laguerre_zeros(1, alpha);
        REQUIRE(z.size() == 1);
        CHECK(z[0] == Approx(1.0 + alpha).epsilon(1e-15));
    }
    const auto z = laguerre_zeros(2, 0.0);
    CHECK(z[0] == Approx(2.0 - std::sqrt(2.0)).epsilon(1e-14));
    CHECK(z[1] == Approx(2.0 + std::sqrt(2.0)).epsilon(1e-14));
    CHECK(z.complete);
}

TEST_CASE("laguerre_zeros are simple zeros of the recurrence polynomial") {
    for (int n : {3, 12, 30, 60, 100}) {
        for (double alpha : {-0.7, 0.0, 1.45, 9.0}) {
            const auto z = laguerre_zeros(n, alpha);
            REQUIRE(z.size() == static_cast<std::size_t>(n));
            CHECK(z.complete);
            for (std::size_t i = 0; i < z.size(); ++i) {
                // Local derivative scale from a symmetric difference over the neighbouring gap.
                const double h = 1e-4 * (i + 1 < z.size() ? z[i + 1] - z[i] : z[i] - z[i - 1]);
                const double slope =
                    std::abs(eval_laguerre(n, alpha, z[i] + h) - eval_laguerre(n, alpha, z[i] - h)) / (2 * h);
                CHECK(std::abs(eval_laguerre(n, alpha, z[i])) <= 1e-9 * slope * std::max(1.0, z[i]));
            }
        }
    }
}

TEST_CASE("laguerre_zeros preconditions") {
    CHECK_THROWS_AS(laguerre_zeros(0, 0.5), DomainError);
    CHECK_THROWS_AS(laguerre_zeros(3, -1.0), DomainError);
}

TEST_CASE("oracle on L_2^0 and L_4^{1.45}") {
    const auto q = oracle_zeros(2, 0.0, 200);
    REQUIRE(q.size() == 2);
    CHECK(q[0] == Approx(2.0 - std::sqrt(2.0)).margin(1e-11));
    CHECK(q[1] == Approx(2.0 + std::sqrt(2.0)).margin(1e-11));

    const auto o = oracle_zeros(4, 1.45, 2000);
    const auto e = laguerre_zeros(4, 1.45);
    REQUIRE(o.size() == 4);
    for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(o[i] - e[i]) <= 1e-9);
    CHECK_THROWS_AS(oracle_zeros(4, 1.45, 39), DomainError);
}

TEST_CASE("combination zeros: printed R and S lists") {
    const auto r = combination_zeros(CombinationSpec(Family::R, {5, 1.45, 1.0, 2.33}));
    CHECK(r.complete);
    check_six_figures(r, {1.17057, 3.01797, 5.80288, 9.83574, 15.9213});
    const auto s1 = combination_zeros(CombinationSpec(Family::S, {5, 1.45, 1.0, 2.33}));
    CHECK(s1.complete);
    check_six_figures(s1, {1.34638, 3.48132, 6.74108, 11.6384, 20.6928});
    const auto s2 = combination_zeros(CombinationSpec(Family::S, {5, 1.45, 2.0, 2.33}));
    CHECK(s2.complete);
    check_six_figures(s2, {1.94417, 4.47751, 8.08954, 12.6085, 16.7802});
}

TEST_CASE("combination zeros agree with the oracle and with frozen values") {
    const CombinationSpec spec(Family::R, {3, 0.0, 1.0, 1.0});
    const auto z = combination_zeros(spec);
    const auto o = oracle_zeros(spec, 20000);
    REQUIRE(z.size() == 3);
    REQUIRE(o.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(std::abs(z[i] - o[i]) <= 1e-9);
        CHECK(z[i] == Approx(zeros_R3_0_t1_a1[i]).epsilon(1e-9));
    }
}

TEST_CASE("R with a = -1 has n-1 zeros") {
    // R_2^{0,1} with a = -1 is L_2^0 - L_2^1 = x - 2.
    const CombinationSpec spec(Family::R, {2, 0.0, 1.0, -1.0});
    const auto z = combination_zeros(spec);
    REQUIRE(z.size() == 1);
    CHECK(z.complete);
    CHECK(z[0] == Approx(2.0).epsilon(1e-12));

    const auto z7 = combination_zeros(CombinationSpec(Family::R, {7, 0.4, 1.7, -1.0}));
    CHECK(z7.size() == 6);
    CHECK(z7.complete);
}

TEST_CASE("negative zeros are found") {
    // S_3^{0,1} with b = -10: S(0) < 0 and the sign pattern at the zeros of
    // L_3^0 forces one zero on the negative axis.
    const CombinationSpec spec(Family::S, {3, 0.0, 1.0, -10.0});
    const auto z = combination_zeros(spec);
    REQUIRE(z.size() == 3);
    CHECK(z.complete);
    CHECK(z[0] < 0.0);
    const auto o = oracle_zeros(spec, 200000);
    REQUIRE(o.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) CHECK(std::abs(z[i] - o[i]) <= 1e-9);
}

TEST_CASE("R near a = -1 has one zero of very large magnitude") {
    // Sum of zeros is -n t / (1 + a), so the outlier sits near -4e4.
    const CombinationSpec spec(Family::R, {4, 0.5, 1.0, -1.0 + 1e-4});
    const auto z = combination_zeros(spec);
    CHECK(z.complete);
    REQUIRE(z.size() == 4);
    CHECK(z[0] < -1e4);
    const double below = eval_combination(spec, z[0] * (1 - 1e-10));
    const double above = eval_combination(spec, z[0] * (1 + 1e-10));
    CHECK(below * above < 0.0);
}

TEST_CASE("zero-set invariants on random Laguerre parameters") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> alpha_dist(-0.99, 10.0), dalpha(0.01, 3.0);
    for (int i = 0; i < 200; ++i) {
        const int n = 2 + static_cast<int>(rng() % 39);
        const double alpha = alpha_dist(rng);
        const auto z = laguerre_zeros(n, alpha);
        INFO("n=" << n << " alpha=" << alpha);
        CHECK(z.values.front() > 0.0);
        CHECK(z.values.back() < testing::zero_bound_for_tests(n, alpha));
        for (std::size_t k = 1; k < z.size(); ++k) CHECK(z[k] - z[k - 1] > z.tolerance);
        CHECK(testing::alternate(z.values, laguerre_zeros(n - 1, alpha).values));
        const auto zs = laguerre_zeros(n, alpha + dalpha(rng));
        for (std::size_t k = 0; k < z.size(); ++k) CHECK(zs[k] > z[k]);
    }
}

TEST_CASE("fujiwara bound encloses the zeros") {
    const auto c = laguerre_monomial_coefficients(10, 2.0);
    const double b = fujiwara_bound(c);
    CHECK(laguerre_zeros(10, 2.0).values.back() < b);
}
