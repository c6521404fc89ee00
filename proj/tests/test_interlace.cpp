#include <cmath>
#include <random>
#include <vector>

#include <catch_amalgamated.hpp>

#include "lagzeros/interlace.hpp"
#include "oracles.hpp"

using namespace lagzeros;
using Catch::Approx;

namespace {

ZeroSet zs(std::vector<double> v) {
    ZeroSet z;
    z.values = std::move(v);
    z.complete = true;
    return z;
}

Pattern mirrored(Pattern p) {
    if (p == Pattern::a_first) return Pattern::b_first;
    if (p == Pattern::b_first) return Pattern::a_first;
    return p;
}

}  // namespace

TEST_CASE("interlace_check basics") {
    const auto r = interlace_check(zs({1, 3}), zs({2}), 1e-9);
    CHECK(r.verdict == Verdict::interlaces);
    CHECK(r.pattern == Pattern::a_first);
    CHECK(r.min_gap == 1.0);
    CHECK_FALSE(r.violation);

    CHECK(interlace_check(zs({2}), zs({1, 3}), 1e-9).pattern == Pattern::b_first);
    CHECK(interlace_check(zs({1, 3}), zs({2, 4}), 1e-9).verdict == Verdict::interlaces);
    CHECK(interlace_check(zs({2, 4}), zs({1, 3}), 1e-9).pattern == Pattern::b_first);

    const auto bad = interlace_check(zs({1, 2}), zs({3}), 1e-9);
    CHECK(bad.verdict == Verdict::fails);
    CHECK(bad.pattern == Pattern::mixed);
    REQUIRE(bad.violation);
    CHECK(*bad.violation == IndexPair{2, 1});

    CHECK(interlace_check(zs({1, 2}), zs({1 + 1e-12}), 1e-9).verdict == Verdict::degenerate);
    CHECK_THROWS_AS(interlace_check(zs({1, 2, 3}), zs({1.5}), 1e-9), DomainError);
    CHECK(interlace_check(zs({}), zs({}), 1e-9).verdict == Verdict::interlaces);
    CHECK(interlace_check(zs({5}), zs({}), 1e-9).verdict == Verdict::interlaces);
}

TEST_CASE("printed counterexample reports the first violating pair") {
    const auto s = combination_zeros(CombinationSpec(Family::S, {5, 1.45, 1.0, 2.33}));
    const auto l = laguerre_zeros(4, 1.45);
    const auto r = interlace_check(s, l);
    CHECK(r.verdict == Verdict::fails);
    REQUIRE(r.violation);
    CHECK(*r.violation == IndexPair{1, 1});

    const auto s2 = combination_zeros(CombinationSpec(Family::S, {5, 1.45, 2.0, 2.33}));
    CHECK(interlace_check(s2, laguerre_zeros(5, 3.45)).verdict == Verdict::fails);
}

TEST_CASE("interlace_check is symmetric for equal sizes and degenerate on itself") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0.0, 50.0);
    for (int rep = 0; rep < 300; ++rep) {
        const std::size_t n = 1 + rng() % 8;
        std::vector<double> a(n), b(n);
        for (auto& v : a) v = u(rng);
        for (auto& v : b) v = u(rng);
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        const auto A = zs(a), B = zs(b);
        const auto ab = interlace_check(A, B), ba = interlace_check(B, A);
        CHECK(ab.verdict == ba.verdict);
        CHECK(ab.pattern == mirrored(ba.pattern));
        CHECK((ab.verdict == Verdict::interlaces) == testing::alternate(a, b));
        CHECK(interlace_check(A, A).verdict == Verdict::degenerate);
    }
}

TEST_CASE("check_theorem_R") {
    const auto r = check_theorem_R(5, 1.45, 1.0, 2.33);
    CHECK(r.vs_first.verdict == Verdict::interlaces);
    CHECK(r.vs_second.verdict == Verdict::interlaces);
    CHECK_FALSE(r.reduced_degree);

    // R_2^{0,2}, a = 1: x^2 - 6x + 7, zeros 3 -+ sqrt 2; L_2^0: 2 -+ sqrt 2; L_2^2: 2 and 6.
    const auto q = check_theorem_R(2, 0.0, 2.0, 1.0);
    REQUIRE(q.combination.size() == 2);
    CHECK(q.combination[0] == Approx(3 - std::sqrt(2.0)).epsilon(1e-12));
    CHECK(q.combination[1] == Approx(3 + std::sqrt(2.0)).epsilon(1e-12));
    CHECK(testing::alternate(q.combination.values, {2 - std::sqrt(2.0), 2 + std::sqrt(2.0)}));
    CHECK(testing::alternate(q.combination.values, {2.0, 6.0}));
    CHECK(q.holds());

    const auto m = check_theorem_R(6, 0.8, 1.5, -1.0);
    CHECK(m.reduced_degree);
    CHECK(m.combination.size() == 5);
    CHECK(m.holds());
}

TEST_CASE("theorem hypotheses are enforced") {
    CHECK_THROWS_AS(check_theorem_R(5, 1.45, 2.5, 1.0), HypothesisError);
    CHECK_THROWS_AS(check_theorem_R(5, 1.45, 0.0, 1.0), HypothesisError);
    CHECK_THROWS_AS(check_theorem_R(1, 1.45, 1.0, 1.0), HypothesisError);
    CHECK_THROWS_AS(check_theorem_S(5, -1.0, 1.0, 1.0), HypothesisError);
    CHECK_THROWS_AS(check_theorem_S(5, 1.0, 1.0, 0.0), HypothesisError);
    CHECK_NOTHROW(check_theorem_S(5, 1.0, 2.0, 1.0));
    CHECK_THROWS_AS(check_chain(5, 1.45, 2.0), HypothesisError);
    CHECK_THROWS_AS(check_chain(5, 1.45, -0.1), HypothesisError);
}

TEST_CASE("check_theorem_S") {
    const auto a = check_theorem_S(5, 1.45, 1.0, 2.33);
    CHECK(a.holds());
    CHECK(a.combination[0] == Approx(1.34638).epsilon(5e-5));
    const auto b = check_theorem_S(5, 1.45, 2.0, 2.33);
    CHECK(b.holds());
    CHECK(b.combination[4] == Approx(16.7802).epsilon(5e-5));

    // b = 1, t = 1: S_2^{0,1} = L_2^1 with zeros 3 -+ sqrt 3; L_2^0: 2 -+ sqrt 2; L_1^1: 2.
    const auto c = check_theorem_S(2, 0.0, 1.0, 1.0);
    REQUIRE(c.combination.size() == 2);
    CHECK(c.combination[0] == Approx(3 - std::sqrt(3.0)).epsilon(1e-12));
    CHECK(c.combination[1] == Approx(3 + std::sqrt(3.0)).epsilon(1e-12));
    CHECK(c.holds());
    // Against L_2^1 itself the zeros coincide.
    CHECK(interlace_check(c.combination, laguerre_zeros(2, 1.0)).verdict == Verdict::degenerate);
}

TEST_CASE("check_chain") {
    const auto r = check_chain(5, 1.45, 1.0);
    CHECK(r.holds);
    // n = 2, alpha = 0, t = 0.5: x = 2 -+ sqrt 2, y = 1, t = 1.5, X = 3.
    const auto q = check_chain(2, 0.0, 0.5);
    CHECK(q.holds);
    CHECK(q.y[0] == Approx(1.0));
    CHECK(q.shifted[0] == Approx(1.5));
    CHECK(q.X[0] == Approx(3.0));
}

TEST_CASE("negative claims and positive remarks") {
    const auto claims = check_negative_claims();
    REQUIRE(claims.size() == 5);
    for (const auto& c : claims) {
        INFO(c.id);
        CHECK(c.confirmed());
        if (c.expected == Verdict::fails) CHECK(c.report.violation.has_value());
    }
    CHECK(*claims[0].report.violation == IndexPair{1, 1});  // 1.17057 > 0.954365
    CHECK(*claims[1].report.violation == IndexPair{1, 1});  // 1.34638 > 0.954365

    // Frozen mpmath zeros of L_4^{2.45}, merged with the printed R-zeros.
    CHECK(testing::alternate({1.17057, 3.01797, 5.80288, 9.83574, 15.9213},
                             {1.459831341, 3.795038135, 7.424286494, 13.12084403}));
}
