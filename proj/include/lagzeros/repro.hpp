#pragma once

// Printed zero lists for n = 4, 5 with alpha = 1.45 and coefficient 2.33,
// recomputed and compared at the precision they were printed with.

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "lagzeros/interlace.hpp"
#include "lagzeros/laguerre.hpp"
#include "lagzeros/rootfind.hpp"

namespace lagzeros {

/// Six significant figures leave at most 5e-5 relative rounding error.
inline constexpr double repro_relative_tolerance = 5e-5;

struct ReproFixture {
    std::string id;
    std::string description;
    std::function<ZeroSet()> compute;
    std::vector<double> reference;
};

struct ReproResult {
    std::string id;
    std::string description;
    std::vector<double> computed;
    std::vector<double> reference;
    double max_relative_deviation = std::numeric_limits<double>::infinity();
    bool pass = false;
};

inline std::vector<ReproFixture> paper_fixtures() {
    const auto lag = [](int n, double alpha) { return [=] { return laguerre_zeros(n, alpha); }; };
    const auto combo = [](Family f, int n, double alpha, double t, double c) {
        return [=] { return combination_zeros(CombinationSpec(f, {n, alpha, t, c})); };
    };
    const std::vector<double> l4 = {0.954365, 2.94834, 6.26071, 11.6366};
    return {
        {"L4_1.45", "zeros of L_4^{1.45}", lag(4, 1.45), l4},
        {"R5_1.45_t1", "zeros of R_5^{1.45,1}, a=2.33", combo(Family::R, 5, 1.45, 1.0, 2.33),
         {1.17057, 3.01797, 5.80288, 9.83574, 15.9213}},
        {"S5_1.45_t1", "zeros of S_5^{1.45,1}, b=2.33", combo(Family::S, 5, 1.45, 1.0, 2.33),
         {1.34638, 3.48132, 6.74108, 11.6384, 20.6928}},
        {"L4_1.45_again", "zeros of L_4^{1.45} (second listing)", lag(4, 1.45), l4},
        {"S5_1.45_t2", "zeros of S_5^{1.45,2}, b=2.33", combo(Family::S, 5, 1.45, 2.0, 2.33),
         {1.94417, 4.47751, 8.08954, 12.6085, 16.7802}},
        {"L5_3.45", "zeros of L_5^{3.45}", lag(5, 3.45), {1.70945, 3.92167, 7.07942, 11.5061, 18.0334}},
    };
}

inline ReproResult run_fixture(const ReproFixture& f) {
    ReproResult r;
    r.id = f.id;
    r.description = f.description;
    r.reference = f.reference;
    r.computed = f.compute().values;
    if (r.computed.size() != r.reference.size()) return r;
    r.max_relative_deviation = 0.0;
    for (std::size_t i = 0; i < r.computed.size(); ++i)
        r.max_relative_deviation =
            std::max(r.max_relative_deviation, std::abs(r.computed[i] - r.reference[i]) / std::abs(r.reference[i]));
    r.pass = r.max_relative_deviation <= repro_relative_tolerance;
    return r;
}

inline std::vector<ReproResult> reproduce_paper_fixtures() {
    std::vector<ReproResult> out;
    for (const auto& f : paper_fixtures()) out.push_back(run_fixture(f));
    return out;
}

}  // namespace lagzeros
