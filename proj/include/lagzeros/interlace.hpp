#pragma once

// Strict-interlacing predicate and one checker per interlacing statement
// about R_n^{alpha,t}, S_n^{alpha,t} and their Laguerre components.

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lagzeros/errors.hpp"
#include "lagzeros/laguerre.hpp"
#include "lagzeros/rootfind.hpp"

namespace lagzeros {

enum class Verdict { interlaces, fails, degenerate };

/// Which list carries the smallest zero when the lists alternate.
enum class Pattern { a_first, b_first, mixed, none };

inline std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::interlaces: return "interlaces";
        case Verdict::fails: return "fails";
        case Verdict::degenerate: return "degenerate";
    }
    return "?";
}

inline std::string_view to_string(Pattern p) {
    switch (p) {
        case Pattern::a_first: return "A_first";
        case Pattern::b_first: return "B_first";
        case Pattern::mixed: return "mixed";
        case Pattern::none: return "n/a";
    }
    return "?";
}

/// 1-based positions (i in A, j in B) of the first breach of the alternating order.
struct IndexPair {
    std::size_t a = 0;
    std::size_t b = 0;
    friend bool operator==(const IndexPair&, const IndexPair&) = default;
};

struct InterlacingReport {
    Verdict verdict = Verdict::fails;
    Pattern pattern = Pattern::none;
    std::optional<IndexPair> violation;
    double min_gap = std::numeric_limits<double>::infinity();

    [[nodiscard]] bool interlaces() const noexcept { return verdict == Verdict::interlaces; }
};

/// Default tie tolerance: 1e-8 * (1 + largest zero magnitude in either list).
inline double default_tie_tolerance(const ZeroSet& a, const ZeroSet& b) {
    return 1e-8 * (1.0 + std::max(a.largest_magnitude(), b.largest_magnitude()));
}

namespace detail {

/// Checks lead[0] < follow[0] < lead[1] < ... with |lead| - |follow| in {0, 1}.
/// Returns the first breach as (lead index, follow index), 0-based.
inline std::optional<std::pair<std::size_t, std::size_t>> first_breach(const std::vector<double>& lead,
                                                                      const std::vector<double>& follow) {
    for (std::size_t i = 0; i < follow.size(); ++i) {
        if (!(lead[i] < follow[i])) return std::pair{i, i};
        if (i + 1 < lead.size() && !(follow[i] < lead[i + 1])) return std::pair{i + 1, i};
    }
    return std::nullopt;
}

}  // namespace detail

/// Strict interlacing of two increasing zero lists whose sizes differ by at most one.
///
/// Sizes n and n-1: the longer list must bracket the shorter. Equal sizes:
/// either list may lead; the leader is recorded in `pattern`. Any cross-list
/// pair closer than tie_tol makes the verdict degenerate.
inline InterlacingReport interlace_check(const ZeroSet& a, const ZeroSet& b, double tie_tol) {
    const auto na = a.size(), nb = b.size();
    if ((na > nb ? na - nb : nb - na) > 1)
        throw DomainError("interlace_check: sizes " + std::to_string(na) + " and " + std::to_string(nb) +
                          " differ by more than one");

    InterlacingReport report;

    // Merge, tracking provenance, to get min_gap and detect cross-list ties.
    std::vector<std::pair<double, int>> merged;
    merged.reserve(na + nb);
    for (double v : a.values) merged.emplace_back(v, 0);
    for (double v : b.values) merged.emplace_back(v, 1);
    std::sort(merged.begin(), merged.end());
    bool tie = false;
    for (std::size_t i = 1; i < merged.size(); ++i) {
        const double gap = merged[i].first - merged[i - 1].first;
        report.min_gap = std::min(report.min_gap, gap);
        if (merged[i].second != merged[i - 1].second && gap <= tie_tol) tie = true;
    }
    if (tie) {
        report.verdict = Verdict::degenerate;
        report.pattern = Pattern::none;
        return report;
    }
    if (na + nb == 0) {
        report.verdict = Verdict::interlaces;
        return report;
    }

    bool a_leads;
    if (na != nb) {
        a_leads = na > nb;
    } else {
        a_leads = a.values.front() < b.values.front();
    }
    const auto& lead = a_leads ? a.values : b.values;
    const auto& follow = a_leads ? b.values : a.values;
    const auto breach = detail::first_breach(lead, follow);
    if (!breach) {
        report.verdict = Verdict::interlaces;
        report.pattern = a_leads ? Pattern::a_first : Pattern::b_first;
        return report;
    }
    report.verdict = Verdict::fails;
    report.pattern = Pattern::mixed;
    const auto [li, fi] = *breach;
    report.violation = a_leads ? IndexPair{li + 1, fi + 1} : IndexPair{fi + 1, li + 1};
    return report;
}

inline InterlacingReport interlace_check(const ZeroSet& a, const ZeroSet& b) {
    return interlace_check(a, b, default_tie_tolerance(a, b));
}

/// Zeros of a combination compared against two Laguerre targets.
struct TheoremReport {
    ZeroSet combination;
    ZeroSet first_target;
    ZeroSet second_target;
    InterlacingReport vs_first;
    InterlacingReport vs_second;
    bool reduced_degree = false;

    [[nodiscard]] bool holds() const noexcept { return vs_first.interlaces() && vs_second.interlaces(); }
};

namespace detail {

inline void require_theorem_hypotheses(int n, double alpha, double t, double coeff, bool t_inclusive) {
    if (n < 2) throw HypothesisError("theorem requires n >= 2");
    if (!std::isfinite(alpha) || alpha <= -1.0) throw HypothesisError("theorem requires alpha > -1");
    const bool t_ok = t > 0.0 && (t_inclusive ? t <= 2.0 : t < 2.0);
    if (!t_ok) throw HypothesisError(t_inclusive ? "theorem requires 0<t<=2" : "theorem requires 0<t<2");
    if (!std::isfinite(coeff) || coeff == 0.0) throw HypothesisError("theorem requires a nonzero coefficient");
}

inline TheoremReport compare_with(const CombinationSpec& spec, ZeroSet first, ZeroSet second) {
    TheoremReport r;
    r.combination = combination_zeros(spec);
    r.first_target = std::move(first);
    r.second_target = std::move(second);
    r.vs_first = interlace_check(r.combination, r.first_target);
    r.vs_second = interlace_check(r.combination, r.second_target);
    r.reduced_degree = spec.reduced_degree();
    return r;
}

}  // namespace detail

/// Zeros of R_n^{alpha,t} against those of L_n^alpha and L_n^{alpha+t}, 0 < t <= 2.
/// With a = -1 the combination has n-1 zeros and the size-difference rule applies.
inline TheoremReport check_theorem_R(int n, double alpha, double t, double a) {
    detail::require_theorem_hypotheses(n, alpha, t, a, true);
    const CombinationSpec spec(Family::R, {n, alpha, t, a});
    return detail::compare_with(spec, laguerre_zeros(n, alpha), laguerre_zeros(n, alpha + t));
}

/// Zeros of S_n^{alpha,t} against those of L_n^alpha and L_{n-1}^{alpha+t}, 0 < t <= 2.
inline TheoremReport check_theorem_S(int n, double alpha, double t, double b) {
    detail::require_theorem_hypotheses(n, alpha, t, b, true);
    const CombinationSpec spec(Family::S, {n, alpha, t, b});
    return detail::compare_with(spec, laguerre_zeros(n, alpha), laguerre_zeros(n - 1, alpha + t));
}

/// Outcome of the four-family chain x_k < y_k < t_k < X_k < x_{k+1}.
struct ChainResult {
    bool holds = true;
    std::size_t k = 0;          // 1-based index of the first failing link (0 when holds)
    std::string inequality;     // e.g. "y_3 < t_3"
    double lhs = 0.0, rhs = 0.0;
    ZeroSet x, y, shifted, X;   // zeros of L_n^a, L_{n-1}^a, L_{n-1}^{a+t}, L_{n-1}^{a+2}
};

/// The ordering of the zeros of L_n^alpha, L_{n-1}^alpha, L_{n-1}^{alpha+t}
/// and L_{n-1}^{alpha+2} for 0 < t < 2 (both ends excluded).
inline ChainResult check_chain(int n, double alpha, double t) {
    detail::require_theorem_hypotheses(n, alpha, t, 1.0, false);
    ChainResult r;
    r.x = laguerre_zeros(n, alpha);
    r.y = laguerre_zeros(n - 1, alpha);
    r.shifted = laguerre_zeros(n - 1, alpha + t);
    r.X = laguerre_zeros(n - 1, alpha + 2.0);

    const auto fail = [&r](std::size_t k, std::string lhs_name, double lhs, std::string rhs_name, double rhs) {
        r.holds = false;
        r.k = k;
        r.inequality = std::move(lhs_name) + " < " + std::move(rhs_name);
        r.lhs = lhs;
        r.rhs = rhs;
    };
    if (!(r.x[0] > 0.0)) {
        fail(1, "0", 0.0, "x_1", r.x[0]);
        return r;
    }
    for (std::size_t i = 0; i + 1 < static_cast<std::size_t>(n); ++i) {
        const std::string k = std::to_string(i + 1), k1 = std::to_string(i + 2);
        const std::pair<std::string, double> links[] = {{"x_" + k, r.x[i]},
                                                        {"y_" + k, r.y[i]},
                                                        {"t_" + k, r.shifted[i]},
                                                        {"X_" + k, r.X[i]},
                                                        {"x_" + k1, r.x[i + 1]}};
        for (std::size_t j = 0; j + 1 < std::size(links); ++j) {
            if (!(links[j].second < links[j + 1].second)) {
                fail(i + 1, links[j].first, links[j].second, links[j + 1].first, links[j + 1].second);
                return r;
            }
        }
    }
    return r;
}

/// One counterexample or remark about (non-)interlacing, checked numerically.
struct ClaimResult {
    std::string id;
    std::string description;
    Verdict expected = Verdict::fails;
    InterlacingReport report;
    ZeroSet combination;
    ZeroSet target;

    [[nodiscard]] bool confirmed() const noexcept { return report.verdict == expected; }
};

namespace detail {

inline ClaimResult run_claim(std::string id, std::string description, Verdict expected, const CombinationSpec& spec,
                             int target_n, double target_alpha) {
    ClaimResult c;
    c.id = std::move(id);
    c.description = std::move(description);
    c.expected = expected;
    c.combination = combination_zeros(spec);
    c.target = laguerre_zeros(target_n, target_alpha);
    c.report = interlace_check(c.combination, c.target);
    return c;
}

}  // namespace detail

/// The printed counterexamples (n = 5, alpha = 1.45, coefficient 2.33) and
/// the two positive remarks that accompany them.
inline std::vector<ClaimResult> check_negative_claims() {
    constexpr int n = 5;
    constexpr double alpha = 1.45;
    constexpr double c = 2.33;
    std::vector<ClaimResult> out;
    out.push_back(detail::run_claim("R5_t1_vs_L4_alpha", "R_5^{1.45,1} (a=2.33) vs L_4^{1.45}", Verdict::fails,
                                    CombinationSpec(Family::R, {n, alpha, 1.0, c}), n - 1, alpha));
    out.push_back(detail::run_claim("S5_t1_vs_L4_alpha", "S_5^{1.45,1} (b=2.33) vs L_4^{1.45}", Verdict::fails,
                                    CombinationSpec(Family::S, {n, alpha, 1.0, c}), n - 1, alpha));
    out.push_back(detail::run_claim("S5_t2_vs_L5_alpha+2", "S_5^{1.45,2} (b=2.33) vs L_5^{3.45}", Verdict::fails,
                                    CombinationSpec(Family::S, {n, alpha, 2.0, c}), n, alpha + 2.0));
    out.push_back(detail::run_claim("R5_t1_vs_L4_alpha+1", "R_5^{1.45,1} (a=2.33) vs L_4^{2.45}",
                                    Verdict::interlaces, CombinationSpec(Family::R, {n, alpha, 1.0, c}), n - 1,
                                    alpha + 1.0));
    out.push_back(detail::run_claim("S5_t1_vs_L5_alpha+1", "S_5^{1.45,1} (b=2.33) vs L_5^{2.45}",
                                    Verdict::interlaces, CombinationSpec(Family::S, {n, alpha, 1.0, c}), n,
                                    alpha + 1.0));
    return out;
}

}  // namespace lagzeros
