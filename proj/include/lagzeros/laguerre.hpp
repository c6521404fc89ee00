#pragma once

// Generalized Laguerre polynomials L_n^alpha, the two linear combinations
//
//   R_n^{alpha,t} = L_n^alpha + a L_n^{alpha+t}
//   S_n^{alpha,t} = L_n^alpha + b L_{n-1}^{alpha+t}
//
// and residuals of the classical parameter-shift identities they rely on.

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstdlib>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "lagzeros/errors.hpp"

namespace lagzeros {

enum class Family { R, S };

inline std::string_view to_string(Family f) { return f == Family::R ? "R" : "S"; }

inline Family parse_family(std::string_view s) {
    if (s == "R" || s == "r") return Family::R;
    if (s == "S" || s == "s") return Family::S;
    throw DomainError("unknown family '" + std::string(s) + "' (expected R or S)");
}

/// Degree, parameter, shift and coefficient of one combination instance.
struct ParamSet {
    int n = 0;
    double alpha = 0.0;
    double t = 0.0;
    double coeff = 1.0;
};

namespace detail {

inline void require_alpha(double alpha, const char* what) {
    if (!std::isfinite(alpha) || alpha <= -1.0)
        throw DomainError(std::string(what) + " must be finite and > -1, got " + std::to_string(alpha));
}

inline void require_degree(int n, int min_n) {
    if (n < min_n)
        throw DomainError("degree must be >= " + std::to_string(min_n) + ", got " + std::to_string(n));
}

inline void require_finite(double x) {
    if (!std::isfinite(x)) throw DomainError("evaluation point must be finite");
}

}  // namespace detail

/// Throws DomainError unless alpha > -1, alpha + t > -1, coeff != 0 and n >= 0.
inline void validate(const ParamSet& p) {
    detail::require_degree(p.n, 0);
    detail::require_alpha(p.alpha, "alpha");
    if (!std::isfinite(p.t)) throw DomainError("t must be finite");
    detail::require_alpha(p.alpha + p.t, "alpha + t");
    if (!std::isfinite(p.coeff) || p.coeff == 0.0) throw DomainError("coefficient must be finite and nonzero");
}

/// Which combination, plus its parameters. Construction validates.
class CombinationSpec {
public:
    CombinationSpec(Family family, ParamSet params) : family_(family), params_(params) {
        validate(params_);
        if (family_ == Family::S) detail::require_degree(params_.n, 1);
    }

    [[nodiscard]] Family family() const noexcept { return family_; }
    [[nodiscard]] const ParamSet& params() const noexcept { return params_; }

    /// Leading terms of L_n^alpha and L_n^{alpha+t} are both (-1)^n/n!, so R with a = -1 drops a degree.
    [[nodiscard]] int effective_degree() const noexcept {
        if (family_ == Family::R && params_.coeff == -1.0) return params_.n - 1;
        return params_.n;
    }

    [[nodiscard]] bool reduced_degree() const noexcept { return effective_degree() < params_.n; }

    /// Parameters of the second component: (degree, alpha) of L_n^{alpha+t} or L_{n-1}^{alpha+t}.
    [[nodiscard]] int second_degree() const noexcept {
        return family_ == Family::R ? params_.n : params_.n - 1;
    }
    [[nodiscard]] double second_alpha() const noexcept { return params_.alpha + params_.t; }

private:
    Family family_;
    ParamSet params_;
};

/// L_n^alpha(x) by upward three-term recurrence.
template <std::floating_point T>
T eval_laguerre(int n, T alpha, T x) {
    detail::require_degree(n, 0);
    detail::require_alpha(static_cast<double>(alpha), "alpha");
    detail::require_finite(static_cast<double>(x));
    T prev = T(1);
    if (n == 0) return prev;
    T cur = T(1) + alpha - x;
    for (int k = 1; k < n; ++k) {
        const T next = ((T(2 * k + 1) + alpha - x) * cur - (T(k) + alpha) * prev) / T(k + 1);
        prev = cur;
        cur = next;
    }
    return cur;
}

inline double eval_laguerre(int n, double alpha, double x) { return eval_laguerre<double>(n, alpha, x); }

inline double eval_combination(const CombinationSpec& spec, double x) {
    const auto& p = spec.params();
    const double first = eval_laguerre(p.n, p.alpha, x);
    return first + p.coeff * eval_laguerre(spec.second_degree(), spec.second_alpha(), x);
}

/// Monomial coefficients c_0..c_n of L_n^alpha, c_k = (-1)^k binom(n+alpha, n-k) / k!.
inline std::vector<double> laguerre_monomial_coefficients(int n, double alpha) {
    detail::require_degree(n, 0);
    detail::require_alpha(alpha, "alpha");
    std::vector<double> c(static_cast<std::size_t>(n) + 1);
    double c0 = 1.0;
    for (int j = 1; j <= n; ++j) c0 *= (alpha + j) / j;
    c[0] = c0;
    for (int k = 1; k <= n; ++k)
        c[k] = c[k - 1] * -static_cast<double>(n - k + 1) / (static_cast<double>(k) * (alpha + k));
    // The leading coefficient is alpha-independent; pin it so that R with a = -1 cancels exactly.
    double lead = 1.0;
    for (int j = 1; j <= n; ++j) lead /= j;
    c[n] = (n % 2 == 0) ? lead : -lead;
    return c;
}

/// Monomial coefficients of the combination, trimmed to its effective degree.
inline std::vector<double> combination_monomial_coefficients(const CombinationSpec& spec) {
    const auto& p = spec.params();
    auto c = laguerre_monomial_coefficients(p.n, p.alpha);
    const auto d = laguerre_monomial_coefficients(spec.second_degree(), spec.second_alpha());
    for (std::size_t k = 0; k < d.size(); ++k) c[k] += p.coeff * d[k];
    if (spec.family() == Family::R) c.back() = (1.0 + p.coeff) * laguerre_monomial_coefficients(p.n, 0.0).back();
    while (c.size() > 1 && c.back() == 0.0) c.pop_back();
    return c;
}

enum class Identity {
    shift_1,        // L_n^a = L_n^{a+1} - L_{n-1}^{a+1}
    shift_2,        // x L_n^{a+1} = (x-n) L_n^a + (a+n) L_{n-1}^a
    three_term_lc,  // (a+1) L_n^{a+1} = (a+n+1) L_n^a + x L_{n-1}^{a+2}
    r_t1_rewrite,   // R_n^{a,1} = (c+1) L_n^{a+1} - L_{n-1}^{a+1}
    r_t2_rewrite,   // R_n^{a,2} = (c+1) L_n^{a+2} - 2 L_{n-1}^{a+2} + L_{n-2}^{a+2}
    s_t1_rewrite,   // S_n^{a,1} = L_n^{a+1} + (c-1) L_{n-1}^{a+1}
};

inline constexpr Identity all_identities[] = {Identity::shift_1,      Identity::shift_2,      Identity::three_term_lc,
                                              Identity::r_t1_rewrite, Identity::r_t2_rewrite, Identity::s_t1_rewrite};

inline std::string_view to_string(Identity id) {
    switch (id) {
        case Identity::shift_1: return "shift_1";
        case Identity::shift_2: return "shift_2";
        case Identity::three_term_lc: return "three_term_lc";
        case Identity::r_t1_rewrite: return "r_t1_rewrite";
        case Identity::r_t2_rewrite: return "r_t2_rewrite";
        case Identity::s_t1_rewrite: return "s_t1_rewrite";
    }
    return "?";
}

/// Both sides of an identity, and the largest magnitude of any single term (the roundoff scale).
struct IdentitySides {
    double lhs = 0.0;
    double rhs = 0.0;
    double scale = 1.0;

    [[nodiscard]] double residual() const { return std::abs(lhs - rhs); }
    [[nodiscard]] double relative_residual() const { return residual() / scale; }
};

inline IdentitySides identity_sides(Identity which, int n, double alpha, double coeff, double x) {
    detail::require_degree(n, which == Identity::r_t2_rewrite ? 2 : 1);
    detail::require_alpha(alpha, "alpha");
    detail::require_finite(x);
    const auto L = [](int k, double a, double y) { return eval_laguerre(k, a, y); };
    const auto scale_of = [](std::initializer_list<double> terms) {
        double s = 1.0;
        for (double v : terms) s = std::max(s, std::abs(v));
        return s;
    };

    switch (which) {
        case Identity::shift_1: {
            const double a = L(n, alpha, x), b = L(n, alpha + 1, x), c = L(n - 1, alpha + 1, x);
            return {a, b - c, scale_of({a, b, c})};
        }
        case Identity::shift_2: {
            const double l = x * L(n, alpha + 1, x);
            const double r1 = (x - n) * L(n, alpha, x), r2 = (alpha + n) * L(n - 1, alpha, x);
            return {l, r1 + r2, scale_of({l, r1, r2})};
        }
        case Identity::three_term_lc: {
            const double l = (alpha + 1) * L(n, alpha + 1, x);
            const double r1 = (alpha + n + 1) * L(n, alpha, x), r2 = x * L(n - 1, alpha + 2, x);
            return {l, r1 + r2, scale_of({l, r1, r2})};
        }
        case Identity::r_t1_rewrite: {
            const double l = eval_combination(CombinationSpec(Family::R, {n, alpha, 1.0, coeff}), x);
            const double r1 = (coeff + 1) * L(n, alpha + 1, x), r2 = L(n - 1, alpha + 1, x);
            return {l, r1 - r2, scale_of({l, r1, r2, L(n, alpha, x)})};
        }
        case Identity::r_t2_rewrite: {
            const double l = eval_combination(CombinationSpec(Family::R, {n, alpha, 2.0, coeff}), x);
            const double r1 = (coeff + 1) * L(n, alpha + 2, x), r2 = 2 * L(n - 1, alpha + 2, x),
                         r3 = L(n - 2, alpha + 2, x);
            return {l, r1 - r2 + r3, scale_of({l, r1, r2, r3, L(n, alpha, x)})};
        }
        case Identity::s_t1_rewrite: {
            const double l = eval_combination(CombinationSpec(Family::S, {n, alpha, 1.0, coeff}), x);
            const double r1 = L(n, alpha + 1, x), r2 = (coeff - 1) * L(n - 1, alpha + 1, x);
            return {l, r1 + r2, scale_of({l, r1, r2, L(n, alpha, x)})};
        }
    }
    throw DomainError("unknown identity");
}

/// |LHS - RHS| of the selected identity. Compare against IdentitySides::scale for a relative check.
inline double identity_residual(Identity which, int n, double alpha, double coeff, double x) {
    return identity_sides(which, n, alpha, coeff, x).residual();
}

}  // namespace lagzeros
