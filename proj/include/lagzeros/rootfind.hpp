#pragma once

// Real zeros of L_n^alpha (Jacobi-matrix eigenvalues), of the R/S
// combinations (mesh bracketing + bisection), and a brute-force grid oracle
// used to cross-check both.

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "lagzeros/errors.hpp"
#include "lagzeros/laguerre.hpp"
#include "lagzeros/tridiagonal.hpp"

namespace lagzeros {

/// Strictly increasing real zeros of one polynomial.
struct ZeroSet {
    std::vector<double> values;
    double tolerance = 0.0;  // absolute accuracy achieved for every value
    bool complete = false;   // count equals the effective degree and no zeros were merged

    [[nodiscard]] std::size_t size() const noexcept { return values.size(); }
    [[nodiscard]] bool empty() const noexcept { return values.empty(); }
    [[nodiscard]] double operator[](std::size_t i) const { return values[i]; }
    [[nodiscard]] double largest_magnitude() const {
        double m = 0.0;
        for (double v : values) m = std::max(m, std::abs(v));
        return m;
    }
};

/// Every zero of L_n^alpha lies in (0, zero_upper_bound(n, alpha)).
inline double zero_upper_bound(int n, double alpha) { return 4.0 * n + 2.0 * alpha + 2.0; }

inline ZeroSet laguerre_zeros(int n, double alpha) {
    detail::require_degree(n, 1);
    detail::require_alpha(alpha, "alpha");

    // Jacobi matrix of the monic Laguerre recurrence.
    std::vector<double> diag(static_cast<std::size_t>(n));
    std::vector<double> off(static_cast<std::size_t>(n - 1));
    for (int k = 0; k < n; ++k) diag[k] = 2.0 * k + alpha + 1.0;
    for (int k = 1; k < n; ++k) off[k - 1] = std::sqrt(k * (k + alpha));

    ZeroSet z;
    z.values = tridiagonal_eigenvalues<double>(diag, off);
    // QL backward error is a few ulps of the matrix norm.
    z.tolerance = 16.0 * std::numeric_limits<double>::epsilon() * zero_upper_bound(n, alpha);
    z.complete = static_cast<int>(z.values.size()) == n;
    return z;
}

/// Upper bound on the modulus of every complex zero of the polynomial with
/// monomial coefficients `c` (Fujiwara).
inline double fujiwara_bound(const std::vector<double>& c) {
    const std::size_t deg = c.size() - 1;
    if (deg == 0) return 0.0;
    const double lead = std::abs(c[deg]);
    double bound = 0.0;
    for (std::size_t k = 1; k <= deg; ++k) {
        double ratio = std::abs(c[deg - k]) / lead;
        if (k == deg) ratio /= 2.0;
        bound = std::max(bound, std::pow(ratio, 1.0 / static_cast<double>(k)));
    }
    return 2.0 * bound;
}

namespace detail {

inline bool opposite_signs(double a, double b) { return (a < 0.0 && b > 0.0) || (a > 0.0 && b < 0.0); }

struct Bracketed {
    double root;
    double error;  // max(final bracket width, residual / slope)
};

/// Bisect a sign-change bracket until its width is below rel_width relative
/// to the endpoint magnitude, then polish with a few regula falsi steps.
template <class F>
Bracketed bisect_root(const F& f, double a, double b, double fa, double fb, double rel_width) {
    const double slope = std::abs(fb - fa) / (b - a);
    while (true) {
        const double width = b - a;
        if (width <= rel_width * std::max(std::abs(a), std::abs(b))) break;
        const double mid = a + 0.5 * width;
        if (mid <= a || mid >= b) break;
        const double fm = f(mid);
        if (fm == 0.0) return {mid, 0.0};
        if (opposite_signs(fa, fm)) {
            b = mid;
            fb = fm;
        } else {
            a = mid;
            fa = fm;
        }
    }
    double best = std::abs(fa) <= std::abs(fb) ? a : b;
    double fbest = std::min(std::abs(fa), std::abs(fb));
    for (int step = 0; step < 4 && fa != fb; ++step) {
        const double z = a - fa * (b - a) / (fb - fa);
        if (!(z > a && z < b)) break;
        const double fz = f(z);
        if (std::abs(fz) < fbest) {
            best = z;
            fbest = std::abs(fz);
        }
        if (fz == 0.0) break;
        if (opposite_signs(fa, fz)) {
            b = z;
            fb = fz;
        } else {
            a = z;
            fa = fz;
        }
    }
    const double residual_error = slope > 0.0 ? fbest / slope : 0.0;
    return {best, std::max(b - a, residual_error)};
}

/// Scan consecutive mesh points for sign changes and bisect each one.
template <class F>
std::vector<Bracketed> scan_mesh(const F& f, const std::vector<double>& mesh, double rel_width) {
    std::vector<Bracketed> found;
    if (mesh.empty()) return found;
    double xa = mesh.front();
    double fa = f(xa);
    for (std::size_t i = 1; i < mesh.size(); ++i) {
        const double xb = mesh[i];
        const double fb = f(xb);
        if (fa == 0.0) {
            found.push_back({xa, 0.0});
        } else if (opposite_signs(fa, fb)) {
            found.push_back(bisect_root(f, xa, xb, fa, fb, rel_width));
        }
        xa = xb;
        fa = fb;
    }
    if (fa == 0.0) found.push_back({xa, 0.0});
    return found;
}

inline std::vector<double> with_midpoints(const std::vector<double>& pts) {
    std::vector<double> out;
    out.reserve(2 * pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i > 0) out.push_back(0.5 * (pts[i - 1] + pts[i]));
        out.push_back(pts[i]);
    }
    return out;
}

/// Sorted roots; neighbours closer than their error estimates are merged.
inline ZeroSet collect(std::vector<Bracketed> found, int expected) {
    std::sort(found.begin(), found.end(), [](const Bracketed& l, const Bracketed& r) { return l.root < r.root; });
    ZeroSet z;
    bool merged = false;
    for (const auto& b : found) {
        z.tolerance = std::max(z.tolerance, b.error);
        if (!z.values.empty() && b.root - z.values.back() <= z.tolerance) {
            z.values.back() = 0.5 * (z.values.back() + b.root);
            merged = true;
            continue;
        }
        z.values.push_back(b.root);
    }
    z.complete = !merged && static_cast<int>(z.values.size()) == expected;
    return z;
}

}  // namespace detail

/// Relative bracket width at which combination zeros are accepted.
inline constexpr double combination_root_rel_width = 1e-13;

/// Initial positive search bound for a combination: the Laguerre zero bound
/// over both components plus a margin.
inline double combination_search_bound(const CombinationSpec& spec) {
    const auto& p = spec.params();
    return 4.0 * p.n + 2.0 * (p.alpha + std::max(p.t, 0.0)) + 6.0;
}

/// All real zeros of R_n^{alpha,t} or S_n^{alpha,t}, ascending.
///
/// Sign changes are located on a mesh built from 0, the zeros of both
/// component polynomials, the search bound U (doubled until it covers the
/// Fujiwara bound of the combination) and a uniform mesh over the negative
/// half-line down to minus that bound. If fewer zeros than the effective
/// degree turn up, the mesh is refined by midpoint insertion up to 8 times.
/// A count shortfall is reported through `complete`, never thrown.
inline ZeroSet combination_zeros(const CombinationSpec& spec) {
    const int degree = spec.effective_degree();
    if (degree < 1) throw DomainError("combination has effective degree < 1");
    const auto& p = spec.params();
    const auto f = [&spec](double x) { return eval_combination(spec, x); };

    const double root_bound = fujiwara_bound(combination_monomial_coefficients(spec));

    std::vector<double> pts{0.0};
    for (double v : laguerre_zeros(p.n, p.alpha).values) pts.push_back(v);
    if (spec.second_degree() >= 1)
        for (double v : laguerre_zeros(spec.second_degree(), spec.second_alpha()).values) pts.push_back(v);
    double upper = combination_search_bound(spec);
    pts.push_back(upper);
    while (upper < root_bound) {
        upper *= 2.0;
        pts.push_back(upper);
    }
    if (root_bound > 0.0) {
        const int slots = 2 * degree + 2;
        for (int k = 1; k <= slots; ++k) pts.push_back(-root_bound * (1.0 + 1e-9) * k / slots);
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    std::vector<double> mesh = detail::with_midpoints(pts);
    ZeroSet z = detail::collect(detail::scan_mesh(f, mesh, combination_root_rel_width), degree);
    for (int refine = 0; refine < 8 && static_cast<int>(z.size()) < degree; ++refine) {
        mesh = detail::with_midpoints(mesh);
        z = detail::collect(detail::scan_mesh(f, mesh, combination_root_rel_width), degree);
    }
    return z;
}

/// Brute-force oracle: sample f on grid_density uniform points over [lo, hi],
/// bisect every sign-change cell to 1e-12. Returns whatever it finds.
template <class F>
ZeroSet oracle_zeros(const F& f, double lo, double hi, int grid_density) {
    if (!(hi > lo)) throw DomainError("oracle interval must satisfy lo < hi");
    if (grid_density < 2) throw DomainError("oracle grid needs at least 2 points");
    std::vector<double> grid(static_cast<std::size_t>(grid_density));
    for (int i = 0; i < grid_density; ++i) grid[i] = lo + (hi - lo) * i / (grid_density - 1);

    std::vector<detail::Bracketed> found;
    double fa = f(grid[0]);
    for (std::size_t i = 1; i < grid.size(); ++i) {
        const double fb = f(grid[i]);
        if (fa == 0.0) found.push_back({grid[i - 1], 0.0});
        if (detail::opposite_signs(fa, fb)) {
            double a = grid[i - 1], b = grid[i], ga = fa;
            while (b - a > 1e-12) {
                const double m = 0.5 * (a + b);
                if (m <= a || m >= b) break;
                const double gm = f(m);
                if (gm == 0.0) {
                    a = b = m;
                    break;
                }
                if (detail::opposite_signs(ga, gm)) {
                    b = m;
                } else {
                    a = m;
                    ga = gm;
                }
            }
            found.push_back({0.5 * (a + b), b - a});
        }
        fa = fb;
    }
    if (fa == 0.0) found.push_back({grid.back(), 0.0});

    ZeroSet z;
    for (const auto& b : found) {
        z.values.push_back(b.root);
        z.tolerance = std::max(z.tolerance, b.error);
    }
    return z;
}

/// Oracle zeros of L_n^alpha over (0, 4n + 2 alpha + 2).
inline ZeroSet oracle_zeros(int n, double alpha, int grid_density) {
    detail::require_degree(n, 1);
    detail::require_alpha(alpha, "alpha");
    if (grid_density < 10 * n) throw DomainError("oracle grid density must be >= 10 * degree");
    ZeroSet z = oracle_zeros([n, alpha](double x) { return eval_laguerre(n, alpha, x); }, 0.0,
                             zero_upper_bound(n, alpha), grid_density);
    z.complete = static_cast<int>(z.size()) == n;
    return z;
}

/// Oracle zeros of a combination over [-B, B], B its Fujiwara bound.
inline ZeroSet oracle_zeros(const CombinationSpec& spec, int grid_density) {
    const int degree = spec.effective_degree();
    if (degree < 1) throw DomainError("combination has effective degree < 1");
    if (grid_density < 10 * degree) throw DomainError("oracle grid density must be >= 10 * degree");
    const double bound = fujiwara_bound(combination_monomial_coefficients(spec)) * (1.0 + 1e-9);
    ZeroSet z = oracle_zeros([&spec](double x) { return eval_combination(spec, x); }, -bound, bound, grid_density);
    z.complete = static_cast<int>(z.size()) == degree;
    return z;
}

}  // namespace lagzeros
