#pragma once

#include <algorithm>
#include <cmath>
#include <concepts>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "lagzeros/errors.hpp"

namespace lagzeros {

/// Eigenvalues of the symmetric tridiagonal matrix with diagonal `diag` (size n)
/// and off-diagonal `offdiag` (size n-1), by the implicit QL iteration with
/// Wilkinson-type shifts. Returned in ascending order.
template <std::floating_point T>
std::vector<T> tridiagonal_eigenvalues(std::span<const T> diag, std::span<const T> offdiag, int max_iter = 60) {
    const std::size_t n = diag.size();
    if (n == 0) return {};
    if (offdiag.size() + 1 != n) throw DomainError("off-diagonal must have size n-1");

    std::vector<T> d(diag.begin(), diag.end());
    // e[i] couples rows i and i+1; e[n-1] is a zero sentinel.
    std::vector<T> e(n, T(0));
    std::copy(offdiag.begin(), offdiag.end(), e.begin());

    const T eps = std::numeric_limits<T>::epsilon();
    for (std::size_t l = 0; l < n; ++l) {
        int iter = 0;
        std::size_t m;
        do {
            for (m = l; m + 1 < n; ++m) {
                const T dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= eps * dd) break;
            }
            if (m == l) break;
            if (iter++ == max_iter)
                throw ConvergenceError("tridiagonal QL did not converge for eigenvalue " + std::to_string(l));

            T g = (d[l + 1] - d[l]) / (T(2) * e[l]);
            T r = std::hypot(g, T(1));
            g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
            T s = 1, c = 1, p = 0;
            bool underflow = false;
            for (std::size_t i = m; i-- > l;) {
                const T f = s * e[i];
                const T b = c * e[i];
                r = std::hypot(f, g);
                e[i + 1] = r;
                if (r == T(0)) {
                    d[i + 1] -= p;
                    e[m] = 0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + T(2) * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if (underflow) continue;
            d[l] -= p;
            e[l] = g;
            e[m] = 0;
        } while (m != l);
    }
    std::sort(d.begin(), d.end());
    return d;
}

template <std::floating_point T>
std::vector<T> tridiagonal_eigenvalues(const std::vector<T>& diag, const std::vector<T>& offdiag) {
    return tridiagonal_eigenvalues<T>(std::span<const T>(diag), std::span<const T>(offdiag));
}

}  // namespace lagzeros
