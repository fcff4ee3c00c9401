#pragma once

// Test-only reference implementations, independent of the library's solve
// paths: dense Gaussian elimination for small/medium linear systems and a
// brute-force node bracket.

#include <cmath>
#include <stdexcept>
#include <vector>

namespace oracles {

// Gaussian elimination with partial pivoting on a dense copy of a
// tridiagonal system (sub/sup constant).
inline std::vector<double> dense_solve(double sub, double sup,
                                       const std::vector<double>& diag,
                                       const std::vector<double>& rhs) {
    const int n = static_cast<int>(diag.size());
    std::vector<std::vector<double>> a(n, std::vector<double>(n + 1, 0.0));
    for (int i = 0; i < n; ++i) {
        a[i][i] = diag[i];
        if (i > 0) a[i][i - 1] = sub;
        if (i + 1 < n) a[i][i + 1] = sup;
        a[i][n] = rhs[i];
    }
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
        if (a[piv][col] == 0.0) throw std::runtime_error("dense_solve: singular");
        std::swap(a[piv], a[col]);
        for (int r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0.0) continue;
            const double f = a[r][col] / a[col][col];
            for (int c = col; c <= n; ++c) a[r][c] -= f * a[col][c];
        }
    }
    std::vector<double> x(n);
    for (int i = 0; i < n; ++i) x[i] = a[i][n] / a[i][i];
    return x;
}

// Largest node with y_n <= y by scanning every node.
inline int brute_bracket(double y, double half_width, double y_step, int num_nodes) {
    int best = 0;
    for (int n = 0; n <= num_nodes; ++n)
        if (-half_width + n * y_step <= y) best = n;
    return best;
}

}  // namespace oracles
