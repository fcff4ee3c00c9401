#pragma once

#include <span>
#include <stdexcept>
#include <vector>

namespace lifepde {

/// Tridiagonal system with constant sub/super-diagonal bands, as produced by
/// the implicit schemes here (the bands are time-independent; only the main
/// diagonal varies by row).
struct TridiagonalSystem {
    double sub = 0.0;
    double sup = 0.0;
    std::vector<double> diag;
    std::vector<double> rhs;
};

struct ZeroPivotError : std::runtime_error {
    explicit ZeroPivotError(int index_);
    int index;
};

/// Thomas algorithm with the LU pivots factored once at construction and
/// reused across solves.  Immutable after construction; solve() is const and
/// safe for concurrent use on distinct output spans.
class ThomasSolver {
public:
    ThomasSolver(double sub, double sup, std::vector<double> diag);

    int size() const { return static_cast<int>(diag_.size()); }
    double sub() const { return sub_; }
    double sup() const { return sup_; }
    const std::vector<double>& diag() const { return diag_; }
    const std::vector<double>& pivots() const { return pivots_; }

    // Solves M x = rhs; rhs and x may alias.
    void solve(std::span<const double> rhs, std::span<double> x) const;

private:
    double sub_, sup_;
    std::vector<double> diag_;
    std::vector<double> pivots_;  // l_1..l_n: l_1 = d_1, l_i = d_i - sub*sup/l_{i-1}
};

std::vector<double> thomas_solve(const TridiagonalSystem& sys);

/// Max-norm residual ||M x - rhs||_inf.
double residual_inf(const TridiagonalSystem& sys, std::span<const double> x);

}  // namespace lifepde
