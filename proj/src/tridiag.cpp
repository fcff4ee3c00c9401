#include "lifepde/tridiag.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace lifepde {

ZeroPivotError::ZeroPivotError(int index_)
    : std::runtime_error("tridiagonal solve: zero pivot at row " + std::to_string(index_)),
      index(index_) {}

ThomasSolver::ThomasSolver(double sub, double sup, std::vector<double> diag)
    : sub_(sub), sup_(sup), diag_(std::move(diag)) {
    if (diag_.empty())
        throw std::invalid_argument("ThomasSolver: empty diagonal");
    for (std::size_t i = 0; i < diag_.size(); ++i)
        if (!(std::abs(diag_[i]) > 0.0)) throw ZeroPivotError(static_cast<int>(i));
    pivots_.resize(diag_.size());
    pivots_[0] = diag_[0];
    for (std::size_t i = 1; i < diag_.size(); ++i) {
        if (!(std::abs(pivots_[i - 1]) > 0.0)) throw ZeroPivotError(static_cast<int>(i - 1));
        pivots_[i] = diag_[i] - sub_ * sup_ / pivots_[i - 1];
    }
    if (!(std::abs(pivots_.back()) > 0.0))
        throw ZeroPivotError(static_cast<int>(pivots_.size() - 1));
}

void ThomasSolver::solve(std::span<const double> rhs, std::span<double> x) const {
    const int n = size();
    if (static_cast<int>(rhs.size()) != n || static_cast<int>(x.size()) != n)
        throw std::invalid_argument("ThomasSolver::solve: size mismatch");
    // Forward sweep into x, back-substitute in place.
    x[0] = rhs[0] / pivots_[0];
    for (int i = 1; i < n; ++i) x[i] = (rhs[i] - sub_ * x[i - 1]) / pivots_[i];
    for (int i = n - 2; i >= 0; --i) x[i] -= (sup_ / pivots_[i]) * x[i + 1];
}

std::vector<double> thomas_solve(const TridiagonalSystem& sys) {
    if (sys.diag.size() != sys.rhs.size())
        throw std::invalid_argument("thomas_solve: diag/rhs size mismatch");
    ThomasSolver solver(sys.sub, sys.sup, sys.diag);
    std::vector<double> x(sys.rhs.size());
    solver.solve(sys.rhs, x);
    return x;
}

double residual_inf(const TridiagonalSystem& sys, std::span<const double> x) {
    const int n = static_cast<int>(sys.diag.size());
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        double mx = sys.diag[i] * x[i];
        if (i > 0) mx += sys.sub * x[i - 1];
        if (i + 1 < n) mx += sys.sup * x[i + 1];
        worst = std::max(worst, std::abs(mx - sys.rhs[i]));
    }
    return worst;
}

}  // namespace lifepde
