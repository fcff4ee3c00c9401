#include "lifepde/grid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace lifepde {

namespace {

int integral_ratio(double num, double den, const char* what) {
    const double ratio = num / den;
    const double rounded = std::round(ratio);
    if (std::abs(ratio - rounded) > 1e-9 * std::max(1.0, std::abs(ratio)))
        throw std::invalid_argument(std::string("LogGrid: ") + what +
                                    " must divide evenly (got ratio " +
                                    std::to_string(ratio) + ")");
    return static_cast<int>(rounded);
}

}  // namespace

LogGrid::LogGrid(double half_width, double y_step, double tau_step, double horizon)
    : half_width_(half_width), y_step_(y_step), tau_step_(tau_step), horizon_(horizon) {
    if (!(half_width > 0.0) || !(y_step > 0.0) || !(tau_step > 0.0) || !(horizon > 0.0))
        throw std::invalid_argument("LogGrid: M, h, k, T must all be > 0");
    n_ = integral_ratio(2.0 * half_width, y_step, "2M/h");
    j_ = integral_ratio(horizon, tau_step, "T/k");
    if (n_ < 3) throw std::invalid_argument("LogGrid: need at least 3 y-nodes (2M/h >= 3)");
    if (j_ < 1) throw std::invalid_argument("LogGrid: need at least 1 time level (T/k >= 1)");
}

double LogGrid::lambda_min(double lambda_bar) const {
    return lambda_bar + std::exp(-half_width_);
}

double LogGrid::lambda_max(double lambda_bar) const {
    return lambda_bar + std::exp(half_width_);
}

double y_of_lambda(double lambda, double lambda_bar) {
    if (!(lambda > lambda_bar))
        throw std::invalid_argument("y_of_lambda: lambda must exceed the floor");
    return std::log(lambda - lambda_bar);
}

double lambda_of_y(double y, double lambda_bar) {
    return lambda_bar + std::exp(y);
}

Bracket bracket_and_weights(const LogGrid& grid, double lambda0, double lambda_bar) {
    if (lambda0 < grid.lambda_min(lambda_bar) || lambda0 > grid.lambda_max(lambda_bar))
        throw std::invalid_argument("bracket_and_weights: lambda0 outside the grid range");
    const double yq = y_of_lambda(lambda0, lambda_bar);
    const double t = (yq + grid.half_width()) / grid.y_step();
    int node = static_cast<int>(std::floor(t));
    double weight = t - node;
    // Clamp roundoff at the extremes so node stays in [0, N-1] with w in [0,1].
    if (node < 0) { node = 0; weight = 0.0; }
    if (node >= grid.num_y_nodes()) { node = grid.num_y_nodes() - 1; weight = 1.0; }
    return {node, weight};
}

}  // namespace lifepde
