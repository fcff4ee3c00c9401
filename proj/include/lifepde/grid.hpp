#pragma once

namespace lifepde {

/// Uniform lattice on [-M, M] x [0, T] in the transformed coordinates
/// y = ln(lambda - lambda_bar) (state) and tau = time to expiry.
///
/// Nodes y_n = -M + n h for n = 0..N with N = 2M/h, levels tau_j = j k for
/// j = 0..J with J = T/k.  N and J must come out integral (relative tolerance
/// 1e-9 before rounding); construction rejects grids with N < 3 or J < 1.
class LogGrid {
public:
    LogGrid(double half_width, double y_step, double tau_step, double horizon);

    double half_width() const { return half_width_; }  // M
    double y_step() const { return y_step_; }          // h
    double tau_step() const { return tau_step_; }      // k
    double horizon() const { return horizon_; }        // T

    int num_y_nodes() const { return n_; }     // N; nodes are y_0..y_N
    int num_interior() const { return n_ - 1; }
    int num_levels() const { return j_; }      // J; levels are tau_0..tau_J

    double y(int node) const { return -half_width_ + node * y_step_; }
    double tau(int level) const { return level * tau_step_; }

    // Smallest / largest lambda representable strictly inside the grid.
    double lambda_min(double lambda_bar) const;
    double lambda_max(double lambda_bar) const;

private:
    double half_width_, y_step_, tau_step_, horizon_;
    int n_, j_;
};

/// y = ln(lambda - lambda_bar); rejects lambda <= lambda_bar (the floor maps
/// to the y = -M boundary, which is handled separately by the solvers).
double y_of_lambda(double lambda, double lambda_bar);

double lambda_of_y(double y, double lambda_bar);

/// Node bracket for evaluating grid surfaces at an off-node lambda0:
/// node is the largest n with y_n <= y(lambda0) and weight w in [0,1] gives
/// the y-linear interpolation value (1-w) v[node] + w v[node+1].
struct Bracket {
    int node = 0;
    double weight = 0.0;
};

Bracket bracket_and_weights(const LogGrid& grid, double lambda0, double lambda_bar);

}  // namespace lifepde
