#pragma once

#include <vector>

#include "lifepde/discount.hpp"
#include "lifepde/grid.hpp"
#include "lifepde/hazard.hpp"
#include "lifepde/surface.hpp"

namespace lifepde {

/// Bands of the implicit operator in log coordinates.  Central differencing
/// of the drift makes its contributions to sub and sup cancel, so
/// sub + sup == -sigma^2 k / h^2 independently of the drift.
struct SchemeCoefficients {
    double sub;              // drift k/(2h) - sigma^2 k/(2h^2)
    double diag_base;        // 1 + sigma^2 k/h^2 + k * (killing rate at the floor)
    double sup;              // -drift k/(2h) - sigma^2 k/(2h^2)
    double gradient_weight;  // weight on the squared y-gradient inside the Sharpe term
    double drift_used;

    static SchemeCoefficients bands(const HazardParams& params, const LogGrid& grid,
                                    double drift, double floor_kill_rate);
};

/// Weight on the squared gradient inside the nonlinear Sharpe term of the
/// risk-adjusted solver.  Transformed is sigma^2 (k/2h)^2, the value obtained
/// by carrying the squared-gradient term into log coordinates; Halved is half
/// of that, kept selectable for comparison runs.
enum class GradientWeight { Transformed, Halved };

/// Mortality density f(y, tau) = E[lambda_s e^{-int lambda}] under the pricing
/// measure (drift mu + alpha sigma), solved implicitly on the grid.
/// Initial data lambda_n; floor boundary lambda_bar e^{-lambda_bar tau};
/// top boundary 0 for tau > 0.
Surface solve_density_f(const HazardParams& params, const LogGrid& grid);

/// Loaded density g: killing rate and initial data lambda + alpha sqrt(lambda),
/// floor boundary (lambda_bar + alpha sqrt(lambda_bar)) e^{-(...) tau}.
Surface solve_density_g(const HazardParams& params, const LogGrid& grid);

/// Diversified-limit price P: fully implicit, drift mu + alpha sigma - sigma^2/2,
/// killing k lambda_n, source k lambda_n, top boundary 1.  The floor column is
/// accumulated as the running right-endpoint quadrature of the exact floor
/// density, which makes the solve agree with the time-accumulated density f at
/// machine precision away from the top boundary.
Surface solve_bound_p(const HazardParams& params, const LogGrid& grid);

/// Net premium surface: the same machinery as solve_bound_p with alpha = 0
/// (physical-measure expectation).
Surface solve_net_premium(const HazardParams& params, const LogGrid& grid);

/// Linear upper bound B^(n).  prev_a is the PriceA(n-1) surface on the same
/// grid, or nullptr for n = 1 (zero surface).  Killing and source use the rate
/// n lambda + alpha sqrt(n lambda); top boundary n; floor column accumulated
/// as for P when n = 1 and by backward Euler on the floor ODE otherwise.
Surface solve_bound_b(const HazardParams& params, const LogGrid& grid, int contracts,
                      const Surface* prev_a);

/// Risk-adjusted price A^(n), semi-implicit: linear part (drift mu - sigma^2/2,
/// diffusion, killing k n lambda_n) implicit, the Sharpe term alpha * S
/// explicit at the old level with central differences (one-sided against the
/// boundary columns at the first and last interior nodes), and the source
/// k n lambda_n (prev + 1) taken at the new level.  Floor column by backward
/// Euler on the floor ODE dA/dtau = (n lb + alpha sqrt(n lb)) (prev + 1 - A).
Surface solve_price_a(const HazardParams& params, const LogGrid& grid, int contracts,
                      const Surface* prev_a,
                      GradientWeight gw = GradientWeight::Transformed);

/// A^(1)..A^(n_max) by the recursion above.
std::vector<Surface> solve_price_a_chain(const HazardParams& params, const LogGrid& grid,
                                         int n_max,
                                         GradientWeight gw = GradientWeight::Transformed);

/// Deterministic-hazard price (sigma == 0, constant drift):
///   int_t^T F(t;s) e^{-int_t^s (lambda + alpha sqrt(lambda)) du}
///           (lambda(s) + alpha sqrt(lambda(s))) ds
/// by composite trapezoid along the deterministic hazard path.  quad_step <= 0
/// selects the default step of 1e-4 years.
double closed_form_deterministic(const HazardParams& params, double lambda0, double t,
                                 double horizon, const DiscountCurve& discount,
                                 double quad_step = -1.0);

}  // namespace lifepde
