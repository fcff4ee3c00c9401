#pragma once

namespace lifepde {

/// Parameters of the floored geometric hazard diffusion
///
///   d lambda_t = mu (lambda_t - lambda_bar) dt + sigma (lambda_t - lambda_bar) dW_t
///
/// together with the risk loading alpha (the instantaneous Sharpe ratio the
/// insurer targets).  The floor lambda_bar is absorbing: once lambda hits it,
/// it stays there.
struct HazardParams {
    double mu = 0.0;          // drift, per year (constant)
    double sigma = 0.0;       // volatility, per sqrt-year; exactly 0 means deterministic hazard
    double lambda_bar = 0.0;  // hazard floor, per year; must be > 0
    double alpha = 0.0;       // Sharpe ratio, dimensionless; 0 <= alpha <= sqrt(lambda_bar)

    HazardParams() = default;
    // Validates lambda_bar > 0, sigma >= 0 and 0 <= alpha <= sqrt(lambda_bar);
    // throws std::invalid_argument otherwise.
    HazardParams(double mu, double sigma, double lambda_bar, double alpha);

    bool deterministic() const { return sigma == 0.0; }
    // Negative drift is accepted (the lognormal solution stays well defined)
    // but flagged so callers can warn.
    bool negative_drift() const { return mu < 0.0; }
};

/// Valuation state: initial hazard level and valuation time.
struct HazardState {
    double lambda0 = 0.0;  // >= lambda_bar; equality is the absorbed-floor case
    double t = 0.0;        // valuation time in years, >= 0

    HazardState() = default;
    HazardState(double lambda0, double t, const HazardParams& params);
};

/// Drift of the hazard under the pricing measure: mu + alpha * sigma.
double shifted_drift(const HazardParams& params);

/// One exact lognormal transition over dt with standard-normal draw z, under
/// the measure whose drift is `drift` (pass params.mu for the physical
/// measure, shifted_drift(params) for the pricing measure):
///
///   lambda' = lambda_bar + (lambda - lambda_bar)
///             * exp((drift - sigma^2/2) dt + sigma sqrt(dt) z)
///
/// Returns exactly lambda_bar when lambda == lambda_bar (absorbing floor).
double exact_step(const HazardParams& params, double lambda, double dt, double z,
                  double drift);

/// Deterministic hazard path for sigma == 0 with constant drift:
/// lambda(t) = lambda_bar + (lambda0 - lambda_bar) e^{mu t}.
/// Throws std::invalid_argument if params.sigma != 0.
double deterministic_hazard(const HazardParams& params, double lambda0, double t);

}  // namespace lifepde
