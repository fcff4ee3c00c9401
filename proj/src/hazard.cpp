#include "lifepde/hazard.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace lifepde {

HazardParams::HazardParams(double mu_, double sigma_, double lambda_bar_, double alpha_)
    : mu(mu_), sigma(sigma_), lambda_bar(lambda_bar_), alpha(alpha_) {
    if (!(lambda_bar > 0.0))
        throw std::invalid_argument("HazardParams: lambda_bar must be > 0");
    if (!(sigma >= 0.0))
        throw std::invalid_argument("HazardParams: sigma must be >= 0");
    if (!(alpha >= 0.0) || alpha > std::sqrt(lambda_bar))
        throw std::invalid_argument("HazardParams: alpha must satisfy 0 <= alpha <= sqrt(lambda_bar)");
    if (std::isnan(mu))
        throw std::invalid_argument("HazardParams: mu is NaN");
}

HazardState::HazardState(double lambda0_, double t_, const HazardParams& params)
    : lambda0(lambda0_), t(t_) {
    if (!(lambda0 >= params.lambda_bar))
        throw std::invalid_argument("HazardState: lambda0 must be >= lambda_bar");
    if (!(t >= 0.0))
        throw std::invalid_argument("HazardState: t must be >= 0");
}

double shifted_drift(const HazardParams& params) {
    return params.mu + params.alpha * params.sigma;
}

double exact_step(const HazardParams& params, double lambda, double dt, double z,
                  double drift) {
    if (!(dt > 0.0)) throw std::invalid_argument("exact_step: dt must be > 0");
    if (!(lambda >= params.lambda_bar))
        throw std::invalid_argument("exact_step: lambda below the floor");
    const double excess = lambda - params.lambda_bar;
    if (excess == 0.0) return params.lambda_bar;  // absorbing floor
    const double s = params.sigma;
    return params.lambda_bar +
           excess * std::exp((drift - 0.5 * s * s) * dt + s * std::sqrt(dt) * z);
}

double deterministic_hazard(const HazardParams& params, double lambda0, double t) {
    if (params.sigma != 0.0)
        throw std::invalid_argument("deterministic_hazard: requires sigma == 0");
    if (!(lambda0 >= params.lambda_bar))
        throw std::invalid_argument("deterministic_hazard: lambda0 below the floor");
    return params.lambda_bar + (lambda0 - params.lambda_bar) * std::exp(params.mu * t);
}

}  // namespace lifepde
