#pragma once

#include <cstdint>

#include "lifepde/discount.hpp"
#include "lifepde/hazard.hpp"

namespace lifepde {

enum class Measure { Physical, Shifted };

/// Monte Carlo controls.  Paths use exact lognormal transitions of the hazard
/// (no state discretization bias); only the survival integral along each path
/// is discretized, by trapezoid at steps_per_year resolution.  Each path draws
/// from its own substream derived from (seed, path index), so results are
/// independent of any batching and identical runs are bit-identical.
struct McConfig {
    long paths = 200000;
    int steps_per_year = 100;
    std::uint64_t seed = 1;
    Measure measure = Measure::Shifted;
};

struct McEstimate {
    double mean = 0.0;
    double std_error = 0.0;  // sample standard deviation / sqrt(paths)
    long paths = 0;
};

/// Limit price P = int F(0,s) E[lambda_s e^{-int lambda}] ds under the shifted
/// measure (drift mu + alpha sigma).  Requires cfg.measure == Shifted.
McEstimate estimate_p(const HazardParams& params, double lambda0, double horizon,
                      const DiscountCurve& discount, const McConfig& cfg);

/// Upper bound B: as estimate_p with the loaded rate lambda + alpha sqrt(lambda)
/// in both the density factor and the survival exponent.
McEstimate estimate_b(const HazardParams& params, double lambda0, double horizon,
                      const DiscountCurve& discount, const McConfig& cfg);

/// Net premium: physical-measure expectation (drift mu).  Requires
/// cfg.measure == Physical.
McEstimate estimate_net(const HazardParams& params, double lambda0, double horizon,
                        const DiscountCurve& discount, const McConfig& cfg);

/// Pointwise density oracle E[rate(lambda_s) e^{-int_0^s rate(lambda)}] at a
/// single time s, under the measure selected by cfg (loaded selects the
/// alpha-loaded rate).  Used to validate the density surfaces.
McEstimate estimate_density_point(const HazardParams& params, double lambda0, double s,
                                  const McConfig& cfg, bool loaded);

/// Per-path survival form of estimate_p for a flat discount curve:
/// 1 - e^{-int_0^T lambda}.  Equal to the density form up to path-integral
/// quadrature error; exposed for cross-checking.
McEstimate estimate_p_survival_form(const HazardParams& params, double lambda0,
                                    double horizon, const McConfig& cfg);

}  // namespace lifepde
