#include "lifepde/mc.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace lifepde {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Substream engine for one path: deterministic in (seed, path index) and
// independent of how paths are batched.
std::mt19937_64 path_engine(std::uint64_t seed, long path) {
    return std::mt19937_64(splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(path))));
}

void check_config(const McConfig& cfg, Measure required) {
    if (cfg.paths < 1) throw std::invalid_argument("McConfig: paths must be >= 1");
    if (cfg.steps_per_year < 1)
        throw std::invalid_argument("McConfig: steps_per_year must be >= 1");
    if (cfg.measure != required)
        throw std::invalid_argument(required == Measure::Shifted
                                        ? "estimator requires the shifted measure"
                                        : "estimator requires the physical measure");
}

// Welford accumulation: stable, and exactly zero spread when every path
// produces the same value (the absorbed-floor and sigma = 0 cases).
struct RunningMoments {
    long count = 0;
    double mean = 0.0;
    double m2 = 0.0;

    void add(double v) {
        ++count;
        const double d = v - mean;
        mean += d / count;
        m2 += d * (v - mean);
    }
    McEstimate estimate() const {
        double se = 0.0;
        if (count > 1) se = std::sqrt(m2 / (count - 1) / count);
        return {mean, se, count};
    }
};

// One path's trapezoid accumulation of int_0^T F(0,s) rate(lambda_s) e^{-H(s)} ds
// with H the running trapezoid of rate(lambda).  Returns the path functional.
template <typename RateFn>
double path_price(const HazardParams& p, double lambda0, double horizon,
                  const DiscountCurve& discount, double drift, long steps,
                  RateFn rate, std::mt19937_64& eng) {
    std::normal_distribution<double> normal;
    const double dt = horizon / steps;
    double lam = lambda0;
    double r_prev = rate(lam);
    double cum = 0.0;
    double integral = 0.5 * dt * discount(0.0) * r_prev;
    for (long i = 1; i <= steps; ++i) {
        const double z = normal(eng);
        lam = exact_step(p, lam, dt, z, drift);
        const double r = rate(lam);
        cum += 0.5 * dt * (r_prev + r);
        const double w = (i == steps) ? 0.5 : 1.0;
        integral += w * dt * discount(i * dt) * std::exp(-cum) * r;
        r_prev = r;
    }
    return integral;
}

template <typename RateFn>
McEstimate run_paths(const HazardParams& p, double lambda0, double horizon,
                     const DiscountCurve& discount, double drift, const McConfig& cfg,
                     RateFn rate) {
    if (!(lambda0 >= p.lambda_bar))
        throw std::invalid_argument("Monte Carlo: lambda0 below the floor");
    if (!(horizon > 0.0)) throw std::invalid_argument("Monte Carlo: horizon must be > 0");
    const long steps = std::lround(horizon * cfg.steps_per_year);
    RunningMoments acc;
    for (long path = 0; path < cfg.paths; ++path) {
        auto eng = path_engine(cfg.seed, path);
        acc.add(path_price(p, lambda0, horizon, discount, drift, steps, rate, eng));
    }
    return acc.estimate();
}

}  // namespace

McEstimate estimate_p(const HazardParams& p, double lambda0, double horizon,
                      const DiscountCurve& discount, const McConfig& cfg) {
    check_config(cfg, Measure::Shifted);
    return run_paths(p, lambda0, horizon, discount, shifted_drift(p), cfg,
                     [](double lam) { return lam; });
}

McEstimate estimate_b(const HazardParams& p, double lambda0, double horizon,
                      const DiscountCurve& discount, const McConfig& cfg) {
    check_config(cfg, Measure::Shifted);
    const double alpha = p.alpha;
    return run_paths(p, lambda0, horizon, discount, shifted_drift(p), cfg,
                     [alpha](double lam) { return lam + alpha * std::sqrt(lam); });
}

McEstimate estimate_net(const HazardParams& p, double lambda0, double horizon,
                        const DiscountCurve& discount, const McConfig& cfg) {
    check_config(cfg, Measure::Physical);
    return run_paths(p, lambda0, horizon, discount, p.mu, cfg,
                     [](double lam) { return lam; });
}

McEstimate estimate_density_point(const HazardParams& p, double lambda0, double s,
                                  const McConfig& cfg, bool loaded) {
    if (!(s > 0.0)) throw std::invalid_argument("estimate_density_point: s must be > 0");
    const double drift = cfg.measure == Measure::Shifted ? shifted_drift(p) : p.mu;
    const double alpha = p.alpha;
    const auto rate = [loaded, alpha](double lam) {
        return loaded ? lam + alpha * std::sqrt(lam) : lam;
    };
    const long steps = std::lround(s * cfg.steps_per_year);
    std::normal_distribution<double> normal;
    const double dt = s / std::max(steps, 1L);
    RunningMoments acc;
    for (long path = 0; path < cfg.paths; ++path) {
        auto eng = path_engine(cfg.seed, path);
        double lam = lambda0, r_prev = rate(lam), cum = 0.0;
        for (long i = 1; i <= steps; ++i) {
            const double z = normal(eng);
            lam = exact_step(p, lam, dt, z, drift);
            const double r = rate(lam);
            cum += 0.5 * dt * (r_prev + r);
            r_prev = r;
        }
        acc.add(rate(lam) * std::exp(-cum));
    }
    return acc.estimate();
}

McEstimate estimate_p_survival_form(const HazardParams& p, double lambda0,
                                    double horizon, const McConfig& cfg) {
    check_config(cfg, Measure::Shifted);
    const long steps = std::lround(horizon * cfg.steps_per_year);
    const double dt = horizon / steps;
    std::normal_distribution<double> normal;
    RunningMoments acc;
    for (long path = 0; path < cfg.paths; ++path) {
        auto eng = path_engine(cfg.seed, path);
        double lam = lambda0, prev = lam, cum = 0.0;
        for (long i = 1; i <= steps; ++i) {
            const double z = normal(eng);
            lam = exact_step(p, lam, dt, z, shifted_drift(p));
            cum += 0.5 * dt * (prev + lam);
            prev = lam;
        }
        acc.add(1.0 - std::exp(-cum));
    }
    return acc.estimate();
}

}  // namespace lifepde
