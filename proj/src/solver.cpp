#include "lifepde/solver.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "lifepde/tridiag.hpp"

namespace lifepde {

namespace {

bool same_grid(const LogGrid& a, const LogGrid& b) {
    return a.half_width() == b.half_width() && a.y_step() == b.y_step() &&
           a.tau_step() == b.tau_step() && a.horizon() == b.horizon();
}

std::vector<double> interior_lambdas(const HazardParams& p, const LogGrid& g) {
    std::vector<double> lam(g.num_interior());
    for (int n = 1; n <= g.num_interior(); ++n)
        lam[n - 1] = p.lambda_bar + std::exp(g.y(n));
    return lam;
}

double scaled_residual(double sub, double sup, const std::vector<double>& diag,
                       std::span<const double> x, std::span<const double> rhs) {
    const int n = static_cast<int>(diag.size());
    double worst = 0.0, rhs_inf = 0.0;
    for (int i = 0; i < n; ++i) {
        double mx = diag[i] * x[i];
        if (i > 0) mx += sub * x[i - 1];
        if (i + 1 < n) mx += sup * x[i + 1];
        worst = std::max(worst, std::abs(mx - rhs[i]));
        rhs_inf = std::max(rhs_inf, std::abs(rhs[i]));
    }
    return worst / (1.0 + rhs_inf);
}

// Implicit march for the density surfaces (no source; exact floor column).
Surface solve_density(const HazardParams& p, const LogGrid& g, bool loaded) {
    const double drift = shifted_drift(p) - 0.5 * p.sigma * p.sigma;
    const double floor_rate =
        loaded ? p.lambda_bar + p.alpha * std::sqrt(p.lambda_bar) : p.lambda_bar;
    const auto co = SchemeCoefficients::bands(p, g, drift, floor_rate);

    const auto lam = interior_lambdas(p, g);
    const int ni = g.num_interior(), levels = g.num_levels();
    const double k = g.tau_step();

    std::vector<double> kill(ni), diag(ni);
    for (int i = 0; i < ni; ++i) {
        kill[i] = loaded ? lam[i] + p.alpha * std::sqrt(lam[i]) : lam[i];
        diag[i] = co.diag_base + k * (kill[i] - floor_rate);
    }
    ThomasSolver solver(co.sub, co.sup, diag);

    Surface out(loaded ? SurfaceKind::DensityG : SurfaceKind::DensityF, 1, g, p);
    for (int i = 0; i < ni; ++i) out.value(i + 1, 0) = kill[i];
    for (int j = 0; j <= levels; ++j)
        out.floor_boundary()[j] = floor_rate * std::exp(-floor_rate * g.tau(j));
    {
        const double lam_top = p.lambda_bar + std::exp(g.half_width());
        out.top_boundary()[0] = loaded ? lam_top + p.alpha * std::sqrt(lam_top) : lam_top;
    }
    std::vector<double> rhs(ni);
    for (int j = 0; j < levels; ++j) {
        const auto cur = out.level(j);
        for (int i = 0; i < ni; ++i) rhs[i] = cur[i];
        rhs[0] -= co.sub * out.floor_boundary()[j + 1];
        // top boundary is 0 for tau > 0: no sup term
        auto next = out.level(j + 1);
        solver.solve(rhs, next);
        out.record_residual(scaled_residual(co.sub, co.sup, diag, next, rhs));
    }
    return out;
}

// Fully implicit march shared by P and B^(n).  contracts == 0 selects the
// n-independent limit P (unit top boundary, killing/source k lambda).
Surface solve_linear_price(const HazardParams& p, const LogGrid& g, int contracts,
                           const Surface* prev_a) {
    const double m = contracts == 0 ? 1.0 : static_cast<double>(contracts);
    const double drift = shifted_drift(p) - 0.5 * p.sigma * p.sigma;
    const double floor_rate =
        contracts == 0 ? p.lambda_bar
                       : m * p.lambda_bar + p.alpha * std::sqrt(m * p.lambda_bar);
    const double top = contracts == 0 ? 1.0 : m;
    const auto co = SchemeCoefficients::bands(p, g, drift, floor_rate);

    const auto lam = interior_lambdas(p, g);
    const int ni = g.num_interior(), levels = g.num_levels();
    const double k = g.tau_step();

    std::vector<double> kill(ni), diag(ni);
    for (int i = 0; i < ni; ++i) {
        kill[i] = contracts == 0 ? lam[i]
                                 : m * lam[i] + p.alpha * std::sqrt(m * lam[i]);
        diag[i] = co.diag_base + k * (kill[i] - floor_rate);
    }
    ThomasSolver solver(co.sub, co.sup, diag);

    Surface out(contracts == 0 ? SurfaceKind::BoundP : SurfaceKind::BoundB,
                contracts == 0 ? 1 : contracts, g, p);
    for (int j = 0; j <= levels; ++j) out.top_boundary()[j] = top;
    out.top_boundary()[0] = 0.0;  // terminal data: worthless at expiry
    // prev_a == nullptr means the zero surface.
    const bool have_prev = prev_a != nullptr;
    const bool rect_floor = contracts <= 1;  // matches the density floor quadrature

    std::vector<double> rhs(ni);
    auto& fl = out.floor_boundary();
    for (int j = 0; j < levels; ++j) {
        const double prev_fl = have_prev ? prev_a->floor_boundary()[j + 1] : 0.0;
        if (rect_floor) {
            fl[j + 1] = fl[j] + k * floor_rate * std::exp(-floor_rate * g.tau(j + 1)) *
                                    (prev_fl + 1.0);
        } else {
            fl[j + 1] = (fl[j] + k * floor_rate * (prev_fl + 1.0)) / (1.0 + k * floor_rate);
        }
        const auto cur = out.level(j);
        for (int i = 0; i < ni; ++i) {
            const double prev_v = have_prev ? prev_a->value(i + 1, j + 1) : 0.0;
            rhs[i] = cur[i] + k * kill[i] * (prev_v + 1.0);
        }
        rhs[0] -= co.sub * fl[j + 1];
        rhs[ni - 1] -= co.sup * top;
        auto next = out.level(j + 1);
        solver.solve(rhs, next);
        out.record_residual(scaled_residual(co.sub, co.sup, diag, next, rhs));
    }
    return out;
}

void check_prev(const Surface* prev, int contracts, const LogGrid& g) {
    if (contracts < 1) throw std::invalid_argument("contracts must be >= 1");
    if (contracts == 1) {
        if (prev != nullptr)
            throw std::invalid_argument("n = 1 takes no predecessor surface");
        return;
    }
    if (prev == nullptr)
        throw std::invalid_argument("n > 1 requires the PriceA(n-1) surface");
    if (prev->kind() != SurfaceKind::PriceA || prev->contracts() != contracts - 1)
        throw std::invalid_argument("predecessor must be PriceA(n-1)");
    if (!same_grid(prev->grid(), g))
        throw std::invalid_argument("predecessor surface solved on a different grid");
}

}  // namespace

SchemeCoefficients SchemeCoefficients::bands(const HazardParams& p, const LogGrid& g,
                                             double drift, double floor_kill_rate) {
    const double k = g.tau_step(), h = g.y_step(), s2 = p.sigma * p.sigma;
    SchemeCoefficients co{};
    co.sub = drift * k / (2.0 * h) - 0.5 * s2 * k / (h * h);
    co.sup = -drift * k / (2.0 * h) - 0.5 * s2 * k / (h * h);
    co.diag_base = 1.0 + s2 * k / (h * h) + k * floor_kill_rate;
    co.gradient_weight = s2 * (k / (2.0 * h)) * (k / (2.0 * h));
    co.drift_used = drift;
    return co;
}

Surface solve_density_f(const HazardParams& p, const LogGrid& g) {
    return solve_density(p, g, false);
}

Surface solve_density_g(const HazardParams& p, const LogGrid& g) {
    return solve_density(p, g, true);
}

Surface solve_bound_p(const HazardParams& p, const LogGrid& g) {
    return solve_linear_price(p, g, 0, nullptr);
}

Surface solve_net_premium(const HazardParams& p, const LogGrid& g) {
    HazardParams p0 = p;
    p0.alpha = 0.0;  // alpha enters P's scheme only through the drift shift
    return solve_linear_price(p0, g, 0, nullptr);
}

Surface solve_bound_b(const HazardParams& p, const LogGrid& g, int contracts,
                      const Surface* prev_a) {
    check_prev(prev_a, contracts, g);
    return solve_linear_price(p, g, contracts, prev_a);
}

Surface solve_price_a(const HazardParams& p, const LogGrid& g, int contracts,
                      const Surface* prev_a, GradientWeight gw) {
    check_prev(prev_a, contracts, g);
    const double m = contracts;
    const double drift = p.mu - 0.5 * p.sigma * p.sigma;
    const double floor_rate = m * p.lambda_bar + p.alpha * std::sqrt(m * p.lambda_bar);
    const double top = m;
    auto co = SchemeCoefficients::bands(p, g, drift, m * p.lambda_bar);
    if (gw == GradientWeight::Halved) co.gradient_weight *= 0.5;

    const auto lam = interior_lambdas(p, g);
    const int ni = g.num_interior(), levels = g.num_levels();
    const double k = g.tau_step();

    std::vector<double> diag(ni);
    for (int i = 0; i < ni; ++i)
        diag[i] = co.diag_base + k * m * (lam[i] - p.lambda_bar);
    ThomasSolver solver(co.sub, co.sup, diag);

    Surface out(SurfaceKind::PriceA, contracts, g, p);
    for (int j = 1; j <= levels; ++j) out.top_boundary()[j] = top;
    const bool have_prev = prev_a != nullptr;

    std::vector<double> rhs(ni);
    auto& fl = out.floor_boundary();
    for (int j = 0; j < levels; ++j) {
        const double prev_fl_new = have_prev ? prev_a->floor_boundary()[j + 1] : 0.0;
        fl[j + 1] = (fl[j] + k * floor_rate * (prev_fl_new + 1.0)) / (1.0 + k * floor_rate);
        const auto cur = out.level(j);
        for (int i = 0; i < ni; ++i) {
            const double grad = (i == 0)        ? cur[1] - fl[j]
                                : (i == ni - 1) ? top - cur[ni - 2]
                                                : cur[i + 1] - cur[i - 1];
            const double prev_old = have_prev ? prev_a->value(i + 1, j) : 0.0;
            const double jump = cur[i] - prev_old - 1.0;
            const double sharpe = std::sqrt(co.gradient_weight * grad * grad +
                                            k * k * m * lam[i] * jump * jump);
            const double prev_new = have_prev ? prev_a->value(i + 1, j + 1) : 0.0;
            rhs[i] = cur[i] + k * m * lam[i] * (prev_new + 1.0) + p.alpha * sharpe;
        }
        rhs[0] -= co.sub * fl[j + 1];
        rhs[ni - 1] -= co.sup * top;
        auto next = out.level(j + 1);
        solver.solve(rhs, next);
        out.record_residual(scaled_residual(co.sub, co.sup, diag, next, rhs));
    }
    return out;
}

std::vector<Surface> solve_price_a_chain(const HazardParams& p, const LogGrid& g,
                                         int n_max, GradientWeight gw) {
    if (n_max < 1) throw std::invalid_argument("solve_price_a_chain: n_max must be >= 1");
    std::vector<Surface> chain;
    chain.reserve(n_max);
    for (int m = 1; m <= n_max; ++m)
        chain.push_back(solve_price_a(p, g, m, m == 1 ? nullptr : &chain.back(), gw));
    return chain;
}

double closed_form_deterministic(const HazardParams& p, double lambda0, double t,
                                 double horizon, const DiscountCurve& discount,
                                 double quad_step) {
    if (p.sigma != 0.0)
        throw std::invalid_argument("closed_form_deterministic: requires sigma == 0");
    if (!(horizon > t)) throw std::invalid_argument("closed_form_deterministic: need T > t");
    if (quad_step <= 0.0) quad_step = 1e-4;
    const long steps = std::max(2L, std::lround((horizon - t) / quad_step));
    const double dt = (horizon - t) / steps;

    const auto rate = [&](double u) {
        const double lam = deterministic_hazard(p, lambda0, u - t);
        return lam + p.alpha * std::sqrt(lam);
    };
    double cum = 0.0;                    // int_t^s rate du, trapezoid
    double prev_rate = rate(t);
    double integral = 0.5 * dt * discount.forward(t, t) * prev_rate;  // e^{-0} = 1
    for (long i = 1; i <= steps; ++i) {
        const double s = t + i * dt;
        const double r = rate(s);
        cum += 0.5 * dt * (prev_rate + r);
        const double w = (i == steps) ? 0.5 : 1.0;
        integral += w * dt * discount.forward(t, s) * std::exp(-cum) * r;
        prev_rate = r;
    }
    return integral;
}

}  // namespace lifepde
