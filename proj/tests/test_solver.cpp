#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "lifepde/mc.hpp"
#include "lifepde/solver.hpp"
#include "reference_values.hpp"

using namespace lifepde;

namespace {

// Right-endpoint accumulation of a density surface through each level: the
// discrete counterpart of integrating the density in time, which the implicit
// price solves reproduce algebraically away from the top boundary.
std::vector<double> rect_accumulate(const Surface& density, int node) {
    const int levels = density.grid().num_levels();
    const double k = density.grid().tau_step();
    std::vector<double> out(levels + 1, 0.0);
    for (int j = 1; j <= levels; ++j) out[j] = out[j - 1] + k * density.value(node, j);
    return out;
}

}  // namespace

TEST_CASE("density surfaces: initial data and boundary columns") {
    const HazardParams p = reference_params();
    const LogGrid g(10.0, 0.1, 0.1, 10.0);  // coarse in time for speed
    const Surface f = solve_density_f(p, g);

    for (int n = 1; n <= g.num_interior(); ++n)
        CHECK(f.value(n, 0) == doctest::Approx(0.02 + std::exp(g.y(n))).epsilon(1e-15));
    // floor column lambda_bar e^{-lambda_bar tau}; at tau = 10: 0.02 e^{-0.2}
    CHECK(f.floor_boundary()[g.num_levels()] ==
          doctest::Approx(0.02 * std::exp(-0.2)).epsilon(1e-14));
    for (int j = 1; j <= g.num_levels(); ++j) CHECK(f.top_boundary()[j] == 0.0);

    SUBCASE("densities stay positive") {
        const Surface gg = solve_density_g(p, g);
        for (int j = 0; j <= g.num_levels(); ++j)
            for (int n = 1; n <= g.num_interior(); ++n) {
                CHECK(f.value(n, j) >= 0.0);
                CHECK(gg.value(n, j) >= 0.0);
            }
    }
}

TEST_CASE("alpha = 0 collapses g onto f") {
    const HazardParams p0(0.04, 0.10, 0.02, 0.0);
    const LogGrid g(10.0, 0.1, 0.1, 10.0);
    const Surface f = solve_density_f(p0, g);
    const Surface gg = solve_density_g(p0, g);
    for (int j = 0; j <= g.num_levels(); ++j)
        for (int n = 1; n <= g.num_interior(); ++n)
            CHECK(f.value(n, j) == gg.value(n, j));
}

TEST_CASE("scheme coefficient identity: sub + sup = -sigma^2 k / h^2") {
    const HazardParams p = reference_params();
    const LogGrid g = reference_grid();
    for (double drift : {0.045, 0.035, -0.02}) {
        const auto co = SchemeCoefficients::bands(p, g, drift, p.lambda_bar);
        CHECK(co.sub + co.sup ==
              doctest::Approx(-p.sigma * p.sigma * g.tau_step() /
                              (g.y_step() * g.y_step())).epsilon(1e-12));
    }
}

TEST_CASE("price solve equals the accumulated density away from the top boundary") {
    const HazardParams p = reference_params();
    const LogGrid g(10.0, 0.25, 0.05, 5.0);
    const Surface f = solve_density_f(p, g);
    const Surface gg = solve_density_g(p, g);
    const Surface pp = solve_bound_p(p, g);
    const Surface bb = solve_bound_b(p, g, 1, nullptr);
    double worst_p = 0.0, worst_b = 0.0;
    for (int n = 1; n <= g.num_interior() - 1; ++n) {
        const auto acc_f = rect_accumulate(f, n);
        const auto acc_g = rect_accumulate(gg, n);
        for (int j = 0; j <= g.num_levels(); ++j) {
            worst_p = std::max(worst_p, std::abs(pp.value(n, j) - acc_f[j]));
            worst_b = std::max(worst_b, std::abs(bb.value(n, j) - acc_g[j]));
        }
    }
    CHECK(worst_p <= 1e-9);
    CHECK(worst_b <= 1e-9);
}

TEST_CASE("sigma = 0 makes the limit price equal the net premium surface") {
    const HazardParams p(0.04, 0.0, 0.02, 0.10);
    const LogGrid g(10.0, 0.2, 0.1, 10.0);
    const Surface pp = solve_bound_p(p, g);
    const Surface net = solve_net_premium(p, g);
    for (int j = 0; j <= g.num_levels(); ++j)
        for (int n = 1; n <= g.num_interior(); ++n)
            CHECK(pp.value(n, j) == net.value(n, j));
}

TEST_CASE("risk-adjusted solve, deterministic constant hazard") {
    // sigma = 0 and mu = 0: every interior node obeys the constant-hazard
    // closed form 1 - e^{-(lambda + alpha sqrt(lambda)) T}.
    const HazardParams p(0.0, 0.0, 0.02, 0.10);
    const LogGrid g = reference_grid();
    const Surface a = solve_price_a(p, g, 1, nullptr);
    for (double lam0 : {0.03, 0.04, 0.05, 0.07}) {
        const double rate = lam0 + 0.10 * std::sqrt(lam0);
        const double want = 1.0 - std::exp(-rate * 10.0);
        CHECK(std::abs(a.time0_value(lam0) - want) <= 1e-3);
    }
    // spot value from the stated example: lambda0 = 0.04 -> 1 - e^{-0.6}
    CHECK(std::abs(a.time0_value(0.04) - 0.45118836390597356) < 1e-3);
}

TEST_CASE("bound solves under degenerate parameters") {
    const LogGrid g(10.0, 0.2, 0.05, 10.0);
    SUBCASE("alpha = 0: B equals the net premium per contract") {
        const HazardParams p0(0.04, 0.10, 0.02, 0.0);
        const Surface b1 = solve_bound_b(p0, g, 1, nullptr);
        const Surface net = solve_net_premium(p0, g);
        double worst = 0.0;
        for (int j = 0; j <= g.num_levels(); ++j)
            for (int n = 1; n <= g.num_interior(); ++n)
                worst = std::max(worst, std::abs(b1.value(n, j) - net.value(n, j)));
        CHECK(worst <= 1e-6);
    }
}

TEST_CASE("predecessor surface validation") {
    const HazardParams p = reference_params();
    const LogGrid g(5.0, 0.5, 0.5, 5.0);
    const LogGrid g2(5.0, 0.5, 0.25, 5.0);
    const Surface a1 = solve_price_a(p, g, 1, nullptr);
    const Surface a1_other = solve_price_a(p, g2, 1, nullptr);
    CHECK_THROWS_AS(solve_price_a(p, g, 1, &a1), std::invalid_argument);
    CHECK_THROWS_AS(solve_price_a(p, g, 2, nullptr), std::invalid_argument);
    CHECK_THROWS_AS(solve_price_a(p, g, 3, &a1), std::invalid_argument);
    CHECK_THROWS_AS(solve_price_a(p, g, 2, &a1_other), std::invalid_argument);
    const Surface b1 = solve_bound_b(p, g, 1, nullptr);
    CHECK_THROWS_AS(solve_bound_b(p, g, 2, &b1), std::invalid_argument);
    CHECK_NOTHROW(solve_price_a(p, g, 2, &a1));
}

TEST_CASE("contract-count properties on the default grid") {
    const HazardParams p = reference_params();
    const LogGrid g = reference_grid();
    const auto chain = solve_price_a_chain(p, g, 3);
    const Surface pp = solve_bound_p(p, g);

    SUBCASE("prices lie in [0, n] and increase along y") {
        for (int m = 1; m <= 3; ++m) {
            const Surface& a = chain[m - 1];
            for (int j = 0; j <= g.num_levels(); ++j) {
                for (int n = 1; n <= g.num_interior(); ++n) {
                    CHECK(a.value(n, j) >= -1e-12);
                    CHECK(a.value(n, j) <= m + 1e-12);
                    if (n > 1) CHECK(a.value(n, j) >= a.value(n - 1, j) - 1e-9);
                }
            }
        }
    }
    SUBCASE("adding a contract never costs more than the benefit") {
        for (int m = 2; m <= 3; ++m)
            for (int j = 0; j <= g.num_levels(); ++j)
                for (int n = 1; n <= g.num_interior(); ++n)
                    CHECK(chain[m - 1].value(n, j) <=
                          chain[m - 2].value(n, j) + 1.0 + 1e-12);
    }
    SUBCASE("sandwich n P <= A <= B with discretization slack") {
        for (int m = 1; m <= 3; ++m) {
            const Surface b = solve_bound_b(p, g, m, m == 1 ? nullptr : &chain[m - 2]);
            for (int j = 0; j <= g.num_levels(); ++j)
                for (int n = 1; n <= g.num_interior(); ++n) {
                    CHECK(m * pp.value(n, j) <= chain[m - 1].value(n, j) + 5e-3);
                    CHECK(chain[m - 1].value(n, j) <= b.value(n, j) + 5e-3);
                }
        }
    }
    SUBCASE("frozen regression: two-contract price at lambda0 = 0.030") {
        CHECK(chain[1].time0_value(0.030) / 2.0 ==
              doctest::Approx(0.3686134301867494).epsilon(1e-9));
    }
    SUBCASE("halved gradient weight lowers the price but keeps the sandwich") {
        const Surface a_half = solve_price_a(p, g, 1, nullptr, GradientWeight::Halved);
        for (int j = 0; j <= g.num_levels(); ++j)
            for (int n = 1; n <= g.num_interior(); ++n) {
                CHECK(a_half.value(n, j) <= chain[0].value(n, j) + 1e-12);
                CHECK(pp.value(n, j) <= a_half.value(n, j) + 5e-3);
            }
    }
    SUBCASE("solver residuals stay tiny") {
        CHECK(pp.max_scaled_residual() <= 1e-10);
        for (const Surface& a : chain) CHECK(a.max_scaled_residual() <= 1e-10);
    }
}

TEST_CASE("closed-form deterministic price") {
    const DiscountCurve flat;
    SUBCASE("constant hazard") {
        const HazardParams p(0.0, 0.0, 0.04 /*floor = level*/, 0.1);
        // constant lambda = 0.04 via lambda0 == lambda_bar
        CHECK(closed_form_deterministic(p, 0.04, 0.0, 10.0, flat) ==
              doctest::Approx(1.0 - std::exp(-0.6)).epsilon(1e-8));
        const HazardParams p0(0.0, 0.0, 0.04, 0.0);
        CHECK(closed_form_deterministic(p0, 0.04, 0.0, 10.0, flat) ==
              doctest::Approx(1.0 - std::exp(-0.4)).epsilon(1e-8));
    }
    SUBCASE("rejects sigma != 0") {
        CHECK_THROWS_AS(
            closed_form_deterministic(reference_params(), 0.03, 0.0, 10.0, flat),
            std::invalid_argument);
    }
    SUBCASE("quadrature oracle agrees with the sigma = 0 grid solve") {
        const HazardParams p(0.04, 0.0, 0.02, 0.0);
        const double want = closed_form_deterministic(p, 0.03, 0.0, 10.0, flat, 1e-4);
        const Surface net = solve_net_premium(p, reference_grid());
        CHECK(std::abs(net.time0_value(0.03) - want) <= 2e-3);
    }
}

TEST_CASE("density surface matches the Monte Carlo kernel at a single maturity") {
    const HazardParams p = reference_params();
    const LogGrid g = reference_grid();
    const Surface f = solve_density_f(p, g);
    McConfig cfg;
    cfg.paths = 200000;
    cfg.steps_per_year = 100;
    cfg.seed = 4242;
    cfg.measure = Measure::Shifted;
    const McEstimate est = estimate_density_point(p, 0.04, 5.0, cfg, false);
    const double pde = f.value_at(0.04, 500);  // tau = 5 at k = 0.01
    CHECK(std::abs(pde - est.mean) <= 3.0 * est.std_error);
}
