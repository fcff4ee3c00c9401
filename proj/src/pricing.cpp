#include "lifepde/pricing.hpp"

#include <cmath>
#include <cstdio>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

namespace lifepde {

std::string fmt6(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

double integrate_price(const Surface& density, const DiscountCurve& discount,
                       double lambda0) {
    if (density.kind() != SurfaceKind::DensityF && density.kind() != SurfaceKind::DensityG)
        throw std::invalid_argument("integrate_price: needs a density surface");
    const LogGrid& g = density.grid();
    const double k = g.tau_step();
    const int levels = g.num_levels();
    // Interpolating the density at each level and integrating equals
    // integrating per node and interpolating; do the former to share the
    // floor-clamp logic in Surface::value_at.
    double sum = 0.0;
    for (int j = 0; j <= levels; ++j) {
        const double w = (j == 0 || j == levels) ? 0.5 : 1.0;
        sum += w * discount(g.tau(j)) * density.value_at(lambda0, j);
    }
    return k * sum;
}

void PriceTable::write_csv(std::ostream& os) const {
    os << "lambda0,net_premium,P,A_per_contract,B_per_contract,finite_charge,"
          "mortality_charge\n";
    for (const auto& r : rows) {
        os << fmt6(r.lambda0) << ',' << fmt6(r.net_premium) << ',' << fmt6(r.limit_p)
           << ',' << fmt6(r.a_per_contract) << ',' << fmt6(r.b_per_contract) << ','
           << fmt6(r.finite_charge) << ',' << fmt6(r.mortality_charge) << "\n";
    }
}

void PriceTable::write_json(std::ostream& os) const {
    os << "{\n  \"params\": {\"mu\": " << fmt6(params.mu) << ", \"sigma\": "
       << fmt6(params.sigma) << ", \"lambda_bar\": " << fmt6(params.lambda_bar)
       << ", \"alpha\": " << fmt6(params.alpha) << "},\n";
    os << "  \"grid\": {\"M\": " << fmt6(grid.half_width()) << ", \"h\": "
       << fmt6(grid.y_step()) << ", \"k\": " << fmt6(grid.tau_step()) << ", \"T\": "
       << fmt6(grid.horizon()) << "},\n";
    os << "  \"n\": " << contracts << ",\n  \"rows\": [\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        os << "    {\"lambda0\": " << fmt6(r.lambda0) << ", \"net_premium\": "
           << fmt6(r.net_premium) << ", \"P\": " << fmt6(r.limit_p)
           << ", \"A_per_contract\": " << fmt6(r.a_per_contract)
           << ", \"B_per_contract\": " << fmt6(r.b_per_contract)
           << ", \"finite_charge\": " << fmt6(r.finite_charge)
           << ", \"mortality_charge\": " << fmt6(r.mortality_charge) << "}"
           << (i + 1 < rows.size() ? ",\n" : "\n");
    }
    os << "  ]\n}\n";
}

PriceTable build_table(const HazardParams& params, const LogGrid& grid,
                       const std::vector<double>& lambda0s, int contracts,
                       const DiscountCurve& discount) {
    if (contracts < 1) throw std::invalid_argument("build_table: n must be >= 1");
    const Surface f = solve_density_f(params, grid);
    HazardParams p0 = params;
    p0.alpha = 0.0;
    const Surface f_net = solve_density_f(p0, grid);
    const Surface g = solve_density_g(params, grid);
    const auto chain = solve_price_a_chain(params, grid, contracts);
    const Surface& a_top = chain.back();
    std::optional<Surface> b;
    if (contracts > 1)
        b.emplace(solve_bound_b(params, grid, contracts, &chain[contracts - 2]));

    PriceTable table{params, grid, contracts, {}};
    for (const double lam0 : lambda0s) {
        PriceRow r{};
        r.lambda0 = lam0;
        r.net_premium = integrate_price(f_net, discount, lam0);
        r.limit_p = integrate_price(f, discount, lam0);
        r.a_per_contract = a_top.time0_value(lam0) / contracts;
        r.b_per_contract = contracts == 1 ? integrate_price(g, discount, lam0)
                                          : b->time0_value(lam0) / contracts;
        r.finite_charge = r.a_per_contract - r.limit_p;
        r.mortality_charge = r.limit_p - r.net_premium;
        if (r.finite_charge < -5e-3)
            throw std::runtime_error("build_table: finite-portfolio charge below -5e-3");
        if (r.mortality_charge < -1e-6)
            throw std::runtime_error("build_table: negative stochastic-mortality charge");
        table.rows.push_back(r);
    }
    return table;
}

}  // namespace lifepde
