#include "lifepde/commands.hpp"

#include <cmath>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "lifepde/mc.hpp"
#include "lifepde/pricing.hpp"

namespace lifepde {

namespace {

CommandResult config_error(const std::string& msg) {
    return {kConfigError, "", msg};
}

template <typename Fn>
CommandResult guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const std::invalid_argument& e) {
        return {kConfigError, "", e.what()};
    } catch (const std::exception& e) {
        return {kSolverError, "", e.what()};
    }
}

}  // namespace

CommandResult cmd_price(const RunConfig& cfg) {
    return guarded([&]() -> CommandResult {
        if (cfg.n.size() != 1)
            return config_error("price: config must specify exactly one n (use converge for sweeps)");
        const PriceTable table =
            build_table(cfg.hazard(), cfg.grid(), cfg.lambda0, cfg.n.front(), cfg.discount());
        std::ostringstream os;
        if (cfg.format == "json")
            table.write_json(os);
        else
            table.write_csv(os);
        return {kOk, os.str(), ""};
    });
}

CommandResult cmd_converge(const RunConfig& cfg) {
    return guarded([&]() -> CommandResult {
        if (cfg.n.empty()) return config_error("converge: n list must not be empty");
        const HazardParams params = cfg.hazard();
        const LogGrid grid = cfg.grid();
        const DiscountCurve discount = cfg.discount();
        int n_max = 1;
        for (int n : cfg.n) n_max = std::max(n_max, n);

        const Surface f = solve_density_f(params, grid);
        const auto chain = solve_price_a_chain(params, grid, n_max);

        std::ostringstream os;
        os << "lambda0,n,A_per_contract,B_per_contract,P,gap,bound\n";
        bool gap_ok = true;
        for (int n : cfg.n) {
            const Surface b =
                solve_bound_b(params, grid, n, n == 1 ? nullptr : &chain[n - 2]);
            const double bound = 1.0 / n + 2.0 / std::sqrt(static_cast<double>(n));
            for (double lam0 : cfg.lambda0) {
                const double p_val = integrate_price(f, discount, lam0);
                const double a_pc = chain[n - 1].time0_value(lam0) / n;
                const double b_pc = b.time0_value(lam0) / n;
                const double gap = b_pc - p_val;
                if (gap > bound + 5e-3) gap_ok = false;
                os << fmt6(lam0) << ',' << n << ',' << fmt6(a_pc) << ',' << fmt6(b_pc)
                   << ',' << fmt6(p_val) << ',' << fmt6(gap) << ',' << fmt6(bound)
                   << "\n";
            }
        }
        if (!gap_ok)
            return {kValidationError, os.str(),
                    "converge: a per-contract gap exceeded its bound"};
        return {kOk, os.str(), ""};
    });
}

CommandResult cmd_mc_check(const RunConfig& cfg) {
    return guarded([&]() -> CommandResult {
        if (cfg.paths < 1000)
            return config_error("mc-check: needs at least 1000 paths");
        const HazardParams params = cfg.hazard();
        const DiscountCurve discount = cfg.discount();
        HazardParams params0 = params;
        params0.alpha = 0.0;

        // PDE-side values.  sigma == 0 collapses to the deterministic price,
        // evaluated on the Monte Carlo time grid so the comparison is exact.
        std::optional<Surface> f, f_net, g;
        if (!params.deterministic()) {
            const LogGrid grid = cfg.grid();
            f.emplace(solve_density_f(params, grid));
            f_net.emplace(solve_density_f(params0, grid));
            g.emplace(solve_density_g(params, grid));
        }
        const double mc_step = 1.0 / cfg.steps_per_year;

        struct Row {
            const char* quantity;
            double pde, mc_mean, mc_se;
        };
        std::ostringstream os;
        os << "lambda0,quantity,pde_value,mc_mean,mc_stderr,paths,z\n";
        bool ok = true;
        for (double lam0 : cfg.lambda0) {
            Row rows[3];
            if (params.deterministic()) {
                rows[0] = {"net_premium",
                           closed_form_deterministic(params0, lam0, 0.0, cfg.T, discount, mc_step),
                           0, 0};
                rows[1] = {"P", rows[0].pde, 0, 0};
                rows[2] = {"B",
                           closed_form_deterministic(params, lam0, 0.0, cfg.T, discount, mc_step),
                           0, 0};
            } else {
                rows[0] = {"net_premium", integrate_price(*f_net, discount, lam0), 0, 0};
                rows[1] = {"P", integrate_price(*f, discount, lam0), 0, 0};
                rows[2] = {"B", integrate_price(*g, discount, lam0), 0, 0};
            }
            const McEstimate net =
                estimate_net(params, lam0, cfg.T, discount, cfg.mc(Measure::Physical));
            const McEstimate p_est =
                estimate_p(params, lam0, cfg.T, discount, cfg.mc(Measure::Shifted));
            const McEstimate b_est =
                estimate_b(params, lam0, cfg.T, discount, cfg.mc(Measure::Shifted));
            rows[0].mc_mean = net.mean; rows[0].mc_se = net.std_error;
            rows[1].mc_mean = p_est.mean; rows[1].mc_se = p_est.std_error;
            rows[2].mc_mean = b_est.mean; rows[2].mc_se = b_est.std_error;
            for (const Row& r : rows) {
                const double diff = r.pde - r.mc_mean;
                double z;
                if (std::abs(diff) <= 1e-9 * (1.0 + std::abs(r.pde)))
                    z = 0.0;
                else if (r.mc_se == 0.0)
                    z = std::numeric_limits<double>::infinity();
                else
                    z = diff / r.mc_se;
                if (!(std::abs(z) <= 4.0)) ok = false;
                os << fmt6(lam0) << ',' << r.quantity << ',' << fmt6(r.pde) << ','
                   << fmt6(r.mc_mean) << ',' << fmt6(r.mc_se) << ',' << cfg.paths << ','
                   << fmt6(z) << "\n";
            }
        }
        if (!ok)
            return {kValidationError, os.str(), "mc-check: |z| > 4 for some quantity"};
        return {kOk, os.str(), ""};
    });
}

CommandResult cmd_export_surface(const RunConfig& cfg, const std::string& quantity) {
    return guarded([&]() -> CommandResult {
        const HazardParams params = cfg.hazard();
        const LogGrid grid = cfg.grid();
        std::optional<Surface> s;
        if (quantity == "f") s.emplace(solve_density_f(params, grid));
        else if (quantity == "g") s.emplace(solve_density_g(params, grid));
        else if (quantity == "f0") {
            HazardParams p0 = params;
            p0.alpha = 0.0;
            s.emplace(solve_density_f(p0, grid));
        } else if (quantity == "P") s.emplace(solve_bound_p(params, grid));
        else if (quantity == "net") s.emplace(solve_net_premium(params, grid));
        else if (quantity == "A" || quantity == "B") {
            if (cfg.n.size() != 1)
                return config_error("export-surface: config must specify exactly one n");
            const int n = cfg.n.front();
            const auto chain = solve_price_a_chain(params, grid, n);
            if (quantity == "A")
                s = chain.back();
            else
                s.emplace(solve_bound_b(params, grid, n, n == 1 ? nullptr : &chain[n - 2]));
        } else {
            return config_error("export-surface: unknown quantity '" + quantity +
                                "' (expected f, g, f0, P, net, A or B)");
        }
        std::ostringstream os;
        s->write_csv(os);
        return {kOk, os.str(), ""};
    });
}

}  // namespace lifepde
