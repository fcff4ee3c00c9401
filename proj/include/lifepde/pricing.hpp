#pragma once

#include <iosfwd>
#include <vector>

#include "lifepde/discount.hpp"
#include "lifepde/solver.hpp"

namespace lifepde {

/// Time-0 price from a density surface: trapezoid sum over tau-levels of
/// F(0, tau_j) * density(lambda0, tau_j) with weights {1/2, 1, ..., 1, 1/2} k.
/// lambda0 off the nodes interpolates linearly in y; at or below the lowest
/// grid lambda the floor boundary column is integrated instead.
double integrate_price(const Surface& density, const DiscountCurve& discount,
                       double lambda0);

struct PriceRow {
    double lambda0;
    double net_premium;        // alpha = 0 expectation
    double limit_p;            // diversified-limit price P
    double a_per_contract;     // A^(n) / n
    double b_per_contract;     // B^(n) / n
    double finite_charge;      // A^(n)/n - P
    double mortality_charge;   // P - net premium
};

struct PriceTable {
    HazardParams params;
    LogGrid grid;
    int contracts = 1;
    std::vector<PriceRow> rows;

    // CSV columns: lambda0,net_premium,P,A_per_contract,B_per_contract,
    // finite_charge,mortality_charge.  All numbers with 6 significant digits.
    void write_csv(std::ostream& os) const;
    void write_json(std::ostream& os) const;
};

/// Full pricing run: densities f (at alpha and at alpha = 0) and g, the
/// A^(1..n) recursion and B^(n).  P and the net premium are quadratures of the
/// densities; the B column is the quadrature of g for n = 1 and the grid
/// solve divided by n otherwise.  Deterministic given its inputs.
PriceTable build_table(const HazardParams& params, const LogGrid& grid,
                       const std::vector<double>& lambda0s, int contracts,
                       const DiscountCurve& discount);

/// Formats a double with 6 significant digits (all file output uses this).
std::string fmt6(double v);

}  // namespace lifepde
