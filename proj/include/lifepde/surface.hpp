#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "lifepde/grid.hpp"
#include "lifepde/hazard.hpp"

namespace lifepde {

enum class SurfaceKind {
    DensityF,  // mortality density under the pricing measure
    DensityG,  // loaded density (hazard + alpha sqrt(hazard))
    PriceA,    // risk-adjusted price of `contracts` lives
    BoundB,    // linear upper bound for `contracts` lives
    BoundP,    // diversified-limit price (per contract)
};

const char* to_string(SurfaceKind kind);

/// Solver output on the interior lattice (nodes 1..N-1, levels 0..J), plus the
/// boundary columns the march used at y = -M (hazard floor) and y = +M.
class Surface {
public:
    Surface(SurfaceKind kind, int contracts, const LogGrid& grid, const HazardParams& params);

    SurfaceKind kind() const { return kind_; }
    int contracts() const { return contracts_; }
    const LogGrid& grid() const { return grid_; }
    const HazardParams& params() const { return params_; }

    // node in 1..N-1, level in 0..J
    double value(int node, int level) const { return values_[index(node, level)]; }
    double& value(int node, int level) { return values_[index(node, level)]; }
    std::span<double> level(int j);
    std::span<const double> level(int j) const;

    std::vector<double>& floor_boundary() { return floor_boundary_; }
    const std::vector<double>& floor_boundary() const { return floor_boundary_; }
    std::vector<double>& top_boundary() { return top_boundary_; }
    const std::vector<double>& top_boundary() const { return top_boundary_; }

    /// y-linear interpolation across nodes at a fixed level.  lambda0 at or
    /// below the lowest grid lambda clamps to the floor boundary column.
    double value_at(double lambda0, int level) const;

    /// Value at valuation time 0 (level J).
    double time0_value(double lambda0) const { return value_at(lambda0, grid_.num_levels()); }

    // Worst scaled tridiagonal residual ||Mx - rhs||_inf / (1 + ||rhs||_inf)
    // observed across the time march that produced this surface.
    double max_scaled_residual() const { return max_scaled_residual_; }
    void record_residual(double scaled) ;

    /// CSV dump: header row of y-nodes, one row per tau-level (boundary
    /// columns included at both ends).
    void write_csv(std::ostream& os) const;

private:
    std::size_t index(int node, int level) const;

    SurfaceKind kind_;
    int contracts_;
    LogGrid grid_;
    HazardParams params_;
    std::vector<double> values_;          // level-major, (J+1) x (N-1)
    std::vector<double> floor_boundary_;  // y = -M column, levels 0..J
    std::vector<double> top_boundary_;    // y = +M column, levels 0..J
    double max_scaled_residual_ = 0.0;
};

}  // namespace lifepde
