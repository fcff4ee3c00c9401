#include "lifepde/surface.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace lifepde {

const char* to_string(SurfaceKind kind) {
    switch (kind) {
        case SurfaceKind::DensityF: return "density_f";
        case SurfaceKind::DensityG: return "density_g";
        case SurfaceKind::PriceA: return "price_A";
        case SurfaceKind::BoundB: return "bound_B";
        case SurfaceKind::BoundP: return "bound_P";
    }
    return "?";
}

Surface::Surface(SurfaceKind kind, int contracts, const LogGrid& grid,
                 const HazardParams& params)
    : kind_(kind), contracts_(contracts), grid_(grid), params_(params) {
    if (contracts_ < 1) throw std::invalid_argument("Surface: contracts must be >= 1");
    const std::size_t levels = static_cast<std::size_t>(grid_.num_levels()) + 1;
    values_.assign(levels * grid_.num_interior(), 0.0);
    floor_boundary_.assign(levels, 0.0);
    top_boundary_.assign(levels, 0.0);
}

std::size_t Surface::index(int node, int level) const {
    if (node < 1 || node > grid_.num_interior() || level < 0 || level > grid_.num_levels())
        throw std::out_of_range("Surface::value: index out of range");
    return static_cast<std::size_t>(level) * grid_.num_interior() + (node - 1);
}

std::span<double> Surface::level(int j) {
    return {values_.data() + index(1, j), static_cast<std::size_t>(grid_.num_interior())};
}

std::span<const double> Surface::level(int j) const {
    return {values_.data() + index(1, j), static_cast<std::size_t>(grid_.num_interior())};
}

double Surface::value_at(double lambda0, int level) const {
    if (lambda0 <= grid_.lambda_min(params_.lambda_bar)) {
        if (!(lambda0 >= params_.lambda_bar))
            throw std::invalid_argument("Surface::value_at: lambda0 below the hazard floor");
        return floor_boundary_[level];
    }
    const Bracket b = bracket_and_weights(grid_, lambda0, params_.lambda_bar);
    const auto node_value = [&](int n) -> double {
        if (n == 0) return floor_boundary_[level];
        if (n == grid_.num_y_nodes()) return top_boundary_[level];
        return value(n, level);
    };
    if (b.weight == 0.0) return node_value(b.node);
    return (1.0 - b.weight) * node_value(b.node) + b.weight * node_value(b.node + 1);
}

void Surface::record_residual(double scaled) {
    if (scaled > max_scaled_residual_) max_scaled_residual_ = scaled;
}

void Surface::write_csv(std::ostream& os) const {
    char buf[64];
    os << "tau";
    for (int n = 0; n <= grid_.num_y_nodes(); ++n) {
        std::snprintf(buf, sizeof buf, ",%.6g", grid_.y(n));
        os << buf;
    }
    os << "\n";
    for (int j = 0; j <= grid_.num_levels(); ++j) {
        std::snprintf(buf, sizeof buf, "%.6g", grid_.tau(j));
        os << buf;
        std::snprintf(buf, sizeof buf, ",%.6g", floor_boundary_[j]);
        os << buf;
        for (int n = 1; n <= grid_.num_interior(); ++n) {
            std::snprintf(buf, sizeof buf, ",%.6g", value(n, j));
            os << buf;
        }
        std::snprintf(buf, sizeof buf, ",%.6g", top_boundary_[j]);
        os << buf << "\n";
    }
}

}  // namespace lifepde
