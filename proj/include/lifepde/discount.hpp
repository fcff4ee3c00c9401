#pragma once

#include <iosfwd>
#include <utility>
#include <vector>

namespace lifepde {

/// Zero-coupon price curve s -> F(0, s).  Defaults to identically 1 (zero
/// rates).  Tabulated curves interpolate linearly between knots and stay flat
/// beyond the last knot; F(0) = 1 and F nonincreasing are enforced.
class DiscountCurve {
public:
    DiscountCurve() = default;  // flat 1

    explicit DiscountCurve(std::vector<std::pair<double, double>> knots);

    /// Two-column CSV "s,F"; a header line and '#' comments are skipped.
    static DiscountCurve from_csv(std::istream& in);

    double operator()(double s) const;

    /// Forward discount from t to s (ratio of the time-0 curve).
    double forward(double t, double s) const;

    bool flat() const { return knots_.empty(); }
    const std::vector<std::pair<double, double>>& knots() const { return knots_; }

private:
    std::vector<std::pair<double, double>> knots_;
};

}  // namespace lifepde
