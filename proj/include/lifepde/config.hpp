#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "lifepde/discount.hpp"
#include "lifepde/grid.hpp"
#include "lifepde/hazard.hpp"
#include "lifepde/mc.hpp"

namespace lifepde {

/// Run configuration, read from a flat key=value file.  Keys mirror the field
/// names below exactly; '#' starts a comment; unknown keys are rejected.
/// Lists (lambda0, n) are comma-separated.
struct RunConfig {
    double mu = 0.04;
    double sigma = 0.10;
    double lambda_bar = 0.02;
    double alpha = 0.10;
    double M = 10.0;
    double h = 0.1;
    double k = 0.01;
    double T = 10.0;
    std::vector<double> lambda0 = {0.020, 0.021, 0.022, 0.023, 0.024, 0.025,
                                   0.030, 0.035, 0.040, 0.050, 0.060, 0.070};
    std::vector<int> n = {1};
    std::string discount_file;  // optional CSV "s,F"; empty means flat 1
    long paths = 200000;
    int steps_per_year = 100;
    std::uint64_t seed = 20070510;
    std::string out;            // output path; empty means stdout
    std::string format = "csv"; // csv | json

    static RunConfig parse(std::istream& in);
    static RunConfig parse_file(const std::string& path);

    /// Canonical key=value rendering; parse(serialize()) is the identity.
    std::string serialize() const;

    /// Validated domain objects (constructors enforce the invariants).
    HazardParams hazard() const;
    LogGrid grid() const;
    DiscountCurve discount() const;
    McConfig mc(Measure measure) const;
};

}  // namespace lifepde
