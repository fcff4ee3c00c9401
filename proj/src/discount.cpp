#include "lifepde/discount.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace lifepde {

DiscountCurve::DiscountCurve(std::vector<std::pair<double, double>> knots)
    : knots_(std::move(knots)) {
    if (knots_.empty()) return;
    if (knots_.front().first > 0.0) knots_.insert(knots_.begin(), {0.0, 1.0});
    double prev_s = -1.0, prev_f = 1.0 + 1e-12;
    for (const auto& [s, f] : knots_) {
        if (!(s >= 0.0) || !(s > prev_s))
            throw std::invalid_argument("DiscountCurve: knot times must be increasing and >= 0");
        if (!(f > 0.0) || f > 1.0)
            throw std::invalid_argument("DiscountCurve: F must lie in (0, 1]");
        if (f > prev_f + 1e-12)
            throw std::invalid_argument("DiscountCurve: F must be nonincreasing");
        prev_s = s;
        prev_f = f;
    }
    if (knots_.front().first == 0.0 && std::abs(knots_.front().second - 1.0) > 1e-12)
        throw std::invalid_argument("DiscountCurve: F(0) must equal 1");
}

DiscountCurve DiscountCurve::from_csv(std::istream& in) {
    std::vector<std::pair<double, double>> knots;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
        std::istringstream ls(line);
        std::string s_str, f_str;
        if (!std::getline(ls, s_str, ',') || !std::getline(ls, f_str))
            throw std::invalid_argument("DiscountCurve: expected two columns 's,F'");
        char* end = nullptr;
        const double s = std::strtod(s_str.c_str(), &end);
        if (end == s_str.c_str()) {
            if (knots.empty()) continue;  // header line
            throw std::invalid_argument("DiscountCurve: bad number: " + s_str);
        }
        const double f = std::strtod(f_str.c_str(), &end);
        if (end == f_str.c_str())
            throw std::invalid_argument("DiscountCurve: bad number: " + f_str);
        knots.emplace_back(s, f);
    }
    return DiscountCurve(std::move(knots));
}

double DiscountCurve::operator()(double s) const {
    if (!(s >= 0.0)) throw std::invalid_argument("DiscountCurve: s must be >= 0");
    if (knots_.empty()) return 1.0;
    if (s >= knots_.back().first) return knots_.back().second;  // flat tail
    auto hi = std::upper_bound(knots_.begin(), knots_.end(), s,
                               [](double v, const auto& kn) { return v < kn.first; });
    const auto lo = hi - 1;
    const double w = (s - lo->first) / (hi->first - lo->first);
    return (1.0 - w) * lo->second + w * hi->second;
}

double DiscountCurve::forward(double t, double s) const {
    if (knots_.empty()) return 1.0;
    return (*this)(s) / (*this)(t);
}

}  // namespace lifepde
