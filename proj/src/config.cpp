#include "lifepde/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "lifepde/pricing.hpp"

namespace lifepde {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

double parse_double(const std::string& key, const std::string& v) {
    std::size_t pos = 0;
    double out;
    try {
        out = std::stod(v, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("config: bad number for '" + key + "': " + v);
    }
    if (pos != v.size())
        throw std::invalid_argument("config: trailing junk for '" + key + "': " + v);
    return out;
}

template <typename T, typename Conv>
std::vector<T> parse_list(const std::string& key, const std::string& v, Conv conv) {
    std::vector<T> out;
    std::istringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty())
            throw std::invalid_argument("config: empty element in list '" + key + "'");
        out.push_back(conv(key, item));
    }
    if (out.empty()) throw std::invalid_argument("config: empty list for '" + key + "'");
    return out;
}

}  // namespace

RunConfig RunConfig::parse(std::istream& in) {
    RunConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": expected key=value");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (key == "mu") cfg.mu = parse_double(key, val);
        else if (key == "sigma") cfg.sigma = parse_double(key, val);
        else if (key == "lambda_bar") cfg.lambda_bar = parse_double(key, val);
        else if (key == "alpha") cfg.alpha = parse_double(key, val);
        else if (key == "M") cfg.M = parse_double(key, val);
        else if (key == "h") cfg.h = parse_double(key, val);
        else if (key == "k") cfg.k = parse_double(key, val);
        else if (key == "T") cfg.T = parse_double(key, val);
        else if (key == "lambda0")
            cfg.lambda0 = parse_list<double>(key, val, parse_double);
        else if (key == "n")
            cfg.n = parse_list<int>(key, val, [](const std::string& kk, const std::string& vv) {
                const double d = parse_double(kk, vv);
                const int i = static_cast<int>(d);
                if (d != i || i < 1)
                    throw std::invalid_argument("config: 'n' entries must be positive integers");
                return i;
            });
        else if (key == "discount_file") cfg.discount_file = val;
        else if (key == "paths") cfg.paths = static_cast<long>(parse_double(key, val));
        else if (key == "steps_per_year")
            cfg.steps_per_year = static_cast<int>(parse_double(key, val));
        else if (key == "seed") cfg.seed = std::stoull(val);
        else if (key == "out") cfg.out = val;
        else if (key == "format") cfg.format = val;
        else
            throw std::invalid_argument("config: unknown key '" + key + "'");
    }
    if (cfg.format != "csv" && cfg.format != "json")
        throw std::invalid_argument("config: format must be csv or json");
    return cfg;
}

RunConfig RunConfig::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("config: cannot open " + path);
    return parse(in);
}

std::string RunConfig::serialize() const {
    std::ostringstream os;
    os << "mu = " << fmt6(mu) << "\n";
    os << "sigma = " << fmt6(sigma) << "\n";
    os << "lambda_bar = " << fmt6(lambda_bar) << "\n";
    os << "alpha = " << fmt6(alpha) << "\n";
    os << "M = " << fmt6(M) << "\n";
    os << "h = " << fmt6(h) << "\n";
    os << "k = " << fmt6(k) << "\n";
    os << "T = " << fmt6(T) << "\n";
    os << "lambda0 = ";
    for (std::size_t i = 0; i < lambda0.size(); ++i)
        os << (i ? "," : "") << fmt6(lambda0[i]);
    os << "\n";
    os << "n = ";
    for (std::size_t i = 0; i < n.size(); ++i) os << (i ? "," : "") << n[i];
    os << "\n";
    if (!discount_file.empty()) os << "discount_file = " << discount_file << "\n";
    os << "paths = " << paths << "\n";
    os << "steps_per_year = " << steps_per_year << "\n";
    os << "seed = " << seed << "\n";
    if (!out.empty()) os << "out = " << out << "\n";
    os << "format = " << format << "\n";
    return os.str();
}

HazardParams RunConfig::hazard() const { return {mu, sigma, lambda_bar, alpha}; }

LogGrid RunConfig::grid() const { return {M, h, k, T}; }

DiscountCurve RunConfig::discount() const {
    if (discount_file.empty()) return {};
    std::ifstream in(discount_file);
    if (!in) throw std::invalid_argument("config: cannot open discount file " + discount_file);
    return DiscountCurve::from_csv(in);
}

McConfig RunConfig::mc(Measure measure) const {
    McConfig cfg;
    cfg.paths = paths;
    cfg.steps_per_year = steps_per_year;
    cfg.seed = seed;
    cfg.measure = measure;
    return cfg;
}

}  // namespace lifepde
