#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lifepde/commands.hpp"
#include "lifepde/mc.hpp"
#include "lifepde/pricing.hpp"
#include "lifepde/solver.hpp"

namespace py = pybind11;
using namespace lifepde;

namespace {

py::array_t<double> surface_values(const Surface& s) {
    const int levels = s.grid().num_levels() + 1;
    const int ni = s.grid().num_interior();
    py::array_t<double> out({levels, ni});
    auto a = out.mutable_unchecked<2>();
    for (int j = 0; j < levels; ++j)
        for (int n = 0; n < ni; ++n) a(j, n) = s.value(n + 1, j);
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Term life insurance pricing under a stochastic hazard rate";

    py::class_<HazardParams>(m, "HazardParams")
        .def(py::init<double, double, double, double>(), py::arg("mu"), py::arg("sigma"),
             py::arg("lambda_bar"), py::arg("alpha"))
        .def_readonly("mu", &HazardParams::mu)
        .def_readonly("sigma", &HazardParams::sigma)
        .def_readonly("lambda_bar", &HazardParams::lambda_bar)
        .def_readonly("alpha", &HazardParams::alpha)
        .def("deterministic", &HazardParams::deterministic)
        .def("negative_drift", &HazardParams::negative_drift);

    py::class_<LogGrid>(m, "LogGrid")
        .def(py::init<double, double, double, double>(), py::arg("half_width"),
             py::arg("y_step"), py::arg("tau_step"), py::arg("horizon"))
        .def_property_readonly("M", &LogGrid::half_width)
        .def_property_readonly("h", &LogGrid::y_step)
        .def_property_readonly("k", &LogGrid::tau_step)
        .def_property_readonly("T", &LogGrid::horizon)
        .def_property_readonly("num_y_nodes", &LogGrid::num_y_nodes)
        .def_property_readonly("num_levels", &LogGrid::num_levels)
        .def("y", &LogGrid::y)
        .def("tau", &LogGrid::tau);

    py::class_<DiscountCurve>(m, "DiscountCurve")
        .def(py::init<>())
        .def(py::init<std::vector<std::pair<double, double>>>(), py::arg("knots"))
        .def("__call__", &DiscountCurve::operator())
        .def("flat", &DiscountCurve::flat);

    py::enum_<SurfaceKind>(m, "SurfaceKind")
        .value("DensityF", SurfaceKind::DensityF)
        .value("DensityG", SurfaceKind::DensityG)
        .value("PriceA", SurfaceKind::PriceA)
        .value("BoundB", SurfaceKind::BoundB)
        .value("BoundP", SurfaceKind::BoundP);

    py::class_<Surface>(m, "Surface")
        .def_property_readonly("kind", &Surface::kind)
        .def_property_readonly("contracts", &Surface::contracts)
        .def_property_readonly("grid", &Surface::grid)
        .def("value", py::overload_cast<int, int>(&Surface::value, py::const_),
             py::arg("node"), py::arg("level"))
        .def("value_at", &Surface::value_at, py::arg("lambda0"), py::arg("level"))
        .def("time0_value", &Surface::time0_value, py::arg("lambda0"))
        .def("values", &surface_values,
             "interior values as a (levels, nodes) array")
        .def_property_readonly("floor_boundary",
                               [](const Surface& s) { return s.floor_boundary(); })
        .def_property_readonly("top_boundary",
                               [](const Surface& s) { return s.top_boundary(); })
        .def_property_readonly("max_scaled_residual", &Surface::max_scaled_residual);

    m.def("shifted_drift", &shifted_drift);
    m.def("exact_step", &exact_step, py::arg("params"), py::arg("lambda_"), py::arg("dt"),
          py::arg("z"), py::arg("drift"));
    m.def("deterministic_hazard", &deterministic_hazard);

    m.def("solve_density_f", &solve_density_f);
    m.def("solve_density_g", &solve_density_g);
    m.def("solve_bound_p", &solve_bound_p);
    m.def("solve_net_premium", &solve_net_premium);
    m.def(
        "solve_price_a",
        [](const HazardParams& p, const LogGrid& g, int contracts, const Surface* prev) {
            return solve_price_a(p, g, contracts, prev);
        },
        py::arg("params"), py::arg("grid"), py::arg("contracts"),
        py::arg("prev") = nullptr);
    m.def(
        "solve_bound_b",
        [](const HazardParams& p, const LogGrid& g, int contracts, const Surface* prev) {
            return solve_bound_b(p, g, contracts, prev);
        },
        py::arg("params"), py::arg("grid"), py::arg("contracts"),
        py::arg("prev") = nullptr);
    m.def("solve_price_a_chain",
          [](const HazardParams& p, const LogGrid& g, int n_max) {
              return solve_price_a_chain(p, g, n_max);
          });
    m.def("closed_form_deterministic", &closed_form_deterministic, py::arg("params"),
          py::arg("lambda0"), py::arg("t"), py::arg("horizon"), py::arg("discount"),
          py::arg("quad_step") = -1.0);

    m.def("integrate_price", &integrate_price, py::arg("density"), py::arg("discount"),
          py::arg("lambda0"));

    py::class_<PriceRow>(m, "PriceRow")
        .def_readonly("lambda0", &PriceRow::lambda0)
        .def_readonly("net_premium", &PriceRow::net_premium)
        .def_readonly("P", &PriceRow::limit_p)
        .def_readonly("A_per_contract", &PriceRow::a_per_contract)
        .def_readonly("B_per_contract", &PriceRow::b_per_contract)
        .def_readonly("finite_charge", &PriceRow::finite_charge)
        .def_readonly("mortality_charge", &PriceRow::mortality_charge);

    py::class_<PriceTable>(m, "PriceTable")
        .def_readonly("rows", &PriceTable::rows)
        .def_readonly("contracts", &PriceTable::contracts);

    m.def("build_table", &build_table, py::arg("params"), py::arg("grid"),
          py::arg("lambda0s"), py::arg("contracts"), py::arg("discount"));

    py::enum_<Measure>(m, "Measure")
        .value("Physical", Measure::Physical)
        .value("Shifted", Measure::Shifted);

    py::class_<McConfig>(m, "McConfig")
        .def(py::init([](long paths, int steps_per_year, std::uint64_t seed,
                         Measure measure) {
                 return McConfig{paths, steps_per_year, seed, measure};
             }),
             py::arg("paths") = 200000, py::arg("steps_per_year") = 100,
             py::arg("seed") = 1, py::arg("measure") = Measure::Shifted)
        .def_readwrite("paths", &McConfig::paths)
        .def_readwrite("steps_per_year", &McConfig::steps_per_year)
        .def_readwrite("seed", &McConfig::seed)
        .def_readwrite("measure", &McConfig::measure);

    py::class_<McEstimate>(m, "McEstimate")
        .def_readonly("mean", &McEstimate::mean)
        .def_readonly("std_error", &McEstimate::std_error)
        .def_readonly("paths", &McEstimate::paths);

    m.def("estimate_p", &estimate_p);
    m.def("estimate_b", &estimate_b);
    m.def("estimate_net", &estimate_net);
    m.def("estimate_density_point", &estimate_density_point, py::arg("params"),
          py::arg("lambda0"), py::arg("s"), py::arg("cfg"), py::arg("loaded") = false);
}
