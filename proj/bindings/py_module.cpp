#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "renyi/errors.hpp"
#include "renyi/report.hpp"
#include "renyi/serialize.hpp"
#include "renyi/simulator.hpp"
#include "renyi/solver.hpp"

namespace py = pybind11;

namespace {

py::object json_to_py(const nlohmann::ordered_json& j) {
    using value_t = nlohmann::ordered_json::value_t;
    switch (j.type()) {
    case value_t::boolean:
        return py::bool_(j.get<bool>());
    case value_t::number_integer:
        return py::int_(j.get<std::int64_t>());
    case value_t::number_unsigned:
        return py::int_(j.get<std::uint64_t>());
    case value_t::number_float:
        return py::float_(j.get<double>());
    case value_t::string:
        return py::str(j.get<std::string>());
    case value_t::array: {
        py::list out;
        for (const auto& item : j) out.append(json_to_py(item));
        return out;
    }
    case value_t::object: {
        py::dict out;
        for (const auto& item : j.items()) out[py::str(item.key())] = json_to_py(item.value());
        return out;
    }
    default:
        return py::none();
    }
}

renyi::SolverConfig make_config(double x_max, double fit_tol, int max_degree, int quad_order) {
    renyi::SolverConfig config;
    config.x_max = x_max;
    config.fit_tol = fit_tol;
    config.max_degree = max_degree;
    config.quad_order = quad_order;
    return config;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Volterra solver and Monte Carlo oracle for the unit-disk accretion process";
    m.attr("__version__") = "0.1.0";

    py::register_exception<renyi::OutOfDomainError>(m, "OutOfDomainError", PyExc_ValueError);
    py::register_exception<renyi::NonConvergenceError>(m, "NonConvergenceError",
                                                       PyExc_RuntimeError);

    py::class_<renyi::Solution>(m, "Solution")
        .def_property_readonly(
            "x_max", [](const renyi::Solution& s) { return s.config.x_max; },
            "Upper end of the solved domain")
        .def(
            "u1", [](const renyi::Solution& s, double x) { return s.u1.value_at(x); }, py::arg("x"),
            "Expected count u1(x)")
        .def(
            "u2",
            [](const renyi::Solution& s, double x) {
                const renyi::Vec2 v = s.u2.value_at(x);
                return py::make_tuple(v.x, v.y);
            },
            py::arg("x"), "Expected vector sum u2(x) as an (x, y) tuple")
        .def(
            "u3", [](const renyi::Solution& s, double x) { return s.u3.value_at(x); }, py::arg("x"),
            "Expected pairwise-cosine sum u3(x)")
        .def(
            "residuals",
            [](const renyi::Solution& s) { return json_to_py(renyi::to_json(s)["residuals"]); },
            "Recorded equation-residual diagnostics")
        .def(
            "headline",
            [](const renyi::Solution& s) { return json_to_py(renyi::to_json(renyi::headline(s))); },
            "The three headline constants (requires x_max >= 5)")
        .def(
            "grid_csv", [](const renyi::Solution& s, int points) { return renyi::grid_csv(s, points); },
            py::arg("points") = 500, "CSV value grid over [0, x_max]")
        .def("to_json", [](const renyi::Solution& s) { return renyi::to_json(s).dump(2); },
             "Serialize (coefficients and config) to a JSON string")
        .def_static(
            "from_json",
            [](const std::string& text) {
                return renyi::solution_from_json(nlohmann::json::parse(text));
            },
            py::arg("text"), "Rebuild a solution from to_json output");

    m.def(
        "solve",
        [](double x_max, double fit_tol, int max_degree, int quad_order) {
            return renyi::solve_all(make_config(x_max, fit_tol, max_degree, quad_order));
        },
        py::arg("x_max") = 5.0, py::arg("fit_tol") = 1e-14, py::arg("max_degree") = 256,
        py::arg("quad_order") = 64,
        "Solve the three integral equations on [0, x_max]; returns a Solution");

    m.def(
        "estimate",
        [](double x, std::int64_t n_samples, std::uint64_t seed, int workers) {
            return json_to_py(renyi::to_json(renyi::estimate(x, n_samples, seed, workers)));
        },
        py::arg("x"), py::arg("n_samples"), py::arg("seed") = 0, py::arg("workers") = 1,
        "Monte Carlo feature means and standard errors at one x");

    m.def(
        "compare",
        [](const renyi::Solution& solution, std::int64_t n_samples, std::uint64_t seed,
           int workers) {
            const renyi::EstimateSet est =
                renyi::estimate(solution.config.x_max, n_samples, seed, workers);
            return json_to_py(renyi::to_json(renyi::compare(solution, est)));
        },
        py::arg("solution"), py::arg("n_samples") = 100000, py::arg("seed") = 0,
        py::arg("workers") = 1, "Solver-vs-Monte-Carlo z-score table at x = x_max");

    m.def(
        "sample_positions",
        [](double x, std::uint64_t seed, std::uint64_t index) {
            renyi::SampleRng rng(seed, index);
            return renyi::sample_renyi(x, rng).positions;
        },
        py::arg("x"), py::arg("seed") = 0, py::arg("index") = 0,
        "One jammed parking configuration on [0, x] (sorted left endpoints)");

    m.def(
        "sample_accretion",
        [](std::uint64_t seed, std::uint64_t index) {
            renyi::SampleRng rng(seed, index);
            std::vector<std::pair<double, double>> out;
            for (const renyi::Vec2& c : renyi::sample_accretion(rng)) out.emplace_back(c.x, c.y);
            return out;
        },
        py::arg("seed") = 0, py::arg("index") = 0,
        "One jammed disk-accretion configuration: unit centre vectors, first disk included");

    m.def(
        "features",
        [](const std::vector<double>& positions, double x) {
            renyi::RenyiSample sample;
            sample.domain_length = x;
            sample.positions = positions;
            const renyi::FeatureSet f = renyi::features(sample);
            py::dict out;
            out["K"] = f.count;
            out["F"] = py::make_tuple(f.vector_sum.x, f.vector_sum.y);
            out["E2"] = f.pair_cosine;
            out["L2"] = f.squared_norm;
            return out;
        },
        py::arg("positions"), py::arg("x"),
        "Feature set (K, F, E2, L2) of one configuration");
}
