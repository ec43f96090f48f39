#include "renyi/serialize.hpp"

#include <stdexcept>
#include <vector>

namespace renyi {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json block_to_json(const ChebyshevBlock<double>& b) {
    return {{"a", b.lower()}, {"b", b.upper()}, {"coefficients", b.coefficients()}};
}

ordered_json block_to_json(const ChebyshevBlock<Vec2>& b) {
    std::vector<double> cx, cy;
    cx.reserve(b.coefficients().size());
    cy.reserve(b.coefficients().size());
    for (const Vec2& c : b.coefficients()) {
        cx.push_back(c.x);
        cy.push_back(c.y);
    }
    return {{"a", b.lower()}, {"b", b.upper()}, {"coefficients_x", cx}, {"coefficients_y", cy}};
}

template <class T>
ordered_json piecewise_to_json(const PiecewiseFunction<T>& u, const char* kind) {
    ordered_json blocks = ordered_json::array();
    for (std::size_t i = 0; i < u.block_count(); ++i) blocks.push_back(block_to_json(u.block(i)));
    return {{"value_kind", kind}, {"x_max", u.domain_end()}, {"blocks", std::move(blocks)}};
}

void expect_kind(const json& j, const char* kind) {
    if (j.at("value_kind").get<std::string>() != kind)
        throw std::invalid_argument(std::string("piecewise JSON: expected value_kind ") + kind);
}

} // namespace

ordered_json to_json(const PiecewiseFunction<double>& u) { return piecewise_to_json(u, "scalar"); }

ordered_json to_json(const PiecewiseFunction<Vec2>& u) { return piecewise_to_json(u, "vector"); }

PiecewiseFunction<double> scalar_piecewise_from_json(const json& j) {
    expect_kind(j, "scalar");
    PiecewiseFunction<double> u;
    for (const auto& jb : j.at("blocks"))
        u.append_block(ChebyshevBlock<double>(jb.at("a").get<double>(), jb.at("b").get<double>(),
                                              jb.at("coefficients").get<std::vector<double>>()));
    return u;
}

PiecewiseFunction<Vec2> vector_piecewise_from_json(const json& j) {
    expect_kind(j, "vector");
    PiecewiseFunction<Vec2> u;
    for (const auto& jb : j.at("blocks")) {
        const auto cx = jb.at("coefficients_x").get<std::vector<double>>();
        const auto cy = jb.at("coefficients_y").get<std::vector<double>>();
        if (cx.size() != cy.size())
            throw std::invalid_argument("piecewise JSON: component coefficient lengths differ");
        std::vector<Vec2> coeffs;
        coeffs.reserve(cx.size());
        for (std::size_t i = 0; i < cx.size(); ++i) coeffs.push_back({cx[i], cy[i]});
        u.append_block(
            ChebyshevBlock<Vec2>(jb.at("a").get<double>(), jb.at("b").get<double>(), std::move(coeffs)));
    }
    return u;
}

ordered_json to_json(const Solution& solution) {
    return {{"u1", to_json(solution.u1)},
            {"u2", to_json(solution.u2)},
            {"u3", to_json(solution.u3)},
            {"config",
             {{"x_max", solution.config.x_max},
              {"fit_tol", solution.config.fit_tol},
              {"max_degree", solution.config.max_degree},
              {"quad_order", solution.config.quad_order}}},
            {"residuals",
             {{"u1_max", solution.residuals.u1_max},
              {"u2_max", solution.residuals.u2_max},
              {"u3_max", solution.residuals.u3_max},
              {"points_per_block", solution.residuals.points_per_block}}}};
}

Solution solution_from_json(const json& j) {
    Solution s;
    s.u1 = scalar_piecewise_from_json(j.at("u1"));
    s.u2 = vector_piecewise_from_json(j.at("u2"));
    s.u3 = scalar_piecewise_from_json(j.at("u3"));
    const auto& jc = j.at("config");
    s.config.x_max = jc.at("x_max").get<double>();
    s.config.fit_tol = jc.at("fit_tol").get<double>();
    s.config.max_degree = jc.at("max_degree").get<int>();
    s.config.quad_order = jc.at("quad_order").get<int>();
    const auto& jr = j.at("residuals");
    s.residuals.u1_max = jr.at("u1_max").get<double>();
    s.residuals.u2_max = jr.at("u2_max").get<double>();
    s.residuals.u3_max = jr.at("u3_max").get<double>();
    s.residuals.points_per_block = jr.at("points_per_block").get<int>();
    return s;
}

ordered_json to_json(const EstimateSet& e) {
    return {{"x", e.x},
            {"n_samples", e.n_samples},
            {"seed", e.seed},
            {"features",
             {{"K", {{"mean", e.count.mean}, {"se", e.count.std_error}}},
              {"F",
               {{"mean", {e.vector_sum.mean.x, e.vector_sum.mean.y}},
                {"se", {e.vector_sum.std_error.x, e.vector_sum.std_error.y}}}},
              {"E2", {{"mean", e.pair_cosine.mean}, {"se", e.pair_cosine.std_error}}},
              {"L2", {{"mean", e.squared_norm.mean}, {"se", e.squared_norm.std_error}}}}}};
}

EstimateSet estimates_from_json(const json& j) {
    EstimateSet e;
    e.x = j.at("x").get<double>();
    e.n_samples = j.at("n_samples").get<std::int64_t>();
    e.seed = j.at("seed").get<std::uint64_t>();
    const auto& f = j.at("features");
    e.count = {f.at("K").at("mean").get<double>(), f.at("K").at("se").get<double>()};
    e.vector_sum.mean = {f.at("F").at("mean").at(0).get<double>(),
                         f.at("F").at("mean").at(1).get<double>()};
    e.vector_sum.std_error = {f.at("F").at("se").at(0).get<double>(),
                              f.at("F").at("se").at(1).get<double>()};
    e.pair_cosine = {f.at("E2").at("mean").get<double>(), f.at("E2").at("se").get<double>()};
    e.squared_norm = {f.at("L2").at("mean").get<double>(), f.at("L2").at("se").get<double>()};
    return e;
}

ordered_json to_json(const HeadlineResults& r) {
    return {{"expected_total_disks", r.expected_total_disks},
            {"expected_vector_sum", {r.expected_vector_sum.x, r.expected_vector_sum.y}},
            {"mean_square_shift", r.mean_square_shift}};
}

ordered_json to_json(const ComparisonReport& r) {
    ordered_json rows = ordered_json::array();
    for (const auto& row : r.rows)
        rows.push_back({{"feature", row.feature},
                        {"solver", row.solver_value},
                        {"mc_mean", row.mc_mean},
                        {"mc_se", row.mc_std_error},
                        {"z", row.z_score},
                        {"flagged", row.flagged}});
    return {{"x", r.x},          {"n_samples", r.n_samples}, {"seed", r.seed},
            {"z_threshold", r.z_threshold}, {"rows", std::move(rows)},   {"max_abs_z", r.max_abs_z},
            {"passed", r.passed}};
}

} // namespace renyi
