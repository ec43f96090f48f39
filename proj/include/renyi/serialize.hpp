#pragma once

#include <json.hpp>

#include "renyi/piecewise.hpp"
#include "renyi/report.hpp"
#include "renyi/simulator.hpp"
#include "renyi/solver.hpp"

namespace renyi {

/// JSON schema for a piecewise function:
///   {value_kind: "scalar"|"vector", x_max, blocks: [{a, b, coefficients}]}
/// (vector blocks carry coefficients_x / coefficients_y).  Round trips are
/// bit-faithful for the coefficient values.
nlohmann::ordered_json to_json(const PiecewiseFunction<double>& u);
nlohmann::ordered_json to_json(const PiecewiseFunction<Vec2>& u);
PiecewiseFunction<double> scalar_piecewise_from_json(const nlohmann::json& j);
PiecewiseFunction<Vec2> vector_piecewise_from_json(const nlohmann::json& j);

/// Solution bundle: the three functions plus a config echo and the residual
/// report.
nlohmann::ordered_json to_json(const Solution& solution);
Solution solution_from_json(const nlohmann::json& j);

/// Estimate schema:
///   {x, n_samples, seed, features: {K: {mean, se}, F: {mean: [..], se: [..]},
///    E2: {mean, se}, L2: {mean, se}}}
nlohmann::ordered_json to_json(const EstimateSet& estimates);
EstimateSet estimates_from_json(const nlohmann::json& j);

nlohmann::ordered_json to_json(const HeadlineResults& results);
nlohmann::ordered_json to_json(const ComparisonReport& report);

} // namespace renyi
