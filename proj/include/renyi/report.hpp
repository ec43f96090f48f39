#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "renyi/geometry.hpp"
#include "renyi/simulator.hpp"
#include "renyi/solver.hpp"

namespace renyi {

/// The three headline quantities of the accretion process.
struct HeadlineResults {
    double expected_total_disks = 0.0; ///< 1 + u1(5)
    Vec2 expected_vector_sum;          ///< (1,0)ᵀ + Q(1)·u2(5)
    double mean_square_shift = 0.0;    ///< 1 + 2(cos π/3, −sin π/3)·u2(5) + u1(5) + 2·u3(5)
};

/// Requires the solution to cover x = 5; throws OutOfDomainError otherwise.
HeadlineResults headline(const Solution& solution);

struct ComparisonRow {
    std::string feature;
    double solver_value = 0.0;
    double mc_mean = 0.0;
    double mc_std_error = 0.0;
    double z_score = 0.0; ///< (solver − mc) / se; 0 when se = 0 and the values agree
    bool flagged = false; ///< |z| exceeds the threshold
};

/// Solver-vs-simulator rows for K, F_x, F_y, E2, and L2 (= K + 2·E2).
struct ComparisonReport {
    double x = 0.0;
    std::int64_t n_samples = 0;
    std::uint64_t seed = 0;
    double z_threshold = 4.0;
    std::vector<ComparisonRow> rows;
    double max_abs_z = 0.0;
    bool passed = true; ///< no row flagged
};

ComparisonReport compare(const Solution& solution, const EstimateSet& estimates);

/// Plain-text renderings; values printed to 14 significant digits.
std::string render_text(const HeadlineResults& results);
std::string render_text(const ComparisonReport& report);

/// CSV grid of the solved functions on `points` uniform x values covering
/// [0, solution.config.x_max], both endpoints included.
/// Header: x,u1,u2_x,u2_y,u3
std::string grid_csv(const Solution& solution, int points);

} // namespace renyi
