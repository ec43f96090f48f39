#pragma once

#include <vector>

#include "renyi/geometry.hpp"
#include "renyi/piecewise.hpp"

namespace renyi {

/// Parameters of the block-substitution solver.
struct SolverConfig {
    double x_max = 5.0;    ///< solve u on [0, x_max]; must lie in [1, 6]
    double fit_tol = 1e-14;
    int max_degree = 256;
    int quad_order = 64;   ///< fixed quadrature order per smooth piece

    /// Throws std::invalid_argument if any parameter is out of range.
    void validate() const;

    FitOptions fit_options() const { return {fit_tol, max_degree}; }
};

/// Residual diagnostics: the solved functions plugged back into their
/// equations, with right-hand sides recomputed by direct quadrature over
/// value_at (independent of the cached antiderivatives).
struct ResidualReport {
    double u1_max = 0.0;
    double u2_max = 0.0;
    double u3_max = 0.0;
    int points_per_block = 0;
};

struct Solution {
    PiecewiseFunction<double> u1;
    PiecewiseFunction<Vec2> u2;
    PiecewiseFunction<double> u3;
    SolverConfig config;
    ResidualReport residuals;
};

/// Expected number of placed cars: u1(x) = (2/(x-1)) ∫₀^{x-1} u1(y) dy + 1
/// on [1, x_max], u1 ≡ 0 on [0, 1).
PiecewiseFunction<double> solve_u1(const SolverConfig& config);

/// Expected vector sum of mapped positions:
/// u2(x) = (1/(x-1)) ∫₀^{x-1} [u2(y) + Q(x-y) u2(y) + v(y)] dy.
PiecewiseFunction<Vec2> solve_u2(const SolverConfig& config);

/// Inhomogeneous term of the pair-sum equation:
/// g3(x) = (1/(x-1)) ∫₀^{x-1} [u2(y)ᵀ Q(y+1) u2(x-1-y) + (v(y)+v(-1))ᵀ u2(y)] dy,
/// with g3(1) := 0 (limit).  The convolution integrand has breakpoints
/// wherever y or x-1-y is an integer; the integral is split there.
double g3_at(double x, const PiecewiseFunction<Vec2>& u2, const SolverConfig& config);

/// Expected pairwise-cosine sum: u3(x) = (2/(x-1)) ∫₀^{x-1} u3(y) dy + g3(x).
/// Requires u2 solved on [0, x_max].
PiecewiseFunction<double> solve_u3(const SolverConfig& config, const PiecewiseFunction<Vec2>& u2);

/// Solve all three equations in dependency order and attach residual
/// diagnostics.
Solution solve_all(const SolverConfig& config);

/// Max-norm residuals of the three equations at `points_per_block` uniform
/// random points per block (deterministic seed), right-hand sides evaluated
/// by order-`quad_order` quadrature split at the knots.
ResidualReport compute_residuals(const Solution& solution, int points_per_block = 25,
                                 int quad_order = 128);

} // namespace renyi
