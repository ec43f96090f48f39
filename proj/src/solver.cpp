#include "renyi/solver.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "renyi/chebyshev.hpp"
#include "renyi/errors.hpp"

namespace renyi {

namespace {

int block_count_for(double x_max) { return static_cast<int>(std::ceil(x_max)) - 1; }

/// Integrate f over [a, b] split at the given interior breakpoints, each
/// piece with fixed-order quadrature.  Breakpoints outside (a, b) are
/// ignored; duplicates within 1e-12 are merged.
template <class T, class F>
T integrate_split(F&& f, double a, double b, int order, std::vector<double> cuts) {
    cuts.push_back(a);
    cuts.push_back(b);
    std::sort(cuts.begin(), cuts.end());
    T acc = value_traits<T>::zero();
    double lo = a;
    for (double c : cuts) {
        const double hi = std::min(std::max(c, a), b);
        if (hi - lo > 1e-12) {
            acc += integrate<T>(f, lo, hi, order);
            lo = hi;
        }
    }
    if (b - lo > 1e-12) acc += integrate<T>(f, lo, b, order);
    return acc;
}

std::vector<double> integer_cuts(double a, double b) {
    std::vector<double> cuts;
    for (double k = std::floor(a) + 1.0; k < b; k += 1.0)
        if (k > a) cuts.push_back(k);
    return cuts;
}

} // namespace

void SolverConfig::validate() const {
    if (!(x_max >= 1.0) || !(x_max <= 6.0))
        throw std::invalid_argument("SolverConfig: x_max must lie in [1, 6], got " +
                                    std::to_string(x_max));
    if (!(fit_tol > 0.0)) throw std::invalid_argument("SolverConfig: fit_tol must be positive");
    if (max_degree < 4) throw std::invalid_argument("SolverConfig: max_degree must be at least 4");
    if (quad_order < 2) throw std::invalid_argument("SolverConfig: quad_order must be at least 2");
}

PiecewiseFunction<double> solve_u1(const SolverConfig& config) {
    config.validate();
    PiecewiseFunction<double> u1;
    const int n = block_count_for(config.x_max);
    for (int k = 1; k <= n; ++k) {
        auto rhs = [&](double x) {
            const double t = x - 1.0;
            if (t <= 0.0) return 1.0; // limiting value u1(1) = 1
            // Assembled in extended precision with a single final rounding;
            // per-term rounding would leave the samples with staircase noise
            // of a few ulps, which stalls fits at tolerances near 1e-15.
            return static_cast<double>(2.0L * u1.cumulative_integral_ld(t)[0] / t + 1.0L);
        };
        u1.append_block(fit<double>(rhs, k, k + 1.0, config.fit_options()));
    }
    return u1;
}

PiecewiseFunction<Vec2> solve_u2(const SolverConfig& config) {
    config.validate();
    PiecewiseFunction<Vec2> u2;
    // Q(x−y) = Q(x)Q(−y), so the kernel term needs only the cumulative
    // integrals of u2 weighted by cos(πy/3) and sin(πy/3); both caches
    // extend lazily as blocks complete.
    WeightedCumulative<Vec2> cos_w(u2, [](double y) { return std::cos(kPi * y / 3.0); },
                                   config.fit_options());
    WeightedCumulative<Vec2> sin_w(u2, [](double y) { return std::sin(kPi * y / 3.0); },
                                   config.fit_options());
    const int n = block_count_for(config.x_max);
    for (int k = 1; k <= n; ++k) {
        auto rhs = [&](double x) -> Vec2 {
            const double t = x - 1.0;
            if (t <= 0.0) return {1.0, 0.0}; // limiting value u2(1) = v(0)
            // Assembled in extended precision with one rounding per component
            // (see solve_u1); the trig factors come from the long double
            // overloads for the same reason.
            const auto plain = u2.cumulative_integral_ld(t);
            const auto c = cos_w.value_ld(t);
            const auto s = sin_w.value_ld(t);
            // ∫ Q(−y)u2(y) dy componentwise from the weighted integrals.
            const long double wx = c[0] + s[1];
            const long double wy = c[1] - s[0];
            const long double cq = std::cos(kPiL * x / 3.0L); // Q(x) entries
            const long double sq = std::sin(kPiL * x / 3.0L);
            // ∫₀ᵗ v(y) dy = (3/π)(sin(πt/3), 1 − cos(πt/3)); the second
            // component as 2·sin²(πt/6) to avoid cancellation near t = 0,
            // where the division by t would amplify the absolute error.
            const long double sh = std::sin(kPiL * t / 6.0L);
            const long double vx = (3.0L / kPiL) * std::sin(kPiL * t / 3.0L);
            const long double vy = (3.0L / kPiL) * (2.0L * sh * sh);
            return {static_cast<double>((plain[0] + cq * wx - sq * wy + vx) / t),
                    static_cast<double>((plain[1] + sq * wx + cq * wy + vy) / t)};
        };
        u2.append_block(fit<Vec2>(rhs, k, k + 1.0, config.fit_options()));
    }
    return u2;
}

double g3_at(double x, const PiecewiseFunction<Vec2>& u2, const SolverConfig& config) {
    const double t = x - 1.0;
    if (x < 1.0 - 1e-12)
        throw OutOfDomainError("g3_at: x = " + std::to_string(x) + " below 1");
    if (t > u2.domain_end() + 1e-12)
        throw OutOfDomainError("g3_at: x = " + std::to_string(x) +
                               " requires u2 on [0, " + std::to_string(t) + "]");
    // Every term carries a u2(y) factor with y < 1 when x ≤ 2.
    if (t <= 1.0) return 0.0;

    const Vec2 v_back = circle_point(-1.0);
    double total = integrate_split<double>(
        [&](double y) { return dot(circle_point(y) + v_back, u2.value_at(y)); }, 1.0, t,
        config.quad_order, integer_cuts(1.0, t));

    // Pairing term u2(y)ᵀ Q(y+1) u2(t−y): both factors vanish below 1, so it
    // is supported on y ∈ [1, t−1] (empty for t ≤ 2).  Integrating over that
    // range only keeps quadrature nodes off the jump of u2 at 1, where the
    // closed-left value (1, 0) would otherwise leak into the y-side limit.
    // Kinks sit at integer y and at y = t − k (where t − y crosses a knot).
    if (t - 1.0 > 1.0) {
        std::vector<double> cuts = integer_cuts(1.0, t - 1.0);
        for (double k = 2.0; t - k > 1.0; k += 1.0) cuts.push_back(t - k);
        total += integrate_split<double>(
            [&](double y) {
                return dot(u2.value_at(y), rotation(y + 1.0).apply(u2.value_at(t - y)));
            },
            1.0, t - 1.0, config.quad_order, std::move(cuts));
    }
    return total / t;
}

PiecewiseFunction<double> solve_u3(const SolverConfig& config, const PiecewiseFunction<Vec2>& u2) {
    config.validate();
    const int n = block_count_for(config.x_max);
    if (u2.domain_end() + 1e-9 < n + 1.0)
        throw OutOfDomainError("solve_u3: u2 solved only to " + std::to_string(u2.domain_end()));
    PiecewiseFunction<double> u3;
    for (int k = 1; k <= n; ++k) {
        auto rhs = [&](double x) {
            const double t = x - 1.0;
            if (t <= 0.0) return 0.0; // limiting value u3(1) = 0
            return static_cast<double>(2.0L * u3.cumulative_integral_ld(t)[0] / t +
                                       static_cast<long double>(g3_at(x, u2, config)));
        };
        u3.append_block(fit<double>(rhs, k, k + 1.0, config.fit_options()));
    }
    return u3;
}

Solution solve_all(const SolverConfig& config) {
    config.validate();
    Solution sol;
    sol.config = config;
    sol.u1 = solve_u1(config);
    sol.u2 = solve_u2(config);
    sol.u3 = solve_u3(config, sol.u2);
    sol.residuals = compute_residuals(sol);
    return sol;
}

ResidualReport compute_residuals(const Solution& solution, int points_per_block, int quad_order) {
    ResidualReport report;
    report.points_per_block = points_per_block;
    const auto n = solution.u1.block_count();
    std::mt19937_64 gen(20260814u);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    SolverConfig g3_config = solution.config;
    g3_config.quad_order = quad_order;

    for (std::size_t b = 0; b < n; ++b) {
        for (int p = 0; p < points_per_block; ++p) {
            const double x = static_cast<double>(b) + 1.0 + unit(gen);
            const double t = x - 1.0;
            // The solved functions vanish on [0, 1), so their integrals run
            // from 1; starting there (rather than cutting at 1) keeps
            // endpoint quadrature nodes off the jump of u1, u2 at the knot.
            const bool active = t > 1.0;
            const auto cuts = integer_cuts(1.0, t);

            const double i1 = active ? integrate_split<double>(
                                           [&](double y) { return solution.u1.value_at(y); }, 1.0,
                                           t, quad_order, cuts)
                                     : 0.0;
            report.u1_max = std::max(report.u1_max,
                                     std::abs(solution.u1.value_at(x) - (2.0 / t) * i1 - 1.0));

            // Kernel form as written, no Q(x−y) factorization.
            const Vec2 iv = integrate<Vec2>([](double y) { return circle_point(y); }, 0.0, t,
                                            quad_order);
            const Vec2 ik = active ? integrate_split<Vec2>(
                                         [&](double y) {
                                             const Vec2 a = solution.u2.value_at(y);
                                             return a + rotation(x - y).apply(a);
                                         },
                                         1.0, t, quad_order, cuts)
                                   : Vec2{};
            const Vec2 r2 = solution.u2.value_at(x) - (iv + ik) / t;
            report.u2_max = std::max(report.u2_max, value_traits<Vec2>::max_abs(r2));

            const double i3 = active ? integrate_split<double>(
                                           [&](double y) { return solution.u3.value_at(y); }, 1.0,
                                           t, quad_order, cuts)
                                     : 0.0;
            report.u3_max = std::max(
                report.u3_max, std::abs(solution.u3.value_at(x) - (2.0 / t) * i3 -
                                        g3_at(x, solution.u2, g3_config)));
        }
    }
    return report;
}

} // namespace renyi
