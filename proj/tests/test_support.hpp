#pragma once

#include <string>
#include <vector>

#include "renyi/geometry.hpp"
#include "renyi/solver.hpp"

// Hand-derived oracles and independent numerics used only by the tests.
// Nothing here calls the library quadrature or the solver internals, so
// agreement is a genuine cross-check.
namespace support {

/// Sine integral Si(z) = ∫₀ᶻ sin(u)/u du by Maclaurin series (|z| ≲ 6).
double si(double z);

/// Cin(z) = ∫₀ᶻ (1 − cos u)/u du by Maclaurin series (|z| ≲ 6).
double cin(double z);

/// Piecewise-analytic solution of the count equation on [0, 4]:
///   0 on [0,1); 1 on [1,2); 1 + 2(x−2)/(x−1) on [2,3);
///   1 + 2(3t − 5 − 2·ln(t−1))/t with t = x−1 on [3,4].
double analytic_u1(double x);

/// Closed form of the vector equation on [0, 3] (derived by integrating the
/// equation blockwise; the [2,3] branch is in terms of Si and Cin).
renyi::Vec2 analytic_u2(double x);

/// Closed form of the pair-sum equation on [0, 3]:
///   0 on [0,2]; (3/(π(x−1)))·(Si(z) − √3·Cin(z)) with z = π(x−2)/3 on (2,3].
double analytic_u3(double x);

/// Gauss–Legendre rule on [−1, 1] (nodes by Newton iteration); independent
/// of the library's Clenshaw–Curtis quadrature.
class GaussLegendre {
public:
    explicit GaussLegendre(int order);

    template <class F>
    double integrate(F&& f, double a, double b) const {
        const double mid = 0.5 * (a + b);
        const double half = 0.5 * (b - a);
        double acc = 0.0;
        for (std::size_t i = 0; i < nodes_.size(); ++i)
            acc += weights_[i] * f(mid + half * nodes_[i]);
        return acc * half;
    }

    /// Integrate with the interval split at every integer interior to (a, b)
    /// and at the extra cut points.
    template <class F>
    double integrate_split(F&& f, double a, double b, std::vector<double> cuts = {}) const {
        for (double k = std::floor(a) + 1.0; k < b; k += 1.0)
            if (k > a) cuts.push_back(k);
        cuts.push_back(b);
        std::sort(cuts.begin(), cuts.end());
        double acc = 0.0;
        double lo = a;
        for (double c : cuts) {
            const double hi = std::min(std::max(c, a), b);
            if (hi - lo > 1e-12) {
                acc += integrate(f, lo, hi);
                lo = hi;
            }
        }
        return acc;
    }

private:
    std::vector<double> nodes_;
    std::vector<double> weights_;
};

struct Residuals {
    double u1 = 0.0;
    double u2 = 0.0;
    double u3 = 0.0;
};

/// Residuals of all three equations at one point, with every right-hand-side
/// integral (including the g3 convolution) recomputed by the given
/// Gauss–Legendre rule directly from value_at.
Residuals equation_residuals_at(const renyi::Solution& solution, double x,
                                const GaussLegendre& rule);

struct CliResult {
    int status = -1;
    std::string output;
};

/// Run the CLI binary with the given argument string; captures stdout,
/// discards stderr, returns the exit status.
CliResult run_cli(const std::string& args);

} // namespace support
