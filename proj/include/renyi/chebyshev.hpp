#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "renyi/errors.hpp"
#include "renyi/geometry.hpp"

namespace renyi {

/// Componentwise access used by the Chebyshev transform so that scalar and
/// Vec2-valued series share one implementation.
template <class T>
struct value_traits;

template <>
struct value_traits<double> {
    static constexpr int components = 1;
    static constexpr double zero() { return 0.0; }
    static double component(double v, int) { return v; }
    static void set_component(double& v, int, double c) { v = c; }
    static double max_abs(double v) { return std::abs(v); }
};

template <>
struct value_traits<Vec2> {
    static constexpr int components = 2;
    static constexpr Vec2 zero() { return {}; }
    static double component(const Vec2& v, int i) { return i == 0 ? v.x : v.y; }
    static void set_component(Vec2& v, int i, double c) { (i == 0 ? v.x : v.y) = c; }
    static double max_abs(const Vec2& v) { return std::max(std::abs(v.x), std::abs(v.y)); }
};

namespace detail {

/// Chebyshev-Lobatto points for degree n, ordered j = 0..n so that the
/// standard coordinate is t_j = cos(j*pi/n) (right endpoint first).
inline std::vector<double> lobatto_points(int n) {
    std::vector<double> t(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j <= n; ++j)
        t[static_cast<std::size_t>(j)] = static_cast<double>(std::cos(kPiL * j / n));
    // Pin the symmetric values so the grid is exactly symmetric.
    t[0] = 1.0;
    t[static_cast<std::size_t>(n)] = -1.0;
    if (n % 2 == 0) t[static_cast<std::size_t>(n / 2)] = 0.0;
    return t;
}

/// Discrete Chebyshev transform: given samples y_j = f(cos(j*pi/n)),
/// returns coefficients a_k with f = sum a_k T_k interpolating the samples.
/// Accumulates in extended precision; the direct O(n^2) sum is plenty fast
/// for the degrees used here (<= 256).
template <class T>
std::vector<T> lobatto_transform(const std::vector<T>& samples) {
    using traits = value_traits<T>;
    const int n = static_cast<int>(samples.size()) - 1;
    std::vector<T> coeffs(samples.size(), traits::zero());
    // The angle factors need the full long double pi: promoting the double
    // constant biases every angle by ~1.2e-16, and with O(1) samples that
    // bias leaks a systematic few-1e-16 into each coefficient -- a plateau
    // that never decays and stalls fits at tolerances near 1e-15.
    for (int k = 0; k <= n; ++k) {
        for (int c = 0; c < traits::components; ++c) {
            long double acc = 0.0L;
            for (int j = 0; j <= n; ++j) {
                long double w = (j == 0 || j == n) ? 0.5L : 1.0L;
                // cos(k*j*pi/n), reduced mod 2n to keep the argument small.
                int m = (k * j) % (2 * n);
                long double cj = std::cos(kPiL * m / n);
                acc += w * cj * static_cast<long double>(traits::component(samples[static_cast<std::size_t>(j)], c));
            }
            acc *= 2.0L / n;
            if (k == 0 || k == n) acc *= 0.5L;
            traits::set_component(coeffs[static_cast<std::size_t>(k)], c, static_cast<double>(acc));
        }
    }
    return coeffs;
}

} // namespace detail

/// A single Chebyshev series on an interval [a, b]:
///   p(x) = sum_k c_k T_k(t),  t = (2x - a - b) / (b - a).
template <class T>
class ChebyshevBlock {
public:
    using traits = value_traits<T>;

    ChebyshevBlock(double a, double b, std::vector<T> coefficients)
        : a_(a), b_(b), coeffs_(std::move(coefficients)) {
        if (!(a_ < b_)) throw std::invalid_argument("ChebyshevBlock: interval must satisfy a < b");
        if (coeffs_.empty()) coeffs_.push_back(traits::zero());
    }

    double lower() const { return a_; }
    double upper() const { return b_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<T>& coefficients() const { return coeffs_; }

    /// Clenshaw evaluation.  Points may overshoot the interval by up to
    /// 1e-12 (they are clamped); anything further out throws.
    T evaluate(double x) const {
        constexpr double slack = 1e-12;
        if (x < a_ - slack || x > b_ + slack)
            throw OutOfDomainError("ChebyshevBlock::evaluate: x = " + std::to_string(x) +
                                   " outside [" + std::to_string(a_) + ", " + std::to_string(b_) + "]");
        double t = (2.0 * x - a_ - b_) / (b_ - a_);
        t = std::clamp(t, -1.0, 1.0);
        return clenshaw(t);
    }

    /// Evaluation with the rounding to double left to the caller.  Solver
    /// right-hand sides combine several evaluations per sample; rounding each
    /// intermediate would leave staircase noise of a few ulps of the summands,
    /// which is enough to stall an adaptive fit at tolerances near 1e-15.
    std::array<long double, traits::components> evaluate_ld(double x) const {
        constexpr double slack = 1e-12;
        if (x < a_ - slack || x > b_ + slack)
            throw OutOfDomainError("ChebyshevBlock::evaluate_ld: x = " + std::to_string(x) +
                                   " outside [" + std::to_string(a_) + ", " + std::to_string(b_) + "]");
        const long double t = std::clamp(
            (2.0L * x - a_ - b_) / (static_cast<long double>(b_) - a_), -1.0L, 1.0L);
        std::array<long double, traits::components> out{};
        for (int c = 0; c < traits::components; ++c)
            out[static_cast<std::size_t>(c)] =
                static_cast<long double>(traits::component(coeffs_[0], c)) + tail_ld(t, c);
        return out;
    }

    /// Antiderivative G with G(lower()) == 0 (exactly, by construction of
    /// the constant term).
    ChebyshevBlock antiderivative() const {
        const int n = degree();
        const double h = 0.5 * (b_ - a_); // dx/dt
        std::vector<T> out(static_cast<std::size_t>(n) + 2, traits::zero());
        auto at = [&](int k) { return k <= n ? coeffs_[static_cast<std::size_t>(k)] : traits::zero(); };
        // d/dt sum b_k T_k = sum a_k T_k  =>  b_1 = a_0 - a_2/2, b_k = (a_{k-1} - a_{k+1}) / (2k).
        out[1] = (at(0) - at(2) * 0.5) * h;
        for (int k = 2; k <= n + 1; ++k)
            out[static_cast<std::size_t>(k)] = (at(k - 1) - at(k + 1)) * (h / (2.0 * k));
        ChebyshevBlock g(a_, b_, std::move(out));
        // Fix the constant so that g(a) is exactly zero: Clenshaw at t = -1
        // with the same coefficients reproduces the same rounding.
        g.coeffs_[0] = traits::zero();
        g.coeffs_[0] = -g.clenshaw(-1.0);
        return g;
    }

private:
    // Clenshaw recurrence for sum_{k>=1} c_k T_k(t) in extended precision.
    long double tail_ld(long double tt, int c) const {
        long double b1 = 0.0L;
        long double b2 = 0.0L;
        for (int k = degree(); k >= 1; --k) {
            const long double next =
                static_cast<long double>(traits::component(coeffs_[static_cast<std::size_t>(k)], c)) +
                2.0L * tt * b1 - b2;
            b2 = b1;
            b1 = next;
        }
        return tt * b1 - b2;
    }

    T clenshaw(double t) const {
        // The k >= 1 tail is rounded to double before the constant term is
        // added, so a constant chosen as its exact negation cancels bitwise
        // (this is what lets antiderivative() pin G(a) to exactly zero).
        T out = traits::zero();
        const long double tt = t;
        for (int c = 0; c < traits::components; ++c) {
            const double tail = static_cast<double>(tail_ld(tt, c));
            traits::set_component(out, c, traits::component(coeffs_[0], c) + tail);
        }
        return out;
    }

    double a_;
    double b_;
    std::vector<T> coeffs_;
};

/// Options controlling adaptive fits.
struct FitOptions {
    double tolerance = 1e-14; ///< relative to max(1, sup |f|) on the interval
    int max_degree = 256;
};

namespace detail {

/// The Lobatto points mapped to [a, b].  The endpoints (and the centre) are
/// pinned to a, b, and the exact midpoint: the affine map can round one ulp
/// past the interval, which matters when f jumps at a knot shared with an
/// interval end (one poisoned endpoint sample shifts every coefficient).
inline std::vector<double> lobatto_abscissae(double a, double b, int n) {
    const auto t = lobatto_points(n);
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    std::vector<double> x(t.size());
    for (std::size_t j = 0; j < t.size(); ++j) {
        if (t[j] == 1.0)
            x[j] = b;
        else if (t[j] == -1.0)
            x[j] = a;
        else if (t[j] == 0.0)
            x[j] = mid;
        else
            x[j] = mid + half * t[j];
    }
    return x;
}

template <class T, class F>
std::vector<T> sample_lobatto(F&& f, double a, double b, int n) {
    const auto x = lobatto_abscissae(a, b, n);
    std::vector<T> samples(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) samples[j] = f(x[j]);
    return samples;
}

} // namespace detail

/// Adaptively fit f on [a, b]: double the degree (8, 16, ..., max_degree)
/// until the last two Chebyshev coefficients fall below
/// tolerance * max(1, sup |f|), truncate the converged tail, and verify the
/// truncated series against f on a twice-finer grid.  Throws
/// NonConvergenceError if max_degree is reached without convergence.
template <class T, class F>
ChebyshevBlock<T> fit(F&& f, double a, double b, const FitOptions& opt = {}) {
    using traits = value_traits<T>;
    if (!(a < b)) throw std::invalid_argument("fit: interval must satisfy a < b");
    if (!(opt.tolerance > 0.0)) throw std::invalid_argument("fit: tolerance must be positive");
    if (opt.max_degree < 4) throw std::invalid_argument("fit: max_degree must be at least 4");

    int n = std::min(8, opt.max_degree);
    for (;;) {
        auto samples = detail::sample_lobatto<T>(f, a, b, n);
        double scale = 1.0;
        for (const auto& s : samples) scale = std::max(scale, traits::max_abs(s));
        auto coeffs = detail::lobatto_transform(samples);
        const double thresh = opt.tolerance * scale;

        const double tail = std::max(traits::max_abs(coeffs[coeffs.size() - 1]),
                                     traits::max_abs(coeffs[coeffs.size() - 2]));
        if (tail <= thresh) {
            // Truncate: keep everything above threshold plus two tail terms.
            int last = -1;
            for (int k = n; k >= 0; --k) {
                if (traits::max_abs(coeffs[static_cast<std::size_t>(k)]) > thresh) {
                    last = k;
                    break;
                }
            }
            int keep = std::min(n, last + 2);
            coeffs.resize(static_cast<std::size_t>(keep) + 1);
            ChebyshevBlock<T> block(a, b, std::move(coeffs));

            // Verify on the twice-finer Lobatto grid.
            const auto xs = detail::lobatto_abscissae(a, b, 2 * n);
            double err = 0.0;
            for (double xj : xs) err = std::max(err, traits::max_abs(f(xj) - block.evaluate(xj)));
            if (err <= thresh) return block;
        }
        if (n >= opt.max_degree)
            throw NonConvergenceError("fit: no convergence on [" + std::to_string(a) + ", " +
                                      std::to_string(b) + "] at degree " + std::to_string(n));
        n = std::min(2 * n, opt.max_degree);
    }
}

/// Fixed-order Clenshaw-Curtis quadrature of f over [a, b]: interpolate at
/// order+1 Lobatto points and integrate the interpolant exactly.  Exact for
/// polynomials of degree <= order; spectrally accurate for smooth f.
template <class T, class F>
T integrate(F&& f, double a, double b, int order) {
    using traits = value_traits<T>;
    if (order < 2) throw std::invalid_argument("integrate: order must be at least 2");
    if (a == b) return traits::zero();
    const bool flip = b < a;
    if (flip) std::swap(a, b);
    auto coeffs = detail::lobatto_transform(detail::sample_lobatto<T>(f, a, b, order));
    // Integral of T_k over [-1, 1] is 2/(1 - k^2) for even k, 0 for odd k.
    T acc = traits::zero();
    for (int c = 0; c < traits::components; ++c) {
        long double s = 0.0L;
        for (int k = 0; k <= order; k += 2)
            s += static_cast<long double>(traits::component(coeffs[static_cast<std::size_t>(k)], c)) *
                 (2.0L / (1.0L - static_cast<long double>(k) * k));
        traits::set_component(acc, c, static_cast<double>(s));
    }
    acc *= 0.5 * (b - a);
    return flip ? -acc : acc;
}

} // namespace renyi
