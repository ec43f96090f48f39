#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "renyi/chebyshev.hpp"
#include "renyi/errors.hpp"
#include "renyi/geometry.hpp"

namespace renyi {

/// A function on [0, x_max] that vanishes identically on [0, 1) and is
/// assembled from Chebyshev blocks on the unit intervals [1,2], [2,3], ...
/// Interior knots use the closed-left convention: value_at(k) reads the
/// block [k, k+1).
///
/// Blocks are appended in order and immutable afterwards; each append also
/// stores the block antiderivative and the running integral over earlier
/// blocks, so cumulative integrals are exact for the stored representation.
template <class T>
class PiecewiseFunction {
public:
    using traits = value_traits<T>;

    PiecewiseFunction() = default;

    /// End of the covered domain: 1.0 when empty, else the last knot.
    double domain_end() const { return blocks_.empty() ? 1.0 : blocks_.back().upper(); }

    std::size_t block_count() const { return blocks_.size(); }

    const ChebyshevBlock<T>& block(std::size_t i) const { return blocks_.at(i); }

    /// Append the next unit block on [domain_end(), domain_end() + 1].
    void append_block(ChebyshevBlock<T> b) {
        constexpr double tol = 1e-9;
        const double knot = domain_end();
        if (std::abs(b.lower() - knot) > tol || std::abs(b.upper() - (knot + 1.0)) > tol)
            throw std::invalid_argument("PiecewiseFunction: block must cover [" + std::to_string(knot) +
                                        ", " + std::to_string(knot + 1.0) + "]");
        prefix_.push_back(blocks_.empty()
                              ? traits::zero()
                              : prefix_.back() + anti_.back().evaluate(blocks_.back().upper()));
        anti_.push_back(b.antiderivative());
        blocks_.push_back(std::move(b));
    }

    T value_at(double x) const {
        const std::size_t i = locate(x, "value_at");
        if (i == kZeroPrefix) return traits::zero();
        return blocks_[i].evaluate(x);
    }

    /// ∫₀ᵗ u(y) dy, exact for the stored polynomial representation.
    T cumulative_integral(double t) const {
        const std::size_t i = locate(t, "cumulative_integral");
        if (i == kZeroPrefix) return traits::zero();
        return prefix_[i] + anti_[i].evaluate(t);
    }

    /// cumulative_integral with the rounding to double left to the caller, so
    /// a right-hand side built from several cumulative integrals can round
    /// once per sample instead of once per term.
    std::array<long double, traits::components> cumulative_integral_ld(double t) const {
        const std::size_t i = locate(t, "cumulative_integral");
        if (i == kZeroPrefix) return {};
        auto out = anti_[i].evaluate_ld(t);
        for (int c = 0; c < traits::components; ++c)
            out[static_cast<std::size_t>(c)] +=
                static_cast<long double>(traits::component(prefix_[i], c));
        return out;
    }

private:
    static constexpr std::size_t kZeroPrefix = static_cast<std::size_t>(-1);

    // Map x to a block index, kZeroPrefix for the zero prefix [0,1).
    std::size_t locate(double x, const char* op) const {
        constexpr double slack = 1e-12;
        if (x < -slack || x > domain_end() + slack)
            throw OutOfDomainError(std::string("PiecewiseFunction::") + op + ": x = " +
                                   std::to_string(x) + " outside [0, " +
                                   std::to_string(domain_end()) + "]");
        if (x < 1.0 || blocks_.empty()) return kZeroPrefix;
        auto i = static_cast<std::size_t>(x - 1.0); // block [k, k+1) with k = floor(x)
        return std::min(i, blocks_.size() - 1);     // x == domain_end falls to the last block
    }

    std::vector<ChebyshevBlock<T>> blocks_;
    std::vector<ChebyshevBlock<T>> anti_; // per-block antiderivatives, zero at each block start
    std::vector<T> prefix_;               // ∫₀^{block lower} u
};

/// Caches ∫ weight(y)·u(y) dy block antiderivatives for a fixed weight, so a
/// solver can query the weighted cumulative integral at every collocation
/// node for the cost of one product fit per block.  Extends lazily as the
/// underlying function grows.
template <class T>
class WeightedCumulative {
public:
    WeightedCumulative(const PiecewiseFunction<T>& u, std::function<double(double)> weight,
                       FitOptions options = {})
        : u_(u), weight_(std::move(weight)), options_(options) {}

    /// ∫₀ᵗ weight(y)·u(y) dy.  Requires t ≤ u.domain_end().
    T value(double t) {
        using traits = value_traits<T>;
        if (t <= 1.0 || u_.block_count() == 0) {
            if (t < -1e-12 || t > u_.domain_end() + 1e-12)
                throw OutOfDomainError("WeightedCumulative::value: t = " + std::to_string(t));
            return traits::zero();
        }
        extend_through(t);
        const auto last = std::min(static_cast<std::size_t>(t - 1.0), anti_.size() - 1);
        return prefix_[last] + anti_[last].evaluate(t);
    }

    /// value() without the final rounding (see
    /// PiecewiseFunction::cumulative_integral_ld).
    std::array<long double, value_traits<T>::components> value_ld(double t) {
        using traits = value_traits<T>;
        if (t <= 1.0 || u_.block_count() == 0) {
            if (t < -1e-12 || t > u_.domain_end() + 1e-12)
                throw OutOfDomainError("WeightedCumulative::value_ld: t = " + std::to_string(t));
            return {};
        }
        extend_through(t);
        const auto last = std::min(static_cast<std::size_t>(t - 1.0), anti_.size() - 1);
        auto out = anti_[last].evaluate_ld(t);
        for (int c = 0; c < traits::components; ++c)
            out[static_cast<std::size_t>(c)] +=
                static_cast<long double>(traits::component(prefix_[last], c));
        return out;
    }

private:
    void extend_through(double t) {
        using traits = value_traits<T>;
        if (t > u_.domain_end() + 1e-12)
            throw OutOfDomainError("WeightedCumulative: t = " + std::to_string(t) +
                                   " beyond fitted domain end " + std::to_string(u_.domain_end()));
        const auto needed = std::min(static_cast<std::size_t>(t - 1.0) + 1, u_.block_count());
        while (anti_.size() < needed) {
            const auto& b = u_.block(anti_.size());
            auto product = fit<T>([&](double y) { return b.evaluate(y) * weight_(y); }, b.lower(),
                                  b.upper(), options_);
            prefix_.push_back(anti_.empty() ? traits::zero()
                                            : prefix_.back() + anti_.back().evaluate(b.lower()));
            anti_.push_back(product.antiderivative());
        }
    }

    const PiecewiseFunction<T>& u_;
    std::function<double(double)> weight_;
    FitOptions options_;
    std::vector<ChebyshevBlock<T>> anti_;
    std::vector<T> prefix_;
};

/// One-shot ∫₀ᵗ weight(y)·u(y) dy (see WeightedCumulative for the cached form).
template <class T>
T weighted_cumulative_integral(const PiecewiseFunction<T>& u, const std::function<double(double)>& weight,
                               double t, FitOptions options = {}) {
    WeightedCumulative<T> w(u, weight, options);
    return w.value(t);
}

} // namespace renyi
