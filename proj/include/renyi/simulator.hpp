#pragma once

#include <cstdint>
#include <vector>

#include "renyi/geometry.hpp"

namespace renyi {

/// One jammed configuration of the parking process on [0, x]: unit cars at
/// [Y_i, Y_i + 1] with sorted left endpoints, pairwise separation ≥ 1, and
/// no residual gap long enough for another car.
struct RenyiSample {
    double domain_length = 0.0;
    std::vector<double> positions;
};

/// Permutation-invariant statistics of one sample under y ↦ v(y).
struct FeatureSet {
    std::int64_t count = 0;      ///< K: number of cars
    Vec2 vector_sum;             ///< F = Σ v(Y_i)
    double pair_cosine = 0.0;    ///< E2 = Σ_{i<j} cos(π(Y_i − Y_j)/3)
    double squared_norm = 0.0;   ///< L2 = ‖F‖² (= K + 2·E2)
};

struct McEstimate {
    double mean = 0.0;
    double std_error = 0.0;
};

struct McVecEstimate {
    Vec2 mean;
    Vec2 std_error;
};

/// Monte Carlo means and standard errors of the features at one x.
struct EstimateSet {
    double x = 0.0;
    std::int64_t n_samples = 0;
    std::uint64_t seed = 0;
    McEstimate count;
    McVecEstimate vector_sum;
    McEstimate pair_cosine;
    McEstimate squared_norm;
};

/// Deterministic per-sample random stream: every (seed, sample_index) pair
/// yields an independent SplitMix64-style sequence, so estimates do not
/// depend on how samples are distributed over workers.
class SampleRng {
public:
    SampleRng(std::uint64_t seed, std::uint64_t sample_index)
        : state_(mix(mix(seed) + sample_index)) {}

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ull;
        return mix(state_);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

/// Draw one jammed configuration on [0, x] by gap-list sampling: pick a
/// feasible gap with probability proportional to its left-endpoint measure,
/// place a car uniformly inside it, split, repeat.  x < 1 (and the
/// measure-zero case of a gap fitting exactly one position) yields no cars.
RenyiSample sample_renyi(double x, SampleRng& rng);

/// Sample on a shifted interval [a, b]: identical gap-length draws as
/// sample_renyi(b − a) with the same stream, positions translated by a.
std::vector<double> sample_positions_in(double a, double b, SampleRng& rng);

FeatureSet features(const RenyiSample& sample);

/// Disk-accretion draw: the fixed first disk centre v(0) = (1,0) followed by
/// v(1 + Y_i) for a parking sample of domain length 5 (interval [1,6] on the
/// circle parameter).
std::vector<Vec2> sample_accretion(SampleRng& rng);

/// Monte Carlo estimate over n_samples independent samples.  Deterministic
/// given (x, n_samples, seed) for any worker count: samples are processed in
/// fixed-size chunks with compensated summation and chunks are reduced in
/// index order.
EstimateSet estimate(double x, std::int64_t n_samples, std::uint64_t seed, int workers = 1);

} // namespace renyi
