#include "renyi/simulator.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace renyi {

namespace {

struct Gap {
    double lo;
    double hi;
    double measure() const { return hi - lo - 1.0; }
};

/// Neumaier-compensated add: s + c carries the running total.
void compensated_add(double& s, double& c, double v) {
    const double t = s + v;
    if (std::abs(s) >= std::abs(v))
        c += (s - t) + v;
    else
        c += (v - t) + s;
    s = t;
}

/// Sums of the five tracked feature values (K, F_x, F_y, E2, L2) and of
/// their squares over a batch of samples, accumulated with compensation so
/// the reduction is exact enough to be order-insensitive in practice --
/// chunks are nevertheless always merged in index order.
struct Accumulator {
    static constexpr int kValues = 5;
    double sum[2 * kValues] = {};
    double comp[2 * kValues] = {};

    void add(const FeatureSet& f) {
        const double vals[kValues] = {static_cast<double>(f.count), f.vector_sum.x,
                                      f.vector_sum.y, f.pair_cosine, f.squared_norm};
        for (int i = 0; i < kValues; ++i) {
            compensated_add(sum[i], comp[i], vals[i]);
            compensated_add(sum[kValues + i], comp[kValues + i], vals[i] * vals[i]);
        }
    }

    void merge(const Accumulator& o) {
        for (int i = 0; i < 2 * kValues; ++i) {
            compensated_add(sum[i], comp[i], o.sum[i]);
            compensated_add(sum[i], comp[i], o.comp[i]);
        }
    }

    double total(int i) const { return sum[i] + comp[i]; }
};

McEstimate moments_to_estimate(double s1, double s2, std::int64_t n) {
    McEstimate e;
    e.mean = s1 / static_cast<double>(n);
    if (n > 1) {
        const double var = std::max(0.0, (s2 - e.mean * s1) / static_cast<double>(n - 1));
        e.std_error = std::sqrt(var / static_cast<double>(n));
    }
    return e;
}

constexpr std::int64_t kChunkSize = 8192;

} // namespace

RenyiSample sample_renyi(double x, SampleRng& rng) {
    RenyiSample sample;
    sample.domain_length = x;
    std::vector<Gap> gaps;
    if (x - 1.0 > 0.0) gaps.push_back({0.0, x});
    while (!gaps.empty()) {
        double total = 0.0;
        for (const Gap& g : gaps) total += g.measure();
        const double r = rng.next_unit() * total;
        std::size_t pick = gaps.size() - 1;
        double running = 0.0;
        for (std::size_t i = 0; i < gaps.size(); ++i) {
            running += gaps[i].measure();
            if (r < running) {
                pick = i;
                break;
            }
        }
        const Gap g = gaps[pick];
        const double y = g.lo + rng.next_unit() * g.measure();
        sample.positions.push_back(y);
        gaps[pick] = gaps.back();
        gaps.pop_back();
        // Children are kept only when another car strictly fits (gaps whose
        // single admissible position has measure zero are discarded).
        if (g.hi - (y + 1.0) > 1.0) gaps.push_back({y + 1.0, g.hi});
        if (y - g.lo > 1.0) gaps.push_back({g.lo, y});
    }
    std::sort(sample.positions.begin(), sample.positions.end());
    return sample;
}

std::vector<double> sample_positions_in(double a, double b, SampleRng& rng) {
    RenyiSample base = sample_renyi(b - a, rng);
    std::vector<double> shifted;
    shifted.reserve(base.positions.size());
    for (double y : base.positions) shifted.push_back(a + y);
    return shifted;
}

FeatureSet features(const RenyiSample& sample) {
    FeatureSet f;
    f.count = static_cast<std::int64_t>(sample.positions.size());
    for (double y : sample.positions) f.vector_sum += circle_point(y);
    const std::size_t n = sample.positions.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            f.pair_cosine += std::cos(kPi * (sample.positions[i] - sample.positions[j]) / 3.0);
    f.squared_norm = squared_norm(f.vector_sum);
    return f;
}

std::vector<Vec2> sample_accretion(SampleRng& rng) {
    std::vector<Vec2> centres{Vec2{1.0, 0.0}}; // first disk fixed at v(0)
    const RenyiSample s = sample_renyi(5.0, rng);
    centres.reserve(s.positions.size() + 1);
    for (double y : s.positions) centres.push_back(circle_point(1.0 + y));
    return centres;
}

EstimateSet estimate(double x, std::int64_t n_samples, std::uint64_t seed, int workers) {
    if (n_samples < 1) throw std::invalid_argument("estimate: n_samples must be at least 1");
    if (workers < 1) throw std::invalid_argument("estimate: workers must be at least 1");

    const std::int64_t n_chunks = (n_samples + kChunkSize - 1) / kChunkSize;
    std::vector<Accumulator> chunks(static_cast<std::size_t>(n_chunks));

    auto run_chunk = [&](std::int64_t c) {
        Accumulator acc;
        const std::int64_t lo = c * kChunkSize;
        const std::int64_t hi = std::min(n_samples, lo + kChunkSize);
        for (std::int64_t i = lo; i < hi; ++i) {
            SampleRng rng(seed, static_cast<std::uint64_t>(i));
            acc.add(features(sample_renyi(x, rng)));
        }
        chunks[static_cast<std::size_t>(c)] = acc;
    };

    const int n_workers = static_cast<int>(std::min<std::int64_t>(workers, n_chunks));
    if (n_workers <= 1) {
        for (std::int64_t c = 0; c < n_chunks; ++c) run_chunk(c);
    } else {
        std::atomic<std::int64_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(n_workers));
        for (int w = 0; w < n_workers; ++w)
            pool.emplace_back([&] {
                for (std::int64_t c = next.fetch_add(1); c < n_chunks; c = next.fetch_add(1))
                    run_chunk(c);
            });
        for (auto& th : pool) th.join();
    }

    Accumulator total;
    for (const auto& acc : chunks) total.merge(acc);

    EstimateSet out;
    out.x = x;
    out.n_samples = n_samples;
    out.seed = seed;
    out.count = moments_to_estimate(total.total(0), total.total(5), n_samples);
    const McEstimate fx = moments_to_estimate(total.total(1), total.total(6), n_samples);
    const McEstimate fy = moments_to_estimate(total.total(2), total.total(7), n_samples);
    out.vector_sum.mean = {fx.mean, fy.mean};
    out.vector_sum.std_error = {fx.std_error, fy.std_error};
    out.pair_cosine = moments_to_estimate(total.total(3), total.total(8), n_samples);
    out.squared_norm = moments_to_estimate(total.total(4), total.total(9), n_samples);
    return out;
}

} // namespace renyi
