#include <cmath>
#include <cstdint>
#include <vector>

#include <doctest.h>

#include "renyi/simulator.hpp"
#include "test_support.hpp"

using namespace renyi;

namespace {

struct RunningStat {
    double sum = 0.0;
    double sum_sq = 0.0;
    std::int64_t n = 0;
    void add(double v) {
        sum += v;
        sum_sq += v * v;
        ++n;
    }
    double mean() const { return sum / static_cast<double>(n); }
    double std_error() const {
        const double m = mean();
        const double var = std::max(0.0, (sum_sq - m * sum) / static_cast<double>(n - 1));
        return std::sqrt(var / static_cast<double>(n));
    }
};

} // namespace

TEST_CASE("sample_renyi: deterministic small-domain cases") {
    for (std::uint64_t i = 0; i < 100; ++i) {
        SampleRng rng(1, i);
        CHECK(sample_renyi(0.99, rng).positions.empty());
        SampleRng rng2(1, i);
        CHECK(sample_renyi(1.0, rng2).positions.empty()); // measure-zero single slot
        SampleRng rng3(1, i);
        const RenyiSample s = sample_renyi(1.8, rng3);
        REQUIRE(s.positions.size() == 1);
        CHECK(s.positions[0] >= 0.0);
        CHECK(s.positions[0] <= 0.8);
    }
}

TEST_CASE("samples satisfy separation, bounds, jamming, and the pair identity") {
    const double x = 5.0;
    for (std::uint64_t i = 0; i < 10000; ++i) {
        SampleRng rng(99, i);
        const RenyiSample s = sample_renyi(x, rng);
        const auto& y = s.positions;
        if (!y.empty()) {
            CHECK(y.front() >= 0.0);
            CHECK(y.back() <= x - 1.0);
        }
        // Physical gaps: before the first car, between cars, after the last.
        double gap = y.empty() ? x : y.front();
        CHECK(gap < 1.0 + 1e-12);
        for (std::size_t j = 0; j + 1 < y.size(); ++j) {
            CHECK(y[j + 1] - y[j] >= 1.0 - 1e-12);
            CHECK(y[j + 1] - (y[j] + 1.0) < 1.0 + 1e-12);
        }
        if (!y.empty()) CHECK(x - (y.back() + 1.0) < 1.0 + 1e-12);

        const FeatureSet f = features(s);
        CHECK(f.count == static_cast<std::int64_t>(y.size()));
        CHECK(std::abs(f.squared_norm - (f.count + 2.0 * f.pair_cosine)) <= 1e-10);
        CHECK(std::abs(f.pair_cosine) <= f.count * (f.count - 1) / 2.0 + 1e-12);
    }
}

TEST_CASE("features: hand-checked configurations") {
    FeatureSet empty = features(RenyiSample{0.5, {}});
    CHECK(empty.count == 0);
    CHECK(empty.vector_sum == Vec2{0.0, 0.0});
    CHECK(empty.pair_cosine == 0.0);
    CHECK(empty.squared_norm == 0.0);

    FeatureSet one = features(RenyiSample{1.5, {0.0}});
    CHECK(one.count == 1);
    CHECK(one.vector_sum == Vec2{1.0, 0.0});
    CHECK(one.pair_cosine == 0.0);
    CHECK(one.squared_norm == 1.0);

    // {0, 3}: F = (1,0) + (-1,0) = 0, E2 = cos(pi) = -1, L2 = 0 = K + 2 E2.
    FeatureSet pair = features(RenyiSample{4.5, {0.0, 3.0}});
    CHECK(pair.count == 2);
    CHECK(std::abs(pair.vector_sum.x) < 1e-15);
    CHECK(std::abs(pair.vector_sum.y) < 1e-15);
    CHECK(pair.pair_cosine == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(std::abs(pair.squared_norm) < 1e-30);
}

TEST_CASE("translation: shifted sampling reuses the same gap-length draws") {
    for (std::uint64_t i = 0; i < 200; ++i) {
        SampleRng rng_base(5, i);
        SampleRng rng_shift(5, i);
        const RenyiSample base = sample_renyi(4.3, rng_base);
        const std::vector<double> shifted = sample_positions_in(2.5, 6.8, rng_shift);
        REQUIRE(shifted.size() == base.positions.size());
        for (std::size_t j = 0; j < shifted.size(); ++j)
            CHECK(shifted[j] == 2.5 + base.positions[j]); // bitwise
    }
}

TEST_CASE("estimate: degenerate cases") {
    const EstimateSet zero = estimate(0.5, 1000, 7);
    CHECK(zero.count.mean == 0.0);
    CHECK(zero.count.std_error == 0.0);
    CHECK(zero.squared_norm.mean == 0.0);

    const EstimateSet one = estimate(1.8, 1000, 7);
    CHECK(one.count.mean == 1.0);
    CHECK(one.count.std_error == 0.0);

    CHECK_THROWS_AS(estimate(5.0, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(estimate(5.0, 10, 1, 0), std::invalid_argument);
}

TEST_CASE("estimate is identical for any worker count") {
    const EstimateSet a = estimate(5.0, 20000, 42, 1);
    const EstimateSet b = estimate(5.0, 20000, 42, 4);
    const EstimateSet c = estimate(5.0, 20000, 42, 3);
    CHECK(a.count.mean == b.count.mean);
    CHECK(a.count.std_error == b.count.std_error);
    CHECK(a.vector_sum.mean == b.vector_sum.mean);
    CHECK(a.vector_sum.std_error == b.vector_sum.std_error);
    CHECK(a.pair_cosine.mean == b.pair_cosine.mean);
    CHECK(a.squared_norm.mean == c.squared_norm.mean);
    CHECK(a.pair_cosine.std_error == c.pair_cosine.std_error);
}

TEST_CASE("estimate agrees with known expectations") {
    // E K(0, 2.5) = 5/3 (hand-integrated count equation).
    const EstimateSet small = estimate(2.5, 200000, 1234);
    CHECK(std::abs(small.count.mean - 5.0 / 3.0) <= 4.0 * small.count.std_error);

    // Frozen solver endpoint values at x = 5.
    const EstimateSet big = estimate(5.0, 200000, 4321);
    CHECK(std::abs(big.count.mean - 3.4850859249807544) <= 4.0 * big.count.std_error);
    CHECK(std::abs(big.vector_sum.mean.x - (-0.49886607469789568)) <=
          4.0 * big.vector_sum.std_error.x);
    CHECK(std::abs(big.vector_sum.mean.y - 0.8640613875492047) <=
          4.0 * big.vector_sum.std_error.y);
    CHECK(std::abs(big.pair_cosine.mean - (-1.1285584528977672)) <=
          4.0 * big.pair_cosine.std_error);
    const double l2_expected = 3.4850859249807544 + 2.0 * (-1.1285584528977672);
    CHECK(std::abs(big.squared_norm.mean - l2_expected) <= 4.0 * big.squared_norm.std_error);
}

TEST_CASE("splitting consistency at x = 3 (stratified vs direct)") {
    // Condition on the first car at y (uniform on [0, 2]); each stratum
    // contributes 1 + K(0, y) + K(0, 2 - y).
    const int grid = 40;
    const std::int64_t per_cell = 2500;
    RunningStat strata_mean;
    double strata_var_sum = 0.0;
    for (int g = 0; g < grid; ++g) {
        const double y = 2.0 * (g + 0.5) / grid;
        const EstimateSet left = estimate(y, per_cell, 1000 + static_cast<std::uint64_t>(g));
        const EstimateSet right = estimate(2.0 - y, per_cell, 5000 + static_cast<std::uint64_t>(g));
        strata_mean.add(1.0 + left.count.mean + right.count.mean);
        strata_var_sum += left.count.std_error * left.count.std_error +
                          right.count.std_error * right.count.std_error;
    }
    const double stratified = strata_mean.mean();
    const double stratified_se = std::sqrt(strata_var_sum) / grid;

    const EstimateSet direct = estimate(3.0, 100000, 31337);
    const double combined =
        std::sqrt(stratified_se * stratified_se + direct.count.std_error * direct.count.std_error);
    CHECK(std::abs(stratified - direct.count.mean) <= 4.0 * combined);
}

TEST_CASE("sample_accretion: fixed first disk, separation, headline means") {
    RunningStat count_stat;
    RunningStat shift_stat;
    for (std::uint64_t i = 0; i < 50000; ++i) {
        SampleRng rng(2024, i);
        const std::vector<Vec2> centres = sample_accretion(rng);
        REQUIRE(!centres.empty());
        CHECK(centres.front() == Vec2{1.0, 0.0});
        Vec2 total{0.0, 0.0};
        for (const Vec2& c : centres) {
            CHECK(std::abs(norm(c) - 1.0) < 1e-14);
            total += c;
        }
        if (i < 2000) {
            for (std::size_t a = 0; a < centres.size(); ++a)
                for (std::size_t b = a + 1; b < centres.size(); ++b)
                    CHECK(dot(centres[a], centres[b]) <= 0.5 + 1e-12);
        }
        count_stat.add(static_cast<double>(centres.size()));
        shift_stat.add(squared_norm(total));
    }
    CHECK(std::abs(count_stat.mean() - 4.48508592498075) <= 4.0 * count_stat.std_error());
    CHECK(std::abs(shift_stat.mean() - 0.2325047203936) <= 4.0 * shift_stat.std_error());
}

TEST_CASE("SampleRng substreams are reproducible and distinct") {
    SampleRng a(10, 20);
    SampleRng b(10, 20);
    SampleRng c(10, 21);
    bool all_equal = true;
    for (int i = 0; i < 16; ++i) {
        const std::uint64_t va = a.next_u64();
        CHECK(va == b.next_u64());
        all_equal = all_equal && (va == c.next_u64());
    }
    CHECK(!all_equal);
    SampleRng d(11, 0);
    const double u = d.next_unit();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
}
