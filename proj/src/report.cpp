#include "renyi/report.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "renyi/errors.hpp"

namespace renyi {

namespace {

std::string fmt(const char* format, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, format, v);
    return buf;
}

std::string sig14(double v) { return fmt("%.14g", v); }

} // namespace

HeadlineResults headline(const Solution& solution) {
    if (solution.u1.domain_end() < 5.0)
        throw OutOfDomainError("headline: solution must cover x = 5 (solved to " +
                               std::to_string(solution.u1.domain_end()) + ")");
    const double u1_5 = solution.u1.value_at(5.0);
    const Vec2 u2_5 = solution.u2.value_at(5.0);
    const double u3_5 = solution.u3.value_at(5.0);

    HeadlineResults r;
    r.expected_total_disks = 1.0 + u1_5;
    r.expected_vector_sum = Vec2{1.0, 0.0} + rotation(1.0).apply(u2_5);
    // (cos π/3, −sin π/3)·u2(5) is the first row of Q(1) applied to u2(5).
    r.mean_square_shift = 1.0 + 2.0 * rotation(1.0).apply(u2_5).x + u1_5 + 2.0 * u3_5;
    return r;
}

ComparisonReport compare(const Solution& solution, const EstimateSet& estimates) {
    const double x = estimates.x;
    const double u1_x = solution.u1.value_at(x);
    const Vec2 u2_x = solution.u2.value_at(x);
    const double u3_x = solution.u3.value_at(x);

    ComparisonReport report;
    report.x = x;
    report.n_samples = estimates.n_samples;
    report.seed = estimates.seed;

    auto add_row = [&](const char* name, double solver_value, const McEstimate& mc) {
        ComparisonRow row;
        row.feature = name;
        row.solver_value = solver_value;
        row.mc_mean = mc.mean;
        row.mc_std_error = mc.std_error;
        const double diff = solver_value - mc.mean;
        if (mc.std_error > 0.0)
            row.z_score = diff / mc.std_error;
        else if (std::abs(diff) <= 1e-12)
            row.z_score = 0.0;
        else
            row.z_score = std::copysign(std::numeric_limits<double>::infinity(), diff);
        row.flagged = !(std::abs(row.z_score) <= report.z_threshold);
        report.max_abs_z = std::max(report.max_abs_z, std::abs(row.z_score));
        report.passed = report.passed && !row.flagged;
        report.rows.push_back(std::move(row));
    };

    add_row("K", u1_x, estimates.count);
    add_row("F_x", u2_x.x, {estimates.vector_sum.mean.x, estimates.vector_sum.std_error.x});
    add_row("F_y", u2_x.y, {estimates.vector_sum.mean.y, estimates.vector_sum.std_error.y});
    add_row("E2", u3_x, estimates.pair_cosine);
    add_row("L2", u1_x + 2.0 * u3_x, estimates.squared_norm); // Prop.-style identity L2 = K + 2 E2
    return report;
}

std::string render_text(const HeadlineResults& results) {
    std::string out;
    out += "expected_total_disks  " + sig14(results.expected_total_disks) + "\n";
    out += "expected_vector_sum   " + sig14(results.expected_vector_sum.x) + " " +
           sig14(results.expected_vector_sum.y) + "\n";
    out += "mean_square_shift     " + sig14(results.mean_square_shift) + "\n";
    return out;
}

std::string render_text(const ComparisonReport& report) {
    char head[160];
    std::snprintf(head, sizeof head, "comparison at x = %.14g  (n_samples = %lld, seed = %llu)\n",
                  report.x, static_cast<long long>(report.n_samples),
                  static_cast<unsigned long long>(report.seed));
    std::string out = head;
    char line[200];
    std::snprintf(line, sizeof line, "%-8s %21s %21s %13s %9s\n", "feature", "solver", "mc_mean",
                  "mc_se", "z");
    out += line;
    for (const auto& row : report.rows) {
        std::snprintf(line, sizeof line, "%-8s %21.14g %21.14g %13.4g %9.3f%s\n",
                      row.feature.c_str(), row.solver_value, row.mc_mean, row.mc_std_error,
                      row.z_score, row.flagged ? "  <-- |z| > threshold" : "");
        out += line;
    }
    std::snprintf(line, sizeof line, "max |z| = %.3f (threshold %.1f): %s\n", report.max_abs_z,
                  report.z_threshold, report.passed ? "OK" : "MISMATCH");
    out += line;
    return out;
}

std::string grid_csv(const Solution& solution, int points) {
    if (points < 2) throw std::invalid_argument("grid_csv: points must be at least 2");
    const double hi = solution.config.x_max;
    std::string out = "x,u1,u2_x,u2_y,u3\n";
    for (int i = 0; i < points; ++i) {
        const double x = hi * static_cast<double>(i) / static_cast<double>(points - 1);
        const Vec2 u2 = solution.u2.value_at(x);
        out += fmt("%.17g", x) + "," + fmt("%.17g", solution.u1.value_at(x)) + "," +
               fmt("%.17g", u2.x) + "," + fmt("%.17g", u2.y) + "," +
               fmt("%.17g", solution.u3.value_at(x)) + "\n";
    }
    return out;
}

} // namespace renyi
