#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "renyi/errors.hpp"
#include "renyi/report.hpp"
#include "renyi/serialize.hpp"
#include "renyi/simulator.hpp"
#include "renyi/solver.hpp"

namespace {

// Exit-code contract: 0 ok, 1 usage error, 2 numerical failure,
// 3 statistical mismatch (compare only).
constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNumerical = 2;
constexpr int kExitMismatch = 3;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + out_path);
    out << text;
}

std::string dump(const nlohmann::ordered_json& j) { return j.dump(2) + "\n"; }

int run_solve(double xmax, double tol, const std::string& format, const std::string& out_path) {
    renyi::SolverConfig config;
    config.x_max = xmax;
    config.fit_tol = tol;
    const renyi::Solution solution = renyi::solve_all(config);
    if (format == "csv")
        emit(renyi::grid_csv(solution, 500), out_path);
    else
        emit(dump(renyi::to_json(solution)), out_path);
    return kExitOk;
}

int run_simulate(double x, std::int64_t samples, std::uint64_t seed, int workers,
                 const std::string& out_path) {
    const renyi::EstimateSet estimates = renyi::estimate(x, samples, seed, workers);
    emit(dump(renyi::to_json(estimates)), out_path);
    return kExitOk;
}

int run_compare(double x, std::int64_t samples, std::uint64_t seed, int workers) {
    renyi::SolverConfig config;
    config.x_max = std::max(1.0, x);
    const renyi::Solution solution = renyi::solve_all(config);
    const renyi::EstimateSet estimates = renyi::estimate(x, samples, seed, workers);
    const renyi::ComparisonReport report = renyi::compare(solution, estimates);
    std::cout << renyi::render_text(report);
    return report.passed ? kExitOk : kExitMismatch;
}

int run_report(const std::string& format) {
    const renyi::Solution solution = renyi::solve_all(renyi::SolverConfig{});
    const renyi::HeadlineResults results = renyi::headline(solution);
    if (format == "json")
        std::cout << dump(renyi::to_json(results));
    else
        std::cout << renyi::render_text(results);
    return kExitOk;
}

int run_eval(const std::string& quantity, double at) {
    const renyi::SolverConfig config;
    char buf[64];
    if (quantity == "u1") {
        std::snprintf(buf, sizeof buf, "%.17g\n", renyi::solve_u1(config).value_at(at));
    } else if (quantity == "u2") {
        const renyi::Vec2 v = renyi::solve_u2(config).value_at(at);
        std::snprintf(buf, sizeof buf, "%.17g %.17g\n", v.x, v.y);
    } else {
        const auto u2 = renyi::solve_u2(config);
        std::snprintf(buf, sizeof buf, "%.17g\n", renyi::solve_u3(config, u2).value_at(at));
    }
    std::cout << buf;
    return kExitOk;
}

int run_grid(int points, double xmax, const std::string& out_path) {
    renyi::SolverConfig config;
    config.x_max = xmax;
    emit(renyi::grid_csv(renyi::solve_all(config), points), out_path);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Volterra solver and Monte Carlo oracle for the unit-disk accretion process"};
    app.require_subcommand(1);

    double xmax = 5.0, tol = 1e-14, x = 5.0, at = 0.0;
    std::int64_t samples = 1000000;
    std::uint64_t seed = 0;
    int workers = 1, points = 500;
    std::string out_path, format_solve = "json", format_report = "text", quantity;

    auto* solve = app.add_subcommand("solve", "Solve the integral equations, write the solution");
    solve->add_option("--xmax", xmax, "Domain end")->capture_default_str()->check(CLI::Range(1.0, 6.0));
    solve->add_option("--tol", tol, "Fit tolerance")->capture_default_str()->check(CLI::PositiveNumber);
    solve->add_option("--out", out_path, "Output path (default stdout)");
    solve->add_option("--format", format_solve, "json (coefficients) or csv (500-point grid)")
        ->capture_default_str()
        ->check(CLI::IsMember({"json", "csv"}));

    auto* simulate = app.add_subcommand("simulate", "Monte Carlo estimate of the features");
    simulate->add_option("--x", x, "Domain length")->capture_default_str()->check(CLI::Range(0.0, 6.0));
    simulate->add_option("--samples", samples, "Sample count")->capture_default_str()
        ->check(CLI::PositiveNumber);
    simulate->add_option("--seed", seed, "RNG seed")->capture_default_str();
    simulate->add_option("--workers", workers, "Worker threads")->capture_default_str()
        ->check(CLI::PositiveNumber);
    simulate->add_option("--out", out_path, "Output path (default stdout)");

    auto* cmp = app.add_subcommand("compare", "Solver vs Monte Carlo z-score table");
    cmp->add_option("--x", x, "Domain length")->capture_default_str()->check(CLI::Range(0.0, 6.0));
    cmp->add_option("--samples", samples, "Sample count")->capture_default_str()
        ->check(CLI::PositiveNumber);
    cmp->add_option("--seed", seed, "RNG seed")->capture_default_str();
    cmp->add_option("--workers", workers, "Worker threads")->capture_default_str()
        ->check(CLI::PositiveNumber);

    auto* report = app.add_subcommand("report", "Print the three headline constants");
    report->add_option("--format", format_report, "text or json")->capture_default_str()
        ->check(CLI::IsMember({"text", "json"}));

    auto* eval = app.add_subcommand("eval", "Evaluate one solved function at a point");
    eval->add_option("--quantity", quantity, "u1, u2, or u3")->required()
        ->check(CLI::IsMember({"u1", "u2", "u3"}));
    eval->add_option("--at", at, "Evaluation point in [0, 5]")->required()
        ->check(CLI::Range(0.0, 5.0));

    auto* grid = app.add_subcommand("grid", "Write the CSV value grid");
    grid->add_option("--points", points, "Grid size")->capture_default_str()
        ->check(CLI::Range(2, 1000000));
    grid->add_option("--xmax", xmax, "Domain end")->capture_default_str()->check(CLI::Range(1.0, 6.0));
    grid->add_option("--out", out_path, "Output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (solve->parsed()) return run_solve(xmax, tol, format_solve, out_path);
        if (simulate->parsed()) return run_simulate(x, samples, seed, workers, out_path);
        if (cmp->parsed()) return run_compare(x, samples, seed, workers);
        if (report->parsed()) return run_report(format_report);
        if (eval->parsed()) return run_eval(quantity, at);
        if (grid->parsed()) return run_grid(points, xmax, out_path);
    } catch (const renyi::NonConvergenceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const renyi::OutOfDomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    }
    return kExitUsage;
}
