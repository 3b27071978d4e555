// Command-line front end for the Clayton copula toolkit.
//
// Exit codes: 0 success, 2 usage/validation failure, 1 runtime failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "clayton/copula.hpp"
#include "clayton/csv.hpp"
#include "clayton/estimation.hpp"
#include "clayton/risk.hpp"
#include "clayton/sampling.hpp"
#include "clayton/studies.hpp"
#include "clayton/svg.hpp"

namespace {

constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

// Default worker count: the --workers flag wins, then the CLAYTON_WORKERS
// environment variable, then the hardware thread count.
std::size_t default_workers() {
    if (const char* env = std::getenv("CLAYTON_WORKERS")) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end && *end == '\0' && v >= 1) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw >= 1 ? hw : 1;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open output file: " + path);
    }
    return out;
}

std::vector<std::size_t> parse_workers_list(const std::string& text) {
    std::vector<std::size_t> out;
    std::istringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(tok.c_str(), &end, 10);
        if (tok.empty() || !end || *end != '\0' || v < 1) {
            throw clayton::invalid_parameter("malformed --workers-list entry: '" +
                                             tok + "'");
        }
        out.push_back(v);
    }
    if (out.empty() || text.back() == ',') {
        throw clayton::invalid_parameter("malformed --workers-list: '" + text +
                                         "'");
    }
    return out;
}

struct SampleArgs {
    double theta = 2.0;
    std::size_t n = 1000;
    std::uint64_t seed = 0;
    std::size_t workers = 0;
    std::string out;
};

int cmd_sample(const SampleArgs& a) {
    const clayton::ClaytonCopula c(a.theta);
    const std::size_t workers = a.workers ? a.workers : default_workers();
    const clayton::SampleMatrix m =
        clayton::sample_parallel(c, a.n, a.seed, workers);
    auto os = open_out(a.out);
    std::vector<std::vector<double>> rows(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) rows[i] = {m.u1[i], m.u2[i]};
    clayton::write_csv(os, {}, {"u1", "u2"}, rows);
    return 0;
}

struct DensityArgs {
    double theta = 2.0;
    double u = 0.5;
    double v = 0.5;
};

int cmd_density(const DensityArgs& a) {
    const clayton::ClaytonCopula c(a.theta);
    std::cout << clayton::format_real(c.pdf({a.u, a.v})) << "\n";
    return 0;
}

struct FitArgs {
    std::string input;
    bool pseudo = false;
    double bracket_lo = 1e-3;
    double bracket_hi = 50.0;
    std::string out;
};

int cmd_fit(const FitArgs& a) {
    const clayton::DataMatrix x = clayton::read_csv_2col(a.input);
    const clayton::PseudoObservations p =
        a.pseudo ? clayton::as_pseudo_observations(x)
                 : clayton::pseudo_observations(x);
    clayton::FitOptions opts;
    opts.bracket_lo = a.bracket_lo;
    opts.bracket_hi = a.bracket_hi;
    const clayton::FitResult fit = clayton::fit_mle(p, opts);
    std::cout << "theta_hat = " << clayton::format_real(fit.theta_hat) << "\n"
              << "log_likelihood = "
              << clayton::format_real(fit.log_likelihood) << "\n"
              << "evaluations = " << fit.evaluations << "\n"
              << "converged = " << (fit.converged ? "true" : "false") << "\n"
              << "at_bracket_edge = "
              << (fit.at_bracket_edge ? "true" : "false") << "\n";
    if (!a.out.empty()) {
        auto os = open_out(a.out);
        clayton::write_csv(
            os, {}, {"theta_hat", "log_likelihood", "evaluations", "converged"},
            {{fit.theta_hat, fit.log_likelihood,
              static_cast<double>(fit.evaluations),
              fit.converged ? 1.0 : 0.0}});
    }
    return 0;
}

struct RecoverArgs {
    double theta_min = 0.1;
    double theta_max = 3.0;
    std::size_t count = 20;
    std::size_t n = 1000;
    std::uint64_t seed = 0;
    std::size_t workers = 0;
    std::string out;
    std::string svg;
};

int cmd_recover(const RecoverArgs& a) {
    const std::vector<double> grid =
        clayton::linear_grid(a.theta_min, a.theta_max, a.count);
    const std::size_t workers = a.workers ? a.workers : default_workers();
    const auto records = clayton::run_recovery(grid, a.n, a.seed, workers);

    auto os = open_out(a.out);
    std::vector<std::vector<double>> rows;
    rows.reserve(records.size());
    for (const auto& r : records) {
        rows.push_back({r.theta_true, r.theta_hat, r.converged ? 1.0 : 0.0});
    }
    clayton::write_csv(os, {}, {"theta_true", "theta_hat", "converged"}, rows);

    if (!a.svg.empty()) {
        auto svg = open_out(a.svg);
        clayton::write_recovery_svg(svg, records);
    }
    return 0;
}

struct BenchArgs {
    std::string workers_list = "1,2,3,4";
    std::size_t count = 20;
    std::size_t n = 1000;
    std::uint64_t seed = 0;
    std::size_t reps = 3;
    std::string out;
    std::string svg;
};

int cmd_bench(const BenchArgs& a) {
    const auto worker_counts = parse_workers_list(a.workers_list);
    const std::vector<double> grid = clayton::linear_grid(0.1, 3.0, a.count);
    const auto records =
        clayton::run_scaling_bench(worker_counts, grid, a.n, a.seed, a.reps);

    auto os = open_out(a.out);
    std::vector<std::vector<double>> rows;
    rows.reserve(records.size());
    for (const auto& r : records) {
        rows.push_back({static_cast<double>(r.workers), r.wall_time_seconds,
                        static_cast<double>(r.repetitions)});
    }
    clayton::write_csv(
        os,
        {"wall_time_seconds is machine- and load-dependent (not "
         "deterministic)"},
        {"workers", "wall_time_seconds", "repetitions"}, rows);

    if (!a.svg.empty()) {
        auto svg = open_out(a.svg);
        clayton::write_scaling_svg(svg, records);
    }
    return 0;
}

struct RiskArgs {
    std::string input;
    double alpha = 0.95;
    std::size_t big_n = 100000;
    std::uint64_t seed = 0;
    std::size_t workers = 0;
    std::string out;
};

int cmd_risk(const RiskArgs& a) {
    const clayton::DataMatrix x = clayton::read_csv_2col(a.input);
    const std::size_t workers = a.workers ? a.workers : default_workers();
    const clayton::RiskReport rep =
        clayton::run_risk_pipeline(x, a.alpha, a.big_n, a.seed, workers);
    std::cout << "alpha = " << clayton::format_real(rep.alpha) << "\n"
              << "big_n = " << rep.big_n << "\n"
              << "theta_hat = " << clayton::format_real(rep.theta_hat) << "\n"
              << "var = " << clayton::format_real(rep.var) << "\n"
              << "es = " << clayton::format_real(rep.es) << "\n"
              << "exceedances = " << rep.exceedances << "\n";
    if (!a.out.empty()) {
        auto os = open_out(a.out);
        clayton::write_csv(
            os, {},
            {"alpha", "big_n", "theta_hat", "var", "es", "exceedances"},
            {{rep.alpha, static_cast<double>(rep.big_n), rep.theta_hat,
              rep.var, rep.es, static_cast<double>(rep.exceedances)}});
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Clayton copula sampling, estimation and risk toolkit"};
    app.require_subcommand(1);

    SampleArgs sample_args;
    auto* sample = app.add_subcommand(
        "sample", "Draw a bivariate Clayton copula sample to CSV");
    sample->add_option("--theta", sample_args.theta, "Copula parameter (> 0)");
    sample->add_option("--n", sample_args.n, "Number of rows")
        ->check(CLI::PositiveNumber);
    sample->add_option("--seed", sample_args.seed, "RNG seed");
    sample->add_option("--workers", sample_args.workers,
                       "Worker threads (default: CLAYTON_WORKERS or hardware)");
    sample->add_option("--out", sample_args.out, "Output CSV path")
        ->required();

    DensityArgs density_args;
    auto* density =
        app.add_subcommand("density", "Evaluate the copula density at (u,v)");
    density->add_option("--theta", density_args.theta, "Copula parameter");
    density->add_option("--u", density_args.u, "First coordinate, in (0,1)")
        ->required();
    density->add_option("--v", density_args.v, "Second coordinate, in (0,1)")
        ->required();

    FitArgs fit_args;
    auto* fit = app.add_subcommand(
        "fit", "Fit theta by pseudo maximum likelihood from a 2-column CSV");
    fit->add_option("--input", fit_args.input, "Input CSV path")->required();
    fit->add_flag("--pseudo", fit_args.pseudo,
                  "Input is already in (0,1); skip the rank transform");
    fit->add_option("--bracket-lo", fit_args.bracket_lo,
                    "Lower search bracket for theta");
    fit->add_option("--bracket-hi", fit_args.bracket_hi,
                    "Upper search bracket for theta");
    fit->add_option("--out", fit_args.out, "Optional result CSV path");

    RecoverArgs recover_args;
    auto* recover = app.add_subcommand(
        "recover", "Parameter recovery study over a theta grid");
    recover->add_option("--theta-min", recover_args.theta_min, "Grid start");
    recover->add_option("--theta-max", recover_args.theta_max, "Grid end");
    recover->add_option("--count", recover_args.count, "Grid size");
    recover->add_option("--n", recover_args.n, "Sample size per grid point");
    recover->add_option("--seed", recover_args.seed, "RNG seed");
    recover->add_option("--workers", recover_args.workers, "Worker threads");
    recover->add_option("--out", recover_args.out, "Output CSV path")
        ->required();
    recover->add_option("--svg", recover_args.svg, "Optional SVG scatter path");

    BenchArgs bench_args;
    auto* bench = app.add_subcommand(
        "bench", "Wall-time scaling benchmark of the recovery study");
    bench->add_option("--workers-list", bench_args.workers_list,
                      "Comma-separated worker counts");
    bench->add_option("--count", bench_args.count, "Grid size");
    bench->add_option("--n", bench_args.n, "Sample size per grid point");
    bench->add_option("--seed", bench_args.seed, "RNG seed");
    bench->add_option("--reps", bench_args.reps, "Repetitions per count")
        ->check(CLI::PositiveNumber);
    bench->add_option("--out", bench_args.out, "Output CSV path")->required();
    bench->add_option("--svg", bench_args.svg, "Optional SVG line plot path");

    RiskArgs risk_args;
    auto* risk = app.add_subcommand(
        "risk", "Monte Carlo VaR / expected shortfall pipeline");
    risk->add_option("--input", risk_args.input, "Input CSV path")->required();
    risk->add_option("--alpha", risk_args.alpha, "Confidence level in (0,1)");
    risk->add_option("--big-n", risk_args.big_n, "Simulation size N")
        ->check(CLI::PositiveNumber);
    risk->add_option("--seed", risk_args.seed, "RNG seed");
    risk->add_option("--workers", risk_args.workers, "Worker threads");
    risk->add_option("--out", risk_args.out, "Optional result CSV path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (sample->parsed()) return cmd_sample(sample_args);
        if (density->parsed()) return cmd_density(density_args);
        if (fit->parsed()) return cmd_fit(fit_args);
        if (recover->parsed()) return cmd_recover(recover_args);
        if (bench->parsed()) return cmd_bench(bench_args);
        if (risk->parsed()) return cmd_risk(risk_args);
    } catch (const clayton::invalid_parameter& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const clayton::invalid_input& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const clayton::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const clayton::empty_tail& e) {
        std::cerr << "error: empty tail: " << e.what() << "\n";
        return kExitRuntime;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
    return kExitUsage;
}
