// Benchmark comparing the OpenMP kernels against their serial reference
// implementations: the Monte-Carlo replication loop and the chaos grid.
// Verifies that both paths produce identical results before timing them.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "qfcri/chaos.hpp"
#include "qfcri/simulation.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
}

template <typename F>
double timed(F&& f) {
    const auto start = std::chrono::steady_clock::now();
    f();
    return seconds_since(start);
}

} // namespace

int main(int argc, char** argv) {
    std::size_t replications = 400;
    std::size_t grid_cells = 20;
    if (argc > 1) replications = static_cast<std::size_t>(std::atoll(argv[1]));
    if (argc > 2) grid_cells = static_cast<std::size_t>(std::atoll(argv[2]));

#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP not available; both paths run serially\n");
#endif

    using namespace qfcri;

    SimulationPlan plan{QuantileModel::power_pareto(1.5, 0.75, 0.25),
                        QuantileModel::exponential(2.0), 0.2, {}, 0, 0};
    plan.alpha = 0.2;
    plan.sample_sizes = {50, 100, 200, 500};
    plan.replications = replications;
    plan.base_seed = 31;

    SimulationReport serial_report, parallel_report;
    const double t_sim_serial = timed([&] { serial_report = run_plan_serial(plan); });
    const double t_sim_parallel = timed([&] { parallel_report = run_plan(plan); });
    const bool sim_match = serial_report == parallel_report;

    std::printf("simulation  R=%zu: serial %.3fs  openmp %.3fs  speedup %.2fx  %s\n",
                replications, t_sim_serial, t_sim_parallel,
                t_sim_serial / t_sim_parallel,
                sim_match ? "results identical" : "RESULTS DIFFER");

    const auto axis = linspace(4.0 / static_cast<double>(grid_cells), 4.0, grid_cells);
    DiscrepancyGrid g_serial, g_parallel;
    const double t_grid_serial = timed([&] {
        g_serial = discrepancy_grid_serial(MapKind::logistic, axis, axis, 0.25, 0.1, 1000);
    });
    const double t_grid_parallel = timed([&] {
        g_parallel = discrepancy_grid(MapKind::logistic, axis, axis, 0.25, 0.1, 1000);
    });
    const bool grid_match = g_serial.values == g_parallel.values;

    std::printf("chaos grid %zux%zu: serial %.3fs  openmp %.3fs  speedup %.2fx  %s\n",
                grid_cells, grid_cells, t_grid_serial, t_grid_parallel,
                t_grid_serial / t_grid_parallel,
                grid_match ? "results identical" : "RESULTS DIFFER");

    return sim_match && grid_match ? 0 : 1;
}
