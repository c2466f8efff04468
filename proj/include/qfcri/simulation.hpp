#ifndef QFCRI_SIMULATION_HPP
#define QFCRI_SIMULATION_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "qfcri/measures.hpp"
#include "qfcri/quantile_model.hpp"

namespace qfcri {

/// Monte-Carlo study configuration: paired samples from the true model
/// x_model and assigned model y_model, estimator bias/MSE against the
/// quadrature true value.
struct SimulationPlan {
    QuantileModel x_model;
    QuantileModel y_model;
    double alpha = 0.5;
    std::vector<std::size_t> sample_sizes; // positive, strictly increasing
    std::size_t replications = 1000;
    std::uint64_t base_seed = 1;

    void validate() const;
};

struct SimulationRow {
    std::size_t n = 0;
    double mean_estimate = 0.0;
    double abs_bias = 0.0;
    double mse = 0.0;
};

struct SimulationReport {
    double alpha = 0.0;
    double true_value = 0.0;
    std::vector<SimulationRow> rows;

    bool operator==(const SimulationReport&) const = default;
};

bool operator==(const SimulationRow&, const SimulationRow&);

/// Runs the plan. Replications fill per-index slots (OpenMP across
/// replicates when available) and are reduced serially in index order with
/// compensated summation, so the report is bit-identical for any thread
/// count and matches run_plan_serial exactly.
SimulationReport run_plan(const SimulationPlan& plan);

/// Single-threaded reference implementation used by tests and the benchmark.
SimulationReport run_plan_serial(const SimulationPlan& plan);

/// CSV rows "n,mean,abs_bias,mse" with a header line.
std::string report_csv(const SimulationReport& report);

/// JSON document with the plan echo left to the caller.
std::string report_json(const SimulationReport& report);

} // namespace qfcri

#endif // QFCRI_SIMULATION_HPP
