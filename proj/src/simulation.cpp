#include "qfcri/simulation.hpp"

#include <cmath>
#include <stdexcept>

#include "qfcri/estimation.hpp"
#include "qfcri/format.hpp"
#include "qfcri/rng.hpp"
#include "qfcri/sample_batch.hpp"

#include <json.hpp>

namespace qfcri {

void SimulationPlan::validate() const {
    FractionalOrder check(alpha);
    (void)check;
    if (x_model.support_low() < 0.0 || y_model.support_low() < 0.0)
        throw std::invalid_argument(
            "SimulationPlan: both models must have non-negative support");
    if (replications < 1)
        throw std::invalid_argument("SimulationPlan: replications must be >= 1");
    if (sample_sizes.empty())
        throw std::invalid_argument("SimulationPlan: sample_sizes must be non-empty");
    std::size_t prev = 0;
    for (std::size_t n : sample_sizes) {
        if (n == 0 || n <= prev)
            throw std::invalid_argument(
                "SimulationPlan: sample sizes must be positive and strictly increasing");
        prev = n;
    }
}

namespace {

// Neumaier compensated sum; order-robust to ~1e-16 relative.
class CompensatedSum {
public:
    void add(double v) {
        const double t = sum_ + v;
        if (std::abs(sum_) >= std::abs(v))
            comp_ += (sum_ - t) + v;
        else
            comp_ += (v - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

double replicate_estimate(const SimulationPlan& plan, std::size_t n,
                          std::size_t replicate) {
    const std::uint64_t seed_x = derive_seed(plan.base_seed, n, replicate, 0);
    const std::uint64_t seed_y = derive_seed(plan.base_seed, n, replicate, 1);
    const SampleBatch xb = sample(plan.x_model, n, seed_x);
    const SampleBatch yb = sample(plan.y_model, n, seed_y);
    // Interior spacings only: the origin term w * Q(0+) does not vanish with
    // n when the actual model's support starts above zero, and the reference
    // bias/MSE tables are reproduced without it.
    return estimate_qfcri(xb, yb, plan.alpha, CdfConvention::plotting_position,
                          OriginPolicy::interior_only);
}

template <bool Parallel>
SimulationReport run_plan_impl(const SimulationPlan& plan) {
    plan.validate();

    SimulationReport report;
    report.alpha = plan.alpha;
    report.true_value =
        qfcri(plan.x_model, plan.y_model, FractionalOrder(plan.alpha)).value;

    const auto reps = static_cast<std::ptrdiff_t>(plan.replications);
    std::vector<double> estimates(plan.replications);
    for (std::size_t n : plan.sample_sizes) {
        if constexpr (Parallel) {
#pragma omp parallel for schedule(dynamic)
            for (std::ptrdiff_t r = 0; r < reps; ++r)
                estimates[static_cast<std::size_t>(r)] =
                    replicate_estimate(plan, n, static_cast<std::size_t>(r));
        } else {
            for (std::ptrdiff_t r = 0; r < reps; ++r)
                estimates[static_cast<std::size_t>(r)] =
                    replicate_estimate(plan, n, static_cast<std::size_t>(r));
        }

        CompensatedSum sum, sq;
        for (double e : estimates) {
            sum.add(e);
            const double d = e - report.true_value;
            sq.add(d * d);
        }
        SimulationRow row;
        row.n = n;
        row.mean_estimate = sum.value() / static_cast<double>(plan.replications);
        row.abs_bias = std::abs(row.mean_estimate - report.true_value);
        row.mse = sq.value() / static_cast<double>(plan.replications);
        report.rows.push_back(row);
    }
    return report;
}

} // namespace

bool operator==(const SimulationRow& a, const SimulationRow& b) {
    return a.n == b.n && a.mean_estimate == b.mean_estimate &&
           a.abs_bias == b.abs_bias && a.mse == b.mse;
}

SimulationReport run_plan(const SimulationPlan& plan) {
    return run_plan_impl<true>(plan);
}

SimulationReport run_plan_serial(const SimulationPlan& plan) {
    return run_plan_impl<false>(plan);
}

std::string report_csv(const SimulationReport& report) {
    std::string out = "n,mean,abs_bias,mse\n";
    for (const SimulationRow& row : report.rows) {
        out += std::to_string(row.n);
        out += ',';
        out += format_number(row.mean_estimate);
        out += ',';
        out += format_number(row.abs_bias);
        out += ',';
        out += format_number(row.mse);
        out += '\n';
    }
    return out;
}

std::string report_json(const SimulationReport& report) {
    nlohmann::json doc;
    doc["alpha"] = report.alpha;
    doc["true_value"] = report.true_value;
    doc["rows"] = nlohmann::json::array();
    for (const SimulationRow& row : report.rows)
        doc["rows"].push_back({{"n", row.n},
                               {"mean", row.mean_estimate},
                               {"abs_bias", row.abs_bias},
                               {"mse", row.mse}});
    return doc.dump(2);
}

} // namespace qfcri
