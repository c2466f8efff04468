#include "qfcri/chaos.hpp"

#include <cmath>
#include <limits>
#include <memory>
#include <stdexcept>

#include "qfcri/errors.hpp"
#include "qfcri/estimation.hpp"
#include "qfcri/format.hpp"
#include "qfcri/sample_batch.hpp"

#include <json.hpp>

namespace qfcri {

void MapConfig::validate() const {
    if (n < 2) throw std::invalid_argument("MapConfig: n must be >= 2");
    if (kind == MapKind::chebyshev) {
        if (!(param > 0.0))
            throw std::invalid_argument("MapConfig: chebyshev parameter must be positive");
        if (!(x1 >= -1.0 && x1 <= 1.0))
            throw std::invalid_argument("MapConfig: chebyshev x1 must lie in [-1,1]");
    } else {
        if (!(param >= 0.0 && param <= 4.0))
            throw std::invalid_argument("MapConfig: logistic parameter must lie in [0,4]");
        if (!(x1 >= 0.0 && x1 <= 1.0))
            throw std::invalid_argument("MapConfig: logistic x1 must lie in [0,1]");
    }
}

std::vector<double> generate_series(const MapConfig& cfg) {
    cfg.validate();
    std::vector<double> orbit(cfg.n);
    orbit[0] = cfg.x1;
    if (cfg.kind == MapKind::chebyshev) {
        const double a2 = cfg.param * cfg.param;
        for (std::size_t i = 0; i + 1 < cfg.n; ++i) {
            double x = orbit[i];
            // cos can land at 1 + O(eps); clamp with 1e-12 slack before arccos.
            if (x > 1.0 || x < -1.0) {
                if (x > 1.0 + 1e-12 || x < -1.0 - 1e-12)
                    throw std::domain_error("chebyshev orbit left [-1,1]");
                x = x > 1.0 ? 1.0 : -1.0;
            }
            orbit[i + 1] = std::cos(a2 * std::acos(x));
        }
    } else {
        for (std::size_t i = 0; i + 1 < cfg.n; ++i)
            orbit[i + 1] = cfg.param * orbit[i] * (1.0 - orbit[i]);
    }
    return orbit;
}

namespace {

// Orbit shifted by its own minimum so the estimator sees non-negative data.
SampleBatch shifted_batch(const MapConfig& cfg) {
    std::vector<double> orbit = generate_series(cfg);
    double lo = orbit[0];
    for (double v : orbit) lo = std::min(lo, v);
    for (double& v : orbit) v -= lo;
    return SampleBatch(std::move(orbit));
}

template <bool Parallel>
DiscrepancyGrid grid_impl(MapKind kind, const std::vector<double>& axis1,
                          const std::vector<double>& axis2, double alpha, double x1,
                          std::size_t n) {
    if (axis1.empty() || axis2.empty())
        throw std::invalid_argument("discrepancy_grid: axes must be non-empty");

    DiscrepancyGrid grid;
    grid.axis1 = axis1;
    grid.axis2 = axis2;
    grid.alpha = alpha;
    grid.values.assign(axis1.size() * axis2.size(),
                       std::numeric_limits<double>::quiet_NaN());

    // Precompute per-parameter shifted orbits; failures leave a null slot and
    // the affected cells stay missing.
    std::vector<std::unique_ptr<SampleBatch>> x_orbits(axis1.size());
    std::vector<std::unique_ptr<SampleBatch>> y_orbits(axis2.size());
    for (std::size_t i = 0; i < axis1.size(); ++i) {
        try {
            x_orbits[i] = std::make_unique<SampleBatch>(
                shifted_batch({kind, axis1[i], x1, n}));
        } catch (const std::exception&) {
        }
    }
    for (std::size_t j = 0; j < axis2.size(); ++j) {
        try {
            y_orbits[j] = std::make_unique<SampleBatch>(
                shifted_batch({kind, axis2[j], x1, n}));
        } catch (const std::exception&) {
        }
    }

    const auto rows = static_cast<std::ptrdiff_t>(axis1.size());
    const auto cols = static_cast<std::ptrdiff_t>(axis2.size());
#pragma omp parallel for collapse(2) schedule(dynamic) if (Parallel)
    for (std::ptrdiff_t i = 0; i < rows; ++i) {
        for (std::ptrdiff_t j = 0; j < cols; ++j) {
            const auto& xb = x_orbits[static_cast<std::size_t>(i)];
            const auto& yb = y_orbits[static_cast<std::size_t>(j)];
            if (!xb || !yb) continue;
            try {
                grid.values[static_cast<std::size_t>(i * cols + j)] =
                    estimate_qfcri(*xb, *yb, alpha);
            } catch (const std::exception&) {
                // cell stays missing
            }
        }
    }

    for (double v : grid.values)
        if (std::isnan(v)) ++grid.missing;
    return grid;
}

} // namespace

DiscrepancyGrid discrepancy_grid(MapKind kind, const std::vector<double>& axis1,
                                 const std::vector<double>& axis2, double alpha,
                                 double x1, std::size_t n) {
    return grid_impl<true>(kind, axis1, axis2, alpha, x1, n);
}

DiscrepancyGrid discrepancy_grid_serial(MapKind kind, const std::vector<double>& axis1,
                                        const std::vector<double>& axis2, double alpha,
                                        double x1, std::size_t n) {
    return grid_impl<false>(kind, axis1, axis2, alpha, x1, n);
}

std::string grid_csv(const DiscrepancyGrid& grid) {
    std::string out = "param1,param2,qfcri\n";
    for (std::size_t i = 0; i < grid.axis1.size(); ++i)
        for (std::size_t j = 0; j < grid.axis2.size(); ++j) {
            out += format_number(grid.axis1[i]);
            out += ',';
            out += format_number(grid.axis2[j]);
            out += ',';
            out += format_number(grid.at(i, j));
            out += '\n';
        }
    return out;
}

std::string grid_json(const DiscrepancyGrid& grid) {
    nlohmann::json doc;
    doc["alpha"] = grid.alpha;
    doc["param1"] = grid.axis1;
    doc["param2"] = grid.axis2;
    doc["missing_cells"] = grid.missing;
    auto rows = nlohmann::json::array();
    for (std::size_t i = 0; i < grid.axis1.size(); ++i) {
        auto row = nlohmann::json::array();
        for (std::size_t j = 0; j < grid.axis2.size(); ++j) {
            const double v = grid.at(i, j);
            if (std::isnan(v))
                row.push_back(nullptr);
            else
                row.push_back(v);
        }
        rows.push_back(std::move(row));
    }
    doc["values"] = std::move(rows);
    return doc.dump(2);
}

std::vector<double> linspace(double lo, double hi, std::size_t count) {
    if (count == 0) throw std::invalid_argument("linspace: count must be positive");
    std::vector<double> out(count);
    if (count == 1) {
        out[0] = lo;
        return out;
    }
    for (std::size_t i = 0; i < count; ++i)
        out[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
    return out;
}

} // namespace qfcri
