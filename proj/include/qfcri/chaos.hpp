#ifndef QFCRI_CHAOS_HPP
#define QFCRI_CHAOS_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace qfcri {

enum class MapKind { chebyshev, logistic };

/// One orbit configuration. Chebyshev: x_{i+1} = cos(a^2 arccos(x_i)),
/// a > 0, x1 in [-1,1]. Logistic: x_{i+1} = c x_i (1 - x_i), c in [0,4],
/// x1 in [0,1].
struct MapConfig {
    MapKind kind = MapKind::logistic;
    double param = 4.0;
    double x1 = 0.1;
    std::size_t n = 1000;

    void validate() const;
};

/// Deterministic orbit of length n in time order (pre-shift).
std::vector<double> generate_series(const MapConfig& cfg);

/// Estimated Q-FCRI between min-shifted orbits over two parameter axes.
/// values is row-major: at(i,j) pairs the axis1[i] orbit as the actual (X)
/// series with the axis2[j] orbit as the assigned (Y) series. Cells whose
/// orbit generation fails hold NaN and count as missing.
struct DiscrepancyGrid {
    std::vector<double> axis1;
    std::vector<double> axis2;
    std::vector<double> values; // axis1.size() * axis2.size(), row-major
    double alpha = 0.25;
    std::size_t missing = 0;

    double at(std::size_t i, std::size_t j) const {
        return values[i * axis2.size() + j];
    }
};

/// OpenMP over grid cells; orbits are precomputed once per axis value and
/// cells write disjoint slots, so scheduling cannot change any value.
DiscrepancyGrid discrepancy_grid(MapKind kind, const std::vector<double>& axis1,
                                 const std::vector<double>& axis2, double alpha,
                                 double x1, std::size_t n);

/// Single-threaded reference.
DiscrepancyGrid discrepancy_grid_serial(MapKind kind, const std::vector<double>& axis1,
                                        const std::vector<double>& axis2, double alpha,
                                        double x1, std::size_t n);

/// CSV rows "param1,param2,qfcri" (param1 = axis1 = actual side).
std::string grid_csv(const DiscrepancyGrid& grid);

/// JSON matrix bundle for external heatmap / contour rendering.
std::string grid_json(const DiscrepancyGrid& grid);

/// Evenly spaced axis helper covering [lo, hi] with `count` points.
std::vector<double> linspace(double lo, double hi, std::size_t count);

} // namespace qfcri

#endif // QFCRI_CHAOS_HPP
