#ifndef QFCRI_SAMPLE_BATCH_HPP
#define QFCRI_SAMPLE_BATCH_HPP

#include <cstddef>
#include <vector>

namespace qfcri {

/// A finite batch of real observations with cached order statistics.
/// Immutable once constructed; values are kept sorted non-decreasing.
class SampleBatch {
public:
    /// Sorts and validates: at least one value, all finite.
    explicit SampleBatch(std::vector<double> values);

    const std::vector<double>& sorted() const { return sorted_; }
    std::size_t size() const { return sorted_.size(); }
    double min() const { return sorted_.front(); }
    double max() const { return sorted_.back(); }

    /// k-th order statistic, 1-based: order_stat(1) = minimum.
    double order_stat(std::size_t k) const { return sorted_.at(k - 1); }

private:
    std::vector<double> sorted_;
};

} // namespace qfcri

#endif // QFCRI_SAMPLE_BATCH_HPP
