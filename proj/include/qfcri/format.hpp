#ifndef QFCRI_FORMAT_HPP
#define QFCRI_FORMAT_HPP

#include <string>

namespace qfcri {

/// Locale-independent decimal formatting with 12 significant digits ('.'
/// decimal point always); used for all CSV output so re-runs are
/// byte-identical.
std::string format_number(double value, int significant_digits = 12);

} // namespace qfcri

#endif // QFCRI_FORMAT_HPP
