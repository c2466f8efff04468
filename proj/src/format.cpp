#include "qfcri/format.hpp"

#include <charconv>
#include <cmath>

namespace qfcri {

std::string format_number(double value, int significant_digits) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value,
                                   std::chars_format::general, significant_digits);
    (void)ec;
    return std::string(buf, ptr);
}

} // namespace qfcri
