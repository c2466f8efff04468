#ifndef QFCRI_MARKET_HPP
#define QFCRI_MARKET_HPP

#include <string>
#include <vector>

namespace qfcri {

/// Civil calendar date; ordering via the days-since-epoch serial.
struct Date {
    int year = 1970;
    unsigned month = 1;
    unsigned day = 1;

    long serial() const; // days since 1970-01-01
    std::string iso() const;

    /// Parse with a strftime-like format supporting %Y, %m, %d and literal
    /// separators, e.g. "%Y-%m-%d" or "%d/%m/%Y". Throws ParseError.
    static Date parse(const std::string& text, const std::string& format);

    friend bool operator<(const Date& a, const Date& b) { return a.serial() < b.serial(); }
    friend bool operator<=(const Date& a, const Date& b) { return a.serial() <= b.serial(); }
    friend bool operator==(const Date& a, const Date& b) { return a.serial() == b.serial(); }
};

struct PriceSeries {
    std::vector<Date> dates;   // strictly increasing
    std::vector<double> closes; // positive, same length
};

struct ReturnSeries {
    std::vector<Date> dates; // date of the later price in each pair
    std::vector<double> values;
};

struct RegimeSpec {
    std::string name;
    Date start;
    Date end; // inclusive; must be after start

    void validate() const;
};

enum class ShiftMode { per_window, global };

struct RegimeRow {
    double alpha = 0.0;
    double forward = 0.0; // Q-FCRI(A, B)
    double reverse = 0.0; // Q-FCRI(B, A)
};

/// Load a CSV of daily closes. Rows are sorted by date; duplicate dates,
/// non-positive closes, and unparseable fields are rejected with the
/// offending line number.
PriceSeries load_prices(const std::string& path, const std::string& date_column,
                        const std::string& close_column,
                        const std::string& date_format);

/// R_t = log(P_{t+1}) - log(P_t); length len-1.
ReturnSeries log_returns(const PriceSeries& prices);

/// Z_t = R_t - min R_t; the output minimum is exactly zero.
ReturnSeries shift_transform(const ReturnSeries& returns);

/// For each alpha, the estimated pair (Q-FCRI(Z_A, Z_B), Q-FCRI(Z_B, Z_A)).
/// per_window shifts each regime window by its own minimum after slicing;
/// global shifts the full series once before slicing.
std::vector<RegimeRow> regime_discrepancy(const ReturnSeries& returns,
                                          const RegimeSpec& regime_a,
                                          const RegimeSpec& regime_b,
                                          const std::vector<double>& alphas,
                                          ShiftMode mode = ShiftMode::per_window);

/// CSV rows "alpha,forward,reverse".
std::string regime_csv(const std::vector<RegimeRow>& rows);

} // namespace qfcri

#endif // QFCRI_MARKET_HPP
