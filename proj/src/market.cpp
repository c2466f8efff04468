#include "qfcri/market.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "qfcri/errors.hpp"
#include "qfcri/estimation.hpp"
#include "qfcri/format.hpp"
#include "qfcri/sample_batch.hpp"

namespace qfcri {

// ---------------------------------------------------------------------------
// Dates

long Date::serial() const {
    // Howard Hinnant's days-from-civil algorithm.
    const int y = year - (month <= 2 ? 1 : 0);
    const long era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153 * (month + (month > 2 ? -3 : 9)) + 2) / 5 + day - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<long>(doe) - 719468;
}

std::string Date::iso() const {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", year, month, day);
    return buf;
}

Date Date::parse(const std::string& text, const std::string& format) {
    Date out;
    std::size_t ti = 0;
    bool saw_y = false, saw_m = false, saw_d = false;

    auto read_int = [&](std::size_t max_digits) {
        std::size_t start = ti;
        long v = 0;
        while (ti < text.size() && ti - start < max_digits &&
               std::isdigit(static_cast<unsigned char>(text[ti]))) {
            v = v * 10 + (text[ti] - '0');
            ++ti;
        }
        if (ti == start)
            throw ParseError("date '" + text + "' does not match format '" + format + "'");
        return v;
    };

    for (std::size_t fi = 0; fi < format.size(); ++fi) {
        if (format[fi] == '%' && fi + 1 < format.size()) {
            const char code = format[++fi];
            if (code == 'Y') {
                out.year = static_cast<int>(read_int(4));
                saw_y = true;
            } else if (code == 'm') {
                out.month = static_cast<unsigned>(read_int(2));
                saw_m = true;
            } else if (code == 'd') {
                out.day = static_cast<unsigned>(read_int(2));
                saw_d = true;
            } else {
                throw ParseError(std::string("unsupported date format code %") + code);
            }
        } else {
            if (ti >= text.size() || text[ti] != format[fi])
                throw ParseError("date '" + text + "' does not match format '" + format +
                                 "'");
            ++ti;
        }
    }
    if (ti != text.size() || !saw_y || !saw_m || !saw_d)
        throw ParseError("date '" + text + "' does not match format '" + format + "'");
    if (out.month < 1 || out.month > 12 || out.day < 1 || out.day > 31)
        throw ParseError("date '" + text + "' is out of range");
    return out;
}

void RegimeSpec::validate() const {
    if (!(start < end))
        throw std::invalid_argument("regime '" + name + "': start must precede end");
}

// ---------------------------------------------------------------------------
// CSV ingestion

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, ',')) {
        // Trim whitespace and CR.
        std::size_t b = field.find_first_not_of(" \t\r");
        std::size_t e = field.find_last_not_of(" \t\r");
        fields.push_back(b == std::string::npos ? "" : field.substr(b, e - b + 1));
    }
    if (!line.empty() && line.back() == ',') fields.push_back("");
    return fields;
}

} // namespace

PriceSeries load_prices(const std::string& path, const std::string& date_column,
                        const std::string& close_column,
                        const std::string& date_format) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open price file '" + path + "'");

    std::string line;
    if (!std::getline(in, line))
        throw ParseError("price file '" + path + "' is empty");

    const std::vector<std::string> header = split_csv_line(line);
    std::size_t date_idx = header.size(), close_idx = header.size();
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == date_column) date_idx = i;
        if (header[i] == close_column) close_idx = i;
    }
    if (date_idx == header.size())
        throw ParseError("price file '" + path + "': missing column '" + date_column + "'");
    if (close_idx == header.size())
        throw ParseError("price file '" + path + "': missing column '" + close_column + "'");

    std::vector<std::pair<Date, double>> rows;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line == "\r") continue;
        const std::vector<std::string> fields = split_csv_line(line);
        if (fields.size() <= std::max(date_idx, close_idx))
            throw ParseError("price file '" + path + "' line " + std::to_string(line_no) +
                             ": too few columns");
        Date date;
        try {
            date = Date::parse(fields[date_idx], date_format);
        } catch (const ParseError& e) {
            throw ParseError("price file '" + path + "' line " + std::to_string(line_no) +
                             ": " + e.what());
        }
        double close = 0.0;
        try {
            std::size_t used = 0;
            close = std::stod(fields[close_idx], &used);
            if (used != fields[close_idx].size())
                throw std::invalid_argument("trailing junk");
        } catch (const std::exception&) {
            throw ParseError("price file '" + path + "' line " + std::to_string(line_no) +
                             ": bad close value '" + fields[close_idx] + "'");
        }
        if (!(close > 0.0))
            throw ParseError("price file '" + path + "' line " + std::to_string(line_no) +
                             ": close must be positive");
        rows.emplace_back(date, close);
    }
    if (rows.size() < 2)
        throw ParseError("price file '" + path + "': need at least 2 rows");

    std::stable_sort(rows.begin(), rows.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 1; i < rows.size(); ++i)
        if (rows[i].first == rows[i - 1].first)
            throw ParseError("price file '" + path + "': duplicate date " +
                             rows[i].first.iso());

    PriceSeries out;
    out.dates.reserve(rows.size());
    out.closes.reserve(rows.size());
    for (const auto& [d, c] : rows) {
        out.dates.push_back(d);
        out.closes.push_back(c);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Transforms

ReturnSeries log_returns(const PriceSeries& prices) {
    if (prices.closes.size() < 2)
        throw std::invalid_argument("log_returns: need at least 2 prices");
    ReturnSeries out;
    out.dates.reserve(prices.closes.size() - 1);
    out.values.reserve(prices.closes.size() - 1);
    for (std::size_t i = 1; i < prices.closes.size(); ++i) {
        out.dates.push_back(prices.dates[i]);
        out.values.push_back(std::log(prices.closes[i]) - std::log(prices.closes[i - 1]));
    }
    return out;
}

ReturnSeries shift_transform(const ReturnSeries& returns) {
    if (returns.values.empty())
        throw std::invalid_argument("shift_transform: empty return series");
    const double lo = *std::min_element(returns.values.begin(), returns.values.end());
    ReturnSeries out = returns;
    for (double& v : out.values) v -= lo;
    return out;
}

// ---------------------------------------------------------------------------
// Regime study

namespace {

std::vector<double> slice_window(const ReturnSeries& returns, const RegimeSpec& regime) {
    std::vector<double> window;
    for (std::size_t i = 0; i < returns.values.size(); ++i)
        if (regime.start <= returns.dates[i] && returns.dates[i] <= regime.end)
            window.push_back(returns.values[i]);
    if (window.size() < 2)
        throw std::invalid_argument("regime '" + regime.name +
                                    "': window holds fewer than 2 returns");
    return window;
}

void shift_in_place(std::vector<double>& values) {
    const double lo = *std::min_element(values.begin(), values.end());
    for (double& v : values) v -= lo;
}

} // namespace

std::vector<RegimeRow> regime_discrepancy(const ReturnSeries& returns,
                                          const RegimeSpec& regime_a,
                                          const RegimeSpec& regime_b,
                                          const std::vector<double>& alphas,
                                          ShiftMode mode) {
    regime_a.validate();
    regime_b.validate();
    if (alphas.empty())
        throw std::invalid_argument("regime_discrepancy: alpha list is empty");
    for (double a : alphas)
        if (!(a > 0.0 && a <= 1.0))
            throw std::domain_error("regime_discrepancy: alpha must lie in (0,1]");

    ReturnSeries source = returns;
    if (mode == ShiftMode::global) source = shift_transform(returns);

    std::vector<double> za = slice_window(source, regime_a);
    std::vector<double> zb = slice_window(source, regime_b);
    if (mode == ShiftMode::per_window) {
        shift_in_place(za);
        shift_in_place(zb);
    }
    const SampleBatch batch_a(std::move(za));
    const SampleBatch batch_b(std::move(zb));

    std::vector<RegimeRow> rows(alphas.size());
    const auto count = static_cast<std::ptrdiff_t>(alphas.size());
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t k = 0; k < count; ++k) {
        RegimeRow row;
        row.alpha = alphas[static_cast<std::size_t>(k)];
        row.forward = estimate_qfcri(batch_a, batch_b, row.alpha);
        row.reverse = estimate_qfcri(batch_b, batch_a, row.alpha);
        rows[static_cast<std::size_t>(k)] = row;
    }
    return rows;
}

std::string regime_csv(const std::vector<RegimeRow>& rows) {
    std::string out = "alpha,forward,reverse\n";
    for (const RegimeRow& row : rows) {
        out += format_number(row.alpha);
        out += ',';
        out += format_number(row.forward);
        out += ',';
        out += format_number(row.reverse);
        out += '\n';
    }
    return out;
}

} // namespace qfcri
