// Command-line surface: analytic evaluation, estimation from sample files,
// Monte-Carlo simulation plans, chaotic-map discrepancy grids, and market
// regime studies. Exit codes: 0 success, 2 input/config error, 3 numeric
// failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qfcri/chaos.hpp"
#include "qfcri/errors.hpp"
#include "qfcri/estimation.hpp"
#include "qfcri/format.hpp"
#include "qfcri/market.hpp"
#include "qfcri/measures.hpp"
#include "qfcri/quantile_model.hpp"
#include "qfcri/sample_batch.hpp"
#include "qfcri/simulation.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitNumeric = 3;

void write_text(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw qfcri::ParseError("cannot open output file '" + path + "'");
    out << content;
}

std::vector<double> load_sample_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw qfcri::ParseError("cannot open sample file '" + path + "'");
    std::vector<double> values;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        try {
            std::size_t used = 0;
            values.push_back(std::stod(line, &used));
            if (used != line.size()) throw std::invalid_argument("trailing junk");
        } catch (const std::exception&) {
            throw qfcri::ParseError("sample file '" + path + "' line " +
                                    std::to_string(line_no) + ": bad value '" + line +
                                    "'");
        }
    }
    if (values.empty())
        throw qfcri::ParseError("sample file '" + path + "' holds no values");
    return values;
}

json load_json_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw qfcri::ParseError("cannot open config '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw qfcri::ParseError("config '" + path + "': " + e.what());
    }
}

// ---------------------------------------------------------------------------
// analytic

struct AnalyticOptions {
    std::string x_spec;
    std::string y_spec;
    std::vector<double> alphas;
    std::string measure = "qfcri";
    double beta = 1.0;
    int record_m = 1;
    std::string out;
    std::string format = "csv";
};

int run_analytic(const AnalyticOptions& opt) {
    using namespace qfcri;
    const QuantileModel x = parse_model_spec(opt.x_spec);
    std::optional<QuantileModel> y;
    if (!opt.y_spec.empty()) y = parse_model_spec(opt.y_spec);

    struct Row {
        std::string measure;
        double alpha;
        MeasureResult result;
    };
    std::vector<Row> rows;
    auto need_y = [&]() -> const QuantileModel& {
        if (!y) throw std::invalid_argument("measure '" + opt.measure + "' needs --y");
        return *y;
    };

    if (opt.measure == "qcri") {
        rows.push_back({"qcri", 1.0, y ? qcri(x, *y) : qcri(x, x)});
    } else {
        if (opt.alphas.empty())
            throw std::invalid_argument("provide at least one --alpha");
        for (double a : opt.alphas) {
            if (opt.measure == "qfcri") {
                rows.push_back({"qfcri", a, qfcri::qfcri(x, need_y(), FractionalOrder(a))});
            } else if (opt.measure == "qfcre") {
                rows.push_back({"qfcre", a, qfcre(x, FractionalOrder(a))});
            } else if (opt.measure == "qfcrir") {
                rows.push_back({"qfcrir", a, qfcrir(x, need_y(), FractionalOrder(a))});
            } else if (opt.measure == "mlf") {
                rows.push_back({"mlf", a, y ? mlf_qfcri(x, *y, a) : mlf_qfcre(x, a)});
            } else if (opt.measure == "record") {
                rows.push_back(
                    {"record", a, qfcri_upper_record(x, opt.record_m, FractionalOrder(a))});
            } else if (opt.measure == "equilibrium") {
                rows.push_back({"equilibrium", a,
                                y ? qfcri_equilibrium_pair(x, *y, FractionalOrder(a))
                                  : qfcri_equilibrium_self(x, FractionalOrder(a))});
            } else if (opt.measure == "phm") {
                rows.push_back({"phm", a, qfcri_phm(x, opt.beta, FractionalOrder(a))});
            } else if (opt.measure == "bounds") {
                MeasureResult lower;
                lower.value = bound_lower_q3(x, need_y(), FractionalOrder(a));
                rows.push_back({"bound_lower_q3", a, lower});
                MeasureResult entropy;
                entropy.value = bound_entropy(x, need_y(), FractionalOrder(a));
                rows.push_back({"bound_entropy", a, entropy});
            } else {
                throw std::invalid_argument("unknown measure '" + opt.measure + "'");
            }
        }
    }

    if (opt.format == "json") {
        json doc = json::array();
        for (const Row& row : rows)
            doc.push_back({{"measure", row.measure},
                           {"alpha", row.alpha},
                           {"value", row.result.value},
                           {"abs_error", row.result.abs_error_estimate},
                           {"method", row.result.method == qfcri::Method::closed_form
                                          ? "closed_form"
                                          : "quadrature"}});
        write_text(opt.out, doc.dump(2) + "\n");
    } else {
        std::string csv = "measure,alpha,value,abs_error,method\n";
        for (const Row& row : rows) {
            csv += row.measure;
            csv += ',';
            csv += qfcri::format_number(row.alpha);
            csv += ',';
            csv += qfcri::format_number(row.result.value);
            csv += ',';
            csv += qfcri::format_number(row.result.abs_error_estimate);
            csv += ',';
            csv += row.result.method == qfcri::Method::closed_form ? "closed_form"
                                                                   : "quadrature";
            csv += '\n';
        }
        write_text(opt.out, csv);
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// estimate

struct EstimateOptions {
    std::string x_file;
    std::string y_file;
    std::vector<double> alphas;
    std::string measure = "qfcri";
    std::string convention = "plotting";
    std::string out;
    std::string format = "csv";
};

int run_estimate(const EstimateOptions& opt) {
    using namespace qfcri;
    auto check_non_negative = [](const std::vector<double>& v, const std::string& who) {
        for (double value : v)
            if (value < 0.0)
                throw std::invalid_argument(
                    who + ": negative values; min-shift the data before estimating");
    };
    const std::vector<double> xv = load_sample_file(opt.x_file);
    check_non_negative(xv, opt.x_file);
    const SampleBatch x(xv);

    std::optional<SampleBatch> y;
    if (!opt.y_file.empty()) {
        const std::vector<double> yv = load_sample_file(opt.y_file);
        check_non_negative(yv, opt.y_file);
        y.emplace(yv);
    }
    const CdfConvention convention = opt.convention == "standard"
                                         ? CdfConvention::standard
                                         : CdfConvention::plotting_position;
    if (opt.alphas.empty()) throw std::invalid_argument("provide at least one --alpha");

    json rows = json::array();
    std::string csv = "measure,alpha,value\n";
    for (double a : opt.alphas) {
        double value = 0.0;
        if (opt.measure == "qfcre") {
            value = estimate_qfcre(x, a);
        } else if (opt.measure == "qfcrir") {
            if (!y) throw std::invalid_argument("qfcrir needs --y");
            value = estimate_qfcrir(x, *y, a, convention);
        } else if (opt.measure == "qfcri") {
            if (!y) throw std::invalid_argument("qfcri needs --y");
            value = estimate_qfcri(x, *y, a, convention);
        } else {
            throw std::invalid_argument("unknown estimate measure '" + opt.measure + "'");
        }
        csv += opt.measure;
        csv += ',';
        csv += format_number(a);
        csv += ',';
        csv += format_number(value);
        csv += '\n';
        rows.push_back({{"measure", opt.measure}, {"alpha", a}, {"value", value}});
    }
    if (opt.format == "json")
        write_text(opt.out, rows.dump(2) + "\n");
    else
        write_text(opt.out, csv);
    return kExitOk;
}

// ---------------------------------------------------------------------------
// simulate

struct SimulateOptions {
    std::string config;
    std::string out;
    std::string format = "csv";
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> replications;
};

int run_simulate(const SimulateOptions& opt) {
    using namespace qfcri;
    const json cfg = load_json_config(opt.config);
    SimulationPlan plan{parse_model_spec(cfg.at("x").get<std::string>()),
                        parse_model_spec(cfg.at("y").get<std::string>()), 0.5, {}, 0, 0};
    plan.alpha = cfg.at("alpha").get<double>();
    plan.sample_sizes = cfg.at("sample_sizes").get<std::vector<std::size_t>>();
    plan.replications = cfg.value("replications", std::size_t{1000});
    plan.base_seed = cfg.value("base_seed", std::uint64_t{1});
    if (opt.seed) plan.base_seed = *opt.seed;
    if (opt.replications) plan.replications = *opt.replications;

    const SimulationReport report = run_plan(plan);
    if (opt.format == "json")
        write_text(opt.out, report_json(report) + "\n");
    else
        write_text(opt.out, report_csv(report));
    return kExitOk;
}

// ---------------------------------------------------------------------------
// chaos

struct ChaosOptions {
    std::string config;
    std::string map = "logistic";
    double alpha = 0.25;
    double x1 = -1000.0; // sentinel: pick the map default
    std::size_t n = 1000;
    std::size_t cells = 50;
    std::vector<double> axis1, axis2;
    std::string out;
    std::string format = "csv";
};

int run_chaos(ChaosOptions opt) {
    using namespace qfcri;
    if (!opt.config.empty()) {
        const json cfg = load_json_config(opt.config);
        opt.map = cfg.value("map", opt.map);
        opt.alpha = cfg.value("alpha", opt.alpha);
        opt.x1 = cfg.value("x1", opt.x1);
        opt.n = cfg.value("n", opt.n);
        opt.cells = cfg.value("cells", opt.cells);
        if (cfg.contains("axis1")) opt.axis1 = cfg.at("axis1").get<std::vector<double>>();
        if (cfg.contains("axis2")) opt.axis2 = cfg.at("axis2").get<std::vector<double>>();
    }
    const MapKind kind = opt.map == "chebyshev" ? MapKind::chebyshev : MapKind::logistic;
    if (opt.map != "chebyshev" && opt.map != "logistic")
        throw std::invalid_argument("unknown map '" + opt.map + "'");
    if (opt.x1 == -1000.0) opt.x1 = kind == MapKind::chebyshev ? 0.3 : 0.1;
    if (opt.axis1.empty())
        opt.axis1 = kind == MapKind::chebyshev ? linspace(2.0 / opt.cells, 2.0, opt.cells)
                                               : linspace(4.0 / opt.cells, 4.0, opt.cells);
    if (opt.axis2.empty()) opt.axis2 = opt.axis1;

    const DiscrepancyGrid grid =
        discrepancy_grid(kind, opt.axis1, opt.axis2, opt.alpha, opt.x1, opt.n);
    if (opt.format == "json")
        write_text(opt.out, grid_json(grid) + "\n");
    else
        write_text(opt.out, grid_csv(grid));
    return kExitOk;
}

// ---------------------------------------------------------------------------
// market

struct MarketOptions {
    std::string config;
    std::string out;
};

int run_market(const MarketOptions& opt) {
    using namespace qfcri;
    const json cfg = load_json_config(opt.config);
    const std::string input = cfg.at("input").get<std::string>();
    const std::string date_column = cfg.value("date_column", std::string("date"));
    const std::string close_column = cfg.value("close_column", std::string("close"));
    const std::string date_format = cfg.value("date_format", std::string("%Y-%m-%d"));
    const ShiftMode mode = cfg.value("shift_mode", std::string("per_window")) == "global"
                               ? ShiftMode::global
                               : ShiftMode::per_window;
    std::vector<double> alphas =
        cfg.value("alphas", std::vector<double>{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8,
                                                0.9, 1.0});

    const PriceSeries prices = load_prices(input, date_column, close_column, date_format);
    const ReturnSeries returns = log_returns(prices);

    auto parse_regime = [&](const json& node) {
        RegimeSpec spec;
        spec.name = node.at("name").get<std::string>();
        spec.start = Date::parse(node.at("start").get<std::string>(), "%Y-%m-%d");
        spec.end = Date::parse(node.at("end").get<std::string>(), "%Y-%m-%d");
        return spec;
    };

    // Built-in default windows (plausible artifact defaults, not calibrated
    // values); override with an explicit "pairs" array.
    json pairs;
    if (cfg.contains("pairs") && cfg.at("pairs").is_array() && !cfg.at("pairs").empty()) {
        pairs = cfg.at("pairs");
    } else {
        pairs = json::parse(R"([
          {"name":"crisis_vs_pandemic",
           "a":{"name":"crisis","start":"2008-01-01","end":"2009-06-30"},
           "b":{"name":"pandemic","start":"2020-02-01","end":"2021-06-30"}},
          {"name":"pandemic_vs_inflation",
           "a":{"name":"pandemic","start":"2020-02-01","end":"2021-06-30"},
           "b":{"name":"inflation","start":"2021-07-01","end":"2023-12-31"}},
          {"name":"slowdown_vs_bullrun",
           "a":{"name":"slowdown","start":"2011-01-01","end":"2013-12-31"},
           "b":{"name":"bullrun","start":"2014-01-01","end":"2019-12-31"}}
        ])");
    }

    json bundle;
    bundle["pairs"] = json::array();
    std::string stdout_blob;
    for (const json& pair : pairs) {
        const std::string name = pair.at("name").get<std::string>();
        const RegimeSpec a = parse_regime(pair.at("a"));
        const RegimeSpec b = parse_regime(pair.at("b"));
        const auto rows = regime_discrepancy(returns, a, b, alphas, mode);
        const std::string csv = regime_csv(rows);

        json entry;
        entry["name"] = name;
        entry["a"] = {{"name", a.name}, {"start", a.start.iso()}, {"end", a.end.iso()}};
        entry["b"] = {{"name", b.name}, {"start", b.start.iso()}, {"end", b.end.iso()}};
        entry["rows"] = json::array();
        for (const auto& row : rows)
            entry["rows"].push_back({{"alpha", row.alpha},
                                     {"forward", row.forward},
                                     {"reverse", row.reverse}});
        bundle["pairs"].push_back(std::move(entry));

        if (opt.out.empty()) {
            stdout_blob += "# pair: " + name + "\n" + csv;
        } else {
            write_text(opt.out + "_" + name + ".csv", csv);
        }
    }
    if (opt.out.empty())
        std::cout << stdout_blob;
    else
        write_text(opt.out + "_bundle.json", bundle.dump(2) + "\n");
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantile-based fractional cumulative residual inaccuracy toolkit"};
    app.require_subcommand(1);

    int threads = 0;
    app.add_option("--threads", threads, "OpenMP thread count (0 = runtime default)");

    AnalyticOptions analytic;
    CLI::App* cmd_analytic =
        app.add_subcommand("analytic", "evaluate measures on parametric models");
    cmd_analytic->add_option("--x", analytic.x_spec, "actual model spec")->required();
    cmd_analytic->add_option("--y", analytic.y_spec, "assigned model spec");
    cmd_analytic->add_option("--alpha", analytic.alphas, "fractional orders");
    cmd_analytic->add_option("--measure", analytic.measure,
                             "qfcri|qfcre|qcri|qfcrir|mlf|record|equilibrium|phm|bounds");
    cmd_analytic->add_option("--beta", analytic.beta, "PHM proportionality constant");
    cmd_analytic->add_option("--m", analytic.record_m, "upper-record index (>= 1)");
    cmd_analytic->add_option("--out", analytic.out, "output path (default stdout)");
    cmd_analytic->add_option("--format", analytic.format, "csv|json");

    EstimateOptions estimate;
    CLI::App* cmd_estimate =
        app.add_subcommand("estimate", "nonparametric estimates from sample files");
    cmd_estimate->add_option("--x", estimate.x_file, "actual sample file")->required();
    cmd_estimate->add_option("--y", estimate.y_file, "assigned sample file");
    cmd_estimate->add_option("--alpha", estimate.alphas, "fractional orders");
    cmd_estimate->add_option("--measure", estimate.measure, "qfcri|qfcre|qfcrir");
    cmd_estimate->add_option("--convention", estimate.convention, "plotting|standard");
    cmd_estimate->add_option("--out", estimate.out, "output path (default stdout)");
    cmd_estimate->add_option("--format", estimate.format, "csv|json");

    SimulateOptions simulate;
    CLI::App* cmd_simulate =
        app.add_subcommand("simulate", "Monte-Carlo bias/MSE study from a plan config");
    cmd_simulate->add_option("--config", simulate.config, "plan JSON")->required();
    cmd_simulate->add_option("--out", simulate.out, "output path (default stdout)");
    cmd_simulate->add_option("--format", simulate.format, "csv|json");
    std::uint64_t seed_opt = 0;
    CLI::Option* seed_flag =
        cmd_simulate->add_option("--seed", seed_opt, "override base seed");
    std::size_t reps_opt = 0;
    CLI::Option* reps_flag =
        cmd_simulate->add_option("--replications", reps_opt, "override replications");

    ChaosOptions chaos;
    CLI::App* cmd_chaos =
        app.add_subcommand("chaos", "pairwise map discrepancy grid");
    cmd_chaos->add_option("--config", chaos.config, "grid JSON config");
    cmd_chaos->add_option("--map", chaos.map, "chebyshev|logistic");
    cmd_chaos->add_option("--alpha", chaos.alpha, "fractional order");
    cmd_chaos->add_option("--x1", chaos.x1, "orbit start value");
    cmd_chaos->add_option("--n", chaos.n, "orbit length");
    cmd_chaos->add_option("--cells", chaos.cells, "grid resolution per axis");
    cmd_chaos->add_option("--axis1", chaos.axis1, "explicit actual-side parameters");
    cmd_chaos->add_option("--axis2", chaos.axis2, "explicit assigned-side parameters");
    cmd_chaos->add_option("--out", chaos.out, "output path (default stdout)");
    cmd_chaos->add_option("--format", chaos.format, "csv|json");

    MarketOptions market;
    CLI::App* cmd_market =
        app.add_subcommand("market", "regime discrepancy curves from a price CSV");
    cmd_market->add_option("--config", market.config, "market JSON config")->required();
    cmd_market->add_option("--out", market.out, "output prefix (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

#ifdef _OPENMP
    if (threads > 0) omp_set_num_threads(threads);
#endif

    try {
        if (cmd_analytic->parsed()) return run_analytic(analytic);
        if (cmd_estimate->parsed()) return run_estimate(estimate);
        if (cmd_simulate->parsed()) {
            if (*seed_flag) simulate.seed = seed_opt;
            if (*reps_flag) simulate.replications = reps_opt;
            return run_simulate(simulate);
        }
        if (cmd_chaos->parsed()) return run_chaos(chaos);
        if (cmd_market->parsed()) return run_market(market);
    } catch (const qfcri::NumericError& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::domain_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
