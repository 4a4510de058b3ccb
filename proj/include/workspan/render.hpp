#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "workspan/amdahl.hpp"
#include "workspan/report.hpp"
#include "workspan/scheduler.hpp"
#include "workspan/superlinear.hpp"

namespace workspan {

enum class Format { table, json, csv };

namespace detail {

using Json = nlohmann::ordered_json;

inline std::string table_cell(const Rational& r) {
    if (r.is_integer())
        return r.to_string();
    return r.to_string() + " (" + r.to_decimal_string() + ")";
}

inline std::string table_cell(const std::optional<Rational>& r) {
    return r ? table_cell(*r) : std::string("inf");
}

inline Json json_rational(const Rational& r) {
    return Json{{"exact", r.to_string()}, {"decimal", r.to_decimal_string()}};
}

inline Json json_rational(const std::optional<Rational>& r) {
    if (!r)
        return Json{{"exact", "inf"}, {"decimal", "inf"}};
    return json_rational(*r);
}

inline std::string csv_exact(const std::optional<Rational>& r) {
    return r ? r->to_string() : std::string("inf");
}

inline std::string csv_decimal(const std::optional<Rational>& r) {
    return r ? r->to_decimal_string() : std::string("inf");
}

/// "# key = exact (decimal)" scalar header for plot-ready CSV.
inline std::string csv_scalar(const std::string& key, const std::optional<Rational>& r) {
    return "# " + key + " = " + csv_exact(r) + " (" + csv_decimal(r) + ")\n";
}

inline std::string csv_scalar(const std::string& key, const std::string& value) {
    return "# " + key + " = " + value + "\n";
}

inline std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i)
            out += sep;
        out += parts[i];
    }
    return out;
}

inline std::string format_table(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width;
    for (const auto& row : rows) {
        if (width.size() < row.size())
            width.resize(row.size(), 0);
        for (std::size_t c = 0; c < row.size(); ++c)
            width[c] = std::max(width[c], row[c].size());
    }
    std::string out;
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            line += row[c];
            if (c + 1 < row.size())
                line.append(width[c] - row[c].size() + 2, ' ');
        }
        out += line + "\n";
    }
    return out;
}

inline std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

} // namespace detail

inline std::string render_metrics(const MetricsReport& r, Format format) {
    using namespace detail;
    const std::string nodes_joined = join(r.serial_nodes, " ");
    switch (format) {
    case Format::table: {
        std::vector<std::vector<std::string>> rows = {
            {"metric", "value"},
            {"t1", table_cell(r.t1)},
            {"t_inf", table_cell(r.t_inf)},
            {"work_w", table_cell(r.work_w)},
            {"total_time_t", table_cell(r.total_time_t)},
            {"avg_parallelism", table_cell(r.avg_parallelism)},
            {"parallelism", table_cell(r.parallelism)},
            {"serial_fraction", table_cell(r.serial_fraction)},
            {"serial_nodes", nodes_joined.empty() ? "(none)" : nodes_joined},
            {"uniform_row_weights", r.uniform_row_weights ? "true" : "false"},
        };
        std::string out = format_table(rows);
        if (!r.uniform_row_weights)
            out += "note: rows mix weights, so row times use the row maximum and "
                   "avg_parallelism may differ from parallelism\n";
        return out;
    }
    case Format::json: {
        Json j;
        j["t1"] = json_rational(r.t1);
        j["t_inf"] = json_rational(r.t_inf);
        j["work_w"] = json_rational(r.work_w);
        j["total_time_t"] = json_rational(r.total_time_t);
        j["avg_parallelism"] = json_rational(r.avg_parallelism);
        j["parallelism"] = json_rational(r.parallelism);
        j["serial_fraction"] = json_rational(r.serial_fraction);
        j["serial_nodes"] = r.serial_nodes;
        j["uniform_row_weights"] = r.uniform_row_weights;
        return dump_json(j);
    }
    case Format::csv: {
        std::string out = "field,exact,decimal\n";
        const auto row = [&](const char* name, const Rational& v) {
            out += std::string(name) + "," + v.to_string() + "," + v.to_decimal_string() + "\n";
        };
        row("t1", r.t1);
        row("t_inf", r.t_inf);
        row("work_w", r.work_w);
        row("total_time_t", r.total_time_t);
        row("avg_parallelism", r.avg_parallelism);
        row("parallelism", r.parallelism);
        row("serial_fraction", r.serial_fraction);
        out += "serial_nodes," + join(r.serial_nodes, ";") + ",\n";
        out += std::string("uniform_row_weights,") +
               (r.uniform_row_weights ? "true" : "false") + ",\n";
        return out;
    }
    }
    return {};
}

inline std::string render_series(const SpeedupSeries& s, Format format) {
    using namespace detail;
    switch (format) {
    case Format::table: {
        std::string out = std::string("source: ") + series_source_name(s.source) + "\n";
        out += "baseline_t1: " + table_cell(s.baseline_t1) + "\n";
        std::vector<std::vector<std::string>> rows = {{"p", "t_p", "s_p", "e_p"}};
        for (const SeriesRow& row : s.rows)
            rows.push_back({std::to_string(row.p), table_cell(row.t_p),
                            table_cell(row.s_p), table_cell(row.e_p)});
        return out + format_table(rows);
    }
    case Format::json: {
        Json j;
        j["source"] = series_source_name(s.source);
        j["baseline_t1"] = json_rational(s.baseline_t1);
        j["rows"] = Json::array();
        for (const SeriesRow& row : s.rows)
            j["rows"].push_back(Json{{"p", row.p},
                                     {"t_p", json_rational(row.t_p)},
                                     {"s_p", json_rational(row.s_p)},
                                     {"e_p", json_rational(row.e_p)}});
        return dump_json(j);
    }
    case Format::csv: {
        std::string out = csv_scalar("source", series_source_name(s.source));
        out += csv_scalar("baseline_t1", s.baseline_t1);
        out += "p,t_p,s_p,e_p,t_p_decimal,s_p_decimal,e_p_decimal\n";
        for (const SeriesRow& row : s.rows)
            out += std::to_string(row.p) + "," + row.t_p.to_string() + "," +
                   row.s_p.to_string() + "," + row.e_p.to_string() + "," +
                   row.t_p.to_decimal_string() + "," + row.s_p.to_decimal_string() +
                   "," + row.e_p.to_decimal_string() + "\n";
        return out;
    }
    }
    return {};
}

inline std::string render_amdahl(const AmdahlCurve& c, Format format) {
    using namespace detail;
    switch (format) {
    case Format::table: {
        std::string out = "sigma: " + table_cell(c.model.sigma) + "\n";
        out += std::string("source: ") + sigma_source_name(c.model.source) + "\n";
        out += "asymptote: " + table_cell(c.asymptote) + "\n";
        std::vector<std::vector<std::string>> rows = {{"p", "amdahl_speedup"}};
        for (const auto& [p, sp] : c.rows)
            rows.push_back({std::to_string(p), table_cell(sp)});
        return out + format_table(rows);
    }
    case Format::json: {
        Json j;
        j["sigma"] = json_rational(c.model.sigma);
        j["source"] = sigma_source_name(c.model.source);
        j["asymptote"] = json_rational(c.asymptote);
        j["curve"] = Json::array();
        for (const auto& [p, sp] : c.rows)
            j["curve"].push_back(Json{{"p", p}, {"amdahl_speedup", json_rational(sp)}});
        return dump_json(j);
    }
    case Format::csv: {
        std::string out = csv_scalar("sigma", c.model.sigma);
        out += csv_scalar("source", sigma_source_name(c.model.source));
        out += csv_scalar("asymptote", c.asymptote);
        out += "p,amdahl_speedup,amdahl_speedup_decimal\n";
        for (const auto& [p, sp] : c.rows)
            out += std::to_string(p) + "," + sp.to_string() + "," +
                   sp.to_decimal_string() + "\n";
        return out;
    }
    }
    return {};
}

inline std::string render_reconciliation(const ReconciliationReport& r, Format format) {
    using namespace detail;
    switch (format) {
    case Format::table: {
        std::string out = "parallelism: " + table_cell(r.parallelism) + "\n";
        out += "amdahl_asymptote: " + table_cell(r.amdahl_asymptote) + "\n";
        out += std::string("consistent: ") + (r.consistent ? "true" : "false") + "\n";
        std::vector<std::vector<std::string>> rows = {
            {"p", "linear_bound", "amdahl_value", "span_bound", "governing"}};
        for (const ReconciliationRow& row : r.curve)
            rows.push_back({std::to_string(row.p), table_cell(row.linear_bound),
                            table_cell(row.amdahl_value), table_cell(row.span_bound),
                            governing_name(row.governing)});
        return out + format_table(rows);
    }
    case Format::json: {
        Json j;
        j["parallelism"] = json_rational(r.parallelism);
        j["amdahl_asymptote"] = json_rational(r.amdahl_asymptote);
        j["consistent"] = r.consistent;
        j["curve"] = Json::array();
        for (const ReconciliationRow& row : r.curve)
            j["curve"].push_back(Json{{"p", row.p},
                                      {"linear_bound", json_rational(row.linear_bound)},
                                      {"amdahl_value", json_rational(row.amdahl_value)},
                                      {"span_bound", json_rational(row.span_bound)},
                                      {"governing", governing_name(row.governing)}});
        return dump_json(j);
    }
    case Format::csv: {
        std::string out = csv_scalar("parallelism", r.parallelism);
        out += csv_scalar("amdahl_asymptote", r.amdahl_asymptote);
        out += csv_scalar("consistent", r.consistent ? "true" : "false");
        out += "p,linear_bound,amdahl_value,span_bound,governing,"
               "amdahl_value_decimal,span_bound_decimal\n";
        for (const ReconciliationRow& row : r.curve)
            out += std::to_string(row.p) + "," + row.linear_bound.to_string() + "," +
                   row.amdahl_value.to_string() + "," + row.span_bound.to_string() +
                   "," + governing_name(row.governing) + "," +
                   row.amdahl_value.to_decimal_string() + "," +
                   row.span_bound.to_decimal_string() + "\n";
        return out;
    }
    }
    return {};
}

inline std::string render_bounds(const BoundReport& r, Format format) {
    using namespace detail;
    switch (format) {
    case Format::table: {
        std::vector<std::vector<std::string>> rows = {
            {"p", "t_p", "linear_lower", "span_lower", "satisfied", "slack"}};
        for (const BoundRow& row : r.rows)
            rows.push_back({std::to_string(row.p), table_cell(row.t_p),
                            table_cell(row.linear_lower), table_cell(row.span_lower),
                            row.satisfied ? "true" : "false", table_cell(row.slack)});
        return format_table(rows);
    }
    case Format::json: {
        Json j;
        j["rows"] = Json::array();
        for (const BoundRow& row : r.rows)
            j["rows"].push_back(Json{{"p", row.p},
                                     {"t_p", json_rational(row.t_p)},
                                     {"linear_lower", json_rational(row.linear_lower)},
                                     {"span_lower", json_rational(row.span_lower)},
                                     {"satisfied", row.satisfied},
                                     {"slack", json_rational(row.slack)}});
        return dump_json(j);
    }
    case Format::csv: {
        std::string out =
            "p,t_p,linear_lower,span_lower,satisfied,slack,"
            "t_p_decimal,linear_lower_decimal,span_lower_decimal,slack_decimal\n";
        for (const BoundRow& row : r.rows)
            out += std::to_string(row.p) + "," + row.t_p.to_string() + "," +
                   row.linear_lower.to_string() + "," + row.span_lower.to_string() +
                   "," + (row.satisfied ? "true" : "false") + "," +
                   row.slack.to_string() + "," + row.t_p.to_decimal_string() + "," +
                   row.linear_lower.to_decimal_string() + "," +
                   row.span_lower.to_decimal_string() + "," +
                   row.slack.to_decimal_string() + "\n";
        return out;
    }
    }
    return {};
}

inline std::string render_superlinear(const SuperlinearReport& r, Format format) {
    using namespace detail;
    const auto flagged_at = [&](std::int64_t p) {
        for (const FlaggedRow& f : r.flagged)
            if (f.p == p)
                return true;
        return false;
    };
    switch (format) {
    case Format::table: {
        std::string out = std::string("verdict: ") + verdict_name(r.verdict) + "\n";
        out += "corrected_baseline: " + table_cell(r.corrected_baseline) + "\n";
        if (r.flagged.empty()) {
            out += "flagged: (none)\n";
        } else {
            std::vector<std::string> parts;
            for (const FlaggedRow& f : r.flagged)
                parts.push_back("p=" + std::to_string(f.p) + " e_p=" + table_cell(f.e_p));
            out += "flagged: " + join(parts, ", ") + "\n";
        }
        std::vector<std::vector<std::string>> rows = {
            {"p", "t_p", "corrected_s_p", "corrected_e_p", "flagged"}};
        for (const SeriesRow& row : r.corrected_series.rows)
            rows.push_back({std::to_string(row.p), table_cell(row.t_p),
                            table_cell(row.s_p), table_cell(row.e_p),
                            flagged_at(row.p) ? "true" : "false"});
        return out + format_table(rows);
    }
    case Format::json: {
        Json j;
        j["flagged"] = Json::array();
        for (const FlaggedRow& f : r.flagged)
            j["flagged"].push_back(Json{{"p", f.p}, {"e_p", json_rational(f.e_p)}});
        j["corrected_baseline"] = json_rational(r.corrected_baseline);
        Json series;
        series["source"] = series_source_name(r.corrected_series.source);
        series["baseline_t1"] = json_rational(r.corrected_series.baseline_t1);
        series["rows"] = Json::array();
        for (const SeriesRow& row : r.corrected_series.rows)
            series["rows"].push_back(Json{{"p", row.p},
                                          {"t_p", json_rational(row.t_p)},
                                          {"s_p", json_rational(row.s_p)},
                                          {"e_p", json_rational(row.e_p)}});
        j["corrected_series"] = series;
        j["verdict"] = verdict_name(r.verdict);
        return dump_json(j);
    }
    case Format::csv: {
        std::string out = csv_scalar("verdict", verdict_name(r.verdict));
        out += csv_scalar("corrected_baseline", r.corrected_baseline);
        out += "p,t_p,corrected_s_p,corrected_e_p,flagged,"
               "t_p_decimal,corrected_s_p_decimal,corrected_e_p_decimal\n";
        for (const SeriesRow& row : r.corrected_series.rows)
            out += std::to_string(row.p) + "," + row.t_p.to_string() + "," +
                   row.s_p.to_string() + "," + row.e_p.to_string() + "," +
                   (flagged_at(row.p) ? "true" : "false") + "," +
                   row.t_p.to_decimal_string() + "," + row.s_p.to_decimal_string() +
                   "," + row.e_p.to_decimal_string() + "\n";
        return out;
    }
    }
    return {};
}

} // namespace workspan
