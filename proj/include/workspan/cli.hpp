#pragma once

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "workspan/graph_io.hpp"
#include "workspan/render.hpp"

namespace workspan {

namespace detail {

inline Format format_from(const std::string& name) {
    if (name == "json")
        return Format::json;
    if (name == "csv")
        return Format::csv;
    return Format::table;
}

inline std::optional<std::string> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline std::optional<std::vector<std::int64_t>> parse_proc_list(const std::string& text) {
    std::vector<std::int64_t> ps;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        const auto value = parse_rational(item);
        if (!value || !value->is_integer() || value->num() < 1)
            return std::nullopt;
        if (!ps.empty() && value->num() <= ps.back())
            return std::nullopt;
        ps.push_back(value->num());
    }
    if (ps.empty())
        return std::nullopt;
    return ps;
}

} // namespace detail

/// Runs one CLI invocation. Exit codes: 0 success, 1 validation error
/// (unreadable input, bad graph or CSV), 2 usage error.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err) {
    CLI::App app{"Work-span analysis for weighted task DAGs"};
    app.name("workspan");
    app.require_subcommand(1);

    std::string format_name = "table";
    std::string graph_path;
    std::string procs_text;
    std::string tiebreak_name_ = "cp";
    std::string sigma_text;
    std::string measurements_path;
    std::string t1_text;
    std::string fixture_name;
    std::int64_t p_max = 1;

    const auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format_name, "Output format")
            ->check(CLI::IsMember({"table", "json", "csv"}))
            ->capture_default_str();
    };

    CLI::App* analyze = app.add_subcommand("analyze", "Work, span, parallelism and serial fraction of a graph");
    analyze->add_option("file", graph_path, "Graph file")->required();
    add_format(analyze);

    CLI::App* simulate = app.add_subcommand("simulate", "Greedy p-processor schedule and speedup series");
    simulate->add_option("file", graph_path, "Graph file")->required();
    simulate->add_option("--procs", procs_text, "Comma-separated processor counts, strictly increasing")
        ->required();
    simulate->add_option("--tiebreak", tiebreak_name_, "Ready-task tie break: cp or id")
        ->check(CLI::IsMember({"cp", "id"}))
        ->capture_default_str();
    add_format(simulate);

    CLI::App* amdahl_cmd = app.add_subcommand("amdahl", "Amdahl speedup curve for a graph or a given sigma");
    amdahl_cmd->add_option("file", graph_path, "Graph file")->required();
    amdahl_cmd->add_option("--sigma", sigma_text, "Serial fraction in [0,1]; overrides the graph-derived value");
    amdahl_cmd->add_option("--pmax", p_max, "Largest processor count")
        ->required()
        ->check(CLI::PositiveNumber);
    add_format(amdahl_cmd);

    CLI::App* reconcile_cmd = app.add_subcommand("reconcile", "Line up linear, Amdahl and span speedup ceilings");
    reconcile_cmd->add_option("file", graph_path, "Graph file")->required();
    reconcile_cmd->add_option("--pmax", p_max, "Largest processor count")
        ->required()
        ->check(CLI::PositiveNumber);
    add_format(reconcile_cmd);

    CLI::App* bounds_cmd = app.add_subcommand("check-bounds", "Check measured times against the T1/p and span lower bounds");
    bounds_cmd->add_option("file", graph_path, "Graph file")->required();
    bounds_cmd->add_option("--measurements", measurements_path, "CSV with header p,t_p")
        ->required();
    add_format(bounds_cmd);

    CLI::App* superlinear_cmd = app.add_subcommand("superlinear", "Flag efficiencies above one and rebaseline the series");
    superlinear_cmd->add_option("--measurements", measurements_path, "CSV with header p,t_p")
        ->required();
    superlinear_cmd->add_option("--t1", t1_text, "Serial baseline; default is the p=1 row");
    add_format(superlinear_cmd);

    CLI::App* fixture_cmd = app.add_subcommand("fixture", "Print a bundled graph in canonical form");
    fixture_cmd->add_option("name", fixture_name, "Fixture name (leiserson)")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    const Format format = detail::format_from(format_name);
    const auto fail = [&](const std::string& message) {
        err << "error: " << message << "\n";
        return 1;
    };
    const auto usage_fail = [&](const std::string& message) {
        err << "error: " << message << "\n";
        return 2;
    };

    const auto load_graph = [&]() -> std::optional<TaskGraph> {
        const auto text = detail::read_file(graph_path);
        if (!text) {
            err << "error: cannot open '" << graph_path << "'\n";
            return std::nullopt;
        }
        return parse_graph(*text);
    };
    const auto load_measurements =
        [&]() -> std::optional<std::vector<std::pair<std::int64_t, Rational>>> {
        const auto text = detail::read_file(measurements_path);
        if (!text) {
            err << "error: cannot open '" << measurements_path << "'\n";
            return std::nullopt;
        }
        return parse_measurements(*text);
    };

    try {
        if (analyze->parsed()) {
            const auto g = load_graph();
            if (!g)
                return 1;
            out << render_metrics(make_metrics_report(*g), format);
            return 0;
        }
        if (simulate->parsed()) {
            const auto ps = detail::parse_proc_list(procs_text);
            if (!ps)
                return usage_fail("--procs wants a strictly increasing list of integers >= 1, got '" +
                                  procs_text + "'");
            const auto g = load_graph();
            if (!g)
                return 1;
            const Tiebreak policy = tiebreak_name_ == "id" ? Tiebreak::id_order
                                                           : Tiebreak::critical_path_priority;
            out << render_series(speedup_series(*g, *ps, policy), format);
            return 0;
        }
        if (amdahl_cmd->parsed()) {
            const auto g = load_graph();
            if (!g)
                return 1;
            AmdahlModel model = serial_fraction(*g);
            if (!sigma_text.empty()) {
                const auto sigma = parse_rational(sigma_text);
                if (!sigma || *sigma < Rational(0) || *sigma > Rational(1))
                    return usage_fail("--sigma wants a value in [0,1], got '" + sigma_text + "'");
                model = make_amdahl_model(*sigma, SigmaSource::user_supplied);
            }
            out << render_amdahl(amdahl_curve(model, p_max), format);
            return 0;
        }
        if (reconcile_cmd->parsed()) {
            const auto g = load_graph();
            if (!g)
                return 1;
            out << render_reconciliation(reconcile(*g, p_max), format);
            return 0;
        }
        if (bounds_cmd->parsed()) {
            const auto g = load_graph();
            if (!g)
                return 1;
            const auto rows = load_measurements();
            if (!rows)
                return 1;
            const SpeedupSeries series = make_series(*rows, total_work(*g), SeriesSource::measured);
            out << render_bounds(check_bounds(*g, series), format);
            return 0;
        }
        if (superlinear_cmd->parsed()) {
            std::optional<Rational> baseline;
            if (!t1_text.empty()) {
                const auto t1 = parse_rational(t1_text);
                if (!t1 || !t1->is_positive())
                    return usage_fail("--t1 wants a positive time, got '" + t1_text + "'");
                baseline = *t1;
            }
            const auto rows = load_measurements();
            if (!rows)
                return 1;
            out << render_superlinear(detect_superlinear(measured_series(*rows, baseline)), format);
            return 0;
        }
        if (fixture_cmd->parsed()) {
            if (fixture_name != "leiserson")
                return usage_fail("unknown fixture '" + fixture_name + "' (available: leiserson)");
            out << write_graph(fixture_leiserson());
            return 0;
        }
    } catch (const Error& e) {
        return fail(e.what());
    } catch (const std::exception& e) {
        return fail(e.what());
    }
    return usage_fail("no subcommand given");
}

} // namespace workspan
