#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "workspan/scheduler.hpp"
#include "workspan/task_graph.hpp"

namespace workspan {

namespace detail {

inline std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string current;
    for (char c : text) {
        if (c == '\n') {
            if (!current.empty() && current.back() == '\r')
                current.pop_back();
            lines.push_back(current);
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    if (!current.empty() && current.back() == '\r')
        current.pop_back();
    if (!current.empty())
        lines.push_back(current);
    return lines;
}

inline std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok)
        tokens.push_back(tok);
    return tokens;
}

} // namespace detail

/// Line format:
///   # comment
///   node <id> [<weight>]      weight defaults to 1
///   edge <src> <dst>
/// Ids are [A-Za-z0-9_]+ tokens; weights are decimals ("0.5") or fractions
/// ("2/9"). Errors carry the 1-based line they were found on.
inline TaskGraph parse_graph(const std::string& text) {
    std::vector<std::pair<NodeId, Rational>> nodes;
    std::vector<std::pair<NodeId, NodeId>> edges;
    std::map<NodeId, int> node_line;
    std::map<std::pair<NodeId, NodeId>, int> edge_line;

    const std::vector<std::string> lines = detail::split_lines(text);
    for (std::size_t k = 0; k < lines.size(); ++k) {
        const int line = static_cast<int>(k) + 1;
        const std::vector<std::string> tok = detail::tokenize(lines[k]);
        if (tok.empty() || tok.front().front() == '#')
            continue;
        if (tok[0] == "node") {
            if (tok.size() < 2 || tok.size() > 3)
                throw Error(Errc::syntax_error, "expected: node <id> [<weight>]", line);
            if (!valid_node_id(tok[1]))
                throw Error(Errc::invalid_node_id,
                            "node id '" + tok[1] + "' is not a [A-Za-z0-9_]+ token", line);
            Rational weight(1);
            if (tok.size() == 3) {
                const auto parsed = parse_rational(tok[2]);
                if (!parsed)
                    throw Error(Errc::syntax_error, "bad weight '" + tok[2] + "'", line);
                if (!parsed->is_positive())
                    throw Error(Errc::nonpositive_weight,
                                "node '" + tok[1] + "' has nonpositive weight " +
                                    parsed->to_string(),
                                line);
                weight = *parsed;
            }
            if (!node_line.emplace(tok[1], line).second)
                throw Error(Errc::duplicate_node,
                            "duplicate node '" + tok[1] + "' (first on line " +
                                std::to_string(node_line[tok[1]]) + ")",
                            line);
            nodes.emplace_back(tok[1], weight);
        } else if (tok[0] == "edge") {
            if (tok.size() != 3)
                throw Error(Errc::syntax_error, "expected: edge <src> <dst>", line);
            const NodeId& from = tok[1];
            const NodeId& to = tok[2];
            if (!node_line.count(from))
                throw Error(Errc::unknown_endpoint,
                            "edge endpoint '" + from + "' is not a node", line);
            if (!node_line.count(to))
                throw Error(Errc::unknown_endpoint,
                            "edge endpoint '" + to + "' is not a node", line);
            if (from == to)
                throw Error(Errc::self_edge, "self edge on '" + from + "'", line);
            if (!edge_line.emplace(std::make_pair(from, to), line).second)
                throw Error(Errc::duplicate_edge,
                            "duplicate edge '" + from + " -> " + to + "'", line);
            edges.emplace_back(from, to);
        } else {
            throw Error(Errc::syntax_error, "unknown directive '" + tok[0] + "'", line);
        }
    }

    try {
        return build_graph(nodes, edges);
    } catch (const Error& e) {
        if (e.code() == Errc::cycle_detected) {
            // Point at the last edge that takes part in the witness cycle.
            int worst = 0;
            const auto& cycle = e.cycle();
            for (std::size_t i = 0; i < cycle.size(); ++i) {
                const NodeId& from = cycle[i];
                const NodeId& to = cycle[(i + 1) % cycle.size()];
                const auto it = edge_line.find(std::make_pair(from, to));
                if (it != edge_line.end())
                    worst = std::max(worst, it->second);
            }
            throw e.at_line(worst);
        }
        throw;
    }
}

/// Canonical text: nodes in id order with explicit weights, then edges in
/// (src, dst) order. parse_graph(write_graph(g)) == g, byte for byte stable.
inline std::string write_graph(const TaskGraph& g) {
    std::string out;
    for (std::size_t v = 0; v < g.node_count(); ++v)
        out += "node " + g.id_of(v) + " " + g.weight(v).to_weight_text() + "\n";
    for (const auto& [u, v] : g.edges())
        out += "edge " + g.id_of(u) + " " + g.id_of(v) + "\n";
    return out;
}

/// The 18-task demonstration graph: unit weights, span 9, level widths
/// (1,1,1,3,4,4,2,1,1), serial tasks {a, b, c, i}.
inline TaskGraph fixture_leiserson() {
    std::vector<std::pair<NodeId, Rational>> nodes;
    for (const char* id : {"a", "b", "c", "d1", "d2", "d3", "e1", "e2", "e3", "e4",
                           "f1", "f2", "f3", "f4", "g1", "g2", "h", "i"})
        nodes.emplace_back(id, Rational(1));
    const std::vector<std::pair<NodeId, NodeId>> edges = {
        {"a", "b"},   {"b", "c"},   {"c", "d1"},  {"c", "d2"},  {"c", "d3"},
        {"d1", "e1"}, {"d1", "e2"}, {"d2", "e3"}, {"d3", "e4"}, {"e1", "f1"},
        {"e2", "f2"}, {"e3", "f3"}, {"e4", "f4"}, {"f1", "g1"}, {"f2", "g1"},
        {"f3", "g2"}, {"f4", "g2"}, {"g1", "h"},  {"h", "i"},   {"g2", "i"},
    };
    return build_graph(nodes, edges);
}

/// Measurement CSV: header "p,t_p", then one "<int>,<time>" row per
/// processor count, strictly increasing p, positive times.
inline std::vector<std::pair<std::int64_t, Rational>> parse_measurements(const std::string& text) {
    const std::vector<std::string> lines = detail::split_lines(text);
    std::vector<std::pair<std::int64_t, Rational>> rows;
    bool saw_header = false;
    std::int64_t prev_p = 0;
    for (std::size_t k = 0; k < lines.size(); ++k) {
        const int line = static_cast<int>(k) + 1;
        std::string s = lines[k];
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
            s.pop_back();
        std::size_t first = 0;
        while (first < s.size() && (s[first] == ' ' || s[first] == '\t'))
            ++first;
        s = s.substr(first);
        if (s.empty() || s.front() == '#')
            continue;
        if (!saw_header) {
            if (s != "p,t_p")
                throw Error(Errc::syntax_error, "expected header 'p,t_p', got '" + s + "'", line);
            saw_header = true;
            continue;
        }
        const std::size_t comma = s.find(',');
        if (comma == std::string::npos)
            throw Error(Errc::syntax_error, "expected '<p>,<t_p>', got '" + s + "'", line);
        const auto p = parse_rational(s.substr(0, comma));
        const auto t = parse_rational(s.substr(comma + 1));
        if (!p || !p->is_integer() || !t)
            throw Error(Errc::syntax_error, "expected '<p>,<t_p>', got '" + s + "'", line);
        if (p->num() < 1)
            throw Error(Errc::syntax_error,
                        "processor count must be >= 1, got " + p->to_string(), line);
        if (p->num() <= prev_p)
            throw Error(Errc::syntax_error,
                        "processor counts must be strictly increasing", line);
        if (!t->is_positive())
            throw Error(Errc::nonpositive_time,
                        "measured T_p must be positive, got " + t->to_string(), line);
        prev_p = p->num();
        rows.emplace_back(p->num(), *t);
    }
    if (!saw_header)
        throw Error(Errc::syntax_error, "missing 'p,t_p' header", 1);
    if (rows.empty())
        throw Error(Errc::syntax_error, "no measurement rows", 1);
    return rows;
}

/// Builds a measured series; without an explicit baseline the p = 1 row
/// supplies it.
inline SpeedupSeries measured_series(const std::vector<std::pair<std::int64_t, Rational>>& rows,
                                     std::optional<Rational> baseline_t1 = std::nullopt) {
    Rational baseline;
    if (baseline_t1) {
        if (!baseline_t1->is_positive())
            throw Error(Errc::nonpositive_time,
                        "baseline T1 must be positive, got " + baseline_t1->to_string());
        baseline = *baseline_t1;
    } else {
        bool found = false;
        for (const auto& [p, t] : rows)
            if (p == 1) {
                baseline = t;
                found = true;
            }
        if (!found)
            throw Error(Errc::syntax_error,
                        "no p = 1 row to take the baseline from; pass T1 explicitly");
    }
    return make_series(rows, baseline, SeriesSource::measured);
}

} // namespace workspan
