#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "workspan/task_graph.hpp"

namespace workspan {

/// Witness paths beyond this many are reported as "many".
inline constexpr std::int64_t kPathCountCap = 1000;

struct CriticalPathReport {
    Rational span;
    std::vector<NodeId> path;
    /// Number of distinct maximum-weight paths, or nullopt when more than
    /// kPathCountCap exist.
    std::optional<std::int64_t> path_count;
};

struct LevelRow {
    int index = 0; // 1-based
    std::vector<NodeId> nodes;
    std::size_t width = 0;
    Rational row_time;
};

/// Horizontal decomposition by earliest start: sources sit in row 1, every
/// other node one row below its deepest predecessor.
struct LevelProfile {
    std::vector<LevelRow> rows;
    /// True when each row carries a single shared node weight. Only then is
    /// the W/T identity with T1/Tinf guaranteed.
    bool uniform_weights = true;
};

struct ProfileWork {
    Rational work; // W = sum of row_time * width
    Rational time; // T = sum of row_time
};

inline Rational total_work(const TaskGraph& g) {
    Rational sum;
    for (const Rational& w : g.weights())
        sum += w;
    return sum;
}

/// Heaviest path weight starting at each node, the node itself included.
inline std::vector<Rational> remaining_spans(const TaskGraph& g) {
    std::vector<Rational> span(g.node_count());
    const auto& topo = g.topo_indices();
    for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
        const std::size_t v = *it;
        Rational best;
        for (std::size_t s : g.successors(v))
            best = max(best, span[s]);
        span[v] = g.weight(v) + best;
    }
    return span;
}

inline CriticalPathReport critical_path(const TaskGraph& g) {
    const std::vector<Rational> span = remaining_spans(g);
    const std::size_t n = g.node_count();

    std::size_t start = 0;
    for (std::size_t v = 1; v < n; ++v)
        if (span[v] > span[start])
            start = v;

    CriticalPathReport report;
    report.span = span[start];

    // Walk the witness: always the successor with the larger remaining span,
    // ties to the smaller id (successor lists are in id order already).
    std::size_t v = start;
    report.path.push_back(g.id_of(v));
    while (!g.successors(v).empty()) {
        std::size_t next = g.successors(v).front();
        for (std::size_t s : g.successors(v))
            if (span[s] > span[next])
                next = s;
        v = next;
        report.path.push_back(g.id_of(v));
    }

    // Count maximum-weight paths with saturation at the cap.
    const std::int64_t sat = kPathCountCap + 1;
    std::vector<std::int64_t> count(n, 0);
    const auto& topo = g.topo_indices();
    for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
        const std::size_t u = *it;
        if (g.successors(u).empty()) {
            count[u] = 1;
            continue;
        }
        std::int64_t c = 0;
        for (std::size_t s : g.successors(u))
            if (g.weight(u) + span[s] == span[u])
                c = std::min<std::int64_t>(sat, c + count[s]);
        count[u] = c;
    }
    std::int64_t total = 0;
    for (std::size_t u = 0; u < n; ++u)
        if (g.predecessors(u).empty() && span[u] == report.span)
            total = std::min<std::int64_t>(sat, total + count[u]);
    if (total <= kPathCountCap)
        report.path_count = total;
    return report;
}

inline LevelProfile level_profile(const TaskGraph& g) {
    const std::size_t n = g.node_count();
    std::vector<int> level(n, 1);
    for (std::size_t v : g.topo_indices())
        for (std::size_t u : g.predecessors(v))
            level[v] = std::max(level[v], level[u] + 1);

    int depth = 0;
    for (std::size_t v = 0; v < n; ++v)
        depth = std::max(depth, level[v]);

    LevelProfile profile;
    profile.rows.resize(depth);
    for (int i = 0; i < depth; ++i)
        profile.rows[i].index = i + 1;
    for (std::size_t v = 0; v < n; ++v)
        profile.rows[level[v] - 1].nodes.push_back(g.id_of(v));

    for (LevelRow& row : profile.rows) {
        row.width = row.nodes.size();
        Rational row_max = g.weight(g.index_of(row.nodes.front()));
        bool uniform = true;
        for (const NodeId& id : row.nodes) {
            const Rational& w = g.weight(g.index_of(id));
            if (w != row_max) {
                uniform = false;
                row_max = max(row_max, w);
            }
        }
        row.row_time = row_max;
        profile.uniform_weights = profile.uniform_weights && uniform;
    }
    return profile;
}

inline ProfileWork work_from_profile(const LevelProfile& profile) {
    ProfileWork out;
    for (const LevelRow& row : profile.rows) {
        out.work += row.row_time * Rational(static_cast<std::int64_t>(row.width));
        out.time += row.row_time;
    }
    return out;
}

/// A = W/T over the level profile.
inline Rational average_parallelism(const TaskGraph& g) {
    const ProfileWork pw = work_from_profile(level_profile(g));
    return pw.work / pw.time;
}

/// S_inf = T1/Tinf, the maximum speedup the DAG admits.
inline Rational parallelism(const TaskGraph& g) {
    return total_work(g) / critical_path(g).span;
}

inline Rational speedup(const Rational& t1, const Rational& tp) {
    if (!tp.is_positive())
        throw Error(Errc::nonpositive_time,
                    "speedup needs a positive T_p, got " + tp.to_string());
    return t1 / tp;
}

inline Rational efficiency(const Rational& sp, std::int64_t p) {
    if (p < 1)
        throw std::invalid_argument("efficiency: processor count must be >= 1");
    return sp / Rational(p);
}

} // namespace workspan
