#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <queue>
#include <set>
#include <vector>

#include "workspan/metrics.hpp"
#include "workspan/task_graph.hpp"

namespace workspan {

enum class Tiebreak { critical_path_priority, id_order };

inline const char* tiebreak_name(Tiebreak t) {
    return t == Tiebreak::critical_path_priority ? "critical_path_priority" : "id_order";
}

struct ScheduledTask {
    NodeId node;
    Rational start;
    Rational finish;
};

struct ScheduleResult {
    std::int64_t p = 1;
    Rational makespan;
    /// One lane per processor that can ever receive work (min(p, node count));
    /// lanes are filled lowest index first.
    std::vector<std::vector<ScheduledTask>> timeline;
    Tiebreak tiebreak_policy = Tiebreak::critical_path_priority;
};

/// Work-conserving list scheduling: whenever a processor idles and ready
/// tasks exist, the highest-priority ready task starts. Priorities are
/// static. critical_path_priority = larger remaining span first, id_order =
/// smaller id first; both tie on the smaller id, so runs are deterministic.
inline ScheduleResult greedy_schedule(const TaskGraph& g, std::int64_t p,
                                      Tiebreak policy = Tiebreak::critical_path_priority) {
    if (p < 1)
        throw std::invalid_argument("greedy_schedule: processor count must be >= 1");
    const std::size_t n = g.node_count();
    const std::size_t lanes = static_cast<std::size_t>(
        std::min<std::int64_t>(p, static_cast<std::int64_t>(n)));

    // Node indices are id ranks, so (span desc, index asc) and plain index
    // order both break ties lexicographically.
    std::vector<Rational> span;
    if (policy == Tiebreak::critical_path_priority)
        span = remaining_spans(g);
    const auto ready_before = [&](std::size_t a, std::size_t b) {
        if (policy == Tiebreak::critical_path_priority) {
            if (span[a] != span[b])
                return span[b] < span[a];
        }
        return a < b;
    };

    std::set<std::size_t, decltype(ready_before)> ready(ready_before);
    std::vector<std::size_t> missing(n);
    for (std::size_t v = 0; v < n; ++v) {
        missing[v] = g.predecessors(v).size();
        if (missing[v] == 0)
            ready.insert(v);
    }

    struct Running {
        Rational finish;
        std::size_t node;
        std::size_t lane;
        bool operator>(const Running& o) const {
            if (finish != o.finish)
                return o.finish < finish;
            return node > o.node;
        }
    };
    std::priority_queue<Running, std::vector<Running>, std::greater<>> running;
    std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> idle;
    for (std::size_t lane = 0; lane < lanes; ++lane)
        idle.push(lane);

    ScheduleResult result;
    result.p = p;
    result.tiebreak_policy = policy;
    result.timeline.resize(lanes);

    Rational now;
    std::size_t done = 0;
    while (done < n) {
        while (!idle.empty() && !ready.empty()) {
            const std::size_t v = *ready.begin();
            ready.erase(ready.begin());
            const std::size_t lane = idle.top();
            idle.pop();
            const Rational finish = now + g.weight(v);
            result.timeline[lane].push_back({g.id_of(v), now, finish});
            running.push({finish, v, lane});
        }
        now = running.top().finish;
        while (!running.empty() && running.top().finish == now) {
            const Running r = running.top();
            running.pop();
            idle.push(r.lane);
            ++done;
            for (std::size_t s : g.successors(r.node))
                if (--missing[s] == 0)
                    ready.insert(s);
        }
        result.makespan = max(result.makespan, now);
    }
    return result;
}

enum class SeriesSource { simulated, measured };

inline const char* series_source_name(SeriesSource s) {
    return s == SeriesSource::simulated ? "simulated" : "measured";
}

struct SeriesRow {
    std::int64_t p = 0;
    Rational t_p;
    Rational s_p;
    Rational e_p;
};

struct SpeedupSeries {
    std::vector<SeriesRow> rows;
    Rational baseline_t1;
    SeriesSource source = SeriesSource::simulated;
};

inline SpeedupSeries make_series(const std::vector<std::pair<std::int64_t, Rational>>& timings,
                                 const Rational& baseline_t1, SeriesSource source) {
    if (timings.empty())
        throw std::invalid_argument("speedup series needs at least one row");
    SpeedupSeries series;
    series.baseline_t1 = baseline_t1;
    series.source = source;
    std::int64_t prev = 0;
    for (const auto& [p, t_p] : timings) {
        if (p < 1)
            throw std::invalid_argument("speedup series: processor counts must be >= 1");
        if (p <= prev)
            throw std::invalid_argument("speedup series: processor counts must be strictly increasing");
        prev = p;
        SeriesRow row;
        row.p = p;
        row.t_p = t_p;
        row.s_p = speedup(baseline_t1, t_p);
        row.e_p = efficiency(row.s_p, p);
        series.rows.push_back(row);
    }
    return series;
}

inline SpeedupSeries speedup_series(const TaskGraph& g, const std::vector<std::int64_t>& ps,
                                    Tiebreak policy = Tiebreak::critical_path_priority) {
    std::vector<std::pair<std::int64_t, Rational>> timings;
    timings.reserve(ps.size());
    for (std::int64_t p : ps)
        timings.emplace_back(p, greedy_schedule(g, p, policy).makespan);
    return make_series(timings, total_work(g), SeriesSource::simulated);
}

struct BoundRow {
    std::int64_t p = 0;
    Rational t_p;
    Rational linear_lower; // T1/p
    Rational span_lower;   // Tinf
    bool satisfied = false;
    Rational slack; // t_p - max(linear_lower, span_lower)
};

struct BoundReport {
    std::vector<BoundRow> rows;
};

/// Exact check of both lower bounds against a series; T1 and Tinf come from
/// the graph, not the series baseline. A violated row marks a measurement or
/// model mismatch rather than an error.
inline BoundReport check_bounds(const TaskGraph& g, const SpeedupSeries& series) {
    const Rational t1 = total_work(g);
    const Rational t_inf = critical_path(g).span;
    BoundReport report;
    for (const SeriesRow& in : series.rows) {
        if (!in.t_p.is_positive())
            throw Error(Errc::nonpositive_time,
                        "measured T_p must be positive, got " + in.t_p.to_string());
        BoundRow row;
        row.p = in.p;
        row.t_p = in.t_p;
        row.linear_lower = t1 / Rational(in.p);
        row.span_lower = t_inf;
        const Rational lower = max(row.linear_lower, row.span_lower);
        row.satisfied = in.t_p >= lower;
        row.slack = in.t_p - lower;
        report.rows.push_back(row);
    }
    return report;
}

inline constexpr std::size_t kOptimalSearchMaxNodes = 12;

namespace detail {

struct OptimalSearch {
    const TaskGraph& g;
    std::int64_t p;
    std::vector<Rational> tail_span; // heaviest path from node, self included
    std::optional<Rational> best;

    struct Running {
        std::size_t node;
        Rational finish;
    };

    Rational lower_bound(const Rational& now, std::uint32_t unstarted,
                         const std::vector<Running>& running) const {
        Rational path;
        Rational work;
        for (std::size_t v = 0; v < g.node_count(); ++v)
            if (unstarted & (1u << v)) {
                path = max(path, tail_span[v]);
                work += g.weight(v);
            }
        for (const Running& r : running) {
            const Rational remain = r.finish - now;
            work += remain;
            path = max(path, remain + tail_span[r.node] - g.weight(r.node));
        }
        return now + max(path, work / Rational(p));
    }

    void search(const Rational& now, std::uint32_t started, std::uint32_t done,
                const std::vector<Running>& running) {
        const std::uint32_t all = (1u << g.node_count()) - 1;
        if (done == all) {
            if (!best || now < *best)
                best = now;
            return;
        }
        if (best && lower_bound(now, all & ~started, running) >= *best)
            return;

        std::vector<std::size_t> ready;
        for (std::size_t v = 0; v < g.node_count(); ++v) {
            if (started & (1u << v))
                continue;
            bool ok = true;
            for (std::size_t u : g.predecessors(v))
                ok = ok && (done & (1u << u));
            if (ok)
                ready.push_back(v);
        }

        const std::size_t idle = static_cast<std::size_t>(p) - running.size();
        const std::size_t k = std::min(idle, ready.size());

        // Subsets of the ready set, biggest first so the first descent plays
        // greedy and seeds the bound; smaller subsets model deliberate idling.
        std::vector<std::uint32_t> choices;
        for (std::uint32_t m = 0; m < (1u << ready.size()); ++m)
            if (static_cast<std::size_t>(std::popcount(m)) <= k)
                choices.push_back(m);
        std::stable_sort(choices.begin(), choices.end(),
                         [](std::uint32_t a, std::uint32_t b) {
                             return std::popcount(a) > std::popcount(b);
                         });

        for (std::uint32_t choice : choices) {
            std::vector<Running> next = running;
            std::uint32_t next_started = started;
            for (std::size_t j = 0; j < ready.size(); ++j)
                if (choice & (1u << j)) {
                    next.push_back({ready[j], now + g.weight(ready[j])});
                    next_started |= 1u << ready[j];
                }
            if (next.empty())
                continue; // nothing runs, time cannot advance
            Rational t = next.front().finish;
            for (const Running& r : next)
                t = min(t, r.finish);
            std::uint32_t next_done = done;
            std::vector<Running> still;
            for (const Running& r : next) {
                if (r.finish == t)
                    next_done |= 1u << r.node;
                else
                    still.push_back(r);
            }
            search(t, next_started, next_done, still);
        }
    }
};

} // namespace detail

/// Minimum feasible makespan over every precedence-respecting p-processor
/// schedule, by exhaustive search over start decisions at completion events.
/// Intended as a small-instance oracle; graphs beyond kOptimalSearchMaxNodes
/// nodes are rejected.
inline Rational optimal_makespan(const TaskGraph& g, std::int64_t p) {
    if (p < 1)
        throw std::invalid_argument("optimal_makespan: processor count must be >= 1");
    if (g.node_count() > kOptimalSearchMaxNodes)
        throw Error(Errc::graph_too_large,
                    "optimal_makespan is exhaustive and capped at " +
                        std::to_string(kOptimalSearchMaxNodes) + " nodes, got " +
                        std::to_string(g.node_count()));
    detail::OptimalSearch s{g, p, remaining_spans(g), std::nullopt};
    s.search(Rational(0), 0, 0, {});
    return *s.best;
}

} // namespace workspan
