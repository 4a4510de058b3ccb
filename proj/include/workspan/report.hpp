#pragma once

#include <vector>

#include "workspan/amdahl.hpp"
#include "workspan/metrics.hpp"
#include "workspan/task_graph.hpp"

namespace workspan {

/// Everything `analyze` prints for one graph.
struct MetricsReport {
    Rational t1;
    Rational t_inf;
    Rational work_w;
    Rational total_time_t;
    Rational avg_parallelism;
    Rational parallelism;
    Rational serial_fraction;
    std::vector<NodeId> serial_nodes;
    bool uniform_row_weights = true;
};

inline MetricsReport make_metrics_report(const TaskGraph& g) {
    MetricsReport r;
    r.t1 = total_work(g);
    r.t_inf = critical_path(g).span;
    const LevelProfile profile = level_profile(g);
    const ProfileWork pw = work_from_profile(profile);
    r.work_w = pw.work;
    r.total_time_t = pw.time;
    r.avg_parallelism = pw.work / pw.time;
    r.parallelism = r.t1 / r.t_inf;
    r.serial_nodes = serial_nodes(g);
    Rational serial_weight;
    for (const NodeId& id : r.serial_nodes)
        serial_weight += g.weight(g.index_of(id));
    r.serial_fraction = serial_weight / r.t1;
    r.uniform_row_weights = profile.uniform_weights;
    return r;
}

} // namespace workspan
