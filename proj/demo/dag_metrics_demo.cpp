// Builds a small task graph in code and walks the whole metric surface:
// work/span, level profile, Amdahl model, simulated speedups.
#include <iostream>

#include "workspan/workspan.hpp"

int main() {
    using namespace workspan;

    const TaskGraph g = build_graph(
        {
            {"load", Rational(2)},
            {"split", Rational(1)},
            {"shard0", Rational(3)},
            {"shard1", Rational(3)},
            {"merge", Rational(1)},
        },
        {
            {"load", "split"},
            {"split", "shard0"},
            {"split", "shard1"},
            {"shard0", "merge"},
            {"shard1", "merge"},
        });

    std::cout << "graph:\n" << write_graph(g) << "\n";
    std::cout << render_metrics(make_metrics_report(g), Format::table) << "\n";

    const CriticalPathReport cp = critical_path(g);
    std::cout << "critical path:";
    for (const NodeId& id : cp.path)
        std::cout << " " << id;
    std::cout << " (span " << cp.span.to_string() << ")\n\n";

    std::cout << render_series(speedup_series(g, {1, 2, 4}), Format::table) << "\n";
    std::cout << render_amdahl(amdahl_curve(serial_fraction(g), 8), Format::table);
    return 0;
}
