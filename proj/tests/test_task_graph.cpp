#include "test_support.hpp"

using namespace workspan;
using testsupport::oracle_reaches;
using testsupport::random_dag;

namespace {

TaskGraph chain3() {
    return build_graph({{"a", Rational(1)}, {"b", Rational(1)}, {"c", Rational(1)}},
                       {{"a", "b"}, {"b", "c"}});
}

Errc code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return Errc::syntax_error;
}

} // namespace

TEST_CASE("build accepts the smallest legal graph") {
    const TaskGraph g = build_graph({{"a", Rational(1)}}, {});
    REQUIRE(g.node_count() == 1);
    REQUIRE(g.ids().front() == "a");
}

TEST_CASE("build validation errors") {
    REQUIRE(code_of([] { build_graph({}, {}); }) == Errc::empty_graph);
    REQUIRE(code_of([] {
                build_graph({{"a", Rational(1)}, {"a", Rational(2)}}, {});
            }) == Errc::duplicate_node);
    REQUIRE(code_of([] { build_graph({{"a", Rational(0)}}, {}); }) ==
            Errc::nonpositive_weight);
    REQUIRE(code_of([] { build_graph({{"a", Rational(-1, 2)}}, {}); }) ==
            Errc::nonpositive_weight);
    REQUIRE(code_of([] { build_graph({{"a b", Rational(1)}}, {}); }) ==
            Errc::invalid_node_id);
    REQUIRE(code_of([] { build_graph({{"", Rational(1)}}, {}); }) ==
            Errc::invalid_node_id);
    REQUIRE(code_of([] {
                build_graph({{"a", Rational(1)}}, {{"a", "z"}});
            }) == Errc::unknown_endpoint);
    REQUIRE(code_of([] {
                build_graph({{"a", Rational(1)}}, {{"a", "a"}});
            }) == Errc::self_edge);
    REQUIRE(code_of([] {
                build_graph({{"a", Rational(1)}, {"b", Rational(1)}},
                            {{"a", "b"}, {"a", "b"}});
            }) == Errc::duplicate_edge);
}

TEST_CASE("two-node cycle is rejected with a witness") {
    try {
        build_graph({{"a", Rational(1)}, {"b", Rational(1)}}, {{"a", "b"}, {"b", "a"}});
        FAIL("cycle not detected");
    } catch (const Error& e) {
        REQUIRE(e.code() == Errc::cycle_detected);
        REQUIRE(e.cycle() == std::vector<NodeId>{"a", "b"});
        REQUIRE(std::string(e.what()).find("a -> b -> a") != std::string::npos);
    }
}

TEST_CASE("longer cycle witness is rotated to the smallest id") {
    try {
        build_graph({{"x", Rational(1)}, {"m", Rational(1)}, {"q", Rational(1)}},
                    {{"x", "m"}, {"m", "q"}, {"q", "x"}});
        FAIL("cycle not detected");
    } catch (const Error& e) {
        REQUIRE(e.cycle() == std::vector<NodeId>{"m", "q", "x"});
    }
}

TEST_CASE("topological order is forced by edges and broken by id") {
    REQUIRE(topological_order(chain3()) == std::vector<NodeId>{"a", "b", "c"});

    const TaskGraph isolated = build_graph(
        {{"c", Rational(1)}, {"a", Rational(1)}, {"b", Rational(1)}}, {});
    REQUIRE(topological_order(isolated) == std::vector<NodeId>{"a", "b", "c"});

    const auto order = topological_order(fixture_leiserson());
    REQUIRE(order.size() == 18);
    REQUIRE(order.front() == "a");
    REQUIRE(order.back() == "i");
}

TEST_CASE("node insertion order does not change the graph") {
    const std::vector<std::pair<NodeId, Rational>> fwd = {
        {"a", Rational(1)}, {"b", Rational(2)}, {"c", Rational(3)}};
    const std::vector<std::pair<NodeId, Rational>> rev(fwd.rbegin(), fwd.rend());
    const std::vector<std::pair<NodeId, NodeId>> e1 = {{"a", "b"}, {"b", "c"}};
    const std::vector<std::pair<NodeId, NodeId>> e2 = {{"b", "c"}, {"a", "b"}};
    REQUIRE(build_graph(fwd, e1) == build_graph(rev, e2));
    REQUIRE(topological_order(build_graph(fwd, e1)) ==
            topological_order(build_graph(rev, e2)));
}

TEST_CASE("compare classifies node pairs") {
    const TaskGraph g = chain3();
    REQUIRE(compare(g, "a", "c") == Comparability::precedes);
    REQUIRE(compare(g, "c", "a") == Comparability::succeeds);
    REQUIRE(compare(g, "a", "a") == Comparability::same);

    const TaskGraph isolated =
        build_graph({{"a", Rational(1)}, {"b", Rational(1)}}, {});
    REQUIRE(compare(isolated, "a", "b") == Comparability::incomparable);

    REQUIRE(compare(fixture_leiserson(), "h", "g2") == Comparability::incomparable);
    REQUIRE_THROWS_AS(compare(g, "a", "nope"), Error);
}

TEST_CASE("compare agrees with DFS reachability on random DAGs") {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 40; ++trial) {
        const TaskGraph g = random_dag(rng, 14, trial % 2 == 0);
        for (std::size_t u = 0; u < g.node_count(); ++u)
            for (std::size_t v = 0; v < g.node_count(); ++v) {
                const Comparability c = compare(g, g.id_of(u), g.id_of(v));
                if (u == v) {
                    REQUIRE(c == Comparability::same);
                } else if (oracle_reaches(g, u, v)) {
                    REQUIRE(c == Comparability::precedes);
                    REQUIRE(compare(g, g.id_of(v), g.id_of(u)) == Comparability::succeeds);
                } else if (!oracle_reaches(g, v, u)) {
                    REQUIRE(c == Comparability::incomparable);
                }
            }
    }
}

TEST_CASE("precedes is transitive") {
    std::mt19937_64 rng(151);
    for (int trial = 0; trial < 12; ++trial) {
        const TaskGraph g = random_dag(rng, 12, true);
        const std::size_t n = g.node_count();
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = 0; v < n; ++v)
                for (std::size_t w = 0; w < n; ++w)
                    if (g.reaches(u, v) && g.reaches(v, w))
                        REQUIRE(compare(g, g.id_of(u), g.id_of(w)) ==
                                Comparability::precedes);
    }
}

TEST_CASE("serial nodes: degenerate cases and the 18-task fixture") {
    REQUIRE(is_serial_node(build_graph({{"a", Rational(1)}}, {}), "a"));

    const TaskGraph isolated =
        build_graph({{"a", Rational(1)}, {"b", Rational(1)}}, {});
    REQUIRE_FALSE(is_serial_node(isolated, "a"));
    REQUIRE_FALSE(is_serial_node(isolated, "b"));

    REQUIRE(serial_nodes(fixture_leiserson()) ==
            std::vector<NodeId>{"a", "b", "c", "i"});
}

TEST_CASE("serial nodes are pairwise comparable on random DAGs") {
    std::mt19937_64 rng(202);
    for (int trial = 0; trial < 60; ++trial) {
        const TaskGraph g = random_dag(rng, 16, trial % 2 == 0);
        const std::vector<NodeId> serial = serial_nodes(g);
        for (const NodeId& u : serial)
            for (const NodeId& v : serial)
                if (u != v)
                    REQUIRE(compare(g, u, v) != Comparability::incomparable);
    }
}

TEST_CASE("strip_edges flattens, idempotently, preserving weight") {
    const TaskGraph flat = strip_edges(chain3());
    REQUIRE(flat.edges().empty());
    REQUIRE(flat.node_count() == 3);
    REQUIRE(strip_edges(flat) == flat);

    std::mt19937_64 rng(303);
    for (int trial = 0; trial < 30; ++trial) {
        const TaskGraph g = random_dag(rng, 20, false);
        const TaskGraph s = strip_edges(g);
        REQUIRE(total_work(s) == total_work(g));
        REQUIRE(strip_edges(s) == s);
    }
}

TEST_CASE("topological order is a permutation respecting every edge") {
    std::mt19937_64 rng(404);
    for (int trial = 0; trial < 40; ++trial) {
        const TaskGraph g = random_dag(rng, 25, true);
        const std::vector<NodeId> order = topological_order(g);
        REQUIRE(order.size() == g.node_count());
        std::map<NodeId, std::size_t> pos;
        for (std::size_t k = 0; k < order.size(); ++k)
            REQUIRE(pos.emplace(order[k], k).second);
        for (const auto& [u, v] : g.edges())
            REQUIRE(pos[g.id_of(u)] < pos[g.id_of(v)]);
    }
}
